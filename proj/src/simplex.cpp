#include "signpoly/simplex.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "signpoly/error.hpp"

namespace signpoly {

namespace {

// Tableau over columns [z (nz) | s⁺ (rows) | s⁻ (rows) | rhs].
class Phase1Tableau {
 public:
  Phase1Tableau(const DenseRows& a, std::span<const double> b)
      : rows_(a.size()), vars_(a.empty() ? 0 : a.front().size()), cols_(vars_ + 2 * rows_),
        t_(rows_, std::vector<double>(cols_ + 1, 0.0)), cost_(cols_ + 1, 0.0), basis_(rows_) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (a[i].size() != vars_) throw DimensionMismatch(vars_, a[i].size());
      const double flip = b[i] < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < vars_; ++j) t_[i][j] = flip * a[i][j];
      t_[i][vars_ + i] = flip;           // s⁺_i
      t_[i][vars_ + rows_ + i] = -flip;  // s⁻_i
      t_[i][cols_] = flip * b[i];
      // whichever slack now has coefficient +1 starts in the basis
      basis_[i] = flip > 0.0 ? vars_ + i : vars_ + rows_ + i;
    }
    // Reduced costs c_j − c_Bᵀ T_j with c = 1 on slacks, 0 on z.
    for (std::size_t j = vars_; j < cols_; ++j) cost_[j] = 1.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= t_[i][j];
    }
  }

  // Returns the number of pivots performed.
  std::size_t solve(const SimplexOptions& options) {
    const std::size_t cap =
        options.max_iterations != 0 ? options.max_iterations : 50 * (vars_ + rows_);
    std::size_t iterations = 0;
    for (;;) {
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (cost_[j] < -options.pivot_tol) {
          entering = j;
          break;
        }
      }
      if (entering == cols_) return iterations;
      if (iterations == cap) {
        throw SolverFailure("phase-1 simplex hit the iteration cap of " + std::to_string(cap));
      }

      std::size_t leaving = rows_;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows_; ++i) {
        const double coef = t_[i][entering];
        if (coef <= options.pivot_tol) continue;
        const double ratio = t_[i][cols_] / coef;
        if (ratio < best_ratio - 1e-15 ||
            (std::abs(ratio - best_ratio) <= 1e-15 && basis_[i] < basis_[leaving])) {
          best_ratio = ratio;
          leaving = i;
        }
      }
      // The objective is bounded below by zero, so an unbounded ray means the
      // reduced cost is numerical noise.
      if (leaving == rows_) return iterations;

      pivot(leaving, entering);
      ++iterations;
    }
  }

  std::vector<double> solution() const {
    std::vector<double> z(vars_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < vars_) z[basis_[i]] = std::max(0.0, t_[i][cols_]);
    }
    return z;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    auto& prow = t_[r];
    const double inv = 1.0 / prow[c];
    for (double& v : prow) v *= inv;
    prow[c] = 1.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double f = t_[i][c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * prow[j];
      t_[i][c] = 0.0;
    }
    const double f = cost_[c];
    for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= f * prow[j];
    cost_[c] = 0.0;
    basis_[r] = c;
  }

  std::size_t rows_;
  std::size_t vars_;
  std::size_t cols_;
  DenseRows t_;
  std::vector<double> cost_;
  std::vector<std::size_t> basis_;
};

}  // namespace

FeasibilityResult solve_feasibility(const DenseRows& a, std::span<const double> b, const SimplexOptions& options) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  if (a.empty()) throw InvalidInput("feasibility problem has no constraints");

  Phase1Tableau tableau(a, b);
  FeasibilityResult result;
  result.iterations = tableau.solve(options);
  result.solution = tableau.solution();

  double residual = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double row = -b[i];
    for (std::size_t j = 0; j < result.solution.size(); ++j) row += a[i][j] * result.solution[j];
    residual += std::abs(row);
  }
  result.residual_l1 = residual;
  result.feasible = residual <= options.tol;
  return result;
}

}  // namespace signpoly
