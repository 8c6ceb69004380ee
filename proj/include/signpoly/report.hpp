#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace signpoly {

enum class OutputFormat { Text, Json };

/// Ordered key/value report shared by every CLI command. Text mode prints
/// the headline followed by one "key: value" line per entry; JSON mode prints
/// one object with the same keys in the same order.
class Report {
 public:
  using Value = std::variant<bool, std::int64_t, double, std::string, nlohmann::json>;

  explicit Report(std::string command) : command_(std::move(command)) {}

  void set_headline(std::string line) { headline_ = std::move(line); }
  void add(std::string key, Value value) { entries_.emplace_back(std::move(key), std::move(value)); }

  const std::string& headline() const noexcept { return headline_; }
  const std::vector<std::pair<std::string, Value>>& entries() const noexcept { return entries_; }

  nlohmann::ordered_json to_json() const;
  void render(std::ostream& out, OutputFormat format) const;

 private:
  std::string command_;
  std::string headline_;
  std::vector<std::pair<std::string, Value>> entries_;
};

/// Parses text-mode output back into key/value JSON (the headline is kept
/// under "headline"). Values are read as JSON where possible, else strings.
nlohmann::ordered_json parse_text_report(const std::string& text);

}  // namespace signpoly
