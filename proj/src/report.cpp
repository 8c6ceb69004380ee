#include "signpoly/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace signpoly {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct TextValue {
  std::string operator()(bool v) const { return v ? "true" : "false"; }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return format_double(v); }
  std::string operator()(const std::string& v) const { return v; }
  std::string operator()(const nlohmann::json& v) const { return v.dump(); }
};

struct JsonValue {
  nlohmann::ordered_json operator()(bool v) const { return v; }
  nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
  nlohmann::ordered_json operator()(double v) const { return v; }
  nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  nlohmann::ordered_json operator()(const nlohmann::json& v) const { return nlohmann::ordered_json::parse(v.dump()); }
};

}  // namespace

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command_;
  if (!headline_.empty()) j["headline"] = headline_;
  for (const auto& [key, value] : entries_) j[key] = std::visit(JsonValue{}, value);
  return j;
}

void Report::render(std::ostream& out, OutputFormat format) const {
  if (format == OutputFormat::Json) {
    out << to_json().dump(2) << '\n';
    return;
  }
  out << "command: " << command_ << '\n';
  if (!headline_.empty()) out << headline_ << '\n';
  for (const auto& [key, value] : entries_) out << key << ": " << std::visit(TextValue{}, value) << '\n';
}

nlohmann::ordered_json parse_text_report(const std::string& text) {
  nlohmann::ordered_json j;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(": ");
    if (colon == std::string::npos) {
      if (!line.empty()) j["headline"] = line;
      continue;
    }
    const std::string key = line.substr(0, colon);
    const std::string raw = line.substr(colon + 2);
    auto parsed = nlohmann::ordered_json::parse(raw, nullptr, false);
    j[key] = parsed.is_discarded() ? nlohmann::ordered_json(raw) : parsed;
  }
  return j;
}

}  // namespace signpoly
