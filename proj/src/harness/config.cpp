#include "evo/harness/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "evo/core/errors.hpp"

namespace evo {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_number(std::string_view s, double& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

void ParamSet::set(std::string key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

bool ParamSet::contains(std::string_view key) const { return find(key).has_value(); }

const std::string& ParamSet::get(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  throw ConfigInvalid("missing parameter '" + std::string(key) + "'");
}

std::optional<std::string> ParamSet::find(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

bool ParamSet::erase(std::string_view key) {
  return std::erase_if(entries_, [&](const auto& e) { return e.first == key; }) > 0;
}

void ParamSet::merge(const ParamSet& overrides) {
  for (const auto& [k, v] : overrides.entries()) set(k, v);
}

double eval_param(std::string_view expr, const ParamVariables& vars) {
  const std::string_view whole = trim(expr);
  if (whole.empty()) throw ConfigInvalid("empty parameter value");
  double result = 1.0;
  std::string_view rest = whole;
  while (true) {
    const std::size_t star = rest.find('*');
    std::string_view factor = trim(rest.substr(0, star));
    double value = 0.0;
    bool percent = false;
    if (!factor.empty() && factor.back() == '%') {
      percent = true;
      factor = trim(factor.substr(0, factor.size() - 1));
    }
    if (parse_number(factor, value)) {
      if (percent) value /= 100.0;
    } else if (auto it = vars.find(factor); it != vars.end() && !percent) {
      value = it->second;
    } else {
      throw ConfigInvalid("cannot evaluate parameter value '" + std::string(whole) + "'");
    }
    result *= value;
    if (star == std::string_view::npos) break;
    rest = rest.substr(star + 1);
  }
  return result;
}

ParamSet* ConfigFile::section(std::string_view name) {
  for (auto& [n, p] : sections) {
    if (n == name) return &p;
  }
  return nullptr;
}

const ParamSet* ConfigFile::section(std::string_view name) const {
  for (const auto& [n, p] : sections) {
    if (n == name) return &p;
  }
  return nullptr;
}

ParamSet& ConfigFile::section_or_add(std::string_view name) {
  if (ParamSet* p = section(name)) return *p;
  sections.emplace_back(std::string(name), ParamSet{});
  return sections.back().second;
}

std::pair<std::string, std::string> parse_assignment(std::string_view text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigInvalid("expected key=value, got '" + std::string(text) + "'");
  }
  const std::string_view key = trim(text.substr(0, eq));
  if (key.empty()) throw ConfigInvalid("empty key in '" + std::string(text) + "'");
  return {std::string(key), std::string(trim(text.substr(eq + 1)))};
}

ConfigFile parse_config(std::string_view text) {
  ConfigFile file;
  ParamSet* current = nullptr;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigInvalid("line " + std::to_string(line_no) + ": unterminated section header");
      }
      current = &file.section_or_add(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    if (current == nullptr) current = &file.section_or_add("");
    try {
      auto [k, v] = parse_assignment(line);
      current->set(std::move(k), std::move(v));
    } catch (const ConfigInvalid& e) {
      throw ConfigInvalid("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return file;
}

std::string format_config(const ConfigFile& file) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, params] : file.sections) {
    if (!first) out << '\n';
    first = false;
    if (!name.empty()) out << '[' << name << "]\n";
    for (const auto& [k, v] : params.entries()) out << k << "=" << v << '\n';
  }
  return out.str();
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigInvalid("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace evo
