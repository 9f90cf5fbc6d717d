#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace evo {

/// Ordered key/value parameters. Values stay textual until resolved so that
/// expressions such as "10*dim" or "19%" survive a write/read round trip.
class ParamSet {
 public:
  void set(std::string key, std::string value);
  bool contains(std::string_view key) const;
  /// Throws ConfigInvalid when the key is missing.
  const std::string& get(std::string_view key) const;
  std::optional<std::string> find(std::string_view key) const;
  bool erase(std::string_view key);

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Applies every entry of `overrides` on top of this set.
  void merge(const ParamSet& overrides);

  friend bool operator==(const ParamSet&, const ParamSet&) = default;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

using ParamVariables = std::map<std::string, double, std::less<>>;

/// Evaluates a parameter expression: a product of factors joined by '*',
/// where each factor is a number, a number with a '%' suffix (divided by
/// 100), or a variable name from `vars`. Throws ConfigInvalid otherwise.
double eval_param(std::string_view expr, const ParamVariables& vars = {});

/// Flat key=value text grouped in "[section]" blocks. Lines starting with
/// '#' or ';' are comments. Keys outside any section go to section "".
struct ConfigFile {
  std::vector<std::pair<std::string, ParamSet>> sections;

  ParamSet* section(std::string_view name);
  const ParamSet* section(std::string_view name) const;
  ParamSet& section_or_add(std::string_view name);
};

ConfigFile parse_config(std::string_view text);
std::string format_config(const ConfigFile& file);
ConfigFile load_config(const std::string& path);

/// Parses "key=value"; throws ConfigInvalid without '=' or with an empty key.
std::pair<std::string, std::string> parse_assignment(std::string_view text);

}  // namespace evo
