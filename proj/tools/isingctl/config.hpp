#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>

namespace isingctl {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// INI-style experiment config: top-level keys plus one section per command.
/// Lookups fall back from the command section to the top level. Every value
/// read (including defaults) is remembered so the effective config can be
/// echoed next to the results.
class Config {
 public:
  Config() = default;
  static Config load(const std::string& path);
  static Config parse(std::istream& in);

  /// Scope lookups to a command section.
  void use_section(std::string section) { section_ = std::move(section); }
  const std::string& section() const noexcept { return section_; }

  std::string get_string(const std::string& key, const std::string& fallback);
  double get_double(const std::string& key, double fallback);
  long long get_int(const std::string& key, long long fallback);
  std::uint64_t get_seed(const std::string& key, std::uint64_t fallback);
  bool get_bool(const std::string& key, bool fallback);
  std::vector<double> get_doubles(const std::string& key, const std::vector<double>& fallback);
  std::vector<long long> get_ints(const std::string& key, const std::vector<long long>& fallback);
  bool has(const std::string& key) const;

  /// Keys present in the active section (or top level) that were never read.
  std::vector<std::string> unused_keys() const;

  /// Effective config as INI lines, each prefixed by `prefix`.
  void echo(std::ostream& out, const std::string& prefix = "# ") const;
  /// Effective config as key -> value text, top level first.
  std::vector<std::pair<std::string, std::string>> effective() const;

 private:
  const std::string* raw(const std::string& key) const;
  void record(const std::string& key, const std::string& value);

  boost::property_tree::ptree tree_;
  std::string section_;
  std::map<std::string, std::string> used_;
  std::vector<std::string> used_order_;
};

}  // namespace isingctl
