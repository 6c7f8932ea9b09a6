#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>

#include "ising/format.hpp"

namespace isingctl {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  // Empty items are kept so that "1,,2" fails to parse instead of reading as "1,2".
  std::vector<std::string> parts;
  const std::string all = trim(text);
  if (all.empty()) return parts;
  std::stringstream ss(all);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(trim(item));
  if (all.back() == ',') parts.emplace_back();
  return parts;
}

// "key = value  # note": a '#' or ';' after whitespace starts a comment.
void strip_inline_comments(boost::property_tree::ptree& tree) {
  for (auto& [key, child] : tree) {
    if (!child.empty()) {
      strip_inline_comments(child);
      continue;
    }
    std::string& v = child.data();
    for (std::size_t i = 1; i < v.size(); ++i) {
      if ((v[i] == '#' || v[i] == ';') && std::isspace(static_cast<unsigned char>(v[i - 1]))) {
        v = trim(v.substr(0, i));
        break;
      }
    }
  }
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("config key '" + key + "': cannot parse '" + text + "'");
  }
  return value;
}

// from_chars for double rejects a leading '+', and we also want inf / nan
// spelled the usual way, so doubles go through strtod.
double parse_double(const std::string& key, const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw ConfigError("config key '" + key + "': cannot parse '" + text + "'");
  }
  return v;
}

template <typename T, typename Format>
std::string join(const std::vector<T>& values, Format fmt) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += fmt(values[i]);
  }
  return out;
}

}  // namespace

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse(in);
}

Config Config::parse(std::istream& in) {
  Config c;
  try {
    boost::property_tree::ini_parser::read_ini(in, c.tree_);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  strip_inline_comments(c.tree_);
  return c;
}

const std::string* Config::raw(const std::string& key) const {
  if (!section_.empty()) {
    if (auto sec = tree_.get_child_optional(boost::property_tree::ptree::path_type(section_, '\0'))) {
      if (auto v = sec->get_child_optional(boost::property_tree::ptree::path_type(key, '\0'))) {
        if (v->empty()) return &v->data();
      }
    }
  }
  if (auto v = tree_.get_child_optional(boost::property_tree::ptree::path_type(key, '\0'))) {
    if (v->empty()) return &v->data();
  }
  return nullptr;
}

bool Config::has(const std::string& key) const { return raw(key) != nullptr; }

void Config::record(const std::string& key, const std::string& value) {
  if (used_.emplace(key, value).second) used_order_.push_back(key);
}

std::string Config::get_string(const std::string& key, const std::string& fallback) {
  const std::string* r = raw(key);
  std::string v = r ? trim(*r) : fallback;
  record(key, v);
  return v;
}

double Config::get_double(const std::string& key, double fallback) {
  const std::string* r = raw(key);
  const double v = r ? parse_double(key, trim(*r)) : fallback;
  record(key, ising::format_exact(v));
  return v;
}

long long Config::get_int(const std::string& key, long long fallback) {
  const std::string* r = raw(key);
  const long long v = r ? parse_number<long long>(key, trim(*r)) : fallback;
  record(key, std::to_string(v));
  return v;
}

std::uint64_t Config::get_seed(const std::string& key, std::uint64_t fallback) {
  const std::string* r = raw(key);
  const std::uint64_t v = r ? parse_number<std::uint64_t>(key, trim(*r)) : fallback;
  record(key, std::to_string(v));
  return v;
}

bool Config::get_bool(const std::string& key, bool fallback) {
  const std::string* r = raw(key);
  bool v = fallback;
  if (r) {
    const std::string t = trim(*r);
    if (t == "true" || t == "1" || t == "yes") {
      v = true;
    } else if (t == "false" || t == "0" || t == "no") {
      v = false;
    } else {
      throw ConfigError("config key '" + key + "': expected true or false, got '" + t + "'");
    }
  }
  record(key, v ? "true" : "false");
  return v;
}

std::vector<double> Config::get_doubles(const std::string& key,
                                        const std::vector<double>& fallback) {
  std::vector<double> v = fallback;
  if (const std::string* r = raw(key)) {
    v.clear();
    for (const auto& item : split_list(*r)) v.push_back(parse_double(key, item));
  }
  record(key, join(v, [](double x) { return ising::format_exact(x); }));
  return v;
}

std::vector<long long> Config::get_ints(const std::string& key,
                                        const std::vector<long long>& fallback) {
  std::vector<long long> v = fallback;
  if (const std::string* r = raw(key)) {
    v.clear();
    for (const auto& item : split_list(*r)) v.push_back(parse_number<long long>(key, item));
  }
  record(key, join(v, [](long long x) { return std::to_string(x); }));
  return v;
}

std::vector<std::string> Config::unused_keys() const {
  std::vector<std::string> unused;
  auto scan = [&](const boost::property_tree::ptree& level) {
    for (const auto& [key, child] : level) {
      if (child.empty() && !used_.contains(key)) unused.push_back(key);
    }
  };
  scan(tree_);
  if (!section_.empty()) {
    if (auto sec = tree_.get_child_optional(boost::property_tree::ptree::path_type(section_, '\0')))
      scan(*sec);
  }
  std::sort(unused.begin(), unused.end());
  unused.erase(std::unique(unused.begin(), unused.end()), unused.end());
  return unused;
}

std::vector<std::pair<std::string, std::string>> Config::effective() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& key : used_order_) out.emplace_back(key, used_.at(key));
  return out;
}

void Config::echo(std::ostream& out, const std::string& prefix) const {
  if (!section_.empty()) out << prefix << "[" << section_ << "]\n";
  for (const auto& [key, value] : effective()) out << prefix << key << " = " << value << "\n";
}

}  // namespace isingctl
