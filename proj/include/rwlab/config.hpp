#ifndef RWLAB_CONFIG_HPP
#define RWLAB_CONFIG_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rwlab
{

class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

//
// Flat key = value text. One entry per line; '#' starts a comment; keys are dotted words;
// list values are comma separated. A later line for the same key replaces the earlier one.
//
class Config
{
public:
  static Config parse(std::istream &is, const std::string &origin = "<config>");
  static Config load(const std::string &path);

  // Applies "key=value".
  void apply_override(const std::string &assignment);
  void set(const std::string &key, const std::string &value);

  bool has(const std::string &key) const;
  std::string get_string(const std::string &key, const std::string &fallback) const;
  std::string require_string(const std::string &key) const;
  double get_double(const std::string &key, double fallback) const;
  double require_double(const std::string &key) const;
  int get_int(const std::string &key, int fallback) const;
  bool get_bool(const std::string &key, bool fallback) const;
  std::vector<double> get_doubles(const std::string &key,
                                  const std::vector<double> &fallback) const;
  std::vector<std::string> get_strings(const std::string &key,
                                       const std::vector<std::string> &fallback) const;

  // Throws ConfigError naming the first key not in `known`.
  void check_known(const std::set<std::string> &known) const;

  const std::map<std::string, std::string> &entries() const { return entries_; }

private:
  std::map<std::string, std::string> entries_;
};

double parse_double(const std::string &text, const std::string &key);
int parse_int(const std::string &text, const std::string &key);

}  // namespace rwlab

#endif  // RWLAB_CONFIG_HPP
