#include "rwlab/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace rwlab
{

namespace
{

std::string trim(const std::string &s)
{
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool valid_key(const std::string &key)
{
  if (key.empty() || key.front() == '.' || key.back() == '.')
    return false;
  for (std::size_t i = 0; i < key.size(); ++i)
  {
    const char c = key[i];
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-' || c == '.';
    if (!ok || (c == '.' && key[i + 1] == '.'))
      return false;
  }
  return true;
}

std::vector<std::string> split_list(const std::string &value)
{
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(value);
  while (std::getline(is, item, ','))
    out.push_back(trim(item));
  if (!value.empty() && value.back() == ',')
    out.emplace_back();
  return out;
}

}  // namespace

double parse_double(const std::string &text, const std::string &key)
{
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v))
  {
    throw ConfigError("config key '" + key + "': '" + text + "' is not a finite number");
  }
  return v;
}

int parse_int(const std::string &text, const std::string &key)
{
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
  {
    throw ConfigError("config key '" + key + "': '" + text + "' is not an integer");
  }
  return v;
}

Config Config::parse(std::istream &is, const std::string &origin)
{
  Config cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line))
  {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
    {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (!valid_key(key))
    {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": bad key '" + key + "'");
    }
    cfg.entries_[key] = trim(line.substr(eq + 1));
  }
  return cfg;
}

Config Config::load(const std::string &path)
{
  std::ifstream is(path);
  if (!is)
  {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  return parse(is, path);
}

void Config::apply_override(const std::string &assignment)
{
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
  {
    throw ConfigError("override '" + assignment + "' is not key=value");
  }
  set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

void Config::set(const std::string &key, const std::string &value)
{
  if (!valid_key(key))
  {
    throw ConfigError("bad key '" + key + "'");
  }
  entries_[key] = value;
}

bool Config::has(const std::string &key) const
{
  return entries_.count(key) != 0;
}

std::string Config::get_string(const std::string &key, const std::string &fallback) const
{
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

std::string Config::require_string(const std::string &key) const
{
  const auto it = entries_.find(key);
  if (it == entries_.end())
  {
    throw ConfigError("missing config key '" + key + "'");
  }
  return it->second;
}

double Config::get_double(const std::string &key, double fallback) const
{
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : parse_double(it->second, key);
}

double Config::require_double(const std::string &key) const
{
  return parse_double(require_string(key), key);
}

int Config::get_int(const std::string &key, int fallback) const
{
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : parse_int(it->second, key);
}

bool Config::get_bool(const std::string &key, bool fallback) const
{
  const auto it = entries_.find(key);
  if (it == entries_.end())
    return fallback;
  const std::string &v = it->second;
  if (v == "true" || v == "1" || v == "yes" || v == "on")
    return true;
  if (v == "false" || v == "0" || v == "no" || v == "off")
    return false;
  throw ConfigError("config key '" + key + "': '" + v + "' is not a boolean");
}

std::vector<double> Config::get_doubles(const std::string &key,
                                        const std::vector<double> &fallback) const
{
  const auto it = entries_.find(key);
  if (it == entries_.end())
    return fallback;
  std::vector<double> out;
  for (const std::string &item : split_list(it->second))
    out.push_back(parse_double(item, key));
  return out;
}

std::vector<std::string> Config::get_strings(const std::string &key,
                                             const std::vector<std::string> &fallback) const
{
  const auto it = entries_.find(key);
  if (it == entries_.end())
    return fallback;
  std::vector<std::string> out = split_list(it->second);
  if (std::any_of(out.begin(), out.end(), [](const std::string &s) { return s.empty(); }))
  {
    throw ConfigError("config key '" + key + "': empty list item");
  }
  return out;
}

void Config::check_known(const std::set<std::string> &known) const
{
  for (const auto &[key, value] : entries_)
  {
    if (known.count(key) == 0)
    {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

}  // namespace rwlab
