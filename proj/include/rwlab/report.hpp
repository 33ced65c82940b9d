#ifndef RWLAB_REPORT_HPP
#define RWLAB_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rwlab
{

// Rows of text cells under fixed column names.
struct Table
{
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  void write_csv(std::ostream &os) const;
  // Aligned columns for terminals.
  void write_pretty(std::ostream &os) const;
};

struct DiagnosticEntry
{
  std::string name;
  std::string params;
  double value = 0.0;
};

//
// Named scalar results together with the parameters that produced them.
//
class DiagnosticsReport
{
public:
  void add(std::string name, std::string params, double value);
  const std::vector<DiagnosticEntry> &entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Columns name, params, value.
  void write_csv(std::ostream &os) const;
  void write_pretty(std::ostream &os) const;

private:
  std::vector<DiagnosticEntry> entries_;
};

// Builds "{key=value, ...}" parameter strings.
class Params
{
public:
  Params &add(const std::string &key, double value);
  Params &add(const std::string &key, const std::string &value);
  std::string str() const;

private:
  std::vector<std::string> parts_;
};

// CSV cell quoting (RFC 4180 style) when needed.
std::string csv_cell(const std::string &s);

}  // namespace rwlab

#endif  // RWLAB_REPORT_HPP
