#include "rwlab/report.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "rwlab/field_io.hpp"

namespace rwlab
{

std::string csv_cell(const std::string &s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
  {
    return s;
  }
  std::string out = "\"";
  for (char c : s)
  {
    if (c == '"')
      out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void Table::add_row(std::vector<std::string> row)
{
  if (row.size() != columns.size())
  {
    throw std::invalid_argument("Table::add_row: wrong number of cells");
  }
  rows.push_back(std::move(row));
}

void Table::write_csv(std::ostream &os) const
{
  auto line = [&](const std::vector<std::string> &cells)
  {
    for (std::size_t i = 0; i < cells.size(); ++i)
      os << (i ? "," : "") << csv_cell(cells[i]);
    os << '\n';
  };
  line(columns);
  for (const auto &r : rows)
    line(r);
}

void Table::write_pretty(std::ostream &os) const
{
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
  {
    width[c] = columns[c].size();
    for (const auto &r : rows)
      width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string> &cells)
  {
    for (std::size_t c = 0; c < cells.size(); ++c)
    {
      os << (c ? "  " : "") << cells[c];
      if (c + 1 < cells.size())
        os << std::string(width[c] - cells[c].size(), ' ');
    }
    os << '\n';
  };
  line(columns);
  for (const auto &r : rows)
    line(r);
}

void DiagnosticsReport::add(std::string name, std::string params, double value)
{
  entries_.push_back({std::move(name), std::move(params), value});
}

void DiagnosticsReport::write_csv(std::ostream &os) const
{
  Table t{{"diagnostic", "params", "value"}, {}};
  for (const auto &e : entries_)
    t.add_row({e.name, e.params, format_double(e.value)});
  t.write_csv(os);
}

void DiagnosticsReport::write_pretty(std::ostream &os) const
{
  Table t{{"diagnostic", "params", "value"}, {}};
  for (const auto &e : entries_)
    t.add_row({e.name, e.params, format_double(e.value)});
  t.write_pretty(os);
}

Params &Params::add(const std::string &key, double value)
{
  parts_.push_back(key + "=" + format_double(value));
  return *this;
}

Params &Params::add(const std::string &key, const std::string &value)
{
  parts_.push_back(key + "=" + value);
  return *this;
}

std::string Params::str() const
{
  std::string out = "{";
  for (std::size_t i = 0; i < parts_.size(); ++i)
    out += (i ? ", " : "") + parts_[i];
  return out + "}";
}

}  // namespace rwlab
