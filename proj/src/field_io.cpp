#include "rwlab/field_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace rwlab
{

namespace
{

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

template <class T>
void put_le(std::ostream &os, T v)
{
  std::array<char, sizeof(T)> b;
  std::memcpy(b.data(), &v, sizeof(T));
  if constexpr (std::endian::native == std::endian::big)
  {
    std::reverse(b.begin(), b.end());
  }
  os.write(b.data(), sizeof(T));
}

template <class T>
T get_le(std::istream &is)
{
  std::array<char, sizeof(T)> b;
  if (!is.read(b.data(), sizeof(T)))
  {
    throw std::runtime_error("RWF1: truncated stream");
  }
  if constexpr (std::endian::native == std::endian::big)
  {
    std::reverse(b.begin(), b.end());
  }
  T v;
  std::memcpy(&v, b.data(), sizeof(T));
  return v;
}

}  // namespace

std::string format_double(double v)
{
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_rwf1(std::ostream &os, const Field &f)
{
  const Grid &g = f.grid();
  os.write("RWF1", 4);
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(g.dim()));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(g.points()));
  put_le<double>(os, g.half_width());
  for (const cplx &c : f.values())
  {
    put_le<double>(os, c.real());
    put_le<double>(os, c.imag());
  }
  if (!os)
  {
    throw std::runtime_error("RWF1: write failed");
  }
}

Field read_rwf1(std::istream &is)
{
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, "RWF1", 4) != 0)
  {
    throw std::runtime_error("RWF1: bad magic");
  }
  const auto N = get_le<std::uint32_t>(is);
  const auto n = get_le<std::uint32_t>(is);
  const double L = get_le<double>(is);
  Grid g(static_cast<int>(N), L, static_cast<int>(n));
  Field f(g);
  for (std::size_t i = 0; i < g.size(); ++i)
  {
    const double re = get_le<double>(is);
    const double im = get_le<double>(is);
    f[i] = cplx(re, im);
  }
  return f;
}

void save_rwf1(const std::string &path, const Field &f)
{
  std::ofstream os(path, std::ios::binary);
  if (!os)
  {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  write_rwf1(os, f);
}

Field load_rwf1(const std::string &path)
{
  std::ifstream is(path, std::ios::binary);
  if (!is)
  {
    throw std::runtime_error("cannot open " + path);
  }
  return read_rwf1(is);
}

void write_field_csv(std::ostream &os, const Field &f)
{
  const Grid &g = f.grid();
  const int N = g.dim();
  for (int d = 0; d < N; ++d)
    os << 'i' << d + 1 << ',';
  for (int d = 0; d < N; ++d)
    os << 'x' << d + 1 << ',';
  os << "re,im\n";
  for (std::size_t i = 0; i < g.size(); ++i)
  {
    const Index idx = g.unravel(i);
    for (int d = 0; d < N; ++d)
      os << idx[d] << ',';
    for (int d = 0; d < N; ++d)
      os << format_double(g.coord(idx[d])) << ',';
    os << format_double(f[i].real()) << ',' << format_double(f[i].imag()) << '\n';
  }
}

}  // namespace rwlab
