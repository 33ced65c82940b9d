#ifndef RWLAB_FIELD_IO_HPP
#define RWLAB_FIELD_IO_HPP

#include <iosfwd>
#include <string>

#include "rwlab/field.hpp"

namespace rwlab
{

// Binary "RWF1" layout, little endian: magic "RWF1", u32 N, u32 n, f64 L, then n^N pairs of
// f64 (re, im) in row-major node order.
void write_rwf1(std::ostream &os, const Field &f);
Field read_rwf1(std::istream &is);

void save_rwf1(const std::string &path, const Field &f);
Field load_rwf1(const std::string &path);

// CSV with columns i1..iN, x1..xN, re, im.
void write_field_csv(std::ostream &os, const Field &f);

// Shortest decimal text that round-trips the double.
std::string format_double(double v);

}  // namespace rwlab

#endif  // RWLAB_FIELD_IO_HPP
