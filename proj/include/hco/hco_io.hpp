#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hco/orientation.hpp"

namespace hco::io {

// HCO v1: header line `HCO 1 n=<n> a=<a> b=<b>`, then the canonical bit
// stream as ASCII '0'/'1', wrapped at 120 characters per line, no padding.

struct HcoFile {
  int a = 0, b = 0;
  Orientation o;
};

void write_hco(std::ostream& out, const Orientation& o, int a, int b);
void write_hco_file(const std::string& path, const Orientation& o, int a, int b);

// Throws ParseError (with a line/column diagnostic) on malformed input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
HcoFile read_hco(std::istream& in);
HcoFile read_hco_file(const std::string& path);

}  // namespace hco::io
