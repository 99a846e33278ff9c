#include "hco/hco_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace hco::io {

namespace {

constexpr int kWrap = 120;

[[noreturn]] void fail(int line, int col, const std::string& what) {
  std::ostringstream msg;
  msg << "line " << line << ", column " << col << ": " << what;
  throw ParseError(msg.str());
}

}  // namespace

void write_hco(std::ostream& out, const Orientation& o, int a, int b) {
  out << "HCO 1 n=" << o.dim() << " a=" << a << " b=" << b << '\n';
  const EdgeIndex m = o.edges();
  std::string row;
  row.reserve(kWrap + 1);
  for (EdgeIndex j = 0; j < m; ++j) {
    row.push_back(o.bit(j) ? '1' : '0');
    if (int(row.size()) == kWrap) {
      row.push_back('\n');
      out << row;
      row.clear();
    }
  }
  if (!row.empty()) out << row << '\n';
}

HcoFile read_hco(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) fail(1, 1, "missing header");
  int n = -1, a = -1, b = -1;
  {
    std::istringstream hs(header);
    std::string magic, version, fn, fa, fb;
    hs >> magic >> version >> fn >> fa >> fb;
    if (magic != "HCO" || version != "1") fail(1, 1, "expected `HCO 1` header");
    auto field = [&](const std::string& f, const char* key) {
      std::string prefix = std::string(key) + "=";
      if (f.rfind(prefix, 0) != 0) fail(1, 1, "expected " + prefix + "<int> in header");
      try {
        return std::stoi(f.substr(prefix.size()));
      } catch (const std::exception&) {
        fail(1, 1, "bad integer after " + prefix);
      }
    };
    n = field(fn, "n");
    a = field(fa, "a");
    b = field(fb, "b");
    std::string extra;
    if (hs >> extra) fail(1, 1, "trailing junk in header");
  }
  if (n < 1 || n > kMaxDim) fail(1, 5, "dimension out of range");
  if (a < 0 || b < 0 || a > n || b > n) fail(1, 1, "in-degrees out of range");

  Orientation o(n);
  const EdgeIndex m = o.edges();
  EdgeIndex got = 0;
  std::string row;
  int lineno = 1;
  while (std::getline(in, row)) {
    ++lineno;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    for (std::size_t c = 0; c < row.size(); ++c) {
      char ch = row[c];
      if (ch != '0' && ch != '1')
        fail(lineno, int(c) + 1, std::string("invalid character `") + ch + "` in bit stream");
      if (got >= m) fail(lineno, int(c) + 1, "bit stream longer than n*2^(n-1)");
      o.set_bit(got++, ch == '1');
    }
    if (!row.empty() && row.size() != kWrap && got != m)
      fail(lineno, int(row.size()) + 1, "short line before end of stream");
  }
  if (got != m)
    fail(lineno + 1, 1,
         "bit stream ended early: got " + std::to_string(got) + " of " + std::to_string(m) + " bits");
  return HcoFile{a, b, std::move(o)};
}

void write_hco_file(const std::string& path, const Orientation& o, int a, int b) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  write_hco(f, o, a, b);
  f.close();
  if (!f) throw std::runtime_error("write failed: " + path);
}

HcoFile read_hco_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_hco(f);
}

}  // namespace hco::io
