#include "hco/kary.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <random>
#include <sstream>

#include "hco/hco_io.hpp"

namespace hco::kary {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) {
    check_internal(base == 0 || r <= ~std::uint64_t{0} / base, "k^n overflows");
    r *= base;
  }
  return r;
}

namespace {

void check_cube(int k, int n) {
  require(k >= 2 && k <= 255, "alphabet must have 2..255 letters");
  require(n >= 1, "dimension must be positive");
  const std::uint64_t cap = std::uint64_t{1} << 40;
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) {
    require(r <= cap / std::uint64_t(k), "k-ary cube too large");
    r *= std::uint64_t(k);
  }
}

int digit(std::uint64_t v, int d, const std::uint64_t* pw, int k) {
  return int(v / pw[d] % k);
}

// k^0 .. k^(n+1), precomputed.  check_cube bounds keep these in range.
struct Powers {
  std::uint64_t pw[42];
  Powers(int k, int n) {
    pw[0] = 1;
    for (int i = 1; i <= n + 1; ++i) pw[i] = pw[i - 1] * std::uint64_t(k);
  }
};

}  // namespace

std::uint64_t line_count(int k, int n) {
  check_cube(k, n);
  return std::uint64_t(n) * pow_u64(k, n - 1);
}

std::uint64_t line_index(int k, int n, const Line& line) {
  check_cube(k, n);
  Powers p(k, n);
  require(line.d >= 0 && line.d < n, "direction out of range");
  require(line.base < pow_u64(k, n) && digit(line.base, line.d, p.pw, k) == 0,
          "line base must have digit d = 0");
  std::uint64_t lo = line.base % p.pw[line.d];
  std::uint64_t hi = line.base / p.pw[line.d + 1];
  return std::uint64_t(line.d) * pow_u64(k, n - 1) + hi * p.pw[line.d] + lo;
}

Line line_at(int k, int n, std::uint64_t index) {
  require(index < line_count(k, n), "line index out of range");
  Powers p(k, n);
  const std::uint64_t per = pow_u64(k, n - 1);
  int d = int(index / per);
  std::uint64_t rest = index % per;
  std::uint64_t lo = rest % p.pw[d];
  std::uint64_t hi = rest / p.pw[d];
  return Line{d, hi * p.pw[d + 1] + lo};
}

Line line_through(int k, int n, std::uint64_t vertex, int d) {
  check_cube(k, n);
  require(vertex < pow_u64(k, n), "vertex out of range");
  require(d >= 0 && d < n, "direction out of range");
  Powers p(k, n);
  return Line{d, vertex - std::uint64_t(digit(vertex, d, p.pw, k)) * p.pw[d]};
}

std::vector<std::uint8_t> mark_count_table(const Marking& m) {
  check_cube(m.k, m.n);
  require(m.marks.size() == m.lines(), "marking has the wrong line count");
  Powers p(m.k, m.n);
  std::vector<std::uint8_t> cnt(m.vertices(), 0);
  for (std::uint64_t L = 0; L < m.marks.size(); ++L) {
    require(m.marks[L] < m.k, "marked digit out of range");
    Line line = line_at(m.k, m.n, L);
    ++cnt[line.base + std::uint64_t(m.marks[L]) * p.pw[line.d]];
  }
  return cnt;
}

DegreeHistogram mark_degrees(const Marking& m) {
  auto cnt = mark_count_table(m);
  DegreeHistogram h;
  h.counts.assign(m.n + 1, 0);
  for (auto c : cnt) ++h.counts[c];
  return h;
}

std::optional<KCounts> kary_feasible(int a, int b, int n, int k) {
  check_cube(k, n);
  if (a > b) std::swap(a, b);
  require(a >= 0 && b <= n, "mark counts out of range");
  const std::uint64_t nv = pow_u64(k, n);
  const std::uint64_t marks = line_count(k, n);
  if (a == b) {
    if (std::uint64_t(a) * std::uint64_t(k) != std::uint64_t(n)) return std::nullopt;
    return KCounts{nv, 0, true};
  }
  // s + t = k^n, a*s + b*t = n*k^(n-1)
  if (marks < std::uint64_t(a) * nv) return std::nullopt;
  const std::uint64_t num = marks - std::uint64_t(a) * nv;
  if (num % std::uint64_t(b - a) != 0) return std::nullopt;
  const std::uint64_t t = num / std::uint64_t(b - a);
  if (t > nv) return std::nullopt;
  return KCounts{nv - t, t, t == 0 || t == nv};
}

Marking perfect_block_marking(int k) {
  require(k >= 2, "alphabet needs at least two letters");
  const int n = k;
  check_cube(k, n);
  Powers p(k, n);
  Marking m{k, n, {}};
  m.marks.resize(line_count(k, n));
  for (std::uint64_t L = 0; L < m.marks.size(); ++L) {
    Line line = line_at(k, n, L);
    int sum = 0;
    for (int j = 0; j < n; ++j) sum += digit(line.base, j, p.pw, k);
    // mark the digit c with sum + c = d (mod k); each vertex is then marked
    // exactly once, by its line in direction digitsum mod k
    m.marks[L] = std::uint8_t(((line.d - sum) % k + k) % k);
  }
  return m;
}

namespace {

void require_two_valued_marking(const Marking& m, const char* who) {
  auto h = mark_degrees(m);
  if (h.support().size() > 2)
    throw std::invalid_argument(std::string(who) +
                                ": marking has more than two mark counts");
}

}  // namespace

Marking kary_lift(const Marking& m) {
  check_cube(m.k, m.n + m.k);
  require_two_valued_marking(m, "kary_lift");
  const int k = m.k, n = m.n + k;
  Marking block = perfect_block_marking(k);
  const std::uint64_t slice = pow_u64(k, m.n);  // low digits carry m
  Marking out{k, n, {}};
  out.marks.resize(line_count(k, n));
  for (std::uint64_t L = 0; L < out.marks.size(); ++L) {
    Line line = line_at(k, n, L);
    if (line.d < m.n) {
      out.marks[L] = m.marks[line_index(k, m.n, Line{line.d, line.base % slice})];
    } else {
      out.marks[L] =
          block.marks[line_index(k, k, Line{line.d - m.n, line.base / slice})];
    }
  }
  return out;
}

Marking kary_blowup(const Marking& m, int ell) {
  require(ell >= 1, "blow-up factor must be positive");
  const int k = m.k, n = m.n * ell;
  check_cube(k, n);
  require_two_valued_marking(m, "kary_blowup");
  Powers p(k, n);
  Powers ps(k, m.n);
  Marking out{k, n, {}};
  out.marks.resize(line_count(k, n));
  for (std::uint64_t L = 0; L < out.marks.size(); ++L) {
    Line line = line_at(k, n, L);
    const int block = line.d / ell;
    // Image vertex: digit i = block-i digit sum mod k.  Digit d of the base
    // is zero, so `own` is also the image's digit at position `block`.
    std::uint64_t image = 0;
    for (int blk = 0; blk < m.n; ++blk) {
      int sum = 0;
      for (int j = blk * ell; j < (blk + 1) * ell; ++j)
        sum += digit(line.base, j, p.pw, k);
      image += std::uint64_t(sum % k) * ps.pw[blk];
    }
    const int own = digit(image, block, ps.pw, k);
    const std::uint64_t ibase = image - std::uint64_t(own) * ps.pw[block];
    const int marked = m.marks[line_index(k, m.n, Line{block, ibase})];
    // Running digit d by c moves the image digit to own + c; mark the c that
    // lands on the image line's marked vertex.
    out.marks[L] = std::uint8_t(((marked - own) % k + k) % k);
  }
  return out;
}

Marking marking_of_orientation(const Orientation& o) {
  const int n = o.dim();
  Marking m{2, n, {}};
  m.marks.resize(line_count(2, n));
  EdgeCursor c(n, 0);
  for (EdgeIndex j = 0; j < o.edges(); ++j, c.advance())
    m.marks[line_index(2, n, Line{c.i, c.v})] = std::uint8_t(o.bit(j));
  return m;
}

Orientation orientation_of_marking(const Marking& m) {
  require(m.k == 2, "orientations are the k=2 case");
  check_dim(m.n);
  require(m.marks.size() == m.lines(), "marking has the wrong line count");
  Orientation o(m.n);
  EdgeCursor c(m.n, 0);
  for (EdgeIndex j = 0; j < o.edges(); ++j, c.advance())
    o.set_bit(j, m.marks[line_index(2, m.n, Line{c.i, c.v})] != 0);
  return o;
}

// ---- search ----

namespace {

// Most-constrained-line-first backtracking with seeded random tie-breaks.
// Digits marking already-marked vertices are tried first, which steers the
// search toward finishing vertices instead of spreading marks thin.  Static
// line orders stall badly on instances as small as [0,2]_3 over k=4; the
// restarted randomized order finds every bundled target in a few thousand
// nodes.
struct KSearcher {
  int k, n, a, b;
  std::uint64_t nv, nlines;
  std::uint64_t s_quota, t_quota;
  std::vector<std::array<std::uint32_t, 16>> line_verts;
  std::vector<int> cnt, rem;
  std::vector<std::int8_t> chosen;
  std::uint64_t over_a = 0;   // vertices committed past a (must end at b)
  std::uint64_t under_b = 0;  // vertices that can no longer reach b
  std::uint64_t nodes = 0, budget = 0;
  std::mt19937 rng;
  bool tripped = false;

  bool alive(int c, int r) const {
    return (c <= a && a <= c + r) || (c <= b && b <= c + r);
  }

  void apply(std::uint64_t L, int c, int sign) {
    for (int j = 0; j < k; ++j) {
      std::uint32_t x = line_verts[L][j];
      over_a -= cnt[x] > a;
      under_b -= cnt[x] + rem[x] < b;
      rem[x] -= sign;
      if (j == c) cnt[x] += sign;
      over_a += cnt[x] > a;
      under_b += cnt[x] + rem[x] < b;
    }
    chosen[L] = sign > 0 ? std::int8_t(c) : std::int8_t(-1);
  }

  int viable(std::uint64_t L, int* out) const {
    int count = 0;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        std::uint32_t x = line_verts[L][j];
        ok = alive(cnt[x] + (j == c), rem[x] - 1);
      }
      if (ok) out[count++] = c;
    }
    return count;
  }

  bool solve() {
    if (++nodes > budget) {
      tripped = true;
      return false;
    }
    if (over_a > t_quota || under_b > s_quota) return false;

    int best = k + 1;
    std::uint64_t pick = nlines;
    std::uint64_t ties = 0;
    int digits[16];
    for (std::uint64_t L = 0; L < nlines; ++L) {
      if (chosen[L] >= 0) continue;
      int c = viable(L, digits);
      if (c == 0) return false;
      if (c < best) {
        best = c;
        pick = L;
        ties = 1;
        if (best == 1) break;
      } else if (c == best && rng() % ++ties == 0) {
        pick = L;
      }
    }
    if (pick == nlines) return true;  // viable() pinned every final count

    int count = viable(pick, digits);
    std::array<std::uint32_t, 16> key{};
    for (int i = 0; i < count; ++i)
      key[digits[i]] =
          (std::uint32_t(255 - cnt[line_verts[pick][digits[i]]]) << 24) |
          (rng() & 0xffffff);
    std::sort(digits, digits + count, [&](int x, int y) { return key[x] < key[y]; });
    for (int i = 0; i < count; ++i) {
      apply(pick, digits[i], 1);
      if (solve()) return true;
      apply(pick, digits[i], -1);
      if (tripped) return false;
    }
    return false;
  }
};

}  // namespace

SearchResult kary_search(int a, int b, int n, int k, std::uint64_t node_budget) {
  check_cube(k, n);
  require(k <= 16, "search supports alphabets up to 16 letters");
  if (a > b) std::swap(a, b);
  auto counts = kary_feasible(a, b, n, k);
  if (!counts) return {SearchOutcome::Absent, std::nullopt, 0, 0};
  require(pow_u64(k, n) <= 200000, "search instance too large");
  require(node_budget > 0, "node budget must be positive");

  KSearcher s;
  s.k = k;
  s.n = n;
  s.a = a;
  s.b = b;
  s.nv = pow_u64(k, n);
  s.nlines = line_count(k, n);
  s.s_quota = counts->s;
  s.t_quota = counts->t;
  Powers p(k, n);
  s.line_verts.resize(s.nlines);
  for (std::uint64_t L = 0; L < s.nlines; ++L) {
    Line line = line_at(k, n, L);
    for (int c = 0; c < k; ++c)
      s.line_verts[L][c] = std::uint32_t(line.base + std::uint64_t(c) * p.pw[line.d]);
  }

  // Segmented restarts: a fresh seed per segment.  A segment that exhausts
  // its tree without tripping the budget proves absence.
  const std::uint64_t segment = std::min<std::uint64_t>(node_budget, 1u << 20);
  std::uint64_t total_nodes = 0;
  int restart = 0;
  for (;;) {
    s.cnt.assign(s.nv, 0);
    s.rem.assign(s.nv, n);
    s.chosen.assign(s.nlines, -1);
    s.over_a = 0;
    s.under_b = 0;
    s.nodes = 0;
    s.budget = std::min(segment, node_budget - total_nodes);
    s.tripped = false;
    s.rng.seed(12345 + std::uint32_t(restart));

    bool found = s.solve();
    total_nodes += s.nodes;
    if (found) {
      Marking m{k, n, {}};
      m.marks.resize(s.nlines);
      for (std::uint64_t L = 0; L < s.nlines; ++L) {
        check_internal(s.chosen[L] >= 0, "search left a line unmarked");
        m.marks[L] = std::uint8_t(s.chosen[L]);
      }
      auto h = mark_degrees(m);  // witnesses re-verify before being returned
      for (int d = 0; d <= n; ++d) {
        std::uint64_t want = d == a ? counts->s : d == b ? counts->t : 0;
        check_internal(h.at(d) == want, "search witness fails verification");
      }
      return {SearchOutcome::Found, std::move(m), total_nodes, restart};
    }
    if (!s.tripped)
      return {SearchOutcome::Absent, std::nullopt, total_nodes, restart};
    if (total_nodes >= node_budget)
      return {SearchOutcome::Budget, std::nullopt, total_nodes, restart};
    ++restart;
  }
}

// ---- CNF export ----

std::string export_cnf(int a, int b, int n, int k) {
  check_cube(k, n);
  if (a > b) std::swap(a, b);
  require(a >= 0 && b <= n, "mark counts out of range");
  const std::uint64_t nv = pow_u64(k, n);
  const std::uint64_t nlines = line_count(k, n);
  require(nlines * k + nv <= 4000000, "CNF instance too large");
  Powers p(k, n);

  std::ostringstream body;
  std::uint64_t clauses = 0;
  auto clause2 = [&](std::int64_t u, std::int64_t v) {
    body << u << ' ' << v << " 0\n";
    ++clauses;
  };

  // x(L,c) = L*k + c + 1: line L marks digit c.
  for (std::uint64_t L = 0; L < nlines; ++L) {
    for (int c = 0; c < k; ++c) body << std::int64_t(L * k + c) + 1 << ' ';
    body << "0\n";
    ++clauses;
    for (int c = 0; c < k; ++c)
      for (int c2 = c + 1; c2 < k; ++c2)
        clause2(-(std::int64_t(L * k + c) + 1), -(std::int64_t(L * k + c2) + 1));
  }

  // y(v) = nlines*k + v + 1: vertex v carries count a (true) or b (false).
  std::vector<std::int64_t> incident(n);
  std::vector<int> subset;
  auto emit_subsets = [&](std::int64_t guard, int size, bool neg) {
    if (size > n) return;  // vacuous bound
    subset.resize(size);
    for (int i = 0; i < size; ++i) subset[i] = i;
    for (;;) {
      body << guard << ' ';
      for (int i : subset) body << (neg ? -incident[i] : incident[i]) << ' ';
      body << "0\n";
      ++clauses;
      int i = size - 1;
      while (i >= 0 && subset[i] == n - size + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  };

  for (std::uint64_t v = 0; v < nv; ++v) {
    const std::int64_t y = std::int64_t(nlines * k + v) + 1;
    for (int d = 0; d < n; ++d) {
      Line line = line_through(k, n, v, d);
      incident[d] = std::int64_t(line_index(k, n, line) * std::uint64_t(k) +
                                 std::uint64_t(digit(v, d, p.pw, k))) +
                    1;
    }
    emit_subsets(-y, a + 1, true);       // y -> at most a marks
    emit_subsets(-y, n - a + 1, false);  // y -> at least a marks
    emit_subsets(y, b + 1, true);        // !y -> at most b marks
    emit_subsets(y, n - b + 1, false);   // !y -> at least b marks
  }

  std::ostringstream out;
  out << "c marking of the " << k << "-ary " << n << "-cube with counts in {"
      << a << "," << b << "}\n";
  out << "c var L*" << k << "+c+1 (L<" << nlines << "): line L marks digit c\n";
  out << "c var " << nlines * k << "+v+1 (v<" << nv
      << "): vertex v carries count " << a << " (else " << b << ")\n";
  out << "p cnf " << nlines * k + nv << ' ' << clauses << '\n';
  out << body.str();
  return out.str();
}

// ---- KHM v1 ----

void write_khm(std::ostream& out, const Marking& m) {
  check_cube(m.k, m.n);
  require(m.marks.size() == m.lines(), "marking has the wrong line count");
  out << "KHM 1 k=" << m.k << " n=" << m.n << '\n';
  for (auto d : m.marks) out << int(d) << '\n';
}

Marking read_khm(std::istream& in) {
  std::string header;
  if (!std::getline(in, header))
    throw io::ParseError("line 1, column 1: missing header");
  int k = 0, n = 0;
  {
    std::istringstream hs(header);
    std::string magic, version, fk, fn;
    hs >> magic >> version >> fk >> fn;
    if (magic != "KHM" || version != "1")
      throw io::ParseError("line 1, column 1: expected `KHM 1` header");
    if (fk.rfind("k=", 0) != 0 || fn.rfind("n=", 0) != 0)
      throw io::ParseError("line 1, column 7: expected k=<int> n=<int>");
    try {
      k = std::stoi(fk.substr(2));
      n = std::stoi(fn.substr(2));
    } catch (const std::exception&) {
      throw io::ParseError("line 1, column 7: bad k/n integers");
    }
    std::string extra;
    if (hs >> extra) throw io::ParseError("line 1: trailing junk in header");
  }
  try {
    check_cube(k, n);
  } catch (const std::exception& e) {
    throw io::ParseError(std::string("line 1: ") + e.what());
  }

  Marking m{k, n, {}};
  const std::uint64_t lines = line_count(k, n);
  m.marks.reserve(std::size_t(std::min<std::uint64_t>(lines, 1u << 20)));
  std::string row;
  std::uint64_t lineno = 1;
  while (std::getline(in, row)) {
    ++lineno;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (row.empty()) continue;
    int value = -1;
    try {
      std::size_t used = 0;
      value = std::stoi(row, &used);
      if (used != row.size()) throw std::invalid_argument("junk");
    } catch (const std::exception&) {
      throw io::ParseError("line " + std::to_string(lineno) +
                           ", column 1: expected a digit 0.." +
                           std::to_string(k - 1));
    }
    if (value < 0 || value >= k)
      throw io::ParseError("line " + std::to_string(lineno) +
                           ": marked digit out of range");
    if (std::uint64_t(m.marks.size()) >= lines)
      throw io::ParseError("line " + std::to_string(lineno) +
                           ": more lines than n*k^(n-1)");
    m.marks.push_back(std::uint8_t(value));
  }
  if (std::uint64_t(m.marks.size()) != lines)
    throw io::ParseError("marking ends early: got " +
                         std::to_string(m.marks.size()) + " of " +
                         std::to_string(lines) + " lines");
  return m;
}

void write_khm_file(const std::string& path, const Marking& m) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  write_khm(f, m);
  f.close();
  if (!f) throw std::runtime_error("write failed: " + path);
}

Marking read_khm_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_khm(f);
}

}  // namespace hco::kary
