#include "hco/oracle.hpp"

#include <algorithm>

#include "hco/bits.hpp"

namespace hco::ver {

ProfileMap oracle_profiles(int n) {
  require(n >= 1 && n <= 3, "exhaustive oracle stops at n=3");
  const int m = int(edge_count(n));
  const int nv = int(vertex_count(n));

  struct Edge {
    int lo, hi;
  };
  std::vector<Edge> edges;
  for (int v = 0; v < nv; ++v)
    for (int i = 0; i < n; ++i)
      if (!(v >> i & 1)) edges.push_back({v, v | 1 << i});

  ProfileMap out;
  std::vector<int> cnt(nv);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (int e = 0; e < m; ++e) ++cnt[bits >> e & 1 ? edges[e].hi : edges[e].lo];

    std::vector<int> support;
    for (int d = 0; d <= n; ++d)
      if (std::count(cnt.begin(), cnt.end(), d) > 0) support.push_back(d);
    if (support.size() > 2) continue;
    std::vector<std::uint64_t> profile;
    for (int d : support)
      profile.push_back(std::uint64_t(std::count(cnt.begin(), cnt.end(), d)));
    out[support].insert(profile);
  }
  return out;
}

}  // namespace hco::ver
