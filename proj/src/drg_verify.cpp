#include "drgt/drg_verify.hpp"

#include <algorithm>

namespace drgt {

IntersectionArray verify_distance_regular(const Graph& g, bool strict, bool force) {
  if (g.n > 5000 && !force)
    fail(Errc::ParamOutOfRange,
         "combinatorial verification refuses n > 5000 without force");
  if (!is_connected(g)) fail(Errc::Disconnected, "graph is not connected");

  int d = eccentricity(g, 0);
  if (d < 1) fail(Errc::NotDistanceRegular, "single vertex");
  std::vector<long> bs(d + 1, -1), cs(d + 1, -1), as(d + 1, -1);

  for (int x = 0; x < g.n; ++x) {
    auto dist = bfs_distances(g, x);
    for (int y = 0; y < g.n; ++y) {
      int h = dist[y];
      if (h > d)
        fail(Errc::NotDistanceRegular,
             "eccentricity differs at vertex " + std::to_string(x));
      if (h == 0) continue;
      long c = 0, a = 0, b = 0;
      for (int w : g.adj[y]) {
        if (dist[w] == h - 1)
          ++c;
        else if (dist[w] == h)
          ++a;
        else
          ++b;
      }
      auto check = [&](std::vector<long>& store, long val, const char* what) {
        if (store[h] < 0)
          store[h] = val;
        else if (store[h] != val)
          fail(Errc::NotDistanceRegular, std::string(what) + "_" + std::to_string(h) +
                                             " inconstant at pair (" + std::to_string(x) + "," +
                                             std::to_string(y) + ")");
      };
      check(cs, c, "c");
      check(as, a, "a");
      check(bs, b, "b");
    }
    if (*std::max_element(dist.begin(), dist.end()) != d)
      fail(Errc::NotDistanceRegular, "eccentricity differs at vertex " + std::to_string(x));
  }

  for (int h = 1; h <= d; ++h)
    if (bs[h] < 0)
      fail(Errc::NotDistanceRegular, "no pair at distance " + std::to_string(h));
  if (bs[d] != 0) fail(Errc::NotDistanceRegular, "b_d != 0");

  std::vector<long> b(d), c(d);
  b[0] = g.degree(0);
  for (int i = 1; i < d; ++i) b[i] = bs[i];
  for (int i = 1; i <= d; ++i) c[i - 1] = cs[i];

  if (strict) {
    // spot-check the full distance distribution for a few base pairs per h
    for (int h = 2; h <= d; ++h) {
      std::vector<std::vector<long>> reference;
      int sampled = 0;
      for (int x = 0; x < g.n && sampled < 5; ++x) {
        auto dx = bfs_distances(g, x);
        for (int y = x + 1; y < g.n && sampled < 5; ++y) {
          if (dx[y] != h) continue;
          auto dy = bfs_distances(g, y);
          std::vector<long> table((d + 1) * (d + 1), 0);
          for (int z = 0; z < g.n; ++z) ++table[dx[z] * (d + 1) + dy[z]];
          if (reference.empty())
            reference.push_back(table);
          else if (table != reference.front())
            fail(Errc::NotDistanceRegular,
                 "p^" + std::to_string(h) + "_{ij} inconstant at pair (" + std::to_string(x) +
                     "," + std::to_string(y) + ")");
          ++sampled;
        }
      }
    }
  }

  return IntersectionArray(b, c);
}

} // namespace drgt
