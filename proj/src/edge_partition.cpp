#include "drgt/edge_partition.hpp"

#include <map>

namespace drgt {

namespace {
const std::vector<int> kEmpty;
}

const std::vector<int>& EdgePartition::cell(int i, int j) const {
  if (i < 0 || j < 0 || i > d || j > d) return kEmpty;
  return cells[i][j];
}

long EdgePartition::cell_size(int i, int j) const {
  return static_cast<long>(cell(i, j).size());
}

long EdgePartition::count_into(const Graph& g, int z, int i, int j) const {
  if (i < 0 || j < 0 || i > d || j > d) return 0;
  long c = 0;
  for (int w : g.adj[z])
    if (dist_x[w] == i && dist_y[w] == j) ++c;
  return c;
}

std::vector<std::string> bookkeeping_violations(const Graph& g, const IntersectionArray& arr,
                                                const EdgePartition& p) {
  std::vector<std::string> out;
  auto note = [&](int z, int ti, int tj, long want, long got) {
    out.push_back("z=" + std::to_string(z) + " into D_" + std::to_string(ti) + "^" +
                  std::to_string(tj) + ": expected " + std::to_string(want) + ", got " +
                  std::to_string(got));
  };

  for (int z = 0; z < g.n; ++z) {
    int i = p.dist_x[z], j = p.dist_y[z];
    std::map<std::pair<int, int>, long> want;
    if (i + 1 == j) { // z in D_{i}^{i+1} with paper index shift: use m = j
      int m = j;
      long q = p.count_into(g, z, m - 1, m - 1);
      want[{m - 2, m - 1}] = arr.c(m - 1);
      want[{m, m - 1}] = arr.c(m) - arr.c(m - 1) - q;
      want[{m - 1, m}] = arr.a(m - 1) - q;
      want[{m, m + 1}] = arr.b(m);
      want[{m, m}] = arr.a(m) - arr.a(m - 1) + q;
      want[{m - 1, m - 1}] = q;
    } else if (j + 1 == i) {
      int m = i;
      long q = p.count_into(g, z, m - 1, m - 1);
      want[{m - 1, m - 2}] = arr.c(m - 1);
      want[{m - 1, m}] = arr.c(m) - arr.c(m - 1) - q;
      want[{m, m - 1}] = arr.a(m - 1) - q;
      want[{m + 1, m}] = arr.b(m);
      want[{m, m}] = arr.a(m) - arr.a(m - 1) + q;
      want[{m - 1, m - 1}] = q;
    } else if (i == j && i >= 1) {
      long q = p.count_into(g, z, i - 1, i - 1);
      long pp = p.count_into(g, z, i + 1, i + 1);
      want[{i - 1, i}] = arr.c(i) - q;
      want[{i, i - 1}] = arr.c(i) - q;
      want[{i, i + 1}] = arr.b(i) - pp;
      want[{i + 1, i}] = arr.b(i) - pp;
      want[{i, i}] = arr.a(i) - arr.b(i) - arr.c(i) + q + pp;
      want[{i - 1, i - 1}] = q;
      want[{i + 1, i + 1}] = pp;
    } else {
      continue; // unreachable for a valid partition
    }
    // neighbors of z land only in the named cells; verify every touched cell
    for (int w : g.adj[z]) {
      auto key = std::make_pair(p.dist_x[w], p.dist_y[w]);
      if (!want.count(key)) want[key] = 0;
    }
    for (const auto& [key, cnt] : want) {
      long got = p.count_into(g, z, key.first, key.second);
      if (got != cnt) note(z, key.first, key.second, cnt, got);
    }
  }
  return out;
}

EdgePartition edge_partition(const Graph& g, const IntersectionArray& arr, int x, int y) {
  if (!g.adjacent(x, y)) fail(Errc::NotAdjacent, std::to_string(x) + " !~ " + std::to_string(y));
  EdgePartition p;
  p.x = x;
  p.y = y;
  p.d = arr.d();
  p.dist_x = bfs_distances(g, x);
  p.dist_y = bfs_distances(g, y);
  p.cells.assign(p.d + 1, std::vector<std::vector<int>>(p.d + 1));
  for (int z = 0; z < g.n; ++z) {
    int i = p.dist_x[z], j = p.dist_y[z];
    if (i > p.d || j > p.d) fail(Errc::NotDistanceRegular, "distance exceeds diameter");
    p.cells[i][j].push_back(z);
  }

  for (int i = 0; i <= p.d; ++i)
    for (int j = 0; j <= p.d; ++j) {
      long size = p.cell_size(i, j);
      if (std::abs(i - j) > 1 && size != 0)
        fail(Errc::Internal, "cell D_" + std::to_string(i) + "^" + std::to_string(j) +
                                 " nonempty in a graph with adjacent base pair");
      if (std::abs(i - j) > 1) continue;
      Integer want = 0;
      if (i == j)
        want = i == 0 ? Integer(0) : arr.p1_ii(i);
      else
        want = arr.p1_prev(std::max(i, j));
      if (i == 0 || j == 0) want = (i + j == 1) ? 1 : 0; // the base vertices themselves
      if (want != size)
        fail(Errc::Internal, "|D_" + std::to_string(i) + "^" + std::to_string(j) + "| = " +
                                 std::to_string(size) + " but p^1 gives " + want.get_str());
    }

  auto viols = bookkeeping_violations(g, arr, p);
  if (!viols.empty())
    fail(Errc::Internal, "neighbor bookkeeping failed: " + viols.front() + " (and " +
                             std::to_string(viols.size() - 1) + " more)");
  return p;
}

FValue compute_f(const Graph& g, const IntersectionArray& arr, const EdgePartition& p) {
  if (arr.a(1) == 0) fail(Errc::A1Zero, "f is undefined when a_1 = 0");
  const auto& d11 = p.cell(1, 1);
  FValue out;
  long pairs = 0, in11 = 0;
  for (int z : d11)
    for (int w : d11) {
      if (z == w) continue;
      if (g.adjacent(z, w))
        ++in11;
      else
        ++pairs;
    }
  out.pairs_at_distance2 = pairs;
  out.edges_in_11 = in11 / 2;
  out.f = Rational(pairs) / arr.a(1);

  long cross = 0;
  for (int z : d11) cross += p.count_into(g, z, 1, 2);
  out.edges_11_to_12 = cross;
  long in12 = 0;
  const auto& d12 = p.cell(1, 2);
  for (int z : d12)
    for (int w : g.adj[z])
      if (p.dist_x[w] == 1 && p.dist_y[w] == 2 && w > z) ++in12;
  out.edges_in_12 = in12;

  // the three counts are determined by f
  Rational a1 = rat(arr.a(1)), b1 = rat(arr.b(1));
  if (Rational(out.edges_11_to_12) != a1 * out.f)
    fail(Errc::Internal, "edge count D11-D12 != a_1 f");
  if (Rational(out.edges_in_11) != a1 * (a1 - 1 - out.f) / 2)
    fail(Errc::Internal, "edges inside D11 != a_1(a_1-1-f)/2");
  if (Rational(out.edges_in_12) != a1 * (b1 - out.f) / 2)
    fail(Errc::Internal, "edges inside D12 != a_1(b_1-f)/2");
  if (sgn(out.f) < 0 || out.f > a1 - 1 || out.f > b1)
    fail(Errc::Internal, "f out of range");
  return out;
}

} // namespace drgt
