#include "drgt/tight_edge.hpp"

#include "drgt/cosine.hpp"

#include <cmath>

namespace drgt {

namespace {

template <class F>
F gram_expr(const IntersectionArray& arr, const std::vector<F>& sig, const Rational& f,
            const F& one) {
  const F& s1 = sig[1];
  const F& s2 = sig[2];
  return (s1 - s2) * (one + s1) * f - (one - s1) * (s1 * rat(arr.a(1)) + one + s1);
}

} // namespace

TightEdgeResult tight_edge_test(const Graph& g, const IntersectionArray& arr, const Spectrum& s,
                                int x, int y, int index) {
  if (index <= 0 || index > arr.d())
    fail(Errc::TrivialEigenvalue, "tightness is defined for nontrivial eigenvalues only");
  if (arr.a(1) == 0) fail(Errc::A1Zero, "tight edges need a_1 != 0");

  auto part = edge_partition(g, arr, x, y);
  Rational f = compute_f(g, arr, part).f;
  const Eigenvalue& ev = s.theta(index);

  TightEdgeResult out;
  Scalar expr;
  if (ev.quad) {
    auto sig = cosine_quad(arr, *ev.quad);
    QuadExt one = QuadExt::constant(ev.quad->field(), 1);
    QuadExt e = gram_expr<QuadExt>(arr, sig, f, one);
    expr = Scalar::from_quad(e);
    out.is_tight = e.is_zero();
  } else if (ev.value.exact()) {
    auto sig = cosine_rational(arr, ev.value.rational());
    Rational e = gram_expr<Rational>(arr, sig, f, 1);
    expr = Scalar(e);
    out.is_tight = e == 0;
  } else {
    auto sig = cosine_values<Scalar>(arr, ev.value, Scalar(1));
    expr = gram_expr<Scalar>(arr, sig, f, Scalar(1));
    out.is_tight = expr.sign_tol() == 0;
  }

  // det(G) = m^3 a_1 |X|^-3 (sigma - 1) * expr
  Scalar m(rat(ev.multiplicity));
  Scalar sigma = ev.value / Scalar(rat(arr.k()));
  Scalar scale = m * m * m * Scalar(rat(arr.a(1))) /
                 (Scalar(Rational(arr.n())) * Scalar(Rational(arr.n())) * Scalar(Rational(arr.n())));
  out.gram_det = scale * (sigma - Scalar(1)) * expr;
  return out;
}

int numeric_rank(std::vector<std::vector<double>> rows, double threshold) {
  if (rows.empty()) return 0;
  size_t ncols = rows[0].size();
  // column normalization
  for (size_t j = 0; j < ncols; ++j) {
    double norm = 0;
    for (auto& r : rows) norm += r[j] * r[j];
    norm = std::sqrt(norm);
    if (norm > 0)
      for (auto& r : rows) r[j] /= norm;
  }
  int rank = 0;
  size_t col = 0;
  for (size_t pivot_row = 0; pivot_row < rows.size() && col < ncols; ++col) {
    size_t best = pivot_row;
    for (size_t r = pivot_row + 1; r < rows.size(); ++r)
      if (std::fabs(rows[r][col]) > std::fabs(rows[best][col])) best = r;
    if (std::fabs(rows[best][col]) <= threshold) continue;
    std::swap(rows[pivot_row], rows[best]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row) continue;
      double factor = rows[r][col] / rows[pivot_row][col];
      if (factor == 0) continue;
      for (size_t j = col; j < ncols; ++j) rows[r][j] -= factor * rows[pivot_row][j];
    }
    ++rank;
    ++pivot_row;
  }
  return rank;
}

int exact_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  size_t ncols = rows[0].size();
  int rank = 0;
  size_t col = 0;
  for (size_t pivot_row = 0; pivot_row < rows.size() && col < ncols; ++col) {
    size_t pick = pivot_row;
    while (pick < rows.size() && rows[pick][col] == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[pivot_row], rows[pick]);
    for (size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[pivot_row][col];
      for (size_t j = col; j < ncols; ++j) rows[r][j] -= factor * rows[pivot_row][j];
    }
    ++rank;
    ++pivot_row;
  }
  return rank;
}

TightnessRank tightness_rank(const Graph& g, const IntersectionArray& arr, const Spectrum& s,
                             int x, int y) {
  if (arr.a(1) == 0) fail(Errc::A1Zero, "tightness rank needs a_1 != 0");
  auto part = edge_partition(g, arr, x, y);
  int d = arr.d();

  // rows A_i x^, A_i y^, A_i w over i = 0..d, computed from BFS shells
  const auto& d11 = part.cell(1, 1);
  std::vector<std::vector<int>> dist_z;
  dist_z.reserve(d11.size());
  for (int z : d11) dist_z.push_back(bfs_distances(g, z));

  std::vector<std::vector<double>> rows;
  std::vector<std::vector<Rational>> rows_exact;
  for (int i = 0; i <= d; ++i) {
    std::vector<double> rx(g.n, 0), ry(g.n, 0), rw(g.n, 0);
    std::vector<Rational> ex(g.n, Rational(0)), ey(g.n, Rational(0)), ew(g.n, Rational(0));
    for (int u = 0; u < g.n; ++u) {
      if (part.dist_x[u] == i) rx[u] = 1, ex[u] = 1;
      if (part.dist_y[u] == i) ry[u] = 1, ey[u] = 1;
      long cnt = 0;
      for (const auto& dz : dist_z)
        if (dz[u] == i) ++cnt;
      rw[u] = static_cast<double>(cnt);
      ew[u] = cnt;
    }
    rows.push_back(std::move(rx));
    rows.push_back(std::move(ry));
    rows.push_back(std::move(rw));
    rows_exact.push_back(std::move(ex));
    rows_exact.push_back(std::move(ey));
    rows_exact.push_back(std::move(ew));
  }

  TightnessRank out;
  out.dim_mh = numeric_rank(std::move(rows));
  int exact = exact_rank(std::move(rows_exact));
  if (exact != out.dim_mh)
    fail(Errc::Internal, "numeric rank " + std::to_string(out.dim_mh) +
                             " disagrees with exact rank " + std::to_string(exact));
  out.t = 3 * d + 1 - out.dim_mh;

  int tight_count = 0;
  if (tight_edge_test(g, arr, s, x, y, 1).is_tight) ++tight_count;
  if (tight_edge_test(g, arr, s, x, y, d).is_tight) ++tight_count;
  if (tight_count != out.t)
    fail(Errc::Internal, "rank tightness t=" + std::to_string(out.t) + " but " +
                             std::to_string(tight_count) + " extremal eigenvalues test tight");
  return out;
}

} // namespace drgt
