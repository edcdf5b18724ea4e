#include "drgt/families.hpp"

#include "drgt/error.hpp"

namespace drgt {

IntersectionArray johnson_array(int n, int d) {
  if (d < 2 || n < 2 * d) fail(Errc::ParamOutOfRange, "johnson_array needs n >= 2d >= 4");
  std::vector<long> b(d), c(d);
  for (int i = 0; i < d; ++i) b[i] = static_cast<long>(d - i) * (n - d - i);
  for (int i = 1; i <= d; ++i) c[i - 1] = static_cast<long>(i) * i;
  return {b, c};
}

IntersectionArray hamming_array(int d, int q) {
  if (d < 2 || q < 2) fail(Errc::ParamOutOfRange, "hamming_array needs d >= 2, q >= 2");
  std::vector<long> b(d), c(d);
  for (int i = 0; i < d; ++i) b[i] = static_cast<long>(d - i) * (q - 1);
  for (int i = 1; i <= d; ++i) c[i - 1] = i;
  return {b, c};
}

IntersectionArray halved_cube_array(int d) {
  if (d < 2) fail(Errc::ParamOutOfRange, "halved_cube_array needs d >= 2");
  std::vector<long> b(d), c(d);
  for (int i = 0; i < d; ++i) b[i] = static_cast<long>(d - i) * (2 * d - 2 * i - 1);
  for (int i = 1; i <= d; ++i) c[i - 1] = static_cast<long>(i) * (2 * i - 1);
  return {b, c};
}

IntersectionArray folded_cube_array(int m) {
  if (m < 5) fail(Errc::ParamOutOfRange, "folded_cube_array needs m >= 5");
  int d = m / 2;
  std::vector<long> b(d), c(d);
  for (int i = 0; i < d; ++i) b[i] = m - i;
  for (int i = 1; i <= d; ++i) c[i - 1] = i;
  if (m % 2 == 0) c[d - 1] = m; // antipodal fold doubles the last step
  return {b, c};
}

IntersectionArray odd_graph_array(int m) {
  if (m < 3) fail(Errc::ParamOutOfRange, "odd_graph_array needs m >= 3");
  int d = m - 1;
  std::vector<long> b(d), c(d);
  for (int i = 0; i < d; ++i) b[i] = m - (i + 1) / 2;
  for (int i = 1; i <= d; ++i) c[i - 1] = (i + 1) / 2;
  return {b, c};
}

IntersectionArray doubled_odd_array() { return IntersectionArray::parse("3,2,2,1,1;1,1,2,2,3"); }

IntersectionArray crown_array(int m) {
  if (m < 3) fail(Errc::ParamOutOfRange, "crown_array needs m >= 3");
  return {{m - 1, m - 2, 1}, {1, m - 2, m - 1}};
}

IntersectionArray taylor_array(long k, long c2) {
  if (c2 < 1 || c2 >= k - 1) fail(Errc::ParamOutOfRange, "taylor_array needs 1 <= c2 < k-1");
  return {{k, c2, 1}, {1, c2, k}};
}

IntersectionArray cycle_array(int n) {
  if (n < 6) fail(Errc::ParamOutOfRange, "cycle_array needs n >= 6");
  int d = n / 2;
  std::vector<long> b(d, 1), c(d, 1);
  b[0] = 2;
  if (n % 2 == 0) c[d - 1] = 2;
  return {b, c};
}

std::vector<IntersectionArray> realizable_pool(int dmin, int dmax, long max_k) {
  std::vector<IntersectionArray> pool;
  auto take = [&](const IntersectionArray& a) {
    if (a.d() >= dmin && a.d() <= dmax && a.k() <= max_k) pool.push_back(a);
  };

  for (int d = dmin; d <= dmax; ++d) {
    for (int q = 2; static_cast<long>(d) * (q - 1) <= max_k; ++q) take(hamming_array(d, q));
    for (int n = 2 * d; static_cast<long>(d) * (n - d) <= max_k; ++n) take(johnson_array(n, d));
    take(halved_cube_array(d));
  }
  for (int m = 5; m <= 2 * dmax + 1; ++m)
    if (m / 2 >= dmin) take(folded_cube_array(m));
  for (int m = dmin + 1; m <= dmax + 1; ++m) take(odd_graph_array(m));
  if (dmin <= 5 && 5 <= dmax) take(doubled_odd_array());
  for (int m = 4; m - 1 <= max_k; ++m)
    if (dmin <= 3 && 3 <= dmax) take(crown_array(m));
  // Taylor graphs with a known regular two-graph: the icosahedron, J(6,3),
  // 1/2 H(6,2), the Gosset graph, and the Paley conference family
  if (dmin <= 3 && 3 <= dmax) {
    take(taylor_array(5, 2));
    take(taylor_array(9, 4));
    take(taylor_array(15, 6));
    take(taylor_array(27, 10));
    for (long q : {13L, 17L, 25L, 29L, 37L}) take(taylor_array(q, (q - 1) / 2));
  }
  for (int n = 2 * dmin; n <= 2 * dmax + 1; ++n)
    if (n >= 6 && n / 2 >= dmin && n / 2 <= dmax) take(cycle_array(n));
  // the one sporadic tight example small enough for the box
  if (dmin <= 4 && 4 <= dmax && max_k >= 10) take(IntersectionArray::parse("10,6,4,1;1,2,6,10"));
  return pool;
}

} // namespace drgt
