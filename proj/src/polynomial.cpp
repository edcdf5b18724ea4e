#include "drgt/polynomial.hpp"

#include "drgt/error.hpp"

#include <algorithm>
#include <deque>

namespace drgt {

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval_double(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * rat(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
  std::vector<Rational> r(c_);
  for (auto& x : r) x *= s;
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) fail(Errc::ZeroDenominator, "polynomial division by zero");
  std::vector<Rational> rem(c_);
  int dd = d.degree();
  int dn = degree();
  if (dn < dd) return {Poly{}, *this};
  std::vector<Rational> quo(dn - dd + 1, Rational(0));
  for (int i = dn; i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] / d.leading();
    quo[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::deflate(const Rational& root) const {
  // synthetic division by (x - root)
  if (is_zero()) return {};
  std::vector<Rational> q(c_.size() - 1);
  Rational carry = c_.back();
  for (int i = degree() - 1; i >= 0; --i) {
    q[i] = carry;
    carry = c_[i] + carry * root;
  }
  if (carry != 0) fail(Errc::Internal, "deflate: not a root");
  return Poly(std::move(q));
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& x : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  Integer num_gcd = 0;
  for (const auto& x : c_) {
    Integer scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) num_gcd = 1;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return *this * scale;
}

SturmChain::SturmChain(const Poly& p) {
  chain_.push_back(p.primitive());
  Poly d = p.derivative();
  if (!d.is_zero()) chain_.push_back(d.primitive());
  while (chain_.size() >= 2 && chain_.back().degree() >= 1) {
    auto [q, r] = chain_[chain_.size() - 2].divmod(chain_.back());
    (void)q;
    if (r.is_zero()) break; // p not squarefree; chain ends at the gcd
    chain_.push_back((r * rat(-1)).primitive());
  }
}

int SturmChain::variations(const Rational& x) const {
  int var = 0, prev = 0;
  for (const auto& f : chain_) {
    int s = sgn(f.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::count_roots(const Rational& lo, const Rational& hi) const {
  return variations(lo) - variations(hi);
}

Rational root_bound(const Poly& p) {
  if (p.degree() < 1) return 1;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p[i] / p.leading())));
  return m + 1;
}

std::vector<RootInterval> isolate_real_roots(const Poly& p) {
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  SturmChain chain(p);
  Rational bound = root_bound(p);
  std::deque<RootInterval> work{{-bound, bound}};
  while (!work.empty()) {
    auto iv = work.front();
    work.pop_front();
    int cnt = chain.count_roots(iv.lo, iv.hi);
    if (cnt == 0) continue;
    if (cnt == 1) {
      out.push_back(iv);
      continue;
    }
    // split at a non-root point so every interval isolates against p itself
    Rational mid = (iv.lo + iv.hi) / 2;
    while (p.eval(mid) == 0) mid = (mid + iv.hi) / 2;
    work.push_back({iv.lo, mid});
    work.push_back({mid, iv.hi});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

RootInterval refine_root(const Poly& p, RootInterval iv, const Rational& width) {
  if (iv.is_exact()) return iv;
  // (lo, hi] holds one simple root; the sign of p at hi tells which side of
  // the root any interior point lies on, so p(lo) is never needed (lo itself
  // may be a root belonging to the neighboring interval).
  Rational vhi = p.eval(iv.hi);
  if (vhi == 0) return {iv.hi, iv.hi};
  int shi = sgn(vhi);
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    Rational v = p.eval(mid);
    if (v == 0) return {mid, mid};
    if (sgn(v) == shi)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

} // namespace drgt
