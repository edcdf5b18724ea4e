#include "drgt/cosine.hpp"

#include "drgt/error.hpp"

namespace drgt {

std::vector<Rational> cosine_rational(const IntersectionArray& g, const Rational& theta) {
  return cosine_values<Rational>(g, theta, 1);
}

std::vector<QuadExt> cosine_quad(const IntersectionArray& g, const QuadExt& theta) {
  return cosine_values<QuadExt>(g, theta, QuadExt::constant(theta.field(), 1));
}

CosineSequence cosine_sequence(const IntersectionArray& g, const Scalar& theta) {
  return {theta, cosine_values<Scalar>(g, theta, Scalar(1))};
}

CosineSequence cosine_sequence(const IntersectionArray& g, const Eigenvalue& theta) {
  if (theta.quad) {
    auto vals = cosine_quad(g, *theta.quad);
    CosineSequence seq;
    seq.theta = theta.value;
    seq.sigma.reserve(vals.size());
    for (const auto& v : vals) seq.sigma.push_back(Scalar::from_quad(v));
    return seq;
  }
  return cosine_sequence(g, theta.value);
}

Scalar terminal_residual(const IntersectionArray& g, const CosineSequence& seq) {
  int d = g.d();
  return Scalar(rat(g.c(d))) * seq.sigma[d - 1] + Scalar(rat(g.a(d))) * seq.sigma[d] -
         seq.theta * seq.sigma[d];
}

BipartiteReport bipartite_test(const IntersectionArray& g, const Spectrum& s) {
  BipartiteReport r;
  r.a_all_zero = g.is_bipartite_array();

  auto seq = cosine_sequence(g, s.thetad());
  r.thetad_is_minus_k = s.thetad().value.eq(Scalar(rat(-g.k())));
  r.sigma1_is_minus_one = seq.sigma[1].eq(Scalar(rat(-1)));
  r.sigma2_is_one = g.d() >= 2 && seq.sigma[2].eq(Scalar(1));

  if (r.a_all_zero != r.thetad_is_minus_k || r.a_all_zero != r.sigma1_is_minus_one ||
      r.a_all_zero != r.sigma2_is_one)
    fail(Errc::InconsistentSpectrum, "bipartite equivalences disagree for {" + g.str() + "}");

  r.is_bipartite = r.a_all_zero;
  if (r.is_bipartite) {
    for (int i = 0; i <= g.d(); ++i) {
      Scalar want(rat(i % 2 == 0 ? 1 : -1));
      if (!seq.sigma[i].eq(want))
        fail(Errc::InconsistentSpectrum,
             "bipartite cosine sequence is not alternating +-1 for {" + g.str() + "}");
    }
  }
  return r;
}

} // namespace drgt
