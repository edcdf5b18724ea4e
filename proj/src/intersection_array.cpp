#include "drgt/intersection_array.hpp"

#include "drgt/error.hpp"

#include <sstream>

namespace drgt {

std::optional<std::string> check_array(const std::vector<long>& b, const std::vector<long>& c) {
  if (b.size() != c.size() || b.size() < 2) return "need d >= 2 with |b| = |c| = d";
  int d = static_cast<int>(c.size());
  if (c[0] != 1) return "c_1 must be 1";
  for (int i = 0; i < d; ++i) {
    if (b[i] <= 0) return "b_" + std::to_string(i) + " must be positive";
    if (c[i] <= 0) return "c_" + std::to_string(i + 1) + " must be positive";
  }
  long k = b[0];
  long a1 = 0;
  bool middle_zero = false;
  for (int i = 1; i <= d; ++i) {
    long bi = i < d ? b[i] : 0;
    long ai = k - c[i - 1] - bi;
    if (ai < 0)
      return "a_" + std::to_string(i) + " = " + std::to_string(ai) + " negative";
    if (i == 1) a1 = ai;
    if (i < d && ai == 0) middle_zero = true;
  }
  if (a1 != 0 && middle_zero)
    return "a_1 != 0 but some middle a_i = 0 (not realizable)";
  // k_i integrality
  Integer ki = 1;
  for (int i = 0; i < d; ++i) {
    Integer num = ki * b[i];
    if (num % c[i] != 0)
      return "k_" + std::to_string(i + 1) + " not integral";
    ki = num / c[i];
  }
  return std::nullopt;
}

IntersectionArray::IntersectionArray(std::vector<long> b, std::vector<long> c)
    : b_(std::move(b)), c_(std::move(c)) {
  if (auto err = check_array(b_, c_)) {
    bool integrality = err->find("not integral") != std::string::npos;
    fail(integrality ? Errc::NonIntegral : Errc::InvalidArray,
         *err + " in {" + [&] {
           std::ostringstream os;
           for (size_t i = 0; i < b_.size(); ++i) os << (i ? "," : "") << b_[i];
           os << ";";
           for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
           return os.str();
         }() + "}");
  }
  int d = this->d();
  long k = b_[0];
  a_.assign(d + 1, 0);
  for (int i = 1; i <= d; ++i) a_[i] = k - this->c(i) - (i < d ? b_[i] : 0);
  ki_.assign(d + 1, Integer(1));
  for (int i = 0; i < d; ++i) ki_[i + 1] = ki_[i] * b_[i] / c_[i];
  n_ = 0;
  for (const auto& v : ki_) n_ += v;
}

IntersectionArray IntersectionArray::parse(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    fail(Errc::ParseError, "intersection array needs the form \"b0,...;c1,...\"");
  auto parse_list = [](const std::string& part) {
    std::vector<long> out;
    std::string token;
    std::istringstream is(part);
    while (std::getline(is, token, ',')) {
      auto r = parse_rational(token);
      if (!r || !is_integer(*r)) fail(Errc::ParseError, "bad integer '" + token + "'");
      out.push_back(to_long(*r));
    }
    if (out.empty()) fail(Errc::ParseError, "empty list in intersection array");
    return out;
  };
  return IntersectionArray(parse_list(text.substr(0, semi)), parse_list(text.substr(semi + 1)));
}

bool IntersectionArray::is_bipartite_array() const {
  for (long ai : a_)
    if (ai != 0) return false;
  return true;
}

Integer IntersectionArray::p1_ii(int i) const {
  // (b_1...b_{i-1} / c_1...c_i) * a_i; exact integer by Lemma-level counting
  Rational r = 1;
  for (int j = 1; j < i; ++j) r *= b_[j];
  for (int j = 1; j <= i; ++j) r /= c(j);
  r *= a_[i];
  if (!is_integer(r)) fail(Errc::NonIntegral, "p1_ii(" + std::to_string(i) + ") not integral");
  return r.get_num();
}

Integer IntersectionArray::p1_prev(int i) const {
  Rational r = 1;
  for (int j = 1; j < i; ++j) r *= b_[j];
  for (int j = 1; j < i; ++j) r /= c(j);
  if (!is_integer(r)) fail(Errc::NonIntegral, "p1_prev(" + std::to_string(i) + ") not integral");
  return r.get_num();
}

std::string IntersectionArray::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < b_.size(); ++i) os << (i ? "," : "") << b_[i];
  os << ";";
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  return os.str();
}

DerivedCounts derive_counts(const IntersectionArray& g) {
  DerivedCounts out;
  int d = g.d();
  out.a.resize(d + 1);
  out.k_i.resize(d + 1);
  for (int i = 0; i <= d; ++i) {
    out.a[i] = g.a(i);
    out.k_i[i] = g.k_i(i);
  }
  out.n = g.n();
  out.p1_ii.resize(d + 1);
  out.p1_prev.resize(d + 1);
  for (int i = 1; i <= d; ++i) {
    out.p1_ii[i] = g.p1_ii(i);
    out.p1_prev[i] = g.p1_prev(i);
  }
  return out;
}

} // namespace drgt
