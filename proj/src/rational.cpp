#include "drgt/rational.hpp"

#include "drgt/error.hpp"

#include <cctype>

namespace drgt {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::InvalidArray: return "InvalidArray";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::MultiplicityNotIntegral: return "MultiplicityNotIntegral";
    case Errc::InconsistentSpectrum: return "InconsistentSpectrum";
    case Errc::AuxBoundViolation: return "AuxBoundViolation";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::A1Zero: return "A1Zero";
    case Errc::NotTight: return "NotTight";
    case Errc::TrivialEigenvalue: return "TrivialEigenvalue";
    case Errc::ParamOutOfRange: return "ParamOutOfRange";
    case Errc::NotDistanceRegular: return "NotDistanceRegular";
    case Errc::NotAdjacent: return "NotAdjacent";
    case Errc::FormulaMismatch: return "FormulaMismatch";
    case Errc::NotStronglyRegular: return "NotStronglyRegular";
    case Errc::ParseError: return "ParseError";
    case Errc::Disconnected: return "Disconnected";
    case Errc::Loop: return "Loop";
    case Errc::MultiEdge: return "MultiEdge";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

long to_long(const Rational& r) {
  if (!is_integer(r)) fail(Errc::NonIntegral, "not an integer: " + to_string(r));
  Integer n = r.get_num();
  if (!n.fits_slong_p()) fail(Errc::ParamOutOfRange, "integer too large: " + n.get_str());
  return n.get_si();
}

double to_double(const Rational& r) { return r.get_d(); }

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) return std::nullopt;

  auto is_int = [](const std::string& t) {
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!is_int(p) || !is_int(q)) return std::nullopt;
    Rational r;
    if (r.set_str(p + "/" + q, 10) != 0) return std::nullopt;
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
  }

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot), frac = s.substr(dot + 1);
    if (head.empty() || head == "-" || head == "+") head += "0";
    if (!is_int(head) || frac.empty() || !is_int(frac) || frac[0] == '-' || frac[0] == '+')
      return std::nullopt;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer hi(head), lo(frac);
    Integer num = hi * scale + (hi < 0 || head[0] == '-' ? -lo : lo);
    Rational r(num, scale);
    r.canonicalize();
    return r;
  }

  if (!is_int(s)) return std::nullopt;
  Rational r;
  if (r.set_str(s, 10) != 0) return std::nullopt;
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int sign(const Rational& r) { return sgn(r); }

} // namespace drgt
