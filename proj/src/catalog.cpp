#include "drgt/catalog.hpp"

#include "drgt/cosine.hpp"
#include "drgt/error.hpp"
#include "drgt/spectrum.hpp"
#include "drgt/tightness.hpp"

#include <sstream>

namespace drgt {

namespace {

Rational R(const std::string& s) {
  auto r = parse_rational(s);
  if (!r) fail(Errc::Internal, "bad catalog rational " + s);
  return *r;
}

std::vector<Scalar> scalars(const std::string& csv) {
  std::vector<Scalar> out;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(Scalar(R(tok)));
  return out;
}

CatalogEntry rational_entry(const std::string& name, const std::string& array, long t1, long td,
                            const std::string& sig, const std::string& rho, const std::string& eps,
                            CatalogEntry::LocalExpected local, bool constructible,
                            std::optional<std::array<long, 3>> at4) {
  CatalogEntry e{name,
                 IntersectionArray::parse(array),
                 Scalar(rat(t1)),
                 Scalar(rat(td)),
                 scalars(sig),
                 scalars(rho),
                 Scalar(R(eps)),
                 local,
                 constructible,
                 at4,
                 std::nullopt,
                 {},
                 {},
                 std::nullopt};
  return e;
}

CatalogEntry icosahedron_entry() {
  // Taylor instance: k = 5, c_2 = 2; theta_1, theta_d are the roots of
  // x^2 - 5, handled exactly in Q(theta)
  QuadraticField f{0, 5};
  QuadExt th = QuadExt::generator(f);
  QuadExt one = QuadExt::constant(f, 1);
  auto fifth = [&](long num) { return th * Rational(num, 5); };

  std::vector<QuadExt> sigma_q{one, fifth(1), -fifth(1), -one};
  std::vector<QuadExt> rho_q{one, -fifth(1), fifth(1), -one};
  std::vector<Scalar> sigma, rho;
  for (const auto& v : sigma_q) sigma.push_back(Scalar::from_quad(v));
  for (const auto& v : rho_q) rho.push_back(Scalar::from_quad(v));

  CatalogEntry e{"icosahedron",
                 IntersectionArray::parse("5,2,1;1,2,5"),
                 Scalar::from_quad(th),
                 Scalar::from_quad(-th),
                 std::move(sigma),
                 std::move(rho),
                 Scalar::from_quad(fifth(3)),
                 {5, 2, 0, 1, Scalar::from_quad((th - rat(1)) / rat(2)),
                  Scalar::from_quad((-th - rat(1)) / rat(2))},
                 true,
                 std::nullopt,
                 f,
                 sigma_q,
                 rho_q,
                 fifth(3)};
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> v;
  v.push_back(rational_entry("J(6,3)", "9,4,1;1,4,9", 3, -3, "1,1/3,-1/3,-1", "1,-1/3,1/3,-1",
                             "5/3", {9, 4, 1, 2, Scalar(1), Scalar(-2)}, true, std::nullopt));
  v.push_back(rational_entry("J(8,4)", "16,9,4,1;1,4,9,16", 8, -4, "1,1/2,0,-1/2,-1",
                             "1,-1/4,1/6,-1/4,1", "3/2", {16, 6, 2, 2, Scalar(2), Scalar(-2)},
                             true, std::array<long, 3>{2, 2, 2}));
  v.push_back(rational_entry("J(10,5)", "25,16,9,4,1;1,4,9,16,25", 15, -5,
                             "1,3/5,1/5,-1/5,-3/5,-1", "1,-1/5,1/10,-1/10,1/5,-1", "7/5",
                             {25, 8, 3, 2, Scalar(3), Scalar(-2)}, true, std::nullopt));
  v.push_back(rational_entry("1/2H(6,2)", "15,6,1;1,6,15", 5, -3, "1,1/3,-1/3,-1",
                             "1,-1/5,1/5,-1", "2", {15, 8, 4, 4, Scalar(2), Scalar(-2)}, true,
                             std::nullopt));
  v.push_back(rational_entry("1/2H(8,2)", "28,15,6,1;1,6,15,28", 14, -4, "1,1/2,0,-1/2,-1",
                             "1,-1/7,3/35,-1/7,1", "5/3", {28, 12, 6, 4, Scalar(4), Scalar(-2)},
                             true, std::array<long, 3>{4, 2, 2}));
  v.push_back(rational_entry("1/2H(10,2)", "45,28,15,6,1;1,6,15,28,45", 27, -5,
                             "1,3/5,1/5,-1/5,-3/5,-1", "1,-1/9,1/21,-1/21,1/9,-1", "3/2",
                             {45, 16, 8, 4, Scalar(6), Scalar(-2)}, true, std::nullopt));
  v.push_back(icosahedron_entry());
  v.push_back(rational_entry("3.Sym(7)", "10,6,4,1;1,2,6,10", 5, -4, "1,1/2,0,-1/4,-1/2",
                             "1,-2/5,3/10,-2/5,1", "4/3", {10, 3, 0, 1, Scalar(1), Scalar(-2)},
                             false, std::array<long, 3>{1, 2, 3}));
  v.push_back(rational_entry("3.O6-(3)", "45,32,12,1;1,6,32,45", 15, -9, "1,1/3,0,-1/6,-1/2",
                             "1,-1/5,1/10,-1/5,1", "2", {45, 12, 3, 3, Scalar(3), Scalar(-3)},
                             false, std::array<long, 3>{3, 3, 3}));
  v.push_back(rational_entry("3.O7(3)", "117,80,24,1;1,12,80,117", 39, -9, "1,1/3,0,-1/6,-1/2",
                             "1,-1/13,2/65,-1/13,1", "5/2", {117, 36, 15, 9, Scalar(9), Scalar(-3)},
                             false, std::array<long, 3>{9, 3, 3}));
  v.push_back(rational_entry("3.Fi24-", "31671,28160,2160,1;1,1080,28160,31671", 3519, -81,
                             "1,1/9,0,-1/18,-1/2", "1,-1/391,5/17204,-1/391,1", "44/5",
                             {31671, 3510, 693, 351, Scalar(351), Scalar(-9)}, false,
                             std::array<long, 3>{351, 9, 3}));
  v.push_back(rational_entry("Soicher1", "56,45,16,1;1,8,45,56", 14, -16, "1,1/4,0,-1/8,-1/2",
                             "1,-2/7,1/7,-2/7,1", "2", {56, 10, 0, 2, Scalar(2), Scalar(-4)},
                             false, std::array<long, 3>{2, 4, 3}));
  v.push_back(rational_entry("Soicher2", "416,315,64,1;1,32,315,416", 104, -16, "1,1/4,0,-1/8,-1/2",
                             "1,-1/26,1/91,-1/26,1", "7/2", {416, 100, 36, 20, Scalar(20), Scalar(-4)},
                             false, std::array<long, 3>{20, 4, 3}));
  v.push_back(rational_entry("Meixner1", "176,135,24,1;1,24,135,176", 44, -16, "1,1/4,0,-1/4,-1",
                             "1,-1/11,1/33,-1/11,1", "3", {176, 40, 12, 8, Scalar(8), Scalar(-4)},
                             false, std::array<long, 3>{8, 4, 2}));
  v.push_back(rational_entry("Meixner2", "176,135,36,1;1,12,135,176", 44, -16, "1,1/4,0,-1/12,-1/3",
                             "1,-1/11,1/33,-1/11,1", "3", {176, 40, 12, 8, Scalar(8), Scalar(-4)},
                             false, std::array<long, 3>{8, 4, 4}));
  v.push_back(rational_entry("Patterson", "280,243,144,10;1,8,90,280", 80, -28,
                             "1,2/7,1/21,-2/63,-1/9", "1,-1/10,1/45,-1/54,5/27", "8/3",
                             {280, 36, 8, 4, Scalar(8), Scalar(-4)}, false, std::nullopt));
  return v;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::vector<const CatalogEntry*> catalog_list(bool constructible_only) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog())
    if (!constructible_only || e.constructible) out.push_back(&e);
  return out;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

Graph construct_entry(const CatalogEntry& e) {
  if (!e.constructible) fail(Errc::ParamOutOfRange, e.name + " is not constructible");
  if (e.name == "J(6,3)") return johnson_graph(6, 3);
  if (e.name == "J(8,4)") return johnson_graph(8, 4);
  if (e.name == "J(10,5)") return johnson_graph(10, 5);
  if (e.name == "1/2H(6,2)") return halved_cube_graph(6);
  if (e.name == "1/2H(8,2)") return halved_cube_graph(8);
  if (e.name == "1/2H(10,2)") return halved_cube_graph(10);
  if (e.name == "icosahedron") return icosahedron_graph();
  fail(Errc::ParamOutOfRange, "no constructor for " + e.name);
}

namespace {

void check(ValidationReport& rep, const std::string& field, bool pass,
           const std::string& detail = "") {
  rep.checks.push_back({field, pass, detail});
  if (!pass) rep.pass = false;
}

std::string seq_str(const std::vector<Scalar>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

} // namespace

ValidationReport validate_entry(const CatalogEntry& e) {
  ValidationReport rep;
  rep.name = e.name;
  const auto& g = e.array;

  Spectrum s = spectrum(g);
  check(rep, "theta1", s.theta1().value.eq(e.theta1),
        s.theta1().value.str() + " vs " + e.theta1.str());
  check(rep, "thetad", s.thetad().value.eq(e.thetad),
        s.thetad().value.str() + " vs " + e.thetad.str());

  auto sig = cosine_sequence(g, s.theta1());
  auto rho = cosine_sequence(g, s.thetad());
  bool sig_ok = true, rho_ok = true;
  for (int i = 0; i <= g.d(); ++i) {
    sig_ok = sig_ok && sig.sigma[i].eq(e.sigma[i]);
    rho_ok = rho_ok && rho.sigma[i].eq(e.rho[i]);
  }
  check(rep, "sigma", sig_ok, seq_str(sig.sigma));
  check(rep, "rho", rho_ok, seq_str(rho.sigma));

  auto cls = classify(g, s);
  check(rep, "tight",
        cls.classification == Classification::Tight && cls.fb.exact &&
            cls.fb.slack.rational() == 0,
        std::string(classification_name(cls.classification)) + ", slack " + cls.fb.slack.str());

  auto eps = auxiliary_parameter(g, s);
  check(rep, "epsilon", eps.epsilon.eq(e.epsilon), eps.epsilon.str() + " vs " + e.epsilon.str());

  // product formula reproduces the second table sequence, exactly
  if (e.quad) {
    auto rho_prod = rho_from_sigma_values<QuadExt>(e.sigma_q, *e.epsilon_q,
                                                   QuadExt::constant(*e.quad, 1));
    bool ok = true;
    for (size_t i = 0; i < rho_prod.size(); ++i) ok = ok && rho_prod[i] == e.rho_q[i];
    check(rep, "rho_from_sigma", ok);
  } else {
    std::vector<Rational> sig_r, rho_r;
    for (const auto& x : e.sigma) sig_r.push_back(x.rational());
    for (const auto& x : e.rho) rho_r.push_back(x.rational());
    auto rho_prod = rho_from_sigma_values<Rational>(sig_r, e.epsilon.rational(), 1);
    check(rep, "rho_from_sigma", rho_prod == rho_r);
  }

  auto local = local_srg(g, s);
  bool local_ok = local.nu.eq(Scalar(rat(e.local.nu))) &&
                  local.kappa.eq(Scalar(rat(e.local.kappa))) &&
                  local.lambda.eq(Scalar(rat(e.local.lambda))) &&
                  local.mu.eq(Scalar(rat(e.local.mu))) && local.r.eq(e.local.r) &&
                  local.s.eq(e.local.s);
  check(rep, "local_srg", local_ok,
        "(" + local.nu.str() + "," + local.kappa.str() + "," + local.lambda.str() + "," +
            local.mu.str() + "), r=" + local.r.str() + ", s=" + local.s.str());

  auto at4 = at4_label(g, s, local);
  check(rep, "at4", at4 == e.at4);

  bool ad_ok = g.a(g.d()) == 0;
  bool middle_ok = true;
  for (int i = 1; i <= g.d() - 1; ++i) middle_ok = middle_ok && g.a(i) != 0;
  check(rep, "a_d=0", ad_ok);
  check(rep, "middle a_i != 0", middle_ok);

  check(rep, "theta1 feasible", feasibility(sig, s));
  return rep;
}

std::vector<ValidationReport> validate_catalog() {
  std::vector<ValidationReport> out;
  for (const auto& e : catalog()) out.push_back(validate_entry(e));
  return out;
}

} // namespace drgt
