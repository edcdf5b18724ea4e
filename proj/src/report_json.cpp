#include "drgt/report_json.hpp"

namespace drgt {

Json scalar_json(const Scalar& s) {
  if (s.exact()) return to_string(s.rational());
  return Json{{"value", s.value()}, {"error", s.error()}};
}

Json spectrum_json(const Spectrum& s) {
  Json eigs = Json::array();
  for (const auto& e : s.eigenvalues())
    eigs.push_back(Json{{"theta", scalar_json(e.value)}, {"multiplicity", e.multiplicity}});
  return eigs;
}

Json report_json(const IntersectionArray& g, const Spectrum& s, const TightnessReport& rep) {
  Json j;
  j["array"] = g.str();
  j["d"] = g.d();
  j["n"] = g.n().get_str();
  j["spectrum"] = spectrum_json(s);
  j["fb"] = Json{{"lhs", scalar_json(rep.fb.lhs)},
                 {"rhs", scalar_json(rep.fb.rhs)},
                 {"slack", scalar_json(rep.fb.slack)},
                 {"exact", rep.fb.exact}};
  j["classification"] = classification_name(rep.classification);
  if (rep.numerically_tight) j["numerically_tight"] = true;
  j["epsilon"] = rep.epsilon ? scalar_json(rep.epsilon->epsilon) : Json(nullptr);
  j["f_bounds"] = rep.f ? Json::array({scalar_json(rep.f->first), scalar_json(rep.f->second)})
                        : Json(nullptr);
  if (rep.local) {
    const auto& l = *rep.local;
    j["local_srg"] = Json{{"nu", scalar_json(l.nu)},         {"kappa", scalar_json(l.kappa)},
                          {"lambda", scalar_json(l.lambda)}, {"mu", scalar_json(l.mu)},
                          {"r", scalar_json(l.r)},           {"s", scalar_json(l.s)},
                          {"mult_r", scalar_json(l.mult_r)}, {"mult_s", scalar_json(l.mult_s)}};
  } else {
    j["local_srg"] = nullptr;
  }
  j["b_plus"] = scalar_json(rep.b_plus);
  j["b_minus"] = scalar_json(rep.b_minus);
  j["at4"] = rep.at4 ? Json::array({(*rep.at4)[0], (*rep.at4)[1], (*rep.at4)[2]}) : Json(nullptr);
  return j;
}

Json search_hit_json(const SearchHit& hit) {
  Json j;
  j["array"] = hit.array.str();
  j["slack"] = scalar_json(hit.slack);
  j["epsilon"] = scalar_json(hit.epsilon);
  j["theta1"] = scalar_json(hit.theta1);
  j["thetad"] = scalar_json(hit.thetad);
  if (hit.numerically_tight) j["numerically_tight"] = true;
  return j;
}

Json catalog_entry_json(const CatalogEntry& e) {
  Json j;
  j["name"] = e.name;
  j["array"] = e.array.str();
  j["theta1"] = scalar_json(e.theta1);
  j["thetad"] = scalar_json(e.thetad);
  Json sig = Json::array(), rho = Json::array();
  for (const auto& v : e.sigma) sig.push_back(scalar_json(v));
  for (const auto& v : e.rho) rho.push_back(scalar_json(v));
  j["sigma"] = sig;
  j["rho"] = rho;
  j["epsilon"] = scalar_json(e.epsilon);
  j["local_srg"] = Json{{"nu", e.local.nu},
                        {"kappa", e.local.kappa},
                        {"lambda", e.local.lambda},
                        {"mu", e.local.mu},
                        {"r", scalar_json(e.local.r)},
                        {"s", scalar_json(e.local.s)}};
  j["constructible"] = e.constructible;
  j["at4"] = e.at4 ? Json::array({(*e.at4)[0], (*e.at4)[1], (*e.at4)[2]}) : Json(nullptr);
  return j;
}

Json catalog_json() {
  Json arr = Json::array();
  for (const auto& e : catalog()) arr.push_back(catalog_entry_json(e));
  return arr;
}

Json validation_json(const std::vector<ValidationReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json jc{{"field", c.field}, {"pass", c.pass}};
      if (!c.detail.empty()) jc["detail"] = c.detail;
      checks.push_back(jc);
    }
    arr.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"checks", checks}});
  }
  return arr;
}

} // namespace drgt
