#pragma once

#include "drgt/graph.hpp"
#include "drgt/intersection_array.hpp"
#include "drgt/quadratic.hpp"
#include "drgt/scalar.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace drgt {

/// One row of the worked-example table: the intersection array together with
/// the published theta_1, theta_d, cosine sequences, auxiliary parameter and
/// local strongly-regular data.  The Taylor instance (icosahedron) carries
/// its values exactly in Q(theta), theta^2 = 5.
struct CatalogEntry {
  std::string name;
  IntersectionArray array;

  Scalar theta1, thetad;
  std::vector<Scalar> sigma, rho;
  Scalar epsilon;

  struct LocalExpected {
    long nu, kappa, lambda, mu;
    Scalar r, s;
  } local;

  bool constructible = false;
  std::optional<std::array<long, 3>> at4;

  // exact quadratic data for the irrational row
  std::optional<QuadraticField> quad;
  std::vector<QuadExt> sigma_q, rho_q;
  std::optional<QuadExt> epsilon_q;
};

const std::vector<CatalogEntry>& catalog();

std::vector<const CatalogEntry*> catalog_list(bool constructible_only);

const CatalogEntry* catalog_find(const std::string& name);

/// Builds the actual graph of a constructible entry.
Graph construct_entry(const CatalogEntry& e);

struct FieldCheck {
  std::string field;
  bool pass;
  std::string detail;
};

struct ValidationReport {
  std::string name;
  std::vector<FieldCheck> checks;
  bool pass = true;
};

/// Recomputes every table column from the intersection array alone and
/// compares: spectrum, cosine sequences, epsilon, tightness with exact zero
/// slack, local SRG data, the AT4 label, and the product formula
/// rho_from_sigma(sigma, eps) = rho.
ValidationReport validate_entry(const CatalogEntry& e);

std::vector<ValidationReport> validate_catalog();

} // namespace drgt
