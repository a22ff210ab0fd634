#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nvgroups/coset.hpp"
#include "nvgroups/tolerance.hpp"

namespace nvgroups {

// Outcome of one randomized axiom check on one coset space.
struct AxiomReport {
  std::string space;
  std::string axiom;  // identity | inverse | associativity | well_defined
  std::size_t trials = 0;
  std::size_t failures = 0;
  double max_deviation = 0.0;
  // Samples redrawn because canonicalization hit a near-tie.
  std::size_t warnings = 0;
  double tolerance = kAxiomTolerance;

  bool passed() const { return failures == 0; }
};

// mu(x, e) and mu(e, x) are n copies of x.
AxiomReport check_identity(const CosetSpace& space, std::size_t samples, std::uint64_t seed,
                           double tol = kAxiomTolerance);

// mu(x, inv(x)) and mu(inv(x), x) both contain e.
AxiomReport check_inverse(const CosetSpace& space, std::size_t samples, std::uint64_t seed,
                          double tol = kAxiomTolerance);

// mu(x, mu(y, z)) = mu(mu(x, y), z) in Sym^{n^2} X.
AxiomReport check_assoc(const CosetSpace& space, std::size_t triples, std::uint64_t seed,
                        double tol = kAxiomTolerance);

// mu does not depend on the representatives: for random g, h in G the products
// at (g(a), h(b)) agree with the product at (a, b), both through projected
// orbits and through the raw points.
AxiomReport check_well_defined(const CosetSpace& space, std::size_t samples, std::uint64_t seed,
                               double tol = kAxiomTolerance);

struct SuiteCounts {
  std::size_t identity = 200;
  std::size_t inverse = 200;
  std::size_t triples = 50;
  std::size_t well_defined = 100;
};

// Default counts; the icosahedral spaces get 20 triples.
SuiteCounts default_counts(const GroupSpec& spec);

// identity, inverse, associativity, well_defined in that order.
std::vector<AxiomReport> run_suite(const CosetSpace& space, const SuiteCounts& counts,
                                   std::uint64_t seed, double tol = kAxiomTolerance);

// A random point of W away from the singular set of the G-action.
UnitQuaternion sample_generic(const CosetSpace& space, Rng& rng);

}  // namespace nvgroups
