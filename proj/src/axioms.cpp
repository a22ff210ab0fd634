#include "nvgroups/axioms.hpp"

#include <algorithm>
#include <limits>

namespace nvgroups {
namespace {

constexpr int kMaxRedraws = 16;

enum Stream : std::uint64_t { kIdentity = 1, kInverse = 2, kAssoc = 3, kWellDefined = 4 };

AxiomReport make_report(const CosetSpace& space, const char* axiom, double tol) {
  AxiomReport r;
  r.space = space.descriptor();
  r.axiom = axiom;
  r.tolerance = tol;
  return r;
}

bool any_tie(const OrbitMultiset& m) { return m.tie_warnings() > 0; }

struct TrialOutcome {
  bool tie = false;
  double deviation = 0.0;
  bool ok = true;
};

// Redraws a trial while it reports a tie, up to kMaxRedraws times.
template <typename Trial>
void run_trials(AxiomReport& report, std::size_t count, Trial&& trial) {
  for (std::size_t t = 0; t < count; ++t) {
    TrialOutcome out = trial();
    for (int redraw = 0; out.tie && redraw < kMaxRedraws; ++redraw) {
      ++report.warnings;
      out = trial();
    }
    ++report.trials;
    if (out.ok) {
      report.max_deviation = std::max(report.max_deviation, out.deviation);
    } else {
      ++report.failures;
    }
  }
}

}  // namespace

UnitQuaternion sample_generic(const CosetSpace& space, Rng& rng) {
  for (;;) {
    UnitQuaternion w = random_unit(rng);
    if (space.base() == Base::SO3) w = canonical_sign(w);
    if (space.is_generic(w)) return w;
  }
}

AxiomReport check_identity(const CosetSpace& space, std::size_t samples, std::uint64_t seed,
                           double tol) {
  AxiomReport report = make_report(space, "identity", tol);
  Rng rng(seed, kIdentity);
  const Orbit e = space.identity();
  run_trials(report, samples, [&] {
    const Orbit x = space.project(sample_generic(space, rng));
    const OrbitMultiset left = space.mu(e, x);
    const OrbitMultiset right = space.mu(x, e);
    TrialOutcome out{x.tie || any_tie(left) || any_tie(right), 0.0, true};
    for (const auto* m : {&left, &right}) {
      for (const auto& item : m->items) {
        double d = space.point_distance(item.rep, x.rep);
        if (d > tol) d = std::min(d, space.orbit_distance(item, x));
        out.deviation = std::max(out.deviation, d);
      }
    }
    out.ok = left.size() == space.n() && right.size() == space.n() && out.deviation <= tol;
    return out;
  });
  return report;
}

AxiomReport check_inverse(const CosetSpace& space, std::size_t samples, std::uint64_t seed,
                          double tol) {
  AxiomReport report = make_report(space, "inverse", tol);
  Rng rng(seed, kInverse);
  const Orbit e = space.identity();
  const auto nearest_to_e = [&](const OrbitMultiset& m) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& item : m.items) best = std::min(best, space.point_distance(item.rep, e.rep));
    return best;
  };
  run_trials(report, samples, [&] {
    const Orbit x = space.project(sample_generic(space, rng));
    const Orbit xi = space.inv(x);
    const OrbitMultiset left = space.mu(x, xi);
    const OrbitMultiset right = space.mu(xi, x);
    TrialOutcome out{x.tie || xi.tie || any_tie(left) || any_tie(right), 0.0, true};
    out.deviation = std::max(nearest_to_e(left), nearest_to_e(right));
    out.ok = out.deviation <= tol;
    return out;
  });
  return report;
}

AxiomReport check_assoc(const CosetSpace& space, std::size_t triples, std::uint64_t seed,
                        double tol) {
  AxiomReport report = make_report(space, "associativity", tol);
  Rng rng(seed, kAssoc);
  run_trials(report, triples, [&] {
    const Orbit x = space.project(sample_generic(space, rng));
    const Orbit y = space.project(sample_generic(space, rng));
    const Orbit z = space.project(sample_generic(space, rng));
    const OrbitMultiset left = space.mu_left(x, y, z);
    const OrbitMultiset right = space.mu_right(x, y, z);
    const MatchResult m = space.match(left, right, tol);
    return TrialOutcome{any_tie(left) || any_tie(right), m.max_distance, m.matched};
  });
  return report;
}

AxiomReport check_well_defined(const CosetSpace& space, std::size_t samples, std::uint64_t seed,
                               double tol) {
  AxiomReport report = make_report(space, "well_defined", tol);
  Rng rng(seed, kWellDefined);
  run_trials(report, samples, [&] {
    const UnitQuaternion a = sample_generic(space, rng);
    const UnitQuaternion b = sample_generic(space, rng);
    const UnitQuaternion ga = space.act(rng.index(space.n()), a);
    const UnitQuaternion hb = space.act(rng.index(space.n()), b);

    const OrbitMultiset reference = space.mu(space.project(a), space.project(b));
    const OrbitMultiset projected = space.mu(space.project(ga), space.project(hb));
    const OrbitMultiset raw = space.mu_points(ga, hb);

    const MatchResult m1 = space.match(projected, reference, tol);
    const MatchResult m2 = space.match(raw, reference, tol);
    const bool tie = any_tie(reference) || any_tie(projected) || any_tie(raw);
    return TrialOutcome{tie, std::max(m1.max_distance, m2.max_distance),
                        m1.matched && m2.matched};
  });
  return report;
}

SuiteCounts default_counts(const GroupSpec& spec) {
  SuiteCounts counts;
  if (spec.family == Family::Icosahedral) counts.triples = 20;
  return counts;
}

std::vector<AxiomReport> run_suite(const CosetSpace& space, const SuiteCounts& counts,
                                   std::uint64_t seed, double tol) {
  return {
      check_identity(space, counts.identity, seed, tol),
      check_inverse(space, counts.inverse, seed, tol),
      check_assoc(space, counts.triples, seed, tol),
      check_well_defined(space, counts.well_defined, seed, tol),
  };
}

}  // namespace nvgroups
