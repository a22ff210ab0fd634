// nvgroups: coset n-valued groups Sp(1)/G and SO(3)/G from the command line.
//
//   nvgroups generate T --base sp1
//   nvgroups mul C2 --base sp1 0,1,0,0 0,0,1,0
//   nvgroups verify I --base sp1 --triples 20 --seed 7
//   nvgroups verify --all --json
//   nvgroups classify C5 --base so3

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nvgroups/axioms.hpp"
#include "nvgroups/coset.hpp"
#include "nvgroups/errors.hpp"
#include "nvgroups/serialize.hpp"
#include "nvgroups/topology.hpp"

using namespace nvgroups;
using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string spec;
  std::string base;
  bool json = false;
  bool all = false;
  std::uint64_t seed = 0;
  std::optional<std::size_t> samples;
  std::optional<std::size_t> triples;
  double tol = kAxiomTolerance;
  std::string point_a;
  std::string point_b;
};

std::string fmt(double v, int precision = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, round12(v));
  return buf;
}

std::string fmt_sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string fmt_quat(const Quaternion& q) {
  return "[" + fmt(q.w) + ", " + fmt(q.x) + ", " + fmt(q.y) + ", " + fmt(q.z) + "]";
}

// "w,x,y,z" -> unit quaternion. Near-unit input is normalized with a warning;
// zero or clearly non-unit input is rejected.
UnitQuaternion parse_point(const std::string& text) {
  std::vector<double> c;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (field.empty() || end != field.c_str() + field.size() || !std::isfinite(v)) {
      throw ParseError("bad coordinate '" + field + "' in point '" + text + "'");
    }
    c.push_back(v);
  }
  if (c.size() != 4) throw ParseError("point '" + text + "' must have 4 coordinates w,x,y,z");
  const Quaternion q{c[0], c[1], c[2], c[3]};
  const double n = q.norm();
  if (n < 1e-12) throw ParseError("point '" + text + "' is the zero quaternion");
  if (std::abs(n - 1) >= 1e-3) {
    throw ParseError("point '" + text + "' has norm " + fmt_sci(n) + ", not a unit quaternion");
  }
  if (std::abs(n - 1) > kUnitEps) {
    std::cerr << "warning: normalized point '" << text << "' (norm " << std::to_string(n) << ")\n";
  }
  return UnitQuaternion(q);
}

std::vector<GroupSpec> specs_for(const Options& o) {
  if (o.all) return catalog();
  if (o.spec.empty()) throw ParseError("a group spec (C<n>, D<m>, T, O, I) or --all is required");
  return {GroupSpec::parse(o.spec)};
}

std::vector<Base> bases_for(const Options& o, bool both_by_default) {
  if (!o.base.empty()) return {parse_base(o.base)};
  if (both_by_default) return {Base::Sp1, Base::SO3};
  return {Base::Sp1};
}

int cmd_generate(const Options& o) {
  const Base base = bases_for(o, false).front();
  const RotationGroup g = build_group(GroupSpec::parse(o.spec));
  if (o.json) {
    json out = group_json(g);
    out["base"] = to_string(base);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "group " << g.spec().name() << "  n = " << g.order() << "  cover = " << g.cover().size()
            << "  base = " << to_string(base) << "\n";
  for (std::size_t i = 0; i < g.order(); ++i) {
    const ProjPoint& e = g.elements()[i];
    const AxisAngle r = rotation_of(e.rep());
    std::cout << "  " << i << "  " << fmt_quat(e.rep()) << "  order " << element_order(e, g);
    if (r.axis) {
      std::cout << "  angle " << fmt(r.angle, 6) << "  axis (" << fmt(r.axis->x, 6) << ", "
                << fmt(r.axis->y, 6) << ", " << fmt(r.axis->z, 6) << ")";
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_mul(const Options& o) {
  const Base base = bases_for(o, false).front();
  const CosetSpace space(base, build_group(GroupSpec::parse(o.spec)));
  UnitQuaternion a = parse_point(o.point_a);
  UnitQuaternion b = parse_point(o.point_b);
  if (base == Base::SO3) {
    a = canonical_sign(a);
    b = canonical_sign(b);
  }
  const OrbitMultiset m = space.mu(space.project(a), space.project(b));
  if (m.tie_warnings() > 0) {
    std::cerr << "warning: " << m.tie_warnings() << " values lie near the singular set\n";
  }
  if (o.json) {
    std::cout << multiset_json(space, m).dump(2) << "\n";
    return 0;
  }
  std::cout << "mu in " << space.descriptor() << ": " << m.size() << " values\n";
  for (const auto& g : group_by_orbit(space, m)) {
    std::cout << "  " << fmt_quat(g.orbit.rep) << "  x" << g.multiplicity << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o) {
  json reports = json::array();
  bool passed = true;
  for (const auto& spec : specs_for(o)) {
    const RotationGroup g = build_group(spec);
    for (const Base base : bases_for(o, o.all)) {
      const CosetSpace space(base, g);
      SuiteCounts counts = default_counts(spec);
      if (o.samples) counts.identity = counts.inverse = counts.well_defined = *o.samples;
      if (o.triples) counts.triples = *o.triples;
      for (const auto& r : run_suite(space, counts, o.seed, o.tol)) {
        passed = passed && r.passed();
        if (o.json) {
          reports.push_back(report_json(r));
          continue;
        }
        std::printf("%-8s %-14s trials %4zu  failures %3zu  max dev %s  warnings %zu  %s\n",
                    r.space.c_str(), r.axiom.c_str(), r.trials, r.failures,
                    fmt_sci(r.max_deviation).c_str(), r.warnings, r.passed() ? "PASS" : "FAIL");
      }
    }
  }
  if (o.json) {
    json out = {{"seed", o.seed}, {"tolerance", o.tol}, {"reports", reports}, {"passed", passed}};
    if (o.samples) out["samples"] = *o.samples;
    if (o.triples) out["triples"] = *o.triples;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (passed ? "all axioms hold" : "AXIOM FAILURES") << " (seed " << o.seed << ", tol "
              << fmt_sci(o.tol) << ")\n";
  }
  return passed ? 0 : kExitFailure;
}

int cmd_classify(const Options& o) {
  json out = json::array();
  bool evidence_ok = true;
  for (const auto& spec : specs_for(o)) {
    const RotationGroup g = build_group(spec);
    for (const Base base : bases_for(o, o.all)) {
      const ClassificationReport r = classify(base, g);
      evidence_ok = evidence_ok && r.suspension.passed && r.riemann_hurwitz.holds;
      if (o.json) {
        out.push_back(report_json(r));
        continue;
      }
      std::cout << (base == Base::Sp1 ? "Sp1/" : "SO3/") << spec.name() << " -> " << to_string(r.predicted)
                << "\n"
                << "  n                  " << r.n << " (" << (r.even() ? "even" : "odd") << ")\n"
                << "  half-turn in G     " << (r.has_half_turn ? "yes" : "no") << "\n"
                << "  tau fixed points   " << (r.tau_fixed_points ? "yes" : "no") << "\n"
                << "  parity consistent  " << (r.parity_consistent ? "yes" : "no") << "\n"
                << "  suspension         " << (r.suspension.passed ? "ok" : "FAILED") << " (max |dRe| "
                << fmt_sci(r.suspension.max_deviation) << ")\n"
                << "  Riemann-Hurwitz    " << (r.riemann_hurwitz.holds ? "ok" : "FAILED") << " (nu =";
      for (const auto nu : r.riemann_hurwitz.signature) std::cout << " " << nu;
      std::cout << ", n*chi = " << r.riemann_hurwitz.euler_times_order << ")\n";
    }
  }
  if (o.json) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
  return evidence_ok ? 0 : kExitFailure;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--base", o.base, "Base group W: sp1 or so3")->check(CLI::IsMember({"sp1", "so3"}, CLI::ignore_case));
  cmd->add_flag("--json", o.json, "Emit JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coset n-valued groups Sp(1)/G and SO(3)/G for finite G in SO(3)"};
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "List the elements of G");
  generate->add_option("spec", o.spec, "Group: C<n>, D<m>, T, O or I")->required();
  add_common(generate, o);

  auto* mul = app.add_subcommand("mul", "Print the n-valued product of two points");
  mul->add_option("spec", o.spec, "Group: C<n>, D<m>, T, O or I")->required();
  mul->add_option("a", o.point_a, "First point as w,x,y,z")->required();
  mul->add_option("b", o.point_b, "Second point as w,x,y,z")->required();
  add_common(mul, o);

  auto* verify = app.add_subcommand("verify", "Check the n-valued group axioms on random samples");
  verify->add_option("spec", o.spec, "Group: C<n>, D<m>, T, O or I");
  verify->add_flag("--all", o.all, "Every catalog group (both bases unless --base is given)");
  verify->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  verify->add_option("--samples", o.samples, "Samples for identity, inverse and well-definedness")
      ->check(CLI::PositiveNumber);
  verify->add_option("--triples", o.triples, "Triples for associativity")->check(CLI::PositiveNumber);
  verify->add_option("--tol", o.tol, "Matched-pair tolerance")->capture_default_str()->check(CLI::NonNegativeNumber);
  add_common(verify, o);

  auto* classify_cmd = app.add_subcommand("classify", "Predict the homeomorphism type of W/G");
  classify_cmd->add_option("spec", o.spec, "Group: C<n>, D<m>, T, O or I");
  classify_cmd->add_flag("--all", o.all, "Every catalog group");
  add_common(classify_cmd, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return cmd_generate(o);
    if (*mul) return cmd_mul(o);
    if (*verify) return cmd_verify(o);
    if (*classify_cmd) return cmd_classify(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
