// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
//
//   acceptance [--cli path/to/nvgroups]
//
// Without --cli the determinism criterion (two identical CLI runs) is reported
// as FAIL, since it cannot be checked.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nvgroups/axioms.hpp"
#include "nvgroups/coset.hpp"
#include "nvgroups/rotgroups.hpp"
#include "nvgroups/topology.hpp"
#include "oracles.hpp"

using namespace nvgroups;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(const std::string& why) {
    passed = false;
    if (problems.size() < 8) problems.push_back(why);
  }
};

struct Catalog {
  std::vector<GroupSpec> specs;
  std::vector<RotationGroup> groups;
};

const Catalog& catalog_groups() {
  static const Catalog c = [] {
    Catalog out;
    out.specs = catalog();
    for (const auto& s : out.specs) out.groups.push_back(build_group(s));
    return out;
  }();
  return c;
}

// Orders from the classification list: n, 2m, 12, 24, 60.
std::size_t listed_order(const GroupSpec& s) {
  switch (s.family) {
    case Family::Cyclic: return static_cast<std::size_t>(s.param);
    case Family::Dihedral: return 2 * static_cast<std::size_t>(s.param);
    case Family::Tetrahedral: return 12;
    case Family::Octahedral: return 24;
    case Family::Icosahedral: return 60;
  }
  return 0;
}

Outcome catalog_integrity() {
  Outcome out;
  const auto start = Clock::now();
  const auto specs = catalog();
  double worst_closure = 0;
  for (const auto& spec : specs) {
    const RotationGroup g = build_group(spec);
    const std::size_t n = listed_order(spec);
    if (g.order() != n) out.fail(spec.name() + " has " + std::to_string(g.order()) + " elements");
    if (g.cover().size() != 2 * n) out.fail(spec.name() + " cover has " + std::to_string(g.cover().size()));
    for (const auto& a : g.elements()) {
      for (const auto& b : g.elements()) {
        const ProjPoint ab((a.rep() * b.rep()).renormalized());
        double best = 10;
        for (const auto& c : g.elements()) best = std::min(best, distance(ab, c));
        worst_closure = std::max(worst_closure, best);
      }
    }
  }
  const double secs = seconds_since(start);
  if (worst_closure >= 1e-9) out.fail("closure defect " + std::to_string(worst_closure));
  if (secs >= 5.0) out.fail("took " + std::to_string(secs) + " s");
  std::ostringstream d;
  d << specs.size() << " groups, max closure defect " << worst_closure << ", " << secs << " s";
  out.detail = d.str();
  return out;
}

Outcome hurwitz_oracle() {
  Outcome out;
  const RotationGroup t = build_group(GroupSpec::tetrahedral());
  const auto units = oracle::hurwitz_units();
  const std::vector<Quaternion> cover(t.cover().begin(), t.cover().end());
  if (cover.size() != units.size()) out.fail("cover size " + std::to_string(cover.size()));
  // Bijection: every unit is hit, and every cover element is a unit.
  for (const auto& u : units) {
    if (!oracle::contains(cover, u, 1e-9)) out.fail("missing Hurwitz unit");
  }
  for (const auto& c : cover) {
    if (!oracle::contains(units, c, 1e-9)) out.fail("cover element outside the Hurwitz units");
  }
  out.detail = "24 Hurwitz units matched element-by-element";
  return out;
}

Outcome definition_suite() {
  Outcome out;
  const auto start = Clock::now();
  const auto& cat = catalog_groups();
  double worst = 0;
  std::size_t spaces = 0, trials = 0, warnings = 0;
  for (std::size_t g = 0; g < cat.groups.size(); ++g) {
    for (const Base base : {Base::Sp1, Base::SO3}) {
      const CosetSpace space(base, cat.groups[g]);
      ++spaces;
      const SuiteCounts counts = default_counts(cat.specs[g]);
      for (const auto& r : run_suite(space, counts, 0, 1e-6)) {
        trials += r.trials;
        warnings += r.warnings;
        worst = std::max(worst, r.max_deviation);
        if (!r.passed()) out.fail(r.space + " " + r.axiom + ": " + std::to_string(r.failures) + " failures");
      }
    }
  }
  const double secs = seconds_since(start);
  if (worst >= 1e-8) out.fail("max matched-pair deviation " + std::to_string(worst));
  if (secs >= 60.0) out.fail("took " + std::to_string(secs) + " s");
  std::ostringstream d;
  d << spaces << " spaces, " << trials << " trials, max deviation " << worst << ", " << warnings
    << " tie redraws, " << secs << " s";
  out.detail = d.str();
  return out;
}

Outcome negative_controls() {
  Outcome out;
  const auto& cat = catalog_groups();
  std::size_t corrupted = 0;
  std::set<Family> families;
  for (std::size_t g = 0; g < cat.groups.size(); ++g) {
    const RotationGroup& group = cat.groups[g];
    if (group.order() < 2) continue;
    const std::size_t victim = group.identity_index() == 0 ? 1 : 0;
    const RotationGroup bad = perturb_element(group, victim, {1, 2, 3}, 0.1);
    for (const Base base : {Base::Sp1, Base::SO3}) {
      const CosetSpace space(base, bad);
      ++corrupted;
      families.insert(cat.specs[g].family);
      if (check_assoc(space, 5, 0).failures == 0) out.fail(space.descriptor() + " associativity passed");
      if (check_well_defined(space, 10, 0).failures == 0) {
        out.fail(space.descriptor() + " well-definedness passed");
      }
    }
  }
  if (families.size() != 5) out.fail("not every family was exercised");
  out.detail = std::to_string(corrupted) + " corrupted spaces across 5 families, all detected";
  return out;
}

Outcome parity_classification() {
  Outcome out;
  const auto& cat = catalog_groups();
  const std::set<std::string> s3 = {"C2", "C4", "C6", "C8", "D1", "D2", "D3", "D4", "D5", "D6", "T", "O", "I"};
  const std::set<std::string> rp3 = {"C1", "C3", "C5", "C7"};
  for (std::size_t g = 0; g < cat.groups.size(); ++g) {
    const std::string name = cat.specs[g].name();
    const bool even = cat.groups[g].order() % 2 == 0;
    const bool tau = tau_has_fixed_points(cat.groups[g]);
    const bool half = has_half_turn(cat.groups[g]);
    if (tau != half || half != even) out.fail(name + ": parity signals disagree");
    ClassificationReport so3, sp1;
    try {
      so3 = classify(Base::SO3, cat.groups[g]);
      sp1 = classify(Base::Sp1, cat.groups[g]);
    } catch (const std::exception& e) {
      out.fail(name + ": " + e.what());
      continue;
    }
    const bool expect_s3 = s3.count(name) > 0;
    if (!expect_s3 && rp3.count(name) == 0) out.fail(name + " missing from the expected lists");
    if ((so3.predicted == Space3::S3) != expect_s3) out.fail("SO3/" + name + " -> " + std::string(to_string(so3.predicted)));
    if (sp1.predicted != Space3::S3) out.fail("Sp1/" + name + " is not S3");
  }
  out.detail = "13 groups -> S3, 4 groups -> RP3 on SO3; Sp1 always S3";
  return out;
}

Outcome antipodal_equation() {
  Outcome out;
  const auto& cat = catalog_groups();
  const auto grid = oracle::fibonacci_sphere(10000);
  std::size_t half_turns = 0, others = 0;
  double worst_solution = 0, closest_non_solution = 10;
  for (const auto& group : cat.groups) {
    for (const auto& q : group.cover()) {
      const AxisAngle r = rotation_of(q);
      const bool is_half_turn = r.axis && std::abs(r.angle - std::numbers::pi) <= 1e-9;
      const AntipodalSolutions sol = solve_antipodal(q);
      if (sol.solvable != is_half_turn) out.fail("solvability disagrees with the rotation angle");
      if (is_half_turn) {
        ++half_turns;
        for (const Vec3& x : sol.sample_circle(32)) {
          worst_solution = std::max(worst_solution, (conj_action(q, x) + x).norm());
        }
      } else {
        ++others;
        for (const Vec3& x : grid) {
          closest_non_solution = std::min(closest_non_solution, (conj_action(q, x) + x).norm());
        }
      }
    }
  }
  if (worst_solution >= 1e-9) out.fail("circle residual " + std::to_string(worst_solution));
  if (closest_non_solution < 1e-3) out.fail("grid found a near-solution " + std::to_string(closest_non_solution));
  std::ostringstream d;
  d << half_turns << " half-turn lifts (max residual " << worst_solution << "), " << others
    << " other lifts (min grid residual " << closest_non_solution << ")";
  out.detail = d.str();
  return out;
}

// Classical stabilizer signatures with nu >= 2.
std::vector<std::size_t> classical(const GroupSpec& s) {
  const auto n = static_cast<std::size_t>(s.param);
  switch (s.family) {
    case Family::Cyclic: return n >= 2 ? std::vector<std::size_t>{n, n} : std::vector<std::size_t>{};
    case Family::Dihedral:
      return n >= 2 ? std::vector<std::size_t>{2, 2, n} : std::vector<std::size_t>{2, 2};
    case Family::Tetrahedral: return {2, 3, 3};
    case Family::Octahedral: return {2, 3, 4};
    case Family::Icosahedral: return {2, 3, 5};
  }
  return {};
}

Outcome suspension_and_riemann_hurwitz() {
  Outcome out;
  const auto& cat = catalog_groups();
  double worst_re = 0;
  std::size_t audited = 0;
  for (std::size_t g = 0; g < cat.groups.size(); ++g) {
    const std::string name = cat.specs[g].name();
    const SuspensionEvidence ev = check_suspension(cat.groups[g], 1000, 0);
    worst_re = std::max({worst_re, ev.max_deviation, ev.pole_deviation});
    if (!ev.passed) out.fail(name + ": Re-preservation deviation " + std::to_string(ev.max_deviation));
    if (cat.groups[g].order() < 2) continue;
    ++audited;
    const RiemannHurwitzAudit rh = riemann_hurwitz(cat.groups[g]);
    if (!rh.holds) out.fail(name + ": n*chi = " + std::to_string(rh.euler_times_order));
    auto expected = classical(cat.specs[g]);
    std::sort(expected.begin(), expected.end());
    if (rh.signature != expected) out.fail(name + ": singular orbit signature differs");
  }
  if (worst_re >= 1e-12) out.fail("Re deviation " + std::to_string(worst_re));
  std::ostringstream d;
  d << "max Re deviation " << worst_re << "; Riemann-Hurwitz exact for " << audited << " groups";
  out.detail = d.str();
  return out;
}

std::string run_capture(const std::string& command, int& status) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) {
    status = -1;
    return {};
  }
  std::string output;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) output.append(buf.data(), got);
  status = pclose(pipe.release());
  return output;
}

Outcome determinism(const std::string& cli) {
  Outcome out;
  if (cli.empty()) {
    out.fail("no --cli given");
    return out;
  }
  const std::string command = "'" + cli + "' verify --all --json --seed 0";
  int s1 = 0, s2 = 0;
  const std::string first = run_capture(command, s1);
  const std::string second = run_capture(command, s2);
  if (s1 != 0 || s2 != 0) out.fail("CLI exited with a failure status");
  if (first.empty()) out.fail("empty output");
  if (first != second) out.fail("outputs differ");
  out.detail = std::to_string(first.size()) + " bytes, identical across two runs";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int a = 1; a < argc; ++a) {
    if (std::string(argv[a]) == "--cli" && a + 1 < argc) cli = argv[++a];
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 catalog integrity", catalog_integrity},
      {"AC2 Hurwitz oracle", hurwitz_oracle},
      {"AC3 n-valued group axioms", definition_suite},
      {"AC4 negative controls", negative_controls},
      {"AC5 parity and SO(3)/G classification", parity_classification},
      {"AC6 antipodal equation", antipodal_equation},
      {"AC7 suspension and Riemann-Hurwitz", suspension_and_riemann_hurwitz},
      {"AC8 deterministic CLI output", [&] { return determinism(cli); }},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << "\n";
    for (const auto& p : o.problems) std::cout << "         " << p << "\n";
    if (!o.passed) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
