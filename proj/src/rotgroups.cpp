#include "nvgroups/rotgroups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

#include "nvgroups/errors.hpp"
#include "nvgroups/tolerance.hpp"

namespace nvgroups {
namespace {

std::vector<UnitQuaternion> hurwitz_generators() {
  return {UnitQuaternion(Quaternion::i()), UnitQuaternion(Quaternion::j()),
          UnitQuaternion(Quaternion{0.5, 0.5, 0.5, 0.5})};
}

std::vector<UnitQuaternion> generators(const GroupSpec& spec) {
  using std::numbers::pi;
  const auto z_turn = [](int n) {
    return UnitQuaternion(Quaternion{std::cos(pi / n), 0.0, 0.0, std::sin(pi / n)});
  };
  switch (spec.family) {
    case Family::Cyclic:
      return {z_turn(spec.param)};
    case Family::Dihedral:
      return {z_turn(spec.param), UnitQuaternion(Quaternion::i())};
    case Family::Tetrahedral:
      return hurwitz_generators();
    case Family::Octahedral: {
      auto gens = hurwitz_generators();
      gens.emplace_back(Quaternion{1.0, 0.0, 0.0, 1.0});
      return gens;
    }
    case Family::Icosahedral: {
      const double phi = std::numbers::phi;
      auto gens = hurwitz_generators();
      gens.emplace_back(Quaternion{phi / 2, 1.0 / (2 * phi), 0.5, 0.0});
      return gens;
    }
  }
  throw std::logic_error("unknown family");
}

std::size_t find_close(const std::vector<UnitQuaternion>& set, const Quaternion& q, double eps) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (distance(set[i], q) < eps) return i;
  }
  return set.size();
}

}  // namespace

GroupSpec GroupSpec::cyclic(int n) {
  if (n < 1) throw ParseError("cyclic order must be >= 1");
  return {Family::Cyclic, n};
}

GroupSpec GroupSpec::dihedral(int m) {
  if (m < 1) throw ParseError("dihedral parameter must be >= 1");
  return {Family::Dihedral, m};
}

GroupSpec GroupSpec::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty group spec");
  const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  const std::string_view rest = text.substr(1);
  if (head == 'C' || head == 'D') {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size() || value < 1) {
      throw ParseError("bad group spec '" + std::string(text) + "'");
    }
    return head == 'C' ? cyclic(value) : dihedral(value);
  }
  if (!rest.empty()) throw ParseError("bad group spec '" + std::string(text) + "'");
  switch (head) {
    case 'T': return tetrahedral();
    case 'O': return octahedral();
    case 'I': return icosahedral();
    default: break;
  }
  throw ParseError("bad group spec '" + std::string(text) + "'");
}

std::string GroupSpec::name() const {
  switch (family) {
    case Family::Cyclic: return "C" + std::to_string(param);
    case Family::Dihedral: return "D" + std::to_string(param);
    case Family::Tetrahedral: return "T";
    case Family::Octahedral: return "O";
    case Family::Icosahedral: return "I";
  }
  return "?";
}

std::size_t GroupSpec::order() const {
  switch (family) {
    case Family::Cyclic: return static_cast<std::size_t>(param);
    case Family::Dihedral: return 2 * static_cast<std::size_t>(param);
    case Family::Tetrahedral: return 12;
    case Family::Octahedral: return 24;
    case Family::Icosahedral: return 60;
  }
  return 0;
}

std::vector<GroupSpec> catalog() {
  std::vector<GroupSpec> specs;
  for (int n = 1; n <= 8; ++n) specs.push_back(GroupSpec::cyclic(n));
  for (int m = 1; m <= 6; ++m) specs.push_back(GroupSpec::dihedral(m));
  specs.push_back(GroupSpec::tetrahedral());
  specs.push_back(GroupSpec::octahedral());
  specs.push_back(GroupSpec::icosahedral());
  return specs;
}

UnitQuaternion canonical_sign(const UnitQuaternion& q) {
  for (const double c : q.value().coords()) {
    if (std::abs(c) > kPointEps) return c < 0 ? -q : q;
  }
  return q;
}

double distance(const ProjPoint& a, const ProjPoint& b) {
  const Quaternion& p = a.rep_;
  const Quaternion& q = b.rep_;
  return std::min(distance(p, q), distance(p, -q));
}

double round12(double v) {
  const double r = std::round(v * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

bool rounded_less(const Quaternion& a, const Quaternion& b) {
  const auto ca = a.coords();
  const auto cb = b.coords();
  for (std::size_t c = 0; c < 4; ++c) {
    const double ra = round12(ca[c]);
    const double rb = round12(cb[c]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

RotationGroup RotationGroup::from_lifts(GroupSpec spec, const std::vector<UnitQuaternion>& lifts) {
  RotationGroup g;
  g.spec_ = spec;
  g.elements_.reserve(lifts.size());
  for (const auto& q : lifts) g.elements_.emplace_back(q);
  std::sort(g.elements_.begin(), g.elements_.end(), [](const ProjPoint& a, const ProjPoint& b) {
    return rounded_less(a.rep(), b.rep());
  });

  g.cover_.reserve(2 * lifts.size());
  for (const auto& e : g.elements_) {
    g.cover_.push_back(e.rep());
    g.cover_.push_back(-e.rep());
  }
  std::sort(g.cover_.begin(), g.cover_.end(),
            [](const UnitQuaternion& a, const UnitQuaternion& b) { return rounded_less(a, b); });

  const auto id = g.find(ProjPoint(UnitQuaternion()), kPointEps);
  if (!id) throw std::invalid_argument("element set lacks the identity");
  g.identity_ = *id;
  return g;
}

std::optional<std::size_t> RotationGroup::find(const ProjPoint& g, double eps) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (distance(elements_[i], g) < eps) return i;
  }
  return std::nullopt;
}

RotationGroup build_group(const GroupSpec& spec) {
  const std::size_t expected = spec.order();
  const std::size_t budget = 2 * (2 * expected);

  const auto gens = generators(spec);
  std::vector<UnitQuaternion> cover{UnitQuaternion(), -UnitQuaternion()};
  std::deque<std::size_t> frontier{0, 1};
  while (!frontier.empty()) {
    const UnitQuaternion current = cover[frontier.front()];
    frontier.pop_front();
    for (const auto& g : gens) {
      const UnitQuaternion next = (current * g).renormalized();
      if (find_close(cover, next, kPointEps) != cover.size()) continue;
      cover.push_back(next);
      if (cover.size() > budget) {
        throw ClosureFailure("closure of " + spec.name() + " exceeded " + std::to_string(budget) +
                             " cover elements");
      }
      frontier.push_back(cover.size() - 1);
    }
  }
  if (cover.size() != 2 * expected) {
    throw ClosureFailure("closure of " + spec.name() + " produced " + std::to_string(cover.size()) +
                         " cover elements, expected " + std::to_string(2 * expected));
  }

  // One lift per +-pair.
  std::vector<UnitQuaternion> lifts;
  for (const auto& q : cover) {
    const UnitQuaternion c = canonical_sign(q);
    if (find_close(lifts, c, kPointEps) == lifts.size()) lifts.push_back(c);
  }
  if (lifts.size() != expected) {
    throw ClosureFailure("cover of " + spec.name() + " is not closed under negation");
  }
  return RotationGroup::from_lifts(spec, lifts);
}

std::vector<UnitQuaternion> binary_cover(const RotationGroup& group) { return group.cover(); }

int element_order(const ProjPoint& g, const RotationGroup& group) {
  if (!group.find(g, kPointEps)) throw NotInGroup("element is not in " + group.spec().name());
  const ProjPoint e{UnitQuaternion()};
  UnitQuaternion power = g.rep();
  for (std::size_t d = 1; d <= group.order(); ++d) {
    if (distance(ProjPoint(power), e) < kPointEps) return static_cast<int>(d);
    power = (power * g.rep()).renormalized();
  }
  throw NotInGroup("element of " + group.spec().name() + " has no finite order within the group");
}

bool has_half_turn(const RotationGroup& group) {
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (i == group.identity_index()) continue;
    if (element_order(group.elements()[i], group) == 2) return true;
  }
  return false;
}

RotationGroup perturb_element(const RotationGroup& group, std::size_t index, const Vec3& axis,
                              double angle) {
  if (index >= group.order()) throw std::out_of_range("perturb_element: index out of range");
  if (index == group.identity_index()) {
    throw std::invalid_argument("perturb_element: refusing to move the identity");
  }
  std::vector<UnitQuaternion> lifts;
  for (const auto& e : group.elements()) lifts.push_back(e.rep());
  lifts[index] = (UnitQuaternion::from_axis_angle(axis, angle) * lifts[index]).renormalized();
  return RotationGroup::from_lifts(group.spec(), lifts);
}

}  // namespace nvgroups
