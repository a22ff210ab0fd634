// Equality in Sym^m X: does a perfect matching exist pairing each element of A
// with a tol-close element of B?

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "nvgroups/coset.hpp"
#include "nvgroups/errors.hpp"

namespace nvgroups {
namespace {

constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

struct Edge {
  std::size_t to;
  double dist;
};

// Kuhn's augmenting-path search on the threshold graph.
class Matcher {
 public:
  Matcher(const std::vector<std::vector<Edge>>& adj, std::vector<std::size_t>& match_a,
          std::vector<std::size_t>& match_b)
      : adj_(adj), match_a_(match_a), match_b_(match_b), seen_(match_b.size(), 0) {}

  bool augment(std::size_t a) {
    ++stamp_;
    return visit(a);
  }

 private:
  bool visit(std::size_t a) {
    for (const auto& e : adj_[a]) {
      if (seen_[e.to] == stamp_) continue;
      seen_[e.to] = stamp_;
      if (match_b_[e.to] == kUnmatched || visit(match_b_[e.to])) {
        match_a_[a] = e.to;
        match_b_[e.to] = a;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<Edge>>& adj_;
  std::vector<std::size_t>& match_a_;
  std::vector<std::size_t>& match_b_;
  std::vector<std::size_t> seen_;
  std::size_t stamp_ = 0;
};

}  // namespace

MatchResult CosetSpace::match(const OrbitMultiset& a, const OrbitMultiset& b, double tol) const {
  if (a.size() != b.size()) {
    throw SizeMismatch("multiset sizes differ: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
  }
  const std::size_t m = a.size();
  if (m == 0) return {true, 0.0};

  // |w| bounds the pair distance from below on both bases, so sort B by it
  // and only scan a window.
  const auto key = [](const Orbit& o) { return std::abs(o.rep.w()); };
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return key(b.items[l]) < key(b.items[r]); });
  std::vector<double> keys(m);
  for (std::size_t t = 0; t < m; ++t) keys[t] = key(b.items[order[t]]);

  const auto window = [&](const Orbit& x) {
    const double k = key(x);
    const auto lo = std::lower_bound(keys.begin(), keys.end(), k - tol) - keys.begin();
    const auto hi = std::upper_bound(keys.begin(), keys.end(), k + tol) - keys.begin();
    return std::pair<std::size_t, std::size_t>(static_cast<std::size_t>(lo),
                                               static_cast<std::size_t>(hi));
  };

  std::vector<std::size_t> match_a(m, kUnmatched);
  std::vector<std::size_t> match_b(m, kUnmatched);
  std::vector<double> dist_a(m, 0.0);

  // Greedy nearest neighbour.
  bool complete = true;
  for (std::size_t i = 0; i < m; ++i) {
    const auto [lo, hi] = window(a.items[i]);
    std::size_t best = kUnmatched;
    double best_d = tol;
    for (std::size_t t = lo; t < hi; ++t) {
      const std::size_t j = order[t];
      if (match_b[j] != kUnmatched) continue;
      const double d = point_distance(a.items[i].rep, b.items[j].rep);
      if (d <= best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best == kUnmatched) {
      complete = false;
      continue;
    }
    match_a[i] = best;
    match_b[best] = i;
    dist_a[i] = best_d;
  }

  if (!complete) {
    // Threshold graph: window edges everywhere, plus orbit-distance edges at
    // unmatched or tie-flagged vertices whose representatives may disagree.
    std::vector<std::vector<Edge>> adj(m);
    for (std::size_t i = 0; i < m; ++i) {
      const auto [lo, hi] = window(a.items[i]);
      for (std::size_t t = lo; t < hi; ++t) {
        const std::size_t j = order[t];
        const double d = point_distance(a.items[i].rep, b.items[j].rep);
        if (d <= tol) adj[i].push_back({j, d});
      }
    }
    const auto add_orbit_edge = [&](std::size_t i, std::size_t j) {
      for (const auto& e : adj[i]) {
        if (e.to == j) return;
      }
      const double d = orbit_distance(a.items[i], b.items[j]);
      if (d <= tol) adj[i].push_back({j, d});
    };
    for (std::size_t i = 0; i < m; ++i) {
      if (match_a[i] != kUnmatched && !a.items[i].tie) continue;
      for (std::size_t j = 0; j < m; ++j) add_orbit_edge(i, j);
      if (adj[i].empty()) return {false, 0.0};
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (!b.items[j].tie) continue;
      for (std::size_t i = 0; i < m; ++i) add_orbit_edge(i, j);
    }

    Matcher matcher(adj, match_a, match_b);
    for (std::size_t i = 0; i < m; ++i) {
      if (match_a[i] == kUnmatched && !matcher.augment(i)) return {false, 0.0};
    }
    for (std::size_t i = 0; i < m; ++i) {
      const auto it = std::find_if(adj[i].begin(), adj[i].end(),
                                   [&](const Edge& e) { return e.to == match_a[i]; });
      dist_a[i] = it->dist;
    }
  }

  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (match_a[i] == kUnmatched || dist_a[i] > tol) return {false, 0.0};
    worst = std::max(worst, dist_a[i]);
  }
  return {true, worst};
}

}  // namespace nvgroups
