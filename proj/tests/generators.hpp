// Random valid inputs for property tests: simplicial complexes on a few
// vertices, sheaves supported on locally closed sets and twisted by
// per-simplex automorphisms, and short exact sequences built the same way.
#ifndef CECHKIT_TESTS_GENERATORS_HPP
#define CECHKIT_TESTS_GENERATORS_HPP

#include <random>
#include <set>
#include <utility>

#include "cechkit/connecting.hpp"

namespace gen {

using namespace cechkit;
using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Downward closure of the given faces plus all singletons.
inline Cover closed_cover(std::size_t n, const std::vector<std::vector<std::size_t>>& tops) {
  std::set<std::vector<std::size_t>> all;
  for (std::size_t i = 0; i < n; ++i) all.insert({i});
  for (const auto& t : tops) {
    for (unsigned mask = 1; mask < (1u << t.size()); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t k = 0; k < t.size(); ++k)
        if (mask & (1u << k)) sub.push_back(t[k]);
      all.insert(sub);
    }
  }
  Cover c;
  for (std::size_t i = 0; i < n; ++i) c.opens.push_back("U" + std::to_string(i + 1));
  c.nonempty.assign(all.begin(), all.end());
  return c;
}

inline Nerve random_nerve(Rng& rng, std::size_t max_opens = 4) {
  const std::size_t n = 1 + pick(rng, max_opens);
  std::vector<std::vector<std::size_t>> tops;
  const std::size_t attempts = pick(rng, 4) + 1;
  for (std::size_t a = 0; a < attempts; ++a) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < n; ++i)
      if (uniform(rng, 0, 2) > 0) t.push_back(i);
    if (t.size() >= 2) tops.push_back(t);
  }
  return build_nerve(closed_cover(n, tops));
}

// Every simplicial complex on exactly n vertices (all singletons present).
inline std::vector<Nerve> all_nerves(std::size_t n) {
  std::vector<std::vector<std::size_t>> candidates;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    candidates.push_back(s);
  }
  std::set<std::vector<std::vector<std::size_t>>> seen;
  std::vector<Nerve> out;
  for (unsigned long family = 0; family < (1ul << candidates.size()); ++family) {
    std::vector<std::vector<std::size_t>> tops;
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if (family & (1ul << k)) tops.push_back(candidates[k]);
    Cover c = closed_cover(n, tops);
    if (seen.insert(c.nonempty).second) out.push_back(build_nerve(c));
  }
  return out;
}

/// An automorphism of a coefficient group and its inverse.
struct Gauge {
  IntMatrix forward, backward;
};

struct Coefficients {
  AbelianGroup group;
  std::vector<Gauge> gauges;
};

inline std::vector<Gauge> rank_two_gauges() {
  return {{IntMatrix::identity(2), IntMatrix::identity(2)},
          {IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{1, -1}, {0, 1}}},
          {IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{0, 1}, {1, 0}}},
          {IntMatrix{{1, 0}, {1, 1}}, IntMatrix{{1, 0}, {-1, 1}}},
          {IntMatrix{{-1, 0}, {0, 1}}, IntMatrix{{-1, 0}, {0, 1}}},
          {IntMatrix{{2, 1}, {1, 1}}, IntMatrix{{1, -1}, {-1, 2}}}};
}

// Units of Z/order (order 0 meaning Z) as 1x1 gauges.
inline std::vector<Gauge> cyclic_gauges(long order) {
  std::vector<Gauge> out;
  if (order == 0) return {{IntMatrix{{1}}, IntMatrix{{1}}}, {IntMatrix{{-1}}, IntMatrix{{-1}}}};
  for (long u = 1; u < order; ++u)
    for (long v = 1; v < order; ++v)
      if ((u * v) % order == 1) out.push_back({IntMatrix{{u}}, IntMatrix{{v}}});
  if (order == 1) out.push_back({IntMatrix{{1}}, IntMatrix{{1}}});
  return out;
}

inline Coefficients cyclic(long order) { return {AbelianGroup::cyclic(order), cyclic_gauges(order)}; }
inline Coefficients rank_two(long order) {
  IntMatrix rel = order == 0 ? IntMatrix(2, 0) : IntMatrix{{order, 0}, {0, order}};
  return {AbelianGroup(2, rel), rank_two_gauges()};
}

inline AbelianGroup zero_group() { return AbelianGroup(0, IntMatrix(0, 0)); }

/// Locally closed subset of a nerve: upward closure of some seeds
/// intersected with the downward closure of others.
struct Support {
  std::vector<std::vector<bool>> member;  // [p][index]
  bool contains(std::size_t p, std::size_t i) const { return member[p][i]; }
};

inline Support full_support(const Nerve& nerve) {
  Support s;
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p) s.member.emplace_back(nerve.count(p), true);
  return s;
}

inline Support random_support(Rng& rng, const Nerve& nerve) {
  if (uniform(rng, 0, 2) == 0) return full_support(nerve);
  std::vector<Simplex> all;
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p)
    for (const auto& s : nerve.simplices(p)) all.push_back(s);
  std::vector<Simplex> low{all[pick(rng, all.size())]};
  std::vector<Simplex> high;
  if (uniform(rng, 0, 1)) high.push_back(all[pick(rng, all.size())]);
  Support sup;
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p) {
    sup.member.emplace_back();
    for (const auto& s : nerve.simplices(p)) {
      bool up = std::any_of(low.begin(), low.end(), [&](const Simplex& f) { return s.contains(f); });
      bool down = high.empty() || std::any_of(high.begin(), high.end(), [&](const Simplex& t) { return t.contains(s); });
      sup.member[p].push_back(up && down);
    }
  }
  return sup;
}

/// Per-simplex choice of gauge index (ignored outside the support).
using GaugeChoice = std::vector<std::vector<std::size_t>>;

inline GaugeChoice random_gauges(Rng& rng, const Nerve& nerve, std::size_t options) {
  GaugeChoice g;
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p) {
    g.emplace_back();
    for (std::size_t i = 0; i < nerve.count(p); ++i) g[p].push_back(pick(rng, options));
  }
  return g;
}

// The constant sheaf with coefficients c on the support, twisted by gauges:
// restriction along f < s is gauge(s) * gauge(f)^-1.
inline AbelianSheaf twisted_sheaf(const Nerve& nerve, const Coefficients& c, const Support& sup, const GaugeChoice& g) {
  AbelianSheaf sheaf(nerve);
  const std::size_t r = c.group.generator_count();
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p)
    for (std::size_t i = 0; i < nerve.count(p); ++i)
      sheaf.set_group(nerve.simplex(p, i), sup.contains(p, i) ? c.group : zero_group());
  for (std::size_t p = 1; p <= nerve.dimension_cap(); ++p)
    for (std::size_t i = 0; i < nerve.count(p); ++i) {
      const Simplex& s = nerve.simplex(p, i);
      for (const auto& [face, pos] : faces(s)) {
        const std::size_t j = nerve.require_index(face);
        const bool live = sup.contains(p, i) && sup.contains(p - 1, j);
        IntMatrix m(sup.contains(p, i) ? r : 0, sup.contains(p - 1, j) ? r : 0);
        if (live) m = c.gauges[g[p][i]].forward * c.gauges[g[p - 1][j]].backward;
        sheaf.set_restriction(s, pos, m);
      }
    }
  return sheaf;
}

inline AbelianSheaf random_sheaf(Rng& rng, const Nerve& nerve, const Coefficients& c) {
  return twisted_sheaf(nerve, c, random_support(rng, nerve), random_gauges(rng, nerve, c.gauges.size()));
}

inline IntVector random_vector(Rng& rng, std::size_t n, long bound = 5) {
  IntVector v(n);
  for (auto& x : v) x = uniform(rng, -bound, bound);
  return v;
}

inline Cochain random_cochain(Rng& rng, const AbelianSheaf& sheaf, std::size_t p, long bound = 5) {
  Cochain c{p, {}};
  for (std::size_t i = 0; i < sheaf.nerve().count(p); ++i)
    c.values.push_back(random_vector(rng, sheaf.group(p, i).generator_count(), bound));
  return c;
}

/// A random cocycle: a coboundary plus a random combination of class
/// representatives.
inline Cochain random_cocycle(Rng& rng, const AbelianSheaf& sheaf, std::size_t p) {
  Cochain c = zero_cochain(sheaf, p);
  if (p > 0) c = coboundary(sheaf, random_cochain(rng, sheaf, p - 1, 3));
  const CohomologyGroup h = cohomology(sheaf, p);
  for (const auto& rep : h.representatives()) {
    const long k = uniform(rng, -2, 2);
    for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] = add(c.values[i], scale(rep.values[i], k));
  }
  return c;
}

/// 0 -> L -> M -> N -> 0 on a single group, before twisting.
struct SequenceTemplate {
  Coefficients L, M, N;
  IntMatrix iota, pi;
};

inline std::vector<SequenceTemplate> sequence_templates() {
  return {
      {cyclic(0), cyclic(0), cyclic(2), IntMatrix{{2}}, IntMatrix{{1}}},
      {cyclic(0), cyclic(0), cyclic(3), IntMatrix{{3}}, IntMatrix{{1}}},
      {cyclic(0), rank_two(0), cyclic(0), IntMatrix{{1}, {2}}, IntMatrix{{-2, 1}}},
      {rank_two(0), rank_two(0), cyclic(2), IntMatrix{{2, 0}, {0, 1}}, IntMatrix{{1, 0}}},
      {cyclic(2), cyclic(4), cyclic(2), IntMatrix{{2}}, IntMatrix{{1}}},
      {cyclic(3), cyclic(9), cyclic(3), IntMatrix{{3}}, IntMatrix{{1}}},
  };
}

inline SheafMorphism twisted_morphism(const Nerve& nerve, const Support& sup, const Coefficients& from,
                                      const GaugeChoice& gf, const Coefficients& to, const GaugeChoice& gt,
                                      const IntMatrix& core) {
  SheafMorphism f;
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p) {
    f.matrices.emplace_back();
    for (std::size_t i = 0; i < nerve.count(p); ++i) {
      if (!sup.contains(p, i)) {
        f.matrices[p].emplace_back(0, 0);
        continue;
      }
      f.matrices[p].push_back(to.gauges[gt[p][i]].forward * core * from.gauges[gf[p][i]].backward);
    }
  }
  return f;
}

struct TwistedSequence {
  ShortExactSequence seq;
  GaugeChoice gauge_l, gauge_m, gauge_n;
};

inline TwistedSequence twisted_sequence(const Nerve& nerve, const SequenceTemplate& t, const Support& sup,
                                        const GaugeChoice& gl, const GaugeChoice& gm, const GaugeChoice& gn) {
  ShortExactSequence s{twisted_sheaf(nerve, t.L, sup, gl), twisted_sheaf(nerve, t.M, sup, gm),
                       twisted_sheaf(nerve, t.N, sup, gn), twisted_morphism(nerve, sup, t.L, gl, t.M, gm, t.iota),
                       twisted_morphism(nerve, sup, t.M, gm, t.N, gn, t.pi)};
  return {std::move(s), gl, gm, gn};
}

inline ShortExactSequence random_sequence(Rng& rng, const Nerve& nerve) {
  auto templates = sequence_templates();
  const auto& t = templates[pick(rng, templates.size())];
  Support sup = random_support(rng, nerve);
  return twisted_sequence(nerve, t, sup, random_gauges(rng, nerve, t.L.gauges.size()),
                          random_gauges(rng, nerve, t.M.gauges.size()), random_gauges(rng, nerve, t.N.gauges.size()))
      .seq;
}

/// Two templates sharing the middle group K: 0 -> L -> A -> K -> 0 and
/// 0 -> K -> B -> N -> 0.
inline std::vector<std::pair<SequenceTemplate, SequenceTemplate>> splice_templates() {
  return {
      {{cyclic(0), rank_two(0), cyclic(0), IntMatrix{{1}, {0}}, IntMatrix{{0, 1}}},
       {cyclic(0), cyclic(0), cyclic(2), IntMatrix{{2}}, IntMatrix{{1}}}},
      {{cyclic(0), cyclic(0), cyclic(2), IntMatrix{{2}}, IntMatrix{{1}}},
       {cyclic(2), cyclic(4), cyclic(2), IntMatrix{{2}}, IntMatrix{{1}}}},
      {{cyclic(0), cyclic(0), cyclic(3), IntMatrix{{3}}, IntMatrix{{1}}},
       {cyclic(3), cyclic(9), cyclic(3), IntMatrix{{3}}, IntMatrix{{1}}}},
  };
}

struct SplicedPair {
  ShortExactSequence first, second;
};

inline SplicedPair random_splice(Rng& rng, const Nerve& nerve) {
  auto templates = splice_templates();
  const auto& [a, b] = templates[pick(rng, templates.size())];
  Support sup = random_support(rng, nerve);
  GaugeChoice gk = random_gauges(rng, nerve, a.N.gauges.size());
  auto first = twisted_sequence(nerve, a, sup, random_gauges(rng, nerve, a.L.gauges.size()),
                                random_gauges(rng, nerve, a.M.gauges.size()), gk);
  auto second = twisted_sequence(nerve, b, sup, gk, random_gauges(rng, nerve, b.M.gauges.size()),
                                 random_gauges(rng, nerve, b.N.gauges.size()));
  return {std::move(first.seq), std::move(second.seq)};
}

}  // namespace gen

#endif  // CECHKIT_TESTS_GENERATORS_HPP
