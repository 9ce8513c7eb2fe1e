#include "doctest.h"

#include "cechkit/projective.hpp"
#include "generators.hpp"

using namespace cechkit;

namespace {

LinearForm X(std::size_t i) { return LinearForm::coordinate(i - 1, 3); }
LinearForm form(long a, long b, long c) { return LinearForm(IntVector{a, b, c}); }
ProjPoint point(long a, long b, long c) { return ProjPoint(IntVector{a, b, c}); }

Divisor points(std::initializer_list<std::pair<ProjPoint, long>> terms) {
  Divisor d{2, {}};
  for (const auto& [p, c] : terms) d.add(p.coordinates, c);
  return d;
}

// A random degree-zero function over the standard window forms.
RationalFunction random_function(gen::Rng& rng, const Window& w) {
  RationalFunction f;
  for (int k = 0; k < 3; ++k) {
    const long e = gen::uniform(rng, -2, 2);
    const LinearForm& a = w.forms[gen::pick(rng, w.forms.size())];
    const LinearForm& b = w.forms[gen::pick(rng, w.forms.size())];
    RationalFunction q = quotient(a, b);
    for (auto& [g, x] : q.exponents) x *= e;
    f *= q;
  }
  return f;
}

Divisor scaled(Divisor d, long k) {
  Divisor out{d.codimension, {}};
  for (const auto& [key, c] : d.terms) out.add(key, c * k);
  return out;
}

}  // namespace

TEST_CASE("normalization") {
  CHECK(point(0, -2, 4).coordinates == IntVector{0, 1, -2});
  CHECK(form(-3, 3, 0) == form(1, -1, 0));
  CHECK_THROWS_AS(point(0, 0, 0), InvalidInput);
}

TEST_CASE("line intersections") {
  CHECK(line_intersection(form(1, -1, 0), X(3)) == point(1, 1, 0));
  CHECK(line_intersection(X(1), X(2)) == point(0, 0, 1));
  CHECK(line_intersection(X(1), form(1, 1, 0)) == point(0, 0, 1));
  CHECK_THROWS_AS(line_intersection(form(2, -2, 0), form(1, -1, 0)), InvalidInput);
  CHECK_THROWS_AS(line_intersection(LinearForm(IntVector{1, 0}), LinearForm(IntVector{0, 1})), InvalidInput);

  gen::Rng rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    IntVector a, b;
    for (int k = 0; k < 3; ++k) a.push_back(gen::uniform(rng, -4, 4)), b.push_back(gen::uniform(rng, -4, 4));
    if (is_zero(a) || is_zero(b)) continue;
    LinearForm f(a), g(b);
    if (proportional(f, g)) {
      CHECK_THROWS_AS(line_intersection(f, g), InvalidInput);
      continue;
    }
    ProjPoint p = line_intersection(f, g);
    CHECK(p == line_intersection(g, f));
    CHECK(dot(p.coordinates, a) == 0);
    CHECK(dot(p.coordinates, b) == 0);
  }
}

TEST_CASE("ch_1 is the principal divisor") {
  Divisor d = ch({quotient(form(1, -1, 0), X(3))});
  Divisor expected{1, {}};
  expected.add(form(1, -1, 0).coefficients, 1);
  expected.add(X(3).coefficients, -1);
  CHECK(d == expected);
  CHECK(ch({quotient(X(1), X(1))}).is_zero());
  CHECK_THROWS_AS(ch({RationalFunction{{{X(1), 1}}, {}}}), InvalidInput);
}

TEST_CASE("ch_2 expands bilinearly") {
  Divisor d = ch({quotient(form(1, -1, 0), X(3)), quotient(form(1, 0, -1), X(2))});
  CHECK(d == points({{point(1, 1, 1), 1}, {point(0, 0, 1), -1}, {point(0, 1, 0), -1}, {point(1, 0, 0), 1}}));
  // repeated line: the (X1 - X2, X1 - X2) pair contributes nothing
  Divisor r = ch({quotient(form(1, -1, 0), X(3)), quotient(form(1, -1, 0), X(1))});
  CHECK(r == points({{point(0, 0, 1), -1}, {point(1, 1, 0), -1}, {point(0, 1, 0), 1}}));
  CHECK_THROWS_AS(ch({quotient(X(1), X(2)), quotient(X(1), X(2)), quotient(X(1), X(2))}), InvalidInput);
  CHECK_THROWS_AS(ch({}), InvalidInput);
}

TEST_CASE("ch restricted to a chart drops the points outside it") {
  std::vector<RationalFunction> h{quotient(form(1, -1, 0), X(3)), quotient(form(1, 0, -1), X(2))};
  CHECK(ch(h, Simplex({0})) == points({{point(1, 1, 1), 1}, {point(1, 0, 0), 1}}));
  CHECK(ch(h, Simplex({0, 1, 2})) == points({{point(1, 1, 1), 1}}));
}

TEST_CASE("ch algebraic properties") {
  Window w = p2_standard_window();
  gen::Rng rng(89);
  const std::vector<Simplex> charts{Simplex({0}), Simplex({1}), Simplex({2}), Simplex({0, 1}), Simplex({0, 2}),
                                    Simplex({1, 2}), Simplex({0, 1, 2})};
  for (int trial = 0; trial < 150; ++trial) {
    RationalFunction f = random_function(rng, w), g = random_function(rng, w), k = random_function(rng, w);
    RationalFunction fg = f;
    fg *= g;

    Divisor sum = ch({f});
    sum += ch({g});
    CHECK(ch({fg}) == sum);

    CHECK(ch({f, g}) == ch({g, f}));
    Divisor bilinear = ch({f, k});
    bilinear += ch({g, k});
    CHECK(ch({fg, k}) == bilinear);

    RationalFunction f2 = f;
    f2 *= f;
    CHECK(ch({f2, k}) == scaled(ch({f, k}), 2));

    for (const auto& s : charts) {
      CHECK(ch({f, g}, s) == restrict_divisor(ch({f, g}), s));
      CHECK(ch({f}, s) == restrict_divisor(ch({f}), s));
      Simplex bigger({0, 1, 2});
      if (bigger.contains(s)) CHECK(restrict_divisor(ch({f, g}, s), bigger) == ch({f, g}, bigger));
    }
  }
}

TEST_CASE("window checks") {
  CHECK_NOTHROW(check_window(p2_standard_window()));
  CHECK_NOTHROW(check_window(p1_window()));
  CHECK_NOTHROW(check_window(spec_k_window()));
  Window missing = p2_standard_window();
  missing.points.erase(missing.points.begin());
  CHECK_THROWS_AS(check_window(missing), InvalidInput);
  CHECK_THROWS_AS(symmetric_power_window(missing, 2), InvalidInput);
  Window extra = p2_standard_window();
  extra.forms.push_back(form(1, 1, 0));
  CHECK_THROWS_AS(check_window(extra), InvalidInput);
  Window repeated = p2_standard_window();
  repeated.forms.push_back(X(1));
  CHECK_THROWS_AS(check_window(repeated), InvalidInput);
  CHECK_THROWS_AS(symmetric_power_window(p2_standard_window(), 3), InvalidInput);
}

TEST_CASE("standard P2 window sequence is exact") {
  for (std::size_t l : {1u, 2u}) {
    WindowSequence w = symmetric_power_window(p2_standard_window(), l);
    CHECK(validate_exact(w.seq).ok());
    const Nerve& n = w.seq.M.nerve();
    CHECK(n.count(0) == 3);
    CHECK(n.count(1) == 3);
    CHECK(n.count(2) == 1);
    CHECK(w.l_basis.size() == 5);
    CHECK(w.monomials.size() == (l == 1 ? 5u : 15u));
  }
  WindowSequence w = symmetric_power_window(p2_standard_window(), 2);
  // 7 points; U_1 misses the three with x_1 = 0, U_123 keeps only [1,1,1].
  CHECK(w.cycle_generators[0][0].size() == 4);
  CHECK(w.cycle_generators[2][0] == std::vector<IntVector>{IntVector{1, 1, 1}});
}

TEST_CASE("window coordinates match ch") {
  WindowSequence w = symmetric_power_window(p2_standard_window(), 2);
  gen::Rng rng(97);
  const Nerve& n = w.seq.M.nerve();
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<RationalFunction> h{random_function(rng, w.window), random_function(rng, w.window)};
    IntVector m = w.m_coordinates(h);
    for (std::size_t p = 0; p <= 2; ++p)
      for (std::size_t i = 0; i < n.count(p); ++i) CHECK(w.ch_of(m, p, i) == ch(h, n.simplex(p, i)));
  }
  CHECK_THROWS_AS(w.l_coordinates(quotient(form(1, 1, 0), X(1))), InvalidInput);
}

TEST_CASE("degenerate models") {
  for (std::size_t l : {1u, 2u}) {
    WindowSequence s = symmetric_power_window(spec_k_window(), l);
    CHECK(validate_exact(s.seq).ok());
    CHECK(s.seq.M.nerve().open_count() == 1);
    CHECK(s.seq.N.group(0, 0).is_trivial());
    CHECK(s.seq.L.group(0, 0).structure() == s.seq.M.group(0, 0).structure());
    CHECK(s.seq.iota.at(0, 0) == IntMatrix::identity(s.monomials.size()));
  }

  WindowSequence curve = symmetric_power_window(p1_window(), 2);
  CHECK(validate_exact(curve.seq).ok());
  const Nerve& n = curve.seq.N.nerve();
  for (std::size_t p = 0; p <= 1; ++p) {
    for (std::size_t i = 0; i < n.count(p); ++i) CHECK(curve.seq.N.group(p, i).is_trivial());
    CHECK(cohomology(curve.seq.N, p).structure().is_trivial());
  }

  WindowSequence divisors = symmetric_power_window(p1_window(), 1);
  CHECK(validate_exact(divisors.seq).ok());
  CHECK(divisors.cycle_generators[0][0].size() == 2);
}

TEST_CASE("lci with one global tuple") {
  WindowSequence w = symmetric_power_window(p2_standard_window(), 2);
  LocalEquations eq{WeightedTuple{1, {quotient(form(1, -1, 0), X(1)), quotient(X(3), X(1))}}};
  LciResult r = lci_cocycle(w, {eq, eq, eq});
  CHECK(r.is_cocycle);
  CHECK(is_zero_cochain(w.seq.L, r.h));
  REQUIRE(r.global_section);
  CHECK(*r.global_section == m_coordinates(w, eq));
  REQUIRE(r.global_equations);
  CHECK(m_coordinates(w, *r.global_equations) == m_coordinates(w, eq));
}

TEST_CASE("lci with chart-wise equations") {
  WindowSequence w = symmetric_power_window(p2_standard_window(), 2);
  std::vector<LocalEquations> data;
  for (std::size_t i = 0; i < 3; ++i)
    data.push_back({WeightedTuple{1, {dehomogenize(form(1, -1, 0), i), dehomogenize(X(3), i)}}});
  LciResult r = lci_cocycle(w, data);
  CHECK(r.cut_out[0] == points({{point(1, 1, 0), 1}}));
  CHECK(r.cut_out[1] == points({{point(1, 1, 0), 1}}));
  CHECK(r.cut_out[2].is_zero());
  CHECK(r.is_cocycle);
  CHECK_FALSE(is_zero_cochain(w.seq.L, r.h));
  REQUIRE(r.global_section);
  const Nerve& n = w.seq.M.nerve();
  for (std::size_t i = 0; i < 3; ++i) CHECK(w.ch_of(*r.global_section, 0, i) == r.cut_out[i]);
  CHECK(cochains_equal(w.seq.L, coboundary(w.seq.L, *r.witness.witness), r.h));
  CHECK(n.count(1) == r.h.values.size());
}

TEST_CASE("lci with mismatched charts") {
  WindowSequence w = symmetric_power_window(p2_standard_window(), 2);
  LocalEquations a{WeightedTuple{1, {quotient(form(1, -1, 0), X(1)), quotient(X(3), X(1))}}};
  LocalEquations b{WeightedTuple{1, {quotient(form(1, 0, -1), X(1)), quotient(X(2), X(1))}}};
  try {
    lci_cocycle(w, {a, b, a});
    FAIL("expected PreconditionFailed");
  } catch (const PreconditionFailed& e) {
    CHECK(std::string(e.what()).find("U1 and U2") != std::string::npos);
  }
  CHECK_THROWS_AS(lci_cocycle(w, {a, a}), InvalidInput);
}

TEST_CASE("lci cocycles always land in Z and glue when trivial") {
  WindowSequence w = symmetric_power_window(p2_standard_window(), 2);
  gen::Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    // a global element plus chart-wise kernel elements
    std::vector<RationalFunction> h{random_function(rng, w.window), random_function(rng, w.window)};
    LocalEquations global{WeightedTuple{1, h}};
    std::vector<LocalEquations> data;
    for (std::size_t i = 0; i < 3; ++i) {
      LocalEquations eq = global;
      IntVector z = w.seq.iota.at(0, i) * std::span<const Integer>(gen::random_vector(rng, w.seq.L.group(0, i).generator_count(), 2));
      for (std::size_t m = 0; m < z.size(); ++m)
        if (z[m] != 0) eq.push_back(WeightedTuple{z[m], w.monomial_tuple(m)});
      data.push_back(std::move(eq));
    }
    LciResult r = lci_cocycle(w, data);
    CHECK(r.is_cocycle);
    if (r.global_section)
      for (std::size_t i = 0; i < 3; ++i) CHECK(w.ch_of(*r.global_section, 0, i) == r.cut_out[i]);
  }
}

TEST_CASE("P2 gerbe example") {
  P2GerbeExample ex = p2_gerbe_example();
  REQUIRE(ex.points.size() == 3);
  CHECK(ex.points[0] == point(1, 1, 0));
  CHECK(ex.points[1] == point(1, 0, 1));
  CHECK(ex.points[2] == point(0, 1, 1));
  for (const auto& d : ex.on_triple) CHECK(d.is_zero());
  CHECK(ex.c_is_cocycle);
  CHECK(ex.connecting.output_is_cocycle);
  CHECK(ex.connecting.output.degree == 2);
  // On the window the class is a coboundary: [1,1,0] on U_2, [1,0,1] + [0,1,1] on U_3.
  REQUIRE(ex.witness.witness);
  CHECK(cochains_equal(ex.window.seq.N, coboundary(ex.window.seq.N, *ex.witness.witness), ex.c));
  CHECK_FALSE(ex.nontrivial_in_window());
  CHECK_FALSE(ex.survives_quotient());
}
