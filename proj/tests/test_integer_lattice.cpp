#include <numeric>
#include <random>

#include "cechkit/integer_lattice.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cechkit;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, long bound) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
  return m;
}

Integer determinant(const IntMatrix& m) {
  std::vector<std::vector<long long>> a(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).get_si();
  return Integer(std::to_string(oracle::determinant(a)));
}

void check_snf_invariants(const IntMatrix& a) {
  SNFDecomposition snf = smith_normal_form(a);
  REQUIRE(snf.U * a * snf.V == snf.S);
  CHECK(snf.U * snf.U_inverse == IntMatrix::identity(a.rows()));
  CHECK(snf.V * snf.V_inverse == IntMatrix::identity(a.cols()));
  CHECK(abs(determinant(snf.U)) == 1);
  CHECK(abs(determinant(snf.V)) == 1);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) CHECK(snf.S(r, c) == 0);
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
    if (i < snf.rank) {
      CHECK(snf.S(i, i) > 0);
      if (i + 1 < snf.rank) CHECK(mpz_divisible_p(snf.S(i + 1, i + 1).get_mpz_t(), snf.S(i, i).get_mpz_t()));
    } else {
      CHECK(snf.S(i, i) == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith normal form of the worked examples") {
  SUBCASE("[[2,4],[6,8]] has invariant factors 2 and 4") {
    // gcd of entries is 2; |det| = 8, so d_1 = 2 and d_2 = 8 / 2.
    IntMatrix a{{2, 4}, {6, 8}};
    auto snf = smith_normal_form(a);
    CHECK(snf.S == IntMatrix{{2, 0}, {0, 4}});
    CHECK(snf.U * a * snf.V == snf.S);
  }
  SUBCASE("zero matrix") {
    IntMatrix z(2, 3);
    auto snf = smith_normal_form(z);
    CHECK(snf.S == z);
    CHECK(snf.rank == 0);
  }
  SUBCASE("identity") {
    auto snf = smith_normal_form(IntMatrix::identity(3));
    CHECK(snf.S == IntMatrix::identity(3));
    CHECK(snf.U == IntMatrix::identity(3));
    CHECK(snf.V == IntMatrix::identity(3));
  }
  SUBCASE("empty shapes") {
    check_snf_invariants(IntMatrix(0, 3));
    check_snf_invariants(IntMatrix(3, 0));
  }
  SUBCASE("negative pivots are normalized") {
    IntMatrix a{{-3}};
    CHECK(smith_normal_form(a).S == IntMatrix{{3}});
  }
}

TEST_CASE("smith normal form matches the gcd-of-minors oracle on random matrices") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a = random_matrix(rng, 5, 9);
    check_snf_invariants(a);
    SNFDecomposition snf = smith_normal_form(a);
    std::vector<std::vector<long long>> raw(a.rows(), std::vector<long long>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) raw[r][c] = a(r, c).get_si();
    auto expected = oracle::determinantal_divisors(raw);
    Integer product = 1;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      product *= k < snf.rank ? snf.S(k, k) : Integer(0);
      CHECK_MESSAGE(product == Integer(std::to_string(expected[k])), "k = ", k + 1, " matrix ", to_string(a));
    }
  }
}

TEST_CASE("solve_linear worked examples") {
  SUBCASE("identity") {
    auto r = solve_linear(IntMatrix::identity(2), iv({3, -1}));
    REQUIRE(r.solvable());
    CHECK(*r.solution == iv({3, -1}));
  }
  SUBCASE("parity obstruction") {
    IntMatrix a{{2}};
    IntVector b = iv({3});
    auto r = solve_linear(a, b);
    CHECK_FALSE(r.solvable());
    REQUIRE(r.infeasibility);
    CHECK(r.infeasibility->verify(a, b));
  }
  SUBCASE("[[2,4],[6,8]] x = (2,6)") {
    // Exhaustive search over |x_i| <= 3 finds exactly (1,0).
    IntMatrix a{{2, 4}, {6, 8}};
    auto box = oracle::box_solutions({{2, 4}, {6, 8}}, {2, 6}, 3);
    REQUIRE(box.size() == 1);
    CHECK(box[0] == std::vector<long long>{1, 0});
    auto r = solve_linear(a, iv({2, 6}));
    REQUIRE(r.solvable());
    CHECK(*r.solution == iv({1, 0}));
  }
  SUBCASE("inconsistent rational system") {
    IntMatrix a{{1, 1}, {1, 1}};
    IntVector b = iv({1, 2});
    auto r = solve_linear(a, b);
    REQUIRE(r.infeasibility);
    CHECK(r.infeasibility->modulus == 0);
    CHECK(r.infeasibility->verify(a, b));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(solve_linear(IntMatrix::identity(2), iv({1})), DimensionMismatch);
  }
}

TEST_CASE("solve_linear agrees with the exhaustive box oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> rhs(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix a = random_matrix(rng, 3, 4);
    IntVector b(a.rows());
    std::vector<long long> raw_b(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      raw_b[i] = rhs(rng);
      b[i] = static_cast<long>(raw_b[i]);
    }
    std::vector<std::vector<long long>> raw(a.rows(), std::vector<long long>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) raw[r][c] = a(r, c).get_si();
    auto r = solve_linear(a, b);
    if (r.solvable()) {
      CHECK(a * std::span<const Integer>(*r.solution) == b);
    } else {
      CHECK(oracle::box_solutions(raw, raw_b, 10).empty());
      REQUIRE(r.infeasibility);
      CHECK(r.infeasibility->verify(a, b));
    }
  }
}

TEST_CASE("solve_linear returns one representative per solution coset") {
  // x + 2y = 3 has solutions (3 - 2t, t); the same coset reached through
  // different but equivalent systems must give the same answer.
  IntMatrix a{{1, 2}};
  auto r1 = solve_linear(a, iv({3}));
  auto r2 = solve_linear(IntMatrix{{1, 2}, {2, 4}}, iv({3, 6}));
  auto r3 = solve_linear(IntMatrix{{-1, -2}}, iv({-3}));
  REQUIRE(r1.solvable());
  CHECK(*r1.solution == *r2.solution);
  CHECK(*r1.solution == *r3.solution);
  CHECK(a * std::span<const Integer>(*r1.solution) == iv({3}));
}

TEST_CASE("analyze_morphism") {
  SUBCASE("times two on Z") {
    GroupMorphism f{AbelianGroup::free(1), AbelianGroup::free(1), IntMatrix{{2}}};
    auto a = analyze_morphism(f);
    CHECK(a.kernel.structure().is_trivial());
    CHECK(a.image.structure() == GroupStructure{1, {}});
    CHECK(a.cokernel.structure() == GroupStructure{0, {Integer(2)}});
  }
  SUBCASE("zero map on Z") {
    GroupMorphism f{AbelianGroup::free(1), AbelianGroup::free(1), IntMatrix{{0}}};
    auto a = analyze_morphism(f);
    CHECK(a.kernel.structure() == GroupStructure{1, {}});
    CHECK(a.image.structure().is_trivial());
    CHECK(a.cokernel.structure() == GroupStructure{1, {}});
  }
  SUBCASE("sum map Z^2 -> Z") {
    GroupMorphism f{AbelianGroup::free(2), AbelianGroup::free(1), IntMatrix{{1, 1}}};
    auto a = analyze_morphism(f);
    CHECK(a.kernel.structure() == GroupStructure{1, {}});
    CHECK(a.cokernel.structure().is_trivial());
    // The kernel inclusion lands in the kernel.
    for (std::size_t g = 0; g < a.kernel.generator_count(); ++g)
      CHECK(is_zero(f.apply(a.kernel_inclusion.matrix.column(g))));
  }
  SUBCASE("reduction Z/4 -> Z/2") {
    GroupMorphism f{AbelianGroup::cyclic(4), AbelianGroup::cyclic(2), IntMatrix{{1}}};
    auto a = analyze_morphism(f);
    CHECK(a.kernel.structure() == GroupStructure{0, {Integer(2)}});
    CHECK(a.image.structure() == GroupStructure{0, {Integer(2)}});
    CHECK(a.cokernel.structure().is_trivial());
  }
  SUBCASE("ill-defined map Z/2 -> Z") {
    GroupMorphism f{AbelianGroup::cyclic(2), AbelianGroup::free(1), IntMatrix{{1}}};
    CHECK_FALSE(f.is_well_defined());
    CHECK_THROWS_AS(analyze_morphism(f), IllDefinedMorphism);
  }
}

TEST_CASE("analyze_morphism rank additivity on free sources") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 5);
    GroupMorphism f{AbelianGroup::free(m.cols()), AbelianGroup::free(m.rows()), m};
    auto a = analyze_morphism(f);
    CHECK(a.kernel.structure().free_rank + a.image.structure().free_rank == m.cols());
  }
}

TEST_CASE("element_equal") {
  CHECK(element_equal(AbelianGroup::cyclic(4), iv({5}), iv({1})));
  CHECK_FALSE(element_equal(AbelianGroup::free(1), iv({5}), iv({1})));
  AbelianGroup g(2, IntMatrix{{2}, {2}});
  CHECK(element_equal(g, iv({3, 1}), iv({1, -1})));
  CHECK_FALSE(element_equal(g, iv({3, 1}), iv({1, 0})));
  CHECK_THROWS_AS(element_equal(g, iv({1}), iv({1, 0})), DimensionMismatch);
}

TEST_CASE("group structure and simplification") {
  AbelianGroup g(3, IntMatrix{{2, 0}, {0, 3}, {0, 0}});
  GroupStructure s = g.structure();
  CHECK(s.free_rank == 1);
  CHECK(s.torsion == IntVector{Integer(6)});
  CHECK(to_string(s) == "Z/6 + Z");
  SimplifiedGroup simple = simplify(g);
  CHECK(simple.group.generator_count() == 2);
  CHECK(simple.group.structure() == s);
  // Round trip through the new coordinates preserves the class.
  IntVector x = iv({1, 1, 5});
  IntVector back = simple.from_simplified * std::span<const Integer>(simple.coordinates(x));
  CHECK(element_equal(g, x, back));
}

TEST_CASE("column hermite basis and integer kernel") {
  IntMatrix k = integer_kernel(IntMatrix{{1, 1, 1}});
  CHECK(k.cols() == 2);
  CHECK((IntMatrix{{1, 1, 1}} * k).is_zero());
  IntMatrix h = column_hermite_basis(IntMatrix{{2, 4, 6}, {1, 1, 1}});
  CHECK(h.cols() == 2);
  CHECK(h(0, 0) == 2);
  CHECK(h(0, 1) == 0);
}
