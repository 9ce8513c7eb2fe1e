// Exact linear algebra over the integers: Smith normal form, integer
// solving with infeasibility certificates, and finitely presented abelian
// groups.
#ifndef CECHKIT_INTEGER_LATTICE_HPP
#define CECHKIT_INTEGER_LATTICE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cechkit/errors.hpp"

namespace cechkit {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector zero_vector(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t i);
IntVector add(std::span<const Integer> a, std::span<const Integer> b);
IntVector subtract(std::span<const Integer> a, std::span<const Integer> b);
IntVector negate(std::span<const Integer> a);
IntVector scale(std::span<const Integer> a, const Integer& k);
bool is_zero(std::span<const Integer> a);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);
std::string to_string(std::span<const Integer> v);

/// Dense row-major integer matrix. A matrix may have zero rows or zero
/// columns; the empty-column matrix is how free groups are presented.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);
  static IntMatrix hconcat(const IntMatrix& left, const IntMatrix& right);
  static IntMatrix vconcat(const IntMatrix& top, const IntMatrix& bottom);
  static IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix column_range(std::size_t begin, std::size_t end) const;
  IntMatrix row_range(std::size_t begin, std::size_t end) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  // Elementary operations; used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[target] += k * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& k);
  /// col[target] += k * col[source]
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& k);
  void negate_row(std::size_t r);
  void negate_column(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, std::span<const Integer> x);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

std::string to_string(const IntMatrix& m);

/// U * A * V = S with U, V unimodular. The inverses are tracked alongside so
/// that callers can change coordinates in both directions without inverting.
struct SNFDecomposition {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  IntMatrix U_inverse;
  IntMatrix V_inverse;
  std::size_t rank = 0;

  /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
  IntVector invariant_factors() const;
};

/// Smallest-absolute-value pivot, ties to the lowest (row, col); rows are
/// cleared before columns. Deterministic for a given input.
SNFDecomposition smith_normal_form(const IntMatrix& a);

/// Witness that A x = b has no integer solution: y.A is divisible by
/// `modulus` entrywise while y.b is not. A modulus of zero means y.A = 0
/// and y.b != 0 (no rational solution either).
struct IntegerInfeasibility {
  IntVector multiplier;
  Integer modulus;

  bool verify(const IntMatrix& a, std::span<const Integer> b) const;
};

struct LinearSolveResult {
  std::optional<IntVector> solution;
  std::optional<IntegerInfeasibility> infeasibility;

  bool solvable() const { return solution.has_value(); }
};

/// Solves A x = b over the integers. When solvable, the returned x is the
/// canonical representative of the solution coset: the pivot coordinates of
/// the Hermite basis of ker(A) are reduced to the symmetric residue range.
/// Otherwise an infeasibility certificate is returned.
/// Throws DimensionMismatch when b.size() != A.rows().
LinearSolveResult solve_linear(const IntMatrix& a, std::span<const Integer> b);

/// Column-style Hermite basis of the lattice spanned by the columns of m:
/// an echelon basis with strictly increasing pivot rows and positive pivots.
/// Zero columns are dropped, so the result has full column rank.
IntMatrix column_hermite_basis(const IntMatrix& m);

/// Basis (as columns) of the integer kernel {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Isomorphism type of a finitely generated abelian group.
struct GroupStructure {
  std::size_t free_rank = 0;
  IntVector torsion;  // invariant factors > 1, in divisibility order

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

std::string to_string(const GroupStructure& g);

/// Z^generator_count modulo the column span of the relation matrix.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  AbelianGroup(std::size_t generator_count, IntMatrix relations);

  static AbelianGroup free(std::size_t rank);
  static AbelianGroup cyclic(long order);  // order 0 is Z
  static AbelianGroup direct_sum(const std::vector<AbelianGroup>& parts);

  std::size_t generator_count() const { return generators_; }
  const IntMatrix& relations() const { return relations_; }

  GroupStructure structure() const;
  bool is_trivial() const;

  /// True iff v lies in the relation lattice.
  bool is_zero_element(std::span<const Integer> v) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t generators_ = 0;
  IntMatrix relations_{0, 0};
};

/// Element equality modulo relations. Throws DimensionMismatch on bad lengths.
bool element_equal(const AbelianGroup& g, std::span<const Integer> a, std::span<const Integer> b);

/// A homomorphism given by its action on generator coordinates.
struct GroupMorphism {
  AbelianGroup source;
  AbelianGroup target;
  IntMatrix matrix;  // target.generator_count() x source.generator_count()

  IntVector apply(std::span<const Integer> x) const;
  /// Every source relation maps into the target relation lattice.
  bool is_well_defined() const;
  /// The first source relation whose image is not a target relation, if any.
  std::optional<std::size_t> first_violated_relation() const;
};

GroupMorphism compose(const GroupMorphism& second, const GroupMorphism& first);
GroupMorphism identity_morphism(const AbelianGroup& g);

struct MorphismAnalysis {
  AbelianGroup kernel;
  GroupMorphism kernel_inclusion;     // kernel -> source
  AbelianGroup image;
  GroupMorphism image_inclusion;      // image -> target
  AbelianGroup cokernel;
  GroupMorphism cokernel_projection;  // target -> cokernel
};

/// Kernel, image and cokernel with their structure maps.
/// Throws IllDefinedMorphism when a source relation is not preserved.
MorphismAnalysis analyze_morphism(const GroupMorphism& f);

/// Coordinates of the preimage lattice {x : f(x) = 0 in target}, as a
/// Hermite basis. This lattice always contains the source relations.
IntMatrix preimage_of_zero(const GroupMorphism& f);

/// A group rewritten in Smith form: generators with invariant factor 1 are
/// dropped, so the relations are diagonal (torsion first, then free).
struct SimplifiedGroup {
  AbelianGroup group;
  IntMatrix to_simplified;    // new coordinates from old
  IntMatrix from_simplified;  // old coordinates from new

  /// New coordinates of an old element, with torsion coordinates reduced to
  /// [0, d).
  IntVector coordinates(std::span<const Integer> old_element) const;
};

SimplifiedGroup simplify(const AbelianGroup& g);

}  // namespace cechkit

#endif  // CECHKIT_INTEGER_LATTICE_HPP
