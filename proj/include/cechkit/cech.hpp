// Cech cochains, the alternating coboundary, cohomology and coboundary
// witnesses. Cocycle and witness questions are flattened into one integer
// system over the generator coordinates of all simplices of a degree.
#ifndef CECHKIT_CECH_HPP
#define CECHKIT_CECH_HPP

#include <optional>
#include <vector>

#include "cechkit/sheaf.hpp"

namespace cechkit {

/// values[k] is the element on the k-th p-simplex of the nerve.
struct Cochain {
  std::size_t degree = 0;
  std::vector<IntVector> values;

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

Cochain zero_cochain(const AbelianSheaf& sheaf, std::size_t degree);
Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);

/// Throws InvalidInput if the cochain does not fit the sheaf.
void check_cochain(const AbelianSheaf& sheaf, const Cochain& c);

/// Equality of every value modulo the relations of its group.
bool cochains_equal(const AbelianSheaf& sheaf, const Cochain& a, const Cochain& b);
bool is_zero_cochain(const AbelianSheaf& sheaf, const Cochain& c);

/// C^p as one group: the direct sum over the p-simplices.
AbelianGroup cochain_group(const AbelianSheaf& sheaf, std::size_t p);
IntVector flatten(const Cochain& c);
Cochain unflatten(const AbelianSheaf& sheaf, std::size_t degree, std::span<const Integer> flat);

/// Block matrix of d_p : C^p -> C^{p+1}.
/// Throws InvalidInput when p + 1 exceeds the nerve's dimension cap.
IntMatrix coboundary_matrix(const AbelianSheaf& sheaf, std::size_t p);

/// (dw) on i_0..i_{p+1} is the alternating sum over k of the restriction of
/// w on the face without i_k.
Cochain coboundary(const AbelianSheaf& sheaf, const Cochain& w);

bool is_cocycle(const AbelianSheaf& sheaf, const Cochain& w);

/// H^p in Smith form together with one representative cocycle per
/// generator.
class CohomologyGroup {
 public:
  std::size_t degree() const { return degree_; }
  const AbelianGroup& group() const { return simplified_.group; }
  GroupStructure structure() const { return simplified_.group.structure(); }
  const std::vector<Cochain>& representatives() const { return representatives_; }

  /// Coordinates of the class of a cocycle, torsion coordinates in [0, d).
  /// Throws PreconditionFailed when `w` is not a cocycle.
  IntVector class_of(const Cochain& w) const;

 private:
  friend CohomologyGroup cohomology(const AbelianSheaf& sheaf, std::size_t p);

  std::size_t degree_ = 0;
  AbelianSheaf sheaf_;
  IntMatrix cycle_basis_;       // flattened C^p coordinates x k
  IntMatrix cochain_relations_; // relations of C^p
  SimplifiedGroup simplified_;
  std::vector<Cochain> representatives_;
};

/// H^p = ker d_p / im d_{p-1}. Throws InvalidInput when p + 1 exceeds the
/// dimension cap.
CohomologyGroup cohomology(const AbelianSheaf& sheaf, std::size_t p);

/// The integer system behind a witness question: unknowns are the
/// flattened (p-1)-cochain followed by one multiplier per relation of C^p.
struct WitnessSystem {
  IntMatrix matrix;
  IntVector rhs;
  std::size_t cochain_unknowns = 0;
};

WitnessSystem witness_system(const AbelianSheaf& sheaf, const Cochain& w);

struct WitnessResult {
  std::optional<Cochain> witness;                  // d(witness) = w
  std::optional<IntegerInfeasibility> certificate;  // for witness_system(w)

  bool trivial() const { return witness.has_value(); }
};

/// Searches for eta with d(eta) = w. Absence comes with an integer
/// infeasibility certificate. Throws PreconditionFailed if w is not a
/// cocycle and InvalidInput for degree 0.
WitnessResult coboundary_witness(const AbelianSheaf& sheaf, const Cochain& w);

}  // namespace cechkit

#endif  // CECHKIT_CECH_HPP
