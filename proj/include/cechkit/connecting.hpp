// Short exact sequences of sheaves, the connecting homomorphism by
// lift-then-boundary, the obstruction quotient H^p(N) / im H^p(M), and the
// two-stage connecting map of a four-term exact sequence.
#ifndef CECHKIT_CONNECTING_HPP
#define CECHKIT_CONNECTING_HPP

#include <map>
#include <optional>

#include "cechkit/cech.hpp"

namespace cechkit {

/// Per-simplex morphisms between two sheaves on the same nerve:
/// matrices[p][index] maps the group of `from` to the group of `to`.
struct SheafMorphism {
  std::vector<std::vector<IntMatrix>> matrices;

  const IntMatrix& at(std::size_t p, std::size_t index) const { return matrices.at(p).at(index); }
  /// Applies the morphism value by value.
  Cochain apply(const Cochain& c) const;

  friend bool operator==(const SheafMorphism&, const SheafMorphism&) = default;
};

/// 0 -> L -> M -> N -> 0.
struct ShortExactSequence {
  AbelianSheaf L, M, N;
  SheafMorphism iota;  // L -> M
  SheafMorphism pi;    // M -> N
};

/// Per simplex: iota injective, pi surjective, im iota = ker pi. Both maps
/// must commute with restrictions. The three sheaves are validated too.
ValidationReport validate_exact(const ShortExactSequence& seq);

/// Caller-chosen lifts keyed by simplex index in the lifted degree. Each
/// value must map onto the cocycle's value; unlisted simplices use the
/// deterministic lift.
using LiftingChoice = std::map<std::size_t, IntVector>;

struct ConnectingResult {
  Cochain lift;             // degree p in M
  Cochain lift_boundary;    // degree p+1 in M, equal to iota(output)
  Cochain output;           // degree p+1 in L
  bool output_is_cocycle = false;
};

/// Lifts c to M simplex by simplex, takes the Cech boundary and pulls it
/// back through iota. Throws PreconditionFailed when c is not a cocycle,
/// a lift cannot be solved, or a supplied lift does not map onto c.
ConnectingResult connecting_map(const ShortExactSequence& seq, const Cochain& c,
                                const LiftingChoice& choice = {});

struct ObstructionQuotient {
  CohomologyGroup source;        // H^p(N)
  IntMatrix image_of_middle;     // columns: classes pi_*(H^p(M) generators) in H^p(N)
  SimplifiedGroup quotient;      // H^p(N) / image, with projection from H^p(N) coords
  IntVector project(const Cochain& cocycle_in_n) const;
};

ObstructionQuotient obstruction_quotient(const ShortExactSequence& seq, std::size_t p);

/// Matrix of the connecting map H^p(N) -> H^{p+1}(L) in Smith coordinates.
IntMatrix connecting_on_classes(const ShortExactSequence& seq, std::size_t p);

/// 0 -> L -> A -> B -> N -> 0, exact at every interior term.
struct TwoStepExtension {
  AbelianSheaf L, A, B, N;
  SheafMorphism alpha;  // L -> A
  SheafMorphism beta;   // A -> B
  SheafMorphism gamma;  // B -> N
};

ValidationReport validate_extension(const TwoStepExtension& ext);

/// Splices 0 -> L -> A -> K -> 0 and 0 -> K -> B -> N -> 0 along K.
/// Throws InvalidInput unless the first quotient equals the second kernel.
TwoStepExtension splice(const ShortExactSequence& first, const ShortExactSequence& second);

struct StagedResult {
  Cochain lift_b;         // degree p in B
  Cochain boundary_b;     // degree p+1 in B
  Cochain preimage_a;     // degree p+1 in A
  Cochain boundary_a;     // degree p+2 in A
  Cochain output;         // degree p+2 in L
  bool output_is_cocycle = false;
};

/// Lift to B, boundary, pull back to A, boundary, pull back to L.
/// `lift_choice` overrides lifts to B, `preimage_choice` overrides the
/// (non-unique) preimages in A.
StagedResult staged_connecting(const TwoStepExtension& ext, const Cochain& c, const LiftingChoice& lift_choice = {},
                               const LiftingChoice& preimage_choice = {});

/// Solves map(x) = y in the target group; the shared lifting primitive.
std::optional<IntVector> preimage(const IntMatrix& map, const AbelianGroup& target, std::span<const Integer> y);

}  // namespace cechkit

#endif  // CECHKIT_CONNECTING_HPP
