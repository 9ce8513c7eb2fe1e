// Sheaves of finitely presented abelian groups on a nerve.
#ifndef CECHKIT_SHEAF_HPP
#define CECHKIT_SHEAF_HPP

#include <optional>
#include <string>
#include <vector>

#include "cechkit/integer_lattice.hpp"
#include "cechkit/nerve.hpp"

namespace cechkit {

/// One group per simplex and one restriction matrix per codimension-one
/// face inclusion. Deeper restrictions are composites.
class AbelianSheaf {
 public:
  AbelianSheaf() = default;
  /// Every group starts trivial with no restrictions assigned.
  explicit AbelianSheaf(Nerve nerve);

  const Nerve& nerve() const { return nerve_; }

  const AbelianGroup& group(std::size_t p, std::size_t index) const { return groups_.at(p).at(index); }
  const AbelianGroup& group(const Simplex& s) const;
  void set_group(const Simplex& s, AbelianGroup g);

  /// Restriction from the face of `s` with `omitted_position` deleted into
  /// the group at `s`, as a matrix (target gens x source gens).
  const std::optional<IntMatrix>& restriction_matrix(const Simplex& s, std::size_t omitted_position) const;
  const std::optional<IntMatrix>& restriction_matrix(std::size_t p, std::size_t index,
                                                     std::size_t omitted_position) const {
    return restrictions_.at(p).at(index).at(omitted_position);
  }
  void set_restriction(const Simplex& s, std::size_t omitted_position, IntMatrix matrix);

  /// Restriction along face ⊂ s of any codimension: the chain adds the
  /// missing indices of `s` to `face` in increasing order.
  /// Throws PreconditionFailed if a needed restriction is missing.
  GroupMorphism restriction(const Simplex& face, const Simplex& s) const;

  IntVector restrict_element(const Simplex& face, const Simplex& s, std::span<const Integer> value) const;

  friend bool operator==(const AbelianSheaf&, const AbelianSheaf&) = default;

 private:
  Nerve nerve_;
  std::vector<std::vector<AbelianGroup>> groups_;
  // [p][index][omitted position]
  std::vector<std::vector<std::vector<std::optional<IntMatrix>>>> restrictions_;
};

struct ValidationIssue {
  enum class Kind { MissingRestriction, ShapeMismatch, IllDefinedMorphism, FunctorialityFailure, ExactnessFailure,
                    CompatibilityFailure };
  Kind kind;
  std::vector<Simplex> location;
  std::string message;
};

std::string to_string(ValidationIssue::Kind kind);
std::string to_string(const ValidationIssue& issue);

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Missing restrictions, ill-defined restriction morphisms and failures of
/// functoriality on codimension-two inclusions.
ValidationReport validate_sheaf(const AbelianSheaf& sheaf);

/// The same group everywhere with identity restrictions.
AbelianSheaf constant_sheaf(const Nerve& nerve, const AbelianGroup& g);

}  // namespace cechkit

#endif  // CECHKIT_SHEAF_HPP
