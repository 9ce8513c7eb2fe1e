#include "cechkit/sheaf.hpp"

#include <algorithm>

namespace cechkit {

AbelianSheaf::AbelianSheaf(Nerve nerve) : nerve_(std::move(nerve)) {
  const std::size_t dims = nerve_.dimension_cap() + 1;
  groups_.resize(dims);
  restrictions_.resize(dims);
  for (std::size_t p = 0; p < dims; ++p) {
    groups_[p].assign(nerve_.count(p), AbelianGroup::free(0));
    restrictions_[p].assign(nerve_.count(p), std::vector<std::optional<IntMatrix>>(p == 0 ? 0 : p + 1));
  }
}

const AbelianGroup& AbelianSheaf::group(const Simplex& s) const {
  return groups_.at(s.dimension()).at(nerve_.require_index(s));
}

void AbelianSheaf::set_group(const Simplex& s, AbelianGroup g) {
  groups_.at(s.dimension()).at(nerve_.require_index(s)) = std::move(g);
}

const std::optional<IntMatrix>& AbelianSheaf::restriction_matrix(const Simplex& s,
                                                                 std::size_t omitted_position) const {
  return restrictions_.at(s.dimension()).at(nerve_.require_index(s)).at(omitted_position);
}

void AbelianSheaf::set_restriction(const Simplex& s, std::size_t omitted_position, IntMatrix matrix) {
  if (s.dimension() == 0) throw InvalidInput("a vertex has no faces to restrict from");
  if (omitted_position > s.dimension()) throw InvalidInput("omitted position out of range for " + to_string(s));
  restrictions_.at(s.dimension()).at(nerve_.require_index(s)).at(omitted_position) = std::move(matrix);
}

GroupMorphism AbelianSheaf::restriction(const Simplex& face, const Simplex& s) const {
  if (!s.contains(face)) throw InvalidInput(to_string(face) + " is not a face of " + to_string(s));
  GroupMorphism acc = identity_morphism(group(face));
  Simplex current = face;
  for (std::size_t idx : s.indices()) {
    if (std::binary_search(face.indices().begin(), face.indices().end(), idx)) continue;
    std::vector<std::size_t> next_indices = current.indices();
    next_indices.insert(std::upper_bound(next_indices.begin(), next_indices.end(), idx), idx);
    Simplex next(std::move(next_indices));
    std::size_t position = 0;
    while (next[position] != idx) ++position;
    const auto& m = restriction_matrix(next, position);
    if (!m) throw PreconditionFailed("missing restriction " + to_string(current) + " -> " + to_string(next));
    acc = compose(GroupMorphism{group(current), group(next), *m}, acc);
    current = std::move(next);
  }
  return acc;
}

IntVector AbelianSheaf::restrict_element(const Simplex& face, const Simplex& s, std::span<const Integer> value) const {
  return restriction(face, s).apply(value);
}

std::string to_string(ValidationIssue::Kind kind) {
  switch (kind) {
    case ValidationIssue::Kind::MissingRestriction: return "missing-restriction";
    case ValidationIssue::Kind::ShapeMismatch: return "shape-mismatch";
    case ValidationIssue::Kind::IllDefinedMorphism: return "ill-defined-morphism";
    case ValidationIssue::Kind::FunctorialityFailure: return "functoriality-failure";
    case ValidationIssue::Kind::ExactnessFailure: return "exactness-failure";
    case ValidationIssue::Kind::CompatibilityFailure: return "compatibility-failure";
  }
  return "unknown";
}

std::string to_string(const ValidationIssue& issue) {
  std::string where;
  for (const auto& s : issue.location) where += (where.empty() ? "" : " -> ") + to_string(s);
  return to_string(issue.kind) + " at " + where + ": " + issue.message;
}

ValidationReport validate_sheaf(const AbelianSheaf& sheaf) {
  using Kind = ValidationIssue::Kind;
  ValidationReport report;
  const Nerve& nerve = sheaf.nerve();
  std::vector<std::vector<bool>> usable(nerve.dimension_cap() + 1);

  for (std::size_t p = 1; p <= nerve.dimension_cap(); ++p) {
    for (std::size_t i = 0; i < nerve.count(p); ++i) {
      const Simplex& s = nerve.simplex(p, i);
      for (const auto& [face, pos] : faces(s)) {
        const auto& m = sheaf.restriction_matrix(p, i, pos);
        if (!m) {
          report.issues.push_back({Kind::MissingRestriction, {face, s}, "no restriction assigned"});
          continue;
        }
        const AbelianGroup& src = sheaf.group(face);
        const AbelianGroup& tgt = sheaf.group(p, i);
        if (m->rows() != tgt.generator_count() || m->cols() != src.generator_count()) {
          report.issues.push_back({Kind::ShapeMismatch, {face, s},
                                   "matrix is " + std::to_string(m->rows()) + "x" + std::to_string(m->cols()) +
                                       ", expected " + std::to_string(tgt.generator_count()) + "x" +
                                       std::to_string(src.generator_count())});
          continue;
        }
        GroupMorphism f{src, tgt, *m};
        if (auto bad = f.first_violated_relation())
          report.issues.push_back({Kind::IllDefinedMorphism, {face, s},
                                   "relation " + std::to_string(*bad) + " of the face group is not preserved"});
      }
    }
  }
  if (!report.ok()) return report;

  // Two routes from each codimension-two face must agree on generators.
  for (std::size_t p = 2; p <= nerve.dimension_cap(); ++p) {
    for (std::size_t i = 0; i < nerve.count(p); ++i) {
      const Simplex& s = nerve.simplex(p, i);
      const AbelianGroup& tgt = sheaf.group(p, i);
      for (std::size_t j = 0; j < s.size(); ++j)
        for (std::size_t k = j + 1; k < s.size(); ++k) {
          const Simplex via_j = s.without(j);
          const Simplex via_k = s.without(k);
          const Simplex bottom = via_j.without(k - 1);
          IntMatrix route_j = *sheaf.restriction_matrix(s, j) * *sheaf.restriction_matrix(via_j, k - 1);
          IntMatrix route_k = *sheaf.restriction_matrix(s, k) * *sheaf.restriction_matrix(via_k, j);
          for (std::size_t g = 0; g < route_j.cols(); ++g) {
            if (!element_equal(tgt, route_j.column(g), route_k.column(g))) {
              report.issues.push_back({Kind::FunctorialityFailure, {bottom, s},
                                       "routes through " + to_string(via_j) + " and " + to_string(via_k) +
                                           " disagree on generator " + std::to_string(g)});
              break;
            }
          }
        }
    }
  }
  return report;
}

AbelianSheaf constant_sheaf(const Nerve& nerve, const AbelianGroup& g) {
  AbelianSheaf sheaf(nerve);
  const IntMatrix id = IntMatrix::identity(g.generator_count());
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p)
    for (const auto& s : nerve.simplices(p)) {
      sheaf.set_group(s, g);
      for (const auto& f : faces(s)) sheaf.set_restriction(s, f.omitted_position, id);
    }
  return sheaf;
}

}  // namespace cechkit
