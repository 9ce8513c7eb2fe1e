#include "cechkit/connecting.hpp"

namespace cechkit {

Cochain SheafMorphism::apply(const Cochain& c) const {
  Cochain out{c.degree, {}};
  for (std::size_t i = 0; i < c.values.size(); ++i) out.values.push_back(at(c.degree, i) * std::span<const Integer>(c.values[i]));
  return out;
}

std::optional<IntVector> preimage(const IntMatrix& map, const AbelianGroup& target, std::span<const Integer> y) {
  // map x + R t = y
  auto r = solve_linear(IntMatrix::hconcat(map, target.relations()), y);
  if (!r.solvable()) return std::nullopt;
  return IntVector(r.solution->begin(), r.solution->begin() + static_cast<std::ptrdiff_t>(map.cols()));
}

namespace {

using Kind = ValidationIssue::Kind;

void append(ValidationReport& into, const ValidationReport& from, const std::string& prefix) {
  for (auto issue : from.issues) {
    issue.message = prefix + ": " + issue.message;
    into.issues.push_back(std::move(issue));
  }
}

bool same_nerve(const AbelianSheaf& a, const AbelianSheaf& b) { return a.nerve() == b.nerve(); }

// Shape and well-definedness of a per-simplex morphism. Returns false if the
// morphism is unusable for further checks.
bool check_morphism(ValidationReport& report, const AbelianSheaf& from, const AbelianSheaf& to,
                    const SheafMorphism& f, const std::string& name) {
  const Nerve& nerve = from.nerve();
  bool usable = true;
  if (f.matrices.size() < nerve.dimension_cap() + 1) {
    report.issues.push_back({Kind::ShapeMismatch, {}, name + " lacks dimensions"});
    return false;
  }
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p) {
    if (f.matrices[p].size() != nerve.count(p)) {
      report.issues.push_back({Kind::ShapeMismatch, {}, name + " has the wrong number of matrices in dimension " +
                                                             std::to_string(p)});
      usable = false;
      continue;
    }
    for (std::size_t i = 0; i < nerve.count(p); ++i) {
      const Simplex& s = nerve.simplex(p, i);
      const IntMatrix& m = f.at(p, i);
      if (m.rows() != to.group(p, i).generator_count() || m.cols() != from.group(p, i).generator_count()) {
        report.issues.push_back({Kind::ShapeMismatch, {s}, name + " matrix has the wrong shape"});
        usable = false;
        continue;
      }
      GroupMorphism g{from.group(p, i), to.group(p, i), m};
      if (!g.is_well_defined()) {
        report.issues.push_back({Kind::IllDefinedMorphism, {s}, name + " does not preserve relations"});
        usable = false;
      }
    }
  }
  return usable;
}

// f commutes with the restrictions of `from` and `to`.
void check_compatibility(ValidationReport& report, const AbelianSheaf& from, const AbelianSheaf& to,
                         const SheafMorphism& f, const std::string& name) {
  const Nerve& nerve = from.nerve();
  for (std::size_t p = 1; p <= nerve.dimension_cap(); ++p)
    for (std::size_t i = 0; i < nerve.count(p); ++i) {
      const Simplex& s = nerve.simplex(p, i);
      for (const auto& [face, pos] : faces(s)) {
        const std::size_t j = nerve.require_index(face);
        IntMatrix left = *to.restriction_matrix(p, i, pos) * f.at(p - 1, j);
        IntMatrix right = f.at(p, i) * *from.restriction_matrix(p, i, pos);
        for (std::size_t g = 0; g < left.cols(); ++g)
          if (!element_equal(to.group(p, i), left.column(g), right.column(g))) {
            report.issues.push_back({Kind::CompatibilityFailure, {face, s}, name + " does not commute with restriction"});
            break;
          }
      }
    }
}

// Exactness of X --f--> Y --g--> Z at Y, simplex by simplex.
void check_exact_at(ValidationReport& report, const AbelianSheaf& x, const AbelianSheaf& y, const AbelianSheaf& z,
                    const SheafMorphism& f, const SheafMorphism& g, const std::string& where) {
  const Nerve& nerve = y.nerve();
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p)
    for (std::size_t i = 0; i < nerve.count(p); ++i) {
      const Simplex& s = nerve.simplex(p, i);
      IntMatrix composite = g.at(p, i) * f.at(p, i);
      bool zero = true;
      for (std::size_t c = 0; c < composite.cols() && zero; ++c)
        zero = z.group(p, i).is_zero_element(composite.column(c));
      if (!zero) {
        report.issues.push_back({Kind::ExactnessFailure, {s}, "composite through " + where + " is not zero"});
        continue;
      }
      auto analysis = analyze_morphism(GroupMorphism{y.group(p, i), z.group(p, i), g.at(p, i)});
      for (std::size_t c = 0; c < analysis.kernel_inclusion.matrix.cols(); ++c) {
        if (!preimage(f.at(p, i), y.group(p, i), analysis.kernel_inclusion.matrix.column(c))) {
          report.issues.push_back({Kind::ExactnessFailure, {s}, "kernel at " + where + " is larger than the image"});
          break;
        }
      }
      (void)x;
    }
}

void check_injective(ValidationReport& report, const AbelianSheaf& from, const AbelianSheaf& to,
                     const SheafMorphism& f, const std::string& name) {
  const Nerve& nerve = from.nerve();
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p)
    for (std::size_t i = 0; i < nerve.count(p); ++i) {
      auto a = analyze_morphism(GroupMorphism{from.group(p, i), to.group(p, i), f.at(p, i)});
      if (!a.kernel.is_trivial())
        report.issues.push_back({Kind::ExactnessFailure, {nerve.simplex(p, i)}, name + " is not injective"});
    }
}

void check_surjective(ValidationReport& report, const AbelianSheaf& from, const AbelianSheaf& to,
                      const SheafMorphism& f, const std::string& name) {
  const Nerve& nerve = from.nerve();
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p)
    for (std::size_t i = 0; i < nerve.count(p); ++i) {
      auto a = analyze_morphism(GroupMorphism{from.group(p, i), to.group(p, i), f.at(p, i)});
      if (!a.cokernel.is_trivial())
        report.issues.push_back({Kind::ExactnessFailure, {nerve.simplex(p, i)}, name + " is not surjective"});
    }
}

Cochain pull_back(const SheafMorphism& f, const AbelianSheaf& target, const Cochain& c, const LiftingChoice& choice,
                  const std::string& what) {
  Cochain out{c.degree, {}};
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    const IntMatrix& m = f.at(c.degree, i);
    const AbelianGroup& g = target.group(c.degree, i);
    if (auto it = choice.find(i); it != choice.end()) {
      if (it->second.size() != m.cols())
        throw PreconditionFailed("supplied " + what + " on simplex " + std::to_string(i) + " has the wrong length");
      if (!element_equal(g, m * std::span<const Integer>(it->second), c.values[i]))
        throw PreconditionFailed("supplied " + what + " on " + to_string(target.nerve().simplex(c.degree, i)) +
                                 " does not map onto the required value");
      out.values.push_back(it->second);
      continue;
    }
    auto x = preimage(m, g, c.values[i]);
    if (!x)
      throw PreconditionFailed("no " + what + " exists on " + to_string(target.nerve().simplex(c.degree, i)) +
                               "; the sequence is not exact there");
    out.values.push_back(std::move(*x));
  }
  return out;
}

}  // namespace

ValidationReport validate_exact(const ShortExactSequence& seq) {
  ValidationReport report;
  if (!same_nerve(seq.L, seq.M) || !same_nerve(seq.M, seq.N)) {
    report.issues.push_back({Kind::ShapeMismatch, {}, "sheaves live on different nerves"});
    return report;
  }
  append(report, validate_sheaf(seq.L), "L");
  append(report, validate_sheaf(seq.M), "M");
  append(report, validate_sheaf(seq.N), "N");
  if (!report.ok()) return report;
  bool usable = check_morphism(report, seq.L, seq.M, seq.iota, "iota");
  usable = check_morphism(report, seq.M, seq.N, seq.pi, "pi") && usable;
  if (!usable) return report;
  check_injective(report, seq.L, seq.M, seq.iota, "iota");
  check_surjective(report, seq.M, seq.N, seq.pi, "pi");
  check_exact_at(report, seq.L, seq.M, seq.N, seq.iota, seq.pi, "M");
  check_compatibility(report, seq.L, seq.M, seq.iota, "iota");
  check_compatibility(report, seq.M, seq.N, seq.pi, "pi");
  return report;
}

ConnectingResult connecting_map(const ShortExactSequence& seq, const Cochain& c, const LiftingChoice& choice) {
  check_cochain(seq.N, c);
  if (!is_cocycle(seq.N, c)) throw PreconditionFailed("connecting_map: input is not a cocycle");
  ConnectingResult r;
  r.lift = pull_back(seq.pi, seq.N, c, choice, "lift");
  // pull_back reports errors against the target's nerve; lifts live in M.
  r.lift_boundary = coboundary(seq.M, r.lift);
  r.output = pull_back(seq.iota, seq.M, r.lift_boundary, {}, "preimage under iota");
  r.output_is_cocycle = is_cocycle(seq.L, r.output);
  return r;
}

IntMatrix connecting_on_classes(const ShortExactSequence& seq, std::size_t p) {
  CohomologyGroup hn = cohomology(seq.N, p);
  CohomologyGroup hl = cohomology(seq.L, p + 1);
  std::vector<IntVector> cols;
  for (const auto& rep : hn.representatives()) cols.push_back(hl.class_of(connecting_map(seq, rep).output));
  return IntMatrix::from_columns(hl.group().generator_count(), cols);
}

IntVector ObstructionQuotient::project(const Cochain& cocycle_in_n) const {
  return quotient.coordinates(source.class_of(cocycle_in_n));
}

ObstructionQuotient obstruction_quotient(const ShortExactSequence& seq, std::size_t p) {
  CohomologyGroup hn = cohomology(seq.N, p);
  CohomologyGroup hm = cohomology(seq.M, p);
  std::vector<IntVector> cols;
  for (const auto& rep : hm.representatives()) cols.push_back(hn.class_of(seq.pi.apply(rep)));
  IntMatrix image = IntMatrix::from_columns(hn.group().generator_count(), cols);
  AbelianGroup q(hn.group().generator_count(), IntMatrix::hconcat(hn.group().relations(), image));
  SimplifiedGroup simple = simplify(q);
  return ObstructionQuotient{std::move(hn), std::move(image), std::move(simple)};
}

ValidationReport validate_extension(const TwoStepExtension& ext) {
  ValidationReport report;
  if (!same_nerve(ext.L, ext.A) || !same_nerve(ext.A, ext.B) || !same_nerve(ext.B, ext.N)) {
    report.issues.push_back({Kind::ShapeMismatch, {}, "sheaves live on different nerves"});
    return report;
  }
  append(report, validate_sheaf(ext.L), "L");
  append(report, validate_sheaf(ext.A), "A");
  append(report, validate_sheaf(ext.B), "B");
  append(report, validate_sheaf(ext.N), "N");
  if (!report.ok()) return report;
  bool usable = check_morphism(report, ext.L, ext.A, ext.alpha, "alpha");
  usable = check_morphism(report, ext.A, ext.B, ext.beta, "beta") && usable;
  usable = check_morphism(report, ext.B, ext.N, ext.gamma, "gamma") && usable;
  if (!usable) return report;
  check_injective(report, ext.L, ext.A, ext.alpha, "alpha");
  check_surjective(report, ext.B, ext.N, ext.gamma, "gamma");
  check_exact_at(report, ext.L, ext.A, ext.B, ext.alpha, ext.beta, "A");
  check_exact_at(report, ext.A, ext.B, ext.N, ext.beta, ext.gamma, "B");
  check_compatibility(report, ext.L, ext.A, ext.alpha, "alpha");
  check_compatibility(report, ext.A, ext.B, ext.beta, "beta");
  check_compatibility(report, ext.B, ext.N, ext.gamma, "gamma");
  return report;
}

TwoStepExtension splice(const ShortExactSequence& first, const ShortExactSequence& second) {
  if (!(first.N == second.L)) throw InvalidInput("splice: the quotient of the first sequence is not the kernel of the second");
  SheafMorphism beta;
  for (std::size_t p = 0; p < first.pi.matrices.size(); ++p) {
    beta.matrices.emplace_back();
    for (std::size_t i = 0; i < first.pi.matrices[p].size(); ++i)
      beta.matrices[p].push_back(second.iota.at(p, i) * first.pi.at(p, i));
  }
  return TwoStepExtension{first.L, first.M, second.M, second.N, first.iota, std::move(beta), second.pi};
}

StagedResult staged_connecting(const TwoStepExtension& ext, const Cochain& c, const LiftingChoice& lift_choice,
                               const LiftingChoice& preimage_choice) {
  check_cochain(ext.N, c);
  if (!is_cocycle(ext.N, c)) throw PreconditionFailed("staged_connecting: input is not a cocycle");
  StagedResult r;
  r.lift_b = pull_back(ext.gamma, ext.N, c, lift_choice, "lift to B");
  r.boundary_b = coboundary(ext.B, r.lift_b);
  r.preimage_a = pull_back(ext.beta, ext.B, r.boundary_b, preimage_choice, "preimage in A");
  r.boundary_a = coboundary(ext.A, r.preimage_a);
  r.output = pull_back(ext.alpha, ext.A, r.boundary_a, {}, "preimage in L");
  r.output_is_cocycle = is_cocycle(ext.L, r.output);
  return r;
}

}  // namespace cechkit
