#include "cechkit/cech.hpp"

namespace cechkit {

namespace {

std::vector<std::size_t> block_offsets(const AbelianSheaf& sheaf, std::size_t p) {
  std::vector<std::size_t> off{0};
  for (std::size_t i = 0; i < sheaf.nerve().count(p); ++i)
    off.push_back(off.back() + sheaf.group(p, i).generator_count());
  return off;
}

void require_degree(const AbelianSheaf& sheaf, std::size_t p) {
  if (p + 1 > sheaf.nerve().dimension_cap())
    throw InvalidInput("degree " + std::to_string(p) + " needs simplices of dimension " + std::to_string(p + 1) +
                       " but the nerve is capped at " + std::to_string(sheaf.nerve().dimension_cap()));
}

}  // namespace

Cochain zero_cochain(const AbelianSheaf& sheaf, std::size_t degree) {
  Cochain c{degree, {}};
  for (std::size_t i = 0; i < sheaf.nerve().count(degree); ++i)
    c.values.push_back(zero_vector(sheaf.group(degree, i).generator_count()));
  return c;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || a.values.size() != b.values.size())
    throw DimensionMismatch("cochain sum: shapes differ");
  Cochain c{a.degree, {}};
  for (std::size_t i = 0; i < a.values.size(); ++i) c.values.push_back(add(a.values[i], b.values[i]));
  return c;
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || a.values.size() != b.values.size())
    throw DimensionMismatch("cochain difference: shapes differ");
  Cochain c{a.degree, {}};
  for (std::size_t i = 0; i < a.values.size(); ++i) c.values.push_back(subtract(a.values[i], b.values[i]));
  return c;
}

void check_cochain(const AbelianSheaf& sheaf, const Cochain& c) {
  const std::size_t p = c.degree;
  if (p > sheaf.nerve().dimension_cap())
    throw InvalidInput("cochain degree " + std::to_string(p) + " exceeds the dimension cap");
  if (c.values.size() != sheaf.nerve().count(p))
    throw InvalidInput("cochain of degree " + std::to_string(p) + " has " + std::to_string(c.values.size()) +
                       " values for " + std::to_string(sheaf.nerve().count(p)) + " simplices");
  for (std::size_t i = 0; i < c.values.size(); ++i)
    if (c.values[i].size() != sheaf.group(p, i).generator_count())
      throw InvalidInput("cochain value on " + to_string(sheaf.nerve().simplex(p, i)) + " has wrong length");
}

bool cochains_equal(const AbelianSheaf& sheaf, const Cochain& a, const Cochain& b) {
  check_cochain(sheaf, a);
  check_cochain(sheaf, b);
  if (a.degree != b.degree) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!element_equal(sheaf.group(a.degree, i), a.values[i], b.values[i])) return false;
  return true;
}

bool is_zero_cochain(const AbelianSheaf& sheaf, const Cochain& c) {
  return cochains_equal(sheaf, c, zero_cochain(sheaf, c.degree));
}

AbelianGroup cochain_group(const AbelianSheaf& sheaf, std::size_t p) {
  std::vector<AbelianGroup> parts;
  for (std::size_t i = 0; i < sheaf.nerve().count(p); ++i) parts.push_back(sheaf.group(p, i));
  return AbelianGroup::direct_sum(parts);
}

IntVector flatten(const Cochain& c) {
  IntVector flat;
  for (const auto& v : c.values) flat.insert(flat.end(), v.begin(), v.end());
  return flat;
}

Cochain unflatten(const AbelianSheaf& sheaf, std::size_t degree, std::span<const Integer> flat) {
  auto off = block_offsets(sheaf, degree);
  if (flat.size() != off.back()) throw DimensionMismatch("unflatten: length mismatch");
  Cochain c{degree, {}};
  for (std::size_t i = 0; i + 1 < off.size(); ++i)
    c.values.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(off[i]),
                          flat.begin() + static_cast<std::ptrdiff_t>(off[i + 1]));
  return c;
}

IntMatrix coboundary_matrix(const AbelianSheaf& sheaf, std::size_t p) {
  require_degree(sheaf, p);
  const Nerve& nerve = sheaf.nerve();
  auto src = block_offsets(sheaf, p);
  auto dst = block_offsets(sheaf, p + 1);
  IntMatrix d(dst.back(), src.back());
  for (std::size_t i = 0; i < nerve.count(p + 1); ++i) {
    const Simplex& s = nerve.simplex(p + 1, i);
    for (const auto& [face, pos] : faces(s)) {
      const auto& m = sheaf.restriction_matrix(p + 1, i, pos);
      if (!m) throw PreconditionFailed("missing restriction " + to_string(face) + " -> " + to_string(s));
      const std::size_t j = nerve.require_index(face);
      const long sign = (pos % 2 == 0) ? 1 : -1;
      for (std::size_t r = 0; r < m->rows(); ++r)
        for (std::size_t c = 0; c < m->cols(); ++c) d(dst[i] + r, src[j] + c) += sign * (*m)(r, c);
    }
  }
  return d;
}

Cochain coboundary(const AbelianSheaf& sheaf, const Cochain& w) {
  check_cochain(sheaf, w);
  require_degree(sheaf, w.degree);
  const Nerve& nerve = sheaf.nerve();
  const std::size_t p = w.degree;
  Cochain out = zero_cochain(sheaf, p + 1);
  for (std::size_t i = 0; i < nerve.count(p + 1); ++i) {
    const Simplex& s = nerve.simplex(p + 1, i);
    for (const auto& [face, pos] : faces(s)) {
      const auto& m = sheaf.restriction_matrix(p + 1, i, pos);
      if (!m) throw PreconditionFailed("missing restriction " + to_string(face) + " -> " + to_string(s));
      IntVector term = *m * std::span<const Integer>(w.values[nerve.require_index(face)]);
      out.values[i] = (pos % 2 == 0) ? add(out.values[i], term) : subtract(out.values[i], term);
    }
  }
  return out;
}

bool is_cocycle(const AbelianSheaf& sheaf, const Cochain& w) {
  return is_zero_cochain(sheaf, coboundary(sheaf, w));
}

CohomologyGroup cohomology(const AbelianSheaf& sheaf, std::size_t p) {
  require_degree(sheaf, p);
  const AbelianGroup cp = cochain_group(sheaf, p);
  const AbelianGroup cq = cochain_group(sheaf, p + 1);
  GroupMorphism dp{cp, cq, coboundary_matrix(sheaf, p)};
  IntMatrix cycles = preimage_of_zero(dp);  // basis of Z^p, contains relations of C^p

  // Relations of H^p in cycle-basis coordinates: the relations of C^p and
  // the image of d_{p-1}.
  IntMatrix generators_of_zero = cp.relations();
  if (p > 0) generators_of_zero = IntMatrix::hconcat(generators_of_zero, coboundary_matrix(sheaf, p - 1));
  std::vector<IntVector> rel_cols;
  for (std::size_t c = 0; c < generators_of_zero.cols(); ++c) {
    auto r = solve_linear(cycles, generators_of_zero.column(c));
    if (!r.solvable()) throw Error("internal: boundary is not a cycle");
    rel_cols.push_back(std::move(*r.solution));
  }
  AbelianGroup h(cycles.cols(), IntMatrix::from_columns(cycles.cols(), rel_cols));

  CohomologyGroup out;
  out.degree_ = p;
  out.sheaf_ = sheaf;
  out.cycle_basis_ = cycles;
  out.cochain_relations_ = cp.relations();
  out.simplified_ = simplify(h);
  IntMatrix reps = cycles * out.simplified_.from_simplified;
  for (std::size_t k = 0; k < reps.cols(); ++k) out.representatives_.push_back(unflatten(sheaf, p, reps.column(k)));
  return out;
}

IntVector CohomologyGroup::class_of(const Cochain& w) const {
  if (w.degree != degree_) throw InvalidInput("class_of: degree mismatch");
  if (!is_cocycle(sheaf_, w)) throw PreconditionFailed("class_of: cochain is not a cocycle");
  // w = cycles * z + relations * t
  IntMatrix system = IntMatrix::hconcat(cycle_basis_, cochain_relations_);
  auto r = solve_linear(system, flatten(w));
  if (!r.solvable()) throw Error("internal: cocycle outside the cycle lattice");
  IntVector z(r.solution->begin(), r.solution->begin() + static_cast<std::ptrdiff_t>(cycle_basis_.cols()));
  return simplified_.coordinates(z);
}

WitnessSystem witness_system(const AbelianSheaf& sheaf, const Cochain& w) {
  if (w.degree == 0) throw InvalidInput("coboundary witness needs degree >= 1");
  check_cochain(sheaf, w);
  IntMatrix d = coboundary_matrix(sheaf, w.degree - 1);
  IntMatrix rel = cochain_group(sheaf, w.degree).relations();
  return WitnessSystem{IntMatrix::hconcat(d, rel), flatten(w), d.cols()};
}

WitnessResult coboundary_witness(const AbelianSheaf& sheaf, const Cochain& w) {
  WitnessSystem sys = witness_system(sheaf, w);
  if (!is_cocycle(sheaf, w)) throw PreconditionFailed("coboundary_witness: input is not a cocycle");
  auto r = solve_linear(sys.matrix, sys.rhs);
  if (!r.solvable()) return WitnessResult{std::nullopt, std::move(r.infeasibility)};
  IntVector eta(r.solution->begin(), r.solution->begin() + static_cast<std::ptrdiff_t>(sys.cochain_unknowns));
  return WitnessResult{unflatten(sheaf, w.degree - 1, eta), std::nullopt};
}

}  // namespace cechkit
