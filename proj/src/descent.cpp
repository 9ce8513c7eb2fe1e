#include "cechkit/descent.hpp"

namespace cechkit {

TorsorMorphism restrict_to(const AbelianSheaf& band, const TorsorMorphism& f, const Simplex& s) {
  if (f.simplex == s) return f;
  return TorsorMorphism{f.source, f.target, s, band.restrict_element(f.simplex, s, f.offset)};
}

TorsorMorphism compose(const TorsorMorphism& second, const TorsorMorphism& first) {
  if (first.target != second.source)
    throw InvalidInput("cannot compose " + first.source + " -> " + first.target + " with " + second.source + " -> " +
                       second.target);
  if (first.simplex != second.simplex)
    throw InvalidInput("cannot compose morphisms over " + to_string(first.simplex) + " and " + to_string(second.simplex));
  return TorsorMorphism{first.source, second.target, first.simplex, add(first.offset, second.offset)};
}

TorsorMorphism inverse(const TorsorMorphism& f) { return TorsorMorphism{f.target, f.source, f.simplex, negate(f.offset)}; }

std::string image_label(const std::string& object) { return "h(" + object + ")"; }

namespace {

void expect(const TorsorMorphism& f, const std::string& source, const std::string& target, const Simplex& s,
            std::size_t length, const std::string& what) {
  if (f.source != source || f.target != target)
    throw InvalidInput(what + " on " + to_string(s) + " should go " + source + " -> " + target + " but goes " + f.source +
                       " -> " + f.target);
  if (f.simplex != s) throw InvalidInput(what + " on " + to_string(s) + " is attached to " + to_string(f.simplex));
  if (f.offset.size() != length) throw InvalidInput(what + " on " + to_string(s) + " has an offset of wrong length");
}

const std::string& object_at(const GerbeDescentDatum& d, const Simplex& s, std::size_t k) { return d.objects.at(s[k]); }

}  // namespace

void check_datum(const GerbeDescentDatum& d) {
  const Nerve& n = d.band.nerve();
  if (d.objects.size() != n.count(0)) throw InvalidInput("one object per open is required");
  if (d.transitions.size() != n.count(1)) throw InvalidInput("one transition per edge is required");
  for (std::size_t e = 0; e < n.count(1); ++e) {
    const Simplex& s = n.simplex(1, e);
    expect(d.transitions[e], object_at(d, s, 1), object_at(d, s, 0), s, d.band.group(1, e).generator_count(),
           "transition");
  }
  if (n.dimension_cap() < 3) throw InvalidInput("descent data need a dimension cap of at least 3");
  if (d.basepoint_defect.degree != 2) throw InvalidInput("basepoint defect must have degree 2");
  check_cochain(d.band, d.basepoint_defect);
}

CocycleVerdict transition_cocycle(const GerbeDescentDatum& d) {
  check_datum(d);
  const Nerve& n = d.band.nerve();
  Cochain c{2, {}};
  for (std::size_t t = 0; t < n.count(2); ++t) {
    const Simplex& s = n.simplex(2, t);
    auto edge = [&](std::size_t a, std::size_t b) {
      return restrict_to(d.band, d.transitions[n.require_index(Simplex({s[a], s[b]}))], s);
    };
    // x_k -> x_j -> x_i -> x_k
    TorsorMorphism loop = compose(inverse(edge(0, 2)), compose(edge(0, 1), edge(1, 2)));
    c.values.push_back(add(loop.offset, d.basepoint_defect.values[t]));
  }
  const bool closed = is_cocycle(d.band, c);
  return CocycleVerdict{std::move(c), closed};
}

bool torsor_relation_holds(const GerbeDescentDatum& d) {
  check_datum(d);
  const Nerve& n = d.band.nerve();
  for (std::size_t t = 0; t < n.count(2); ++t) {
    const Simplex& s = n.simplex(2, t);
    auto edge = [&](std::size_t a, std::size_t b) {
      return restrict_to(d.band, d.transitions[n.require_index(Simplex({s[a], s[b]}))], s);
    };
    TorsorMorphism through_j = compose(edge(0, 1), edge(1, 2));
    TorsorMorphism direct = edge(0, 2);
    if (!element_equal(d.band.group(2, t), add(through_j.offset, d.basepoint_defect.values[t]), direct.offset))
      return false;
  }
  return true;
}

void check_automorphism(const GerbeDescentDatum& d, const AutomorphismDatum& a) {
  check_datum(d);
  const Nerve& n = d.band.nerve();
  if (a.connecting.size() != n.count(0)) throw InvalidInput("one connecting morphism per open is required");
  if (a.images.size() != n.count(1)) throw InvalidInput("one image of a transition per edge is required");
  for (std::size_t i = 0; i < n.count(0); ++i)
    expect(a.connecting[i], d.objects[i], image_label(d.objects[i]), n.simplex(0, i),
           d.band.group(0, i).generator_count(), "connecting morphism");
  Cochain twist{1, {}};
  for (std::size_t e = 0; e < n.count(1); ++e) {
    const Simplex& s = n.simplex(1, e);
    expect(a.images[e], image_label(object_at(d, s, 1)), image_label(object_at(d, s, 0)), s,
           d.band.group(1, e).generator_count(), "image of transition");
    twist.values.push_back(subtract(a.images[e].offset, d.transitions[e].offset));
  }
  Cochain dt = coboundary(d.band, twist);
  for (std::size_t t = 0; t < n.count(2); ++t)
    if (!d.band.group(2, t).is_zero_element(dt.values[t]))
      throw PreconditionFailed("the automorphism does not respect composition on " + to_string(n.simplex(2, t)));
}

CocycleVerdict automorphism_to_cocycle(const GerbeDescentDatum& d, const AutomorphismDatum& a) {
  check_automorphism(d, a);
  const Nerve& n = d.band.nerve();
  Cochain h{1, {}};
  for (std::size_t e = 0; e < n.count(1); ++e) {
    const Simplex& s = n.simplex(1, e);
    TorsorMorphism li = restrict_to(d.band, a.connecting[s[0]], s);
    TorsorMorphism lj = restrict_to(d.band, a.connecting[s[1]], s);
    const TorsorMorphism& u = d.transitions[e];
    const TorsorMorphism& hu = a.images[e];
    TorsorMorphism hji = compose(inverse(lj), compose(inverse(hu), compose(li, u)));
    h.values.push_back(std::move(hji.offset));
  }
  const bool closed = is_cocycle(d.band, h);
  return CocycleVerdict{std::move(h), closed};
}

Gerbe21Result gerbe21_classifying(const GerbeDescentDatum& d, const ShortExactSequence& ext) {
  if (!(d.band == ext.N)) throw InvalidInput("the band of the datum is not the quotient sheaf of the sequence");
  const Nerve& n = d.band.nerve();
  if (n.dimension_cap() < 4) throw InvalidInput("the classifying 3-cocycle needs a dimension cap of at least 4");
  CocycleVerdict c = transition_cocycle(d);
  if (!c.is_cocycle) throw PreconditionFailed("gerbe21_classifying: the transition cocycle is not closed");

  Gerbe21Result r;
  r.lifted = Cochain{2, {}};
  for (std::size_t t = 0; t < n.count(2); ++t) {
    const IntMatrix& pi = ext.pi.at(2, t);
    auto sol = solve_linear(IntMatrix::hconcat(pi, ext.N.group(2, t).relations()), c.cochain.values[t]);
    if (!sol.solvable())
      throw PreconditionFailed("c on " + to_string(n.simplex(2, t)) + " has no lift to the middle sheaf");
    r.lifted.values.emplace_back(sol.solution->begin(), sol.solution->begin() + static_cast<std::ptrdiff_t>(pi.cols()));
  }
  r.boundary = Cochain{3, {}};
  r.output = Cochain{3, {}};
  for (std::size_t q = 0; q < n.count(3); ++q) {
    const Simplex& s = n.simplex(3, q);
    IntVector sum = zero_vector(ext.M.group(3, q).generator_count());
    for (std::size_t k = 0; k < s.size(); ++k) {
      const Simplex face = s.without(k);
      IntVector term = ext.M.restrict_element(face, s, r.lifted.values[n.require_index(face)]);
      sum = (k % 2 == 0) ? add(sum, term) : subtract(sum, term);
    }
    const IntMatrix& iota = ext.iota.at(3, q);
    auto sol = solve_linear(IntMatrix::hconcat(iota, ext.M.group(3, q).relations()), sum);
    if (!sol.solvable()) throw PreconditionFailed("boundary on " + to_string(s) + " does not come from the kernel");
    r.output.values.emplace_back(sol.solution->begin(), sol.solution->begin() + static_cast<std::ptrdiff_t>(iota.cols()));
    r.boundary.values.push_back(std::move(sum));
  }
  r.is_cocycle = is_cocycle(ext.L, r.output);
  return r;
}

}  // namespace cechkit
