#include "cechkit/projective.hpp"

#include <algorithm>
#include <functional>

namespace cechkit {

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw InvalidInput("the zero vector is not a point or a form");
  for (auto& x : v) x /= g;
  auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0)
    for (auto& x : v) x = -x;
  return v;
}

LinearForm LinearForm::coordinate(std::size_t i, std::size_t n) { return LinearForm(unit_vector(n, i)); }

namespace {

std::string bracket(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + "]";
}

std::string form_name(const IntVector& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    Integer mag = abs(c[i]);
    if (!s.empty()) s += negative ? " - " : " + ";
    else if (negative) s += "-";
    if (mag != 1) s += mag.get_str();
    s += "X" + std::to_string(i + 1);
  }
  return s;
}

std::size_t dimension_of(const Window& w) { return w.coordinates == 0 ? 0 : w.coordinates - 1; }

}  // namespace

std::string to_string(const ProjPoint& p) { return bracket(p.coordinates); }
std::string to_string(const LinearForm& f) { return form_name(f.coefficients); }

bool proportional(const LinearForm& f, const LinearForm& g) { return f == g; }

ProjPoint line_intersection(const LinearForm& f, const LinearForm& g) {
  const auto& a = f.coefficients;
  const auto& b = g.coefficients;
  if (a.size() != 3 || b.size() != 3) throw InvalidInput("line_intersection works on P^2 only");
  IntVector cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  if (is_zero(cross)) throw InvalidInput(to_string(f) + " and " + to_string(g) + " are proportional");
  return ProjPoint(std::move(cross));
}

bool point_in_chart(const ProjPoint& p, const Simplex& chart) {
  for (std::size_t i : chart.indices())
    if (i >= p.coordinates.size() || p.coordinates[i] == 0) return false;
  return true;
}

bool form_meets_chart(const LinearForm& f, const Simplex& chart) {
  for (std::size_t i : chart.indices())
    if (f == LinearForm::coordinate(i, f.coefficients.size())) return false;
  return true;
}

Integer RationalFunction::degree() const {
  Integer d = 0;
  for (const auto& [f, e] : exponents) d += e;
  return d;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  for (const auto& [f, e] : other.exponents)
    if ((exponents[f] += e) == 0) exponents.erase(f);
  for (const auto& [c, e] : other.constants)
    if ((constants[c] += e) == 0) constants.erase(c);
  return *this;
}

RationalFunction quotient(const LinearForm& numerator, const LinearForm& denominator) {
  RationalFunction r;
  r.exponents[numerator] += 1;
  if ((r.exponents[denominator] -= 1) == 0) r.exponents.erase(denominator);
  if (r.exponents.count(numerator) && r.exponents[numerator] == 0) r.exponents.erase(numerator);
  return r;
}

RationalFunction dehomogenize(const LinearForm& f, std::size_t chart) {
  return quotient(f, LinearForm::coordinate(chart, f.coefficients.size()));
}

RationalFunction constant(const std::string& name) {
  RationalFunction r;
  r.constants[name] = 1;
  return r;
}

std::string to_string(const RationalFunction& f) {
  std::string num, den;
  auto factor = [](const LinearForm& g, const Integer& e) {
    std::string s = "(" + to_string(g) + ")";
    return e == 1 ? s : s + "^" + e.get_str();
  };
  auto append = [&](const Integer& e, const std::string& term) {
    std::string& side = e > 0 ? num : den;
    if (!side.empty()) side += "*";
    side += term;
  };
  for (const auto& [c, e] : f.constants) append(e, abs(e) == 1 ? c : c + "^" + Integer(abs(e)).get_str());
  for (const auto& [g, e] : f.exponents) append(e, factor(g, abs(e)));
  if (num.empty()) num = "1";
  return den.empty() ? num : num + "/" + den;
}

void Divisor::add(const IntVector& key, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms.emplace(key, coefficient);
  if (!inserted && (it->second += coefficient) == 0) terms.erase(it);
}

Divisor& Divisor::operator+=(const Divisor& other) {
  if (!other.is_zero() && !is_zero() && other.codimension != codimension)
    throw DimensionMismatch("adding divisors of different codimension");
  if (is_zero()) codimension = other.codimension;
  for (const auto& [k, c] : other.terms) add(k, c);
  return *this;
}

Divisor point_divisor(const ProjPoint& p, long coefficient) {
  Divisor d{2, {}};
  d.add(p.coordinates, coefficient);
  return d;
}

std::string to_string(const Divisor& d) {
  if (d.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : d.terms) {
    const bool negative = c < 0;
    if (!s.empty()) s += negative ? " - " : " + ";
    else if (negative) s += "-";
    if (abs(c) != 1) s += Integer(abs(c)).get_str() + "*";
    s += d.codimension == 2 ? bracket(k) : "[" + form_name(k) + "]";
  }
  return s;
}

Divisor restrict_divisor(const Divisor& d, const Simplex& chart) {
  Divisor out{d.codimension, {}};
  for (const auto& [k, c] : d.terms) {
    const bool keep = d.codimension == 2 ? point_in_chart(ProjPoint(k), chart) : form_meets_chart(LinearForm(k), chart);
    if (keep) out.add(k, c);
  }
  return out;
}

Divisor ch(const std::vector<RationalFunction>& h, const std::optional<Simplex>& chart) {
  for (const auto& f : h)
    if (f.degree() != 0) throw InvalidInput("rational function " + to_string(f) + " does not have degree zero");
  Divisor d{h.size(), {}};
  if (h.size() == 1) {
    for (const auto& [f, e] : h[0].exponents) d.add(f.coefficients, e);
  } else if (h.size() == 2) {
    for (const auto& [f, a] : h[0].exponents)
      for (const auto& [g, b] : h[1].exponents) {
        if (proportional(f, g)) continue;  // no proper intersection
        d.add(line_intersection(f, g).coordinates, a * b);
      }
  } else {
    throw InvalidInput("ch_l is implemented for l = 1 and l = 2 only");
  }
  return chart ? restrict_divisor(d, *chart) : d;
}

Window p2_standard_window() {
  Window w{"P2 standard window", 3, {}, {}, {}};
  for (std::size_t i = 0; i < 3; ++i) w.forms.push_back(LinearForm::coordinate(i, 3));
  w.forms.push_back(LinearForm(IntVector{1, -1, 0}));
  w.forms.push_back(LinearForm(IntVector{1, 0, -1}));
  w.forms.push_back(LinearForm(IntVector{0, 1, -1}));
  for (unsigned mask = 1; mask < 8; ++mask)
    w.points.push_back(ProjPoint(IntVector{long(mask >> 2 & 1), long(mask >> 1 & 1), long(mask & 1)}));
  std::sort(w.points.begin(), w.points.end());
  return w;
}

Window p1_window() {
  Window w{"P1 window", 2, {}, {}, {}};
  w.forms = {LinearForm::coordinate(0, 2), LinearForm::coordinate(1, 2), LinearForm(IntVector{1, -1})};
  return w;
}

Window spec_k_window(std::vector<std::string> constants) {
  return Window{"Spec(k) window", 0, {}, {}, std::move(constants)};
}

void check_window(const Window& w) {
  if (w.coordinates != 0 && w.coordinates != 2 && w.coordinates != 3)
    throw InvalidInput("windows live on Spec(k), P^1 or P^2");
  if (w.coordinates == 0 && (!w.forms.empty() || !w.points.empty()))
    throw InvalidInput("a Spec(k) window has no forms or points");
  if (w.coordinates != 3 && !w.points.empty()) throw InvalidInput("codimension-2 points need P^2");
  for (const auto& f : w.forms) {
    if (f.coefficients.size() != w.coordinates) throw InvalidInput("form " + to_string(f) + " has the wrong length");
    if (primitive(f.coefficients) != f.coefficients) throw InvalidInput("form " + to_string(f) + " is not normalized");
  }
  for (const auto& p : w.points) {
    if (p.coordinates.size() != w.coordinates) throw InvalidInput("point " + to_string(p) + " has the wrong length");
    if (primitive(p.coordinates) != p.coordinates) throw InvalidInput("point " + to_string(p) + " is not normalized");
  }
  auto distinct = [](auto v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!distinct(w.forms)) throw InvalidInput("window forms repeat");
  if (!distinct(w.points)) throw InvalidInput("window points repeat");
  if (!distinct(w.constants)) throw InvalidInput("window constants repeat");
  if (w.coordinates == 3)
    for (std::size_t a = 0; a < w.forms.size(); ++a)
      for (std::size_t b = a + 1; b < w.forms.size(); ++b) {
        ProjPoint p = line_intersection(w.forms[a], w.forms[b]);
        if (std::find(w.points.begin(), w.points.end(), p) == w.points.end())
          throw InvalidInput("window not intersection-closed: " + to_string(w.forms[a]) + " and " + to_string(w.forms[b]) +
                             " meet at " + to_string(p));
      }
}

Nerve chart_nerve(const Window& w) {
  if (w.coordinates == 0) return build_nerve(Cover{{"Spec(k)"}, {}});
  std::vector<std::string> opens;
  for (std::size_t i = 0; i < w.coordinates; ++i) opens.push_back("U" + std::to_string(i + 1));
  return build_nerve(Cover::full(std::move(opens)));
}

IntVector WindowSequence::l_coordinates(const RationalFunction& f) const {
  if (f.degree() != 0) throw InvalidInput(to_string(f) + " does not have degree zero");
  const auto& forms = window.forms;
  IntVector out = zero_vector(l_basis.size());
  for (const auto& [g, e] : f.exponents) {
    auto it = std::find(forms.begin(), forms.end(), g);
    if (it == forms.end()) throw InvalidInput("form " + to_string(g) + " is not in the window");
    const std::size_t a = static_cast<std::size_t>(it - forms.begin());
    if (a > 0) out[a - 1] += e;
  }
  const std::size_t offset = forms.empty() ? 0 : forms.size() - 1;
  for (const auto& [c, e] : f.constants) {
    auto it = std::find(window.constants.begin(), window.constants.end(), c);
    if (it == window.constants.end()) throw InvalidInput("constant " + c + " is not in the window");
    out[offset + static_cast<std::size_t>(it - window.constants.begin())] += e;
  }
  return out;
}

IntVector WindowSequence::m_coordinates(const std::vector<RationalFunction>& tuple) const {
  if (tuple.size() != l) throw InvalidInput("expected " + std::to_string(l) + " functions in a tuple");
  std::vector<IntVector> x;
  for (const auto& f : tuple) x.push_back(l_coordinates(f));
  IntVector out = zero_vector(monomials.size());
  std::vector<std::size_t> idx(l, 0);
  const std::size_t r = l_basis.size();
  if (r == 0) return out;
  std::function<void(std::size_t, Integer)> expand = [&](std::size_t k, Integer product) {
    if (product == 0) return;
    if (k == l) {
      std::vector<std::size_t> key = idx;
      std::sort(key.begin(), key.end());
      auto it = std::lower_bound(monomials.begin(), monomials.end(), key);
      out[static_cast<std::size_t>(it - monomials.begin())] += product;
      return;
    }
    for (std::size_t i = 0; i < r; ++i) {
      idx[k] = i;
      expand(k + 1, product * x[k][i]);
    }
  };
  expand(0, 1);
  return out;
}

std::vector<RationalFunction> WindowSequence::monomial_tuple(std::size_t m) const {
  std::vector<RationalFunction> t;
  for (std::size_t i : monomials.at(m)) t.push_back(l_basis[i]);
  return t;
}

IntVector WindowSequence::cycle_coordinates(const Divisor& d, std::size_t p, std::size_t index) const {
  const auto& gens = cycle_generators.at(p).at(index);
  IntVector out = zero_vector(gens.size());
  if (d.is_zero()) return out;
  if (d.codimension != l) throw InvalidInput("divisor has codimension " + std::to_string(d.codimension));
  for (const auto& [k, c] : d.terms) {
    auto it = std::find(gens.begin(), gens.end(), k);
    if (it == gens.end())
      throw InvalidInput("cycle " + (l == 2 ? bracket(k) : form_name(k)) + " is not a window generator on " +
                         to_string(seq.N.nerve().simplex(p, index)));
    out[static_cast<std::size_t>(it - gens.begin())] = c;
  }
  return out;
}

Divisor WindowSequence::cycle_divisor(std::span<const Integer> coords, std::size_t p, std::size_t index) const {
  const auto& gens = cycle_generators.at(p).at(index);
  Divisor d{l, {}};
  for (std::size_t k = 0; k < gens.size(); ++k) d.add(gens[k], coords[k]);
  return d;
}

Divisor WindowSequence::ch_of(std::span<const Integer> m, std::size_t p, std::size_t index) const {
  return cycle_divisor(seq.pi.at(p, index) * m, p, index);
}

IntVector WindowSequence::kernel_coordinates(std::span<const Integer> m, std::size_t p, std::size_t index) const {
  auto x = preimage(seq.iota.at(p, index), seq.M.group(p, index), m);
  if (!x)
    throw PreconditionFailed("element of M^" + std::to_string(l) + " is not in Z(" + std::to_string(l) + ") on " +
                             to_string(seq.M.nerve().simplex(p, index)));
  return *x;
}

WindowSequence symmetric_power_window(const Window& w, std::size_t l) {
  check_window(w);
  if (l == 0 || l > 2) throw InvalidInput("only l = 1 and l = 2 are supported");
  WindowSequence out;
  out.window = w;
  out.l = l;
  for (std::size_t a = 1; a < w.forms.size(); ++a) out.l_basis.push_back(quotient(w.forms[a], w.forms[0]));
  for (const auto& c : w.constants) out.l_basis.push_back(constant(c));
  const std::size_t r = out.l_basis.size();
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> gen = [&](std::size_t start) {
    if (cur.size() == l) {
      out.monomials.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < r; ++i) {
      cur.push_back(i);
      gen(i);
      cur.pop_back();
    }
  };
  gen(0);

  const Nerve nerve = chart_nerve(w);
  const bool has_cycles = l <= dimension_of(w);
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p) {
    out.cycle_generators.emplace_back();
    for (std::size_t i = 0; i < nerve.count(p); ++i) {
      const Simplex& s = nerve.simplex(p, i);
      std::vector<IntVector> gens;
      if (has_cycles && l == 1)
        for (const auto& f : w.forms)
          if (form_meets_chart(f, s)) gens.push_back(f.coefficients);
      if (has_cycles && l == 2)
        for (const auto& pt : w.points)
          if (point_in_chart(pt, s)) gens.push_back(pt.coordinates);
      out.cycle_generators[p].push_back(std::move(gens));
    }
  }

  const std::size_t mrank = out.monomials.size();
  AbelianSheaf M = constant_sheaf(nerve, AbelianGroup::free(mrank));
  AbelianSheaf N(nerve);
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p)
    for (std::size_t i = 0; i < nerve.count(p); ++i)
      N.set_group(nerve.simplex(p, i), AbelianGroup::free(out.cycle_generators[p][i].size()));
  for (std::size_t p = 1; p <= nerve.dimension_cap(); ++p)
    for (std::size_t i = 0; i < nerve.count(p); ++i) {
      const Simplex& s = nerve.simplex(p, i);
      const auto& to = out.cycle_generators[p][i];
      for (const auto& [face, pos] : faces(s)) {
        const auto& from = out.cycle_generators[p - 1][nerve.require_index(face)];
        IntMatrix m(to.size(), from.size());
        for (std::size_t a = 0; a < to.size(); ++a)
          for (std::size_t b = 0; b < from.size(); ++b)
            if (to[a] == from[b]) m(a, b) = 1;
        N.set_restriction(s, pos, std::move(m));
      }
    }

  SheafMorphism pi, iota;
  AbelianSheaf Z(nerve);
  std::vector<std::vector<IntMatrix>> inclusions;
  for (std::size_t p = 0; p <= nerve.dimension_cap(); ++p) {
    pi.matrices.emplace_back();
    inclusions.emplace_back();
    for (std::size_t i = 0; i < nerve.count(p); ++i) {
      const Simplex& s = nerve.simplex(p, i);
      std::vector<IntVector> cols;
      for (std::size_t m = 0; m < mrank; ++m) {
        Divisor d = has_cycles ? ch(out.monomial_tuple(m), s) : Divisor{l, {}};
        cols.push_back(out.cycle_coordinates(d, p, i));
      }
      IntMatrix ch_matrix = IntMatrix::from_columns(out.cycle_generators[p][i].size(), cols);
      auto analysis = analyze_morphism(GroupMorphism{M.group(p, i), N.group(p, i), ch_matrix});
      Z.set_group(s, analysis.kernel);
      inclusions[p].push_back(analysis.kernel_inclusion.matrix);
      pi.matrices[p].push_back(std::move(ch_matrix));
    }
  }
  for (std::size_t p = 1; p <= nerve.dimension_cap(); ++p)
    for (std::size_t i = 0; i < nerve.count(p); ++i) {
      const Simplex& s = nerve.simplex(p, i);
      for (const auto& [face, pos] : faces(s)) {
        const IntMatrix& from = inclusions[p - 1][nerve.require_index(face)];
        std::vector<IntVector> cols;
        for (std::size_t c = 0; c < from.cols(); ++c) {
          auto x = solve_linear(inclusions[p][i], from.column(c));
          if (!x.solvable()) throw Error("internal: Z(l) does not restrict into Z(l)");
          cols.push_back(std::move(*x.solution));
        }
        Z.set_restriction(s, pos, IntMatrix::from_columns(inclusions[p][i].cols(), cols));
      }
    }
  iota.matrices = std::move(inclusions);
  out.seq = ShortExactSequence{std::move(Z), std::move(M), std::move(N), std::move(iota), std::move(pi)};
  return out;
}

IntVector m_coordinates(const WindowSequence& w, const LocalEquations& eq) {
  IntVector out = zero_vector(w.monomials.size());
  for (const auto& term : eq) out = add(out, scale(w.m_coordinates(term.functions), term.coefficient));
  return out;
}

LciResult lci_cocycle(const WindowSequence& w, const std::vector<LocalEquations>& per_chart) {
  const Nerve& nerve = w.seq.M.nerve();
  if (per_chart.size() != nerve.count(0))
    throw InvalidInput("expected local equations on " + std::to_string(nerve.count(0)) + " charts, got " +
                       std::to_string(per_chart.size()));
  LciResult r;
  for (std::size_t i = 0; i < per_chart.size(); ++i) {
    r.local_sections.push_back(m_coordinates(w, per_chart[i]));
    r.cut_out.push_back(w.ch_of(r.local_sections.back(), 0, i));
  }
  r.h = Cochain{1, {}};
  for (std::size_t e = 0; e < nerve.count(1); ++e) {
    const Simplex& s = nerve.simplex(1, e);
    IntVector fi = w.seq.M.restrict_element(Simplex({s[0]}), s, r.local_sections[s[0]]);
    IntVector fj = w.seq.M.restrict_element(Simplex({s[1]}), s, r.local_sections[s[1]]);
    IntVector diff = subtract(fj, fi);
    Divisor defect = w.ch_of(diff, 1, e);
    if (!defect.is_zero())
      throw PreconditionFailed("local equations on " + nerve.labels()[s[0]] + " and " + nerve.labels()[s[1]] +
                               " cut out different cycles on their intersection: F_j - F_i has ch " +
                               to_string(defect));
    r.h.values.push_back(w.kernel_coordinates(diff, 1, e));
  }
  r.is_cocycle = is_cocycle(w.seq.L, r.h);
  r.witness = coboundary_witness(w.seq.L, r.h);
  if (r.witness.witness) {
    std::optional<IntVector> global;
    for (std::size_t i = 0; i < nerve.count(0); ++i) {
      IntVector fi = w.seq.iota.at(0, i) * std::span<const Integer>(r.witness.witness->values[i]);
      IntVector candidate = subtract(r.local_sections[i], fi);
      if (global && *global != candidate) throw Error("internal: local corrections do not glue");
      global = std::move(candidate);
    }
    r.global_section = global;
    LocalEquations eq;
    for (std::size_t m = 0; m < global->size(); ++m)
      if ((*global)[m] != 0) eq.push_back(WeightedTuple{(*global)[m], w.monomial_tuple(m)});
    r.global_equations = std::move(eq);
  }
  return r;
}

P2GerbeExample p2_gerbe_example() {
  P2GerbeExample ex;
  ex.window = symmetric_power_window(p2_standard_window(), 2);
  const auto& seq = ex.window.seq;
  const Nerve& nerve = seq.N.nerve();
  const Simplex triple({0, 1, 2});
  ex.c = Cochain{1, {}};
  for (std::size_t e = 0; e < nerve.count(1); ++e) {
    const Simplex& s = nerve.simplex(1, e);
    const std::size_t k = 3 - s[0] - s[1];
    IntVector diff = zero_vector(3);
    diff[s[0]] = 1;
    diff[s[1]] = -1;
    LinearForm a(diff), b = LinearForm::coordinate(k, 3);
    ProjPoint p = line_intersection(a, b);
    ex.lines.emplace_back(a, b);
    ex.points.push_back(p);
    ex.c.values.push_back(ex.window.cycle_coordinates(point_divisor(p), 1, e));
    ex.on_triple.push_back(restrict_divisor(point_divisor(p), triple));
  }
  ex.c_is_cocycle = is_cocycle(seq.N, ex.c);
  ex.witness = coboundary_witness(seq.N, ex.c);
  ex.connecting = connecting_map(seq, ex.c);
  ex.obstruction = obstruction_quotient(seq, 1);
  ex.class_in_quotient = ex.obstruction.project(ex.c);
  return ex;
}

}  // namespace cechkit
