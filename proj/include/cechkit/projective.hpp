// Exact projective geometry over Q on P^1 and P^2 restricted to linear
// forms: points, forms, degree-zero rational functions, divisors, the map
// ch_l, finitely generated windows of the sequence Z(l) -> M^l -> CH^l on the
// standard chart cover, local complete intersection cocycles and the P^2
// gerbe example.
#ifndef CECHKIT_PROJECTIVE_HPP
#define CECHKIT_PROJECTIVE_HPP

#include <map>
#include <optional>
#include <string>

#include "cechkit/connecting.hpp"

namespace cechkit {

/// Divides by the gcd and makes the first nonzero entry positive. Throws
/// InvalidInput on the zero vector.
IntVector primitive(IntVector v);

struct ProjPoint {
  IntVector coordinates;  // primitive, first nonzero entry positive

  ProjPoint() = default;
  explicit ProjPoint(IntVector coords) : coordinates(primitive(std::move(coords))) {}

  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

struct LinearForm {
  IntVector coefficients;  // primitive, first nonzero entry positive

  LinearForm() = default;
  explicit LinearForm(IntVector coeffs) : coefficients(primitive(std::move(coeffs))) {}
  /// X_i, 0-based.
  static LinearForm coordinate(std::size_t i, std::size_t n);

  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
};

std::string to_string(const ProjPoint& p);
std::string to_string(const LinearForm& f);

bool proportional(const LinearForm& f, const LinearForm& g);

/// Common zero of two forms on P^2 (cross product). Throws InvalidInput for
/// proportional forms or other ambient dimensions.
ProjPoint line_intersection(const LinearForm& f, const LinearForm& g);

/// U_sigma = { X_i != 0 for i in sigma }.
bool point_in_chart(const ProjPoint& p, const Simplex& chart);
/// The zero locus of f meets U_sigma unless f is some X_i with i in sigma.
bool form_meets_chart(const LinearForm& f, const Simplex& chart);

/// Product of linear forms with integer exponents of total degree zero,
/// times formal constants (used by the Spec(k) model).
struct RationalFunction {
  std::map<LinearForm, Integer> exponents;
  std::map<std::string, Integer> constants;

  Integer degree() const;
  RationalFunction& operator*=(const RationalFunction& other);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

RationalFunction quotient(const LinearForm& numerator, const LinearForm& denominator);
/// f / X_chart, the function f represents on the chart U_chart.
RationalFunction dehomogenize(const LinearForm& f, std::size_t chart);
RationalFunction constant(const std::string& name);
std::string to_string(const RationalFunction& f);

/// Formal combination of codimension-1 (forms) or codimension-2 (points)
/// subvarieties. Zero coefficients are never stored.
struct Divisor {
  std::size_t codimension = 1;
  std::map<IntVector, Integer> terms;  // form coefficients or point coordinates

  void add(const IntVector& key, const Integer& coefficient);
  Divisor& operator+=(const Divisor& other);
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const Divisor&, const Divisor&) = default;
};

Divisor point_divisor(const ProjPoint& p, long coefficient = 1);
std::string to_string(const Divisor& d);
Divisor restrict_divisor(const Divisor& d, const Simplex& chart);

/// The principal divisor (l = 1) or the bilinear intersection product of
/// the components (l = 2), where proportional pairs contribute zero.
/// Restricted to the chart when one is given. Throws InvalidInput for
/// l outside {1, 2} and for l = 2 off P^2.
Divisor ch(const std::vector<RationalFunction>& h, const std::optional<Simplex>& chart = std::nullopt);

/// Finite truncation of the rational function and cycle sheaves.
struct Window {
  std::string name;
  std::size_t coordinates = 3;  // n + 1 for P^n, 0 for Spec(k)
  std::vector<LinearForm> forms;
  std::vector<ProjPoint> points;
  std::vector<std::string> constants;
};

/// Forms X_1, X_2, X_3, X_1 - X_2, X_1 - X_3, X_2 - X_3 and their seven
/// intersection points.
Window p2_standard_window();
Window p1_window();
/// A single chart, no subvarieties, the given formal constants.
Window spec_k_window(std::vector<std::string> constants = {"2", "3"});

/// Throws InvalidInput unless forms and points are normalized, distinct,
/// of the right length, and the pairwise intersections of the forms are
/// window points.
void check_window(const Window& w);

/// Charts U_i = {X_i != 0}; every intersection is nonempty.
Nerve chart_nerve(const Window& w);

/// The exact sequence Z(l) -> M^l -> CH^l over the chart nerve together
/// with the coordinate systems it was built from.
struct WindowSequence {
  Window window;
  std::size_t l = 2;
  ShortExactSequence seq;
  std::vector<RationalFunction> l_basis;            // basis of L
  std::vector<std::vector<std::size_t>> monomials;  // basis of M^l, sorted multisets of l_basis indices
  std::vector<std::vector<std::vector<IntVector>>> cycle_generators;  // [p][index] keys of CH^l

  /// Coordinates in L of a function supported on the window. Throws
  /// InvalidInput otherwise.
  IntVector l_coordinates(const RationalFunction& f) const;
  /// Symmetric product of l functions in M^l coordinates.
  IntVector m_coordinates(const std::vector<RationalFunction>& tuple) const;
  /// The monomial as a tuple of basis functions.
  std::vector<RationalFunction> monomial_tuple(std::size_t m) const;
  IntVector cycle_coordinates(const Divisor& d, std::size_t p, std::size_t index) const;
  Divisor cycle_divisor(std::span<const Integer> coords, std::size_t p, std::size_t index) const;
  /// ch_l of an M^l element on a simplex.
  Divisor ch_of(std::span<const Integer> m, std::size_t p, std::size_t index) const;
  /// Z(l) coordinates of an M^l element. Throws PreconditionFailed when it
  /// is not in the kernel.
  IntVector kernel_coordinates(std::span<const Integer> m, std::size_t p, std::size_t index) const;
};

WindowSequence symmetric_power_window(const Window& w, std::size_t l);

/// One term of an element of M^l: coefficient times the symmetric product.
struct WeightedTuple {
  Integer coefficient{1};
  std::vector<RationalFunction> functions;
};
using LocalEquations = std::vector<WeightedTuple>;

IntVector m_coordinates(const WindowSequence& w, const LocalEquations& eq);

struct LciResult {
  std::vector<IntVector> local_sections;  // F_i in M^l
  std::vector<Divisor> cut_out;           // ch_l(F_i) on U_i
  Cochain h;                              // degree 1 in Z(l)
  bool is_cocycle = false;
  WitnessResult witness;                  // f with df = h, or a certificate
  std::optional<IntVector> global_section;       // F = F_i - f_i for every i
  std::optional<LocalEquations> global_equations;
};

/// Throws InvalidInput on a wrong chart count and PreconditionFailed, naming
/// the edge, when F_j - F_i is not in Z(l).
LciResult lci_cocycle(const WindowSequence& w, const std::vector<LocalEquations>& per_chart);

struct P2GerbeExample {
  WindowSequence window;
  std::vector<std::pair<LinearForm, LinearForm>> lines;  // per edge: X_i - X_j, X_k
  std::vector<ProjPoint> points;                         // per edge: c_ij
  Cochain c;                                             // degree 1 in CH^2
  std::vector<Divisor> on_triple;                        // c_ij restricted to U_123
  bool c_is_cocycle = false;
  WitnessResult witness;
  ConnectingResult connecting;
  ObstructionQuotient obstruction;
  IntVector class_in_quotient;

  bool nontrivial_in_window() const { return !witness.witness.has_value(); }
  bool survives_quotient() const { return !is_zero(class_in_quotient); }
};

P2GerbeExample p2_gerbe_example();

}  // namespace cechkit

#endif  // CECHKIT_PROJECTIVE_HPP
