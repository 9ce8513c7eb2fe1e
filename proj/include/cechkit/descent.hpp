// Gerbe descent data with an abelian band. Every hom-set between local
// objects is a torsor under the band with a designated basepoint, so the
// morphism algebra reduces to offset arithmetic in the band.
#ifndef CECHKIT_DESCENT_HPP
#define CECHKIT_DESCENT_HPP

#include <string>

#include "cechkit/connecting.hpp"

namespace cechkit {

/// A morphism source -> target over a simplex, given by its offset from the
/// basepoint of the hom-set.
struct TorsorMorphism {
  std::string source;
  std::string target;
  Simplex simplex;
  IntVector offset;

  friend bool operator==(const TorsorMorphism&, const TorsorMorphism&) = default;
};

/// Restricts to a larger simplex through the band.
TorsorMorphism restrict_to(const AbelianSheaf& band, const TorsorMorphism& f, const Simplex& s);
/// second o first. Throws InvalidInput on a label or simplex mismatch.
TorsorMorphism compose(const TorsorMorphism& second, const TorsorMorphism& first);
TorsorMorphism inverse(const TorsorMorphism& f);

/// Objects x_i per vertex, transitions g_ij : x_j -> x_i per edge (i < j),
/// and the composite of basepoints around each triangle.
struct GerbeDescentDatum {
  AbelianSheaf band;
  std::vector<std::string> objects;
  std::vector<TorsorMorphism> transitions;  // indexed like the edges of the nerve
  Cochain basepoint_defect;                 // degree 2
};

/// Checks labels, simplices and lengths. Throws InvalidInput.
void check_datum(const GerbeDescentDatum& d);

struct CocycleVerdict {
  Cochain cochain;
  bool is_cocycle = false;
};

/// c_ijk = g_ki o g_ij o g_jk on U_ijk plus the basepoint defect, an
/// automorphism of x_k read as an element of the band.
CocycleVerdict transition_cocycle(const GerbeDescentDatum& d);

/// With every fibre holding one object the transitions themselves must
/// satisfy g_ik = g_ij g_jk on each triangle.
bool torsor_relation_holds(const GerbeDescentDatum& d);

/// An automorphism h over the identity: l_i : x_i -> h(x_i) per vertex and
/// the image h(g_ij) : h(x_j) -> h(x_i) per edge.
struct AutomorphismDatum {
  std::vector<TorsorMorphism> connecting;
  std::vector<TorsorMorphism> images;
};

std::string image_label(const std::string& object);

/// Throws InvalidInput on inconsistent labels and PreconditionFailed when h
/// does not respect composition (the offsets of h(g) - g are not closed).
void check_automorphism(const GerbeDescentDatum& d, const AutomorphismDatum& a);

/// h_ji = l_j^-1 o h(g_ij)^-1 o l_i o g_ij on U_ij, stored on the edge (i, j).
CocycleVerdict automorphism_to_cocycle(const GerbeDescentDatum& d, const AutomorphismDatum& a);

struct Gerbe21Result {
  Cochain lifted;    // c' in the middle sheaf, degree 2
  Cochain boundary;  // Cech boundary of c', degree 3
  Cochain output;    // degree 3 in the kernel sheaf
  bool is_cocycle = false;
};

/// The band of d must be the quotient sheaf of ext. Lifts c_ijk to the
/// middle sheaf, takes the boundary and reads it in the kernel.
Gerbe21Result gerbe21_classifying(const GerbeDescentDatum& d, const ShortExactSequence& ext);

}  // namespace cechkit

#endif  // CECHKIT_DESCENT_HPP
