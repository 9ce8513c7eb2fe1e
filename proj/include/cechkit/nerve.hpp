// Finite covers and their nerves.
#ifndef CECHKIT_NERVE_HPP
#define CECHKIT_NERVE_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cechkit/errors.hpp"

namespace cechkit {

/// A strictly increasing tuple of open indices i_0 < ... < i_p.
class Simplex {
 public:
  Simplex() = default;
  /// Throws InvalidInput unless the indices are strictly increasing.
  explicit Simplex(std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t dimension() const { return indices_.size() - 1; }
  std::size_t size() const { return indices_.size(); }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }

  /// The face obtained by deleting the index at `position`.
  Simplex without(std::size_t position) const;
  bool contains(const Simplex& face) const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<std::size_t> indices_;
};

std::string to_string(const Simplex& s);

struct Face {
  Simplex face;
  std::size_t omitted_position;
};

/// The p+1 codimension-one faces, in order of the deleted position.
std::vector<Face> faces(const Simplex& s);

/// Opens are labelled; nonemptiness of intersections is declared, not
/// computed. Singletons are always nonempty.
struct Cover {
  std::vector<std::string> opens;
  std::vector<std::vector<std::size_t>> nonempty;

  /// Every subset of the opens declared nonempty.
  static Cover full(std::vector<std::string> opens);
};

inline constexpr std::size_t kDefaultDimensionCap = 5;

class Nerve {
 public:
  Nerve() = default;

  std::size_t open_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t dimension_cap() const { return cap_; }
  /// Highest dimension with at least one simplex (0 for a nonempty cover).
  std::size_t top_dimension() const;

  std::size_t count(std::size_t p) const { return p < by_dim_.size() ? by_dim_[p].size() : 0; }
  const std::vector<Simplex>& simplices(std::size_t p) const;
  const Simplex& simplex(std::size_t p, std::size_t index) const { return by_dim_.at(p).at(index); }
  std::optional<std::size_t> index_of(const Simplex& s) const;
  std::size_t require_index(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  friend bool operator==(const Nerve&, const Nerve&) = default;

 private:
  friend Nerve build_nerve(const Cover& cover, std::size_t dim_cap);

  std::vector<std::string> labels_;
  std::size_t cap_ = kDefaultDimensionCap;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

/// Simplices are the declared-nonempty subsets with at most dim_cap + 1
/// elements, sorted lexicographically within each dimension.
/// Throws InvalidInput on out-of-range indices or a downward-closure
/// violation.
Nerve build_nerve(const Cover& cover, std::size_t dim_cap = kDefaultDimensionCap);

}  // namespace cechkit

#endif  // CECHKIT_NERVE_HPP
