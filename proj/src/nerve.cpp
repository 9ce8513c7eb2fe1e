#include "cechkit/nerve.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cechkit {

Simplex::Simplex(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw InvalidInput("simplex must have at least one index");
  for (std::size_t k = 1; k < indices_.size(); ++k)
    if (indices_[k - 1] >= indices_[k]) throw InvalidInput("simplex indices must be strictly increasing");
}

Simplex Simplex::without(std::size_t position) const {
  std::vector<std::size_t> out;
  out.reserve(indices_.size() - 1);
  for (std::size_t k = 0; k < indices_.size(); ++k)
    if (k != position) out.push_back(indices_[k]);
  return Simplex(std::move(out));
}

bool Simplex::contains(const Simplex& face) const {
  return std::includes(indices_.begin(), indices_.end(), face.indices_.begin(), face.indices_.end());
}

std::string to_string(const Simplex& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
  os << ')';
  return os.str();
}

std::vector<Face> faces(const Simplex& s) {
  std::vector<Face> out;
  if (s.size() < 2) return out;
  for (std::size_t k = 0; k < s.size(); ++k) out.push_back({s.without(k), k});
  return out;
}

Cover Cover::full(std::vector<std::string> opens) {
  Cover c;
  const std::size_t n = opens.size();
  c.opens = std::move(opens);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(i);
    if (subset.size() > 1) c.nonempty.push_back(std::move(subset));
  }
  return c;
}

std::size_t Nerve::top_dimension() const {
  std::size_t top = 0;
  for (std::size_t p = 0; p < by_dim_.size(); ++p)
    if (!by_dim_[p].empty()) top = p;
  return top;
}

const std::vector<Simplex>& Nerve::simplices(std::size_t p) const {
  static const std::vector<Simplex> empty;
  return p < by_dim_.size() ? by_dim_[p] : empty;
}

std::optional<std::size_t> Nerve::index_of(const Simplex& s) const {
  const std::size_t p = s.dimension();
  if (p >= index_.size()) return std::nullopt;
  auto it = index_[p].find(s);
  if (it == index_[p].end()) return std::nullopt;
  return it->second;
}

std::size_t Nerve::require_index(const Simplex& s) const {
  auto i = index_of(s);
  if (!i) throw InvalidInput("simplex " + to_string(s) + " is not in the nerve");
  return *i;
}

Nerve build_nerve(const Cover& cover, std::size_t dim_cap) {
  const std::size_t n = cover.opens.size();
  std::set<Simplex> declared;
  for (std::size_t i = 0; i < n; ++i) declared.insert(Simplex({i}));
  for (const auto& raw : cover.nonempty) {
    std::vector<std::size_t> sorted = raw;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("declared intersection repeats an open");
    for (std::size_t i : sorted)
      if (i >= n) throw InvalidInput("declared intersection references open " + std::to_string(i) +
                                     " but the cover has " + std::to_string(n));
    if (!sorted.empty()) declared.insert(Simplex(std::move(sorted)));
  }
  for (const auto& s : declared)
    for (const auto& f : faces(s))
      if (!declared.count(f.face))
        throw InvalidInput("downward closure violated: " + to_string(s) + " is declared nonempty but its face " +
                           to_string(f.face) + " is not");

  Nerve nerve;
  nerve.labels_ = cover.opens;
  nerve.cap_ = dim_cap;
  nerve.by_dim_.assign(dim_cap + 1, {});
  for (const auto& s : declared)
    if (s.dimension() <= dim_cap) nerve.by_dim_[s.dimension()].push_back(s);
  nerve.index_.assign(dim_cap + 1, {});
  for (std::size_t p = 0; p <= dim_cap; ++p)
    for (std::size_t k = 0; k < nerve.by_dim_[p].size(); ++k) nerve.index_[p].emplace(nerve.by_dim_[p][k], k);
  return nerve;
}

}  // namespace cechkit
