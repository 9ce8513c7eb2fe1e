#include "cechkit/integer_lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace cechkit {

IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

IntVector add(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector add: length mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector subtract(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector subtract: length mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector negate(std::span<const Integer> a) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

IntVector scale(std::span<const Integer> a, const Integer& k) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * k;
  return out;
}

bool is_zero(std::span<const Integer> a) {
  return std::all_of(a.begin(), a.end(), [](const Integer& x) { return sgn(x) == 0; });
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("IntMatrix: ragged initializer");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("from_rows: row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& left, const IntMatrix& right) {
  if (left.rows_ != right.rows_) throw DimensionMismatch("hconcat: row counts differ");
  IntMatrix m(left.rows_, left.cols_ + right.cols_);
  for (std::size_t r = 0; r < m.rows_; ++r) {
    for (std::size_t c = 0; c < left.cols_; ++c) m(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) m(r, left.cols_ + c) = right(r, c);
  }
  return m;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols_ != bottom.cols_) throw DimensionMismatch("vconcat: column counts differ");
  IntMatrix m(top.rows_ + bottom.rows_, top.cols_);
  for (std::size_t r = 0; r < top.rows_; ++r)
    for (std::size_t c = 0; c < top.cols_; ++c) m(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows_; ++r)
    for (std::size_t c = 0; c < top.cols_; ++c) m(top.rows_ + r, c) = bottom(r, c);
  return m;
}

IntMatrix IntMatrix::block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows_;
    cols += b.cols_;
  }
  IntMatrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) m(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows_;
    c0 += b.cols_;
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::column_range(std::size_t begin, std::size_t end) const {
  IntMatrix m(rows_, end - begin);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = begin; c < end; ++c) m(r, c - begin) = (*this)(r, c);
  return m;
}

IntMatrix IntMatrix::row_range(std::size_t begin, std::size_t end) const {
  IntMatrix m(end - begin, cols_);
  for (std::size_t r = begin; r < end; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r - begin, c) = (*this)(r, c);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

bool IntMatrix::is_zero() const { return cechkit::is_zero(entries_); }

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += k * (*this)(source, c);
}

void IntMatrix::add_column_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += k * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_column(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

IntVector operator*(const IntMatrix& a, std::span<const Integer> x) {
  if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector product: length mismatch");
  IntVector y = zero_vector(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) y[i] += a(i, k) * x[k];
  return y;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shape mismatch");
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shape mismatch");
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] -= b.entries_[i];
  return m;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// Truncating quotient; the remainder is strictly smaller than the pivot in
// absolute value, which is all the elimination loop needs to terminate.
Integer quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const Integer& d, const Integer& x) {
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : s_(a),
        u_(IntMatrix::identity(a.rows())),
        u_inv_(IntMatrix::identity(a.rows())),
        v_(IntMatrix::identity(a.cols())),
        v_inv_(IntMatrix::identity(a.cols())) {}

  SNFDecomposition run() {
    const std::size_t m = s_.rows(), n = s_.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      if (!reduce_block(t)) break;
    }
    for (std::size_t i = 0; i < t; ++i) {
      if (sgn(s_(i, i)) < 0) row_negate(i);
    }
    return SNFDecomposition{std::move(s_), std::move(u_), std::move(v_), std::move(u_inv_),
                            std::move(v_inv_), t};
  }

 private:
  // Brings a pivot to (t, t) and clears its row and column, with the pivot
  // dividing every remaining entry. Returns false when the block is zero.
  bool reduce_block(std::size_t t) {
    for (;;) {
      auto pivot = find_pivot(t);
      if (!pivot) return false;
      row_swap(t, pivot->first);
      column_swap(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < s_.rows(); ++i) {
        if (sgn(s_(i, t)) == 0) continue;
        row_add(i, t, -quotient(s_(i, t), s_(t, t)));
        if (sgn(s_(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s_.cols(); ++j) {
        if (sgn(s_(t, j)) == 0) continue;
        column_add(j, t, -quotient(s_(t, j), s_(t, t)));
        if (sgn(s_(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column are clear; enforce divisibility on the rest.
      bool divisible = true;
      for (std::size_t i = t + 1; i < s_.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < s_.cols(); ++j)
          if (!divides(s_(t, t), s_(i, j))) {
            row_add(t, i, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) return true;
    }
  }

  std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < s_.rows(); ++i)
      for (std::size_t j = t; j < s_.cols(); ++j) {
        const Integer& x = s_(i, j);
        if (sgn(x) == 0) continue;
        Integer ax = abs(x);
        if (!best || ax < best_abs) {
          best = {i, j};
          best_abs = ax;
        }
      }
    return best;
  }

  // Each elementary operation is mirrored onto U/U^-1 or V/V^-1.
  void row_swap(std::size_t a, std::size_t b) {
    s_.swap_rows(a, b);
    u_.swap_rows(a, b);
    u_inv_.swap_columns(a, b);
  }
  void column_swap(std::size_t a, std::size_t b) {
    s_.swap_columns(a, b);
    v_.swap_columns(a, b);
    v_inv_.swap_rows(a, b);
  }
  void row_add(std::size_t target, std::size_t source, const Integer& k) {
    s_.add_row_multiple(target, source, k);
    u_.add_row_multiple(target, source, k);
    u_inv_.add_column_multiple(source, target, -k);
  }
  void column_add(std::size_t target, std::size_t source, const Integer& k) {
    s_.add_column_multiple(target, source, k);
    v_.add_column_multiple(target, source, k);
    v_inv_.add_row_multiple(source, target, -k);
  }
  void row_negate(std::size_t r) {
    s_.negate_row(r);
    u_.negate_row(r);
    u_inv_.negate_column(r);
  }

  IntMatrix s_, u_, u_inv_, v_, v_inv_;
};

Integer symmetric_residue(const Integer& x, const Integer& modulus) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  if (2 * r > modulus) r -= modulus;
  return r;
}

}  // namespace

IntVector SNFDecomposition::invariant_factors() const {
  IntVector d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(S(i, i));
  return d;
}

SNFDecomposition smith_normal_form(const IntMatrix& a) { return SmithReducer(a).run(); }

std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

// ---------------------------------------------------------------------------
// Hermite basis, kernels, solving

IntMatrix column_hermite_basis(const IntMatrix& m) {
  IntMatrix h = m;
  std::size_t next = 0;  // columns [0, next) hold pivots already
  for (std::size_t r = 0; r < h.rows() && next < h.cols(); ++r) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t c = next; c < h.cols(); ++c) {
        if (sgn(h(r, c)) == 0) continue;
        if (!best || abs(h(r, c)) < abs(h(r, *best))) best = c;
      }
      if (!best) break;
      h.swap_columns(next, *best);
      bool others = false;
      for (std::size_t c = next + 1; c < h.cols(); ++c) {
        if (sgn(h(r, c)) == 0) continue;
        h.add_column_multiple(c, next, -quotient(h(r, c), h(r, next)));
        if (sgn(h(r, c)) != 0) others = true;
      }
      if (others) continue;
      if (sgn(h(r, next)) < 0) h.negate_column(next);
      // Keep earlier pivot columns reduced in this row.
      for (std::size_t c = 0; c < next; ++c) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(r, c).get_mpz_t(), h(r, next).get_mpz_t());
        h.add_column_multiple(c, next, -q);
      }
      ++next;
      break;
    }
  }
  return h.column_range(0, next);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  SNFDecomposition snf = smith_normal_form(a);
  return column_hermite_basis(snf.V.column_range(snf.rank, a.cols()));
}

bool IntegerInfeasibility::verify(const IntMatrix& a, std::span<const Integer> b) const {
  if (multiplier.size() != a.rows() || b.size() != a.rows()) return false;
  const Integer m = abs(modulus);
  auto vanishes = [&](const Integer& x) { return sgn(m) == 0 ? sgn(x) == 0 : divides(m, x); };
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Integer s = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) s += multiplier[r] * a(r, c);
    if (!vanishes(s)) return false;
  }
  return !vanishes(dot(multiplier, b));
}

LinearSolveResult solve_linear(const IntMatrix& a, std::span<const Integer> b) {
  if (b.size() != a.rows())
    throw DimensionMismatch("solve_linear: right-hand side has length " + std::to_string(b.size()) +
                            ", expected " + std::to_string(a.rows()));
  SNFDecomposition snf = smith_normal_form(a);
  IntVector c = snf.U * b;
  IntVector y = zero_vector(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const bool pivot_row = i < snf.rank;
    if (pivot_row ? divides(snf.S(i, i), c[i]) : sgn(c[i]) == 0) {
      if (pivot_row) y[i] = c[i] / snf.S(i, i);
      continue;
    }
    return LinearSolveResult{std::nullopt,
                             IntegerInfeasibility{snf.U.row(i), pivot_row ? snf.S(i, i) : Integer(0)}};
  }
  IntVector x = snf.V * std::span<const Integer>(y);

  // Canonical coset representative against the Hermite kernel basis.
  IntMatrix kernel = column_hermite_basis(snf.V.column_range(snf.rank, a.cols()));
  std::size_t row = 0;
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    while (sgn(kernel(row, k)) == 0) ++row;
    const Integer& pivot = kernel(row, k);
    Integer target = symmetric_residue(x[row], pivot);
    Integer q = (x[row] - target) / pivot;
    for (std::size_t r = 0; r < x.size(); ++r) x[r] -= q * kernel(r, k);
  }
  return LinearSolveResult{std::move(x), std::nullopt};
}

// ---------------------------------------------------------------------------
// Abelian groups

std::string to_string(const GroupStructure& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& d : g.torsion) {
    os << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  if (g.free_rank > 0) {
    os << (first ? "" : " + ") << "Z";
    if (g.free_rank > 1) os << '^' << g.free_rank;
  }
  return os.str();
}

AbelianGroup::AbelianGroup(std::size_t generator_count, IntMatrix relations)
    : generators_(generator_count), relations_(std::move(relations)) {
  if (relations_.rows() != generators_)
    throw DimensionMismatch("AbelianGroup: relation matrix has " + std::to_string(relations_.rows()) +
                            " rows for " + std::to_string(generators_) + " generators");
}

AbelianGroup AbelianGroup::free(std::size_t rank) { return AbelianGroup(rank, IntMatrix(rank, 0)); }

AbelianGroup AbelianGroup::cyclic(long order) {
  if (order == 0) return free(1);
  IntMatrix r(1, 1);
  r(0, 0) = order;
  return AbelianGroup(1, std::move(r));
}

AbelianGroup AbelianGroup::direct_sum(const std::vector<AbelianGroup>& parts) {
  std::vector<IntMatrix> blocks;
  std::size_t n = 0;
  for (const auto& p : parts) {
    blocks.push_back(p.relations_);
    n += p.generators_;
  }
  return AbelianGroup(n, IntMatrix::block_diagonal(blocks));
}

GroupStructure AbelianGroup::structure() const {
  SNFDecomposition snf = smith_normal_form(relations_);
  GroupStructure g;
  g.free_rank = generators_ - snf.rank;
  for (const auto& d : snf.invariant_factors())
    if (d != 1) g.torsion.push_back(d);
  return g;
}

bool AbelianGroup::is_trivial() const { return structure().is_trivial(); }

bool AbelianGroup::is_zero_element(std::span<const Integer> v) const {
  if (v.size() != generators_) throw DimensionMismatch("group element has wrong length");
  if (cechkit::is_zero(v)) return true;
  if (relations_.cols() == 0) return false;
  return solve_linear(relations_, v).solvable();
}

bool element_equal(const AbelianGroup& g, std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != g.generator_count() || b.size() != g.generator_count())
    throw DimensionMismatch("element_equal: coordinate length does not match generator count");
  return g.is_zero_element(subtract(a, b));
}

IntVector GroupMorphism::apply(std::span<const Integer> x) const { return matrix * x; }

std::optional<std::size_t> GroupMorphism::first_violated_relation() const {
  if (matrix.rows() != target.generator_count() || matrix.cols() != source.generator_count())
    throw DimensionMismatch("morphism matrix shape does not match its groups");
  for (std::size_t c = 0; c < source.relations().cols(); ++c) {
    IntVector image = matrix * std::span<const Integer>(source.relations().column(c));
    if (!target.is_zero_element(image)) return c;
  }
  return std::nullopt;
}

bool GroupMorphism::is_well_defined() const { return !first_violated_relation().has_value(); }

GroupMorphism compose(const GroupMorphism& second, const GroupMorphism& first) {
  if (second.source.generator_count() != first.target.generator_count())
    throw DimensionMismatch("compose: intermediate groups differ");
  return GroupMorphism{first.source, second.target, second.matrix * first.matrix};
}

GroupMorphism identity_morphism(const AbelianGroup& g) {
  return GroupMorphism{g, g, IntMatrix::identity(g.generator_count())};
}

IntMatrix preimage_of_zero(const GroupMorphism& f) {
  const std::size_t n = f.source.generator_count();
  IntMatrix system = IntMatrix::hconcat(f.matrix, f.target.relations());
  IntMatrix kernel = integer_kernel(system);
  return column_hermite_basis(kernel.row_range(0, n));
}

namespace {

// Coordinates of each column of `vectors` in the given lattice basis.
IntMatrix coordinates_in_basis(const IntMatrix& basis, const IntMatrix& vectors) {
  std::vector<IntVector> cols;
  for (std::size_t c = 0; c < vectors.cols(); ++c) {
    auto r = solve_linear(basis, vectors.column(c));
    if (!r.solvable()) throw Error("internal: vector outside lattice");
    cols.push_back(std::move(*r.solution));
  }
  return IntMatrix::from_columns(basis.cols(), cols);
}

}  // namespace

MorphismAnalysis analyze_morphism(const GroupMorphism& f) {
  if (auto bad = f.first_violated_relation())
    throw IllDefinedMorphism("relation " + std::to_string(*bad) + " of the source is not preserved");
  const std::size_t n = f.source.generator_count();
  IntMatrix basis = preimage_of_zero(f);

  AbelianGroup kernel(basis.cols(), coordinates_in_basis(basis, f.source.relations()));
  GroupMorphism kernel_inclusion{kernel, f.source, basis};

  AbelianGroup image(n, basis);
  GroupMorphism image_inclusion{image, f.target, f.matrix};

  AbelianGroup cokernel(f.target.generator_count(), IntMatrix::hconcat(f.target.relations(), f.matrix));
  GroupMorphism cokernel_projection{f.target, cokernel, IntMatrix::identity(f.target.generator_count())};

  return MorphismAnalysis{std::move(kernel), std::move(kernel_inclusion), std::move(image),
                          std::move(image_inclusion), std::move(cokernel), std::move(cokernel_projection)};
}

IntVector SimplifiedGroup::coordinates(std::span<const Integer> old_element) const {
  IntVector v = to_simplified * old_element;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < group.relations().cols()) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), v[i].get_mpz_t(), group.relations()(i, i).get_mpz_t());
      v[i] = r;
    }
  }
  return v;
}

SimplifiedGroup simplify(const AbelianGroup& g) {
  const std::size_t n = g.generator_count();
  SNFDecomposition snf = smith_normal_form(g.relations());
  // In new coordinates y = U x the relations become diag(S).
  std::vector<std::size_t> kept;
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < snf.rank) {
      if (snf.S(i, i) == 1) continue;
      torsion.push_back(snf.S(i, i));
    }
    kept.push_back(i);
  }
  IntMatrix to(kept.size(), n), from(n, kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) {
    for (std::size_t c = 0; c < n; ++c) to(k, c) = snf.U(kept[k], c);
    for (std::size_t r = 0; r < n; ++r) from(r, k) = snf.U_inverse(r, kept[k]);
  }
  IntMatrix rel(kept.size(), torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) rel(i, i) = torsion[i];
  return SimplifiedGroup{AbelianGroup(kept.size(), std::move(rel)), std::move(to), std::move(from)};
}

}  // namespace cechkit
