#pragma once

// Exact integer linear algebra: dense matrices over arbitrary-precision
// integers, Hermite and Smith normal forms, finitely presented abelian groups
// and the homology of a two-step complex of such groups.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcg/error.hpp"

namespace mcg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix. Zero-sized dimensions are allowed and meaningful
/// (a 3x0 matrix is the empty map into Z^3).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw Error("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void append_column(const std::vector<T>& c) {
    if (c.size() != rows_) throw Error("column length mismatch");
    Matrix m(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = std::move((*this)(i, j));
      m(i, cols_) = c[i];
    }
    *this = std::move(m);
  }

  /// [A | B]
  friend Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw Error("hcat: row count mismatch");
    Matrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
    }
    return m;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw Error("matrix-vector product: dimension mismatch");
    std::vector<T> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (v[k] != 0) out[i] += a(i, k) * v[k];
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum: dimension mismatch");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix difference: dimension mismatch");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  // Elementary operations.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(src, j) != 0) (*this)(dst, j) += k * (*this)(src, j);
  }
  /// col[dst] += k * col[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const T& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
      if ((*this)(i, src) != 0) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }
  void negate_column(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << "[";
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
      os << "]\n";
    }
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using IntVector = std::vector<Integer>;

template <class T>
T floor_div(const T& a, const T& b) {
  T q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <class T>
T abs_value(const T& a) {
  return a < 0 ? T(-a) : a;
}

// ---------------------------------------------------------------------------
// Hermite normal form

/// Column-style Hermite normal form H = A * U. H is in column echelon form:
/// the first `rank` columns carry strictly increasing pivot rows with positive
/// pivots, entries above each pivot are zero and entries to the left of a
/// pivot lie in [0, pivot). The remaining columns are zero.
template <class T>
struct HermiteDecomposition {
  Matrix<T> H;
  Matrix<T> U;
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const { return pivot_rows.size(); }
};

namespace detail {

template <class T>
HermiteDecomposition<T> hermite_impl(const Matrix<T>& a, bool track) {
  HermiteDecomposition<T> out{a, track ? Matrix<T>::identity(a.cols()) : Matrix<T>(), {}};
  Matrix<T>& h = out.H;
  Matrix<T>& u = out.U;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t pc = 0;
  for (std::size_t i = 0; i < m && pc < n; ++i) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t j = pc; j < n; ++j)
        if (h(i, j) != 0 && (!best || abs_value(h(i, j)) < abs_value(h(i, *best)))) best = j;
      if (!best) break;
      h.swap_columns(pc, *best);
      if (track) u.swap_columns(pc, *best);
      bool clean = true;
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (h(i, j) == 0) continue;
        const T q = h(i, j) / h(i, pc);
        h.add_column_multiple(j, pc, -q);
        if (track) u.add_column_multiple(j, pc, -q);
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(i, pc) == 0) continue;
    if (h(i, pc) < 0) {
      h.negate_column(pc);
      if (track) u.negate_column(pc);
    }
    for (std::size_t j = 0; j < pc; ++j) {
      const T q = floor_div(h(i, j), h(i, pc));
      h.add_column_multiple(j, pc, -q);
      if (track) u.add_column_multiple(j, pc, -q);
    }
    out.pivot_rows.push_back(i);
    ++pc;
  }
  return out;
}

}  // namespace detail

template <class T>
HermiteDecomposition<T> hermite_normal_form(const Matrix<T>& a) {
  return detail::hermite_impl(a, true);
}

/// Column echelon form without the transformation matrix.
template <class T>
HermiteDecomposition<T> column_echelon(const Matrix<T>& a) {
  return detail::hermite_impl(a, false);
}

/// Basis of the integer kernel {x : A x = 0}, one basis vector per column.
template <class T>
Matrix<T> integer_kernel(const Matrix<T>& a) {
  const auto hnf = hermite_normal_form(a);
  return hnf.U.block(0, hnf.rank(), a.cols(), a.cols() - hnf.rank());
}

/// Solves H c = v against the leading `rank` columns of an echelon form.
/// Returns nullopt when v is not in the column span.
template <class T>
std::optional<std::vector<T>> solve_echelon(const HermiteDecomposition<T>& e, std::vector<T> v) {
  const Matrix<T>& h = e.H;
  if (v.size() != h.rows()) throw Error("solve_echelon: dimension mismatch");
  std::vector<T> coeffs(e.rank());
  std::size_t row = 0;
  for (std::size_t j = 0; j < e.rank(); ++j) {
    const std::size_t p = e.pivot_rows[j];
    for (; row < p; ++row)
      if (v[row] != 0) return std::nullopt;
    if (v[p] % h(p, j) != 0) return std::nullopt;
    const T q = v[p] / h(p, j);
    coeffs[j] = q;
    if (q != 0)
      for (std::size_t i = p; i < h.rows(); ++i)
        if (h(i, j) != 0) v[i] -= q * h(i, j);
    row = p + 1;
  }
  for (; row < v.size(); ++row)
    if (v[row] != 0) return std::nullopt;
  return coeffs;
}

template <class T>
bool in_column_span(const Matrix<T>& a, const std::vector<T>& v) {
  return solve_echelon(column_echelon(a), v).has_value();
}

/// Reduces v modulo the column span of an echelon form: each pivot
/// coordinate ends up in [0, pivot). Two vectors are congruent modulo the
/// span iff their reductions agree.
template <class T>
std::vector<T> reduce_modulo(const HermiteDecomposition<T>& e, std::vector<T> v) {
  const Matrix<T>& h = e.H;
  for (std::size_t j = 0; j < e.rank(); ++j) {
    const std::size_t p = e.pivot_rows[j];
    const T q = floor_div(v[p], h(p, j));
    if (q != 0)
      for (std::size_t i = p; i < h.rows(); ++i)
        if (h(i, j) != 0) v[i] -= q * h(i, j);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Smith normal form

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dr, then zeros.
template <class T>
struct SmithDecomposition {
  Matrix<T> U;
  Matrix<T> D;
  Matrix<T> V;

  std::vector<T> diagonal() const {
    std::vector<T> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

template <class T>
struct SmithWork {
  Matrix<T> d;
  Matrix<T>* u = nullptr;
  Matrix<T>* v = nullptr;

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    if (u) u->swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_columns(a, b);
    if (v) v->swap_columns(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const T& k) {
    d.add_row_multiple(dst, src, k);
    if (u) u->add_row_multiple(dst, src, k);
  }
  void add_col(std::size_t dst, std::size_t src, const T& k) {
    d.add_column_multiple(dst, src, k);
    if (v) v->add_column_multiple(dst, src, k);
  }
  void negate_row(std::size_t r) {
    d.negate_row(r);
    if (u) u->negate_row(r);
  }

  // Pivot choice: minimal absolute value over the trailing block, first in
  // row-major order on ties.
  bool place_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j)
        if (d(i, j) != 0 && (!best || abs_value(d(i, j)) < abs_value(d(best->first, best->second))))
          best = {i, j};
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  void run() {
    const std::size_t r = std::min(d.rows(), d.cols());
    for (std::size_t t = 0; t < r; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < d.rows(); ++i) {
          if (d(i, t) == 0) continue;
          add_row(i, t, T(-(d(i, t) / d(t, t))));
          if (d(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (d(t, j) == 0) continue;
          add_col(j, t, T(-(d(t, j) / d(t, t))));
          if (d(t, j) != 0) clean = false;
        }
        if (!clean) {
          // A remainder smaller than the pivot is left in row or column t.
          std::optional<std::pair<std::size_t, std::size_t>> best;
          auto consider = [&](std::size_t i, std::size_t j) {
            if (d(i, j) != 0 && (!best || abs_value(d(i, j)) < abs_value(d(best->first, best->second))))
              best = {i, j};
          };
          for (std::size_t i = t + 1; i < d.rows(); ++i) consider(i, t);
          for (std::size_t j = t + 1; j < d.cols(); ++j) consider(t, j);
          swap_rows(t, best->first);
          swap_cols(t, best->second);
          continue;
        }
        std::optional<std::size_t> offending;
        for (std::size_t i = t + 1; i < d.rows() && !offending; ++i)
          for (std::size_t j = t + 1; j < d.cols(); ++j)
            if (d(i, j) % d(t, t) != 0) {
              offending = i;
              break;
            }
        if (!offending) break;
        add_row(t, *offending, T(1));
      }
      if (d(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace detail

template <class T>
SmithDecomposition<T> smith_normal_form(const Matrix<T>& a) {
  SmithDecomposition<T> out{Matrix<T>::identity(a.rows()), Matrix<T>(), Matrix<T>::identity(a.cols())};
  detail::SmithWork<T> w{a, &out.U, &out.V};
  w.run();
  out.D = std::move(w.d);
  return out;
}

/// Diagonal of the Smith form only; skips the transformation bookkeeping.
template <class T>
std::vector<T> smith_diagonal(const Matrix<T>& a) {
  detail::SmithWork<T> w{a, nullptr, nullptr};
  w.run();
  std::vector<T> d;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) d.push_back(w.d(i, i));
  return d;
}

/// Fraction-free (Bareiss) determinant.
template <class T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return T(0);
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Exact inverse of a unimodular integer matrix.
inline std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  Matrix<Rational> m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(a(i, j));
    m(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    m.swap_rows(c, p);
    const Rational piv = m(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) m(c, j) /= piv;
    for (std::size_t i = 0; i < n; ++i)
      if (i != c && m(i, c) != 0) m.add_row_multiple(i, c, Rational(-m(i, c)));
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = m(i, n + j);
      if (boost::multiprecision::denominator(x) != 1) return std::nullopt;
      inv(i, j) = boost::multiprecision::numerator(x);
    }
  return inv;
}

// ---------------------------------------------------------------------------
// Finitely presented abelian groups

/// Cokernel of `relations`: Z^rank modulo the span of the relation columns.
struct FpAbelianGroup {
  std::size_t rank = 0;
  IntMatrix relations;  // rank x k

  FpAbelianGroup() = default;
  FpAbelianGroup(std::size_t r, IntMatrix rel) : rank(r), relations(std::move(rel)) {
    if (relations.rows() != rank) throw Error("relation matrix must have one row per generator");
  }
  static FpAbelianGroup free(std::size_t rank) { return {rank, IntMatrix(rank, 0)}; }
};

/// Canonical form: torsion d1 | d2 | ... (each >= 2) plus free rank.
struct InvariantFactors {
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;

  static InvariantFactors of(std::initializer_list<long> torsion, std::size_t free_rank = 0) {
    InvariantFactors f;
    for (long t : torsion) f.torsion.emplace_back(t);
    f.free_rank = free_rank;
    return f;
  }
};

inline InvariantFactors invariant_factors(const FpAbelianGroup& g) {
  InvariantFactors out;
  std::size_t nonzero = 0;
  for (const Integer& d : smith_diagonal(g.relations)) {
    if (d == 0) continue;
    ++nonzero;
    const Integer a = abs_value(d);
    if (a != 1) out.torsion.push_back(a);
  }
  out.free_rank = g.rank - nonzero;
  return out;
}

/// "Z/2 ⊕ Z/12 ⊕ Z ⊕ Z", smallest factor first; "0" for the trivial group.
inline std::string to_string(const InvariantFactors& f) {
  std::ostringstream os;
  bool first = true;
  for (const Integer& t : f.torsion) {
    os << (first ? "" : " ⊕ ") << "Z/" << t;
    first = false;
  }
  for (std::size_t i = 0; i < f.free_rank; ++i) {
    os << (first ? "" : " ⊕ ") << "Z";
    first = false;
  }
  return first ? "0" : os.str();
}

/// Homology at the middle of  A --alpha--> B --beta--> C  where the groups are
/// presented as cokernels: B = Z^n / middle_relations, C = Z^t / target_relations.
/// Computes (beta^-1(span target_relations)) / (span alpha + span middle_relations).
inline InvariantFactors homology_at_middle(const IntMatrix& alpha, const IntMatrix& beta,
                                           const IntMatrix& middle_relations,
                                           const IntMatrix& target_relations) {
  const std::size_t n = beta.cols();
  if (alpha.rows() != n || middle_relations.rows() != n)
    throw Error("homology_at_middle: alpha and middle relations must map into Z^" + std::to_string(n));
  if (target_relations.rows() != beta.rows())
    throw Error("homology_at_middle: target relations do not match the codomain of beta");

  // Cycles: first n coordinates of ker [beta | target_relations].
  const IntMatrix kernel = integer_kernel(hcat(beta, target_relations));
  const auto cycles = column_echelon(kernel.block(0, 0, n, kernel.cols()));

  const IntMatrix boundaries = hcat(alpha, middle_relations);
  IntMatrix coords(cycles.rank(), boundaries.cols());
  for (std::size_t j = 0; j < boundaries.cols(); ++j) {
    auto c = solve_echelon(cycles, boundaries.column(j));
    if (!c)
      throw ComplexError(j < alpha.cols()
                             ? "complex condition violated: column " + std::to_string(j) +
                                   " of alpha is not a cycle modulo the target relations"
                             : "middle relation " + std::to_string(j - alpha.cols()) +
                                   " is not a cycle modulo the target relations");
    for (std::size_t i = 0; i < c->size(); ++i) coords(i, j) = std::move((*c)[i]);
  }
  return invariant_factors(FpAbelianGroup(cycles.rank(), std::move(coords)));
}

}  // namespace mcg
