#pragma once

// Exact integer and modular matrix algebra: Smith normal form with recorded
// unimodular transforms, Gaussian elimination over Z/p, solution counting and
// enumeration over Z/n, and fraction-free determinants.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "foxcolor/error.hpp"

namespace foxcolor {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{0})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DomainError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = U((*this)(r, c));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using BigMatrix = Matrix<BigInt>;

// ---------------------------------------------------------------------------
// Residue arithmetic

/// Least nonnegative residue of a modulo n (n >= 1).
constexpr std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline std::int64_t mod(const BigInt& a, std::int64_t n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r.convert_to<std::int64_t>();
}

constexpr std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n);
}

/// Multiplicative inverse of a modulo n, if gcd(a, n) = 1.
constexpr std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t n) {
  a = mod(a, n);
  std::int64_t old_r = a, r = n, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    if (n == 1) return 0;
    return std::nullopt;
  }
  return mod(old_s, n);
}

constexpr bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithForm {
  /// d_1 | d_2 | ... | d_rank, all strictly positive.
  std::vector<BigInt> invariant_factors;
  std::size_t rank = 0;
  /// Unimodular, rows x rows.
  BigMatrix left;
  /// Unimodular, cols x cols. left * m * right is diagonal with the factors.
  BigMatrix right;

  BigMatrix diagonal(std::size_t rows, std::size_t cols) const {
    BigMatrix d(rows, cols);
    for (std::size_t i = 0; i < rank; ++i) d(i, i) = invariant_factors[i];
    return d;
  }
};

namespace detail {

template <class T>
void row_axpy(Matrix<T>& m, std::size_t dst, std::size_t src, const T& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m(src, c) != 0) m(dst, c) -= factor * m(src, c);
}

template <class T>
void col_axpy(Matrix<T>& m, std::size_t dst, std::size_t src, const T& factor) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, src) != 0) m(r, dst) -= factor * m(r, src);
}

}  // namespace detail

/// Smith normal form by repeated smallest-|entry| pivoting. Row operations are
/// mirrored into `left`, column operations into `right`.
inline SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows(), n = input.cols();
  BigMatrix a = input.cast<BigInt>();
  SmithForm out;
  out.left = BigMatrix::identity(m);
  out.right = BigMatrix::identity(n);

  // smallest nonzero |entry| in the trailing block starting at (t, t)
  auto find_pivot = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        BigInt v = abs(a(i, j));
        if (!best || v < best_abs) {
          best = {i, j};
          best_abs = std::move(v);
          if (best_abs == 1) return best;
        }
      }
    return best;
  };

  const std::size_t diag = std::min(m, n);
  std::size_t t = 0;
  for (; t < diag; ++t) {
    bool have_pivot = true;
    while (true) {
      const auto at = find_pivot(t);
      if (!at) {
        have_pivot = false;
        break;
      }
      a.swap_rows(t, at->first);
      out.left.swap_rows(t, at->first);
      a.swap_cols(t, at->second);
      out.right.swap_cols(t, at->second);

      bool clean = true;
      const BigInt pivot = a(t, t);
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = a(i, t) / pivot;
        detail::row_axpy(a, i, t, q);
        detail::row_axpy(out.left, i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = a(t, j) / pivot;
        detail::col_axpy(a, j, t, q);
        detail::col_axpy(out.right, j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into the pivot row and retry
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m && !offender; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % pivot != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      detail::row_axpy(a, t, *offender, BigInt(-1));
      detail::row_axpy(out.left, t, *offender, BigInt(-1));
    }
    if (!have_pivot) break;
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < m; ++c) out.left(t, c) = -out.left(t, c);
    }
    out.invariant_factors.push_back(a(t, t));
  }
  out.rank = t;
  return out;
}

// ---------------------------------------------------------------------------
// Elimination over Z/p

struct ModKernel {
  std::size_t rank = 0;
  /// Basis of the right null space, one vector of length cols per entry.
  std::vector<std::vector<std::int64_t>> basis;
};

/// Row-reduces m over the prime field Z/p and returns a null-space basis.
inline ModKernel rref_mod_p(const IntMatrix& m, std::int64_t p) {
  if (!is_prime(p)) throw DomainError("rref_mod_p needs a prime modulus, got " + std::to_string(p));
  IntMatrix a(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a(r, c) = mod(m(r, c), p);

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pr = r;
    while (pr < a.rows() && a(pr, c) == 0) ++pr;
    if (pr == a.rows()) continue;
    a.swap_rows(r, pr);
    const std::int64_t inv = *inverse_mod(a(r, c), p);
    for (std::size_t k = c; k < a.cols(); ++k) a(r, k) = mul_mod(a(r, k), inv, p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const std::int64_t f = a(i, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(i, k) = mod(a(i, k) - mul_mod(f, a(r, k), p), p);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  ModKernel out;
  out.rank = pivot_cols.size();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::int64_t> v(a.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = mod(-a(i, f), p);
    out.basis.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homogeneous systems over Z/n

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Mixed-radix walk over sum_i y_i * g_i (mod n), 0 <= y_i < orders[i].
class SolutionEnumerator {
 public:
  SolutionEnumerator(std::int64_t modulus, std::size_t width,
                     std::vector<std::vector<std::int64_t>> generators, std::vector<std::int64_t> orders)
      : n_(modulus),
        gens_(std::move(generators)),
        orders_(std::move(orders)),
        digits_(gens_.size(), 0),
        current_(width, 0) {}

  /// Next solution, or nullopt once every solution has been produced.
  std::optional<std::vector<std::int64_t>> next() {
    if (done_) return std::nullopt;
    std::vector<std::int64_t> out = current_;
    advance();
    return out;
  }

 private:
  void advance() {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      for (std::size_t k = 0; k < current_.size(); ++k) current_[k] = mod(current_[k] + gens_[i][k], n_);
      if (++digits_[i] < orders_[i]) return;
      digits_[i] = 0;  // wrapped: current_ is back to its value before this digit moved
    }
    done_ = true;
  }

  std::int64_t n_;
  std::vector<std::vector<std::int64_t>> gens_;
  std::vector<std::int64_t> orders_;
  std::vector<std::int64_t> digits_;
  std::vector<std::int64_t> current_;
  bool done_ = false;
};

struct SolutionSpace {
  std::int64_t modulus = 1;
  std::size_t width = 0;  // number of unknowns
  std::size_t rank = 0;   // rank over the rationals
  std::vector<BigInt> invariant_factors;
  /// Generators of the solution module together with their additive orders;
  /// every solution is sum y_i g_i with 0 <= y_i < orders[i], uniquely.
  std::vector<std::vector<std::int64_t>> generators;
  std::vector<std::int64_t> orders;
  BigInt count;

  bool within(std::uint64_t cap) const { return count <= BigInt(cap); }

  SolutionEnumerator enumerate(std::uint64_t cap = kDefaultEnumerationCap) const {
    if (!within(cap)) throw CapExceeded(count.str(), cap);
    return SolutionEnumerator(modulus, width, generators, orders);
  }
};

/// All x with m x = 0 (mod n). count = n^(cols - rank) * prod gcd(d_i, n).
inline SolutionSpace solve_homogeneous_mod_n(const IntMatrix& m, std::int64_t n) {
  if (n < 1) throw DomainError("modulus must be >= 1");
  const SmithForm snf = smith_normal_form(m);
  SolutionSpace out;
  out.modulus = n;
  out.width = m.cols();
  out.rank = snf.rank;
  out.invariant_factors = snf.invariant_factors;
  out.count = 1;
  for (std::size_t i = 0; i < m.cols(); ++i) {
    std::int64_t order = n;
    std::int64_t scale = 1;
    if (i < snf.rank) {
      order = std::gcd(mod(snf.invariant_factors[i], n), n);
      scale = n / order;
    }
    out.count *= order;
    if (order == 1) continue;
    std::vector<std::int64_t> g(m.cols());
    for (std::size_t r = 0; r < m.cols(); ++r) g[r] = mul_mod(mod(snf.right(r, i), n), scale, n);
    out.generators.push_back(std::move(g));
    out.orders.push_back(order);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Determinants

namespace detail {

// Bareiss elimination in place. Returns false if T overflowed.
template <class T>
bool bareiss_abs_det(Matrix<T>& a, T& result) {
  const std::size_t k = a.rows();
  T prev = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (a(i, i) == 0) {
      std::size_t r = i + 1;
      while (r < k && a(r, i) == 0) ++r;
      if (r == k) {
        result = 0;
        return true;
      }
      a.swap_rows(i, r);
    }
    for (std::size_t r = i + 1; r < k; ++r)
      for (std::size_t c = i + 1; c < k; ++c) {
        if constexpr (std::is_same_v<T, __int128>) {
          __int128 x, y, z;
          if (__builtin_mul_overflow(a(r, c), a(i, i), &x)) return false;
          if (__builtin_mul_overflow(a(r, i), a(i, c), &y)) return false;
          if (__builtin_sub_overflow(x, y, &z)) return false;
          a(r, c) = z / prev;
        } else {
          a(r, c) = (a(r, c) * a(i, i) - a(r, i) * a(i, c)) / prev;
        }
      }
    prev = a(i, i);
  }
  result = k == 0 ? T{1} : a(k - 1, k - 1);
  if (result < 0) result = -result;
  return true;
}

inline BigInt to_big(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-out) : out;
}

}  // namespace detail

/// |det| of m with one row and one column deleted, by fraction-free elimination.
inline BigInt minor_abs_det(const IntMatrix& m, std::size_t drop_row, std::size_t drop_col) {
  if (m.rows() != m.cols())
    throw DomainError("minor of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                      " matrix is not square");
  if (drop_row >= m.rows() || drop_col >= m.cols()) throw DomainError("minor index out of range");
  const std::size_t k = m.rows() - 1;
  Matrix<__int128> fast(k, k);
  for (std::size_t r = 0, rr = 0; r < m.rows(); ++r) {
    if (r == drop_row) continue;
    for (std::size_t c = 0, cc = 0; c < m.cols(); ++c) {
      if (c == drop_col) continue;
      fast(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  __int128 small;
  Matrix<__int128> work = fast;
  if (detail::bareiss_abs_det(work, small)) return detail::to_big(small);

  BigMatrix big(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) big(r, c) = detail::to_big(fast(r, c));
  BigInt result;
  detail::bareiss_abs_det(big, result);
  return result;
}

}  // namespace foxcolor
