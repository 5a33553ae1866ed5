#pragma once

// Exact integer and rational linear algebra.
//
// Integer and Rational are GMP's mpz_class / mpq_class. Every Rational that
// leaves this header is canonical (lowest terms, positive denominator).

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fano {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Raised for malformed input: dimension mismatches, degenerate forms,
/// values outside an operation's domain.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

/// "p/q" in lowest terms, or "n" for integers.
inline std::string to_string(const Rational& r) {
  if (is_integral(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational parse_rational(const std::string& text) {
  auto trim = [](std::string s) {
    auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), issp));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), issp).base(), s.end());
    return s;
  };
  std::string s = trim(text);
  auto slash = s.find('/');
  Integer num, den(1);
  auto parse_int = [&](const std::string& part) {
    Integer z;
    std::string p = trim(part);
    if (p.empty() || z.set_str(p, 10) != 0) {
      throw Error("malformed rational: '" + text + "'");
    }
    return z;
  };
  if (slash == std::string::npos) {
    num = parse_int(s);
  } else {
    num = parse_int(s.substr(0, slash));
    den = parse_int(s.substr(slash + 1));
  }
  return make_rational(num, den);
}

inline Integer abs(const Integer& z) { return z < 0 ? Integer(-z) : z; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Integer square root if z is a perfect square.
inline std::optional<Integer> exact_sqrt(const Integer& z) {
  if (z < 0 || mpz_perfect_square_p(z.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

/// Reduce r into [0, modulus).
inline Rational reduce_mod(const Rational& r, const Integer& modulus) {
  // r = n/d; n mod (modulus*d), divided by d.
  Integer m = modulus * r.get_den();
  Integer n;
  mpz_fdiv_r(n.get_mpz_t(), r.get_num().get_mpz_t(), m.get_mpz_t());
  return make_rational(n, r.get_den());
}

/// Dense row-major matrix with value semantics.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (const auto& row : rows) {
      if (row.size() != m.cols_) throw Error("ragged matrix rows");
      m.data_.insert(m.data_.end(), row.begin(), row.end());
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size(), T(0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
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

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw Error("matrix-vector dimension mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum dimension mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix difference dimension mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << m(r, c);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

inline RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

/// Converts when every entry is integral.
inline std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!is_integral(m(r, c))) return std::nullopt;
      out(r, c) = m(r, c).get_num();
    }
  return out;
}

inline std::optional<IntVector> to_integer(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integral(x)) return std::nullopt;
    out.push_back(x.get_num());
  }
  return out;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw Error("dot product dimension mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithForm {
  IntMatrix d;  // diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix v;  // unimodular, cols x cols; d = u * m * v

  /// Diagonal entries d_1, ..., d_min(rows, cols).
  IntVector diagonal() const {
    IntVector out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
  }
  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& x : diagonal()) r += (x != 0);
    return r;
  }
};

/// D = U*M*V with pivots chosen by smallest nonzero absolute value
/// (first in row-major order on ties).
inline SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto row_axpy = [&](std::size_t target, std::size_t source, const Integer& q) {
    // row_target -= q * row_source, in D and U
    for (std::size_t c = 0; c < cols; ++c) d(target, c) -= q * d(source, c);
    for (std::size_t c = 0; c < rows; ++c) u(target, c) -= q * u(source, c);
  };
  auto col_axpy = [&](std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t r = 0; r < rows; ++r) d(r, target) -= q * d(r, source);
    for (std::size_t r = 0; r < cols; ++r) v(r, target) -= q * v(r, source);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::size_t pr = rows, pc = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          Integer a = abs(d(i, j));
          if (pr == rows || a < best) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      if (pr == rows) break;  // remaining block is zero
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_axpy(i, t, q);
        clean = clean && d(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_axpy(j, t, q);
        clean = clean && d(t, j) == 0;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t()) == 0) {
            row_axpy(t, i, Integer(-1));  // row_t += row_i
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

// ---------------------------------------------------------------------------
// Determinants and solving

/// Bareiss fraction-free determinant of an integer matrix.
inline Integer det_bareiss(IntMatrix a) {
  if (!a.is_square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Integer(1);
  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Integer(0);
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace detail {

/// Scales each row by the lcm of its denominators; returns the integer
/// matrix and the per-row scale factors.
inline std::pair<IntMatrix, IntVector> clear_row_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  IntVector scales(m.rows(), Integer(1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l(1);
    for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, m(r, c).get_den());
    scales[r] = l;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational x = m(r, c) * l;
      out(r, c) = x.get_num();
    }
  }
  return {std::move(out), std::move(scales)};
}

}  // namespace detail

inline Rational det_exact(const RatMatrix& m) {
  if (!m.is_square()) throw Error("determinant of a non-square matrix");
  auto [a, scales] = detail::clear_row_denominators(m);
  Integer denom(1);
  for (const auto& s : scales) denom *= s;
  return make_rational(det_bareiss(std::move(a)), denom);
}

inline Integer det_exact(const IntMatrix& m) { return det_bareiss(m); }

/// Fraction-free row echelon form of an integer matrix. Each elimination
/// step is p*row_i - f*row_pivot followed by division by the row content.
struct Echelon {
  IntMatrix rows;                    // echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

inline Echelon fraction_free_echelon(IntMatrix a, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Integer piv = a(r, c), f = a(i, c);
      Integer content(0);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a(i, j) = piv * a(i, j) - f * a(r, j);
        content = gcd(content, a(i, j));
      }
      if (content > 1)
        for (std::size_t j = 0; j < a.cols(); ++j)
          mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), content.get_mpz_t());
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) {
  auto [a, scales] = detail::clear_row_denominators(m);
  return fraction_free_echelon(std::move(a), m.cols()).pivots.size();
}

inline std::size_t rank(const IntMatrix& m) { return fraction_free_echelon(m, m.cols()).pivots.size(); }

/// One exact solution of a*x = b (free variables set to zero), or nullopt
/// when the system is inconsistent.
inline std::optional<RatVector> solve_exact(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw Error("solve: right-hand side length mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto [ints, scales] = detail::clear_row_denominators(aug);
  Echelon ech = fraction_free_echelon(std::move(ints), a.cols());
  const std::size_t rk = ech.pivots.size();
  for (std::size_t r = rk; r < ech.rows.rows(); ++r)
    if (ech.rows(r, a.cols()) != 0) return std::nullopt;

  RatVector x(a.cols(), Rational(0));
  for (std::size_t k = rk; k-- > 0;) {
    const std::size_t pc = ech.pivots[k];
    Rational acc(ech.rows(k, a.cols()));
    for (std::size_t c = pc + 1; c < a.cols(); ++c) acc -= Rational(ech.rows(k, c)) * x[c];
    x[pc] = acc / Rational(ech.rows(k, pc));
  }
  return x;
}

inline std::optional<RatVector> solve_exact(const IntMatrix& a, const IntVector& b) {
  return solve_exact(to_rational(a), to_rational(b));
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (rank(m) != n) return std::nullopt;
  RatMatrix out(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    RatVector e(n, Rational(0));
    e[c] = 1;
    auto x = solve_exact(m, e);
    if (!x) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) out(r, c) = (*x)[r];
  }
  return out;
}

/// Inverse of a unimodular integer matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  auto inv = inverse(to_rational(m));
  if (!inv) throw Error("matrix is singular");
  auto z = to_integer(*inv);
  if (!z) throw Error("matrix is not unimodular");
  return *z;
}

/// Z-basis (as columns) of {x in Z^n : m*x = 0}; the result is saturated.
inline IntMatrix integer_kernel(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  const std::size_t n = m.cols();
  IntMatrix basis(n, n - r);
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j - r) = snf.v(i, j);
  return basis;
}

/// Z-basis (as columns) of the column span of an integer matrix.
inline IntMatrix column_span_basis(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  IntMatrix uinv = unimodular_inverse(snf.u);
  IntMatrix basis(m.rows(), r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) basis(i, j) = uinv(i, j) * snf.d(j, j);
  return basis;
}

/// True if the columns span a saturated (primitive) sublattice of Z^rows.
inline bool is_primitive(const IntMatrix& embedding) {
  SmithForm snf = smith_normal_form(embedding);
  for (const auto& x : snf.diagonal())
    if (x != 0 && x != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Finite abelian groups

/// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_k,
/// every d_i >= 2. The empty list is the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  /// Accepts any list of cyclic orders (>= 1) and normalizes it.
  static FiniteAbelianGroup from_cyclic_orders(const std::vector<Integer>& orders) {
    for (const auto& o : orders)
      if (o < 1) throw Error("cyclic order must be positive");
    IntMatrix diag(orders.size(), orders.size(), Integer(0));
    for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
    FiniteAbelianGroup g;
    for (const auto& d : smith_normal_form(diag).diagonal())
      if (d > 1) g.factors_.push_back(d);
    return g;
  }

  static FiniteAbelianGroup cyclic(const Integer& n) { return from_cyclic_orders({n}); }

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }

  Integer order() const {
    Integer o(1);
    for (const auto& d : factors_) o *= d;
    return o;
  }

  /// The p-primary component G[p^inf].
  FiniteAbelianGroup p_primary_part(const Integer& p) const {
    std::vector<Integer> parts;
    for (const auto& d : factors_) {
      Integer part(1), rest = d;
      while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
        rest /= p;
        part *= p;
      }
      parts.push_back(part);
    }
    return from_cyclic_orders(parts);
  }

  friend FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    std::vector<Integer> all = a.factors_;
    all.insert(all.end(), b.factors_.begin(), b.factors_.end());
    return from_cyclic_orders(all);
  }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

  /// "0", "Z/4", "Z/2 + Z/4".
  std::string to_string() const {
    if (factors_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += " + ";
      out += "Z/" + factors_[i].get_str();
    }
    return out;
  }

 private:
  std::vector<Integer> factors_;
};

}  // namespace fano
