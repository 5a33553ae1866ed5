#pragma once

// Small finite fields F_q, q = p^e <= 2^16, with table-driven arithmetic.
//
// An element is the integer sum c_i p^i of its coefficient vector
// (c_0, ..., c_{e-1}) over F_p in the basis 1, x, ..., x^{e-1}. The modulus
// is the least monic irreducible polynomial of degree e, ordering monic
// polynomials x^e + c_{e-1} x^{e-1} + ... + c_0 by the integer sum c_i p^i.

#include <fano/exact.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fano {

class FiniteField {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  FiniteField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
    if (!is_prime(p)) throw Error("field characteristic must be prime");
    if (e < 1) throw Error("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      q *= p;
      if (q > kMaxOrder) throw Error("field order exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
    modulus_ = least_irreducible();
    build_tables();
  }

  static std::shared_ptr<const FiniteField> make(std::uint32_t p, std::uint32_t e) {
    return std::make_shared<const FiniteField>(p, e);
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  /// Coefficients c_0..c_e of the monic modulus.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Element primitive() const { return exp_[1]; }

  std::vector<std::uint32_t> coefficients(Element x) const {
    std::vector<std::uint32_t> c(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
      c[i] = x % p_;
      x /= p_;
    }
    return c;
  }
  Element from_coefficients(const std::vector<std::uint32_t>& c) const {
    if (c.size() > e_) throw Error("too many coefficients for field element");
    Element x = 0, mult = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= p_) throw Error("coefficient out of range for F_p");
      x += c[i] * mult;
      mult *= p_;
    }
    return x;
  }
  Element element(std::uint64_t index) const {
    if (index >= q_) throw Error("field element index out of range");
    return static_cast<Element>(index);
  }

  Element add(Element a, Element b) const {
    Element out = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
      out += ((a % p_ + b % p_) % p_) * mult;
      a /= p_;
      b /= p_;
      mult *= p_;
    }
    return out;
  }
  Element neg(Element a) const {
    Element out = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
      out += ((p_ - a % p_) % p_) * mult;
      a /= p_;
      mult *= p_;
    }
    return out;
  }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  Element inv(Element a) const {
    if (a == 0) throw Error("inverse of zero in a finite field");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  Element pow(Element a, std::uint64_t k) const {
    if (k == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1))];
  }
  Element frobenius(Element a) const { return pow(a, p_); }

  /// Discrete logarithm to the base primitive(); a must be nonzero.
  std::uint32_t log(Element a) const {
    if (a == 0) throw Error("logarithm of zero");
    return log_[a];
  }
  Element exp(std::uint64_t k) const { return exp_[static_cast<std::uint32_t>(k % (q_ - 1))]; }

  std::string describe() const {
    return "F_" + std::to_string(q_) + " (p=" + std::to_string(p_) + ", e=" + std::to_string(e_) + ")";
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.p_ == b.p_ && a.e_ == b.e_; }

 private:
  using Poly = std::vector<std::uint32_t>;  // low to high, over F_p

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  void trim(Poly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  std::uint32_t inv_p(std::uint32_t a) const {
    for (std::uint32_t x = 1; x < p_; ++x)
      if ((a * x) % p_ == 1) return x;
    throw Error("no inverse mod p");
  }

  Poly poly_mod(Poly a, const Poly& m) const {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv_p(m.back());
    while (a.size() > dm) {
      std::uint32_t f = (a.back() * lead_inv) % p_;
      std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p_ * p_ - f * m[i] % p_) % p_;
      trim(a);
    }
    return a;
  }

  Poly poly_mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p_;
    return out;
  }

  bool irreducible(const Poly& m) const {
    const std::size_t deg = m.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= p_;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f(d + 1, 0);
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < d; ++i) {
          f[i] = static_cast<std::uint32_t>(t % p_);
          t /= p_;
        }
        f[d] = 1;
        if (poly_mod(m, f).empty()) return false;
      }
    }
    return true;
  }

  Poly least_irreducible() const {
    for (std::uint32_t idx = 0; idx < q_; ++idx) {
      Poly m = coefficients_poly(idx);
      m.push_back(1);
      if (irreducible(m)) return m;
    }
    throw Error("no irreducible polynomial found");
  }

  Poly coefficients_poly(std::uint32_t x) const {
    Poly c(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
      c[i] = x % p_;
      x /= p_;
    }
    return c;
  }

  Element poly_to_element(Poly a) const {
    a.resize(e_, 0);
    Element x = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
      x += a[i] * mult;
      mult *= p_;
    }
    return x;
  }

  Element slow_mul(Element a, Element b) const {
    return poly_to_element(poly_mod(poly_mul(coefficients_poly(a), coefficients_poly(b)), modulus_));
  }

  void build_tables() {
    exp_.assign(q_ - 1 == 0 ? 1 : q_ - 1, 0);
    log_.assign(q_, 0);
    for (Element g = 1; g < q_; ++g) {
      // order of g
      Element x = 1;
      std::uint32_t k = 0;
      std::vector<Element> powers;
      do {
        powers.push_back(x);
        x = slow_mul(x, g);
        ++k;
      } while (x != 1 && k < q_);
      if (k == q_ - 1) {
        for (std::uint32_t i = 0; i < k; ++i) {
          exp_[i] = powers[i];
          log_[powers[i]] = i;
        }
        return;
      }
    }
    throw Error("no primitive element found");
  }

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_ = 0;
  Poly modulus_;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;
using FieldMatrix = Matrix<FiniteField::Element>;
using FieldVector = std::vector<FiniteField::Element>;

// Matrix arithmetic over a FiniteField. Matrix<T>'s own operators assume
// ordinary integer arithmetic and are not used for field entries.

inline FieldMatrix field_product(const FiniteField& f, const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product dimension mismatch");
  FieldMatrix out(a.rows(), b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
    }
  return out;
}

inline FieldVector field_apply(const FiniteField& f, const FieldMatrix& a, const FieldVector& v) {
  if (a.cols() != v.size()) throw Error("matrix-vector dimension mismatch");
  FieldVector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] = f.add(out[i], f.mul(a(i, k), v[k]));
  return out;
}

/// Entrywise x -> x^p.
inline FieldMatrix field_frobenius(const FiniteField& f, FieldMatrix a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = f.frobenius(a(i, j));
  return a;
}

struct FieldEchelon {
  FieldMatrix rows;
  std::size_t rank = 0;
  FiniteField::Element det = 0;  // meaningful for square input
};

inline FieldEchelon field_echelon(const FiniteField& f, FieldMatrix a) {
  FieldEchelon out;
  FiniteField::Element det = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) {
      det = 0;
      continue;
    }
    if (p != r) {
      a.swap_rows(r, p);
      det = f.neg(det);
    }
    det = f.mul(det, a(r, c));
    const auto pinv = f.inv(a(r, c));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const auto factor = f.mul(a(i, c), pinv);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
    }
    ++r;
  }
  out.rank = r;
  out.det = (a.is_square() && r == a.rows()) ? det : 0;
  out.rows = std::move(a);
  return out;
}

inline std::size_t field_rank(const FiniteField& f, const FieldMatrix& a) { return field_echelon(f, a).rank; }

inline FiniteField::Element field_det(const FiniteField& f, const FieldMatrix& a) {
  if (!a.is_square()) throw Error("determinant of a non-square matrix");
  if (a.rows() == 0) return 1;
  return field_echelon(f, a).det;
}

inline std::optional<FieldMatrix> field_inverse(const FiniteField& f, const FieldMatrix& a) {
  if (!a.is_square()) throw Error("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  FieldMatrix aug(n, 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    aug.swap_rows(c, p);
    const auto pinv = f.inv(aug(c, c));
    for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) = f.mul(aug(c, j), pinv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      const auto factor = aug(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) = f.sub(aug(i, j), f.mul(factor, aug(c, j)));
    }
  }
  FieldMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace fano
