#pragma once

// Truncated Witt vectors W_m(F_q).
//
// Sums and products come from the ghost components
//     w_n(x) = sum_{i<=n} p^i x_i^{p^{n-i}},
// evaluated on canonical lifts of the components to R = Z[x]/(M), where M
// is the monic integer lift of the field modulus. The n-th component of the
// result is (g_n - sum_{i<n} p^i s_i^{p^{n-i}}) / p^n reduced mod p, which is
// an exact division in R because x = y mod p implies x^{p^k} = y^{p^k} mod
// p^{k+1}.

#include <fano/finite_field.hpp>

#include <functional>
#include <string>
#include <vector>

namespace fano {

struct WittVector {
  std::vector<FiniteField::Element> components;
  friend bool operator==(const WittVector&, const WittVector&) = default;
  friend auto operator<=>(const WittVector&, const WittVector&) = default;
};

class WittRing {
 public:
  static constexpr std::size_t kMaxLength = 6;

  WittRing(FieldPtr field, std::size_t length) : field_(std::move(field)), length_(length) {
    if (!field_) throw Error("Witt ring without a field");
    if (length_ < 1 || length_ > kMaxLength) throw Error("Witt vector length must be in [1, 6]");
    p_ = Integer(field_->characteristic());
    for (auto c : field_->modulus()) modulus_.push_back(Integer(c));
  }

  const FiniteField& field() const { return *field_; }
  FieldPtr field_ptr() const { return field_; }
  std::size_t length() const { return length_; }

  WittVector make(std::vector<FiniteField::Element> comps) const {
    if (comps.size() != length_) throw Error("Witt vector length mismatch");
    for (auto c : comps)
      if (c >= field_->order()) throw Error("Witt component is not a field element");
    return {std::move(comps)};
  }
  WittVector zero() const { return {std::vector<FiniteField::Element>(length_, 0)}; }
  WittVector one() const {
    WittVector v = zero();
    v.components[0] = 1;
    return v;
  }

  /// All q^m elements in lexicographic component order (first component fastest).
  std::vector<WittVector> elements() const {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < length_; ++i) total *= field_->order();
    std::vector<WittVector> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      WittVector v = zero();
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < length_; ++i) {
        v.components[i] = static_cast<FiniteField::Element>(t % field_->order());
        t /= field_->order();
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  WittVector add(const WittVector& a, const WittVector& b) const {
    check(a, b);
    return combine(a, b, [this](const Lift& x, const Lift& y) { return lift_add(x, y); });
  }
  WittVector mul(const WittVector& a, const WittVector& b) const {
    check(a, b);
    return combine(a, b, [this](const Lift& x, const Lift& y) { return lift_mul(x, y); });
  }
  WittVector neg(const WittVector& a) const {
    check(a, a);
    return combine(a, a, [](const Lift& x, const Lift&) {
      Lift out = x;
      for (auto& c : out) c = -c;
      return out;
    });
  }
  WittVector sub(const WittVector& a, const WittVector& b) const { return add(a, neg(b)); }

  /// n * 1
  WittVector from_integer(long n) const {
    WittVector acc = zero();
    WittVector step = n >= 0 ? one() : neg(one());
    for (long i = 0; i < (n >= 0 ? n : -n); ++i) acc = add(acc, step);
    return acc;
  }

  /// Componentwise p-th power.
  WittVector frobenius(const WittVector& a) const {
    check(a, a);
    WittVector out = a;
    for (auto& c : out.components) c = field_->frobenius(c);
    return out;
  }
  /// (a_0, ..., a_{m-1}) -> (0, a_0, ..., a_{m-2}).
  WittVector verschiebung(const WittVector& a) const {
    check(a, a);
    WittVector out = zero();
    for (std::size_t i = 0; i + 1 < length_; ++i) out.components[i + 1] = a.components[i];
    return out;
  }

  /// Canonical projection W_m -> W_{m-n}.
  WittRing projected(std::size_t n) const {
    if (n >= length_) throw Error("projection must keep at least one component");
    return WittRing(field_, length_ - n);
  }
  WittVector project(const WittVector& a, std::size_t n) const {
    check(a, a);
    if (n >= length_) throw Error("projection must keep at least one component");
    return {std::vector<FiniteField::Element>(a.components.begin(), a.components.end() - static_cast<std::ptrdiff_t>(n))};
  }

  std::string to_string(const WittVector& a) const {
    std::string s = "(";
    for (std::size_t i = 0; i < a.components.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(a.components[i]);
    }
    return s + ")";
  }

 private:
  using Lift = std::vector<Integer>;  // element of Z[x]/(M), low to high

  void check(const WittVector& a, const WittVector& b) const {
    if (a.components.size() != length_ || b.components.size() != length_)
      throw Error("Witt vector length mismatch");
  }

  Lift lift(FiniteField::Element x) const {
    Lift out;
    for (auto c : field_->coefficients(x)) out.push_back(Integer(c));
    return out;
  }

  FiniteField::Element reduce(const Lift& x) const {
    std::vector<std::uint32_t> c;
    for (const auto& z : x) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), p_.get_mpz_t());
      c.push_back(static_cast<std::uint32_t>(r.get_ui()));
    }
    return field_->from_coefficients(c);
  }

  Lift lift_add(const Lift& a, const Lift& b) const {
    Lift out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
  }

  Lift lift_mul(const Lift& a, const Lift& b) const {
    const std::size_t e = modulus_.size() - 1;
    std::vector<Integer> prod(2 * e - 1, Integer(0));
    for (std::size_t i = 0; i < e; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < e; ++j) prod[i + j] += a[i] * b[j];
    }
    // reduce by the monic modulus
    for (std::size_t d = prod.size(); d-- > e;) {
      if (prod[d] == 0) continue;
      Integer f = prod[d];
      for (std::size_t k = 0; k <= e; ++k) prod[d - e + k] -= f * modulus_[k];
    }
    prod.resize(e);
    return prod;
  }

  Lift lift_pow_p(const Lift& a) const {
    // a^p by square-and-multiply
    Lift result(a.size(), Integer(0));
    result[0] = 1;
    Lift base = a;
    unsigned long k = p_.get_ui();
    while (k) {
      if (k & 1) result = lift_mul(result, base);
      k >>= 1;
      if (k) base = lift_mul(base, base);
    }
    return result;
  }

  /// p^n-scaled ghost components of the canonical lifts of a.
  std::vector<Lift> ghost(const WittVector& a) const {
    std::vector<Lift> powers;  // powers[i] = lift(a_i)^{p^{n-i}} at step n
    std::vector<Lift> out;
    for (std::size_t n = 0; n < length_; ++n) {
      for (auto& pw : powers) pw = lift_pow_p(pw);
      powers.push_back(lift(a.components[n]));
      Lift w(modulus_.size() - 1, Integer(0));
      Integer pi(1);
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] += pi * powers[i][k];
        pi *= p_;
      }
      out.push_back(std::move(w));
    }
    return out;
  }

  WittVector combine(const WittVector& a, const WittVector& b,
                     const std::function<Lift(const Lift&, const Lift&)>& op) const {
    std::vector<Lift> ga = ghost(a), gb = ghost(b);
    WittVector out = zero();
    std::vector<Lift> powers;
    Integer pn(1);
    for (std::size_t n = 0; n < length_; ++n) {
      for (auto& pw : powers) pw = lift_pow_p(pw);
      Lift t = op(ga[n], gb[n]);
      Integer pi(1);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < t.size(); ++k) t[k] -= pi * powers[i][k];
        pi *= p_;
      }
      for (auto& c : t) {
        if (mpz_divisible_p(c.get_mpz_t(), pn.get_mpz_t()) == 0)
          throw Error("internal: ghost recursion produced a non-divisible term");
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pn.get_mpz_t());
      }
      out.components[n] = reduce(t);
      powers.push_back(lift(out.components[n]));
      pn *= p_;
    }
    return out;
  }

  FieldPtr field_;
  std::size_t length_;
  Integer p_;
  std::vector<Integer> modulus_;
};

}  // namespace fano
