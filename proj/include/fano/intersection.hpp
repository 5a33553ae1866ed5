#pragma once

// Intersection theory on surfaces: Riemann-Roch polynomials, adjunction,
// contraction of negative-definite configurations and Mumford's rational
// pullback.

#include <fano/exact.hpp>
#include <fano/lattice.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fano {

/// Numerical data of a surface: Num with its form, the canonical class,
/// and chi(O).
struct SurfaceModel {
  Lattice num;
  IntVector canonical;
  Integer chi{1};

  SurfaceModel() = default;
  SurfaceModel(Lattice l, IntVector k, Integer c) : num(std::move(l)), canonical(std::move(k)), chi(std::move(c)) {
    if (canonical.size() != num.rank()) throw Error("canonical class dimension does not match lattice rank");
  }

  RatVector k() const { return to_rational(canonical); }
};

/// Rational coefficient vector in the lattice basis.
struct Divisor {
  RatVector coeffs;

  static Divisor of(const IntVector& v) { return {to_rational(v)}; }
  bool is_integral() const { return to_integer(coeffs).has_value(); }
};

// ---------------------------------------------------------------------------
// Riemann-Roch

/// chi(L^t) = a2 t^2 + a1 t + a0.
struct ChiPolynomial {
  Rational a2, a1, a0;

  Rational operator()(const Rational& t) const { return a2 * t * t + a1 * t + a0; }

  /// A quadratic is integer-valued on Z iff its values at 0, 1, 2 are
  /// integers. Returns the first t in {0, 1, 2, -1} with a non-integral
  /// value, if any.
  std::optional<Integer> first_non_integral() const {
    for (int t : {0, 1, 2, -1})
      if (!is_integral((*this)(Rational(t)))) return Integer(t);
    return std::nullopt;
  }
  bool integer_valued() const { return !first_non_integral().has_value(); }
};

inline ChiPolynomial chi_polynomial(const SurfaceModel& s, const Divisor& l) {
  const Rational ll = s.num.product(l.coeffs, l.coeffs);
  const Rational lk = s.num.product(l.coeffs, s.k());
  return {ll / 2, -lk / 2, Rational(s.chi)};
}

/// (K + D).D, the degree of the dualizing sheaf of a curve D.
inline Rational adjunction_degree(const SurfaceModel& s, const Divisor& d) {
  RatVector kd = s.k();
  for (std::size_t i = 0; i < kd.size(); ++i) kd[i] += d.coeffs[i];
  return s.num.product(kd, d.coeffs);
}

/// chi(O_D) = -deg(omega_D)/2 for a Gorenstein curve.
inline Rational curve_chi(const Rational& omega_degree) { return -omega_degree / 2; }

// ---------------------------------------------------------------------------
// Mumford pullback

/// Exceptional curves E_1..E_r of a resolution together with a strict
/// transform Theta*: its self-intersection and its intersections with E_i.
struct ResolutionConfig {
  Lattice exceptional;
  Rational strict_self;
  IntVector strict_meets;
};

struct PullbackResult {
  RatVector lambda;         // r^*(Theta) = Theta* + sum lambda_i E_i
  Rational strict_self;     // Theta*^2
  Rational rational_self;   // Theta^2 = r^*(Theta)^2
  bool strict_self_integral = true;
};

namespace detail {

inline RatVector solve_negative_definite(const Lattice& exceptional, const RatVector& rhs) {
  if (exceptional.rank() == 0) return {};
  if (definiteness(exceptional).kind != Definiteness::Kind::NegDefinite)
    throw Error("exceptional configuration is not negative-definite");
  auto x = solve_exact(to_rational(exceptional.gram()), rhs);
  if (!x) throw Error("degenerate exceptional Gram matrix");
  return *x;
}

inline RatVector pullback_lambda(const Lattice& exceptional, const IntVector& meets) {
  if (meets.size() != exceptional.rank()) throw Error("strict_meets length does not match exceptional rank");
  RatVector rhs;
  for (const auto& m : meets) rhs.push_back(Rational(-m));
  return solve_negative_definite(exceptional, rhs);
}

inline Rational lambda_dot(const RatVector& lambda, const IntVector& meets) {
  Rational s(0);
  for (std::size_t i = 0; i < lambda.size(); ++i) s += lambda[i] * Rational(meets[i]);
  return s;
}

}  // namespace detail

/// Given Theta*^2, solves sum lambda_i (E_i.E_j) = -(Theta*.E_j) and returns
/// Theta^2 = Theta*^2 + sum lambda_i (E_i.Theta*).
inline PullbackResult mumford_pullback(const ResolutionConfig& cfg) {
  PullbackResult r;
  r.lambda = detail::pullback_lambda(cfg.exceptional, cfg.strict_meets);
  r.strict_self = cfg.strict_self;
  r.rational_self = cfg.strict_self + detail::lambda_dot(r.lambda, cfg.strict_meets);
  r.strict_self_integral = is_integral(r.strict_self);
  return r;
}

/// Reverse direction: given Theta^2 on the singular surface, recovers Theta*^2.
inline PullbackResult mumford_strict_self(const Lattice& exceptional, const IntVector& meets,
                                          const Rational& rational_self) {
  PullbackResult r;
  r.lambda = detail::pullback_lambda(exceptional, meets);
  r.rational_self = rational_self;
  r.strict_self = rational_self - detail::lambda_dot(r.lambda, meets);
  r.strict_self_integral = is_integral(r.strict_self);
  return r;
}

struct RelativeCanonical {
  RatVector lambda;
  bool all_nonpositive = true;
};

/// The Q-divisor K_{S/X} = sum lambda_i E_i with (K_{S/X}.E_j) = k_dot_e[j].
inline RelativeCanonical relative_canonical(const Lattice& exceptional, const IntVector& k_dot_e) {
  if (k_dot_e.size() != exceptional.rank()) throw Error("k_dot_e length does not match exceptional rank");
  RelativeCanonical out;
  out.lambda = detail::solve_negative_definite(exceptional, to_rational(k_dot_e));
  for (const auto& l : out.lambda) out.all_nonpositive = out.all_nonpositive && l <= 0;
  return out;
}

// ---------------------------------------------------------------------------
// Contractions

inline Lattice configuration_lattice(const SurfaceModel& s, const std::vector<IntVector>& config) {
  IntMatrix g(config.size(), config.size());
  for (std::size_t i = 0; i < config.size(); ++i)
    for (std::size_t j = 0; j < config.size(); ++j) g(i, j) = s.num.product(config[i], config[j]);
  return Lattice(std::move(g), Lattice::default_labels(config.size(), "E"));
}

/// Contraction of a negative-definite configuration. Num of the image is the
/// primitive orthogonal complement of the configuration; chi(O) is carried
/// over unchanged, which assumes rational singularities.
struct Contraction {
  SurfaceModel surface;
  IntMatrix embedding;             // pullback: complement basis in source coordinates
  std::vector<IntVector> curves;   // contracted configuration
  Lattice exceptional;
  std::string note = "chi(O) carried over unchanged: assumes rational singularities";

  /// Mumford pullback of the image of d: d + sum lambda_i E_i, orthogonal to all E_i.
  RatVector rational_pullback(const SurfaceModel& source, const Divisor& d) const {
    RatVector rhs;
    for (const auto& e : curves) rhs.push_back(-source.num.product(d.coeffs, to_rational(e)));
    RatVector lambda = detail::solve_negative_definite(exceptional, rhs);
    RatVector out = d.coeffs;
    for (std::size_t i = 0; i < curves.size(); ++i)
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += lambda[i] * Rational(curves[i][k]);
    return out;
  }

  /// Coordinates of the image of d in the basis of Num of the contraction.
  RatVector pushforward(const SurfaceModel& source, const Divisor& d) const {
    RatVector pulled = rational_pullback(source, d);
    auto coords = solve_exact(to_rational(embedding), pulled);
    if (!coords) throw Error("pullback does not lie in the span of the complement");
    return *coords;
  }
};

inline Contraction contract(const SurfaceModel& s, const std::vector<IntVector>& config) {
  for (const auto& v : config)
    if (v.size() != s.num.rank()) throw Error("curve dimension does not match lattice rank");
  Contraction c;
  c.curves = config;
  c.exceptional = configuration_lattice(s, config);
  if (!config.empty()) {
    if (definiteness(c.exceptional).kind != Definiteness::Kind::NegDefinite)
      throw Error("configuration is not negative-definite");
  }
  Complement comp = orthogonal_complement(s.num, config);
  c.embedding = comp.embedding;
  // Pushforward of K: coordinates of its rational pullback in the complement basis.
  RatVector k_coords = c.pushforward(s, Divisor{s.k()});
  auto k_int = to_integer(k_coords);
  if (!k_int) throw Error("canonical class of the contraction is not Cartier");
  c.surface = SurfaceModel(comp.lattice, *k_int, s.chi);
  return c;
}

struct PushforwardReport {
  bool orthogonal = true;
  std::vector<std::size_t> failing;  // indices of contracted curves with (D.E) != 0
  Rational self;                     // D^2 in the source lattice
};

/// Checks that D is orthogonal to every contracted curve, i.e. is a pullback,
/// and computes D^2.
inline PushforwardReport pushforward_check(const SurfaceModel& s, const Contraction& c, const Divisor& d) {
  PushforwardReport r;
  for (std::size_t i = 0; i < c.curves.size(); ++i)
    if (s.num.product(d.coeffs, to_rational(c.curves[i])) != 0) {
      r.orthogonal = false;
      r.failing.push_back(i);
    }
  r.self = s.num.product(d.coeffs, d.coeffs);
  return r;
}

struct ConductrixMultipliers {
  RatVector m;
  bool integral = true;
};

/// Solves (C.E_j) = sum m_i (E_i.E_j); nullopt when unsolvable.
inline std::optional<ConductrixMultipliers> conductrix_multipliers(const SurfaceModel& s, const Divisor& c,
                                                                   const std::vector<IntVector>& config) {
  Lattice e = configuration_lattice(s, config);
  if (!config.empty() && definiteness(e).kind != Definiteness::Kind::NegDefinite)
    throw Error("configuration is not negative-definite");
  RatVector rhs;
  for (const auto& v : config) rhs.push_back(s.num.product(c.coeffs, to_rational(v)));
  auto x = solve_exact(to_rational(e.gram()), rhs);
  if (!x) return std::nullopt;
  ConductrixMultipliers out{*x, to_integer(*x).has_value()};
  return out;
}

}  // namespace fano
