#pragma once

// Degree/index bookkeeping for cones over Fano varieties, the
// denormalization Y of X along Z, and the parity gate on K^2.

#include <fano/exact.hpp>
#include <fano/intersection.hpp>

#include <optional>
#include <string>

namespace fano {

struct FanoData {
  long dim = 1;
  Rational degree{1};  // (-K)^n
  long index = 1;
  Integer chi{1};

  void validate() const {
    if (dim < 1) throw Error("Fano dimension must be >= 1");
    if (degree <= 0) throw Error("Fano degree must be positive");
    if (index < 1) throw Error("Fano index must be >= 1");
  }

  friend bool operator==(const FanoData&, const FanoData&) = default;
};

struct ConeResult {
  FanoData cone;
  long m = 1;
  bool degree_integral = true;
  std::string canonical;  // K_X = -(m+1)A
};

/// Projective cone X over B with respect to L, where L^m = omega_B^{-1}:
///   deg X = (m+1)^{n+1} / m^n * deg B,  ind X = m+1.
/// chi(O_X) is carried as chi(O_B).
inline ConeResult cone_invariants(const FanoData& base, long m) {
  base.validate();
  if (m < 1) throw Error("cone exponent m must be >= 1");
  Integer num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(m + 1), static_cast<unsigned long>(base.dim + 1));
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(base.dim));
  ConeResult r;
  r.m = m;
  r.cone.dim = base.dim + 1;
  r.cone.degree = make_rational(num, den) * base.degree;
  r.cone.index = m + 1;
  r.cone.chi = base.chi;
  r.degree_integral = is_integral(r.cone.degree);
  r.canonical = "K_X = -" + std::to_string(m + 1) + "A";
  return r;
}

/// From 0 -> O_Y -> O_X + O_Z -> O_Z' -> 0.
inline Integer denormalization_chi(const Integer& chi_x, const Integer& chi_z, const Integer& chi_zprime) {
  return chi_x + chi_z - chi_zprime;
}

/// (-K_Y)^3 = K_{Z'}^2 for the pushout Y.
inline Integer pushout_anticanonical_cube(const Integer& k2_zprime) {
  if (k2_zprime <= 0) throw Error("K^2 of the gluing surface must be positive");
  return k2_zprime;
}

struct ParityGate {
  bool allowed = false;             // K^2 in {2, 4, 6, 8}
  std::optional<Integer> d_square;  // K^2 / 2 when integral
};

inline ParityGate degree_parity_gate(const Integer& k2) {
  ParityGate g;
  g.allowed = k2 == 2 || k2 == 4 || k2 == 6 || k2 == 8;
  if (k2 % 2 == 0) g.d_square = k2 / 2;
  return g;
}

/// Ruled surface P(O + O(-d)) over a curve of genus g in the basis (E, f):
/// E^2 = -d, E.f = 1, f^2 = 0, K = -2E + (2g - 2 - d) f.
inline SurfaceModel ruled_surface(long genus, long d) {
  if (genus < 0) throw Error("genus must be >= 0");
  IntMatrix g{{Integer(-d), Integer(1)}, {Integer(1), Integer(0)}};
  return SurfaceModel(Lattice(g, {"E", "f"}), IntVector{Integer(-2), Integer(2 * genus - 2 - d)},
                      Integer(1 - genus));
}

}  // namespace fano
