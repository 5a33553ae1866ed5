#pragma once

// Commutative group schemes over a perfect field, by decomposition type.
//
// G is recorded through its graded pieces: the anti-affine/abelian part, a
// smooth unipotent part, a torus, the local (infinitesimal) part
// L = G^0/G^0_red split into multiplicative mu_{p^n} pieces and unipotent
// (alpha-type) pieces, and the component group Phi_G. Extensions are
// flattened. Imperfect fields and non-split extensions over them are not
// representable here.
//
// The maximal finite unipotent quotient is  Upsilon_G = L/L^mult x Phi_G[p^inf].

#include <fano/exact.hpp>
#include <fano/lattice.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace fano {

struct GroupSchemeData {
  long p = 2;
  long abelian_dim = 0;
  long smooth_unipotent_dim = 0;
  long mult_rank = 0;
  std::vector<Integer> local_mult;       // orders p^n of mu_{p^n} factors
  std::vector<Integer> local_unipotent;  // orders of local unipotent factors (alpha_{p^n}-type)
  FiniteAbelianGroup component_group;

  void validate() const {
    if (p < 2 || !mpz_probab_prime_p(Integer(p).get_mpz_t(), 25)) throw Error("p must be prime");
    if (abelian_dim < 0 || smooth_unipotent_dim < 0 || mult_rank < 0) throw Error("dimensions must be >= 0");
    auto check_local = [&](const std::vector<Integer>& v) {
      for (const auto& n : v) {
        Integer m = n;
        if (m < p) throw Error("local piece order must be a power of p greater than 1");
        while (m % p == 0) m /= p;
        if (m != 1) throw Error("local piece order must be a power of p");
      }
    };
    check_local(local_mult);
    check_local(local_unipotent);
  }

  friend bool operator==(const GroupSchemeData&, const GroupSchemeData&) = default;
};

struct FiniteUnipotentData {
  long p = 2;
  std::vector<Integer> local_pieces;  // sorted
  FiniteAbelianGroup etale_p_group;

  bool is_trivial() const { return local_pieces.empty() && etale_p_group.is_trivial(); }

  Integer order() const {
    Integer n = etale_p_group.order();
    for (const auto& x : local_pieces) n *= x;
    return n;
  }

  /// "0", "Z/2", "alpha_2", "alpha_2 x Z/2", "alpha_4" (for a local piece of order 4).
  std::string describe() const {
    if (is_trivial()) return "0";
    std::vector<std::string> parts;
    for (const auto& n : local_pieces) parts.push_back("alpha_" + n.get_str());
    if (!etale_p_group.is_trivial()) parts.push_back(etale_p_group.to_string());
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " x " : "") + parts[i];
    return s;
  }

  friend bool operator==(const FiniteUnipotentData&, const FiniteUnipotentData&) = default;
};

/// Quotient of Phi by the subgroup generated by its l-Sylow subgroups, l != p;
/// for abelian groups this is the p-primary part.
inline FiniteAbelianGroup component_quotient(const FiniteAbelianGroup& phi, long p) {
  return phi.p_primary_part(Integer(p));
}

inline FiniteUnipotentData upsilon(const GroupSchemeData& g) {
  g.validate();
  FiniteUnipotentData out;
  out.p = g.p;
  out.local_pieces = g.local_unipotent;
  std::sort(out.local_pieces.begin(), out.local_pieces.end());
  out.etale_p_group = component_quotient(g.component_group, g.p);
  return out;
}

/// G x H, defined when both live over the same characteristic.
inline GroupSchemeData product(const GroupSchemeData& g, const GroupSchemeData& h) {
  if (g.p != h.p) throw Error("product of group schemes in different characteristics");
  GroupSchemeData out;
  out.p = g.p;
  out.abelian_dim = g.abelian_dim + h.abelian_dim;
  out.smooth_unipotent_dim = g.smooth_unipotent_dim + h.smooth_unipotent_dim;
  out.mult_rank = g.mult_rank + h.mult_rank;
  out.local_mult = g.local_mult;
  out.local_mult.insert(out.local_mult.end(), h.local_mult.begin(), h.local_mult.end());
  out.local_unipotent = g.local_unipotent;
  out.local_unipotent.insert(out.local_unipotent.end(), h.local_unipotent.begin(), h.local_unipotent.end());
  out.component_group = direct_sum(g.component_group, h.component_group);
  return out;
}

inline FiniteUnipotentData product(const FiniteUnipotentData& a, const FiniteUnipotentData& b) {
  if (a.p != b.p) throw Error("product of group schemes in different characteristics");
  FiniteUnipotentData out;
  out.p = a.p;
  out.local_pieces = a.local_pieces;
  out.local_pieces.insert(out.local_pieces.end(), b.local_pieces.begin(), b.local_pieces.end());
  std::sort(out.local_pieces.begin(), out.local_pieces.end());
  out.etale_p_group = direct_sum(a.etale_p_group, b.etale_p_group);
  return out;
}

/// A finite unipotent group scheme viewed as a group scheme.
inline GroupSchemeData as_group_scheme(const FiniteUnipotentData& u) {
  GroupSchemeData g;
  g.p = u.p;
  g.local_unipotent = u.local_pieces;
  g.component_group = u.etale_p_group;
  return g;
}

enum class EnriquesKind { Ordinary, Classical, Supersingular };

inline EnriquesKind parse_enriques_kind(const std::string& s) {
  if (s == "ordinary") return EnriquesKind::Ordinary;
  if (s == "classical") return EnriquesKind::Classical;
  if (s == "supersingular") return EnriquesKind::Supersingular;
  throw Error("unknown Enriques surface type: " + s);
}

inline std::string to_string(EnriquesKind k) {
  switch (k) {
    case EnriquesKind::Ordinary: return "ordinary";
    case EnriquesKind::Classical: return "classical";
    case EnriquesKind::Supersingular: return "supersingular";
  }
  return "?";
}

/// Pic^tau of an Enriques surface in characteristic two: mu_2, Z/2 or alpha_2.
inline GroupSchemeData enriques_pic_tau(EnriquesKind kind) {
  GroupSchemeData g;
  g.p = 2;
  switch (kind) {
    case EnriquesKind::Ordinary: g.local_mult = {Integer(2)}; break;
    case EnriquesKind::Classical: g.component_group = FiniteAbelianGroup::cyclic(2); break;
    case EnriquesKind::Supersingular: g.local_unipotent = {Integer(2)}; break;
  }
  return g;
}

inline std::string describe(const GroupSchemeData& g) {
  std::vector<std::string> parts;
  if (g.abelian_dim) parts.push_back("A^" + std::to_string(g.abelian_dim));
  if (g.smooth_unipotent_dim) parts.push_back("U^" + std::to_string(g.smooth_unipotent_dim));
  if (g.mult_rank) parts.push_back("G_m^" + std::to_string(g.mult_rank));
  for (const auto& n : g.local_mult) parts.push_back("mu_" + n.get_str());
  for (const auto& n : g.local_unipotent) parts.push_back("alpha_" + n.get_str());
  if (!g.component_group.is_trivial()) parts.push_back(g.component_group.to_string());
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " x " : "") + parts[i];
  return s;
}

/// Local class group of a rational double point: the discriminant group of its root lattice.
inline FiniteAbelianGroup rdp_class_group(const std::string& kind) {
  auto [family, n] = parse_root_kind(kind);
  if (family != RootFamily::A && family != RootFamily::D && family != RootFamily::E)
    throw Error("rational double points are of type A, D or E: " + kind);
  return discriminant_group(root_lattice(family, n)).group;
}

}  // namespace fano
