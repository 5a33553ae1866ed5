#pragma once

// p-linear (Frobenius-semilinear) maps on F_q^n and their Hasse-Witt
// invariants.
//
// A p-linear map f with f(a_j) = sum_i A_ij a_i acts on coordinates as
// v -> A * Frob(v). Under the base change v_new = S v_old the matrix becomes
// S * A * Frob(S^{-1}).

#include <fano/finite_field.hpp>

#include <string>

namespace fano {

struct PLinearMap {
  FieldPtr field;
  FieldMatrix matrix;

  PLinearMap(FieldPtr f, FieldMatrix a) : field(std::move(f)), matrix(std::move(a)) {
    if (!field) throw Error("p-linear map without a field");
    if (!matrix.is_square()) throw Error("p-linear map matrix must be square");
    for (std::size_t i = 0; i < matrix.rows(); ++i)
      for (std::size_t j = 0; j < matrix.cols(); ++j)
        if (matrix(i, j) >= field->order()) throw Error("matrix entry is not a field element");
  }

  std::size_t dimension() const { return matrix.rows(); }

  FieldVector operator()(const FieldVector& v) const {
    FieldVector fv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) fv[i] = field->frobenius(v[i]);
    return field_apply(*field, matrix, fv);
  }
};

inline std::size_t hw_rank(const PLinearMap& f) { return field_rank(*f.field, f.matrix); }

inline bool has_max_rank(const PLinearMap& f) { return hw_rank(f) == f.dimension(); }

/// B = S * A * Frob(S^{-1}).
inline PLinearMap semilinear_conjugate(const PLinearMap& f, const FieldMatrix& s) {
  const FiniteField& k = *f.field;
  if (s.rows() != f.dimension() || !s.is_square()) throw Error("base change matrix has the wrong size");
  auto sinv = field_inverse(k, s);
  if (!sinv) throw Error("base change matrix is singular");
  FieldMatrix b = field_product(k, field_product(k, s, f.matrix), field_frobenius(k, *sinv));
  return PLinearMap(f.field, std::move(b));
}

/// Class of det(A) in k / k^{x(p-1)}. The subgroup of (p-1)-th powers of
/// k^x = <g> is <g^{p-1}>, so the nonzero classes are g^0, ..., g^{p-2};
/// the representative is g^(log_g det mod (p-1)), the first member of the
/// coset in the enumeration 0, 1, g, g^2, ...
struct HwDetClass {
  bool zero = false;
  std::uint32_t exponent = 0;             // meaningful when !zero
  FiniteField::Element representative = 0;

  friend bool operator==(const HwDetClass&, const HwDetClass&) = default;

  std::string to_string() const {
    if (zero) return "0";
    if (exponent == 0) return "1";
    return "g^" + std::to_string(exponent);
  }
};

inline HwDetClass det_class(const FiniteField& k, FiniteField::Element det) {
  HwDetClass c;
  if (det == 0) {
    c.zero = true;
    return c;
  }
  c.exponent = k.log(det) % (k.characteristic() - 1 == 0 ? 1 : k.characteristic() - 1);
  c.representative = k.exp(c.exponent);
  return c;
}

inline HwDetClass hw_det_class(const PLinearMap& f) { return det_class(*f.field, field_det(*f.field, f.matrix)); }

struct RankSequenceReport {
  std::size_t sub_dim = 0, sub_rank = 0;
  std::size_t quotient_dim = 0, quotient_rank = 0;
  std::size_t total_rank = 0;
  PLinearMap sub;
  PLinearMap quotient;

  bool sub_max() const { return sub_rank == sub_dim; }
  bool quotient_max() const { return quotient_rank == quotient_dim; }
  bool total_max() const { return total_rank == sub_dim + quotient_dim; }
  /// Maximal rank on sub and quotient forces maximal rank on the total map.
  bool lemma_holds() const { return !(sub_max() && quotient_max()) || total_max(); }
};

/// Restricts f to the subspace spanned by the columns of `basis` and induces
/// the quotient map. The subspace must be f-invariant.
inline RankSequenceReport rank_sequence_check(const PLinearMap& f, const FieldMatrix& basis) {
  const FiniteField& k = *f.field;
  const std::size_t n = f.dimension();
  if (basis.rows() != n) throw Error("subspace basis has the wrong ambient dimension");
  const std::size_t r = basis.cols();
  if (field_rank(k, basis) != r) throw Error("subspace basis is not linearly independent");

  // Extend the basis by standard vectors to a basis of the whole space.
  FieldMatrix full(n, n, 0);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) full(i, j) = basis(i, j);
  std::size_t filled = r;
  for (std::size_t e = 0; e < n && filled < n; ++e) {
    FieldMatrix trial = full;
    for (std::size_t i = 0; i < n; ++i) trial(i, filled) = (i == e) ? 1 : 0;
    FieldMatrix cols(n, filled + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= filled; ++j) cols(i, j) = trial(i, j);
    if (field_rank(k, cols) == filled + 1) {
      full = trial;
      ++filled;
    }
  }
  auto pinv = field_inverse(k, full);
  if (!pinv) throw Error("failed to extend subspace basis");
  // New coordinates are P^{-1} times old ones.
  PLinearMap b = semilinear_conjugate(f, *pinv);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (b.matrix(i, j) != 0) throw Error("subspace is not invariant under the p-linear map");

  FieldMatrix sub(r, r), quot(n - r, n - r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) sub(i, j) = b.matrix(i, j);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = r; j < n; ++j) quot(i - r, j - r) = b.matrix(i, j);

  RankSequenceReport rep{r, 0, n - r, 0, hw_rank(f), PLinearMap(f.field, sub), PLinearMap(f.field, quot)};
  rep.sub_rank = hw_rank(rep.sub);
  rep.quotient_rank = hw_rank(rep.quotient);
  return rep;
}

}  // namespace fano
