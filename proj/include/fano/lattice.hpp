#pragma once

// Integral lattices: dual graphs, definiteness, discriminant forms,
// overlattices and orthogonal complements.
//
// Root lattices follow the curve convention: diagonal -2, so ADE lattices
// are negative-definite.

#include <fano/exact.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace fano {

struct DualGraph {
  struct Vertex {
    std::string label;
    Integer self;
  };
  struct Edge {
    std::string a;
    std::string b;
    Integer multiplicity{1};
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i].label == label) return i;
    throw Error("unknown vertex label '" + label + "'");
  }

  void validate() const {
    std::set<std::string> seen;
    for (const auto& v : vertices)
      if (!seen.insert(v.label).second) throw Error("duplicate vertex label '" + v.label + "'");
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& e : edges) {
      if (e.a == e.b) throw Error("loop at vertex '" + e.a + "'");
      if (e.multiplicity < 1) throw Error("edge multiplicity must be >= 1");
      index_of(e.a);
      index_of(e.b);
      auto key = std::minmax(e.a, e.b);
      if (!pairs.insert({key.first, key.second}).second)
        throw Error("duplicate edge " + e.a + "-" + e.b);
    }
  }
};

class Lattice {
 public:
  Lattice() = default;
  Lattice(IntMatrix gram, std::vector<std::string> labels)
      : gram_(std::move(gram)), labels_(std::move(labels)) {
    if (!gram_.is_symmetric()) throw Error("Gram matrix must be square and symmetric");
    if (labels_.size() != gram_.rows()) throw Error("label count does not match Gram dimension");
  }
  explicit Lattice(IntMatrix gram) : Lattice(gram, default_labels(gram.rows())) {}

  static std::vector<std::string> default_labels(std::size_t n, const std::string& prefix = "v") {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
    return out;
  }

  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t rank() const { return gram_.rows(); }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw Error("unknown basis label '" + label + "'");
  }

  Integer det() const { return det_exact(gram_); }

  bool is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (mpz_odd_p(gram_(i, i).get_mpz_t()) != 0) return false;
    return true;
  }

  Rational product(const RatVector& x, const RatVector& y) const {
    if (x.size() != rank() || y.size() != rank()) throw Error("vector dimension does not match lattice rank");
    Rational s(0);
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j) s += x[i] * Rational(gram_(i, j)) * y[j];
    }
    return s;
  }
  Integer product(const IntVector& x, const IntVector& y) const {
    Rational r = product(to_rational(x), to_rational(y));
    return r.get_num();
  }

  /// Basis vector with the given label.
  IntVector unit(const std::string& label) const {
    IntVector e(rank(), Integer(0));
    e[index_of(label)] = 1;
    return e;
  }

  /// Sub-lattice spanned by the named basis vectors.
  Lattice restrict_to(const std::vector<std::string>& names) const {
    IntMatrix g(names.size(), names.size());
    std::vector<std::size_t> idx;
    for (const auto& n : names) idx.push_back(index_of(n));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) g(i, j) = gram_(idx[i], idx[j]);
    return Lattice(std::move(g), names);
  }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.gram_ == b.gram_ && a.labels_ == b.labels_;
  }

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
};

inline Lattice gram_from_dual_graph(const DualGraph& g) {
  g.validate();
  const std::size_t n = g.vertices.size();
  IntMatrix gram(n, n, Integer(0));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    gram(i, i) = g.vertices[i].self;
    labels.push_back(g.vertices[i].label);
  }
  for (const auto& e : g.edges) {
    std::size_t a = g.index_of(e.a), b = g.index_of(e.b);
    gram(a, b) = e.multiplicity;
    gram(b, a) = e.multiplicity;
  }
  return Lattice(std::move(gram), std::move(labels));
}

/// Lattice whose basis is the columns of `embedding`, with the induced form.
inline Lattice induced_lattice(const Lattice& ambient, const IntMatrix& embedding,
                               std::vector<std::string> labels = {}) {
  if (embedding.rows() != ambient.rank()) throw Error("embedding rows must match lattice rank");
  IntMatrix g = embedding.transpose() * ambient.gram() * embedding;
  if (labels.empty()) labels = Lattice::default_labels(embedding.cols(), "w");
  return Lattice(std::move(g), std::move(labels));
}

// ---------------------------------------------------------------------------
// Definiteness

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Exact signature by congruence diagonalization over Q.
inline Signature signature(const IntMatrix& gram) {
  if (!gram.is_symmetric()) throw Error("signature needs a symmetric matrix");
  RatMatrix a = to_rational(gram);
  const std::size_t n = a.rows();
  Signature sig;
  // Congruence operations act on rows and columns simultaneously.
  auto add_multiple = [&](std::size_t target, std::size_t source, const Rational& f) {
    for (std::size_t c = 0; c < n; ++c) a(target, c) += f * a(source, c);
    for (std::size_t r = 0; r < n; ++r) a(r, target) += f * a(r, source);
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // All remaining diagonal entries vanish; look for an off-diagonal one.
      std::size_t i = n, j = n;
      for (std::size_t r = k; r < n && i == n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
          if (a(r, c) != 0) {
            i = r;
            j = c;
            break;
          }
      if (i == n) {
        sig.zero += n - k;
        return sig;
      }
      add_multiple(i, j, Rational(1));  // new diagonal 2*a(i,j)
      p = i;
    }
    a.swap_rows(k, p);
    a.swap_cols(k, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      add_multiple(i, k, -a(i, k) / a(k, k));
    }
    (a(k, k) > 0 ? sig.positive : sig.negative) += 1;
  }
  return sig;
}

struct Definiteness {
  enum class Kind { NegDefinite, NegSemidefinite, Indefinite, Other };
  Kind kind = Kind::Other;
  Signature sig;
  /// Integral primitive kernel basis, filled for NegSemidefinite.
  std::vector<IntVector> kernel;
};

inline std::string to_string(Definiteness::Kind k) {
  switch (k) {
    case Definiteness::Kind::NegDefinite: return "NEG_DEFINITE";
    case Definiteness::Kind::NegSemidefinite: return "NEG_SEMIDEFINITE";
    case Definiteness::Kind::Indefinite: return "INDEFINITE";
    case Definiteness::Kind::Other: return "OTHER";
  }
  return "OTHER";
}

/// Makes the first nonzero entry positive.
inline IntVector normalize_sign(IntVector v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

inline Definiteness definiteness(const Lattice& l) {
  Definiteness out;
  out.sig = signature(l.gram());
  const auto& s = out.sig;
  const std::size_t n = l.rank();
  if (n > 0 && s.negative == n) {
    out.kind = Definiteness::Kind::NegDefinite;
  } else if (n > 0 && s.positive == 0 && s.zero > 0 && s.negative > 0) {
    out.kind = Definiteness::Kind::NegSemidefinite;
    IntMatrix k = integer_kernel(l.gram());
    for (std::size_t c = 0; c < k.cols(); ++c) out.kernel.push_back(normalize_sign(k.column(c)));
  } else if (s.positive > 0 && s.negative > 0) {
    out.kind = Definiteness::Kind::Indefinite;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Discriminant forms

/// L*/L with its finite quadratic and bilinear forms. Elements are written
/// as coordinate tuples with respect to `generators`, one per invariant
/// factor of `group`.
struct DiscriminantForm {
  FiniteAbelianGroup group;
  std::vector<RatVector> generators;  // dual vectors in L (x) Q coordinates
  RatVector q_values;                 // q(g_i), in [0,2) if even else [0,1)
  RatMatrix b_values;                 // b(g_i, g_j) in [0,1)
  bool even = true;
  IntMatrix gram;                     // of the underlying lattice

  Integer q_modulus() const { return even ? Integer(2) : Integer(1); }

  RatVector lift(const std::vector<std::int64_t>& coords) const {
    RatVector v(gram.rows(), Rational(0));
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += Rational(Integer(static_cast<long>(coords[i]))) * generators[i][k];
    return v;
  }

  Rational raw_product(const RatVector& x, const RatVector& y) const {
    Rational s(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * Rational(gram(i, j)) * y[j];
    }
    return s;
  }

  Rational q(const std::vector<std::int64_t>& x) const {
    RatVector v = lift(x);
    return reduce_mod(raw_product(v, v), q_modulus());
  }
  Rational b(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const {
    return reduce_mod(raw_product(lift(x), lift(y)), Integer(1));
  }
};

inline DiscriminantForm discriminant_group(const Lattice& l) {
  if (l.det() == 0) throw Error("discriminant group of a degenerate lattice");
  SmithForm snf = smith_normal_form(l.gram());
  DiscriminantForm form;
  form.gram = l.gram();
  form.even = l.is_even();
  std::vector<Integer> orders;
  const std::size_t n = l.rank();
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = snf.d(i, i);
    if (d == 1) continue;
    orders.push_back(d);
    // G * (V e_i / d) = U^{-1} e_i is integral, so V e_i / d lies in L*.
    RatVector g(n);
    for (std::size_t k = 0; k < n; ++k) g[k] = make_rational(snf.v(k, i), d);
    form.generators.push_back(std::move(g));
  }
  form.group = FiniteAbelianGroup::from_cyclic_orders(orders);
  const std::size_t k = form.generators.size();
  form.b_values = RatMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    form.q_values.push_back(
        reduce_mod(form.raw_product(form.generators[i], form.generators[i]), form.q_modulus()));
    for (std::size_t j = 0; j < k; ++j)
      form.b_values(i, j) = reduce_mod(form.raw_product(form.generators[i], form.generators[j]), Integer(1));
  }
  return form;
}

/// A subgroup of L*/L, listed by its elements (coordinate tuples, sorted).
struct Subgroup {
  std::vector<std::vector<std::int64_t>> elements;
  std::size_t order() const { return elements.size(); }
  bool is_trivial() const { return elements.size() == 1; }
};

inline constexpr std::int64_t kMaxDiscriminantOrder = 10000;

namespace detail {

/// Mixed-radix indexing of the elements of Z/d_1 + ... + Z/d_k.
class GroupIndex {
 public:
  explicit GroupIndex(const FiniteAbelianGroup& g) {
    for (const auto& d : g.invariant_factors()) orders_.push_back(d.get_si());
    size_ = 1;
    for (auto d : orders_) size_ *= d;
  }
  std::int64_t size() const { return size_; }
  std::vector<std::int64_t> coords(std::int64_t idx) const {
    std::vector<std::int64_t> c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      c[i] = idx % orders_[i];
      idx /= orders_[i];
    }
    return c;
  }
  std::int64_t index(const std::vector<std::int64_t>& c) const {
    std::int64_t idx = 0, mult = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      std::int64_t x = ((c[i] % orders_[i]) + orders_[i]) % orders_[i];
      idx += x * mult;
      mult *= orders_[i];
    }
    return idx;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    auto ca = coords(a), cb = coords(b);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    return index(ca);
  }

 private:
  std::vector<std::int64_t> orders_;
  std::int64_t size_ = 1;
};

}  // namespace detail

/// Quadratic: q|_T = 0 (in Q/2Z for even L), so L' is even when L is.
/// Bilinear: only b|_T = 0, i.e. every integral overlattice, odd ones included.
enum class Isotropy { Quadratic, Bilinear };

/// All isotropic subgroups T, trivial subgroup first.
/// Groups larger than kMaxDiscriminantOrder are rejected.
inline std::vector<Subgroup> isotropic_subgroups(const DiscriminantForm& f, Isotropy mode = Isotropy::Quadratic) {
  if (f.group.order() > kMaxDiscriminantOrder)
    throw Error("discriminant group order " + f.group.order().get_str() + " exceeds enumeration cap");
  detail::GroupIndex gi(f.group);
  const std::int64_t n = gi.size();

  std::vector<std::int64_t> isotropic;
  for (std::int64_t x = 1; x < n; ++x)
    if ((mode == Isotropy::Quadratic ? f.q(gi.coords(x)) : f.b(gi.coords(x), gi.coords(x))) == 0)
      isotropic.push_back(x);

  auto orthogonal = [&](std::int64_t x, std::int64_t y) { return f.b(gi.coords(x), gi.coords(y)) == 0; };

  using Key = std::vector<std::int64_t>;  // sorted element indices
  std::set<Key> seen;
  std::vector<Key> queue{{0}};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Key current = queue[head];
    std::set<std::int64_t> members(current.begin(), current.end());
    for (std::int64_t x : isotropic) {
      if (members.count(x)) continue;
      bool ok = true;
      for (std::int64_t h : current)
        if (!orthogonal(x, h)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      // closure of current + <x>
      std::set<std::int64_t> closure;
      std::int64_t multiple = 0;
      do {
        for (std::int64_t h : current) closure.insert(gi.add(h, multiple));
        multiple = gi.add(multiple, x);
      } while (multiple != 0);
      Key next(closure.begin(), closure.end());
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  std::sort(queue.begin(), queue.end(),
            [](const Key& a, const Key& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  std::vector<Subgroup> out;
  for (const auto& key : queue) {
    Subgroup s;
    for (auto idx : key) s.elements.push_back(gi.coords(idx));
    out.push_back(std::move(s));
  }
  return out;
}

struct Overlattice {
  Lattice lattice;
  RatMatrix basis;  // columns, in coordinates of the original lattice
  Integer index;    // [L' : L]
};

/// L + (lifts of T) for a subgroup T of L*/L.
inline Overlattice overlattice_for(const Lattice& l, const DiscriminantForm& f, const Subgroup& t) {
  const std::size_t n = l.rank();
  std::vector<RatVector> cols;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e(n, Rational(0));
    e[i] = 1;
    cols.push_back(std::move(e));
  }
  for (const auto& el : t.elements) cols.push_back(f.lift(el));
  Integer denom(1);
  for (const auto& c : cols)
    for (const auto& x : c) denom = lcm(denom, x.get_den());
  IntMatrix scaled(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) = Rational(cols[j][i] * denom).get_num();
  IntMatrix span = column_span_basis(scaled);
  RatMatrix basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = make_rational(span(i, j), denom);
  RatMatrix g = basis.transpose() * to_rational(l.gram()) * basis;
  auto gi = to_integer(g);
  if (!gi) throw Error("overlattice is not integral; subgroup is not isotropic");
  Overlattice out{Lattice(*gi), basis, Integer(static_cast<long>(t.order()))};
  return out;
}

/// One overlattice per nontrivial isotropic subgroup, in the same order as
/// isotropic_subgroups (minus the trivial one).
inline std::vector<Overlattice> overlattices(const Lattice& l, Isotropy mode = Isotropy::Quadratic) {
  DiscriminantForm f = discriminant_group(l);
  std::vector<Overlattice> out;
  for (const auto& t : isotropic_subgroups(f, mode)) {
    if (t.is_trivial()) continue;
    out.push_back(overlattice_for(l, f, t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Complements and indices

struct Complement {
  Lattice lattice;
  IntMatrix embedding;  // columns are basis vectors in ambient coordinates
};

/// Saturated basis of {x in L : (x.v) = 0 for all v in vs}.
inline Complement orthogonal_complement(const Lattice& l, const std::vector<IntVector>& vs) {
  const std::size_t n = l.rank();
  if (vs.empty()) return {l, IntMatrix::identity(n)};
  IntMatrix rows = IntMatrix::from_rows(vs);
  if (rows.cols() != n) throw Error("vector dimension does not match lattice rank");
  IntMatrix k = integer_kernel(rows * l.gram());
  for (std::size_t c = 0; c < k.cols(); ++c) {
    IntVector col = normalize_sign(k.column(c));
    for (std::size_t r = 0; r < n; ++r) k(r, c) = col[r];
  }
  return {induced_lattice(l, k), k};
}

/// [big : small] for a full-rank sublattice given by an embedding matrix
/// (columns = small basis in big coordinates), via sqrt(|det small| / |det big|).
inline Integer sublattice_index(const Lattice& big, const IntMatrix& small_embedding) {
  if (small_embedding.rows() != big.rank() || small_embedding.cols() != big.rank())
    throw Error("sublattice embedding must be square of the ambient rank");
  if (rank(small_embedding) != big.rank()) throw Error("sublattice embedding is not of full rank");
  Integer det_big = abs(big.det());
  if (det_big == 0) throw Error("ambient lattice is degenerate");
  Integer det_small = abs(induced_lattice(big, small_embedding).det());
  if (mpz_divisible_p(det_small.get_mpz_t(), det_big.get_mpz_t()) == 0)
    throw Error("discriminant ratio is not an integer");
  auto root = exact_sqrt(Integer(det_small / det_big));
  if (!root) throw Error("discriminant ratio is not a perfect square");
  if (*root != abs(det_exact(small_embedding))) throw Error("index mismatch between discriminants and embedding");
  return *root;
}

// ---------------------------------------------------------------------------
// Root lattices and named graphs

enum class RootFamily { A, D, E, H, AffineA, AffineD, AffineE };

namespace detail {

inline DualGraph chain_graph(const std::vector<std::string>& labels) {
  DualGraph g;
  for (const auto& l : labels) g.vertices.push_back({l, Integer(-2)});
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) g.edges.push_back({labels[i], labels[i + 1], Integer(1)});
  return g;
}

inline std::vector<std::string> numbered(const std::string& prefix, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace detail

/// Dynkin (or extended Dynkin) diagram with all self-intersections -2.
inline DualGraph root_graph(RootFamily family, int n) {
  using detail::chain_graph;
  using detail::numbered;
  switch (family) {
    case RootFamily::A:
      if (n < 1) throw Error("A_n needs n >= 1");
      return chain_graph(numbered("a", 1, n));
    case RootFamily::D: {
      if (n < 4) throw Error("D_n needs n >= 4");
      DualGraph g = chain_graph(numbered("d", 1, n - 1));
      g.vertices.push_back({"d" + std::to_string(n), Integer(-2)});
      g.edges.push_back({"d" + std::to_string(n - 2), "d" + std::to_string(n), Integer(1)});
      return g;
    }
    case RootFamily::E: {
      if (n < 6 || n > 8) throw Error("E_n needs 6 <= n <= 8");
      // Bourbaki numbering: chain e1-e3-e4-...-en, e2 attached to e4.
      std::vector<std::string> chain{"e1"};
      for (int i = 3; i <= n; ++i) chain.push_back("e" + std::to_string(i));
      DualGraph g = chain_graph(chain);
      g.vertices.insert(g.vertices.begin() + 1, {"e2", Integer(-2)});
      g.edges.push_back({"e2", "e4", Integer(1)});
      return g;
    }
    case RootFamily::H:
      throw Error("H is not a Dynkin diagram");
    case RootFamily::AffineA: {
      if (n < 1) throw Error("affine A_n needs n >= 1");
      DualGraph g = chain_graph(numbered("a", 0, n));
      if (n == 1)
        g.edges.front().multiplicity = 2;
      else
        g.edges.push_back({"a" + std::to_string(n), "a0", Integer(1)});
      return g;
    }
    case RootFamily::AffineD: {
      if (n < 4) throw Error("affine D_n needs n >= 4");
      DualGraph g = root_graph(RootFamily::D, n);
      g.vertices.insert(g.vertices.begin(), {"d0", Integer(-2)});
      g.edges.push_back({"d0", "d2", Integer(1)});
      return g;
    }
    case RootFamily::AffineE: {
      DualGraph g = root_graph(RootFamily::E, n);
      g.vertices.insert(g.vertices.begin(), {"e0", Integer(-2)});
      const char* attach = n == 6 ? "e2" : n == 7 ? "e1" : "e8";
      g.edges.push_back({"e0", attach, Integer(1)});
      return g;
    }
  }
  throw Error("unknown root family");
}

inline Lattice root_lattice(RootFamily family, int n = 0) {
  if (family == RootFamily::H) return Lattice(IntMatrix{{0, 1}, {1, 0}}, {"u", "v"});
  return gram_from_dual_graph(root_graph(family, n));
}

/// Orthogonal direct sum; labels are kept and must stay unique.
inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t n = a.rank() + b.rank();
  IntMatrix g(n, n, Integer(0));
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::set<std::string> uniq(labels.begin(), labels.end());
  if (uniq.size() != labels.size()) labels = Lattice::default_labels(n);
  return Lattice(std::move(g), std::move(labels));
}

/// The T_{2,3,7} configuration of ten (-2)-curves, in the vertex order
/// C1, C3, C4, C2, C5, C6, C7, C8, C0, C9.
inline DualGraph t237_graph() {
  DualGraph g;
  for (const char* l : {"C1", "C3", "C4", "C2", "C5", "C6", "C7", "C8", "C0", "C9"})
    g.vertices.push_back({l, Integer(-2)});
  const std::vector<std::pair<const char*, const char*>> edges{
      {"C1", "C3"}, {"C3", "C4"}, {"C4", "C5"}, {"C5", "C6"}, {"C6", "C7"},
      {"C7", "C8"}, {"C8", "C0"}, {"C0", "C9"}, {"C4", "C2"}};
  for (auto [a, b] : edges) g.edges.push_back({a, b, Integer(1)});
  return g;
}

/// Parses "A3", "D5", "E8", "H", "E8~", "D4~", "A1~".
inline std::pair<RootFamily, int> parse_root_kind(const std::string& name) {
  if (name == "H") return {RootFamily::H, 2};
  if (name.size() < 2) throw Error("unknown root lattice '" + name + "'");
  bool affine = name.back() == '~';
  std::string digits = name.substr(1, name.size() - 1 - (affine ? 1 : 0));
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error("unknown root lattice '" + name + "'");
  int n = std::stoi(digits);
  switch (name.front()) {
    case 'A': return {affine ? RootFamily::AffineA : RootFamily::A, n};
    case 'D': return {affine ? RootFamily::AffineD : RootFamily::D, n};
    case 'E': return {affine ? RootFamily::AffineE : RootFamily::E, n};
    default: throw Error("unknown root lattice '" + name + "'");
  }
}

/// Built-in graphs: "T237", "E10" (same diagram, generic labels) and any
/// root kind accepted by parse_root_kind except "H".
inline DualGraph named_graph(const std::string& name) {
  if (name == "T237") return t237_graph();
  if (name == "E10") {
    DualGraph g = t237_graph();
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      rename[g.vertices[i].label] = "e" + std::to_string(i + 1);
      g.vertices[i].label = rename[g.vertices[i].label];
    }
    for (auto& e : g.edges) {
      e.a = rename[e.a];
      e.b = rename[e.b];
    }
    return g;
  }
  auto [family, n] = parse_root_kind(name);
  return root_graph(family, n);
}

inline Lattice named_lattice(const std::string& name) {
  if (name == "H") return root_lattice(RootFamily::H);
  return gram_from_dual_graph(named_graph(name));
}

}  // namespace fano
