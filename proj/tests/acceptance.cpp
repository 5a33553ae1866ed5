// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Usage: acceptance <path to fano-lattice>

#include <fano/exact.hpp>
#include <fano/fano.hpp>
#include <fano/groupscheme.hpp>
#include <fano/intersection.hpp>
#include <fano/lattice.hpp>
#include <fano/scenario.hpp>
#include <fano/semilinear.hpp>
#include <fano/witt.hpp>

#include "fixture_copy.hpp"
#include "oracles.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>

using namespace fano;

namespace {

int failures = 0;

/// `check` returns an empty string on success, else what went wrong.
void criterion(int n, const std::string& what, const std::function<std::string()>& check) {
  std::string problem;
  try {
    problem = check();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  if (problem.empty()) {
    std::cout << "PASS [" << n << "] " << what << "\n";
  } else {
    ++failures;
    std::cout << "FAIL [" << n << "] " << what << " -- " << problem << "\n";
  }
  std::cout.flush();
}

#define REQUIRE(cond)                                    \
  do {                                                   \
    if (!(cond)) return std::string("failed: " #cond);   \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& command) {
  RunResult r;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

FieldMatrix random_invertible(const FiniteField& k, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    FieldMatrix s = oracle::random_field_matrix(k, n, n, rng);
    if (field_rank(k, s) == n) return s;
  }
}

GroupSchemeData random_group(long p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(0, 2), exp(1, 3), cyc(1, 24);
  auto ppow = [&](int e) {
    Integer x = 1;
    for (int i = 0; i < e; ++i) x *= p;
    return x;
  };
  GroupSchemeData g;
  g.p = p;
  g.abelian_dim = small(rng);
  g.smooth_unipotent_dim = small(rng);
  g.mult_rank = small(rng);
  for (int i = small(rng); i > 0; --i) g.local_mult.push_back(ppow(exp(rng)));
  for (int i = small(rng); i > 0; --i) g.local_unipotent.push_back(ppow(exp(rng)));
  std::vector<Integer> orders;
  for (int i = small(rng); i > 0; --i) orders.push_back(cyc(rng));
  g.component_group = FiniteAbelianGroup::from_cyclic_orders(orders);
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <fano-lattice binary>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const auto start = std::chrono::steady_clock::now();
  const T237Inputs in = T237Inputs::load();
  const Lattice num_s = gram_from_dual_graph(in.graph);
  const SurfaceModel s(num_s, IntVector(num_s.rank(), Integer(0)), Integer(1));
  std::vector<std::string> contracted = in.e8;
  contracted.insert(contracted.end(), in.a1.begin(), in.a1.end());
  std::vector<IntVector> cfg;
  for (const auto& l : contracted) cfg.push_back(num_s.unit(l));

  criterion(1, "T237 lattice: rank 10, |det| 1, signature (1,9); E8 negative-definite; II* fibre with C0-coefficient 1", [&] {
    REQUIRE(num_s.rank() == 10);
    REQUIRE(abs(num_s.det()) == 1);
    REQUIRE(abs(oracle::det_cofactor(num_s.gram())) == 1);
    Signature sig = signature(num_s.gram());
    REQUIRE(sig.positive == 1 && sig.negative == 9 && sig.zero == 0);
    REQUIRE(definiteness(num_s.restrict_to(in.e8)).kind == Definiteness::Kind::NegDefinite);
    Lattice fibre = num_s.restrict_to(in.e8_affine);
    Definiteness d = definiteness(fibre);
    REQUIRE(d.kind == Definiteness::Kind::NegSemidefinite);
    REQUIRE(d.kernel.size() == 1);
    REQUIRE(d.kernel[0][fibre.index_of(in.remaining)] == 1);
    REQUIRE(fibre.gram() * d.kernel[0] == IntVector(9, Integer(0)));
    return std::string();
  });

  criterion(2, "contracting C1..C8, C9: Num(Z) rank 1 with generator square 2; quoted f*(D) orthogonal with square 2", [&] {
    Contraction c = contract(s, cfg);
    REQUIRE(c.surface.num.rank() == 1);
    REQUIRE(c.surface.num.gram()(0, 0) == 2);
    Divisor q = io::divisor_from_json(io::json{{"terms", in.quoted_pullback}}, num_s);
    for (const auto& e : cfg) REQUIRE(num_s.product(q.coeffs, to_rational(e)) == 0);
    REQUIRE(num_s.product(q.coeffs, q.coeffs) == 2);
    return std::string();
  });

  criterion(3, "Mumford pullback: D0^2 = 1/2; lambda = (1,2,3,2,2)/4; reverse gives Theta*^2 = -3/2, flagged non-integral", [&] {
    Contraction c = contract(s, cfg);
    RatVector d0 = c.rational_pullback(s, Divisor::of(num_s.unit(in.remaining)));
    REQUIRE(num_s.product(d0, d0) == Rational(1, 2));
    PullbackResult fwd = mumford_pullback(in.theta);
    RatVector expected{Rational(1, 4), make_rational(2, 4), Rational(3, 4), make_rational(2, 4), make_rational(2, 4)};
    REQUIRE(fwd.lambda == expected);
    PullbackResult rev = mumford_strict_self(in.theta.exceptional, in.theta.strict_meets, Rational(1, 4));
    REQUIRE(rev.strict_self == Rational(-3, 2));
    REQUIRE(!rev.strict_self_integral);
    return std::string();
  });

  criterion(4, "discriminants: D5 -> Z/4 with no nontrivial isotropic subgroup; E8 trivial; index 4 from discriminants 1 and 16", [&] {
    DiscriminantForm d5 = discriminant_group(named_lattice("D5"));
    REQUIRE(d5.group.to_string() == "Z/4");
    REQUIRE(isotropic_subgroups(d5).size() == 1);
    REQUIRE(discriminant_group(named_lattice("E8")).group.is_trivial());
    const SurfaceModel& x = in.weak_dp4;
    std::vector<IntVector> cols{x.canonical};
    cols.insert(cols.end(), in.d5_curves.begin(), in.d5_curves.end());
    IntMatrix emb = IntMatrix::from_columns(cols, x.num.rank());
    REQUIRE(abs(x.num.det()) == 1);
    REQUIRE(abs(induced_lattice(x.num, emb).det()) == 16);
    REQUIRE(sublattice_index(x.num, emb) == 4);
    return std::string();
  });

  criterion(5, "Riemann-Roch: chi(A) = 5/2 flagged non-integral; conductrix on Z has deg(omega_D) = 2 and chi(O_D) = -1", [&] {
    ChiPolynomial p = chi_polynomial(in.dp4, in.a);
    REQUIRE(in.dp4.num.product(in.a.coeffs, in.a.coeffs) == 1);
    REQUIRE(in.dp4.num.product(in.a.coeffs, in.dp4.k()) == -2);
    REQUIRE(in.dp4.chi == 1);
    REQUIRE(p(Rational(1)) == Rational(5, 2));
    REQUIRE(!is_integral(p(Rational(1))) && !p.integer_valued());
    Contraction c = contract(s, cfg);
    Divisor cond = io::divisor_from_json(io::json{{"terms", in.conductrix}}, num_s);
    Divisor d{c.pushforward(s, cond)};
    Rational omega = adjunction_degree(c.surface, d);
    REQUIRE(omega == 2);
    REQUIRE(curve_chi(omega) == -1);
    return std::string();
  });

  criterion(6, "cone (2,4,-,1) m=1 -> (3,32,index 2); denormalization chi 1; pushout cube 4; P^2 cone degree 64", [&] {
    ConeResult r = cone_invariants(FanoData{2, Rational(4), 1, Integer(1)}, 1);
    REQUIRE(r.cone.dim == 3 && r.cone.degree == 32 && r.cone.index == 2);
    REQUIRE(denormalization_chi(1, 1, 1) == 1);
    REQUIRE(pushout_anticanonical_cube(4) == 4);
    REQUIRE(cone_invariants(FanoData{2, Rational(9), 3, Integer(1)}, 3).cone.degree == 64);
    return std::string();
  });

  criterion(7, "Upsilon: mu_2 -> 0, Z/2 -> Z/2, alpha_2 -> alpha_2; products on 100 random pairs; Z/12 at 2 -> Z/4", [&] {
    REQUIRE(upsilon(enriques_pic_tau(EnriquesKind::Ordinary)).describe() == "0");
    REQUIRE(upsilon(enriques_pic_tau(EnriquesKind::Classical)).describe() == "Z/2");
    REQUIRE(upsilon(enriques_pic_tau(EnriquesKind::Supersingular)).describe() == "alpha_2");
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
      const long p = std::vector<long>{2, 3, 5}[i % 3];
      GroupSchemeData g = random_group(p, rng), h = random_group(p, rng);
      REQUIRE(upsilon(product(g, h)) == product(upsilon(g), upsilon(h)));
    }
    REQUIRE(component_quotient(FiniteAbelianGroup::cyclic(12), 2) == FiniteAbelianGroup::cyclic(4));
    return std::string();
  });

  criterion(8, "semilinear: rank invariant under 200 conjugations per field; max rank = bijectivity (q <= 16, dim <= 3); rank-in-sequence on 100 instances", [&] {
    std::mt19937_64 rng(2025);
    for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
      auto k = FiniteField::make(p, e);
      for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + rng() % 4;
        PLinearMap f(k, oracle::random_field_matrix(*k, n, n, rng));
        PLinearMap b = semilinear_conjugate(f, random_invertible(*k, n, rng));
        REQUIRE(hw_rank(b) == hw_rank(f));
        REQUIRE(hw_det_class(b) == hw_det_class(f));
      }
    }
    for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
      auto k = FiniteField::make(p, e);
      for (std::size_t n = 1; n <= 3; ++n)
        for (int t = 0; t < (n == 3 && k->order() > 9 ? 2 : 8); ++t) {
          FieldMatrix a = oracle::random_field_matrix(*k, n, n, rng);
          if (t % 2) a(0, 0) = 0, a(n - 1, 0) = 0;  // bias towards singular
          REQUIRE(has_max_rank(PLinearMap(k, a)) == oracle::plinear_bijective(*k, a));
        }
    }
    for (int t = 0; t < 100; ++t) {
      auto k = FiniteField::make(t % 2 ? 2 : 3, 1 + t % 3 / 2);
      const std::size_t n = 2 + rng() % 3, r = rng() % (n + 1);
      FieldMatrix b = oracle::random_field_matrix(*k, n, n, rng);
      for (std::size_t i = r; i < n; ++i)
        for (std::size_t j = 0; j < r; ++j) b(i, j) = 0;
      FieldMatrix pm = random_invertible(*k, n, rng);
      PLinearMap f = semilinear_conjugate(PLinearMap(k, b), pm);
      FieldMatrix basis(n, r, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < r; ++j) basis(i, j) = pm(i, j);
      RankSequenceReport rep = rank_sequence_check(f, basis);
      REQUIRE(rep.lemma_holds());
    }
    return std::string();
  });

  criterion(9, "Witt: W_m(F_p) = Z/p^m (p in {2,3}, m <= 3) by Cayley tables; FV = VF on W_2(F_4); projections are homomorphisms", [&] {
    for (int p : {2, 3})
      for (std::size_t m = 1; m <= 3; ++m) {
        WittRing w(FiniteField::make(p, 1), m);
        long pm = 1;
        for (std::size_t i = 0; i < m; ++i) pm *= p;
        std::vector<WittVector> image;
        std::map<WittVector, long> table;
        for (long x = 0; x < pm; ++x) table[image.emplace_back(w.from_integer(x))] = x;
        REQUIRE(table.size() == static_cast<std::size_t>(pm));
        for (long a = 0; a < pm; ++a)
          for (long b = 0; b < pm; ++b) {
            REQUIRE(table.at(w.add(image[a], image[b])) == (a + b) % pm);
            REQUIRE(table.at(w.mul(image[a], image[b])) == (a * b) % pm);
          }
      }
    WittRing w24(FiniteField::make(2, 2), 2);
    for (const auto& a : w24.elements()) REQUIRE(w24.frobenius(w24.verschiebung(a)) == w24.verschiebung(w24.frobenius(a)));
    for (auto [p, e, m] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {2, 2, 2}, {3, 1, 3}}) {
      WittRing w(FiniteField::make(p, e), m);
      WittRing small = w.projected(1);
      for (const auto& a : w.elements())
        for (const auto& b : w.elements()) {
          REQUIRE(w.project(w.add(a, b), 1) == small.add(w.project(a, 1), w.project(b, 1)));
          REQUIRE(w.project(w.mul(a, b), 1) == small.mul(w.project(a, 1), w.project(b, 1)));
        }
    }
    return std::string();
  });

  criterion(10, "end-to-end: `scenario t237` exits 0 with every COMPUTED line PASS; perturbed fixtures exit 1", [&] {
    RunResult ok = run(quote(cli) + " scenario t237");
    if (ok.exit_code != 0) return "scenario exit code " + std::to_string(ok.exit_code) + "\n" + ok.output;
    REQUIRE(ok.output.find("FAIL") == std::string::npos);
    REQUIRE(ok.output.find("COMPUTED") != std::string::npos);
    REQUIRE(ok.output.find(" 0 failed") != std::string::npos);
    testing_support::FixtureCopy copy;
    copy.set_self("C0", -3);
    RunResult bad = run("FANO_LATTICE_FIXTURES=" + quote(copy.path()) + " " + quote(cli) + " scenario t237");
    if (bad.exit_code != 1) return "negative control exit code " + std::to_string(bad.exit_code);
    REQUIRE(bad.output.find("FAIL") != std::string::npos);
    return std::string();
  });

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << "(" << 10 - failures << "/10) in " << secs << " s\n";
  return failures ? 1 : 0;
}
