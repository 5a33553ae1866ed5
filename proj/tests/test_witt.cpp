#include <fano/witt.hpp>

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace fano;

TEST(Witt, OnePlusOneCarriesInCharacteristicTwo) {
  WittRing w(FiniteField::make(2, 1), 2);
  EXPECT_EQ(w.add(w.make({1, 0}), w.make({1, 0})), w.make({0, 1}));
  EXPECT_EQ(w.to_string(w.from_integer(2)), "(0,1)");
  EXPECT_EQ(w.from_integer(4), w.zero());
}

TEST(Witt, RejectsBadLengthsAndComponents) {
  auto f2 = FiniteField::make(2, 1);
  EXPECT_THROW(WittRing(f2, 0), Error);
  EXPECT_THROW(WittRing(f2, 7), Error);
  WittRing w(f2, 2);
  EXPECT_THROW(w.make({2, 0}), Error);
  EXPECT_THROW(w.make({1}), Error);
  EXPECT_THROW(w.add(w.one(), WittRing(f2, 3).one()), Error);
}

// W_m(F_p) is Z/p^m: n -> n*1 is a bijection from Z/p^m that respects + and *.
TEST(Witt, PrimeFieldWittRingIsIntegersModPowerOfP) {
  for (int p : {2, 3}) {
    for (std::size_t m = 1; m <= 3; ++m) {
      WittRing w(FiniteField::make(p, 1), m);
      long pm = 1;
      for (std::size_t i = 0; i < m; ++i) pm *= p;
      std::map<WittVector, long> table;
      std::vector<WittVector> image;
      for (long n = 0; n < pm; ++n) {
        image.push_back(w.from_integer(n));
        table[image.back()] = n;
      }
      ASSERT_EQ(table.size(), static_cast<std::size_t>(pm)) << "p=" << p << " m=" << m;
      ASSERT_EQ(w.from_integer(pm), w.zero());
      for (long a = 0; a < pm; ++a)
        for (long b = 0; b < pm; ++b) {
          ASSERT_EQ(table.at(w.add(image[a], image[b])), (a + b) % pm);
          ASSERT_EQ(table.at(w.mul(image[a], image[b])), (a * b) % pm);
        }
      for (long a = 0; a < pm; ++a) ASSERT_EQ(table.at(w.neg(image[a])), (pm - a) % pm);
    }
  }
}

TEST(Witt, RingAxiomsOnW2OfF4) {
  WittRing w(FiniteField::make(2, 2), 2);
  auto all = w.elements();
  ASSERT_EQ(all.size(), 16u);
  for (const auto& a : all) {
    ASSERT_EQ(w.add(a, w.neg(a)), w.zero());
    ASSERT_EQ(w.mul(a, w.one()), a);
    for (const auto& b : all) {
      ASSERT_EQ(w.add(a, b), w.add(b, a));
      ASSERT_EQ(w.mul(a, b), w.mul(b, a));
      for (const auto& c : all) {
        ASSERT_EQ(w.add(w.add(a, b), c), w.add(a, w.add(b, c)));
        ASSERT_EQ(w.mul(a, w.add(b, c)), w.add(w.mul(a, b), w.mul(a, c)));
      }
    }
  }
  // W_2(F_4) has characteristic 4
  EXPECT_NE(w.from_integer(2), w.zero());
  EXPECT_EQ(w.from_integer(4), w.zero());
}

TEST(Witt, FrobeniusAndVerschiebungCommuteOnW2OfF4) {
  WittRing w(FiniteField::make(2, 2), 2);
  for (const auto& a : w.elements()) {
    ASSERT_EQ(w.frobenius(w.verschiebung(a)), w.verschiebung(w.frobenius(a)));
    // F is a ring endomorphism
    for (const auto& b : w.elements()) {
      ASSERT_EQ(w.frobenius(w.add(a, b)), w.add(w.frobenius(a), w.frobenius(b)));
      ASSERT_EQ(w.frobenius(w.mul(a, b)), w.mul(w.frobenius(a), w.frobenius(b)));
    }
  }
}

TEST(Witt, VerschiebungAfterFrobeniusIsMultiplicationByP) {
  for (auto [p, e, m] : std::vector<std::tuple<int, int, int>>{
           {2, 1, 1}, {2, 1, 4}, {2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 1, 3}, {3, 2, 2}, {5, 1, 2}, {2, 4, 2}, {7, 1, 2}}) {
    WittRing w(FiniteField::make(p, e), m);
    ASSERT_LE(w.elements().size(), 256u);
    const WittVector pw = w.from_integer(p);
    for (const auto& a : w.elements()) ASSERT_EQ(w.verschiebung(w.frobenius(a)), w.mul(pw, a)) << w.to_string(a);
  }
}

TEST(Witt, VerschiebungIsAdditive) {
  WittRing w(FiniteField::make(3, 1), 3);
  for (const auto& a : w.elements())
    for (const auto& b : w.elements())
      ASSERT_EQ(w.verschiebung(w.add(a, b)), w.add(w.verschiebung(a), w.verschiebung(b)));
}

TEST(Witt, ProjectionIsAHomomorphismWithKernelTheVerschiebungImage) {
  for (auto [p, e, m] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {2, 2, 2}, {3, 1, 2}, {3, 1, 3}}) {
    WittRing w(FiniteField::make(p, e), m);
    WittRing small = w.projected(1);
    std::set<WittVector> kernel, v_image;
    for (const auto& a : w.elements()) {
      if (w.project(a, 1) == small.zero()) kernel.insert(a);
      // V^{m-1} image
      WittVector v = a;
      for (int i = 0; i + 1 < m; ++i) v = w.verschiebung(v);
      v_image.insert(v);
      for (const auto& b : w.elements()) {
        ASSERT_EQ(w.project(w.add(a, b), 1), small.add(w.project(a, 1), w.project(b, 1)));
        ASSERT_EQ(w.project(w.mul(a, b), 1), small.mul(w.project(a, 1), w.project(b, 1)));
      }
    }
    EXPECT_EQ(kernel, v_image);
    EXPECT_EQ(kernel.size(), w.field().order());
  }
}

TEST(Witt, LengthOneIsTheField) {
  auto k = FiniteField::make(3, 2);
  WittRing w(k, 1);
  for (const auto& a : w.elements())
    for (const auto& b : w.elements()) {
      ASSERT_EQ(w.add(a, b).components[0], k->add(a.components[0], b.components[0]));
      ASSERT_EQ(w.mul(a, b).components[0], k->mul(a.components[0], b.components[0]));
    }
}

TEST(Witt, TeichmullerRepresentativesAreMultiplicative) {
  // [x] = (x, 0, ..., 0)
  auto k = FiniteField::make(2, 3);
  WittRing w(k, 3);
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    std::uint32_t x = rng() % k->order(), y = rng() % k->order();
    ASSERT_EQ(w.mul(w.make({x, 0, 0}), w.make({y, 0, 0})), w.make({k->mul(x, y), 0, 0}));
  }
}
