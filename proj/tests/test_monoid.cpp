#include <zform/monoid.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace zform;

TEST(Monoid, MulExamples)
{
  auto poly = MonoidBasis::poly();
  EXPECT_EQ(poly.mul(poly.power(2), poly.power(3)), poly.power(5));
  auto tr = MonoidBasis::truncated(4);
  EXPECT_FALSE(tr.mul(tr.power(2), tr.power(3)).has_value());
  EXPECT_EQ(tr.mul(tr.power(1), tr.power(2)), tr.power(3));
  auto lau = MonoidBasis::laurent();
  EXPECT_EQ(lau.mul(lau.power(-1), lau.power(1)), lau.identity());
}

TEST(Monoid, PiProduct)
{
  auto poly = MonoidBasis::poly();
  EXPECT_EQ(pi_product(Multiset<Mono>{}, poly), poly.identity());
  EXPECT_EQ(pi_product(Multiset<Mono>{{poly.power(1), 2}, {poly.power(2), 1}}, poly), poly.power(4));
  auto tr = MonoidBasis::truncated(4);
  EXPECT_FALSE(pi_product(Multiset<Mono>{{tr.power(3), 2}}, tr).has_value());
}

TEST(Monoid, AElemMul)
{
  auto poly = MonoidBasis::poly();
  auto one = AElem::basis(poly.identity());
  auto t = AElem::basis(poly.power(1));
  EXPECT_EQ(aelem_mul(one + t, one - t, poly), one - AElem::basis(poly.power(2)));
  EXPECT_TRUE(aelem_mul(t, AElem{}, poly).is_zero());
  auto tr = MonoidBasis::truncated(4);
  auto x = AElem::basis(tr.power(1)) + AElem::basis(tr.power(2));
  // (t + t^2)^2 = t^2 + 2t^3 (+ t^4 = 0)
  EXPECT_EQ(aelem_mul(x, x, tr), AElem::basis(tr.power(2)) + AElem::basis(tr.power(3), 2));
  auto tr3 = MonoidBasis::truncated(3);
  auto y = AElem::basis(tr3.power(1)) + AElem::basis(tr3.power(2));
  EXPECT_EQ(aelem_mul(y, y, tr3), AElem::basis(tr3.power(2)));
}

TEST(Monoid, RingAxiomsRandomized)
{
  std::mt19937_64 rng(7);
  for (auto m : {MonoidBasis::poly(), MonoidBasis::laurent(), MonoidBasis::poly2(), MonoidBasis::truncated(4)}) {
    auto rand_elem = [&] {
      AElem x;
      for (int k = 0; k < 3; ++k) {
        Mono mono;
        mono.exp[0] = static_cast<int>(rng() % 4) - (m.kind() == MonoidKind::Laurent ? 2 : 0);
        if (m.num_vars() == 2) mono.exp[1] = static_cast<int>(rng() % 3);
        x.add(mono, frac(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1));
      }
      return x;
    };
    for (int trial = 0; trial < 50; ++trial) {
      auto a = rand_elem(), b = rand_elem(), c = rand_elem();
      EXPECT_EQ(aelem_mul(a, b, m), aelem_mul(b, a, m));
      EXPECT_EQ(aelem_mul(aelem_mul(a, b, m), c, m), aelem_mul(a, aelem_mul(b, c, m), m));
      EXPECT_EQ(aelem_mul(a, b + c, m), aelem_mul(a, b, m) + aelem_mul(a, c, m));
    }
  }
}

TEST(Monoid, ClosureAndOrder)
{
  auto tr = MonoidBasis::truncated(5);
  for (const auto& a : tr.elements())
    for (const auto& b : tr.elements()) {
      auto ab = tr.mul(a, b);
      if (ab) EXPECT_TRUE(tr.contains(*ab));
      else EXPECT_GE(a.degree() + b.degree(), 5);
    }
  auto p2 = MonoidBasis::poly2();
  auto els = p2.elements_up_to(3);
  EXPECT_EQ(els.size(), 10u);
  for (std::size_t i = 1; i < els.size(); ++i) EXPECT_LT(els[i - 1], els[i]);
  EXPECT_THROW(MonoidBasis::poly().elements(), std::logic_error);
}

TEST(Monoid, ParseFormat)
{
  auto lau = MonoidBasis::laurent();
  EXPECT_EQ(lau.parse("t^-2"), lau.power(-2));
  EXPECT_EQ(lau.format(lau.power(-2)), "t^-2");
  auto p2 = MonoidBasis::poly2();
  auto m = p2.parse("u^2*v");
  EXPECT_EQ(m.exp[0], 2);
  EXPECT_EQ(m.exp[1], 1);
  EXPECT_EQ(p2.format(m), "u^2*v");
  EXPECT_EQ(p2.parse(p2.format(m)), m);
  EXPECT_EQ(MonoidBasis::poly().parse("1"), Mono{});
  EXPECT_THROW(MonoidBasis::poly().parse("t^-1"), std::invalid_argument);
  EXPECT_THROW(MonoidBasis::truncated(3).parse("t^3"), std::invalid_argument);
  EXPECT_THROW(MonoidBasis::poly().parse("s"), std::invalid_argument);
  EXPECT_EQ(MonoidBasis::from_name("trunc:4"), MonoidBasis::truncated(4));
  EXPECT_THROW(MonoidBasis::from_name("trunc:x"), std::invalid_argument);
  EXPECT_THROW(MonoidBasis::from_name("weird"), std::invalid_argument);
}
