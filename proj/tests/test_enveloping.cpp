#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace zform;
using namespace zform::test;

namespace {

// Evaluation representation of g (x) C[t] at t = 2 on C^{2|1} (sl21 matrices).
using Mat = std::array<std::array<Rational, 3>, 3>;

Mat zero_mat() { return Mat{}; }
Mat identity_mat()
{
  Mat m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}
Mat mat_mul(const Mat& a, const Mat& b)
{
  Mat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Mat sl21_letter(const Engine& e, const Letter& l)
{
  static const std::map<std::string, std::vector<std::tuple<int, int, int>>> base{
      {"h[1]", {{0, 0, 1}, {1, 1, -1}}}, {"h[2]", {{1, 1, 1}, {2, 2, 1}}}, {"x[a1]", {{0, 1, 1}}},
      {"x[-a1]", {{1, 0, 1}}},           {"x[a2]", {{1, 2, 1}}},           {"x[-a2]", {{2, 1, 1}}},
      {"x[a1+a2]", {{0, 2, 1}}},         {"x[-a1-a2]", {{2, 0, 1}}}};
  Mat m{};
  Rational scale = 1;
  for (int k = 0; k < l.mono.exp[0]; ++k) scale *= 2;
  for (auto [i, j, c] : base.at(e.spec().symbol_name(l.gen))) m[i][j] = scale * c;
  return m;
}

Mat represent(const Engine& e, const UElem& x)
{
  Mat out = zero_mat();
  for (const auto& [w, c] : x.terms()) {
    Mat p = identity_mat();
    for (const auto& r : w)
      for (int k = 0; k < r.exp; ++k) p = mat_mul(p, sl21_letter(e, r.letter));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out[i][j] += c * p[i][j];
  }
  return out;
}

}  // namespace

TEST(Enveloping, Sl2SingleBracketStep)
{
  Engine e(preset("sl2"), MonoidBasis::poly());
  std::vector<Letter> w{L(e, "a", 1), L(e, "-a", 0)};
  UElem expect;
  expect.add(W({{L(e, "-a", 0), 1}, {L(e, "a", 1), 1}}), 1);
  expect.add(W({{L(e, "h1", 1), 1}}), 1);
  EXPECT_EQ(e.normalize(w), expect);
  EXPECT_EQ(degree(expect), 2);
}

TEST(Enveloping, OddSquares)
{
  Engine sl21(preset("sl21"), MonoidBasis::poly());
  std::vector<Letter> w{L(sl21, "a2"), L(sl21, "a2")};
  EXPECT_TRUE(sl21.normalize(w).is_zero());

  Engine osp(preset("osp12"), MonoidBasis::poly());
  const auto& g = osp.spec();
  const int gam = *g.find_root("g");
  const long c = g.coefficient(g.symbol_of_root(gam), g.symbol_of_root(gam), g.symbol_of_root(*g.find_root("2g")));
  std::vector<Letter> sq{L(osp, "g", 1), L(osp, "g", 1)};
  EXPECT_EQ(osp.normalize(sq), UElem::word(W({{L(osp, "2g", 2), 1}}), frac(c, 2)));
}

TEST(Enveloping, MulBasics)
{
  Engine e(preset("sl3"), MonoidBasis::poly());
  UElem x = U(e, "a1", 1) + U(e, "-a2", 2);
  EXPECT_EQ(e.mul(x, UElem::one()), x);
  EXPECT_EQ(e.mul(UElem::one(), x), x);
  // a1 and -a2 commute (a1 - a2 is not a root)
  EXPECT_EQ(e.mul(U(e, "a1"), U(e, "-a2")), e.mul(U(e, "-a2"), U(e, "a1")));
  EXPECT_EQ(e.mul(U(e, "h1", 1), U(e, "h2", 2)), e.mul(U(e, "h2", 2), U(e, "h1", 1)));
  EXPECT_EQ(e.mul(U(e, "h1", 1), U(e, "h1", 2)), e.mul(U(e, "h1", 2), U(e, "h1", 1)));
  EXPECT_EQ(degree(UElem{}), kDegreeOfZero);
  EXPECT_EQ(degree(U(e, "h1", 3)), 1);
}

TEST(Enveloping, AssociativityRandomized)
{
  std::mt19937_64 rng(11);
  for (auto name : preset_names) {
    Engine e(preset(name), MonoidBasis::truncated(3));
    for (int trial = 0; trial < 40; ++trial) {
      auto rnd_word = [&](int len) {
        UElem x = UElem::one();
        for (int k = 0; k < len; ++k) x = e.mul_letter(x, random_letter(e, rng, 2));
        return x;
      };
      UElem u = rnd_word(2), v = rnd_word(2), w = rnd_word(2);
      EXPECT_EQ(e.mul(e.mul(u, v), w), e.mul(u, e.mul(v, w))) << name;
      auto uv = e.mul(u, v);
      if (!uv.is_zero()) {
        EXPECT_LE(degree(uv), degree(u) + degree(v));
      }
    }
  }
}

TEST(Enveloping, SuperSignCoherence)
{
  for (auto name : {"sl21", "osp12"}) {
    Engine e(preset(name), MonoidBasis::poly());
    const auto& g = e.spec();
    for (int a = 0; a < g.num_roots(); ++a)
      for (int b = 0; b < g.num_roots(); ++b) {
        if (!g.root(a).odd || !g.root(b).odd) continue;
        Letter x = e.root_letter(a, e.monoid().power(1)), y = e.root_letter(b, e.monoid().power(2));
        std::vector<Letter> xy{x, y}, yx{y, x};
        EXPECT_EQ(e.normalize(xy) + e.normalize(yx), e.from_lie(e.bracket(x, y))) << name;
      }
  }
}

TEST(Enveloping, EvaluationRepresentationOracle)
{
  Engine e(preset("sl21"), MonoidBasis::poly());
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> w;
    const int len = 1 + static_cast<int>(rng() % 6);
    Mat direct = identity_mat();
    for (int k = 0; k < len; ++k) {
      w.push_back(random_letter(e, rng, 2));
      direct = mat_mul(direct, sl21_letter(e, w.back()));
    }
    EXPECT_EQ(represent(e, e.normalize(w)), direct);
  }
}

TEST(Enveloping, OrdersAndSupercommutator)
{
  auto g = preset("sl21");
  auto tri = GeneratorOrder::triangular(g);
  std::vector<std::string> names;
  for (int s : tri.sequence()) names.push_back(g.symbol_name(s));
  EXPECT_EQ(names, (std::vector<std::string>{"x[-a1]", "x[-a2]", "x[-a1-a2]", "h[1]", "h[2]", "x[a1]", "x[a2]",
                                             "x[a1+a2]"}));
  auto same = GeneratorOrder::from_labels(g, {"-a1", "-a2", "-a1-a2", "1", "h2", "a1", "a2", "a1+a2"});
  EXPECT_EQ(same, tri);
  EXPECT_THROW(GeneratorOrder::from_labels(g, {"-a1", "b"}), std::invalid_argument);
  EXPECT_THROW(GeneratorOrder::from_labels(g, {"-a1", "-a1", "-a1-a2", "1", "h2", "a1", "a2", "a1+a2"}),
               std::invalid_argument);
  auto mixed = GeneratorOrder::interleaved(g);
  EXPECT_NE(mixed, tri);

  Engine e(g, MonoidBasis::poly(), mixed);
  UElem x = U(e, "a2", 1), y = U(e, "-a2", 0);
  EXPECT_EQ(e.supercommutator(x, y), e.from_lie(e.bracket(L(e, "a2", 1), L(e, "-a2", 0))));
  EXPECT_THROW(e.letter(99, Mono{}), std::out_of_range);
}
