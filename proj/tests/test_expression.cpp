#include "helpers.hpp"

#include <zform/expression.hpp>

#include <gtest/gtest.h>

using namespace zform;
using namespace zform::test;

namespace {
struct Ctx {
  Engine e;
  Garland gl;
  explicit Ctx(const std::string& name, MonoidBasis mo = MonoidBasis::poly()) : e(preset(name), std::move(mo)), gl(e) {}
  UElem parse(const std::string& s) { return parse_expression(gl, s); }
  std::string show(const std::string& s) { return format_uelem(e, parse(s)); }
};

std::size_t error_pos(Ctx& c, const std::string& s)
{
  try {
    c.parse(s);
  } catch (const ExpressionError& err) {
    return err.position();
  }
  ADD_FAILURE() << "no parse error for '" << s << "'";
  return std::string::npos;
}
}  // namespace

TEST(Expression, NormalizeExamples)
{
  Ctx c("sl2");
  EXPECT_EQ(c.show("x[a]{t} x[-a]{1}"), "x[-a]{1} x[a]{t}\n+ h[1]{t}\n");
  EXPECT_EQ(c.show("x[-a]{1} x[a]{t} + h[1]{t}"), "x[-a]{1} x[a]{t}\n+ h[1]{t}\n");
  EXPECT_EQ(c.show("x[a]{1} - x[a]{1}"), "0\n");
  EXPECT_EQ(c.show("2"), "2\n");
  EXPECT_EQ(c.show("-1/2 h[1]{t^2}"), "- 1/2 h[1]{t^2}\n");
  Ctx s("sl21");
  EXPECT_EQ(s.show("x[a2]{1} x[a2]{1}"), "0\n");
}

TEST(Expression, Powers)
{
  Ctx c("sl2");
  EXPECT_EQ(c.parse("x[a]{t}^2"), c.parse("x[a]{t} x[a]{t}"));
  EXPECT_EQ(c.parse("x[a]{t}^(2)"), c.parse("1/2 x[a]{t}^2"));
  EXPECT_EQ(c.parse("x[a]{t}^0"), UElem::one());
  EXPECT_EQ(c.parse("(x[a]{1} + h[1]{1})^2"), c.parse("x[a]{1}x[a]{1} + x[a]{1}h[1]{1} + h[1]{1}x[a]{1} + h[1]{1}^2"));
  EXPECT_EQ(c.parse("2 * x[a]{t}"), c.parse("2 x[a]{t}"));
}

TEST(Expression, PAndCartanAtoms)
{
  Ctx c("sl3");
  EXPECT_EQ(c.parse("p[1]{t:1}"), c.parse("-h[1]{t}"));
  EXPECT_EQ(c.parse("p[a1+a2]{t:1}"), c.parse("-h[1]{t} - h[2]{t}"));
  EXPECT_EQ(c.parse("p[2]{}"), UElem::one());
  EXPECT_EQ(c.parse("p[1]{t:2}"), c.parse("1/2 h[1]{t}^2 - 1/2 h[1]{t^2}"));
}

TEST(Expression, Errors)
{
  Ctx c("sl2");
  EXPECT_EQ(error_pos(c, ""), 0u);
  EXPECT_EQ(error_pos(c, "x[b]{t}"), 2u);           // unknown root label
  EXPECT_EQ(error_pos(c, "h[2]{t}"), 2u);           // Cartan index out of range
  EXPECT_EQ(error_pos(c, "x[a]{t} +"), 9u);         // dangling operator
  EXPECT_EQ(error_pos(c, "x[a]{t"), 6u);            // missing '}'
  EXPECT_EQ(error_pos(c, "(x[a]{t}"), 8u);          // missing ')'
  EXPECT_EQ(error_pos(c, "1/0"), 2u);
  EXPECT_EQ(error_pos(c, "q[a]{t}"), 0u);
  EXPECT_EQ(error_pos(c, "x[a]{t} )"), 8u);
  try {
    c.parse("x[b]{t}");
  } catch (const ExpressionError& err) {
    EXPECT_NE(std::string(err.what()).find("position 2"), std::string::npos);
    EXPECT_FALSE(err.expected().empty());
  }
}

TEST(Expression, Multiset)
{
  const MonoidBasis mo = MonoidBasis::poly();
  Multiset<Mono> m = parse_multiset(mo, "t:2,1:1");
  EXPECT_EQ(m.total(), 3);
  EXPECT_EQ(m[(Mono{{1, 0}})], 2);
  EXPECT_EQ(m[(Mono{{0, 0}})], 1);
  EXPECT_EQ(format_multiset(m, mo), "1:1,t:2");
  EXPECT_TRUE(parse_multiset(mo, "").empty());
  EXPECT_THROW(parse_multiset(mo, "t"), std::invalid_argument);
}

TEST(Expression, FormatDivided)
{
  Ctx c("sl2");
  const UElem x = c.parse("h[1]{t}^2");
  EXPECT_EQ(format_divided(c.e, c.gl.converter(), c.gl.converter().to_divided(x)),
            "2 p[1]{t:2}\n- p[1]{t^2:1}\nINTEGRAL: yes\n");
  const UElem y = c.parse("1/2 x[a]{t}");
  EXPECT_EQ(format_divided(c.e, c.gl.converter(), c.gl.converter().to_divided(y)), "1/2 x[a]{t}\nINTEGRAL: no\n");
  EXPECT_EQ(format_divided(c.e, c.gl.converter(), c.gl.converter().to_divided(c.parse("x[a]{t}^(2)"))),
            "x[a]{t}^(2)\nINTEGRAL: yes\n");
}

TEST(Expression, RoundTripRandom)
{
  for (const char* name : {"sl2", "sl3", "sl21", "osp12"})
    for (const char* mono : {"poly", "laurent", "poly2", "trunc:3"}) {
      Ctx c(name, MonoidBasis::from_name(mono));
      std::mt19937_64 rng(42);
      for (int trial = 0; trial < 25; ++trial) {
        UElem x;
        const int nterms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < nterms; ++t) {
          std::vector<Letter> w;
          const int len = static_cast<int>(rng() % 4);
          for (int k = 0; k < len; ++k) {
            Letter l = random_letter(c.e, rng, 2);
            if (std::string(mono) == "laurent" && rng() % 2) l.mono = c.e.monoid().power(-1);
            if (std::string(mono) == "poly2" && rng() % 2) l.mono = c.e.monoid().generator(1);
            w.push_back(l);
          }
          x.add_scaled(c.e.normalize(w), frac(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)));
        }
        const std::string text = format_uelem(c.e, x);
        std::string joined;
        for (char ch : text) joined += ch == '\n' ? ' ' : ch;
        EXPECT_EQ(c.parse(joined), x) << name << " " << mono << ": " << text;
      }
    }
}
