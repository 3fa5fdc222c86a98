#include "cli_helpers.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace zform::test;

namespace {
std::string tmp_path(const std::string& name)
{
  return (std::filesystem::temp_directory_path() / ("zform_test_cli_" + name)).string();
}
const std::string kSl2 = std::string(ZFORM_DATA_DIR) + "/algebras/sl2.alg";
}  // namespace

TEST(Cli, Normalize)
{
  auto r = run_cli("normalize --algebra sl2 'x[a]{t} x[-a]{1}'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x[-a]{1} x[a]{t}\n+ h[1]{t}\n");
  r = run_cli("normalize --algebra sl21 'x[a2]{1} x[a2]{1}'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
  r = run_cli("normalize --algebra sl2 --divided 'h[1]{t}^2'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2 p[1]{t:2}\n- p[1]{t^2:1}\nINTEGRAL: yes\n");
  r = run_cli("normalize --algebra sl2 --divided '1/2 x[a]{t}'");
  EXPECT_EQ(r.out, "1/2 x[a]{t}\nINTEGRAL: no\n");
  // algebra given as a file path
  EXPECT_EQ(run_cli("normalize --algebra '" + kSl2 + "' 'x[a]{t} x[-a]{1}'").out, "x[-a]{1} x[a]{t}\n+ h[1]{t}\n");
  // monoid choice matters: t^2 = 0 in trunc:2
  EXPECT_EQ(run_cli("normalize --algebra sl2 --monoid trunc:2 'x[a]{t} x[-a]{t}'").out, "x[-a]{t} x[a]{t}\n");
}

TEST(Cli, ParseErrorsExitTwo)
{
  EXPECT_EQ(run_cli("normalize --algebra sl2 'x[b]{t}'").code, 2);
  EXPECT_EQ(run_cli("normalize --algebra sl2 'x[a]{t} +'").code, 2);
  EXPECT_EQ(run_cli("normalize --algebra nosuch 'x[a]{t}'").code, 2);
  EXPECT_EQ(run_cli("normalize --algebra sl2 --monoid trunc:x 'x[a]{t}'").code, 2);
  EXPECT_EQ(run_cli("normalize --bogus x").code, 2);
  EXPECT_EQ(run_cli("").code, 2);
  EXPECT_EQ(run_cli("frobnicate").code, 2);
  EXPECT_EQ(run_cli("basis --algebra sl2 --order 'a,-a'").code, 2);
  EXPECT_EQ(run_cli("basis --algebra sl2 --monoid poly").code, 2);
  EXPECT_EQ(run_cli("verify --algebra sl2 --id 9.9").code, 2);
}

TEST(Cli, VerifyExitCodes)
{
  auto r = run_cli("verify --algebra osp12 --id 4.8");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict=PASS"), std::string::npos);
  EXPECT_EQ(r.out.find("verdict=FAIL"), std::string::npos);

  r = run_cli("verify --algebra sl3 --id L4.4a --r 2 --s 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("signs=["), std::string::npos);

  r = run_cli("verify --algebra sl21 --id 4.11");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict=INAPPLICABLE"), std::string::npos);
  EXPECT_NE(r.out.find("SUMMARY pass=0 fail=0 inapplicable=1"), std::string::npos);

  // the paper's eq. (4.11) coefficient fails on osp12; the Jacobi-derived one passes
  EXPECT_EQ(run_cli("verify --algebra osp12 --id 4.11").code, 1);
  EXPECT_EQ(run_cli("verify --algebra osp12 --id 4.11 --corrected").code, 0);

  r = run_cli("verify --algebra sl2 --id 4.3 --alpha a --r 1 --s 1 --a t --b 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "CHECK id=4.3 algebra=sl2 params=\"alpha=a a=t b=1 r=1 s=1\" verdict=PASS\n"
                   "SUMMARY pass=1 fail=0 inapplicable=0\n");
}

TEST(Cli, VerifyConfig)
{
  const std::string good = tmp_path("good.json"), bad = tmp_path("bad.json");
  write_file(good, R"({"algebras":["sl2"],"identities":["4.2"],"bounds":{"rs":1,"mono_degree":1}})");
  write_file(bad, R"({"algebras":["sl2"],"nonsense":true})");
  auto r = run_cli("verify --config '" + good + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("SUMMARY pass="), std::string::npos);
  EXPECT_EQ(run_cli("verify --config '" + bad + "'").code, 2);
  EXPECT_EQ(run_cli("verify --config /nonexistent/file.json").code, 2);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST(Cli, PelemDelem)
{
  auto r = run_cli("pelem --algebra sl2 --i 1 --chi t:2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1/2 h[1]{t}^2\n- 1/2 h[1]{t^2}\n");
  r = run_cli("pelem --algebra sl2 --i 1 --chi t:2 --divided");
  EXPECT_EQ(r.out, "p[1]{t:2}\nINTEGRAL: yes\n");
  r = run_cli("pelem --algebra sl3 --alpha a1+a2 --chi t:1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "- h[1]{t}\n- h[2]{t}\n");
  r = run_cli("delem --algebra sl2 --alpha a --j 2 --k 2 --d t --c 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x[a]{1} x[a]{t^2}\n+ 1/2 x[a]{t}^2\n");
  EXPECT_EQ(run_cli("delem --algebra sl2 --alpha a --j 2 --k 0 --d t --c 1").out, "0\n");
}

TEST(Cli, Basis)
{
  auto r = run_cli("basis --algebra sl2 --monoid trunc:2 --degree 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# basis algebra=sl2 monoid=trunc:2 degree<=1 order=-a,1,a\n", 0), 0u);
  EXPECT_NE(r.out.find("[B = B- | B0 | B+] count=7\n"), std::string::npos);
  EXPECT_NE(r.out.find("[B-] count=3\n"), std::string::npos);
  // a non-triangular order has no segment listing but the same count
  r = run_cli("basis --algebra sl2 --monoid trunc:2 --degree 1 --order 'a,1,-a'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("count=7"), std::string::npos);
}

TEST(Cli, ValidateSpec)
{
  auto r = run_cli("validate-spec '" + kSl2 + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "VALID sl2 rank=1 roots=2\n");
  EXPECT_EQ(run_cli("validate-spec osp12").out, "VALID osp12 rank=1 roots=4\n");

  // mutate [x_a, x_-a] = 2 h: violates the stored coroot and antisymmetry pairing
  std::string text = read_file(kSl2);
  const std::string from = "bracket x[a] x[-a] : 1 h[1]";
  text.replace(text.find(from), from.size(), "bracket x[a] x[-a] : 2 h[1]");
  const std::string mutated = tmp_path("mutated.alg");
  write_file(mutated, text);
  r = run_cli("validate-spec '" + mutated + "'");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("VIOLATION"), std::string::npos);
  EXPECT_NE(r.out.find("INVALID"), std::string::npos);

  const std::string malformed = tmp_path("malformed.alg");
  write_file(malformed, "name broken\ncartan x\n");
  EXPECT_EQ(run_cli("validate-spec '" + malformed + "'").code, 2);
  EXPECT_EQ(run_cli("validate-spec /nonexistent.alg").code, 2);
  std::filesystem::remove(mutated);
  std::filesystem::remove(malformed);
}

TEST(Cli, Deterministic)
{
  const std::string args = "verify --algebra sl21,osp12 --id 4.10,4.12 --seed 5";
  const auto a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
  const std::string bargs = "basis --algebra sl21 --monoid trunc:2 --degree 2";
  EXPECT_EQ(run_cli(bargs).out, run_cli(bargs).out);
}
