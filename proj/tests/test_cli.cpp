#include <gtest/gtest.h>

#include "cli_runner.hpp"
#include "gdyn/corpus.hpp"
#include "gdyn/system_file.hpp"

using namespace gdyn;
using gdyn::test::run_cli;

namespace {

std::string fixture_file(const std::string& name) {
  return "'" + gdyn::test::write_temp(name + ".gsys", serialize_system(fixture(name).system)).string() + "'";
}

const std::string kCli = GDYN_CLI_PATH;

}  // namespace

TEST(Cli, CheckStrongMixingTrue) {
  auto r = run_cli(kCli, "check " + fixture_file("FIX-Z2SWAP") + " --property sgm");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("property=sgm verdict=true\n", 0), 0u) << r.out;
}

TEST(Cli, CheckStrongMixingFalseWithWitness) {
  auto r = run_cli(kCli, "check " + fixture_file("FIX-ROT4") + " --property sgm");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("verdict=false"), std::string::npos);
  EXPECT_NE(r.out.find("witness: U={"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find(" V={"), std::string::npos) << r.out;
}

TEST(Cli, CheckErrors) {
  EXPECT_EQ(run_cli(kCli, "check " + fixture_file("FIX-ROT4") + " --property chaos").status, 2);
  EXPECT_EQ(run_cli(kCli, "check /nonexistent.gsys --property gt").status, 2);
  EXPECT_EQ(run_cli(kCli, "check " + fixture_file("FIX-ROT4") + " --property nfold:x").status, 2);
  EXPECT_EQ(run_cli(kCli, "check " + fixture_file("FIX-ROT4") + " --property nfold:2").status, 1);
}

TEST(Cli, Validate) {
  EXPECT_EQ(run_cli(kCli, "validate " + fixture_file("FIX-EX21")).status, 0);
  auto bad = gdyn::test::write_temp("bad.gsys", "points a b\nopen a\nmap a b\nmap b a\n");
  auto r = run_cli(kCli, "validate '" + bad.string() + "'");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("line 4"), std::string::npos) << r.out;
  EXPECT_EQ(run_cli(kCli, "validate").status, 2);
}

TEST(Cli, QuotientOfZ4Mod2) {
  auto r = run_cli(kCli, "quotient " + fixture_file("FIX-Z4MOD2"));
  ASSERT_EQ(r.status, 0);
  GSystem q = parse_system(r.out);
  EXPECT_EQ(q.size(), 2u);
  EXPECT_TRUE(q.space().is_discrete());
  EXPECT_TRUE(q.group().is_trivial());
  EXPECT_EQ(q.map(), (PointMap{1, 0}));
}

TEST(Cli, ReportAndMinimalSets) {
  auto r = run_cli(kCli, "report " + fixture_file("FIX-SIERP"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("sgm=true\n"), std::string::npos);
  EXPECT_NE(r.out.find("gm=false\n"), std::string::npos);
  EXPECT_NE(r.out.find("diagram=consistent"), std::string::npos);
  EXPECT_EQ(run_cli(kCli, "minimal-sets " + fixture_file("FIX-SIERP")).out, "{b}\n");
}

TEST(Cli, GenIsDeterministic) {
  auto a = run_cli(kCli, "gen --seed 11 --max-points 4 --group Z2 --mode preorder --pseudoequivariant");
  auto b = run_cli(kCli, "gen --seed 11 --max-points 4 --group Z2 --mode preorder --pseudoequivariant");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  GSystem s = parse_system(a.out);
  EXPECT_EQ(s.group().order(), 2u);
  EXPECT_EQ(run_cli(kCli, "gen --seed 1 --group Q8").status, 2);
  EXPECT_EQ(run_cli(kCli, "gen --seed 1 --mode hausdorff").status, 2);
}

TEST(Cli, Mine) {
  auto w = run_cli(kCli, "mine --target 'gt & !tgt' --seed 1 --budget 0");
  EXPECT_EQ(w.status, 0);
  GSystem s = parse_system(w.out);
  EXPECT_LE(s.size(), 3u);
  auto e = run_cli(kCli, "mine --target 'gm & !gt' --seed 1 --budget 5 --sweep-points 2");
  EXPECT_EQ(e.status, 1);
  EXPECT_EQ(e.out.rfind("exhausted", 0), 0u) << e.out;
  EXPECT_EQ(run_cli(kCli, "mine --target 'gt &' --seed 1 --budget 5").status, 2);
}
