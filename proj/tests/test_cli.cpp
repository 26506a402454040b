#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome dmm_run(std::vector<std::string> args) {
  args.insert(args.begin(), "dmm");
  std::vector<char const*> argv;
  for (auto const& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int const code = dmm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(std::string const& name) { return std::string(DMM_SAMPLES_DIR) + "/" + name; }

std::string slurp(std::filesystem::path const& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch(std::string const& name) {
  auto const dir = std::filesystem::temp_directory_path() / "dmm-cli-test";
  std::filesystem::create_directories(dir);
  auto const p = dir / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST(Cli, ValidateNamed) {
  Outcome const r = dmm_run({"validate", "--algebra", "C4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "C4: valid\n");
}

TEST(Cli, SemilinearityCounterexample) {
  Outcome const r = dmm_run({"satisfies", "--algebra", "D4", "--statement", "e <= (x -> y) \\/ (y -> x)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "e <= (x -> y) \\/ (y -> x): fails at x = e, y = f\n");
  Outcome const j = dmm_run({"satisfies", "--algebra", "D4", "--statement", "e <= (x -> y) \\/ (y -> x)", "--format",
                         "json"});
  auto const doc = dmm::Json::parse(j.out);
  EXPECT_EQ(doc["results"][0]["counterexample"]["x"], "e");
  EXPECT_EQ(doc["results"][0]["counterexample"]["y"], "f");
  EXPECT_EQ(dmm_run({"satisfies", "--algebra", "2", "--statement", "x <= e"}).code, 0);
}

TEST(Cli, StatementFile) {
  Outcome const r = dmm_run({"satisfies", "--algebra", "D4", "--statement", "@" + sample("distinguishing.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out,
            "e <= (x -> y) \\/ (y -> x): fails at x = e, y = f\n"
            "x /\\ ~x <= y \\/ ~y: holds\n"
            "f * f <= f: fails\n"
            "e <= f: fails\n");
}

TEST(Cli, HomsGolden) {
  Outcome const r = dmm_run({"homs", "--algebra", "S4", "--target", "S3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "-2 -> -1, -1 -> 0, 1 -> 0, 2 -> 1  (onto)\n"
            "-2 -> 0, -1 -> 0, 1 -> 0, 2 -> 0\n"
            "2 homomorphism(s)\n");
}

TEST(Cli, ClassifyJson) {
  Outcome const r = dmm_run({"classify", "--algebra", "S5", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto const doc = dmm::Json::parse(r.out);
  EXPECT_EQ(doc["si"], true);
  EXPECT_EQ(doc["simple"], false);
  EXPECT_EQ(doc["subcover"], "-1");
  EXPECT_EQ(doc["filters"].size(), 3U);
}

TEST(Cli, IsoQuotientDfgReduct) {
  EXPECT_EQ(dmm_run({"iso", "--algebra", "C4", "--target", "D4"}).code, 1);
  EXPECT_EQ(dmm_run({"iso", "--algebra", sample("c4ext1.json"), "--target", "C4ext_1"}).code, 0);
  Outcome const q = dmm_run({"quotient", "--algebra", "S5", "--elements", "-1", "--format", "json"});
  EXPECT_EQ(q.code, 0);
  EXPECT_EQ(dmm::Json::parse(q.out)["size"], 3);
  EXPECT_EQ(dmm_run({"dfg", "--algebra", "S5", "--elements", "-1"}).out, "DFg = [\"-1\",\"0\",\"1\",\"2\"]\n");
  Outcome const red = dmm_run({"reduct", "--algebra", "C4", "--format", "json"});
  EXPECT_EQ(dmm::Json::parse(red.out)["signature"], "RA");
}

TEST(Cli, ConstructProductAndSubalgebra) {
  Outcome const p = dmm_run({"construct", "--algebra", "2", "--times", "2"});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("classification: not FSI"), std::string::npos);
  Outcome const s = dmm_run({"construct", "--algebra", "S5", "--elements", "2", "--format", "json"});
  auto const doc = dmm::Json::parse(s.out);
  EXPECT_EQ(doc["size"], 3);
  EXPECT_TRUE(dmm::validate_dmm(dmm::algebra_from_json(doc)).pass());
}

TEST(Cli, Samples) {
  Outcome const bad = dmm_run({"validate", "--algebra", sample("e_bottom_chain.json"), "--class", "irl"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("involution-fusion at (f, f, f)"), std::string::npos);
  Outcome const h = dmm_run({"homs", "--algebra", sample("c4ext1.json"), "--target", "S3"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("top1 -> 1  (onto)"), std::string::npos);
  Outcome const c = dmm_run({"classify", "--algebra", sample("two_times_s3.json")});
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "2xS3: not FSI");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(dmm_run({"validate", "--algebra", "no-such-algebra"}).code, 2);
  EXPECT_EQ(dmm_run({"validate"}).code, 2);
  EXPECT_EQ(dmm_run({"enumerate", "--size", "9"}).code, 2);
  EXPECT_EQ(dmm_run({"dfg", "--algebra", "C4", "--elements", "zz"}).code, 2);
  EXPECT_EQ(dmm_run({"satisfies", "--algebra", "C4", "--statement", "x <="}).code, 2);
  EXPECT_EQ(dmm_run({"validate", "--algebra", "C4", "--format", "yaml"}).code, 2);
  EXPECT_EQ(dmm_run({"validate", "--algebra", sample("e_bottom_chain.json")}).code, 2);
}

TEST(Cli, NamedAlgebraShadowsFile) {
  auto const p = std::filesystem::current_path() / "D4";
  {
    std::ofstream f(p);
    f << dmm::dump(dmm::to_json(dmm::make_named("2")));
  }
  Outcome const r = dmm_run({"validate", "--algebra", "D4"});
  std::filesystem::remove(p);
  EXPECT_EQ(r.out, "D4: valid\n");
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, EnumerateOutputIsStable) {
  auto const a = scratch("a.json");
  auto const b = scratch("b.json");
  EXPECT_EQ(dmm_run({"enumerate", "--size", "6", "--cumulative", "--out", a.string()}).code, 0);
  EXPECT_EQ(dmm_run({"enumerate", "--size", "6", "--cumulative", "--jobs", "2", "--out", b.string()}).code, 0);
  std::string const text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  auto const doc = dmm::Json::parse(text);
  EXPECT_EQ(doc[0]["catalog"]["count"], 28);
  EXPECT_EQ(doc.size(), 29U);
  Outcome const t = dmm_run({"enumerate", "--size", "4", "--format", "text"});
  EXPECT_EQ(t.out, "D4 (size 4)\nC4 (size 4)\nS4 (size 4)\ndmm4-4 (size 4)\n4 algebra(s)\n");
}

TEST(Cli, EnumerateResumesFromCheckpoint) {
  auto const cp = scratch("cp.json");
  auto const a = scratch("full.json");
  auto const b = scratch("resumed.json");
  ASSERT_EQ(dmm_run({"enumerate", "--size", "7", "--checkpoint", cp.string(), "--out", a.string()}).code, 0);
  EXPECT_TRUE(std::filesystem::exists(cp));
  ASSERT_EQ(dmm_run({"enumerate", "--size", "7", "--checkpoint", cp.string(), "--out", b.string()}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, FiltersAndLimit) {
  Outcome const r = dmm_run({"enumerate", "--size", "8", "--filter", "simple", "--filter", "chain", "--format", "json"});
  auto const doc = dmm::Json::parse(r.out);
  for (std::size_t i = 1; i < doc.size(); ++i) {
    auto const A = dmm::algebra_from_json(doc[i]);
    EXPECT_TRUE(dmm::is_chain(A) && dmm::classify(A).simple);
  }
  Outcome const l = dmm_run({"enumerate", "--size", "6", "--limit", "2", "--format", "json"});
  auto const ld = dmm::Json::parse(l.out);
  EXPECT_EQ(ld[0]["catalog"]["complete"], false);
  EXPECT_EQ(ld.size(), 3U);
  EXPECT_EQ(dmm_run({"enumerate", "--size", "4", "--filter", "bogus"}).code, 2);
}

TEST(Cli, SuitePasses) {
  Outcome const r = dmm_run({"suite", "--size", "4", "--seed", "1"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}
