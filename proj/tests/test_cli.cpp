// End-to-end tests of the command-line tool: outputs, exit codes,
// exports and their round trips.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtbcd/operators.hpp"
#include "gtbcd/patterns.hpp"
#include "gtbcd/representation.hpp"
#include "gtbcd/wigner.hpp"
#include "json.hpp"

#ifndef GTBCD_CLI_PATH
#error "GTBCD_CLI_PATH must point at the command-line tool"
#endif

namespace gtbcd {
namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(GTBCD_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "gtbcd_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST(Cli, DimensionExamples) {
  EXPECT_EQ(run("dim --family B --rank 2 --hw 1,0").out, "5\n");
  EXPECT_EQ(run("dim --family C --rank 1 --hw 0").out, "1\n");
  EXPECT_EQ(run("dim --family B --rank 2 --hw 3/2,1/2").out, "16\n");
  EXPECT_EQ(run("dim --family B --rank 2 --hw 1,0").code, 0);
}

TEST(Cli, PatternsAreRecordsInTheJsonSchema) {
  const CliResult r = run("patterns --family D --rank 2 --hw 1,0");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  for (const auto& record : j) {
    const Pattern p = pattern_from_json(record);
    EXPECT_TRUE(validate(p).empty());
    EXPECT_EQ(pattern_to_json(p).dump(), record.dump());
  }
  // Deterministic output.
  EXPECT_EQ(run("patterns --family D --rank 2 --hw 1,0").out, r.out);
}

TEST(Cli, WeightTable) {
  const CliResult r = run("weights --family B --rank 2 --hw 1,1");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("patterns").size(), 10u);
  std::size_t total = 0;
  for (const auto& m : j.at("multiplicities")) total += m.at("multiplicity").get<std::size_t>();
  EXPECT_EQ(total, 10u);
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run("dim --family B --rank 2").code, 2);                     // missing --hw
  EXPECT_EQ(run("dim --family B --rank 2 --hw 0,1").code, 2);            // not dominant
  EXPECT_EQ(run("dim --family E --rank 2 --hw 1,0").code, 2);            // unknown family
  EXPECT_EQ(run("dim --family B --rank 2 --hw 1,0,0").code, 2);          // wrong length
  EXPECT_EQ(run("op --family B --rank 2 --hw 1,0 --gen 5,1").code, 2);   // unknown generator
  EXPECT_EQ(run("op --family B --rank 2 --hw 1,0 --gen -1,-2 --format csv").code, 2);
  EXPECT_EQ(run("wigner --family B --rank 2 --hw 1,0 --shift 1").code, 2);  // [1,-1] not a constituent
  EXPECT_EQ(run("wigner --family B --rank 2 --hw 1,0 --shift 9").code, 2);
  EXPECT_EQ(run("verify --suite nonsense").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, CartanExportIsDiagonal) {
  const CliResult r = run("op --family C --rank 2 --hw 2,1 --gen -1,-1");
  ASSERT_EQ(r.code, 0);
  const SparseOperator op = operator_from_json(nlohmann::json::parse(r.out));
  EXPECT_FALSE(op.entries.empty());
  for (const auto& [key, v] : op.entries) EXPECT_EQ(key.first, key.second);
}

TEST(Cli, OperatorJsonRoundTrip) {
  const auto path = temp_file("b2_f12.json");
  ASSERT_EQ(run("op --family B --rank 2 --hw 1,0 --gen -1,-2 --out " + path.string()).code, 0);
  const std::string text = slurp(path);
  const SparseOperator op = operator_from_json(nlohmann::json::parse(text));
  const SparseOperator built = Representation::get({Family::B, 2}, Weight{1, 0})->op({-1, -2});
  EXPECT_TRUE(same_entries(op, built));
  EXPECT_EQ(operator_to_json(op).dump(2) + "\n", text);
}

TEST(Cli, MatrixMarketMatchesJsonEntries) {
  const std::string args = "op --family B --rank 2 --hw 2,1 --gen 1,-2";
  const SparseOperator op = operator_from_json(nlohmann::json::parse(run(args).out));
  const CliResult mtx = run(args + " --format mtx");
  ASSERT_EQ(mtx.code, 0);
  std::istringstream in(mtx.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "%%MatrixMarket matrix coordinate real general");
  std::getline(in, line);
  EXPECT_NE(line.find("lossy"), std::string::npos);
  while (std::getline(in, line) && line[0] == '%') {
  }
  std::size_t rows = 0, cols = 0, nnz = 0;
  std::istringstream(line) >> rows >> cols >> nnz;
  EXPECT_EQ(rows, op.dim);
  EXPECT_EQ(nnz, op.entries.size());
  std::size_t r = 0, c = 0;
  double x = 0;
  std::size_t seen = 0;
  while (in >> r >> c >> x) {
    ++seen;
    EXPECT_NEAR(x, op.at(r - 1, c - 1).to_double(), 1e-15);
  }
  EXPECT_EQ(seen, nnz);
}

TEST(Cli, VerifyOperatorFiles) {
  const auto good = temp_file("good.json");
  ASSERT_EQ(run("op --family B --rank 2 --hw 2,1 --gen -1,-2 --out " + good.string()).code, 0);
  EXPECT_EQ(run("verify " + good.string()).code, 0);

  // Corrupt one entry by +1.
  auto j = nlohmann::json::parse(slurp(good));
  SparseOperator op = operator_from_json(j);
  const auto key = op.entries.begin()->first;
  op.add(key.first, key.second, AlgebraicValue(1));
  const auto bad = temp_file("bad.json");
  std::ofstream(bad) << operator_to_json(op).dump(2) << "\n";
  const CliResult r = run("verify " + bad.string());
  EXPECT_EQ(r.code, 1);
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_FALSE(report.at("passed").get<bool>());

  // Matrix Market files are compared in floating point with --tol.
  const auto mtx = temp_file("good.mtx");
  ASSERT_EQ(run("op --family B --rank 2 --hw 2,1 --gen -1,-2 --format mtx --out " + mtx.string()).code, 0);
  EXPECT_EQ(run("verify --family B --rank 2 --hw 2,1 --gen -1,-2 --tol 1e-12 " + mtx.string()).code, 0);
  EXPECT_EQ(run("verify --family B --rank 2 --hw 2,1 --gen -2,-1 --tol 1e-12 " + mtx.string()).code, 1);
  EXPECT_EQ(run("verify --family B --rank 2 --hw 2,1 --gen -1,-2 --tol -1 " + mtx.string()).code, 2);
}

TEST(Cli, VerifySuitesOnOneCase) {
  const CliResult r = run("verify --suite casimir --family C --rank 2 --hw 1,0");
  EXPECT_EQ(r.code, 0);
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_TRUE(report.at("passed").get<bool>());
  EXPECT_EQ(run("verify --suite brackets").code, 0);
  EXPECT_EQ(run("verify --suite equivariance --family D --rank 2 --hw 2,1").code, 0);
}

TEST(Cli, WignerTableRoundTrip) {
  const CliResult r = run("wigner --family C --rank 2 --hw 1,0 --shift -2");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const WignerTable t = wigner_from_json(j);
  EXPECT_EQ(t.entries, intertwiner({Family::C, 2}, Weight{1, 0}, -2)->entries);
  EXPECT_EQ(wigner_to_json(t).dump(2) + "\n", r.out);
}

}  // namespace
}  // namespace gtbcd
