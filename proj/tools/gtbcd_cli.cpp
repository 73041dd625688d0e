// Command-line front end: compute, export and verify Gelfand-Tsetlin type
// bases and their generator matrices.
//
//   gtbcd dim      --family B --rank 2 --hw 1,0
//   gtbcd patterns --family D --rank 2 --hw 1,0
//   gtbcd weights  --family C --rank 2 --hw 2,1
//   gtbcd op       --family B --rank 2 --hw 1,0 --gen -1,-2 [--format mtx]
//   gtbcd wigner   --family B --rank 2 --hw 1,0 --shift -2
//   gtbcd verify   [--suite all] [--family ... --rank ... --hw ...] [FILE ...]
//
// Exit status: 0 success / all checks pass, 1 a check failed, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "gtbcd/operators.hpp"
#include "gtbcd/patterns.hpp"
#include "gtbcd/representation.hpp"
#include "gtbcd/roots.hpp"
#include "gtbcd/verify.hpp"
#include "gtbcd/wigner.hpp"

namespace {

using namespace gtbcd;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JobSpec {
  std::string family;
  int rank = 0;
  std::string hw;
  std::string gen;
  int shift = 0;
  std::string format = "json";
  std::string out;
  std::string suite = "all";
  double tol = 1e-9;
  std::vector<std::string> files;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

AlgebraLabel parse_label(const JobSpec& job) {
  if (job.family.empty() || job.rank <= 0) throw UsageError("--family and --rank are required");
  AlgebraLabel label{parse_family(job.family), job.rank};
  label.validate();
  return label;
}

Weight parse_weight(const AlgebraLabel& label, const std::string& text) {
  if (text.empty()) throw UsageError("--hw is required");
  Weight w;
  for (const auto& part : split(text, ',')) w.push_back(parse_rational(part));
  if (static_cast<int>(w.size()) != label.rank) {
    throw UsageError("--hw needs " + std::to_string(label.rank) + " entries");
  }
  validate_dominant(label, w);
  return w;
}

GeneratorId parse_generator(const AlgebraLabel& label, const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("--gen expects i,j");
  const GeneratorId g{std::stoi(parts[0]), std::stoi(parts[1])};
  if (!is_generator(label, g)) throw UsageError("unknown generator " + g.to_string() + " for " + label.to_string());
  return g;
}

void emit(const JobSpec& job, const std::string& text) {
  if (job.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(job.out);
  if (!f) throw UsageError("cannot write " + job.out);
  f << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_matrix_market(const SparseOperator& op) {
  std::ostringstream os;
  os << "%%MatrixMarket matrix coordinate real general\n";
  os << "% lossy export: exact entries rendered as doubles with 17 significant digits\n";
  os << "% family " << family_char(op.label.family) << " rank " << op.label.rank << " hw "
     << weight_to_string(op.hw) << " gen " << op.gen.i << "," << op.gen.j << "\n";
  os << "% rows and columns follow the pattern order\n";
  os << op.dim << " " << op.dim << " " << op.entries.size() << "\n";
  for (const auto& [key, v] : op.entries) {
    os << key.first + 1 << " " << key.second + 1 << " " << format_double(v.to_double()) << "\n";
  }
  return os.str();
}

struct MatrixMarket {
  std::size_t rows = 0, cols = 0;
  std::map<std::pair<std::size_t, std::size_t>, double> entries;
};

MatrixMarket read_matrix_market(std::istream& in) {
  MatrixMarket m;
  std::string line;
  bool header = false;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream ls(line);
    if (!header) {
      ls >> m.rows >> m.cols >> count;
      if (!ls) throw UsageError("malformed Matrix Market size line");
      header = true;
      continue;
    }
    std::size_t r = 0, c = 0;
    double x = 0;
    ls >> r >> c >> x;
    if (!ls || r == 0 || c == 0 || r > m.rows || c > m.cols) throw UsageError("malformed Matrix Market entry");
    m.entries[{r - 1, c - 1}] += x;
  }
  if (!header || m.entries.size() > count) throw UsageError("malformed Matrix Market file");
  return m;
}

// ---------------------------------------------------------------------------
// Commands.

int cmd_dim(const JobSpec& job) {
  const AlgebraLabel label = parse_label(job);
  const Weight lambda = parse_weight(label, job.hw);
  emit(job, std::to_string(enumerate_patterns(label, lambda).size()) + "\n");
  return kPass;
}

int cmd_patterns(const JobSpec& job) {
  const AlgebraLabel label = parse_label(job);
  const Weight lambda = parse_weight(label, job.hw);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : enumerate_patterns(label, lambda)) out.push_back(pattern_to_json(p));
  emit(job, dump(out));
  return kPass;
}

nlohmann::json weight_json(const Weight& w) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : w) j.push_back(rational_to_json(x));
  return j;
}

int cmd_weights(const JobSpec& job) {
  const AlgebraLabel label = parse_label(job);
  const Weight lambda = parse_weight(label, job.hw);
  nlohmann::json per_pattern = nlohmann::json::array();
  std::map<Weight, std::size_t> counts;
  const auto pats = enumerate_patterns(label, lambda);
  for (std::size_t k = 0; k < pats.size(); ++k) {
    const Weight w = pattern_weight(pats[k]);
    per_pattern.push_back({{"index", k}, {"weight", weight_json(w)}});
    ++counts[w];
  }
  nlohmann::json table = nlohmann::json::array();
  for (const auto& [w, m] : counts) table.push_back({{"weight", weight_json(w)}, {"multiplicity", m}});
  emit(job, dump({{"patterns", per_pattern}, {"multiplicities", table}}));
  return kPass;
}

int cmd_op(const JobSpec& job) {
  const AlgebraLabel label = parse_label(job);
  const Weight lambda = parse_weight(label, job.hw);
  if (job.gen.empty()) throw UsageError("--gen is required");
  const GeneratorId g = parse_generator(label, job.gen);
  const SparseOperator op = Representation::get(label, lambda)->op(g);
  if (job.format == "mtx") {
    emit(job, to_matrix_market(op));
  } else {
    emit(job, dump(operator_to_json(op)));
  }
  return kPass;
}

int cmd_wigner(const JobSpec& job) {
  const AlgebraLabel label = parse_label(job);
  const Weight lambda = parse_weight(label, job.hw);
  const auto coords = coordinates(label);
  if (std::find(coords.begin(), coords.end(), job.shift) == coords.end()) {
    throw UsageError("shift " + std::to_string(job.shift) + " is not a standard coordinate of " + label.to_string());
  }
  Weight bar = lambda;
  const Weight delta = standard_weight(label, job.shift);
  for (std::size_t k = 0; k < bar.size(); ++k) bar[k] += delta[k];
  const auto constituents = tensor_with_standard(label, lambda);
  if (std::find(constituents.begin(), constituents.end(), bar) == constituents.end()) {
    throw UsageError(weight_to_string(bar) + " is not a constituent of std (x) V" + weight_to_string(lambda));
  }
  emit(job, dump(wigner_to_json(*intertwiner(label, lambda, job.shift))));
  return kPass;
}

// Compares an exported operator file with the construction; JSON files are
// compared exactly and additionally substituted into the bracket check.
CaseResult verify_file(const JobSpec& job, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  const bool is_mtx = path.size() > 4 && path.substr(path.size() - 4) == ".mtx";
  CaseResult r;
  r.check = "file:" + path;
  if (!is_mtx) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(path + ": " + e.what());
    }
    const SparseOperator op = operator_from_json(j);
    r.label = op.label;
    r.lambda = op.hw;
    const auto rep = Representation::get(op.label, op.hw);
    const SparseOperator built = rep->op(op.gen);
    std::size_t differ = 0;
    for (const auto& [key, v] : built.entries)
      if (op.at(key.first, key.second) != v && differ++ == 0)
        r.witness = "entry (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")";
    for (const auto& [key, v] : op.entries)
      if (built.at(key.first, key.second).is_zero() && differ++ == 0)
        r.witness = "entry (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")";
    if (op.dim != built.dim) ++differ;
    // Bracket relations with the file's operator in place of the constructed one.
    std::map<GeneratorId, SparseOperator> ops = rep->basis_operators();
    const auto slot = ops.find(op.gen);
    if (slot != ops.end()) slot->second = op;
    const CaseResult brackets = check_commutators(op.label, op.hw, &ops);
    r.residual = std::to_string(differ) + " differing entries; brackets " + brackets.residual;
    r.passed = differ == 0 && brackets.passed;
    if (r.witness.empty()) r.witness = brackets.witness;
    return r;
  }
  const AlgebraLabel label = parse_label(job);
  const Weight lambda = parse_weight(label, job.hw);
  if (job.gen.empty()) throw UsageError("--gen is required for Matrix Market files");
  const GeneratorId g = parse_generator(label, job.gen);
  r.label = label;
  r.lambda = lambda;
  const MatrixMarket m = read_matrix_market(f);
  const SparseOperator built = Representation::get(label, lambda)->op(g);
  double worst = 0.0;
  if (m.rows != built.dim || m.cols != built.dim) worst = INFINITY;
  for (const auto& [key, v] : built.entries) {
    const auto it = m.entries.find(key);
    worst = std::max(worst, std::abs(v.to_double() - (it == m.entries.end() ? 0.0 : it->second)));
  }
  for (const auto& [key, x] : m.entries) {
    if (built.at(key.first, key.second).is_zero()) worst = std::max(worst, std::abs(x));
  }
  r.residual = "max abs " + format_double(worst);
  r.passed = worst < job.tol;
  if (!r.passed) r.witness = "float residual exceeds tolerance " + format_double(job.tol);
  return r;
}

int cmd_verify(const JobSpec& job) {
  if (!(job.tol > 0)) throw UsageError("--tol must be positive");
  VerificationReport report;
  if (!job.files.empty()) {
    report.suite = "files";
    for (const auto& path : job.files) report.cases.push_back(verify_file(job, path));
  } else {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), job.suite) == names.end()) {
      throw UsageError("unknown suite " + job.suite);
    }
    if (!job.family.empty() || job.rank > 0 || !job.hw.empty()) {
      const AlgebraLabel label = parse_label(job);
      const std::vector<GridCase> cases{{label, parse_weight(label, job.hw)}};
      report = run_suite(job.suite, &cases);
    } else {
      report = run_suite(job.suite);
    }
  }
  report.metadata["tolerance"] = format_double(job.tol);
  emit(job, dump(report_to_json(report)));
  std::cerr << report.suite << ": " << report.cases.size() - report.failures() << "/" << report.cases.size()
            << " passed\n";
  return report.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gelfand-Tsetlin type bases of B, C, D algebras: patterns, generator matrices, Wigner coefficients"};
  app.require_subcommand(1);
  JobSpec job;

  auto add_module = [&](CLI::App* sub) {
    sub->add_option("--family", job.family, "Algebra family")->check(CLI::IsMember({"A", "B", "C", "D"}));
    sub->add_option("--rank", job.rank, "Rank n")->check(CLI::PositiveNumber);
    sub->add_option("--hw", job.hw, "Highest weight m_{-n},...,m_{-1}, e.g. 3/2,1/2");
    sub->add_option("--out", job.out, "Output path (default stdout)");
  };
  CLI::App* dim = app.add_subcommand("dim", "Dimension (number of patterns)");
  CLI::App* patterns = app.add_subcommand("patterns", "Pattern list as JSON");
  CLI::App* weights = app.add_subcommand("weights", "Pattern weights and multiplicities");
  CLI::App* op = app.add_subcommand("op", "Generator matrix");
  CLI::App* wigner = app.add_subcommand("wigner", "Fundamental Wigner coefficients");
  CLI::App* verify = app.add_subcommand("verify", "Run verification suites or check operator files");
  for (CLI::App* sub : {dim, patterns, weights, op, wigner, verify}) add_module(sub);
  op->add_option("--gen", job.gen, "Generator i,j");
  op->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "mtx"}));
  wigner->add_option("--shift", job.shift, "Standard coordinate s (lambda_bar = lambda + weight of e_s)")->required();
  verify->add_option("--suite", job.suite, "Suite name");
  verify->add_option("--tol", job.tol, "Tolerance for float (Matrix Market) comparisons");
  verify->add_option("--gen", job.gen, "Generator of Matrix Market files");
  verify->add_option("files", job.files, "Operator files (.json exact, .mtx float)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  try {
    if (*dim) return cmd_dim(job);
    if (*patterns) return cmd_patterns(job);
    if (*weights) return cmd_weights(job);
    if (*op) return cmd_op(job);
    if (*wigner) return cmd_wigner(job);
    if (*verify) return cmd_verify(job);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ShapeError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
