// entgate: classify sparse n-qubit pure states as trivially separable,
// separable (with a factorization) or genuinely entangled.

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entgate/criterion.hpp"
#include "entgate/error.hpp"
#include "entgate/fixtures.hpp"
#include "entgate/generate.hpp"
#include "entgate/ketparse.hpp"
#include "entgate/oracle.hpp"
#include "entgate/report.hpp"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using entgate::VerdictKind;

constexpr int kExitSeparable = 0;
constexpr int kExitEntangled = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInputError = 64;

constexpr const char* kExitCodes =
    "Exit status:\n"
    "  0   separable or trivially separable (selftest: all fixtures pass)\n"
    "  1   genuinely entangled (selftest: a fixture failed)\n"
    "  2   unknown: the exhaustive check was needed but n exceeds the oracle cap\n"
    "  64  input error (syntax, width, infeasible generator parameters)\n"
    "ENTGATE_ORACLE_CAP overrides the default oracle cap of 20; --oracle-cap wins over it.";

struct RunConfig {
  std::string command;
  std::string input = "-";
  std::string format;  // empty: json when stdout is not a terminal
  std::optional<int> oracle_cap;
  bool force_oracle = false;
  std::uint64_t seed = 0;
  std::string kind = "separable";
  int n = 6;
  std::size_t m = 6;
  std::string corrupt_fixture;
};

bool use_json(const RunConfig& cfg) {
  if (cfg.format.empty()) return isatty(STDOUT_FILENO) == 0;
  return cfg.format == "json";
}

int effective_cap(const RunConfig& cfg) {
  if (cfg.oracle_cap) return *cfg.oracle_cap;
  if (const char* env = std::getenv("ENTGATE_ORACLE_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "entgate: ignoring invalid ENTGATE_ORACLE_CAP='" << env << "'\n";
    }
  }
  return entgate::kDefaultOracleCap;
}

int exit_code_for(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kTriviallySeparable:
    case VerdictKind::kSeparable: return kExitSeparable;
    case VerdictKind::kGenuinelyEntangled: return kExitEntangled;
    case VerdictKind::kUnknown: return kExitUnknown;
  }
  return kExitUnknown;
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_input(const std::string& path) {
  if (path == "-") return read_all(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_all(in);
}

struct Outcome {
  int code;
  std::string text;  // rendered result, or error message
  std::optional<nlohmann::ordered_json> json;
};

// Classifies one document according to cfg.command.
Outcome process_document(const RunConfig& cfg, const std::string& source, bool json) {
  const auto doc = entgate::parse_document(source);
  entgate::ClassifyOptions opts;
  opts.oracle_cap = effective_cap(cfg);
  opts.force_oracle = cfg.force_oracle;

  if (cfg.command == "explain") {
    const auto e = entgate::explain(doc.parsed, opts);
    const int code = exit_code_for(e.verdict.kind);
    if (json) return {code, {}, nlohmann::ordered_json::parse(entgate::explanation_to_json(e))};
    return {code, entgate::explanation_to_text(e), std::nullopt};
  }

  entgate::Verdict v;
  if (cfg.command == "oracle") {
    v = entgate::oracle_classify(doc.parsed, opts.oracle_cap);
  } else {
    v = entgate::classify(doc.parsed, opts);
  }
  const int code = exit_code_for(v.kind);
  if (json) return {code, {}, nlohmann::ordered_json::parse(entgate::verdict_to_json(v))};
  return {code, entgate::verdict_to_text(v), std::nullopt};
}

std::string describe_error(const std::string& label, const std::exception& e) {
  return "entgate: " + label + ": " + e.what();
}

int severity(int code) {
  switch (code) {
    case kExitInputError: return 3;
    case kExitUnknown: return 2;
    case kExitEntangled: return 1;
    default: return 0;
  }
}

int run_single(const RunConfig& cfg) {
  const bool json = use_json(cfg);
  const std::string label = cfg.input == "-" ? "<stdin>" : cfg.input;
  try {
    const Outcome out = process_document(cfg, read_input(cfg.input), json);
    if (out.json) {
      std::cout << out.json->dump(2) << "\n";
    } else {
      std::cout << out.text;
    }
    return out.code;
  } catch (const std::exception& e) {
    std::cerr << describe_error(label, e) << "\n";
    return kExitInputError;
  }
}

int run_batch(const RunConfig& cfg) {
  const bool json = use_json(cfg);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(cfg.input)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  int worst = kExitSeparable;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& file : files) {
    int code = kExitInputError;
    nlohmann::ordered_json entry;
    entry["file"] = file.filename().string();
    try {
      Outcome out = process_document(cfg, read_input(file.string()), json);
      code = out.code;
      if (json) {
        entry["result"] = std::move(*out.json);
      } else {
        std::cout << "== " << file.filename().string() << "\n" << out.text;
      }
    } catch (const std::exception& e) {
      if (json) {
        entry["error"] = e.what();
      } else {
        std::cout << "== " << file.filename().string() << "\n";
      }
      std::cerr << describe_error(file.string(), e) << "\n";
    }
    if (json) results.push_back(std::move(entry));
    if (severity(code) > severity(worst)) worst = code;
  }
  if (json) std::cout << results.dump(2) << "\n";
  return worst;
}

int run_gen(const RunConfig& cfg) {
  try {
    entgate::GenParams params;
    params.kind = entgate::parse_gen_kind(cfg.kind);
    params.num_qubits = cfg.n;
    params.m = cfg.m;
    params.seed = cfg.seed;
    const auto state = entgate::generate(params);
    std::cout << "# entgate gen kind=" << cfg.kind << " n=" << cfg.n;
    if (params.kind != entgate::GenKind::kCompletePairs) std::cout << " m=" << cfg.m;
    std::cout << " seed=" << cfg.seed << "\n";
    std::cout << "qubits: " << state.num_qubits() << "\n" << entgate::render_state(state) << "\n";
    return kExitSeparable;
  } catch (const std::exception& e) {
    std::cerr << "entgate: gen: " << e.what() << "\n";
    return kExitInputError;
  }
}

int run_selftest(const RunConfig& cfg) {
  auto fixtures = entgate::reference_fixtures();
  if (!cfg.corrupt_fixture.empty()) {
    for (auto& f : fixtures) {
      if (f.name == cfg.corrupt_fixture) {
        f.expected_kind = f.expected_kind == VerdictKind::kSeparable ? VerdictKind::kGenuinelyEntangled
                                                                     : VerdictKind::kSeparable;
      }
    }
  }
  const auto results = entgate::run_fixtures(fixtures);
  if (use_json(cfg)) {
    std::cout << entgate::fixture_results_to_json(results) << "\n";
  } else {
    std::cout << entgate::fixture_results_to_text(results);
  }
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entgate: separability classifier for sparse n-qubit pure states"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub, bool takes_input) {
    sub->add_option("--format", cfg.format, "Output format (default: json when piped, text on a terminal)")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--oracle-cap", cfg.oracle_cap, "Largest n for the exhaustive check")
        ->check(CLI::Range(2, entgate::kMaxQubits));
    sub->add_flag("--force-oracle", cfg.force_oracle, "Skip the pair-structure test");
    if (takes_input) {
      sub->add_option("input", cfg.input, "State file, directory of state files, or - for stdin");
    }
  };

  auto* classify = app.add_subcommand("classify", "Classify a state");
  add_common(classify, true);
  auto* explain = app.add_subcommand("explain", "Show pair structures, matrices, minors and the verdict");
  add_common(explain, true);
  auto* oracle = app.add_subcommand("oracle", "Classify with the exhaustive bipartition check only");
  add_common(oracle, true);

  auto* gen = app.add_subcommand("gen", "Generate a state document");
  gen->add_option("--kind", cfg.kind, "separable | random | complete-pairs")
      ->check(CLI::IsMember({"separable", "random", "complete-pairs"}));
  gen->add_option("--n", cfg.n, "Qubit count")->check(CLI::Range(1, entgate::kMaxQubits));
  gen->add_option("--m", cfg.m, "Number of non-zero coefficients");
  gen->add_option("--seed", cfg.seed, "PRNG seed (mt19937_64)");
  gen->add_option("--format", cfg.format, "Ignored; gen always writes a state document");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in reference states");
  selftest->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  selftest->add_option("--corrupt-fixture", cfg.corrupt_fixture)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "gen") return run_gen(cfg);
  if (cfg.command == "selftest") return run_selftest(cfg);
  if (cfg.input != "-" && fs::is_directory(cfg.input)) return run_batch(cfg);
  return run_single(cfg);
}
