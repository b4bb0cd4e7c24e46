// Acceptance suite: one PASS/FAIL line per criterion. Every decision is
// exact; the only tolerances are the wall-clock budgets pinned below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "entgate/criterion.hpp"
#include "entgate/error.hpp"
#include "entgate/fixtures.hpp"
#include "entgate/generate.hpp"
#include "entgate/ketparse.hpp"
#include "entgate/oracle.hpp"
#include "entgate/structure.hpp"

namespace {

using namespace entgate;
using Clock = std::chrono::steady_clock;
using Millis = std::chrono::duration<double, std::milli>;

constexpr double kSixTermBudgetMs = 10.0;
constexpr double kEquivalenceBudgetMs = 60'000.0;
constexpr double kOracleBudgetMs = 10'000.0;
constexpr int kEquivalenceStates = 10'000;
constexpr int kPropertyStates = 1'000;
constexpr int kFuzzInputs = 100'000;
constexpr std::uint64_t kSeed = 20260418;

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

double elapsed_ms(Clock::time_point start) { return Millis(Clock::now() - start).count(); }

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", ms);
  return buf;
}

// n in [lo, 10] chosen so that both generators can build an m-term state.
int draw_n(Rng& rng, std::size_t m) {
  const int lo = m == 4 ? 3 : 4;
  return static_cast<int>(rng.between(lo, 10));
}

SparseState random_amplitudes(Rng& rng, const SparseState& s) {
  std::vector<Term> terms;
  for (const auto& t : s.terms()) terms.push_back({t.basis, random_scalar(rng)});
  return SparseState(s.num_qubits(), std::move(terms));
}

SparseState mixed_state(Rng& rng, int i) {
  static constexpr std::size_t kMs[] = {4, 6, 10};
  const std::size_t m = kMs[rng.below(3)];
  const int n = draw_n(rng, m);
  if (i % 2 == 0) return gen_separable(rng, n, m);
  return random_amplitudes(rng, gen_random(rng, n, m));
}

Outcome criterion_fixtures() {
  Outcome o;
  const auto results = run_fixtures(reference_fixtures());
  for (const auto& r : results) {
    if (!r.passed) o.fail(r.name + ": " + (r.failures.empty() ? "failed" : r.failures.front()));
  }
  double worst = 0;
  for (const auto& f : reference_fixtures()) {
    if (f.name != "Psi6" && f.name != "Xi6") continue;
    const auto start = Clock::now();
    (void)classify(f.state);
    const double ms = elapsed_ms(start);
    worst = std::max(worst, ms);
    if (ms >= kSixTermBudgetMs) o.fail(f.name + " took " + fmt_ms(ms));
  }
  if (o.passed) o.detail = std::to_string(results.size()) + " fixtures, six-term worst " + fmt_ms(worst);
  return o;
}

Outcome criterion_equivalence() {
  Outcome o;
  Rng rng(kSeed);
  const auto start = Clock::now();
  int separable = 0;
  for (int i = 0; i < kEquivalenceStates && o.passed; ++i) {
    const auto s = mixed_state(rng, i);
    ClassifyOptions opts;
    opts.refine = false;
    const auto structural = classify(s, opts);
    const auto oracle = oracle_classify(s);
    if (structural.kind != oracle.kind) {
      o.fail("disagreement on " + render_state(s) + ": " + std::string(to_string(structural.kind)) + " vs " +
             std::string(to_string(oracle.kind)));
    }
    separable += structural.kind == VerdictKind::kSeparable ? 1 : 0;
  }
  const double ms = elapsed_ms(start);
  if (ms >= kEquivalenceBudgetMs) o.fail("took " + fmt_ms(ms));
  if (o.passed) {
    o.detail = std::to_string(kEquivalenceStates) + " states agree (" + std::to_string(separable) +
               " separable) in " + fmt_ms(ms);
  }
  return o;
}

Outcome criterion_canonical_forms() {
  Outcome o;
  Rng rng(kSeed + 3);
  for (int i = 0; i < kPropertyStates && o.passed; ++i) {
    const auto s = gen_separable(rng, static_cast<int>(rng.between(3, 10)), 6);
    if (canonical_form_index(s).empty()) o.fail("empty form index for " + render_state(s));
    bool matched = false;
    for (const auto& st : xor_matchings(s)) {
      if (!st.proper || !rank1_rows(build_coefficient_matrix(s, st))) continue;
      matched = matched || match_canonical_form(6, structure_index_pattern(s, st)).has_value();
    }
    if (!matched) o.fail("no canonical pattern for " + render_state(s));
  }
  if (o.passed) o.detail = std::to_string(kPropertyStates) + " separable six-term states";
  return o;
}

Outcome criterion_complete_pairs() {
  Outcome o;
  Rng rng(kSeed + 4);
  for (int i = 0; i < kPropertyStates && o.passed; ++i) {
    const auto s = gen_complete_pairs(rng, static_cast<int>(rng.between(3, 16)));
    for (const auto& st : xor_matchings(s)) {
      if (st.proper) o.fail("proper structure in " + render_state(s));
    }
    if (classify(s).kind != VerdictKind::kGenuinelyEntangled) o.fail("not entangled: " + render_state(s));
  }
  if (o.passed) o.detail = std::to_string(kPropertyStates) + " complete-pairs states";
  return o;
}

Outcome criterion_invariance() {
  Outcome o;
  Rng rng(kSeed + 5);
  auto check = [&](const char* name, const std::function<SparseState(const SparseState&)>& transform) {
    for (int i = 0; i < kPropertyStates && o.passed; ++i) {
      const auto s = mixed_state(rng, i);
      const auto t = transform(s);
      if (classify(s).kind != classify(t).kind) o.fail(std::string(name) + " changed the verdict of " + render_state(s));
    }
  };
  check("scaling", [&](const SparseState& s) { return scale_state(s, random_scalar(rng)); });
  check("relabeling", [&](const SparseState& s) { return permute_qubits(s, random_permutation(rng, s.num_qubits())); });
  check("complement", [](const SparseState& s) { return complement_bits(s); });
  if (o.passed) o.detail = "3 x " + std::to_string(kPropertyStates) + " states";
  return o;
}

Outcome criterion_parser() {
  Outcome o;
  Rng rng(kSeed + 6);
  for (int i = 0; i < kPropertyStates && o.passed; ++i) {
    const auto s = mixed_state(rng, i);
    const std::string text = render_state(s);
    try {
      if (!(parse_state(text) == s)) o.fail("round trip changed " + text);
    } catch (const std::exception& e) {
      o.fail("round trip threw on " + text + ": " + e.what());
    }
  }
  static const char* kTokens[] = {"|", ">", "0", "1", "+", "-", "*", "/", "(", ")", "sqrt(", "i", "3",
                                  "qubits:", " ", "#", "|0>", "|1>", "|01>", "|10>", "sqrt(2)"};
  int accepted = 0;
  for (int i = 0; i < kFuzzInputs && o.passed; ++i) {
    std::string input;
    const auto len = rng.between(0, 24);
    for (int k = 0; k < len; ++k) {
      if (i % 2 == 0) {
        input.push_back(static_cast<char>(rng.below(256)));
      } else {
        input += kTokens[rng.below(std::size(kTokens))];
      }
    }
    try {
      parse_document(input);
      ++accepted;
    } catch (const ParseError&) {
    } catch (const std::exception& e) {
      o.fail(std::string("non-parse exception: ") + e.what());
    }
  }
  if (o.passed) {
    o.detail = std::to_string(kPropertyStates) + " round trips, " + std::to_string(kFuzzInputs) + " fuzz inputs (" +
               std::to_string(accepted) + " accepted)";
  }
  return o;
}

Outcome criterion_oracle_performance() {
  Outcome o;
  Rng rng(kSeed + 7);
  const auto s = random_amplitudes(rng, gen_random(rng, 20, 6));
  const auto start = Clock::now();
  const auto v = oracle_classify(s);
  const double ms = elapsed_ms(start);
  if (v.kind == VerdictKind::kUnknown) o.fail("oracle returned Unknown");
  if (ms >= kOracleBudgetMs) o.fail("took " + fmt_ms(ms));
  if (o.passed) o.detail = "n=20 m=6 " + std::string(to_string(v.kind)) + " in " + fmt_ms(ms);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"reference states", criterion_fixtures},
      {"structural and exhaustive verdicts agree", criterion_equivalence},
      {"six-term canonical-form law", criterion_canonical_forms},
      {"complete pairs are entangled", criterion_complete_pairs},
      {"verdict invariance", criterion_invariance},
      {"parser round trip and fuzzing", criterion_parser},
      {"exhaustive check at n = 20", criterion_oracle_performance},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s  criterion %zu: %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
    failures += o.passed ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
