#include "entgate/criterion.hpp"

#include <algorithm>

#include "entgate/error.hpp"
#include "entgate/oracle.hpp"

namespace entgate {
namespace {

bool is_prime_small(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<int> remap(const std::vector<int>& positions, const std::vector<int>& labels) {
  std::vector<int> out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(labels[static_cast<std::size_t>(p - 1)]);
  return out;
}

void refine_witness(Verdict& v, const ClassifyOptions& opts) {
  if (!opts.refine || !v.witness) return;
  const SparseState* factors[2] = {&v.witness->p_factor, &v.witness->q_factor};
  for (int i = 0; i < 2; ++i) {
    if (factors[i]->num_qubits() >= 2) {
      v.factor_verdicts[static_cast<std::size_t>(i)] =
          std::make_shared<const Verdict>(classify(*factors[i], opts));
    }
  }
}

Verdict structural_verdict(const SparseState& state) {
  Verdict v;
  v.method = Method::kStructural;
  v.m = state.size();
  v.num_qubits = state.num_qubits();
  v.structures = xor_matchings(state);

  bool any_proper = false;
  for (const auto& s : v.structures) {
    if (!s.proper) continue;
    any_proper = true;
    const CoeffMatrix matrix = build_coefficient_matrix(state, s);
    if (rank1_rows(matrix)) {
      v.kind = VerdictKind::kSeparable;
      v.witness = extract_factors(state, s, matrix);
      return v;
    }
  }
  v.kind = VerdictKind::kGenuinelyEntangled;
  if (any_proper) {
    v.reason = Reason::kNoRank1Structure;
  } else if (state.size() == 6 && corollary3_check(state)) {
    v.reason = Reason::kCorollary3;
  } else {
    v.reason = Reason::kNoPairStructure;
  }
  return v;
}

}  // namespace

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kTriviallySeparable: return "TriviallySeparable";
    case VerdictKind::kSeparable: return "Separable";
    case VerdictKind::kGenuinelyEntangled: return "GenuinelyEntangled";
    case VerdictKind::kUnknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(Reason reason) {
  switch (reason) {
    case Reason::kNoPairStructure: return "NoPairStructure";
    case Reason::kNoRank1Structure: return "NoRank1Structure";
    case Reason::kCorollary3: return "Corollary3";
    case Reason::kOracleExhaustive: return "OracleExhaustive";
  }
  return "";
}

std::string_view to_string(Method method) {
  return method == Method::kStructural ? "Structural" : "Oracle";
}

bool structural_term_count(std::size_t m) { return m % 2 == 0 && is_prime_small(m / 2); }

Verdict classify(const SparseState& state, const ClassifyOptions& opts) {
  const int n = state.num_qubits();
  const std::size_t m = state.size();

  ConstantQubitReport report = constant_qubits(state);
  if (!report.empty()) {
    Verdict v;
    v.kind = VerdictKind::kTriviallySeparable;
    v.method = Method::kStructural;
    v.m = m;
    v.num_qubits = n;
    v.constant_qubits = std::move(report);
    if (m == 1 || !opts.refine) return v;

    auto stripped = strip_constant_qubits(state);
    if (stripped.state.num_qubits() < 2) return v;
    auto inner = std::make_shared<const Verdict>(classify(stripped.state, opts));
    v.reason = inner->reason;
    if (inner->witness) {
      const auto& w = *inner->witness;
      v.witness = FactorPair{remap(w.p_positions, stripped.kept_positions), w.p_factor,
                             remap(w.q_positions, stripped.kept_positions), w.q_factor};
    }
    v.refinement = std::move(inner);
    v.refinement_positions = std::move(stripped.kept_positions);
    return v;
  }

  if (n == 1) {
    // a|0> + b|1>: nothing to cut.
    Verdict v;
    v.kind = VerdictKind::kTriviallySeparable;
    v.m = m;
    v.num_qubits = n;
    return v;
  }

  Verdict v;
  if (!opts.force_oracle && structural_term_count(m)) {
    v = structural_verdict(state);
  } else {
    v = oracle_classify(state, opts.oracle_cap);
  }
  refine_witness(v, opts);
  return v;
}

bool corollary3_check(const SparseState& state) {
  if (state.size() != 6) {
    throw Error(ErrorCode::kWrongTermCount, "expected 6 terms, got " + std::to_string(state.size()));
  }
  const std::uint64_t full = all_ones(state.num_qubits());
  return std::all_of(state.terms().begin(), state.terms().end(), [&](const Term& t) {
    return state.amplitude_of(t.basis.bits() ^ full) != nullptr;
  });
}

Explanation explain(const SparseState& state, const ClassifyOptions& opts) {
  Explanation e{state, constant_qubits(state), {}, {}, std::nullopt, classify(state, opts)};
  const std::size_t m = state.size();
  if (m >= 4 && m % 2 == 0) {
    for (auto& s : xor_matchings(state)) {
      StructureReport r;
      r.matrix = build_coefficient_matrix(state, s);
      r.minors = column_minors(r.matrix);
      r.rank1 = std::all_of(r.minors.begin(), r.minors.end(),
                            [](const ColumnMinor& c) { return c.value.is_zero(); });
      r.index_pattern = structure_index_pattern(state, s);
      r.form = match_canonical_form(m, r.index_pattern);
      r.structure = std::move(s);
      e.structures.push_back(std::move(r));
    }
  }
  for (const auto& form : canonical_forms(m)) {
    FormReport f;
    f.form = &form;
    f.matrix = form_matrix(state, form);
    f.proportional = rank1_rows(f.matrix);
    e.forms.push_back(std::move(f));
  }
  if (m == 6) e.corollary3 = corollary3_check(state);
  return e;
}

}  // namespace entgate
