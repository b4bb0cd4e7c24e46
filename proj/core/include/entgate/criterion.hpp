#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "entgate/state.hpp"
#include "entgate/structure.hpp"

namespace entgate {

enum class VerdictKind { kTriviallySeparable, kSeparable, kGenuinelyEntangled, kUnknown };
enum class Reason { kNoPairStructure, kNoRank1Structure, kCorollary3, kOracleExhaustive };
enum class Method { kStructural, kOracle };

std::string_view to_string(VerdictKind kind);
std::string_view to_string(Reason reason);
std::string_view to_string(Method method);

struct Verdict {
  VerdictKind kind = VerdictKind::kUnknown;
  Method method = Method::kStructural;
  std::size_t m = 0;
  int num_qubits = 0;
  /// Non-empty only for TriviallySeparable.
  ConstantQubitReport constant_qubits;
  /// Every pair structure examined on the structural path.
  std::vector<PairStructure> structures;
  /// Present for Separable, and for TriviallySeparable when the stripped
  /// state is itself separable (positions are original labels).
  std::optional<FactorPair> witness;
  std::optional<Reason> reason;
  /// Classification of the state with constant qubits removed.
  std::shared_ptr<const Verdict> refinement;
  /// Original labels of the refinement's qubits.
  std::vector<int> refinement_positions;
  /// Re-classification of each witness factor with at least two qubits.
  std::array<std::shared_ptr<const Verdict>, 2> factor_verdicts;
};

struct ClassifyOptions {
  int oracle_cap = 20;
  bool force_oracle = false;
  /// Re-classify witness factors and stripped states.
  bool refine = true;
};

/// True for m = 2p with p prime (covers m = 4 and m = 6): every non-trivial
/// product then has a two-term factor, so the pair-structure test decides.
bool structural_term_count(std::size_t m);

Verdict classify(const SparseState& state, const ClassifyOptions& opts = {});

/// m == 6 and the six strings form three complete complementary pairs.
/// Throws kWrongTermCount.
bool corollary3_check(const SparseState& state);

struct StructureReport {
  PairStructure structure;
  CoeffMatrix matrix;
  std::vector<ColumnMinor> minors;
  bool rank1 = false;
  std::pair<std::vector<int>, std::vector<int>> index_pattern;
  std::optional<std::string_view> form;  // canonical form matching index_pattern
};

struct FormReport {
  const CanonicalForm* form = nullptr;
  CoeffMatrix matrix;
  bool proportional = false;
};

struct Explanation {
  SparseState state;
  ConstantQubitReport constant_qubits;
  std::vector<StructureReport> structures;
  /// m in {4, 6} only.
  std::vector<FormReport> forms;
  std::optional<bool> corollary3;  // m == 6 only
  Verdict verdict;
};

Explanation explain(const SparseState& state, const ClassifyOptions& opts = {});

}  // namespace entgate
