#pragma once

// Exhaustive separability check: a state is a product across the cut S|Sc
// exactly when its amplitudes, arranged as a matrix with rows indexed by the
// S restriction and columns by the Sc restriction, have rank at most one.

#include <cstdint>
#include <vector>

#include "entgate/criterion.hpp"
#include "entgate/state.hpp"

namespace entgate {

inline constexpr int kDefaultOracleCap = 20;

/// S always contains qubit 1.
struct Bipartition {
  int num_qubits = 0;
  std::uint64_t s_mask = 0;

  std::vector<int> s_positions() const { return mask_positions(num_qubits, s_mask); }
  std::vector<int> sc_positions() const {
    return mask_positions(num_qubits, all_ones(num_qubits) & ~s_mask);
  }
};

/// Canonical bipartition with index c: position j + 2 is in S iff bit j of c
/// is set. Valid for 0 <= c < 2^(n-1) - 1.
Bipartition bipartition_at(int num_qubits, std::uint64_t index);

/// All 2^(n-1) - 1 bipartitions in canonical order. Throws kCapExceeded for
/// n > cap and kInvalidArgument for n < 2.
std::vector<Bipartition> bipartitions(int num_qubits, int cap = kDefaultOracleCap);

/// Sparse amplitude grid for one cut. Row and column keys are the packed S
/// and Sc restrictions (see gather_bits), ascending.
struct SideGrid {
  struct Cell {
    std::size_t row;
    std::size_t col;
    ExactScalar value;
  };
  std::vector<std::uint64_t> row_keys;
  std::vector<std::uint64_t> col_keys;
  std::vector<Cell> cells;
};

SideGrid side_coefficient_matrix(const SparseState& state, const Bipartition& b);

/// Rank <= 1: the non-zero support is a full rectangle and every 2 x 2 minor
/// on it vanishes.
bool is_rank_le_1(const SideGrid& grid);

/// Verdict with method Oracle. TriviallySeparable when a qubit is constant,
/// Unknown when n > cap, otherwise Separable at the lowest canonical cut with
/// rank <= 1 or GenuinelyEntangled (reason OracleExhaustive). Throws
/// kInvalidArgument for n < 2.
Verdict oracle_classify(const SparseState& state, int cap = kDefaultOracleCap);

/// Lowest canonical cut with rank <= 1, if any, ignoring the cap.
std::optional<Bipartition> first_separable_cut(const SparseState& state);

/// Witness at a rank <= 1 cut; the expansion is checked against `state`.
FactorPair factor_at_cut(const SparseState& state, const Bipartition& b);

}  // namespace entgate
