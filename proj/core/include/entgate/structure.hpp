#pragma once

// Partially complementary pair structures.
//
// A pair structure splits the basis strings of a state into k pairs that all
// differ by the same XOR mask d. With P = support(d) and Q its complement,
// every string restricted to P is one of two complementary patterns
// {gamma, ~gamma}, and the k pairs carry k distinct Q patterns. The state is a
// product across P|Q exactly when the 2 x k coefficient matrix (rows gamma and
// ~gamma, columns the Q patterns) has rank one.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "entgate/state.hpp"

namespace entgate {

struct PairStructure {
  int num_qubits = 0;
  std::uint64_t mask = 0;  // d
  /// (low, high) with low < high and low ^ high == mask; ordered by Q pattern.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::vector<int> p_positions;  // support of d, ascending
  std::vector<int> q_positions;  // complement, ascending
  /// Bits of gamma at P positions, in place (subset of `mask`).
  std::uint64_t gamma = 0;
  /// Q patterns in place (subset of ~mask), strictly increasing. Empty for
  /// improper structures, whose pairs are ordered by their low string.
  std::vector<std::uint64_t> q_values;
  /// Q non-empty.
  bool proper = false;

  std::size_t size() const noexcept { return pairs.size(); }
};

/// 2 x k grid; row 0 is the gamma side, columns follow q_values.
struct CoeffMatrix {
  std::array<std::vector<ExactScalar>, 2> rows;

  std::size_t cols() const noexcept { return rows[0].size(); }
  const ExactScalar& at(std::size_t r, std::size_t c) const { return rows[r][c]; }
};

/// Two factors whose tensor product is the original state. `p_positions` and
/// `q_positions` are the original qubit labels of each factor's qubits, in the
/// factor's own qubit order.
struct FactorPair {
  std::vector<int> p_positions;
  SparseState p_factor;
  std::vector<int> q_positions;
  SparseState q_factor;

  /// Tensor product mapped back to the original labels.
  SparseState expand() const;
};

/// All constant-XOR perfect matchings whose P restrictions form a single
/// complementary pair, sorted by d. Improper ones (d all ones) are included
/// with proper == false. Throws kOddCount, kDuplicateBasis,
/// kInvalidArgument (fewer than 4 strings or mixed widths).
std::vector<PairStructure> xor_matchings(std::span<const BasisString> basis);
std::vector<PairStructure> xor_matchings(const SparseState& state);

/// Throws kStructureMismatch when a required term is missing.
CoeffMatrix build_coefficient_matrix(const SparseState& state, const PairStructure& s);

/// Every 2 x 2 minor vanishes.
bool rank1_rows(const CoeffMatrix& m);

/// Minors for column pairs (i, j), i < j, in lexicographic order.
struct ColumnMinor {
  std::size_t i;
  std::size_t j;
  ExactScalar value;
};
std::vector<ColumnMinor> column_minors(const CoeffMatrix& m);

/// alpha = (1, M10/M00), beta = row 0. Throws kNotRank1, kImproperStructure,
/// kDivisionUnsupported. The expansion is checked against `state`.
FactorPair extract_factors(const SparseState& state, const PairStructure& s, const CoeffMatrix& m);

/// Fixed index patterns for the sorted coefficients b_1..b_m: row 0 and row 1
/// of the coefficient matrix as 1-based indices.
struct CanonicalForm {
  std::string_view name;
  std::vector<int> row0;
  std::vector<int> row1;
};

/// The four 2 x 3 forms for m == 6 (mt-1, mt-2, mt-3, mt-5) or the two
/// 2 x 2 forms for m == 4 (m4-1, m4-2). Empty for any other m.
const std::vector<CanonicalForm>& canonical_forms(std::size_t m);

/// Builds the 2 x k matrix of a form from the sorted amplitudes.
CoeffMatrix form_matrix(const SparseState& state, const CanonicalForm& form);

/// Names of the m == 6 forms with proportional rows. Throws kWrongTermCount.
std::vector<std::string_view> canonical_form_index(const SparseState& state);

/// Same, for m in {4, 6}.
std::vector<std::string_view> proportional_forms(const SparseState& state);

/// The sorted-index pattern a structure induces: (row 0 indices, row 1
/// indices), 1-based.
std::pair<std::vector<int>, std::vector<int>> structure_index_pattern(const SparseState& state,
                                                                      const PairStructure& s);

/// Name of the canonical form whose pattern equals `pattern`, if any.
std::optional<std::string_view> match_canonical_form(
    std::size_t m, const std::pair<std::vector<int>, std::vector<int>>& pattern);

/// Re-checks every PairStructure invariant against `basis` independently of
/// the enumeration.
bool validate_structure(std::span<const BasisString> basis, const PairStructure& s);

}  // namespace entgate
