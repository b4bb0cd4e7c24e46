#include "entgate/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "entgate/error.hpp"

namespace entgate {
namespace {

std::size_t count_distinct(std::vector<std::uint64_t>& keys) {
  std::sort(keys.begin(), keys.end());
  return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

std::size_t key_index(const std::vector<std::uint64_t>& keys, std::uint64_t key) {
  return static_cast<std::size_t>(std::lower_bound(keys.begin(), keys.end(), key) - keys.begin());
}

}  // namespace

Bipartition bipartition_at(int num_qubits, std::uint64_t index) {
  std::uint64_t mask = position_bit(num_qubits, 1);
  for (int j = 0; j + 2 <= num_qubits; ++j) {
    if ((index >> j) & 1U) mask |= position_bit(num_qubits, j + 2);
  }
  return {num_qubits, mask};
}

std::vector<Bipartition> bipartitions(int num_qubits, int cap) {
  if (num_qubits < 2) throw Error(ErrorCode::kInvalidArgument, "bipartitions need n >= 2");
  if (num_qubits > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "n = " + std::to_string(num_qubits) + " exceeds oracle cap " + std::to_string(cap));
  }
  const std::uint64_t count = (std::uint64_t{1} << (num_qubits - 1)) - 1;
  std::vector<Bipartition> out;
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) out.push_back(bipartition_at(num_qubits, c));
  return out;
}

SideGrid side_coefficient_matrix(const SparseState& state, const Bipartition& b) {
  const int n = state.num_qubits();
  const auto s_pos = b.s_positions();
  const auto sc_pos = b.sc_positions();
  SideGrid grid;
  for (const auto& t : state.terms()) {
    grid.row_keys.push_back(gather_bits(t.basis.bits(), n, s_pos));
    grid.col_keys.push_back(gather_bits(t.basis.bits(), n, sc_pos));
  }
  std::vector<std::uint64_t> rows = grid.row_keys;
  std::vector<std::uint64_t> cols = grid.col_keys;
  rows.resize(count_distinct(rows));
  cols.resize(count_distinct(cols));
  for (std::size_t i = 0; i < state.size(); ++i) {
    grid.cells.push_back({key_index(rows, grid.row_keys[i]), key_index(cols, grid.col_keys[i]),
                          state[i].amplitude});
  }
  grid.row_keys = std::move(rows);
  grid.col_keys = std::move(cols);
  return grid;
}

bool is_rank_le_1(const SideGrid& grid) {
  const std::size_t r = grid.row_keys.size();
  const std::size_t c = grid.col_keys.size();
  // Cells are distinct, so a full rectangle is exactly r * c of them; any
  // hole next to two non-zero cells gives a non-vanishing minor.
  if (grid.cells.size() != r * c) return false;
  std::vector<const ExactScalar*> dense(r * c, nullptr);
  for (const auto& cell : grid.cells) dense[cell.row * c + cell.col] = &cell.value;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = i + 1; k < r; ++k) {
      for (std::size_t j = 0; j < c; ++j) {
        for (std::size_t l = j + 1; l < c; ++l) {
          const auto minor = cross_minor(*dense[i * c + j], *dense[i * c + l], *dense[k * c + j],
                                         *dense[k * c + l]);
          if (!minor.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

std::optional<Bipartition> first_separable_cut(const SparseState& state) {
  const int n = state.num_qubits();
  if (n < 2) return std::nullopt;
  const std::size_t m = state.size();
  const std::uint64_t full = all_ones(n);
  const std::uint64_t count = (std::uint64_t{1} << (n - 1)) - 1;

  std::vector<std::uint64_t> rows(m);
  std::vector<std::uint64_t> cols(m);
  for (std::uint64_t c = 0; c < count; ++c) {
    const Bipartition b = bipartition_at(n, c);
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint64_t bits = state[i].basis.bits();
      rows[i] = bits & b.s_mask;
      cols[i] = bits & full & ~b.s_mask;
    }
    // Cheap combinatorial-rectangle filter before any exact arithmetic.
    if (count_distinct(rows) * count_distinct(cols) != m) continue;
    if (is_rank_le_1(side_coefficient_matrix(state, b))) return b;
  }
  return std::nullopt;
}

FactorPair factor_at_cut(const SparseState& state, const Bipartition& b) {
  const SideGrid grid = side_coefficient_matrix(state, b);
  if (!is_rank_le_1(grid)) throw Error(ErrorCode::kNotRank1, "cut is not a product cut");
  const std::size_t r = grid.row_keys.size();
  const std::size_t c = grid.col_keys.size();
  std::vector<const ExactScalar*> dense(r * c, nullptr);
  for (const auto& cell : grid.cells) dense[cell.row * c + cell.col] = &cell.value;

  const auto s_pos = b.s_positions();
  const auto sc_pos = b.sc_positions();
  const ExactScalar pivot_inv = dense[0]->inverse();

  std::vector<Term> s_terms;
  for (std::size_t i = 0; i < r; ++i) {
    s_terms.push_back({BasisString(static_cast<int>(s_pos.size()), grid.row_keys[i]),
                       i == 0 ? ExactScalar(1L) : *dense[i * c] * pivot_inv});
  }
  std::vector<Term> sc_terms;
  for (std::size_t j = 0; j < c; ++j) {
    sc_terms.push_back({BasisString(static_cast<int>(sc_pos.size()), grid.col_keys[j]), *dense[j]});
  }
  FactorPair f{s_pos, SparseState(static_cast<int>(s_pos.size()), std::move(s_terms)), sc_pos,
               SparseState(static_cast<int>(sc_pos.size()), std::move(sc_terms))};
  if (!(f.expand() == state)) throw std::logic_error("oracle witness does not reproduce the state");
  return f;
}

Verdict oracle_classify(const SparseState& state, int cap) {
  const int n = state.num_qubits();
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "oracle needs at least two qubits");
  Verdict v;
  v.method = Method::kOracle;
  v.m = state.size();
  v.num_qubits = n;

  v.constant_qubits = constant_qubits(state);
  if (!v.constant_qubits.empty()) {
    v.kind = VerdictKind::kTriviallySeparable;
    return v;
  }
  if (n > cap) {
    v.kind = VerdictKind::kUnknown;
    return v;
  }
  if (auto cut = first_separable_cut(state)) {
    v.kind = VerdictKind::kSeparable;
    v.witness = factor_at_cut(state, *cut);
  } else {
    v.kind = VerdictKind::kGenuinelyEntangled;
    v.reason = Reason::kOracleExhaustive;
  }
  return v;
}

}  // namespace entgate
