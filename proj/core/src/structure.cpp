#include "entgate/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "entgate/error.hpp"

namespace entgate {
namespace {

std::vector<std::uint64_t> sorted_bits(std::span<const BasisString> basis, int& width) {
  if (basis.size() % 2 != 0) {
    throw Error(ErrorCode::kOddCount, std::to_string(basis.size()) + " basis strings");
  }
  if (basis.size() < 4) throw Error(ErrorCode::kInvalidArgument, "need at least two pairs");
  width = basis.front().width();
  std::vector<std::uint64_t> bits;
  bits.reserve(basis.size());
  for (const auto& b : basis) {
    if (b.width() != width) throw Error(ErrorCode::kWidthMismatch, "mixed basis widths");
    bits.push_back(b.bits());
  }
  std::sort(bits.begin(), bits.end());
  if (std::adjacent_find(bits.begin(), bits.end()) != bits.end()) {
    throw Error(ErrorCode::kDuplicateBasis, "repeated basis string");
  }
  return bits;
}

bool contains(const std::vector<std::uint64_t>& sorted, std::uint64_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// The unique matching with XOR mask d, if it exists and its P restrictions
// are a single complementary pair. With d all ones every pair is complete
// and the restriction does not apply.
std::optional<PairStructure> structure_for_mask(const std::vector<std::uint64_t>& bits, int n,
                                                std::uint64_t d) {
  const bool complete = d == all_ones(n);
  const std::uint64_t p_gamma = bits.front() & d;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t x : bits) {
    const std::uint64_t partner = x ^ d;
    if (!contains(bits, partner)) return std::nullopt;
    const std::uint64_t p_part = x & d;
    if (!complete && p_part != p_gamma && p_part != (p_gamma ^ d)) return std::nullopt;
    if (x < partner) pairs.emplace_back(x, partner);
  }
  const std::uint64_t q_mask = all_ones(n) & ~d;
  std::sort(pairs.begin(), pairs.end(), [q_mask](const auto& a, const auto& b) {
    const std::uint64_t qa = a.first & q_mask, qb = b.first & q_mask;
    return qa != qb ? qa < qb : a.first < b.first;
  });

  PairStructure s;
  s.num_qubits = n;
  s.mask = d;
  s.p_positions = mask_positions(n, d);
  s.q_positions = mask_positions(n, q_mask);
  s.proper = !complete;
  for (const auto& [low, high] : pairs) {
    if (complete) break;
    const std::uint64_t q = low & q_mask;
    // Two pairs sharing a Q pattern would repeat both basis strings.
    if (!s.q_values.empty() && s.q_values.back() >= q) {
      throw std::logic_error("pair structure with repeated Q pattern");
    }
    s.q_values.push_back(q);
  }
  s.pairs = std::move(pairs);
  s.gamma = s.pairs.front().first & d;
  return s;
}

}  // namespace

SparseState FactorPair::expand() const {
  const int n = static_cast<int>(p_positions.size() + q_positions.size());
  std::vector<Term> terms;
  terms.reserve(p_factor.size() * q_factor.size());
  for (const auto& a : p_factor.terms()) {
    const std::uint64_t p_bits = scatter_bits(a.basis.bits(), n, p_positions);
    for (const auto& b : q_factor.terms()) {
      terms.push_back({BasisString(n, p_bits | scatter_bits(b.basis.bits(), n, q_positions)),
                       a.amplitude * b.amplitude});
    }
  }
  return SparseState(n, std::move(terms));
}

std::vector<PairStructure> xor_matchings(std::span<const BasisString> basis) {
  int n = 0;
  const auto bits = sorted_bits(basis, n);
  // In any constant-XOR matching, bits[0] is paired with some other string,
  // which fixes d; the matching for a given d is then forced.
  std::vector<std::uint64_t> masks;
  for (std::size_t j = 1; j < bits.size(); ++j) masks.push_back(bits[0] ^ bits[j]);
  std::sort(masks.begin(), masks.end());

  std::vector<PairStructure> out;
  for (std::uint64_t d : masks) {
    if (auto s = structure_for_mask(bits, n, d)) out.push_back(std::move(*s));
  }
  return out;
}

std::vector<PairStructure> xor_matchings(const SparseState& state) {
  std::vector<BasisString> basis;
  basis.reserve(state.size());
  for (const auto& t : state.terms()) basis.push_back(t.basis);
  return xor_matchings(basis);
}

CoeffMatrix build_coefficient_matrix(const SparseState& state, const PairStructure& s) {
  if (state.num_qubits() != s.num_qubits || state.size() != 2 * s.size()) {
    throw Error(ErrorCode::kStructureMismatch, "structure does not belong to this state");
  }
  // The low string of every pair carries gamma on P: it has the top bit of d
  // clear, and so does gamma.
  CoeffMatrix m;
  for (const auto& [low, high] : s.pairs) {
    const ExactScalar* top = state.amplitude_of(low);
    const ExactScalar* bottom = state.amplitude_of(high);
    if (top == nullptr || bottom == nullptr) {
      throw Error(ErrorCode::kStructureMismatch, "structure names a basis string absent from the state");
    }
    m.rows[0].push_back(*top);
    m.rows[1].push_back(*bottom);
  }
  return m;
}

std::vector<ColumnMinor> column_minors(const CoeffMatrix& m) {
  std::vector<ColumnMinor> out;
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      out.push_back({i, j, cross_minor(m.at(0, i), m.at(0, j), m.at(1, i), m.at(1, j))});
    }
  }
  return out;
}

bool rank1_rows(const CoeffMatrix& m) {
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (!cross_minor(m.at(0, i), m.at(0, j), m.at(1, i), m.at(1, j)).is_zero()) return false;
    }
  }
  return true;
}

FactorPair extract_factors(const SparseState& state, const PairStructure& s, const CoeffMatrix& m) {
  if (!s.proper) throw Error(ErrorCode::kImproperStructure, "structure has no Q qubits");
  if (!rank1_rows(m)) throw Error(ErrorCode::kNotRank1, "coefficient rows are not proportional");

  const int n = s.num_qubits;
  const auto p_width = static_cast<int>(s.p_positions.size());
  const auto q_width = static_cast<int>(s.q_positions.size());

  const ExactScalar alpha2 = m.at(1, 0) * m.at(0, 0).inverse();
  std::vector<Term> p_terms{
      {BasisString(p_width, gather_bits(s.gamma, n, s.p_positions)), ExactScalar(1L)},
      {BasisString(p_width, gather_bits(s.gamma ^ s.mask, n, s.p_positions)), alpha2},
  };
  std::vector<Term> q_terms;
  for (std::size_t j = 0; j < s.q_values.size(); ++j) {
    q_terms.push_back({BasisString(q_width, gather_bits(s.q_values[j], n, s.q_positions)), m.at(0, j)});
  }

  FactorPair f{s.p_positions, SparseState(p_width, std::move(p_terms)), s.q_positions,
               SparseState(q_width, std::move(q_terms))};
  if (!(f.expand() == state)) {
    throw std::logic_error("factor expansion does not reproduce the state");
  }
  return f;
}

const std::vector<CanonicalForm>& canonical_forms(std::size_t m) {
  static const std::vector<CanonicalForm> kSix = {
      {"mt-1", {1, 2, 5}, {3, 4, 6}},
      {"mt-2", {1, 3, 5}, {2, 4, 6}},
      {"mt-3", {1, 2, 3}, {4, 5, 6}},
      {"mt-5", {1, 3, 4}, {2, 5, 6}},
  };
  static const std::vector<CanonicalForm> kFour = {
      {"m4-1", {1, 3}, {2, 4}},
      {"m4-2", {1, 2}, {3, 4}},
  };
  static const std::vector<CanonicalForm> kNone;
  if (m == 6) return kSix;
  if (m == 4) return kFour;
  return kNone;
}

CoeffMatrix form_matrix(const SparseState& state, const CanonicalForm& form) {
  CoeffMatrix m;
  for (int idx : form.row0) m.rows[0].push_back(state[static_cast<std::size_t>(idx - 1)].amplitude);
  for (int idx : form.row1) m.rows[1].push_back(state[static_cast<std::size_t>(idx - 1)].amplitude);
  return m;
}

std::vector<std::string_view> proportional_forms(const SparseState& state) {
  if (state.size() != 4 && state.size() != 6) {
    throw Error(ErrorCode::kWrongTermCount, "canonical forms exist for m = 4 or 6, got " +
                                                std::to_string(state.size()));
  }
  std::vector<std::string_view> out;
  for (const auto& form : canonical_forms(state.size())) {
    if (rank1_rows(form_matrix(state, form))) out.push_back(form.name);
  }
  return out;
}

std::vector<std::string_view> canonical_form_index(const SparseState& state) {
  if (state.size() != 6) {
    throw Error(ErrorCode::kWrongTermCount, "expected 6 terms, got " + std::to_string(state.size()));
  }
  return proportional_forms(state);
}

std::pair<std::vector<int>, std::vector<int>> structure_index_pattern(const SparseState& state,
                                                                      const PairStructure& s) {
  auto index_of = [&state](std::uint64_t bits) {
    const auto& terms = state.terms();
    auto it = std::lower_bound(terms.begin(), terms.end(), bits,
                               [](const Term& t, std::uint64_t b) { return t.basis.bits() < b; });
    if (it == terms.end() || it->basis.bits() != bits) {
      throw Error(ErrorCode::kStructureMismatch, "structure names a basis string absent from the state");
    }
    return static_cast<int>(it - terms.begin()) + 1;
  };
  std::pair<std::vector<int>, std::vector<int>> out;
  for (const auto& [low, high] : s.pairs) {
    out.first.push_back(index_of(low));
    out.second.push_back(index_of(high));
  }
  return out;
}

std::optional<std::string_view> match_canonical_form(
    std::size_t m, const std::pair<std::vector<int>, std::vector<int>>& pattern) {
  for (const auto& form : canonical_forms(m)) {
    if (form.row0 == pattern.first && form.row1 == pattern.second) return form.name;
  }
  return std::nullopt;
}

bool validate_structure(std::span<const BasisString> basis, const PairStructure& s) {
  if (basis.empty() || s.pairs.empty()) return false;
  const int n = basis.front().width();
  if (s.num_qubits != n || s.mask == 0 || (s.mask & ~all_ones(n)) != 0) return false;
  if (s.p_positions != mask_positions(n, s.mask)) return false;
  if (s.q_positions != mask_positions(n, all_ones(n) & ~s.mask)) return false;
  if (s.proper != !s.q_positions.empty()) return false;
  if (s.pairs.size() * 2 != basis.size()) return false;
  if (s.q_values.size() != (s.proper ? s.pairs.size() : 0)) return false;

  std::vector<std::uint64_t> covered;
  for (std::size_t j = 0; j < s.pairs.size(); ++j) {
    const auto [low, high] = s.pairs[j];
    if (low >= high || (low ^ high) != s.mask) return false;
    for (std::uint64_t x : {low, high}) {
      const std::uint64_t p = x & s.mask;
      if (s.proper && p != s.gamma && p != (s.gamma ^ s.mask)) return false;
      if (s.proper && (x & ~s.mask) != s.q_values[j]) return false;
      covered.push_back(x);
    }
    if (j > 0 && s.proper && s.q_values[j - 1] >= s.q_values[j]) return false;
    if (j > 0 && !s.proper && s.pairs[j - 1].first >= low) return false;
  }
  std::vector<std::uint64_t> expected;
  for (const auto& b : basis) expected.push_back(b.bits());
  std::sort(covered.begin(), covered.end());
  std::sort(expected.begin(), expected.end());
  return covered == expected;
}

}  // namespace entgate
