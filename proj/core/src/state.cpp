#include "entgate/state.hpp"

#include <algorithm>

#include "entgate/error.hpp"

namespace entgate {

BasisString::BasisString(int width, std::uint64_t bits) : width_(width), bits_(bits) {
  if (width < 1 || width > kMaxQubits) {
    throw Error(ErrorCode::kWidthOverflow,
                "basis width " + std::to_string(width) + " outside 1.." + std::to_string(kMaxQubits));
  }
  if ((bits & ~all_ones(width)) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "basis bits exceed width");
  }
}

BasisString BasisString::from_text(std::string_view text) {
  if (text.empty() || text.size() > kMaxQubits) {
    throw Error(ErrorCode::kWidthOverflow, "basis label length " + std::to_string(text.size()));
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw Error(ErrorCode::kInvalidArgument, "basis label must be binary");
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return {static_cast<int>(text.size()), bits};
}

int BasisString::bit(int position) const {
  return static_cast<int>((bits_ >> (width_ - position)) & 1U);
}

std::string BasisString::to_string() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int p = 1; p <= width_; ++p) s[p - 1] = bit(p) ? '1' : '0';
  return s;
}

SparseState::SparseState(int num_qubits, std::vector<Term> terms)
    : num_qubits_(num_qubits), terms_(std::move(terms)) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw Error(ErrorCode::kWidthOverflow, "qubit count " + std::to_string(num_qubits));
  }
  if (terms_.empty()) throw Error(ErrorCode::kInvalidArgument, "state has no terms");
  for (const auto& t : terms_) {
    if (t.basis.width() != num_qubits) {
      throw Error(ErrorCode::kWidthMismatch, "basis |" + t.basis.to_string() + "> is not " +
                                                 std::to_string(num_qubits) + " qubits wide");
    }
    if (t.amplitude.is_zero()) {
      throw Error(ErrorCode::kZeroAmplitude, "zero coefficient on |" + t.basis.to_string() + ">");
    }
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.basis.bits() < b.basis.bits(); });
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i - 1].basis == terms_[i].basis) {
      throw Error(ErrorCode::kDuplicateBasis, "|" + terms_[i].basis.to_string() + "> repeated");
    }
  }
}

const ExactScalar* SparseState::amplitude_of(std::uint64_t bits) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), bits,
                             [](const Term& t, std::uint64_t b) { return t.basis.bits() < b; });
  if (it == terms_.end() || it->basis.bits() != bits) return nullptr;
  return &it->amplitude;
}

SparseState new_state(int num_qubits, std::vector<Term> terms) {
  return SparseState(num_qubits, std::move(terms));
}

ConstantQubitReport constant_qubits(const SparseState& state) {
  const int n = state.num_qubits();
  std::uint64_t ones = all_ones(n);
  std::uint64_t zeros = all_ones(n);
  for (const auto& t : state.terms()) {
    ones &= t.basis.bits();
    zeros &= ~t.basis.bits();
  }
  ConstantQubitReport report;
  for (int p = 1; p <= n; ++p) {
    const std::uint64_t b = position_bit(n, p);
    if (ones & b) report.push_back({p, 1});
    if (zeros & b) report.push_back({p, 0});
  }
  return report;
}

StrippedState strip_constant_qubits(const SparseState& state) {
  const int n = state.num_qubits();
  ConstantQubitReport report = constant_qubits(state);
  if (static_cast<int>(report.size()) == n) {
    throw Error(ErrorCode::kAllQubitsConstant, "every qubit is constant (single basis state)");
  }
  std::vector<int> kept;
  std::size_t r = 0;
  for (int p = 1; p <= n; ++p) {
    if (r < report.size() && report[r].position == p) {
      ++r;
    } else {
      kept.push_back(p);
    }
  }
  const int width = static_cast<int>(kept.size());
  std::vector<Term> terms;
  terms.reserve(state.size());
  for (const auto& t : state.terms()) {
    terms.push_back({BasisString(width, gather_bits(t.basis.bits(), n, kept)), t.amplitude});
  }
  return {SparseState(width, std::move(terms)), std::move(report), std::move(kept)};
}

SparseState permute_qubits(const SparseState& state, std::span<const int> perm) {
  const int n = state.num_qubits();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "permutation size differs from qubit count");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int target : perm) {
    if (target < 1 || target > n || seen[static_cast<std::size_t>(target)]) {
      throw Error(ErrorCode::kInvalidArgument, "not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(target)] = true;
  }
  std::vector<Term> terms;
  terms.reserve(state.size());
  for (const auto& t : state.terms()) {
    std::uint64_t bits = 0;
    for (int p = 1; p <= n; ++p) {
      if (t.basis.bit(p)) bits |= position_bit(n, perm[static_cast<std::size_t>(p - 1)]);
    }
    terms.push_back({BasisString(n, bits), t.amplitude});
  }
  return SparseState(n, std::move(terms));
}

SparseState scale_state(const SparseState& state, const ExactScalar& c) {
  if (c.is_zero()) throw Error(ErrorCode::kZeroScale, "scale factor is zero");
  std::vector<Term> terms;
  terms.reserve(state.size());
  for (const auto& t : state.terms()) terms.push_back({t.basis, t.amplitude * c});
  return SparseState(state.num_qubits(), std::move(terms));
}

SparseState complement_bits(const SparseState& state) {
  const int n = state.num_qubits();
  std::vector<Term> terms;
  terms.reserve(state.size());
  for (const auto& t : state.terms()) {
    terms.push_back({BasisString(n, ~t.basis.bits() & all_ones(n)), t.amplitude});
  }
  return SparseState(n, std::move(terms));
}

ExactScalar norm_sq(const SparseState& state) {
  ExactScalar total;
  for (const auto& t : state.terms()) total += scalar_norm_sq(t.amplitude);
  return total;
}

std::uint64_t positions_mask(int num_qubits, std::span<const int> positions) {
  std::uint64_t mask = 0;
  for (int p : positions) mask |= position_bit(num_qubits, p);
  return mask;
}

std::vector<int> mask_positions(int num_qubits, std::uint64_t mask) {
  std::vector<int> out;
  for (int p = 1; p <= num_qubits; ++p) {
    if (mask & position_bit(num_qubits, p)) out.push_back(p);
  }
  return out;
}

std::uint64_t gather_bits(std::uint64_t bits, int num_qubits, std::span<const int> positions) {
  std::uint64_t out = 0;
  for (int p : positions) out = (out << 1) | ((bits >> (num_qubits - p)) & 1U);
  return out;
}

std::uint64_t scatter_bits(std::uint64_t packed, int num_qubits, std::span<const int> positions) {
  std::uint64_t out = 0;
  const int k = static_cast<int>(positions.size());
  for (int i = 0; i < k; ++i) {
    if ((packed >> (k - 1 - i)) & 1U) out |= position_bit(num_qubits, positions[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace entgate
