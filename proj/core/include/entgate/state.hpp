#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entgate/arith.hpp"

namespace entgate {

inline constexpr int kMaxQubits = 64;

/// An n-bit computational-basis label. Qubit 1 is the most significant bit,
/// so integer order on `bits()` is the lexicographic order of the label.
class BasisString {
 public:
  BasisString(int width, std::uint64_t bits);
  /// Parses "0101"-style text.
  static BasisString from_text(std::string_view text);

  int width() const noexcept { return width_; }
  std::uint64_t bits() const noexcept { return bits_; }
  /// Bit of qubit `position` (1-based).
  int bit(int position) const;
  std::string to_string() const;

  friend bool operator==(const BasisString&, const BasisString&) = default;
  friend auto operator<=>(const BasisString& a, const BasisString& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  int width_;
  std::uint64_t bits_;
};

struct Term {
  BasisString basis;
  ExactScalar amplitude;

  friend bool operator==(const Term&, const Term&) = default;
};

struct ConstantQubit {
  int position;  // 1-based
  int bit;

  friend bool operator==(const ConstantQubit&, const ConstantQubit&) = default;
};

/// Positions strictly increasing.
using ConstantQubitReport = std::vector<ConstantQubit>;

/// Pure state sum_i b_i |B_i> with non-zero b_i and strictly increasing B_i.
class SparseState {
 public:
  /// Sorts the terms. Throws kDuplicateBasis, kZeroAmplitude, kWidthMismatch,
  /// kWidthOverflow (n outside 1..64), kInvalidArgument (no terms).
  SparseState(int num_qubits, std::vector<Term> terms);

  int num_qubits() const noexcept { return num_qubits_; }
  /// m, the number of non-zero coefficients.
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& operator[](std::size_t i) const { return terms_[i]; }

  /// Amplitude of |bits>, or nullptr when the coefficient is zero.
  const ExactScalar* amplitude_of(std::uint64_t bits) const;

  friend bool operator==(const SparseState&, const SparseState&) = default;

 private:
  int num_qubits_;
  std::vector<Term> terms_;
};

SparseState new_state(int num_qubits, std::vector<Term> terms);

ConstantQubitReport constant_qubits(const SparseState& state);

struct StrippedState {
  SparseState state;
  ConstantQubitReport report;
  /// Original labels of the qubits kept in `state`, ascending.
  std::vector<int> kept_positions;
};

/// Removes the constant qubits. Throws kAllQubitsConstant when none remain
/// (m == 1).
StrippedState strip_constant_qubits(const SparseState& state);

/// Moves qubit i to position perm[i-1]; `perm` is a bijection on 1..n.
SparseState permute_qubits(const SparseState& state, std::span<const int> perm);

/// Throws kZeroScale for c == 0.
SparseState scale_state(const SparseState& state, const ExactScalar& c);

/// Flips every bit of every basis string.
SparseState complement_bits(const SparseState& state);

/// sum_i |b_i|^2.
ExactScalar norm_sq(const SparseState& state);

// Bit helpers. Positions are 1-based qubit labels of an n-qubit register.

inline std::uint64_t position_bit(int num_qubits, int position) {
  return std::uint64_t{1} << (num_qubits - position);
}

inline std::uint64_t all_ones(int width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

std::uint64_t positions_mask(int num_qubits, std::span<const int> positions);
std::vector<int> mask_positions(int num_qubits, std::uint64_t mask);

/// Packs the bits at `positions` (ascending) into a |positions|-bit value,
/// first position most significant.
std::uint64_t gather_bits(std::uint64_t bits, int num_qubits, std::span<const int> positions);
/// Inverse of gather_bits.
std::uint64_t scatter_bits(std::uint64_t packed, int num_qubits, std::span<const int> positions);

}  // namespace entgate
