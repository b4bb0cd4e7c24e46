#pragma once

// Seeded state generators.
//
// Randomness comes from std::mt19937_64 (the standard 64-bit Mersenne
// Twister, fully specified by the C++ standard) seeded with the user seed.
// Bounded integers are drawn by rejection sampling on raw 64-bit outputs, so
// generated states are identical across platforms and standard libraries.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "entgate/state.hpp"

namespace entgate {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  /// n random bits.
  std::uint64_t bits(int n);

 private:
  std::mt19937_64 engine_;
};

enum class GenKind { kSeparable, kRandom, kCompletePairs };

std::string_view to_string(GenKind kind);
/// Throws kInvalidArgument for unknown names.
GenKind parse_gen_kind(std::string_view name);

struct GenParams {
  GenKind kind = GenKind::kSeparable;
  int num_qubits = 6;
  std::size_t m = 6;  // ignored for kCompletePairs
  std::uint64_t seed = 0;
};

/// Throws kInfeasibleParams when no state fits the parameters.
SparseState generate(const GenParams& params);

/// Product of a two-term factor with complementary patterns on a random set P
/// and an (m/2)-term factor on Q with no constant qubit.
SparseState gen_separable(Rng& rng, int num_qubits, std::size_t m);
/// m distinct random basis strings with small non-zero rational amplitudes.
SparseState gen_random(Rng& rng, int num_qubits, std::size_t m);
/// Three complete complementary pairs with random non-zero amplitudes.
SparseState gen_complete_pairs(Rng& rng, int num_qubits);

/// p/q with 1 <= |p| <= 5, 1 <= q <= 4.
ExactScalar random_rational(Rng& rng);
/// random_rational, sometimes times sqrt(2|3|5|6), sometimes plus an
/// imaginary rational.
ExactScalar random_scalar(Rng& rng);
/// Uniform permutation of 1..n as a target list (perm[i-1] = image of i).
std::vector<int> random_permutation(Rng& rng, int n);

}  // namespace entgate
