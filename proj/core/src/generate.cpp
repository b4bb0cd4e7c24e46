#include "entgate/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "entgate/error.hpp"
#include "entgate/structure.hpp"

namespace entgate {
namespace {

int ceil_log2(std::uint64_t k) {
  int bits = 0;
  while ((std::uint64_t{1} << bits) < k) ++bits;
  return bits;
}

// k distinct patterns of width w.
std::vector<std::uint64_t> distinct_patterns(Rng& rng, int width, std::size_t k) {
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> out;
  while (out.size() < k) {
    const std::uint64_t x = rng.bits(width);
    if (seen.insert(x).second) out.push_back(x);
  }
  return out;
}

bool every_position_varies(const std::vector<std::uint64_t>& patterns, int width) {
  std::uint64_t any = 0;
  std::uint64_t all = all_ones(width);
  for (auto p : patterns) {
    any |= p;
    all &= p;
  }
  return (any & ~all) == all_ones(width);
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t Rng::bits(int n) { return n >= 64 ? engine_() : engine_() & all_ones(n); }

std::string_view to_string(GenKind kind) {
  switch (kind) {
    case GenKind::kSeparable: return "separable";
    case GenKind::kRandom: return "random";
    case GenKind::kCompletePairs: return "complete-pairs";
  }
  return "";
}

GenKind parse_gen_kind(std::string_view name) {
  if (name == "separable") return GenKind::kSeparable;
  if (name == "random") return GenKind::kRandom;
  if (name == "complete-pairs") return GenKind::kCompletePairs;
  throw Error(ErrorCode::kInvalidArgument, "unknown generator kind '" + std::string(name) + "'");
}

ExactScalar random_rational(Rng& rng) {
  std::int64_t p = rng.between(1, 5);
  if (rng.chance(1, 2)) p = -p;
  return ExactScalar::rational(p, rng.between(1, 4));
}

ExactScalar random_scalar(Rng& rng) {
  static constexpr std::uint64_t kRadicands[] = {2, 3, 5, 6};
  ExactScalar x = random_rational(rng);
  if (rng.chance(1, 3)) x *= ExactScalar::sqrt(kRadicands[rng.below(4)]);
  if (rng.chance(1, 4)) x += random_rational(rng) * ExactScalar::imaginary_unit();
  return x;
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[static_cast<std::size_t>(i)],
              perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  }
  return perm;
}

SparseState gen_separable(Rng& rng, int num_qubits, std::size_t m) {
  if (m % 2 != 0 || m < 4) {
    throw Error(ErrorCode::kInfeasibleParams, "separable kind needs even m >= 4");
  }
  const std::size_t k = m / 2;
  const int q_min = std::max(1, ceil_log2(k));
  if (num_qubits < 2 || q_min > num_qubits - 1) {
    throw Error(ErrorCode::kInfeasibleParams,
                std::to_string(k) + " distinct patterns need " + std::to_string(q_min) +
                    " qubits beside a non-empty pair side; n = " + std::to_string(num_qubits));
  }
  const int q_width = static_cast<int>(rng.between(q_min, num_qubits - 1));
  const int p_width = num_qubits - q_width;

  const auto order = random_permutation(rng, num_qubits);
  std::vector<int> q_positions(order.begin(), order.begin() + q_width);
  std::vector<int> p_positions(order.begin() + q_width, order.end());
  std::sort(q_positions.begin(), q_positions.end());
  std::sort(p_positions.begin(), p_positions.end());

  const std::uint64_t gamma = rng.bits(p_width);
  std::vector<Term> p_terms{{BasisString(p_width, gamma), random_scalar(rng)},
                            {BasisString(p_width, gamma ^ all_ones(p_width)), random_scalar(rng)}};

  // Reject pattern sets with a constant qubit; if that keeps failing (tiny k
  // on a wide Q), seed the set with a complementary pair.
  std::vector<std::uint64_t> patterns;
  bool found = false;
  for (int attempt = 0; attempt < 64 && !found; ++attempt) {
    patterns = distinct_patterns(rng, q_width, k);
    found = every_position_varies(patterns, q_width);
  }
  if (!found) {
    const std::uint64_t seed = rng.bits(q_width);
    patterns = {seed, seed ^ all_ones(q_width)};
    std::set<std::uint64_t> seen(patterns.begin(), patterns.end());
    while (patterns.size() < k) {
      const std::uint64_t x = rng.bits(q_width);
      if (seen.insert(x).second) patterns.push_back(x);
    }
  }
  std::vector<Term> q_terms;
  for (auto q : patterns) q_terms.push_back({BasisString(q_width, q), random_scalar(rng)});

  FactorPair product{p_positions, SparseState(p_width, std::move(p_terms)), q_positions,
                     SparseState(q_width, std::move(q_terms))};
  return product.expand();
}

SparseState gen_random(Rng& rng, int num_qubits, std::size_t m) {
  if (num_qubits < 1 || num_qubits > kMaxQubits || m < 1) {
    throw Error(ErrorCode::kInfeasibleParams, "random kind needs 1 <= n <= 64 and m >= 1");
  }
  if (num_qubits < 64 && m > (std::uint64_t{1} << num_qubits)) {
    throw Error(ErrorCode::kInfeasibleParams, std::to_string(m) + " distinct strings do not fit in " +
                                                  std::to_string(num_qubits) + " qubits");
  }
  std::vector<Term> terms;
  for (auto bits : distinct_patterns(rng, num_qubits, m)) {
    terms.push_back({BasisString(num_qubits, bits), random_rational(rng)});
  }
  return SparseState(num_qubits, std::move(terms));
}

SparseState gen_complete_pairs(Rng& rng, int num_qubits) {
  if (num_qubits < 3 || num_qubits > kMaxQubits) {
    throw Error(ErrorCode::kInfeasibleParams, "three complete complementary pairs need n >= 3");
  }
  // Representatives with qubit 1 = 0 are in bijection with the pairs.
  const auto reps = distinct_patterns(rng, num_qubits - 1, 3);
  const std::uint64_t full = all_ones(num_qubits);
  std::vector<Term> terms;
  for (auto r : reps) {
    terms.push_back({BasisString(num_qubits, r), random_scalar(rng)});
    terms.push_back({BasisString(num_qubits, r ^ full), random_scalar(rng)});
  }
  return SparseState(num_qubits, std::move(terms));
}

SparseState generate(const GenParams& params) {
  Rng rng(params.seed);
  switch (params.kind) {
    case GenKind::kSeparable: return gen_separable(rng, params.num_qubits, params.m);
    case GenKind::kRandom: return gen_random(rng, params.num_qubits, params.m);
    case GenKind::kCompletePairs: return gen_complete_pairs(rng, params.num_qubits);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown generator kind");
}

}  // namespace entgate
