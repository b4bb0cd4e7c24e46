#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace entgate::detail {

/// Prime factors with multiplicity, ascending. factorize(1) is empty.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// Splits n = s^2 * r with r square-free. n must be non-zero.
struct SquareSplit {
  std::uint64_t square_root = 1;  // s
  std::uint64_t square_free = 1;  // r
};
SquareSplit split_square(std::uint64_t n);

bool is_square_free(std::uint64_t n);

/// Distinct primes of a square-free n.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace entgate::detail
