#pragma once

// Shared helpers for the unit tests: reference states and brute-force
// oracles that share no code with the library paths they check.

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "entgate/arith.hpp"
#include "entgate/error.hpp"
#include "entgate/ketparse.hpp"
#include "entgate/state.hpp"

namespace entgate {

// Readable gtest failure output for scalars.
inline void PrintTo(const ExactScalar& x, std::ostream* os) { *os << to_string(x); }

}  // namespace entgate

namespace entgate::testing {

inline SparseState eta() { return parse_state("|0000> + |0001> + |0101> + |1010> + |1011> + |1111>"); }

inline SparseState theta() {
  return parse_state(
      "1/sqrt(6)*|0000> + 1/sqrt(6)*|0010> + 1/sqrt(6)*|0101> + 1/sqrt(6)*|0111>"
      " + 1/sqrt(6)*|1010> - 1/sqrt(6)*|1111>");
}

inline SparseState psi6() {
  return parse_state(
      "sqrt(3)/(2*sqrt(2))|11111> + 1/(2*sqrt(2))|10000> + 1/(2*sqrt(2))|01000>"
      " + 1/(2*sqrt(2))|00100> + 1/(2*sqrt(2))|00010> + 1/(2*sqrt(2))|00001>");
}

inline SparseState xi6() {
  return parse_state(
      "sqrt(3)/(2*sqrt(2))|111111> + 1/(2*sqrt(2))|110000> + 1/(2*sqrt(2))|001000>"
      " + 1/(2*sqrt(2))|000100> + 1/(2*sqrt(2))|000010> + 1/(2*sqrt(2))|000001>");
}

/// G_abcd with one of the four pair coefficients zero and the rest 1/sqrt(6).
inline SparseState g_abcd_without(int zero_index) {
  static const char* kPairs[4][2] = {{"0000", "1111"}, {"0011", "1100"}, {"0101", "1010"}, {"0110", "1001"}};
  std::string text;
  for (int i = 0; i < 4; ++i) {
    if (i == zero_index) continue;
    for (const char* ket : kPairs[i]) {
      if (!text.empty()) text += " + ";
      text += std::string("1/sqrt(6)|") + ket + ">";
    }
  }
  return parse_state(text);
}

inline std::vector<std::uint64_t> basis_bits(const SparseState& s) {
  std::vector<std::uint64_t> out;
  for (const auto& t : s.terms()) out.push_back(t.basis.bits());
  return out;
}

/// Every perfect matching of `items`, by plain recursion.
inline void for_each_matching(std::vector<std::uint64_t> items,
                              const std::function<void(const std::vector<std::pair<std::uint64_t, std::uint64_t>>&)>& fn) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> current;
  std::function<void(std::vector<std::uint64_t>)> rec = [&](std::vector<std::uint64_t> rest) {
    if (rest.empty()) {
      fn(current);
      return;
    }
    const std::uint64_t first = rest.front();
    for (std::size_t j = 1; j < rest.size(); ++j) {
      std::vector<std::uint64_t> next;
      for (std::size_t k = 1; k < rest.size(); ++k) {
        if (k != j) next.push_back(rest[k]);
      }
      current.emplace_back(first, rest[j]);
      rec(next);
      current.pop_back();
    }
  };
  rec(std::move(items));
}

/// Masks d of every pair structure, found by enumerating all (2k-1)!!
/// matchings: constant XOR d, and the P-parts take exactly two values unless
/// d covers every qubit.
inline std::set<std::uint64_t> brute_force_masks(const SparseState& s) {
  std::set<std::uint64_t> masks;
  for_each_matching(basis_bits(s), [&](const auto& matching) {
    const std::uint64_t d = matching.front().first ^ matching.front().second;
    std::set<std::uint64_t> p_parts;
    for (const auto& [a, b] : matching) {
      if ((a ^ b) != d) return;
      p_parts.insert(a & d);
      p_parts.insert(b & d);
    }
    if (p_parts.size() == 2 || d == (std::uint64_t{1} << s.num_qubits()) - 1) masks.insert(d);
  });
  return masks;
}

/// Dense-grid rank test: separable across some cut iff the full
/// 2^|S| x 2^|Sc| amplitude grid has every 2x2 minor zero. Exponential in n,
/// independent of the sparse oracle. Only for small n.
inline bool dense_separable(const SparseState& s) {
  const int n = s.num_qubits();
  if (n < 2) return false;
  std::map<std::uint64_t, ExactScalar> amp;
  for (const auto& t : s.terms()) amp.emplace(t.basis.bits(), t.amplitude);
  auto at = [&](std::uint64_t x) {
    auto it = amp.find(x);
    return it == amp.end() ? ExactScalar(0) : it->second;
  };
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s_mask = 1; s_mask < full; ++s_mask) {
    // Rows are the assignments on S, columns those on Sc; enumerate submasks.
    const std::uint64_t c_mask = full & ~s_mask;
    std::vector<std::uint64_t> rows, cols;
    for (std::uint64_t r = s_mask;; r = (r - 1) & s_mask) {
      rows.push_back(r);
      if (r == 0) break;
    }
    for (std::uint64_t c = c_mask;; c = (c - 1) & c_mask) {
      cols.push_back(c);
      if (c == 0) break;
    }
    bool rank1 = true;
    for (std::size_t i = 0; i < rows.size() && rank1; ++i) {
      for (std::size_t j = i + 1; j < rows.size() && rank1; ++j) {
        for (std::size_t k = 0; k < cols.size() && rank1; ++k) {
          for (std::size_t l = k + 1; l < cols.size() && rank1; ++l) {
            const ExactScalar minor = at(rows[i] | cols[k]) * at(rows[j] | cols[l]) -
                                      at(rows[i] | cols[l]) * at(rows[j] | cols[k]);
            rank1 = minor.is_zero();
          }
        }
      }
    }
    if (rank1) return true;
  }
  return false;
}

template <typename Fn>
void expect_error(ErrorCode code, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << error_code_name(code) << ", nothing thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace entgate::testing
