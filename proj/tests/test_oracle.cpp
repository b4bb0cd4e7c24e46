#include <chrono>

#include "entgate/criterion.hpp"
#include "entgate/generate.hpp"
#include "entgate/oracle.hpp"
#include "test_support.hpp"

namespace entgate {
namespace {

using testing::expect_error;

Bipartition cut(int n, std::vector<int> s) { return Bipartition{n, positions_mask(n, s)}; }

std::vector<std::vector<int>> s_sides(const std::vector<Bipartition>& bs) {
  std::vector<std::vector<int>> out;
  for (const auto& b : bs) out.push_back(b.s_positions());
  return out;
}

TEST(Bipartitions, TwoQubits) {
  const auto bs = bipartitions(2);
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_EQ(bs[0].s_positions(), std::vector<int>{1});
  EXPECT_EQ(bs[0].sc_positions(), std::vector<int>{2});
}

TEST(Bipartitions, ThreeQubits) {
  const auto sides = s_sides(bipartitions(3));
  ASSERT_EQ(sides.size(), 3u);
  std::set<std::vector<int>> got(sides.begin(), sides.end());
  EXPECT_EQ(got, (std::set<std::vector<int>>{{1}, {1, 2}, {1, 3}}));
}

TEST(Bipartitions, TenQubitsCountAndCanonicalSide) {
  const auto bs = bipartitions(10);
  EXPECT_EQ(bs.size(), 511u);
  std::set<std::uint64_t> masks;
  for (const auto& b : bs) {
    EXPECT_EQ(b.s_positions().front(), 1);
    EXPECT_FALSE(b.sc_positions().empty());
    masks.insert(b.s_mask);
  }
  EXPECT_EQ(masks.size(), 511u);
}

TEST(Bipartitions, Errors) {
  expect_error(ErrorCode::kInvalidArgument, [] { bipartitions(1); });
  expect_error(ErrorCode::kCapExceeded, [] { bipartitions(21); });
}

TEST(SideGrid, EtaAtOneThreeIsAllOnes) {
  const auto grid = side_coefficient_matrix(testing::eta(), cut(4, {1, 3}));
  EXPECT_EQ(grid.row_keys.size(), 2u);
  EXPECT_EQ(grid.col_keys.size(), 3u);
  ASSERT_EQ(grid.cells.size(), 6u);
  for (const auto& c : grid.cells) EXPECT_TRUE(c.value.is_one());
  EXPECT_TRUE(is_rank_le_1(grid));
}

// Worked by hand: at S = {1} the rows are qubit 1 = 0 with Sc patterns
// {000, 001, 101} and qubit 1 = 1 with {010, 011, 111}. The supports differ,
// so the 2 x 6 grid is not a rectangle and the rank is 2.
TEST(SideGrid, EtaAtOneIsNotRank1) {
  const auto grid = side_coefficient_matrix(testing::eta(), cut(4, {1}));
  EXPECT_EQ(grid.row_keys.size(), 2u);
  EXPECT_EQ(grid.col_keys.size(), 6u);
  EXPECT_FALSE(is_rank_le_1(grid));
}

TEST(SideGrid, SingleTerm) {
  const auto grid = side_coefficient_matrix(parse_state("|0110>"), cut(4, {1, 2}));
  EXPECT_EQ(grid.row_keys.size(), 1u);
  EXPECT_EQ(grid.col_keys.size(), 1u);
  EXPECT_TRUE(is_rank_le_1(grid));
}

TEST(IsRankLe1, AntiDiagonalIsRankTwo) {
  const auto grid = side_coefficient_matrix(parse_state("|00> + |11>"), cut(2, {1}));
  EXPECT_FALSE(is_rank_le_1(grid));
}

TEST(IsRankLe1, ThetaAtTwoFour) {
  // S = {2,4} is stored canonically as its complement {1,3}.
  EXPECT_FALSE(is_rank_le_1(side_coefficient_matrix(testing::theta(), cut(4, {1, 3}))));
}

TEST(OracleClassify, Xi6IsEntangled) {
  const auto v = oracle_classify(testing::xi6());
  EXPECT_EQ(v.kind, VerdictKind::kGenuinelyEntangled);
  EXPECT_EQ(v.reason, Reason::kOracleExhaustive);
  EXPECT_EQ(v.method, Method::kOracle);
}

TEST(OracleClassify, UniformThreeQubitStateIsSeparable) {
  const auto s = parse_state("|000> + |001> + |010> + |011> + |100> + |101> + |110> + |111>");
  const auto v = oracle_classify(s);
  ASSERT_EQ(v.kind, VerdictKind::kSeparable);
  EXPECT_EQ(v.witness->expand(), s);
}

TEST(OracleClassify, OverCapIsUnknown) {
  const auto s = parse_state("|0000000000000000000000000> + |1111111111111111111111111> + |1010101010101010101010101>");
  EXPECT_EQ(oracle_classify(s).kind, VerdictKind::kUnknown);
  EXPECT_EQ(oracle_classify(s, 25).kind, VerdictKind::kGenuinelyEntangled);
}

TEST(OracleClassify, FirstWitnessIsLowestCanonicalCut) {
  // Product of three single-qubit superpositions: every cut separates, and
  // the first canonical cut is S = {1}.
  const auto s = parse_state("|000> + |001> + |010> + |011> + |100> + |101> + |110> + |111>");
  const auto b = first_separable_cut(s);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->s_positions(), std::vector<int>{1});
}

TEST(OracleProperties, AgreesWithDenseGrid) {
  Rng rng(8080);
  for (int i = 0; i < 500; ++i) {
    const int n = static_cast<int>(rng.between(2, 7));
    SparseState s = (i % 3 == 0 && n >= 3) ? gen_separable(rng, n, 2 * static_cast<std::size_t>(rng.between(2, 3)))
                                           : gen_random(rng, n, std::min<std::size_t>(static_cast<std::size_t>(rng.between(2, 9)), std::size_t{1} << n));
    if (!constant_qubits(s).empty()) continue;
    const auto v = oracle_classify(s);
    ASSERT_EQ(v.kind == VerdictKind::kSeparable, testing::dense_separable(s)) << render_state(s);
    if (v.witness) {
      ASSERT_EQ(v.witness->expand(), s);
      // Cut symmetry: swapping S and Sc transposes the grid.
      const auto b = first_separable_cut(s);
      ASSERT_TRUE(b);
      const Bipartition swapped{n, all_ones(n) & ~b->s_mask};
      ASSERT_TRUE(is_rank_le_1(side_coefficient_matrix(s, *b)));
      ASSERT_TRUE(is_rank_le_1(side_coefficient_matrix(s, swapped)));
    }
  }
}

TEST(OracleTiming, TwentyQubitsSixTerms) {
  Rng rng(20);
  const auto s = gen_random(rng, 20, 6);
  const auto start = std::chrono::steady_clock::now();
  const auto v = oracle_classify(s);
  EXPECT_NE(v.kind, VerdictKind::kUnknown);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(10));
}

}  // namespace
}  // namespace entgate
