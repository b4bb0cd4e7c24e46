#include "entgate/criterion.hpp"
#include "entgate/generate.hpp"
#include "test_support.hpp"

namespace entgate {
namespace {

using testing::expect_error;

TEST(Rng, SameSeedSameStream) {
  Rng a(7), b(7), c(8);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    ASSERT_EQ(x, b.next());
    differs = differs || x != c.next();
  }
  EXPECT_TRUE(differs);
}

// std::mt19937_64 is fully specified: the 10000th output from the default
// seed is fixed by the standard.
TEST(Rng, EngineMatchesStandard) {
  std::mt19937_64 engine;
  engine.discard(9999);
  EXPECT_EQ(engine(), 9981545732273789042ULL);
}

TEST(Rng, BoundedDrawsStayInRange) {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    ASSERT_LT(rng.below(7), 7u);
    const auto x = rng.between(-3, 3);
    ASSERT_TRUE(x >= -3 && x <= 3);
    ASSERT_LT(rng.bits(5), 32u);
  }
}

TEST(Generate, Deterministic) {
  for (auto kind : {GenKind::kSeparable, GenKind::kRandom, GenKind::kCompletePairs}) {
    const GenParams p{kind, 6, 6, 7};
    EXPECT_EQ(render_state(generate(p)), render_state(generate(p)));
  }
}

TEST(Generate, SeparableSeedSevenIsSeparable) {
  const auto s = generate({GenKind::kSeparable, 6, 6, 7});
  EXPECT_EQ(s.size(), 6u);
  EXPECT_EQ(classify(s).kind, VerdictKind::kSeparable);
}

TEST(Generate, CompletePairsIsEntangled) {
  const auto s = generate({GenKind::kCompletePairs, 4, 6, 1});
  EXPECT_EQ(s.size(), 6u);
  EXPECT_EQ(classify(s).kind, VerdictKind::kGenuinelyEntangled);
}

TEST(Generate, InfeasibleParams) {
  expect_error(ErrorCode::kInfeasibleParams, [] { generate({GenKind::kSeparable, 2, 6, 0}); });
  expect_error(ErrorCode::kInfeasibleParams, [] { generate({GenKind::kSeparable, 6, 5, 0}); });
  expect_error(ErrorCode::kInfeasibleParams, [] { generate({GenKind::kRandom, 2, 5, 0}); });
  expect_error(ErrorCode::kInfeasibleParams, [] { generate({GenKind::kCompletePairs, 2, 6, 0}); });
  expect_error(ErrorCode::kInvalidArgument, [] { parse_gen_kind("bogus"); });
}

TEST(Generate, SeparableHasNoConstantQubit) {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const int n = static_cast<int>(rng.between(2, 16));
    // m/2 distinct patterns must fit on at most n - 1 qubits.
    const std::int64_t k_max = std::min<std::int64_t>(5, std::int64_t{1} << (n - 1));
    const std::size_t m = 2 * static_cast<std::size_t>(rng.between(2, k_max));
    const auto s = gen_separable(rng, n, m);
    ASSERT_EQ(s.size(), m);
    ASSERT_TRUE(constant_qubits(s).empty()) << render_state(s);
  }
}

TEST(RandomPermutation, IsBijection) {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    auto p = random_permutation(rng, 10);
    std::sort(p.begin(), p.end());
    for (int k = 0; k < 10; ++k) ASSERT_EQ(p[k], k + 1);
  }
}

}  // namespace
}  // namespace entgate
