#include <algorithm>
#include <cctype>

#include "entgate/generate.hpp"
#include "test_support.hpp"

namespace entgate {
namespace {

using testing::expect_error;

ParseError parse_failure(std::string_view text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for '" << text << "'";
  return ParseError(ErrorCode::kInvalidArgument, {}, "none");
}

TEST(ParseState, Theta) {
  const auto s = testing::theta();
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s.num_qubits(), 4);
  EXPECT_EQ(s.terms().back().basis.to_string(), "1111");
  EXPECT_EQ(s.terms().back().amplitude, -ExactScalar::sqrt(6) * ExactScalar::rational(1, 6));
}

TEST(ParseState, LikeTermsMerge) {
  const auto s = parse_state("|0> + |0>");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].amplitude, ExactScalar(2));
}

TEST(ParseState, CancellationIsEmptyState) {
  expect_error(ErrorCode::kEmptyState, [] { parse_state("|01> - |01>"); });
}

TEST(ParseState, PartialCancellationDropsTerm) {
  const auto s = parse_state("|00> + |11> - |00> + 2|01>");
  EXPECT_EQ(s, parse_state("2|01> + |11>"));
}

TEST(ParseState, CoefficientForms) {
  EXPECT_EQ(parse_state("sqrt(8)|0>")[0].amplitude, ExactScalar(2) * ExactScalar::sqrt(2));
  EXPECT_EQ(parse_state("(1 + i)/2 * |1>")[0].amplitude,
            (ExactScalar(1) + ExactScalar::imaginary_unit()) * ExactScalar::rational(1, 2));
  EXPECT_EQ(parse_state("-|1>")[0].amplitude, ExactScalar(-1));
  EXPECT_EQ(parse_state("1/(2*sqrt(2))|1>")[0].amplitude, ExactScalar::sqrt(2) * ExactScalar::rational(1, 4));
  EXPECT_EQ(parse_state("3/(1+sqrt(2))|1>")[0].amplitude, ExactScalar(3) * (ExactScalar::sqrt(2) - ExactScalar(1)));
}

TEST(ParseDocument, HeaderAndComments) {
  const auto doc = parse_document("# eta\nqubits: 4\n|0000> + |1111>  # two terms\n");
  EXPECT_EQ(doc.declared_qubits, 4);
  EXPECT_EQ(doc.parsed.num_qubits(), 4);
  expect_error(ErrorCode::kWidthMismatch, [] { parse_document("qubits: 3\n|0000>"); });
}

TEST(ParseErrors, CarryPositionAndExpectedTokens) {
  const auto e = parse_failure("|01");
  EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
  EXPECT_EQ(e.position().line, 1u);
  EXPECT_EQ(e.position().column, 4u);
  EXPECT_FALSE(e.expected().empty());

  const auto e2 = parse_failure("|00> +\n  |0>");
  EXPECT_EQ(e2.code(), ErrorCode::kWidthMismatch);
  EXPECT_EQ(e2.position().line, 2u);
}

TEST(ParseErrors, SemanticCodes) {
  EXPECT_EQ(parse_failure("").code(), ErrorCode::kSyntaxError);
  EXPECT_EQ(parse_failure("1/0|0>").code(), ErrorCode::kDivisionByZero);
  EXPECT_EQ(parse_failure("0|0>").code(), ErrorCode::kEmptyState);
  EXPECT_EQ(parse_failure("sqrt(99999999999999999999999)|0>").code(), ErrorCode::kRadicandOverflow);
  EXPECT_EQ(parse_failure(std::string("|") + std::string(65, '0') + ">").code(), ErrorCode::kWidthOverflow);
}

TEST(RenderState, Eta) { EXPECT_EQ(render_state(testing::eta()), "|0000>+|0001>+|0101>+|1010>+|1011>+|1111>"); }

TEST(RenderState, RadicalAmplitude) {
  EXPECT_EQ(render_state(new_state(1, {{BasisString(1, 0), ExactScalar::sqrt(3) / ExactScalar(3)}})), "sqrt(3)/3|0>");
}

TEST(RenderState, RoundTripOnRandomStates) {
  Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    const int n = static_cast<int>(rng.between(1, 12));
    const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(rng.between(1, 10)), std::size_t{1} << n);
    const auto support = gen_random(rng, n, m);
    std::vector<Term> terms;
    for (const auto& t : support.terms()) {
      ExactScalar amp = random_scalar(rng);
      if (rng.chance(1, 3)) amp += random_scalar(rng) * ExactScalar::sqrt(7);
      terms.push_back({t.basis, amp.is_zero() ? ExactScalar(1) : amp});
    }
    const SparseState s(n, std::move(terms));
    const std::string text = render_state(s);
    ASSERT_EQ(parse_state(text), s) << text;
  }
}

TEST(ParseState, WhitespaceInsensitive) {
  const std::vector<std::string> texts = {
      "1/sqrt(6)*|0000> + 1/sqrt(6)*|0010> - 1/sqrt(6) * |1111>",
      "qubits : 3\n ( 1 + i ) / 2 |000> - sqrt( 3 )|111>",
      "sqrt(3)/(2*sqrt(2))|11111> + 1/(2*sqrt(2))|10000>",
  };
  for (const auto& text : texts) {
    std::string stripped = text;
    stripped.erase(std::remove_if(stripped.begin(), stripped.end(), [](unsigned char c) { return std::isspace(c); }),
                   stripped.end());
    EXPECT_EQ(parse_state(text), parse_state(stripped)) << text;
  }
}

// Random byte strings and token soups never crash: each parse either
// succeeds or raises a ParseError.
TEST(ParseState, FuzzNeverCrashes) {
  static const char* kTokens[] = {"|", ">", "0", "1", "01", "+", "-", "*", "/", "(", ")", "sqrt(", "i",
                                  "2", "qubits", ":", " ", "\n", "#", "|01>", "sqrt(8)", "1/0", "99999999999999999999"};
  Rng rng(31337);
  int successes = 0;
  for (int i = 0; i < 100000; ++i) {
    std::string input;
    const auto len = rng.between(0, 24);
    if (i % 2 == 0) {
      for (int k = 0; k < len; ++k) input.push_back(static_cast<char>(rng.below(256)));
    } else {
      for (int k = 0; k < len; ++k) input += kTokens[rng.below(std::size(kTokens))];
    }
    try {
      parse_document(input);
      ++successes;
    } catch (const ParseError&) {
    } catch (const std::exception& e) {
      FAIL() << "unexpected exception type for '" << input << "': " << e.what();
    }
  }
  EXPECT_GT(successes, 0);
}

}  // namespace
}  // namespace entgate
