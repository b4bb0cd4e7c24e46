#include "entgate/ketparse.hpp"

#include <cctype>
#include <limits>
#include <map>

#include "entgate/error.hpp"

namespace entgate {
namespace {

constexpr int kMaxNesting = 256;

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  StateDocument parse() {
    std::optional<int> declared;
    skip_space();
    if (peek_identifier() == "qubits") {
      const std::size_t at = pos_;
      pos_ += 6;
      expect(':');
      const mpz_class n = parse_uint();
      if (n < 1 || n > kMaxQubits) {
        fail(ErrorCode::kWidthOverflow, at, "declared qubit count must be in 1..64");
      }
      declared = static_cast<int>(n.get_si());
    }
    declared_ = declared;

    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    parse_term(negative);
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        parse_term(c == '-');
      } else if (at_end()) {
        break;
      } else {
        syntax_error({"'+'", "'-'", "end of input"});
      }
    }

    std::vector<Term> terms;
    for (auto& [bits, amp] : accumulated_) {
      if (!amp.is_zero()) terms.push_back({BasisString(*width_, bits), std::move(amp)});
    }
    if (terms.empty()) fail(ErrorCode::kEmptyState, src_.size(), "every term cancelled");
    return {std::string(src_), SparseState(*width_, std::move(terms)), declared};
  }

 private:
  void parse_term(bool negative) {
    skip_space();
    ExactScalar coeff(1L);
    if (peek() != '|') {
      if (!starts_factor()) syntax_error({"coefficient", "'|'"});
      coeff = parse_coeff();
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
      }
    }
    if (peek() != '|') syntax_error({"'|'"});
    const std::size_t ket_at = pos_;
    ++pos_;
    std::uint64_t bits = 0;
    int width = 0;
    while (peek() == '0' || peek() == '1') {
      if (width == kMaxQubits) fail(ErrorCode::kWidthOverflow, ket_at, "ket wider than 64 qubits");
      bits = (bits << 1) | static_cast<std::uint64_t>(peek() - '0');
      ++width;
      ++pos_;
    }
    if (width == 0) syntax_error({"'0'", "'1'"});
    if (peek() != '>') syntax_error({"'0'", "'1'", "'>'"});
    ++pos_;

    if (!width_) {
      width_ = width;
      if (declared_ && *declared_ != width) {
        fail(ErrorCode::kWidthMismatch, ket_at,
             "ket has " + std::to_string(width) + " qubits but header declares " +
                 std::to_string(*declared_));
      }
    } else if (*width_ != width) {
      fail(ErrorCode::kWidthMismatch, ket_at,
           "ket has " + std::to_string(width) + " qubits, expected " + std::to_string(*width_));
    }
    if (negative) coeff = -coeff;
    auto [it, inserted] = accumulated_.try_emplace(bits, coeff);
    if (!inserted) it->second += coeff;
  }

  bool starts_factor() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') return true;
    const auto id = peek_identifier();
    return id == "i" || id == "sqrt";
  }

  ExactScalar parse_coeff() {
    const std::size_t start = pos_;
    ExactScalar value = parse_factor();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        // A trailing '*' right before a ket belongs to the term, not the product.
        const std::size_t save = pos_;
        ++pos_;
        skip_space();
        if (peek() == '|') {
          pos_ = save;
          return value;
        }
        value = checked(start, [&] { return value * parse_factor(); });
      } else if (c == '/') {
        ++pos_;
        skip_space();
        const std::size_t divisor_at = pos_;
        ExactScalar divisor = parse_factor();
        value = checked(divisor_at, [&] { return value / divisor; });
      } else {
        return value;
      }
    }
  }

  ExactScalar parse_factor() {
    skip_space();
    const char c = peek();
    const std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return ExactScalar(mpq_class(parse_uint()));
    }
    if (c == '(') {
      if (++depth_ > kMaxNesting) fail(ErrorCode::kSyntaxError, at, "parentheses nested too deeply");
      ++pos_;
      ExactScalar sum = parse_coeff();
      for (;;) {
        skip_space();
        const char op = peek();
        if (op == '+' || op == '-') {
          ++pos_;
          skip_space();
          ExactScalar rhs = parse_coeff();
          sum = checked(at, [&] { return op == '+' ? sum + rhs : sum - rhs; });
        } else if (op == ')') {
          ++pos_;
          break;
        } else {
          syntax_error({"'+'", "'-'", "'*'", "'/'", "')'"});
        }
      }
      --depth_;
      return sum;
    }
    const auto id = peek_identifier();
    if (id == "i") {
      pos_ += 1;
      return ExactScalar::imaginary_unit();
    }
    if (id == "sqrt") {
      pos_ += 4;
      expect('(');
      skip_space();
      const std::size_t arg_at = pos_;
      const mpz_class k = parse_uint();
      if (k > std::numeric_limits<std::uint64_t>::max()) {
        fail(ErrorCode::kRadicandOverflow, arg_at, "radicand exceeds 64 bits");
      }
      expect(')');
      return ExactScalar::sqrt(std::stoull(k.get_str()));
    }
    syntax_error({"integer", "'sqrt('", "'i'", "'('"});
  }

  mpz_class parse_uint() {
    skip_space();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) syntax_error({"integer"});
    return mpz_class(std::string(src_.substr(start, pos_ - start)), 10);
  }

  template <typename F>
  ExactScalar checked(std::size_t at, F&& op) {
    try {
      return op();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.code(), at, e.what());
    }
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) syntax_error({std::string("'") + c + "'"});
    ++pos_;
  }

  std::string_view peek_identifier() const {
    std::size_t end = pos_;
    while (end < src_.size() && std::isalpha(static_cast<unsigned char>(src_[end]))) ++end;
    return src_.substr(pos_, end - pos_);
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= src_.size(); }

  SourcePosition position_of(std::size_t offset) const {
    SourcePosition p;
    p.offset = offset;
    for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++p.line;
        p.column = 1;
      } else {
        ++p.column;
      }
    }
    return p;
  }

  [[noreturn]] void syntax_error(std::vector<std::string> expected) {
    const std::string found =
        at_end() ? "end of input" : "'" + std::string(1, src_[pos_]) + "'";
    throw ParseError(ErrorCode::kSyntaxError, position_of(pos_), "unexpected " + found,
                     std::move(expected));
  }

  [[noreturn]] void fail(ErrorCode code, std::size_t at, const std::string& message) {
    throw ParseError(code, position_of(at), message);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::optional<int> width_;
  std::optional<int> declared_;
  std::map<std::uint64_t, ExactScalar> accumulated_;
};

}  // namespace

StateDocument parse_document(std::string_view text) { return Parser(text).parse(); }

SparseState parse_state(std::string_view text) { return parse_document(text).parsed; }

std::string render_state(const SparseState& state) {
  std::string out;
  bool first = true;
  for (const auto& t : state.terms()) {
    const bool negative = leading_negative(t.amplitude);
    const ExactScalar magnitude = negative ? -t.amplitude : t.amplitude;
    if (negative) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    if (!magnitude.is_one()) out += to_string(magnitude);
    out += '|' + t.basis.to_string() + '>';
    first = false;
  }
  return out;
}

}  // namespace entgate
