#pragma once

// Exact complex scalars over Q(i, sqrt(2), sqrt(3), sqrt(5), ...).
//
// A value is stored as two Q-linear combinations of square roots of
// square-free positive integers, one for the real part and one for the
// imaginary part. Square roots of distinct square-free integers are linearly
// independent over Q, so the canonical form is unique and zero tests are
// exact.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace entgate {

/// coeff * sqrt(radicand); radicand square-free, radicand == 1 is the
/// rational component.
struct RadicalTerm {
  std::uint64_t radicand = 1;
  mpq_class coeff;

  friend bool operator==(const RadicalTerm& a, const RadicalTerm& b) {
    return a.radicand == b.radicand && a.coeff == b.coeff;
  }
};

/// Sorted by radicand, no zero coefficients.
using RadicalSum = std::vector<RadicalTerm>;

class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value);  // NOLINT(google-explicit-constructor)
  explicit ExactScalar(const mpq_class& value);

  static ExactScalar rational(const mpz_class& num, const mpz_class& den);
  static ExactScalar rational(long num, long den) {
    return rational(mpz_class(num), mpz_class(den));
  }
  /// sqrt(k), with the square part pulled out: sqrt(8) == 2*sqrt(2).
  static ExactScalar sqrt(std::uint64_t k);
  static ExactScalar imaginary_unit();
  /// Builds a scalar from possibly non-canonical parts; radicands must be
  /// square-free (checked).
  static ExactScalar from_parts(RadicalSum real, RadicalSum imag);

  const RadicalSum& real_part() const noexcept { return real_; }
  const RadicalSum& imag_part() const noexcept { return imag_; }

  bool is_zero() const noexcept { return real_.empty() && imag_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  bool is_real() const noexcept { return imag_.empty(); }

  ExactScalar conj() const;
  /// Multiplicative inverse by successive field-conjugate multiplication.
  /// Throws kDivisionByZero for zero and kDivisionUnsupported when the value
  /// involves more than kMaxInverseGenerators distinct primes plus i.
  ExactScalar inverse() const;

  std::complex<double> to_complex() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& other);
  ExactScalar& operator-=(const ExactScalar& other);
  ExactScalar& operator*=(const ExactScalar& other);
  ExactScalar& operator/=(const ExactScalar& other);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    return a * b.inverse();
  }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.real_ == b.real_ && a.imag_ == b.imag_;
  }

  std::size_t hash() const;

  static constexpr int kMaxInverseGenerators = 10;

 private:
  RadicalSum real_;
  RadicalSum imag_;
};

ExactScalar scalar_add(const ExactScalar& a, const ExactScalar& b);
ExactScalar scalar_mul(const ExactScalar& a, const ExactScalar& b);
bool scalar_is_zero(const ExactScalar& a);

/// a*d - b*c, the 2x2 minor of [[a, b], [c, d]].
ExactScalar cross_minor(const ExactScalar& a, const ExactScalar& b,
                        const ExactScalar& c, const ExactScalar& d);

/// a * conj(a); always real and non-negative.
ExactScalar scalar_norm_sq(const ExactScalar& a);

/// True when every radicand is square-free, coefficients are non-zero and
/// each part is strictly sorted by radicand.
bool is_canonical(const ExactScalar& a);

/// Sign of the first non-zero component (real parts before imaginary,
/// ascending radicand). Used to pull a sign out in front of a term.
bool leading_negative(const ExactScalar& a);

/// Coefficient text in the bra-ket grammar, e.g. "sqrt(3)/3",
/// "(1+i*sqrt(2))". A leading '-' is emitted for negative single-component
/// values; multi-component values are parenthesised and, when their leading
/// component is negative, prefixed by '-'.
std::string to_string(const ExactScalar& a);

}  // namespace entgate
