#include "entgate/arith.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "entgate/error.hpp"
#include "number_theory.hpp"

namespace entgate {
namespace {

// Sorts by radicand, merges equal radicands and drops zeros.
RadicalSum canonicalize(RadicalSum terms) {
  std::sort(terms.begin(), terms.end(),
            [](const RadicalTerm& a, const RadicalTerm& b) { return a.radicand < b.radicand; });
  RadicalSum out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().radicand == t.radicand) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const RadicalTerm& t) { return sgn(t.coeff) == 0; });
  return out;
}

RadicalSum add_sums(const RadicalSum& a, const RadicalSum& b, bool subtract) {
  RadicalSum out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->radicand < ib->radicand)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->radicand < ia->radicand) {
      out.push_back({ib->radicand, subtract ? mpq_class(-ib->coeff) : ib->coeff});
      ++ib;
    } else {
      mpq_class c = subtract ? mpq_class(ia->coeff - ib->coeff) : mpq_class(ia->coeff + ib->coeff);
      if (sgn(c) != 0) out.push_back({ia->radicand, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Appends a*b for every pair of components to `out`, with sign.
void multiply_into(const RadicalSum& a, const RadicalSum& b, bool negate, RadicalSum& out) {
  for (const auto& x : a) {
    for (const auto& y : b) {
      // sqrt(j)*sqrt(k) = g*sqrt((j/g)*(k/g)) for square-free j, k with g = gcd.
      const std::uint64_t g = gcd_u64(x.radicand, y.radicand);
      const unsigned __int128 r =
          static_cast<unsigned __int128>(x.radicand / g) * (y.radicand / g);
      if (r > UINT64_MAX) {
        throw Error(ErrorCode::kRadicandOverflow, "radicand product exceeds 64 bits");
      }
      mpq_class c = x.coeff * y.coeff;
      if (g != 1) c *= mpz_class(std::to_string(g));
      if (negate) c = -c;
      out.push_back({static_cast<std::uint64_t>(r), std::move(c)});
    }
  }
}

RadicalSum negate_sum(RadicalSum s) {
  for (auto& t : s) t.coeff = -t.coeff;
  return s;
}

// Flips the sign of every component whose radicand is divisible by p: the
// field automorphism sqrt(p) -> -sqrt(p).
RadicalSum flip_prime(RadicalSum s, std::uint64_t p) {
  for (auto& t : s) {
    if (t.radicand % p == 0) t.coeff = -t.coeff;
  }
  return s;
}

mpz_class to_mpz(std::uint64_t v) { return mpz_class(std::to_string(v)); }

std::string component_text(const RadicalTerm& t, bool imaginary) {
  mpz_class num = abs(t.coeff.get_num());
  const mpz_class& den = t.coeff.get_den();
  std::vector<std::string> parts;
  if (num != 1 || (t.radicand == 1 && !imaginary)) parts.push_back(num.get_str());
  if (t.radicand != 1) parts.push_back("sqrt(" + std::to_string(t.radicand) + ")");
  if (imaginary) parts.push_back("i");
  std::string text;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) text += '*';
    text += parts[i];
  }
  if (den != 1) text += "/" + den.get_str();
  return text;
}

}  // namespace

ExactScalar::ExactScalar(long value) {
  if (value != 0) real_.push_back({1, mpq_class(value)});
}

ExactScalar::ExactScalar(const mpq_class& value) {
  if (sgn(value) != 0) real_.push_back({1, value});
}

ExactScalar ExactScalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return ExactScalar(q);
}

ExactScalar ExactScalar::sqrt(std::uint64_t k) {
  if (k == 0) return {};
  const auto split = detail::split_square(k);
  ExactScalar out;
  out.real_.push_back({split.square_free, mpq_class(to_mpz(split.square_root))});
  return out;
}

ExactScalar ExactScalar::imaginary_unit() {
  ExactScalar out;
  out.imag_.push_back({1, mpq_class(1)});
  return out;
}

ExactScalar ExactScalar::from_parts(RadicalSum real, RadicalSum imag) {
  for (const auto* part : {&real, &imag}) {
    for (const auto& t : *part) {
      if (!detail::is_square_free(t.radicand)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "radicand " + std::to_string(t.radicand) + " is not square-free");
      }
    }
  }
  ExactScalar out;
  out.real_ = canonicalize(std::move(real));
  out.imag_ = canonicalize(std::move(imag));
  return out;
}

bool ExactScalar::is_one() const {
  return imag_.empty() && real_.size() == 1 && real_[0].radicand == 1 && real_[0].coeff == 1;
}

bool ExactScalar::is_rational() const {
  return imag_.empty() && (real_.empty() || (real_.size() == 1 && real_[0].radicand == 1));
}

ExactScalar ExactScalar::conj() const {
  ExactScalar out = *this;
  out.imag_ = negate_sum(std::move(out.imag_));
  return out;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");

  std::set<std::uint64_t> primes;
  for (const auto* part : {&real_, &imag_}) {
    for (const auto& t : *part) {
      for (auto p : detail::prime_divisors(t.radicand)) primes.insert(p);
    }
  }
  const int generators = static_cast<int>(primes.size()) + (imag_.empty() ? 0 : 1);
  if (generators > kMaxInverseGenerators) {
    throw Error(ErrorCode::kDivisionUnsupported,
                "inverse needs " + std::to_string(generators) + " field generators (max " +
                    std::to_string(kMaxInverseGenerators) + ")");
  }

  // x * sigma_p(x) is fixed by sigma_p, so it no longer involves sqrt(p).
  // After all primes and complex conjugation the denominator is rational.
  ExactScalar num(1L);
  ExactScalar den = *this;
  for (auto p : primes) {
    ExactScalar c;
    c.real_ = flip_prime(den.real_, p);
    c.imag_ = flip_prime(den.imag_, p);
    num *= c;
    den *= c;
  }
  if (!den.imag_.empty()) {
    ExactScalar c = den.conj();
    num *= c;
    den *= c;
  }
  // den is now a non-zero rational.
  const mpq_class d = den.real_.at(0).coeff;
  for (auto* part : {&num.real_, &num.imag_}) {
    for (auto& t : *part) t.coeff /= d;
  }
  return num;
}

std::complex<double> ExactScalar::to_complex() const {
  auto eval = [](const RadicalSum& s) {
    double v = 0.0;
    for (const auto& t : s) v += t.coeff.get_d() * std::sqrt(static_cast<double>(t.radicand));
    return v;
  };
  return {eval(real_), eval(imag_)};
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out;
  out.real_ = negate_sum(real_);
  out.imag_ = negate_sum(imag_);
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& other) {
  real_ = add_sums(real_, other.real_, false);
  imag_ = add_sums(imag_, other.imag_, false);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& other) {
  real_ = add_sums(real_, other.real_, true);
  imag_ = add_sums(imag_, other.imag_, true);
  return *this;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  // (ar + i ai)(br + i bi) = (ar br - ai bi) + i (ar bi + ai br)
  RadicalSum re;
  RadicalSum im;
  multiply_into(a.real_, b.real_, false, re);
  multiply_into(a.imag_, b.imag_, true, re);
  multiply_into(a.real_, b.imag_, false, im);
  multiply_into(a.imag_, b.real_, false, im);
  ExactScalar out;
  out.real_ = canonicalize(std::move(re));
  out.imag_ = canonicalize(std::move(im));
  return out;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& other) { return *this = *this * other; }

ExactScalar& ExactScalar::operator/=(const ExactScalar& other) { return *this = *this / other; }

std::size_t ExactScalar::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto* part : {&real_, &imag_}) {
    mix(part->size());
    for (const auto& t : *part) {
      mix(std::hash<std::uint64_t>{}(t.radicand));
      mix(std::hash<std::string>{}(t.coeff.get_str()));
    }
  }
  return h;
}

ExactScalar scalar_add(const ExactScalar& a, const ExactScalar& b) { return a + b; }

ExactScalar scalar_mul(const ExactScalar& a, const ExactScalar& b) { return a * b; }

bool scalar_is_zero(const ExactScalar& a) { return a.is_zero(); }

ExactScalar cross_minor(const ExactScalar& a, const ExactScalar& b, const ExactScalar& c,
                        const ExactScalar& d) {
  return a * d - b * c;
}

ExactScalar scalar_norm_sq(const ExactScalar& a) { return a * a.conj(); }

bool is_canonical(const ExactScalar& a) {
  for (const auto* part : {&a.real_part(), &a.imag_part()}) {
    for (std::size_t i = 0; i < part->size(); ++i) {
      const auto& t = (*part)[i];
      if (sgn(t.coeff) == 0) return false;
      if (t.coeff.get_den() <= 0) return false;
      if (gcd(t.coeff.get_num(), t.coeff.get_den()) != 1) return false;
      if (!detail::is_square_free(t.radicand)) return false;
      if (i > 0 && (*part)[i - 1].radicand >= t.radicand) return false;
    }
  }
  return true;
}

bool leading_negative(const ExactScalar& a) {
  if (!a.real_part().empty()) return sgn(a.real_part().front().coeff) < 0;
  if (!a.imag_part().empty()) return sgn(a.imag_part().front().coeff) < 0;
  return false;
}

std::string to_string(const ExactScalar& a) {
  if (a.is_zero()) return "0";
  struct Piece {
    bool negative;
    std::string text;
  };
  std::vector<Piece> pieces;
  for (const auto& t : a.real_part()) pieces.push_back({sgn(t.coeff) < 0, component_text(t, false)});
  for (const auto& t : a.imag_part()) pieces.push_back({sgn(t.coeff) < 0, component_text(t, true)});

  if (pieces.size() == 1) return (pieces[0].negative ? "-" : "") + pieces[0].text;

  // Parenthesised sums cannot start with '-', so factor the leading sign out.
  const bool flip = pieces[0].negative;
  std::string body;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const bool neg = pieces[i].negative != flip;
    if (i > 0) body += neg ? '-' : '+';
    body += pieces[i].text;
  }
  return (flip ? "-(" : "(") + body + ")";
}

}  // namespace entgate
