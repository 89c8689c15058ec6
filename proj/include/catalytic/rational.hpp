// Exact arbitrary-precision integers and rationals, the scalar ground ring
// for everything else. Backed by GMP; the wrappers enforce canonical form
// (reduced, positive denominator, zero is 0/1).
#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace catalytic {

class BigInt {
 public:
  BigInt() { mpz_init(z_); }
  BigInt(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
  explicit BigInt(const std::string& decimal) {
    if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
      mpz_clear(z_);
      throw std::invalid_argument("BigInt: bad decimal string: " + decimal);
    }
  }
  BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigInt& operator=(const BigInt& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~BigInt() { mpz_clear(z_); }

  bool is_zero() const { return mpz_sgn(z_) == 0; }
  int sign() const { return mpz_sgn(z_); }
  bool is_one() const { return mpz_cmp_si(z_, 1) == 0; }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
  }
  BigInt operator-() const {
    BigInt r;
    mpz_neg(r.z_, z_);
    return r;
  }
  BigInt& operator+=(const BigInt& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  BigInt& operator-=(const BigInt& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  BigInt& operator*=(const BigInt& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }

  // Truncated toward zero, like C integer division.
  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_tdiv_q(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_tdiv_r(r.z_, a.z_, b.z_);
    return r;
  }
  // Quotient when b divides a exactly; undefined otherwise.
  static BigInt exact_quotient(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_divexact(r.z_, a.z_, b.z_);
    return r;
  }
  bool divisible_by(const BigInt& d) const { return mpz_divisible_p(z_, d.z_) != 0; }

  static BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
  }
  static BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.z_, a.z_, b.z_);
    return r;
  }
  BigInt abs() const {
    BigInt r;
    mpz_abs(r.z_, z_);
    return r;
  }
  BigInt pow(unsigned long e) const {
    BigInt r;
    mpz_pow_ui(r.z_, z_, e);
    return r;
  }
  static BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.z_, n);
    return r;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

  bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
  long to_long() const { return mpz_get_si(z_); }
  std::string to_string() const;

  const mpz_t& raw() const { return z_; }
  mpz_t& raw() { return z_; }

 private:
  mpz_t z_;
};

// Always reduced, denominator >= 1, canonical zero is 0/1.
class BigRational {
 public:
  BigRational() { mpq_init(q_); }
  BigRational(long v) {  // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  BigRational(long num, long den);
  BigRational(const BigInt& num);  // NOLINT
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(const std::string& text);  // "a" or "a/b"
  BigRational(const BigRational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  BigRational(BigRational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  BigRational& operator=(const BigRational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  BigRational& operator=(BigRational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~BigRational() { mpq_clear(q_); }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_si(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  BigInt numerator() const;
  BigInt denominator() const;

  friend BigRational operator+(const BigRational& a, const BigRational& b) {
    BigRational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend BigRational operator-(const BigRational& a, const BigRational& b) {
    BigRational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend BigRational operator*(const BigRational& a, const BigRational& b) {
    BigRational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.is_zero()) throw std::domain_error("BigRational: division by zero");
    BigRational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  BigRational operator-() const {
    BigRational r;
    mpq_neg(r.q_, q_);
    return r;
  }
  BigRational& operator+=(const BigRational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  BigRational& operator-=(const BigRational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  BigRational& operator*=(const BigRational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }

  BigRational inverse() const {
    if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
    BigRational r;
    mpq_inv(r.q_, q_);
    return r;
  }
  BigRational abs() const {
    BigRational r;
    mpq_abs(r.q_, q_);
    return r;
  }
  BigRational pow(unsigned long e) const;

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
  friend bool operator<(const BigRational& a, const BigRational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

  std::string to_string() const;  // "a" or "a/b", canonical

 private:
  mpq_t q_;
};

}  // namespace catalytic
