#include "catalytic/rational.hpp"

#include <memory>

namespace catalytic {

std::string BigInt::to_string() const {
  char* s = mpz_get_str(nullptr, 10, z_);
  std::string out(s);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, out.size() + 1);
  return out;
}

BigRational::BigRational(long num, long den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
}

BigRational::BigRational(const BigInt& num) {
  mpq_init(q_);
  mpq_set_z(q_, num.raw());
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::domain_error("BigRational: zero denominator");
  mpq_init(q_);
  mpz_set(mpq_numref(q_), num.raw());
  mpz_set(mpq_denref(q_), den.raw());
  mpq_canonicalize(q_);
}

BigRational::BigRational(const std::string& text) {
  mpq_init(q_);
  if (mpq_set_str(q_, text.c_str(), 10) != 0) {
    mpq_clear(q_);
    throw std::invalid_argument("BigRational: bad rational string: " + text);
  }
  if (mpz_sgn(mpq_denref(q_)) == 0) {
    mpq_clear(q_);
    throw std::domain_error("BigRational: zero denominator in: " + text);
  }
  mpq_canonicalize(q_);
}

BigInt BigRational::numerator() const {
  BigInt n;
  mpz_set(n.raw(), mpq_numref(q_));
  return n;
}

BigInt BigRational::denominator() const {
  BigInt d;
  mpz_set(d.raw(), mpq_denref(q_));
  return d;
}

BigRational BigRational::pow(unsigned long e) const {
  BigRational r(1);
  BigRational base(*this);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::string BigRational::to_string() const {
  char* s = mpq_get_str(nullptr, 10, q_);
  std::string out(s);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, out.size() + 1);
  return out;
}

}  // namespace catalytic
