#include "repstab/field.hpp"

#include <cctype>

#include "repstab/error.hpp"

namespace repstab {

namespace {

// Canonical F_p residues always fit in long: p < 2^31.
long residue_of(const Rational& a) {
  return mpz_get_si(a.get_num().get_mpz_t());
}

Rational from_residue(long r) { return Rational(r); }

// x^-1 mod p via extended Euclid; x in [1, p).
long mod_inverse(long x, long p) {
  long r0 = p, r1 = x, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    long t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  // r0 == gcd == 1 since p is prime and x not divisible by p
  return ((t0 % p) + p) % p;
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_number(p))
    throw Error(ErrorCode::invalid_field,
                "characteristic " + std::to_string(p) +
                    " is not a prime below 2^31");
  return FieldSpec(p);
}

std::string FieldSpec::name() const {
  return is_prime() ? "F" + std::to_string(p_) : "Q";
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text.front() == 'F') {
    std::uint64_t p = 0;
    for (char c : text.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) p = ~0ull;
      if (p == ~0ull) break;
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
      if (p >= (1ull << 32)) { p = ~0ull; break; }
    }
    if (p != ~0ull) return prime(static_cast<std::uint32_t>(p));
  }
  throw Error(ErrorCode::invalid_field,
              "unknown field '" + std::string(text) + "' (expected Q or Fp)");
}

Rational FieldSpec::embed(const Rational& value) const {
  if (!is_prime()) return value;
  Integer den_mod = value.get_den() % p_;
  if (den_mod == 0)
    throw Error(ErrorCode::invalid_field,
                "denominator of " + to_string(value) + " vanishes in " + name());
  Integer num_mod = value.get_num() % p_;
  long num = ((num_mod.get_si() % static_cast<long>(p_)) + p_) % p_;
  long den = ((den_mod.get_si() % static_cast<long>(p_)) + p_) % p_;
  long r = num;
  if (den != 1) r = (num * mod_inverse(den, p_)) % p_;
  return from_residue(r);
}

bool FieldSpec::is_element(const Rational& value) const {
  if (!is_prime()) return true;
  return is_integer(value) && value >= 0 && value < static_cast<long>(p_);
}

Rational FieldSpec::add(const Rational& a, const Rational& b) const {
  if (!is_prime()) return a + b;
  return from_residue((residue_of(a) + residue_of(b)) % p_);
}

Rational FieldSpec::sub(const Rational& a, const Rational& b) const {
  if (!is_prime()) return a - b;
  long p = p_;
  return from_residue(((residue_of(a) - residue_of(b)) % p + p) % p);
}

Rational FieldSpec::mul(const Rational& a, const Rational& b) const {
  if (!is_prime()) return a * b;
  return from_residue((residue_of(a) * residue_of(b)) % p_);
}

Rational FieldSpec::neg(const Rational& a) const {
  if (!is_prime()) return -a;
  long p = p_;
  return from_residue((p - residue_of(a)) % p);
}

Rational FieldSpec::inv(const Rational& a) const {
  if (sgn(a) == 0)
    throw Error(ErrorCode::division_by_zero, "inverse of zero in " + name());
  if (!is_prime()) return 1 / a;
  return from_residue(mod_inverse(residue_of(a), p_));
}

Rational FieldSpec::div(const Rational& a, const Rational& b) const {
  return mul(a, inv(b));
}

}  // namespace repstab
