#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "repstab/rational.hpp"

namespace repstab {

// Coefficient field: the rationals, or a prime field F_p with p < 2^31.
//
// Scalars are carried as Rational values regardless of the field.  For F_p
// the canonical element is the integer residue in [0, p) with denominator 1;
// all arithmetic below keeps elements canonical, so matrix code never needs
// to know which field is active.
class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  FieldSpec() : kind_(Kind::rationals), p_(0) {}

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint32_t p);  // invalid_field unless p prime, p < 2^31

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  std::uint32_t characteristic() const { return is_prime() ? p_ : 0; }

  bool operator==(const FieldSpec& other) const = default;

  // "Q" or "F<p>".
  std::string name() const;
  static FieldSpec parse(std::string_view text);  // accepts "Q", "Fp"

  // Maps an arbitrary rational into this field: identity over Q; over F_p
  // the value num * den^-1 mod p, rejecting denominators divisible by p.
  Rational embed(const Rational& value) const;
  bool is_element(const Rational& value) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;  // division_by_zero on 0
  Rational div(const Rational& a, const Rational& b) const;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }

 private:
  explicit FieldSpec(std::uint32_t p) : kind_(Kind::prime), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

}  // namespace repstab
