#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "repstab/rational.hpp"

namespace repstab {

// Class in the Grothendieck lattice spanned by the simples: one integer
// coefficient per vertex.  Effective classes (all entries >= 0) are the
// classes of actual objects.
struct GClass {
  std::vector<long long> coeffs;

  GClass() = default;
  explicit GClass(std::vector<long long> c) : coeffs(std::move(c)) {}
  static GClass zero(std::size_t n) { return GClass(std::vector<long long>(n, 0)); }
  static GClass unit(std::size_t n, std::size_t i) {
    GClass g = zero(n);
    g.coeffs.at(i) = 1;
    return g;
  }

  std::size_t size() const { return coeffs.size(); }
  bool is_zero() const {
    for (long long c : coeffs)
      if (c != 0) return false;
    return true;
  }
  bool is_effective() const {
    for (long long c : coeffs)
      if (c < 0) return false;
    return true;
  }
  // Indices with nonzero coefficient, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) s.push_back(i);
    return s;
  }
  long long total() const {
    long long t = 0;
    for (long long c : coeffs) t += c;
    return t;
  }

  bool operator==(const GClass&) const = default;
};

GClass operator+(const GClass& a, const GClass& b);
GClass operator-(const GClass& a, const GClass& b);

// Class in the lattice spanned by the indecomposable projectives, with
// rational coefficients (integral for slope parameters, fractional for the
// length functionals 1/tau_i * [P_i]).
struct KClass {
  std::vector<Rational> coeffs;

  KClass() = default;
  explicit KClass(std::vector<Rational> c) : coeffs(std::move(c)) {}
  static KClass zero(std::size_t n) { return KClass(std::vector<Rational>(n)); }

  std::size_t size() const { return coeffs.size(); }
  bool is_zero() const {
    for (const Rational& c : coeffs)
      if (sgn(c) != 0) return false;
    return true;
  }
  bool is_nonnegative() const {
    for (const Rational& c : coeffs)
      if (sgn(c) < 0) return false;
    return true;
  }

  bool operator==(const KClass& other) const { return coeffs == other.coeffs; }
};

KClass operator+(const KClass& a, const KClass& b);
KClass operator-(const KClass& a, const KClass& b);
KClass operator*(const Rational& c, const KClass& a);

std::string to_string(const GClass& a);
std::string to_string(const KClass& a);

}  // namespace repstab
