#include "repstab/ktheory.hpp"

#include <string>

#include "repstab/error.hpp"

namespace repstab {

// ---- class arithmetic ----

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(ErrorCode::index_mismatch, "classes over different index sets");
}

}  // namespace

GClass operator+(const GClass& a, const GClass& b) {
  require_same_size(a.size(), b.size());
  GClass out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

GClass operator-(const GClass& a, const GClass& b) {
  require_same_size(a.size(), b.size());
  GClass out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

KClass operator+(const KClass& a, const KClass& b) {
  require_same_size(a.size(), b.size());
  KClass out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

KClass operator-(const KClass& a, const KClass& b) {
  require_same_size(a.size(), b.size());
  KClass out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

KClass operator*(const Rational& c, const KClass& a) {
  KClass out = a;
  for (Rational& x : out.coeffs) x *= c;
  return out;
}

std::string to_string(const GClass& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.coeffs[i]);
  }
  return s + ")";
}

std::string to_string(const KClass& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += to_string(a.coeffs[i]);
  }
  return s + ")";
}

// ---- pairing ----

PairingMatrix PairingMatrix::from_entries(Matrix entries) {
  if (entries.rows() != entries.cols())
    throw Error(ErrorCode::shape_mismatch, "pairing matrix must be square");
  for (std::size_t i = 0; i < entries.rows(); ++i) {
    for (std::size_t j = 0; j < entries.cols(); ++j) {
      if (i != j && sgn(entries.at(i, j)) != 0)
        throw Error(ErrorCode::not_diagonal,
                    "projective/simple pairing is not diagonal");
    }
    if (sgn(entries.at(i, i)) <= 0)
      throw Error(ErrorCode::not_diagonal,
                  "pairing diagonal must be positive");
  }
  PairingMatrix pm;
  pm.entries_ = std::move(entries);
  return pm;
}

PairingMatrix dual_basis_matrix(const AlgebraPtr& algebra,
                                const FieldSpec& field) {
  if (!algebra) throw Error(ErrorCode::bad_input, "empty algebra handle");
  const std::size_t n = algebra->vertex_count();
  Matrix entries(FieldSpec::rationals(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Representation p = projective(algebra, i, field);
    for (std::size_t j = 0; j < n; ++j) {
      HomBasis h = hom_space(p, simple_at(algebra, j, field));
      entries.set(i, j, make_rational(static_cast<long>(h.dim())));
    }
  }
  return PairingMatrix::from_entries(std::move(entries));
}

GClass g_class(const Representation& v) {
  GClass g;
  for (std::size_t d : v.dims()) g.coeffs.push_back(static_cast<long long>(d));
  return g;
}

Rational pairing(const PairingMatrix& pm, const KClass& beta,
                 const GClass& alpha) {
  require_same_size(beta.size(), alpha.size());
  require_same_size(beta.size(), pm.size());
  Rational sum(0);
  for (std::size_t i = 0; i < beta.size(); ++i)
    sum += beta.coeffs[i] * pm.tau(i) *
           make_rational(static_cast<long>(alpha.coeffs[i]));
  return sum;
}

Rational pairing_object(const KClass& beta, const Representation& v) {
  require_same_size(beta.size(), v.algebra()->vertex_count());
  Rational sum(0);
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (sgn(beta.coeffs[i]) == 0) continue;
    Representation p = projective(v.algebra(), i, v.field());
    sum += beta.coeffs[i] * Rational(static_cast<long>(hom_space(p, v).dim()));
  }
  return sum;
}

Rational gamma_length(const PairingMatrix& pm, const KClass& gamma,
                      const GClass& alpha) {
  if (!gamma.is_nonnegative())
    throw Error(ErrorCode::negative_gamma,
                "gamma must be componentwise nonnegative");
  return pairing(pm, gamma, alpha);
}

Rational gamma_length(const PairingMatrix& pm, const KClass& gamma,
                      const Representation& v) {
  return gamma_length(pm, gamma, g_class(v));
}

KClass canonical_gamma(const PairingMatrix& pm, const GClass& alpha) {
  require_same_size(pm.size(), alpha.size());
  KClass gamma = KClass::zero(alpha.size());
  for (std::size_t i : alpha.support()) gamma.coeffs[i] = 1 / pm.tau(i);
  return gamma;
}

KClass canonical_gamma(const AlgebraPtr& algebra, const GClass& alpha,
                       const FieldSpec& field) {
  return canonical_gamma(dual_basis_matrix(algebra, field), alpha);
}

bool is_nondegenerate(const KClass& gamma, const GClass& alpha) {
  require_same_size(gamma.size(), alpha.size());
  for (std::size_t i : alpha.support())
    if (sgn(gamma.coeffs[i]) <= 0) return false;
  return true;
}

GClass minimal_cover_vector(const GClass& alpha) {
  if (!alpha.is_effective())
    throw Error(ErrorCode::negative_class,
                "cover vector needs an effective class");
  return alpha;
}

}  // namespace repstab
