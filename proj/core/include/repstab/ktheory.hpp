#pragma once

#include <cstddef>

#include "repstab/classes.hpp"
#include "repstab/structure.hpp"

namespace repstab {

// The pairing of the projective basis against the simple basis: entry (i,j)
// is dim Hom(P_i, S_j).  Admissible presentations make this diagonal with
// positive diagonal entries tau_i = dim End(S_i); construction rejects
// anything else.
class PairingMatrix {
 public:
  static PairingMatrix from_entries(Matrix entries);

  const Matrix& entries() const { return entries_; }
  std::size_t size() const { return entries_.rows(); }
  const Rational& tau(std::size_t i) const { return entries_.at(i, i); }

 private:
  Matrix entries_{FieldSpec::rationals(), 0, 0};
};

// Entry (i,j) = dim hom_space(P_i, S_j) over the given field.
PairingMatrix dual_basis_matrix(const AlgebraPtr& algebra,
                                const FieldSpec& field = FieldSpec::rationals());

// Composition-factor class of v; reads off the dimension vector (the fast
// route; structure::gr is the chain-computed cross-check).
GClass g_class(const Representation& v);

// <beta, alpha> = sum_i beta_i tau_i alpha_i.
Rational pairing(const PairingMatrix& pm, const KClass& beta, const GClass& alpha);

// <beta, [V]> computed the Hom way: sum_i beta_i dim Hom(P_i, V).
Rational pairing_object(const KClass& beta, const Representation& v);

// gamma-length l_gamma = <gamma, ->; gamma must be componentwise >= 0.
Rational gamma_length(const PairingMatrix& pm, const KClass& gamma,
                      const GClass& alpha);
Rational gamma_length(const PairingMatrix& pm, const KClass& gamma,
                      const Representation& v);

// gamma = sum over the support of alpha of (1/tau_i) [P_i]; its length is
// the plain length, and it is alpha-nondegenerate by construction.
KClass canonical_gamma(const AlgebraPtr& algebra, const GClass& alpha,
                       const FieldSpec& field = FieldSpec::rationals());
KClass canonical_gamma(const PairingMatrix& pm, const GClass& alpha);

// gamma_i > 0 for every i in the support of alpha.
bool is_nondegenerate(const KClass& gamma, const GClass& alpha);

// Multiplicity vector n with n_j = alpha_j on the support: every object of
// class alpha is a quotient of the projective sum_j P_j^{n_j}.
GClass minimal_cover_vector(const GClass& alpha);

}  // namespace repstab
