#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "repstab/ktheory.hpp"
#include "repstab/search.hpp"

namespace repstab {

// A slope-stability datum: beta is the slope parameter, gamma a nonnegative
// length functional that must be nondegenerate on the support of the ambient
// class alpha.  The projective/simple pairing is computed once and kept.
class StabilityData {
 public:
  static StabilityData make(AlgebraPtr algebra, KClass beta, KClass gamma,
                            GClass alpha);

  const AlgebraPtr& algebra() const { return algebra_; }
  const KClass& beta() const { return beta_; }
  const KClass& gamma() const { return gamma_; }
  const GClass& alpha() const { return alpha_; }
  const PairingMatrix& pairing_matrix() const { return pairing_; }

 private:
  AlgebraPtr algebra_;
  KClass beta_;
  KClass gamma_;
  GClass alpha_;
  PairingMatrix pairing_;
};

// sigma_beta = <beta, -> / l_gamma(-).  Zero gamma-length has no slope.
Rational slope(const StabilityData& sd, const GClass& cls);
Rational slope(const StabilityData& sd, const Representation& e);

// Exhaustive sweep for a subobject of strictly bigger slope; absence is a
// semistability certificate.  Prime fields only (over the rationals the
// sweep cannot be exhaustive, so we refuse rather than guess).
std::optional<Subrepresentation> destabilizer_search(
    const StabilityData& sd, const Representation& v,
    const SearchLimits& limits = {});

// (semistable?, destabilizing witness when not).
std::pair<bool, std::optional<Subrepresentation>> is_semistable(
    const StabilityData& sd, const Representation& v,
    const SearchLimits& limits = {});

// Harder-Narasimhan data: chain[t] is the weight-t step as a subobject of v
// (last step full), type[t] the class and slope of chain[t]/chain[t-1].
struct HNStep {
  GClass cls;
  Rational slope;
};

struct HNFiltration {
  std::vector<Subrepresentation> chain;
  std::vector<HNStep> type;
};

// Iterated maximal destabilizer (max slope, then max gamma-length, then
// first in canonical search order), lifted through quotients.  Slopes come
// out strictly decreasing; every graded piece is verified semistable.
HNFiltration hn_filtration(const StabilityData& sd, const Representation& v,
                           const SearchLimits& limits = {});

// Strictly decreasing integer weights attached to a strictly increasing
// chain of subobjects 0 < A(1) < ... < A(m) = V.
class WeightedFiltration {
 public:
  static WeightedFiltration make(std::vector<long long> weights,
                                 std::vector<Subrepresentation> steps);

  const std::vector<long long>& weights() const { return weights_; }
  const std::vector<Subrepresentation>& steps() const { return steps_; }
  const Representation& ambient() const { return steps_.back().ambient(); }
  std::size_t size() const { return weights_.size(); }
  // Class of the graded piece A(t)/A(t-1).
  GClass graded_class(std::size_t t) const;

 private:
  std::vector<long long> weights_;
  std::vector<Subrepresentation> steps_;
};

// The numerical invariant as an exact pair (numerator, norm^2); the real
// value is numerator / sqrt(norm_sq).  Comparisons avoid square roots by
// comparing sign(numerator) * numerator^2 / norm_sq, which is order-
// preserving.
struct MuValue {
  Rational numerator;
  Rational norm_sq;

  int sign() const { return sgn(numerator); }
  Rational signed_square() const;
};

bool operator<(const MuValue& a, const MuValue& b);
bool operator==(const MuValue& a, const MuValue& b);

// Quadratic norm sum_t (w_t . r)^2 l_gamma(gr_t); rank-1 filtrations take a
// single rational r, the multigraded form takes explicit weight vectors.
struct GradedPiece {
  std::vector<long long> weight;
  GClass cls;
};

Rational b_gamma(const PairingMatrix& pm, const KClass& gamma,
                 const WeightedFiltration& f, const std::vector<Rational>& r);
Rational b_gamma(const PairingMatrix& pm, const KClass& gamma,
                 const std::vector<GradedPiece>& pieces,
                 const std::vector<Rational>& r);

// mu_beta(f): numerator sum_t w_t (l_gamma(alpha) <beta, gr_t> -
// <beta, alpha> l_gamma(gr_t)), norm_sq sum_t w_t^2 l_gamma(gr_t).
MuValue mu_beta(const StabilityData& sd, const WeightedFiltration& f);

// Sweep all weighted filtrations of v with weights in [-bound, bound] and
// return a maximizer of mu_beta; ties keep the first chain in canonical
// order with its lexicographically smallest weight vector.
std::pair<WeightedFiltration, MuValue> filtration_enumerate_max(
    const StabilityData& sd, const Representation& v, long long weight_bound,
    const SearchLimits& limits = {});

// Self-test: semistability must be invariant under beta -> beta + c gamma.
bool semistable_shift_check(const StabilityData& sd, const Representation& v,
                            const Rational& c, const SearchLimits& limits = {});

}  // namespace repstab
