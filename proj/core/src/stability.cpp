#include "repstab/stability.hpp"

#include <string>

#include "repstab/error.hpp"

namespace repstab {

namespace {

Rational ll_rational(long long x) { return make_rational(static_cast<long>(x)); }

GClass dims_class(const std::vector<std::size_t>& dims) {
  GClass g;
  for (std::size_t d : dims) g.coeffs.push_back(static_cast<long long>(d));
  return g;
}

struct SlopeData {
  Rational slope;
  Rational length;
};

// Slope and gamma-length together; zero length is the caller's error.
SlopeData slope_of(const StabilityData& sd, const GClass& cls) {
  Rational len = gamma_length(sd.pairing_matrix(), sd.gamma(), cls);
  if (sgn(len) == 0)
    throw Error(ErrorCode::zero_gamma_length,
                "no slope: gamma-length of " + to_string(cls) + " is zero");
  return {pairing(sd.pairing_matrix(), sd.beta(), cls) / len, len};
}

// The subobject maximizing (slope, then gamma-length); first in canonical
// enumeration order on ties.  v must be nonzero over a prime field.
Subrepresentation maximal_subobject(const StabilityData& sd,
                                    const Representation& v,
                                    const SearchLimits& limits) {
  std::optional<Subrepresentation> best;
  SlopeData best_data{Rational(0), Rational(0)};
  for_each_subrepresentation(
      v,
      [&](const Subrepresentation& s) {
        if (s.is_zero()) return true;
        SlopeData d = slope_of(sd, dims_class(s.dims()));
        if (!best || d.slope > best_data.slope ||
            (d.slope == best_data.slope && d.length > best_data.length)) {
          best = s;
          best_data = d;
        }
        return true;
      },
      limits);
  if (!best) throw Error(ErrorCode::internal_error, "no subobject seen");
  return *best;
}

void require_class(const StabilityData& sd, const Representation& v) {
  if (!(g_class(v) == sd.alpha()))
    throw Error(ErrorCode::bad_input,
                "representation has class " + to_string(g_class(v)) +
                    ", stability datum expects " + to_string(sd.alpha()));
}

}  // namespace

StabilityData StabilityData::make(AlgebraPtr algebra, KClass beta, KClass gamma,
                                  GClass alpha) {
  if (!algebra) throw Error(ErrorCode::bad_input, "empty algebra handle");
  const std::size_t n = algebra->vertex_count();
  if (beta.size() != n || gamma.size() != n || alpha.size() != n)
    throw Error(ErrorCode::index_mismatch,
                "beta/gamma/alpha must have one entry per vertex");
  if (!gamma.is_nonnegative())
    throw Error(ErrorCode::negative_gamma,
                "gamma must be componentwise nonnegative");
  if (!alpha.is_effective())
    throw Error(ErrorCode::negative_class, "alpha must be effective");
  if (!is_nondegenerate(gamma, alpha))
    throw Error(ErrorCode::degenerate_gamma,
                "gamma vanishes on the support of alpha");

  StabilityData sd;
  sd.pairing_ = dual_basis_matrix(algebra);
  sd.algebra_ = std::move(algebra);
  sd.beta_ = std::move(beta);
  sd.gamma_ = std::move(gamma);
  sd.alpha_ = std::move(alpha);
  return sd;
}

Rational slope(const StabilityData& sd, const GClass& cls) {
  return slope_of(sd, cls).slope;
}

Rational slope(const StabilityData& sd, const Representation& e) {
  return slope_of(sd, g_class(e)).slope;
}

std::optional<Subrepresentation> destabilizer_search(const StabilityData& sd,
                                                     const Representation& v,
                                                     const SearchLimits& limits) {
  require_class(sd, v);
  Rational ambient = slope(sd, v);  // rejects the zero object
  Subrepresentation best = maximal_subobject(sd, v, limits);
  if (slope_of(sd, dims_class(best.dims())).slope > ambient) return best;
  return std::nullopt;
}

std::pair<bool, std::optional<Subrepresentation>> is_semistable(
    const StabilityData& sd, const Representation& v,
    const SearchLimits& limits) {
  std::optional<Subrepresentation> witness = destabilizer_search(sd, v, limits);
  return {!witness.has_value(), std::move(witness)};
}

HNFiltration hn_filtration(const StabilityData& sd, const Representation& v,
                           const SearchLimits& limits) {
  require_class(sd, v);
  slope(sd, v);  // rejects the zero object

  HNFiltration hn;
  Subrepresentation cur = Subrepresentation::zero(v);
  while (cur.total_dim() < v.total_dim()) {
    auto [q, pi] = quotient(v, cur);
    Subrepresentation piece = maximal_subobject(sd, q, limits);

    // Maximality in the quotient must make the piece itself semistable.
    Representation piece_rep = piece.to_representation();
    SlopeData piece_data = slope_of(sd, dims_class(piece.dims()));
    Subrepresentation inner = maximal_subobject(sd, piece_rep, limits);
    if (slope_of(sd, dims_class(inner.dims())).slope > piece_data.slope)
      throw Error(ErrorCode::internal_error, "maximal piece not semistable");

    if (!hn.type.empty() && !(piece_data.slope < hn.type.back().slope))
      throw Error(ErrorCode::internal_error, "slopes not strictly decreasing");
    hn.type.push_back({dims_class(piece.dims()), piece_data.slope});
    cur = preimage(pi, piece);
    hn.chain.push_back(cur);
  }
  return hn;
}

// ---- weighted filtrations ----

WeightedFiltration WeightedFiltration::make(std::vector<long long> weights,
                                            std::vector<Subrepresentation> steps) {
  if (steps.empty())
    throw Error(ErrorCode::bad_input, "a filtration needs at least one step");
  if (weights.size() != steps.size())
    throw Error(ErrorCode::index_mismatch, "one weight per step required");
  for (std::size_t t = 1; t < weights.size(); ++t)
    if (weights[t - 1] <= weights[t])
      throw Error(ErrorCode::bad_input, "weights must strictly decrease");
  for (std::size_t t = 1; t < steps.size(); ++t) {
    if (!(steps[t].ambient() == steps[0].ambient()))
      throw Error(ErrorCode::bad_input, "steps live in different ambients");
    if (!steps[t].contains(steps[t - 1]) ||
        steps[t].total_dim() == steps[t - 1].total_dim())
      throw Error(ErrorCode::bad_input, "steps must strictly increase");
  }
  if (steps.front().total_dim() == 0)
    throw Error(ErrorCode::bad_input, "first step must be nonzero");
  if (!steps.back().is_full())
    throw Error(ErrorCode::bad_input, "last step must be the whole object");

  WeightedFiltration f;
  f.weights_ = std::move(weights);
  f.steps_ = std::move(steps);
  return f;
}

GClass WeightedFiltration::graded_class(std::size_t t) const {
  GClass upper = dims_class(steps_.at(t).dims());
  if (t == 0) return upper;
  return upper - dims_class(steps_[t - 1].dims());
}

Rational MuValue::signed_square() const {
  Rational sq = numerator * numerator / norm_sq;
  return sgn(numerator) < 0 ? -sq : sq;
}

bool operator<(const MuValue& a, const MuValue& b) {
  return a.signed_square() < b.signed_square();
}

bool operator==(const MuValue& a, const MuValue& b) {
  return a.signed_square() == b.signed_square();
}

Rational b_gamma(const PairingMatrix& pm, const KClass& gamma,
                 const std::vector<GradedPiece>& pieces,
                 const std::vector<Rational>& r) {
  Rational total(0);
  for (const GradedPiece& piece : pieces) {
    if (piece.weight.size() != r.size())
      throw Error(ErrorCode::index_mismatch,
                  "weight rank differs from direction rank");
    Rational wr(0);
    for (std::size_t i = 0; i < r.size(); ++i)
      wr += ll_rational(piece.weight[i]) * r[i];
    total += wr * wr * gamma_length(pm, gamma, piece.cls);
  }
  return total;
}

Rational b_gamma(const PairingMatrix& pm, const KClass& gamma,
                 const WeightedFiltration& f, const std::vector<Rational>& r) {
  if (r.size() != 1)
    throw Error(ErrorCode::index_mismatch,
                "filtrations are rank-1 graded: expected one direction entry");
  std::vector<GradedPiece> pieces;
  for (std::size_t t = 0; t < f.size(); ++t)
    pieces.push_back({{f.weights()[t]}, f.graded_class(t)});
  return b_gamma(pm, gamma, pieces, r);
}

MuValue mu_beta(const StabilityData& sd, const WeightedFiltration& f) {
  if (!(g_class(f.ambient()) == sd.alpha()))
    throw Error(ErrorCode::bad_input,
                "filtration ambient class differs from the stability datum");
  const PairingMatrix& pm = sd.pairing_matrix();
  Rational len_alpha = gamma_length(pm, sd.gamma(), sd.alpha());
  Rational beta_alpha = pairing(pm, sd.beta(), sd.alpha());

  MuValue mu{Rational(0), Rational(0)};
  for (std::size_t t = 0; t < f.size(); ++t) {
    GClass gr = f.graded_class(t);
    Rational w = ll_rational(f.weights()[t]);
    Rational len = gamma_length(pm, sd.gamma(), gr);
    mu.numerator += w * (len_alpha * pairing(pm, sd.beta(), gr) -
                         beta_alpha * len);
    mu.norm_sq += w * w * len;
  }
  if (sgn(mu.norm_sq) == 0)
    throw Error(ErrorCode::zero_norm,
                "filtration norm vanishes (all weights zero)");
  return mu;
}

namespace {

// All strictly increasing chains of subobjects ending at the full one,
// depth-first in canonical enumeration order.
void collect_chains(const std::vector<Subrepresentation>& subs,
                    std::vector<std::size_t>& prefix, std::size_t last_dim,
                    const Subrepresentation* last, std::size_t full_dim,
                    std::vector<std::vector<std::size_t>>& out) {
  if (last && last_dim == full_dim) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Subrepresentation& s = subs[i];
    if (s.total_dim() <= last_dim) continue;
    if (last && !s.contains(*last)) continue;
    if (!last && s.total_dim() == 0) continue;
    prefix.push_back(i);
    collect_chains(subs, prefix, s.total_dim(), &s, full_dim, out);
    prefix.pop_back();
  }
}

// Strictly decreasing weight vectors over [-bound, bound], lexicographically
// ascending.
void collect_weights(std::size_t m, long long bound,
                     std::vector<long long>& prefix,
                     const std::function<void(const std::vector<long long>&)>& emit) {
  if (prefix.size() == m) {
    emit(prefix);
    return;
  }
  long long hi = prefix.empty() ? bound : prefix.back() - 1;
  for (long long w = -bound; w <= hi; ++w) {
    prefix.push_back(w);
    collect_weights(m, bound, prefix, emit);
    prefix.pop_back();
  }
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

std::pair<WeightedFiltration, MuValue> filtration_enumerate_max(
    const StabilityData& sd, const Representation& v, long long weight_bound,
    const SearchLimits& limits) {
  if (weight_bound < 1)
    throw Error(ErrorCode::bad_input, "weight bound must be at least 1");
  require_class(sd, v);
  slope(sd, v);  // rejects the zero object

  std::vector<Subrepresentation> subs = all_subrepresentations(v, limits);
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> prefix;
  collect_chains(subs, prefix, 0, nullptr, v.total_dim(), chains);

  // (chain, weight-vector) pairs the sweep will evaluate.
  Integer total(0);
  for (const std::vector<std::size_t>& chain : chains)
    total += binomial(2 * static_cast<unsigned long>(weight_bound) + 1,
                      static_cast<unsigned long>(chain.size()));
  if (total > Integer(static_cast<unsigned long>(limits.max_tuples)))
    throw BudgetError(ErrorCode::search_budget_exceeded,
                      "filtration sweep too large",
                      total.fits_ulong_p() ? total.get_ui() : UINT64_MAX,
                      limits.max_tuples);

  std::optional<WeightedFiltration> best;
  std::optional<MuValue> best_mu;
  for (const std::vector<std::size_t>& chain : chains) {
    std::vector<Subrepresentation> steps;
    for (std::size_t i : chain) steps.push_back(subs[i]);
    std::vector<long long> wprefix;
    collect_weights(chain.size(), weight_bound, wprefix,
                    [&](const std::vector<long long>& weights) {
                      if (weights.size() == 1 && weights[0] == 0)
                        return;  // zero norm, no invariant value
                      WeightedFiltration f =
                          WeightedFiltration::make(weights, steps);
                      MuValue mu = mu_beta(sd, f);
                      if (!best_mu || *best_mu < mu) {
                        best = std::move(f);
                        best_mu = mu;
                      }
                    });
  }
  if (!best)
    throw Error(ErrorCode::internal_error, "no filtration evaluated");
  return {std::move(*best), *best_mu};
}

bool semistable_shift_check(const StabilityData& sd, const Representation& v,
                            const Rational& c, const SearchLimits& limits) {
  StabilityData shifted = StabilityData::make(
      sd.algebra(), sd.beta() + c * sd.gamma(), sd.gamma(), sd.alpha());
  return is_semistable(sd, v, limits).first ==
         is_semistable(shifted, v, limits).first;
}

}  // namespace repstab
