#include "repstab/census.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "repstab/error.hpp"
#include "repstab/structure.hpp"

namespace repstab {

namespace {

// Sweep all F_p-combinations of the Hom basis (zero included) and report
// whether some combination passes `good` at every vertex.
bool sweep_hom_combos(const Representation& x, const Representation& y,
                      const SearchLimits& limits,
                      const std::function<bool(std::size_t, const Matrix&)>& good) {
  if (!x.field().is_prime())
    throw Error(ErrorCode::not_prime_field,
                "morphism sweeps require a prime field");
  const long long p = x.field().characteristic();
  HomBasis hom = hom_space(x, y);

  Integer combos;
  mpz_ui_pow_ui(combos.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(hom.dim()));
  if (combos > Integer(static_cast<unsigned long>(limits.max_hom_combos)))
    throw BudgetError(ErrorCode::iso_budget_exceeded, "Hom-space sweep too large",
                      combos.fits_ulong_p() ? combos.get_ui() : UINT64_MAX,
                      limits.max_hom_combos);

  const std::size_t nv = x.algebra()->vertex_count();
  std::vector<long long> c(hom.dim(), 0);
  while (true) {
    bool all_good = true;
    for (std::size_t i = 0; i < nv && all_good; ++i) {
      Matrix m(x.field(), y.dim(i), x.dim(i));
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        m = add(m, scale(make_rational(static_cast<long>(c[k])),
                         hom.basis[k].vertex_map(i)));
      }
      all_good = good(i, m);
    }
    if (all_good) return true;

    std::size_t pos = c.size();
    while (pos > 0 && c[pos - 1] == p - 1) c[--pos] = 0;
    if (pos == 0) return false;
    ++c[pos - 1];
  }
}

Integer gl_order(long long p, const std::vector<std::size_t>& dims) {
  Integer order(1), pz(static_cast<unsigned long>(p));
  for (std::size_t d : dims) {
    Integer pd;
    mpz_pow_ui(pd.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(d));
    for (std::size_t i = 0; i < d; ++i) {
      Integer pi;
      mpz_pow_ui(pi.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(i));
      order *= pd - pi;
    }
  }
  return order;
}

// Count the invertible elements of End(v) by the same exhaustive sweep.
std::uint64_t automorphism_count(const Representation& v,
                                 const SearchLimits& limits) {
  const long long p = v.field().characteristic();
  HomBasis hom = hom_space(v, v);
  Integer combos;
  mpz_ui_pow_ui(combos.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(hom.dim()));
  if (combos > Integer(static_cast<unsigned long>(limits.max_hom_combos)))
    throw BudgetError(ErrorCode::iso_budget_exceeded,
                      "automorphism count too large",
                      combos.fits_ulong_p() ? combos.get_ui() : UINT64_MAX,
                      limits.max_hom_combos);

  const std::size_t nv = v.algebra()->vertex_count();
  std::uint64_t count = 0;
  std::vector<long long> c(hom.dim(), 0);
  while (true) {
    bool invertible = true;
    for (std::size_t i = 0; i < nv && invertible; ++i) {
      Matrix m(v.field(), v.dim(i), v.dim(i));
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        m = add(m, scale(make_rational(static_cast<long>(c[k])),
                         hom.basis[k].vertex_map(i)));
      }
      invertible = rank(m) == v.dim(i);
    }
    if (invertible) ++count;

    std::size_t pos = c.size();
    while (pos > 0 && c[pos - 1] == p - 1) c[--pos] = 0;
    if (pos == 0) return count;
    ++c[pos - 1];
  }
}

// Cheap isomorphism invariants screened before the Hom sweep.
std::vector<std::size_t> iso_invariants(const Representation& v) {
  std::vector<std::size_t> key;
  for (std::size_t a = 0; a < v.algebra()->arrow_count(); ++a)
    key.push_back(rank(v.arrow_map(a)));
  for (std::size_t d : radical(v).dims()) key.push_back(d);
  for (std::size_t d : socle(v).dims()) key.push_back(d);
  return key;
}

bool relations_hold_raw(const Algebra& alg, const FieldSpec& field,
                        const std::vector<std::size_t>& dims,
                        const std::vector<Matrix>& maps) {
  for (const Relation& r : alg.relations()) {
    Matrix acc(field, dims[r.target], dims[r.source]);
    for (const RelationTerm& term : r.terms) {
      Rational c = field.embed(term.coeff);
      if (sgn(c) == 0) continue;
      Matrix m = Matrix::identity(field, dims[r.source]);
      for (std::size_t a : term.word) m = mul(maps[a], m);
      acc = add(acc, scale(c, m));
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

bool is_isomorphic(const Representation& x, const Representation& y,
                   const SearchLimits& limits) {
  if (!x.algebra()->same_presentation(*y.algebra()) || !(x.field() == y.field()))
    return false;
  if (x.dims() != y.dims()) return false;
  return sweep_hom_combos(x, y, limits, [&](std::size_t i, const Matrix& m) {
    return rank(m) == x.dim(i);
  });
}

bool has_epimorphism(const Representation& from, const Representation& to,
                     const SearchLimits& limits) {
  if (!from.algebra()->same_presentation(*to.algebra()) ||
      !(from.field() == to.field()))
    throw Error(ErrorCode::algebra_mismatch,
                "epimorphism test across different contexts");
  return sweep_hom_combos(from, to, limits, [&](std::size_t i, const Matrix& m) {
    return rank(m) == to.dim(i);
  });
}

IsoClassCatalog enumerate_reps(const AlgebraPtr& algebra, const GClass& alpha,
                               const FieldSpec& field,
                               const CensusOptions& options) {
  if (!algebra) throw Error(ErrorCode::bad_input, "empty algebra handle");
  if (!field.is_prime())
    throw Error(ErrorCode::not_prime_field, "census requires a prime field");
  if (alpha.size() != algebra->vertex_count())
    throw Error(ErrorCode::index_mismatch, "class length != vertex count");
  if (!alpha.is_effective())
    throw Error(ErrorCode::negative_class, "census class must be effective");

  const long long p = field.characteristic();
  std::vector<std::size_t> dims(alpha.coeffs.begin(), alpha.coeffs.end());

  if (options.orbit_sizes && (alpha.total() > 3 || p > 3))
    throw Error(ErrorCode::bad_input,
                "orbit sizes are only certified for total dimension <= 3 "
                "over F_2/F_3");

  // One entry per matrix cell across all arrows; the tuple space is p^cells.
  std::size_t cells = 0;
  for (const Arrow& a : algebra->arrows()) cells += dims[a.source] * dims[a.target];
  Integer tuple_space;
  mpz_ui_pow_ui(tuple_space.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(cells));
  if (tuple_space > Integer(static_cast<unsigned long>(options.limits.max_tuples)))
    throw BudgetError(
        ErrorCode::search_budget_exceeded, "arrow-map enumeration too large",
        tuple_space.fits_ulong_p() ? tuple_space.get_ui() : UINT64_MAX,
        options.limits.max_tuples);

  IsoClassCatalog catalog;
  catalog.algebra = algebra;
  catalog.field = field;
  catalog.alpha = alpha;
  if (options.orbit_sizes) catalog.orbit_sizes.emplace();

  std::vector<std::vector<std::size_t>> keys;  // invariants per representative

  std::vector<long long> cell(cells, 0);
  while (true) {
    std::vector<Matrix> maps;
    std::size_t at = 0;
    for (const Arrow& a : algebra->arrows()) {
      Matrix m(field, dims[a.target], dims[a.source]);
      for (std::size_t r = 0; r < dims[a.target]; ++r)
        for (std::size_t c = 0; c < dims[a.source]; ++c)
          m.set(r, c, make_rational(static_cast<long>(cell[at++])));
      maps.push_back(std::move(m));
    }

    if (relations_hold_raw(*algebra, field, dims, maps)) {
      ++catalog.valid_tuple_count;
      Representation rep = Representation::make(algebra, field, dims, maps);
      std::vector<std::size_t> key = iso_invariants(rep);
      bool known = false;
      for (std::size_t k = 0; k < catalog.representatives.size() && !known; ++k)
        known = keys[k] == key &&
                is_isomorphic(catalog.representatives[k], rep, options.limits);
      if (!known) {
        catalog.representatives.push_back(std::move(rep));
        keys.push_back(std::move(key));
      }
    }

    std::size_t pos = cells;
    while (pos > 0 && cell[pos - 1] == p - 1) cell[--pos] = 0;
    if (pos == 0) break;
    ++cell[pos - 1];
  }

  if (options.orbit_sizes) {
    // |orbit| = |prod_v GL_{alpha_v}| / |Aut|; the orbit sizes must add up
    // to the valid tuple count, certifying the catalog complete.
    Integer group = gl_order(p, dims);
    std::uint64_t total = 0;
    for (const Representation& rep : catalog.representatives) {
      std::uint64_t aut = automorphism_count(rep, options.limits);
      Integer orbit = group / Integer(static_cast<unsigned long>(aut));
      if (!orbit.fits_ulong_p())
        throw Error(ErrorCode::internal_error, "orbit size overflow");
      catalog.orbit_sizes->push_back(orbit.get_ui());
      total += orbit.get_ui();
    }
    if (total != catalog.valid_tuple_count)
      throw Error(ErrorCode::internal_error,
                  "orbit sizes do not sum to the tuple count");
  }
  return catalog;
}

namespace {

// Strata order: slope sequences lexicographically descending, classes as a
// deterministic final tie-break.
bool stratum_before(const std::vector<HNStep>& a, const std::vector<HNStep>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].slope != b[i].slope) return a[i].slope > b[i].slope;
    if (!(a[i].cls == b[i].cls)) return a[i].cls.coeffs < b[i].cls.coeffs;
  }
  return a.size() < b.size();
}

}  // namespace

StrataReport theta_strata(const IsoClassCatalog& catalog,
                          const StabilityData& sd, const SearchLimits& limits) {
  if (!(catalog.alpha == sd.alpha()))
    throw Error(ErrorCode::bad_input,
                "catalog and stability datum disagree on alpha");
  if (!catalog.algebra ||
      !catalog.algebra->same_presentation(*sd.algebra()))
    throw Error(ErrorCode::algebra_mismatch,
                "catalog and stability datum live on different algebras");

  std::vector<Stratum> strata;
  for (std::size_t i = 0; i < catalog.representatives.size(); ++i) {
    HNFiltration hn = hn_filtration(sd, catalog.representatives[i], limits);
    auto match = std::find_if(strata.begin(), strata.end(), [&](const Stratum& s) {
      if (s.hn_type.size() != hn.type.size()) return false;
      for (std::size_t t = 0; t < hn.type.size(); ++t)
        if (!(s.hn_type[t].cls == hn.type[t].cls) ||
            s.hn_type[t].slope != hn.type[t].slope)
          return false;
      return true;
    });
    if (match == strata.end()) {
      strata.push_back({hn.type, {i}, hn.type.size() == 1});
    } else {
      match->members.push_back(i);
    }
  }
  std::sort(strata.begin(), strata.end(), [](const Stratum& a, const Stratum& b) {
    return stratum_before(a.hn_type, b.hn_type);
  });

  StrataReport report;
  report.strata = std::move(strata);

  std::optional<std::size_t> closed;
  for (std::size_t i = 0; i < catalog.representatives.size(); ++i) {
    if (!is_semisimple(catalog.representatives[i])) continue;
    if (closed)
      throw Error(ErrorCode::internal_error,
                  "two semisimple representatives in one catalog");
    closed = i;
  }
  if (!closed)
    throw Error(ErrorCode::internal_error,
                "no semisimple representative in the catalog");
  report.closed_point = *closed;
  return report;
}

std::vector<std::pair<GClass, Representation>> closed_points(
    const AlgebraPtr& algebra, std::vector<GClass> alphas,
    const FieldSpec& field) {
  std::sort(alphas.begin(), alphas.end(),
            [](const GClass& a, const GClass& b) { return a.coeffs < b.coeffs; });
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

  std::vector<std::pair<GClass, Representation>> points;
  for (const GClass& alpha : alphas)
    points.emplace_back(alpha, semisimple_of_class(algebra, alpha, field));
  return points;
}

bool cover_check(const IsoClassCatalog& catalog, const SearchLimits& limits) {
  if (!catalog.algebra)
    throw Error(ErrorCode::bad_input, "empty algebra handle");
  GClass n = minimal_cover_vector(catalog.alpha);

  Representation cover = Representation::zero(catalog.algebra, catalog.field);
  for (std::size_t j = 0; j < n.size(); ++j) {
    Representation pj = projective(catalog.algebra, j, catalog.field);
    for (long long k = 0; k < n.coeffs[j]; ++k) cover = direct_sum(cover, pj);
  }

  for (const Representation& rep : catalog.representatives)
    if (!has_epimorphism(cover, rep, limits)) return false;
  return true;
}

}  // namespace repstab
