#include "repstab/search.hpp"

#include <string>

#include "repstab/error.hpp"

namespace repstab {

namespace {

long long prime_of(const FieldSpec& field, const char* what) {
  if (field.kind() != FieldSpec::Kind::prime)
    throw Error(ErrorCode::not_prime_field,
                std::string(what) + " requires a prime field");
  return field.characteristic();
}

std::uint64_t saturate(const Integer& n) {
  if (!n.fits_ulong_p()) return UINT64_MAX;
  return static_cast<std::uint64_t>(n.get_ui());
}

Integer gaussian_binomial(std::size_t d, std::size_t k, long long p) {
  Integer num(1), den(1), pz(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < k; ++i) {
    Integer pd, pk;
    mpz_pow_ui(pd.get_mpz_t(), pz.get_mpz_t(),
               static_cast<unsigned long>(d - i));
    mpz_pow_ui(pk.get_mpz_t(), pz.get_mpz_t(),
               static_cast<unsigned long>(i + 1));
    num *= pd - 1;
    den *= pk - 1;
  }
  return num / den;  // exact
}

}  // namespace

Integer subspace_count(long long p, std::size_t dim) {
  Integer total(0);
  for (std::size_t k = 0; k <= dim; ++k) total += gaussian_binomial(dim, k, p);
  return total;
}

std::vector<Matrix> all_subspaces(const FieldSpec& field, std::size_t dim) {
  const long long p = prime_of(field, "subspace enumeration");
  std::vector<Matrix> out;

  // Dimension k ascending, pivot-row sets in lexicographic order, then the
  // free entries below the pivots counting like an odometer (last position
  // fastest).  Every matrix is already in reduced column-echelon form, so
  // this hits each subspace's canonical basis exactly once.
  for (std::size_t k = 0; k <= dim; ++k) {
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
      std::vector<bool> is_pivot(dim, false);
      for (std::size_t r : pivots) is_pivot[r] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free_pos;  // (row, col)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t r = pivots[j] + 1; r < dim; ++r)
          if (!is_pivot[r]) free_pos.emplace_back(r, j);

      std::vector<long long> digits(free_pos.size(), 0);
      while (true) {
        Matrix m(field, dim, k);
        for (std::size_t j = 0; j < k; ++j) m.set(pivots[j], j, Rational(1));
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          m.set(free_pos[t].first, free_pos[t].second,
                make_rational(static_cast<long>(digits[t])));
        out.push_back(std::move(m));

        std::size_t pos = free_pos.size();
        while (pos > 0 && digits[pos - 1] == p - 1) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
      }

      // Next pivot set in lexicographic order.
      if (k == 0) break;
      std::size_t i = k;
      while (i > 0 && pivots[i - 1] == dim - k + (i - 1)) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
  return out;
}

Integer subrepresentation_search_size(const Representation& v) {
  const long long p = prime_of(v.field(), "subrepresentation search");
  Integer total(1);
  for (std::size_t d : v.dims()) total *= subspace_count(p, d);
  return total;
}

void for_each_subrepresentation(
    const Representation& v,
    const std::function<bool(const Subrepresentation&)>& visit,
    const SearchLimits& limits) {
  Integer size = subrepresentation_search_size(v);
  if (size > Integer(static_cast<unsigned long>(limits.max_tuples)))
    throw BudgetError(ErrorCode::search_budget_exceeded,
                      "subrepresentation search too large", saturate(size),
                      limits.max_tuples);

  const Algebra& alg = *v.algebra();
  std::vector<std::vector<Matrix>> spaces;
  for (std::size_t d : v.dims()) spaces.push_back(all_subspaces(v.field(), d));

  std::vector<std::size_t> idx(spaces.size(), 0);
  std::vector<Matrix> bases;
  while (true) {
    bases.clear();
    for (std::size_t i = 0; i < spaces.size(); ++i)
      bases.push_back(spaces[i][idx[i]]);

    bool closed = true;
    for (std::size_t a = 0; a < alg.arrow_count() && closed; ++a) {
      const Arrow& arrow = alg.arrows()[a];
      Matrix img = mul(v.arrow_map(a), bases[arrow.source]);
      closed = solve_matrix(bases[arrow.target], img).has_value();
    }
    if (closed && !visit(Subrepresentation::make(v, bases))) return;

    // Odometer: last vertex fastest, so vertex 0 varies slowest.
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] + 1 == spaces[pos - 1].size())
      idx[--pos] = 0;
    if (pos == 0) return;
    ++idx[pos - 1];
  }
}

std::vector<Subrepresentation> all_subrepresentations(
    const Representation& v, const SearchLimits& limits) {
  std::vector<Subrepresentation> out;
  for_each_subrepresentation(
      v,
      [&out](const Subrepresentation& s) {
        out.push_back(s);
        return true;
      },
      limits);
  return out;
}

}  // namespace repstab
