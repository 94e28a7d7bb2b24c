#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "repstab/representation.hpp"

namespace repstab {

// Exhaustive searches refuse to start when the enumeration is larger than
// max_tuples, and isomorphism/epimorphism certification refuses Hom-space
// sweeps longer than max_hom_combos; both fail loudly, never approximate.
struct SearchLimits {
  std::uint64_t max_tuples = 10'000'000;
  std::uint64_t max_hom_combos = 1'000'000;
};

// Number of subspaces of F_p^dim, all dimensions combined (sum of Gaussian
// binomial coefficients).
Integer subspace_count(long long p, std::size_t dim);

// Every subspace of F_p^dim exactly once, as reduced column-echelon bases,
// ordered by dimension, then pivot rows, then free entries.  This is the
// canonical enumeration order that searches cite for tie-breaking.
std::vector<Matrix> all_subspaces(const FieldSpec& field, std::size_t dim);

// Product of per-vertex subspace counts: the tuple count an exhaustive
// subrepresentation search must sweep.
Integer subrepresentation_search_size(const Representation& v);

// Visit every subrepresentation of v (zero and v included) in canonical
// order: per-vertex subspace tuples in lexicographic order, vertex 0
// outermost, filtered by arrow-closure.  Return false from the visitor to
// stop early.  Throws NotPrimeField over the rationals and
// SearchBudgetExceeded when the tuple count exceeds the limit.
void for_each_subrepresentation(
    const Representation& v,
    const std::function<bool(const Subrepresentation&)>& visit,
    const SearchLimits& limits = {});

std::vector<Subrepresentation> all_subrepresentations(
    const Representation& v, const SearchLimits& limits = {});

}  // namespace repstab
