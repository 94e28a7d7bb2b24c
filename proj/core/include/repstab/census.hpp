#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "repstab/stability.hpp"

namespace repstab {

// Every representation of class alpha over a small prime field, one
// representative per isomorphism class, in canonical enumeration order.
// When orbit sizes are computed, completeness is certified by counting:
// the orbit sizes must sum to the number of valid arrow-map tuples.
struct IsoClassCatalog {
  AlgebraPtr algebra;
  FieldSpec field;
  GClass alpha;
  std::vector<Representation> representatives;
  std::uint64_t valid_tuple_count = 0;
  std::optional<std::vector<std::uint64_t>> orbit_sizes;
};

struct CensusOptions {
  // Count automorphisms and report orbit sizes; restricted to total
  // dimension <= 3 over F_2/F_3, where the certification is cheap.
  bool orbit_sizes = false;
  SearchLimits limits;
};

// Exhaustive isomorphism test: sweep Hom(x, y) for a vertex-wise invertible
// combination.  Throws IsoTestBudgetExceeded when p^dim Hom is too large.
bool is_isomorphic(const Representation& x, const Representation& y,
                   const SearchLimits& limits = {});

// Exhaustive epimorphism test, same sweep with surjectivity instead.
bool has_epimorphism(const Representation& from, const Representation& to,
                     const SearchLimits& limits = {});

IsoClassCatalog enumerate_reps(const AlgebraPtr& algebra, const GClass& alpha,
                               const FieldSpec& field,
                               const CensusOptions& options = {});

// One stratum per Harder-Narasimhan type; members index into the catalog.
struct Stratum {
  std::vector<HNStep> hn_type;
  std::vector<std::size_t> members;
  bool semistable = false;
};

struct StrataReport {
  std::vector<Stratum> strata;       // lexicographic by slope sequence, descending
  std::size_t closed_point = 0;      // catalog index of the semisimple representative
};

StrataReport theta_strata(const IsoClassCatalog& catalog,
                          const StabilityData& sd,
                          const SearchLimits& limits = {});

// The unique semisimple object per class, classes sorted (duplicates
// dropped): the k-points of the good moduli space, component by component.
std::vector<std::pair<GClass, Representation>> closed_points(
    const AlgebraPtr& algebra, std::vector<GClass> alphas,
    const FieldSpec& field = FieldSpec::rationals());

// Every representative must be a quotient of P = sum_j P_j^{n_j} with n the
// minimal cover vector of alpha.
bool cover_check(const IsoClassCatalog& catalog, const SearchLimits& limits = {});

}  // namespace repstab
