#pragma once

#include <cstddef>
#include <vector>

#include "repstab/classes.hpp"
#include "repstab/representation.hpp"

namespace repstab {

// The simple objects: one per vertex (admissibility makes these exhaustive),
// dims the vertex indicator and every arrow acting by zero.
std::vector<Representation> simples(const AlgebraPtr& algebra,
                                    const FieldSpec& field = FieldSpec::rationals());
Representation simple_at(const AlgebraPtr& algebra, std::size_t vertex,
                         const FieldSpec& field = FieldSpec::rationals());

// Indecomposable projective cover of the vertex simple: basis at vertex j is
// the nonzero path classes vertex -> j, arrows act by appending.
Representation projective(const AlgebraPtr& algebra, std::size_t vertex,
                          const FieldSpec& field = FieldSpec::rationals());

// Span of the images of all incoming arrow maps; V/rad(V) is the largest
// semisimple quotient.
Subrepresentation radical(const Representation& v);

// Intersection of the kernels of all outgoing arrow maps; the largest
// semisimple subobject.
Subrepresentation socle(const Representation& v);

// Descending series V = rad^0 >= rad^1 >= ... >= 0, last entry zero.  The
// certified nilpotency bound guarantees termination.
std::vector<Subrepresentation> radical_series(const Representation& v);

// A maximal chain 0 = V_0 < V_1 < ... < V_n = V with simple factors;
// factors[t] is the vertex supporting V_{t+1}/V_t.  The chain depends on our
// deterministic refinement, the factor multiset does not.
struct JordanHolderData {
  std::vector<Subrepresentation> chain;
  std::vector<std::size_t> factors;
  std::size_t length() const { return factors.size(); }
};

JordanHolderData jordan_holder(const Representation& v);

// Composition-factor multiset of v as a G-class (the honest route, via a
// Jordan-Hoelder chain; agrees with the dimension vector).
GClass gr(const Representation& v);

std::size_t length(const Representation& v);

bool is_semisimple(const Representation& v);

// The unique semisimple object of class alpha: direct sum of vertex simples
// with multiplicities alpha_i.
Representation semisimple_of_class(const AlgebraPtr& algebra, const GClass& alpha,
                                   const FieldSpec& field = FieldSpec::rationals());

}  // namespace repstab
