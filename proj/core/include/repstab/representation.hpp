#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repstab/algebra.hpp"

namespace repstab {

// Finite-dimensional module over the quotient path algebra: a vector space
// per vertex plus a matrix per arrow.  An arrow a: i -> j acts by
// V_a: V_i -> V_j (a dim(j) x dim(i) matrix over the representation's
// field); a word acts by composing left to right, V_{a.b} = V_b o V_a.
class Representation {
 public:
  Representation() = default;  // empty handle, algebra() is null

  // Shape-checks the maps, embeds entries, verifies every relation
  // (relation_violated on failure; invalid_presentation when the algebra
  // cannot be certified over a prime field).
  static Representation make(AlgebraPtr algebra, FieldSpec field,
                             std::vector<std::size_t> dims,
                             std::vector<Matrix> arrow_maps);
  static Representation zero(AlgebraPtr algebra, FieldSpec field);

  const AlgebraPtr& algebra() const { return algebra_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t vertex) const { return dims_.at(vertex); }
  std::size_t total_dim() const;
  const Matrix& arrow_map(std::size_t arrow) const { return arrow_maps_.at(arrow); }
  const std::vector<Matrix>& arrow_maps() const { return arrow_maps_; }
  bool is_zero() const { return total_dim() == 0; }

  // Action of a path starting at `source` (dim(target) x dim(source)).
  Matrix word_action(std::size_t source,
                     const std::vector<std::size_t>& word) const;

  bool operator==(const Representation& other) const;

 private:
  AlgebraPtr algebra_;
  FieldSpec field_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> arrow_maps_;
};

// Re-verifies shapes and relations; throws on any violation.
void validate(const Representation& rep);
// Non-throwing relation check used by exhaustive enumeration.
bool relations_hold(const Representation& rep);

// Vertex-wise linear maps intertwining the arrow actions:
// f_j o X_a = Y_a o f_i for every arrow a: i -> j.
class Morphism {
 public:
  Morphism() = default;

  static Morphism make(Representation source, Representation target,
                       std::vector<Matrix> vertex_maps);  // not_a_morphism

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  const Matrix& vertex_map(std::size_t vertex) const { return maps_.at(vertex); }
  const std::vector<Matrix>& vertex_maps() const { return maps_; }
  bool is_zero() const;

  static Morphism identity(const Representation& rep);
  static Morphism zero(const Representation& source, const Representation& target);

 private:
  Representation source_;
  Representation target_;
  std::vector<Matrix> maps_;
};

// g o f (apply f first).
Morphism compose(const Morphism& g, const Morphism& f);
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Rational& c, const Morphism& f);

struct HomBasis {
  std::vector<Morphism> basis;
  std::size_t dim() const { return basis.size(); }
};

// Basis of Hom(X, Y), solved exactly from the intertwining equations.
// Deterministic: canonical nullspace basis of the assembled system.
HomBasis hom_space(const Representation& x, const Representation& y);

// A subobject, stored as canonical (reduced column echelon) bases per
// vertex.  Construction checks column independence and closure under every
// arrow (not_a_subrep).
class Subrepresentation {
 public:
  Subrepresentation() = default;

  static Subrepresentation make(Representation ambient,
                                std::vector<Matrix> bases);
  static Subrepresentation zero(const Representation& ambient);
  static Subrepresentation full(const Representation& ambient);

  const Representation& ambient() const { return ambient_; }
  const Matrix& basis(std::size_t vertex) const { return bases_.at(vertex); }
  const std::vector<Matrix>& bases() const { return bases_; }
  std::vector<std::size_t> dims() const;
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  bool is_full() const;

  // The subobject as a representation in its own bases, with the inclusion.
  Representation to_representation() const;
  Morphism inclusion() const;

  bool contains(const Subrepresentation& other) const;
  bool operator==(const Subrepresentation& other) const;

 private:
  Representation ambient_;
  std::vector<Matrix> bases_;
};

Subrepresentation kernel(const Morphism& f);  // subobject of the source
Subrepresentation image(const Morphism& f);   // subobject of the target

// (V/E, projection V -> V/E).
std::pair<Representation, Morphism> quotient(const Representation& v,
                                             const Subrepresentation& e);

Representation direct_sum(const Representation& a, const Representation& b);

// Smallest subrepresentation containing the given vectors (listed per
// vertex; each vector of length dim(vertex)).
Subrepresentation sub_from_generators(
    const Representation& v, const std::vector<std::vector<Vector>>& generators);

// f^-1(S) as a subobject of the source of f.
Subrepresentation preimage(const Morphism& f, const Subrepresentation& s);

// Sub-subobject arithmetic: `inner` given as a subobject of the ambient of
// `outer`, contained in it; returns inner expressed in outer's coordinates.
Subrepresentation restrict_to(const Subrepresentation& outer,
                              const Subrepresentation& inner);

}  // namespace repstab
