#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "repstab/matrix.hpp"

namespace repstab {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;

  bool operator==(const Arrow&) const = default;
};

// One term of a relation: coeff * word, the word an arrow-id sequence read
// left to right ("a.b" means: traverse a, then b).  Under that convention a
// representation acts by V_{a.b} = V_b o V_a.
struct RelationTerm {
  Rational coeff;
  std::vector<std::size_t> word;

  bool operator==(const RelationTerm&) const = default;
};

// Formal rational combination of parallel paths of length >= 2 (so the
// relation ideal sits inside the square of the arrow ideal).
struct Relation {
  std::vector<RelationTerm> terms;
  std::size_t source = 0;  // derived from the terms
  std::size_t target = 0;

  bool operator==(const Relation&) const = default;
};

// A path: arrow-id word read left to right.  The empty word at vertex i is
// the idempotent e_i.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;
};

struct PresentationLimits {
  // Nonzero path classes allowed in the quotient algebra.
  std::size_t max_path_classes = 64;
  // Raw path words enumerated while certifying finite-dimensionality.
  std::size_t max_paths = 50000;
  // Ideal products u*r*v assembled during certification.
  std::size_t max_products = 200000;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Quotient of a path algebra by admissible relations, validated on
// construction.  Validation certifies finite-dimensionality: it finds the
// least N with J^N contained in the relation ideal I by checking that every
// length-N path is a combination of honest ideal elements u*r*v.  That span
// test can only under-approximate I, so a presentation is never accepted
// wrongly; presentations it cannot certify within the limits are rejected
// with a diagnostic.
//
// Path-class data (basis of the quotient, coordinates of each path class) is
// computed per coefficient field, since relations with rational coefficients
// may degenerate modulo p.  The data over Q is built eagerly; prime fields
// are certified on first use and cached.
class Algebra {
 public:
  static AlgebraPtr make(std::vector<std::string> vertices,
                         std::vector<Arrow> arrows,
                         std::vector<Relation> relations,
                         PresentationLimits limits = {});

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  std::optional<std::size_t> vertex_index(std::string_view name) const;
  std::optional<std::size_t> arrow_index(std::string_view name) const;

  // Same vertices, arrows and relations, literally.
  bool same_presentation(const Algebra& other) const;

  // ---- certified path-class data ----

  // Least certified N with J^N inside the relation ideal (over the field).
  std::size_t nilpotency(const FieldSpec& field = FieldSpec::rationals()) const;
  // k-dimension of the quotient algebra.
  std::size_t dimension(const FieldSpec& field = FieldSpec::rationals()) const;
  // Words (length < nilpotency) whose class is nonzero.
  std::size_t nonzero_class_count(
      const FieldSpec& field = FieldSpec::rationals()) const;

  // Path words of length < nilpotency, in canonical (length, source,
  // word-lex) order; ids index this list.
  std::size_t path_count(const FieldSpec& field = FieldSpec::rationals()) const;
  const Path& path(std::size_t id,
                   const FieldSpec& field = FieldSpec::rationals()) const;
  std::optional<std::size_t> find_path(
      std::size_t source, const std::vector<std::size_t>& word,
      const FieldSpec& field = FieldSpec::rationals()) const;

  // Ids of the paths whose classes form a basis of the (source i, target j)
  // block of the quotient algebra, in canonical order.
  const std::vector<std::size_t>& basis_paths(
      std::size_t i, std::size_t j,
      const FieldSpec& field = FieldSpec::rationals()) const;

  // Coordinates of a path class over basis_paths(source, target); the zero
  // class has all-zero coordinates.
  const Vector& class_coords(
      std::size_t path_id,
      const FieldSpec& field = FieldSpec::rationals()) const;

 private:
  struct Block {
    std::vector<std::size_t> path_ids;  // all words in this block
    std::vector<std::size_t> basis;     // subset: ids of basis classes
    std::vector<Vector> coords;         // per local path, over the basis
  };

  struct PathTable {
    std::size_t nilpotency = 0;
    std::size_t dimension = 0;
    std::size_t nonzero_classes = 0;
    std::vector<Path> paths;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
    std::vector<Block> blocks;  // vertex_count^2, row-major (source, target)
  };

  Algebra() = default;

  const PathTable& table(const FieldSpec& field) const;
  PathTable build_table(const FieldSpec& field) const;

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
  PresentationLimits limits_;

  PathTable rational_table_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::uint32_t, PathTable> prime_tables_;
};

}  // namespace repstab
