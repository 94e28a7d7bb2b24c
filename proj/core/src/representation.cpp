#include "repstab/representation.hpp"

#include <string>

#include "repstab/error.hpp"

namespace repstab {

namespace {

void require_algebra(const AlgebraPtr& a) {
  if (!a) throw Error(ErrorCode::bad_input, "empty algebra handle");
}

void require_same_context(const Representation& a, const Representation& b) {
  require_algebra(a.algebra());
  require_algebra(b.algebra());
  if (!a.algebra()->same_presentation(*b.algebra()))
    throw Error(ErrorCode::algebra_mismatch,
                "representations over different presentations");
  if (!(a.field() == b.field()))
    throw Error(ErrorCode::field_mismatch,
                "representations over " + a.field().name() + " and " +
                    b.field().name());
}

// acc += c * m, in place, over the field of acc.
void accumulate(Matrix& acc, const Rational& c, const Matrix& m) {
  acc = add(acc, scale(c, m));
}

std::optional<std::string> relation_failure(const Representation& rep) {
  const Algebra& alg = *rep.algebra();
  const std::vector<Relation>& rels = alg.relations();
  for (std::size_t k = 0; k < rels.size(); ++k) {
    const Relation& r = rels[k];
    Matrix acc(rep.field(), rep.dim(r.target), rep.dim(r.source));
    for (const RelationTerm& term : r.terms) {
      Rational c = rep.field().embed(term.coeff);
      if (sgn(c) == 0) continue;
      accumulate(acc, c, rep.word_action(r.source, term.word));
    }
    if (!acc.is_zero())
      return "relation " + std::to_string(k) + " violated";
  }
  return std::nullopt;
}

}  // namespace

Representation Representation::make(AlgebraPtr algebra, FieldSpec field,
                                    std::vector<std::size_t> dims,
                                    std::vector<Matrix> arrow_maps) {
  require_algebra(algebra);
  // The module theory below (radical series, projectives) needs the quotient
  // algebra finite-dimensional over this very field; certify now.
  algebra->nilpotency(field);

  if (dims.size() != algebra->vertex_count())
    throw Error(ErrorCode::index_mismatch, "dims length != vertex count");
  if (arrow_maps.size() != algebra->arrow_count())
    throw Error(ErrorCode::shape_mismatch, "one matrix per arrow required");
  for (std::size_t a = 0; a < arrow_maps.size(); ++a) {
    const Arrow& arrow = algebra->arrows()[a];
    const Matrix& m = arrow_maps[a];
    if (!(m.field() == field))
      throw Error(ErrorCode::field_mismatch,
                  "map for arrow '" + arrow.name + "' is over " +
                      m.field().name());
    if (m.rows() != dims[arrow.target] || m.cols() != dims[arrow.source])
      throw Error(ErrorCode::shape_mismatch,
                  "map for arrow '" + arrow.name + "' must be " +
                      std::to_string(dims[arrow.target]) + "x" +
                      std::to_string(dims[arrow.source]));
  }

  Representation rep;
  rep.algebra_ = std::move(algebra);
  rep.field_ = field;
  rep.dims_ = std::move(dims);
  rep.arrow_maps_ = std::move(arrow_maps);

  if (auto why = relation_failure(rep))
    throw Error(ErrorCode::relation_violated, *why);
  return rep;
}

Representation Representation::zero(AlgebraPtr algebra, FieldSpec field) {
  require_algebra(algebra);
  std::vector<std::size_t> dims(algebra->vertex_count(), 0);
  std::vector<Matrix> maps;
  for (const Arrow& a : algebra->arrows()) {
    (void)a;
    maps.emplace_back(field, 0, 0);
  }
  return make(std::move(algebra), field, std::move(dims), std::move(maps));
}

std::size_t Representation::total_dim() const {
  std::size_t n = 0;
  for (std::size_t d : dims_) n += d;
  return n;
}

Matrix Representation::word_action(std::size_t source,
                                   const std::vector<std::size_t>& word) const {
  std::size_t at = source;
  Matrix m = Matrix::identity(field_, dims_.at(source));
  for (std::size_t a : word) {
    const Arrow& arrow = algebra_->arrows().at(a);
    if (arrow.source != at)
      throw Error(ErrorCode::internal_error, "word not composable");
    m = mul(arrow_maps_[a], m);
    at = arrow.target;
  }
  return m;
}

bool Representation::operator==(const Representation& other) const {
  if (!algebra_ || !other.algebra_) return !algebra_ && !other.algebra_;
  return algebra_->same_presentation(*other.algebra_) && field_ == other.field_ &&
         dims_ == other.dims_ && arrow_maps_ == other.arrow_maps_;
}

void validate(const Representation& rep) {
  require_algebra(rep.algebra());
  Representation::make(rep.algebra(), rep.field(), rep.dims(), rep.arrow_maps());
}

bool relations_hold(const Representation& rep) {
  return !relation_failure(rep).has_value();
}

// ---- morphisms ----

Morphism Morphism::make(Representation source, Representation target,
                        std::vector<Matrix> vertex_maps) {
  require_same_context(source, target);
  const Algebra& alg = *source.algebra();
  if (vertex_maps.size() != alg.vertex_count())
    throw Error(ErrorCode::index_mismatch, "one map per vertex required");
  for (std::size_t i = 0; i < vertex_maps.size(); ++i) {
    const Matrix& m = vertex_maps[i];
    if (!(m.field() == source.field()))
      throw Error(ErrorCode::field_mismatch, "vertex map field");
    if (m.rows() != target.dim(i) || m.cols() != source.dim(i))
      throw Error(ErrorCode::shape_mismatch, "vertex map shape");
  }
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow& arrow = alg.arrows()[a];
    Matrix lhs = mul(vertex_maps[arrow.target], source.arrow_map(a));
    Matrix rhs = mul(target.arrow_map(a), vertex_maps[arrow.source]);
    if (!(lhs == rhs))
      throw Error(ErrorCode::not_a_morphism,
                  "vertex maps do not intertwine arrow '" + arrow.name + "'");
  }
  Morphism f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.maps_ = std::move(vertex_maps);
  return f;
}

bool Morphism::is_zero() const {
  for (const Matrix& m : maps_)
    if (!m.is_zero()) return false;
  return true;
}

Morphism Morphism::identity(const Representation& rep) {
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < rep.dims().size(); ++i)
    maps.push_back(Matrix::identity(rep.field(), rep.dim(i)));
  return make(rep, rep, std::move(maps));
}

Morphism Morphism::zero(const Representation& source,
                        const Representation& target) {
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < source.dims().size(); ++i)
    maps.emplace_back(source.field(), target.dim(i), source.dim(i));
  return make(source, target, std::move(maps));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(g.source() == f.target()))
    throw Error(ErrorCode::bad_input, "composition endpoints do not match");
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < f.vertex_maps().size(); ++i)
    maps.push_back(mul(g.vertex_map(i), f.vertex_map(i)));
  return Morphism::make(f.source(), g.target(), std::move(maps));
}

Morphism add(const Morphism& f, const Morphism& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw Error(ErrorCode::bad_input, "morphism sum endpoints do not match");
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < f.vertex_maps().size(); ++i)
    maps.push_back(add(f.vertex_map(i), g.vertex_map(i)));
  return Morphism::make(f.source(), f.target(), std::move(maps));
}

Morphism scale(const Rational& c, const Morphism& f) {
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < f.vertex_maps().size(); ++i)
    maps.push_back(scale(c, f.vertex_map(i)));
  return Morphism::make(f.source(), f.target(), std::move(maps));
}

HomBasis hom_space(const Representation& x, const Representation& y) {
  require_same_context(x, y);
  const Algebra& alg = *x.algebra();
  const FieldSpec& f = x.field();

  // Unknowns: entries of every vertex map f_i (dim_y(i) x dim_x(i)),
  // row-major, vertex blocks concatenated.
  std::vector<std::size_t> offset(alg.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < alg.vertex_count(); ++i)
    offset[i + 1] = offset[i] + y.dim(i) * x.dim(i);
  const std::size_t unknowns = offset.back();

  std::size_t rows = 0;
  for (const Arrow& a : alg.arrows()) rows += y.dim(a.target) * x.dim(a.source);

  // Intertwining: Y_a f_i - f_j X_a = 0 for a: i -> j.
  Matrix system(f, rows, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow& arrow = alg.arrows()[a];
    const std::size_t i = arrow.source, j = arrow.target;
    const Matrix& xa = x.arrow_map(a);
    const Matrix& ya = y.arrow_map(a);
    for (std::size_t s = 0; s < y.dim(j); ++s) {
      for (std::size_t t = 0; t < x.dim(i); ++t) {
        for (std::size_t c = 0; c < y.dim(i); ++c) {
          std::size_t col = offset[i] + c * x.dim(i) + t;
          system.set(row, col, f.add(system.at(row, col), ya.at(s, c)));
        }
        for (std::size_t r = 0; r < x.dim(j); ++r) {
          std::size_t col = offset[j] + s * x.dim(j) + r;
          system.set(row, col,
                     f.sub(system.at(row, col), xa.at(r, t)));
        }
        ++row;
      }
    }
  }

  HomBasis result;
  for (const Vector& v : nullspace_basis(system)) {
    std::vector<Matrix> maps;
    for (std::size_t i = 0; i < alg.vertex_count(); ++i) {
      Matrix m(f, y.dim(i), x.dim(i));
      for (std::size_t r = 0; r < y.dim(i); ++r)
        for (std::size_t c = 0; c < x.dim(i); ++c)
          m.set(r, c, v[offset[i] + r * x.dim(i) + c]);
      maps.push_back(std::move(m));
    }
    result.basis.push_back(Morphism::make(x, y, std::move(maps)));
  }
  return result;
}

// ---- subrepresentations ----

Subrepresentation Subrepresentation::make(Representation ambient,
                                          std::vector<Matrix> bases) {
  require_algebra(ambient.algebra());
  const Algebra& alg = *ambient.algebra();
  if (bases.size() != alg.vertex_count())
    throw Error(ErrorCode::index_mismatch, "one basis per vertex required");
  for (std::size_t i = 0; i < bases.size(); ++i) {
    Matrix& b = bases[i];
    if (!(b.field() == ambient.field()))
      throw Error(ErrorCode::field_mismatch, "subobject basis field");
    if (b.rows() != ambient.dim(i))
      throw Error(ErrorCode::shape_mismatch, "subobject basis height");
    if (rank(b) != b.cols())
      throw Error(ErrorCode::not_a_subrep,
                  "dependent basis columns at vertex " +
                      alg.vertices()[i]);
    b = column_space_basis(b);  // canonical representative of the span
  }
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow& arrow = alg.arrows()[a];
    Matrix img = mul(ambient.arrow_map(a), bases[arrow.source]);
    if (!solve_matrix(bases[arrow.target], img))
      throw Error(ErrorCode::not_a_subrep,
                  "not closed under arrow '" + arrow.name + "'");
  }
  Subrepresentation s;
  s.ambient_ = std::move(ambient);
  s.bases_ = std::move(bases);
  return s;
}

Subrepresentation Subrepresentation::zero(const Representation& ambient) {
  std::vector<Matrix> bases;
  for (std::size_t i = 0; i < ambient.dims().size(); ++i)
    bases.emplace_back(ambient.field(), ambient.dim(i), 0);
  return make(ambient, std::move(bases));
}

Subrepresentation Subrepresentation::full(const Representation& ambient) {
  std::vector<Matrix> bases;
  for (std::size_t i = 0; i < ambient.dims().size(); ++i)
    bases.push_back(Matrix::identity(ambient.field(), ambient.dim(i)));
  return make(ambient, std::move(bases));
}

std::vector<std::size_t> Subrepresentation::dims() const {
  std::vector<std::size_t> d;
  for (const Matrix& b : bases_) d.push_back(b.cols());
  return d;
}

std::size_t Subrepresentation::total_dim() const {
  std::size_t n = 0;
  for (const Matrix& b : bases_) n += b.cols();
  return n;
}

bool Subrepresentation::is_full() const {
  for (std::size_t i = 0; i < bases_.size(); ++i)
    if (bases_[i].cols() != ambient_.dim(i)) return false;
  return true;
}

Representation Subrepresentation::to_representation() const {
  const Algebra& alg = *ambient_.algebra();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow& arrow = alg.arrows()[a];
    Matrix img = mul(ambient_.arrow_map(a), bases_[arrow.source]);
    std::optional<Matrix> coords = solve_matrix(bases_[arrow.target], img);
    if (!coords)
      throw Error(ErrorCode::internal_error, "subobject lost closure");
    maps.push_back(std::move(*coords));
  }
  return Representation::make(ambient_.algebra(), ambient_.field(), dims(),
                              std::move(maps));
}

Morphism Subrepresentation::inclusion() const {
  return Morphism::make(to_representation(), ambient_, bases_);
}

bool Subrepresentation::contains(const Subrepresentation& other) const {
  if (!(ambient_ == other.ambient_))
    throw Error(ErrorCode::bad_input, "subobjects of different ambients");
  for (std::size_t i = 0; i < bases_.size(); ++i)
    if (!solve_matrix(bases_[i], other.bases_[i])) return false;
  return true;
}

bool Subrepresentation::operator==(const Subrepresentation& other) const {
  return ambient_ == other.ambient_ && bases_ == other.bases_;
}

Subrepresentation kernel(const Morphism& f) {
  std::vector<Matrix> bases;
  for (std::size_t i = 0; i < f.vertex_maps().size(); ++i)
    bases.push_back(nullspace_matrix(f.vertex_map(i)));
  return Subrepresentation::make(f.source(), std::move(bases));
}

Subrepresentation image(const Morphism& f) {
  std::vector<Matrix> bases;
  for (std::size_t i = 0; i < f.vertex_maps().size(); ++i)
    bases.push_back(column_space_basis(f.vertex_map(i)));
  return Subrepresentation::make(f.target(), std::move(bases));
}

std::pair<Representation, Morphism> quotient(const Representation& v,
                                             const Subrepresentation& e) {
  if (!(e.ambient() == v))
    throw Error(ErrorCode::bad_input, "subobject of a different ambient");
  const Algebra& alg = *v.algebra();
  const FieldSpec& f = v.field();

  // Complement of each basis by standard vectors at its non-pivot rows;
  // the projection reads off complement coordinates.
  std::vector<Matrix> proj(alg.vertex_count());
  std::vector<Matrix> lift(alg.vertex_count());
  std::vector<std::size_t> qdims(alg.vertex_count());
  for (std::size_t i = 0; i < alg.vertex_count(); ++i) {
    const Matrix& b = e.basis(i);
    const std::size_t d = v.dim(i), k = b.cols();
    std::vector<bool> pivot_row(d, false);
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t lead = 0;
      while (lead < d && sgn(b.at(lead, j)) == 0) ++lead;
      pivot_row[lead] = true;
    }
    Matrix c(f, d, d - k);
    std::size_t col = 0;
    for (std::size_t r = 0; r < d; ++r) {
      if (pivot_row[r]) continue;
      c.set(r, col, Rational(1));
      ++col;
    }
    Matrix m = hstack(b, c);
    std::optional<Matrix> minv = inverse(m);
    if (!minv) throw Error(ErrorCode::internal_error, "complement not a basis");
    Matrix p(f, d - k, d);
    for (std::size_t r = 0; r < d - k; ++r)
      for (std::size_t s = 0; s < d; ++s) p.set(r, s, minv->at(k + r, s));
    proj[i] = std::move(p);
    lift[i] = std::move(c);
    qdims[i] = d - k;
  }

  std::vector<Matrix> qmaps;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow& arrow = alg.arrows()[a];
    qmaps.push_back(mul(proj[arrow.target],
                        mul(v.arrow_map(a), lift[arrow.source])));
  }
  Representation q =
      Representation::make(v.algebra(), f, std::move(qdims), std::move(qmaps));
  Morphism pi = Morphism::make(v, q, std::move(proj));
  return {std::move(q), std::move(pi)};
}

Representation direct_sum(const Representation& a, const Representation& b) {
  require_same_context(a, b);
  const Algebra& alg = *a.algebra();
  std::vector<std::size_t> dims(alg.vertex_count());
  for (std::size_t i = 0; i < alg.vertex_count(); ++i)
    dims[i] = a.dim(i) + b.dim(i);
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < alg.arrow_count(); ++k) {
    const Arrow& arrow = alg.arrows()[k];
    Matrix m(a.field(), dims[arrow.target], dims[arrow.source]);
    const Matrix& ma = a.arrow_map(k);
    const Matrix& mb = b.arrow_map(k);
    for (std::size_t i = 0; i < ma.rows(); ++i)
      for (std::size_t j = 0; j < ma.cols(); ++j) m.set(i, j, ma.at(i, j));
    for (std::size_t i = 0; i < mb.rows(); ++i)
      for (std::size_t j = 0; j < mb.cols(); ++j)
        m.set(ma.rows() + i, ma.cols() + j, mb.at(i, j));
    maps.push_back(std::move(m));
  }
  return Representation::make(a.algebra(), a.field(), std::move(dims),
                              std::move(maps));
}

Subrepresentation sub_from_generators(
    const Representation& v,
    const std::vector<std::vector<Vector>>& generators) {
  require_algebra(v.algebra());
  const Algebra& alg = *v.algebra();
  if (generators.size() != alg.vertex_count())
    throw Error(ErrorCode::index_mismatch, "one generator list per vertex");

  std::vector<Matrix> span(alg.vertex_count());
  for (std::size_t i = 0; i < alg.vertex_count(); ++i) {
    Matrix g(v.field(), v.dim(i), generators[i].size());
    for (std::size_t j = 0; j < generators[i].size(); ++j) {
      if (generators[i][j].size() != v.dim(i))
        throw Error(ErrorCode::shape_mismatch, "generator length");
      for (std::size_t r = 0; r < v.dim(i); ++r)
        g.set(r, j, generators[i][j][r]);
    }
    span[i] = column_space_basis(g);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
      const Arrow& arrow = alg.arrows()[a];
      Matrix img = mul(v.arrow_map(a), span[arrow.source]);
      if (img.cols() == 0) continue;
      if (!solve_matrix(span[arrow.target], img)) {
        span[arrow.target] = column_space_basis(hstack(span[arrow.target], img));
        changed = true;
      }
    }
  }
  return Subrepresentation::make(v, std::move(span));
}

Subrepresentation preimage(const Morphism& f, const Subrepresentation& s) {
  if (!(s.ambient() == f.target()))
    throw Error(ErrorCode::bad_input, "subobject of a different ambient");
  auto [q, pi] = quotient(f.target(), s);
  (void)q;
  std::vector<Matrix> bases;
  for (std::size_t i = 0; i < f.vertex_maps().size(); ++i)
    bases.push_back(nullspace_matrix(mul(pi.vertex_map(i), f.vertex_map(i))));
  return Subrepresentation::make(f.source(), std::move(bases));
}

Subrepresentation restrict_to(const Subrepresentation& outer,
                              const Subrepresentation& inner) {
  if (!outer.contains(inner))
    throw Error(ErrorCode::bad_input, "inner subobject not contained in outer");
  std::vector<Matrix> bases;
  for (std::size_t i = 0; i < outer.bases().size(); ++i) {
    std::optional<Matrix> coords =
        solve_matrix(outer.basis(i), inner.basis(i));
    bases.push_back(std::move(*coords));
  }
  return Subrepresentation::make(outer.to_representation(), std::move(bases));
}

}  // namespace repstab
