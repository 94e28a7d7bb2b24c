#include "repstab/structure.hpp"

#include <string>

#include "repstab/error.hpp"

namespace repstab {

namespace {

std::vector<Matrix> zero_arrow_maps(const Algebra& alg, const FieldSpec& field,
                                    const std::vector<std::size_t>& dims) {
  std::vector<Matrix> maps;
  for (const Arrow& a : alg.arrows())
    maps.emplace_back(field, dims[a.target], dims[a.source]);
  return maps;
}

// J * span: per-vertex column span of the arrow images of `bases`.
std::vector<Matrix> arrow_image_bases(const Representation& v,
                                      const std::vector<Matrix>& bases) {
  const Algebra& alg = *v.algebra();
  std::vector<Matrix> next;
  for (std::size_t j = 0; j < alg.vertex_count(); ++j)
    next.emplace_back(v.field(), v.dim(j), 0);
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow& arrow = alg.arrows()[a];
    Matrix img = mul(v.arrow_map(a), bases[arrow.source]);
    next[arrow.target] = hstack(next[arrow.target], img);
  }
  for (Matrix& m : next) m = column_space_basis(m);
  return next;
}

}  // namespace

Representation simple_at(const AlgebraPtr& algebra, std::size_t vertex,
                         const FieldSpec& field) {
  if (!algebra) throw Error(ErrorCode::bad_input, "empty algebra handle");
  if (vertex >= algebra->vertex_count())
    throw Error(ErrorCode::index_mismatch, "vertex index out of range");
  std::vector<std::size_t> dims(algebra->vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<Matrix> maps = zero_arrow_maps(*algebra, field, dims);
  return Representation::make(algebra, field, std::move(dims), std::move(maps));
}

std::vector<Representation> simples(const AlgebraPtr& algebra,
                                    const FieldSpec& field) {
  if (!algebra) throw Error(ErrorCode::bad_input, "empty algebra handle");
  std::vector<Representation> out;
  for (std::size_t i = 0; i < algebra->vertex_count(); ++i)
    out.push_back(simple_at(algebra, i, field));
  return out;
}

Representation projective(const AlgebraPtr& algebra, std::size_t vertex,
                          const FieldSpec& field) {
  if (!algebra) throw Error(ErrorCode::bad_input, "empty algebra handle");
  const Algebra& alg = *algebra;
  if (vertex >= alg.vertex_count())
    throw Error(ErrorCode::index_mismatch, "vertex index out of range");

  // Basis at vertex j: the nonzero path classes vertex -> j, in the
  // algebra's canonical order.
  std::vector<std::size_t> dims(alg.vertex_count());
  for (std::size_t j = 0; j < alg.vertex_count(); ++j)
    dims[j] = alg.basis_paths(vertex, j, field).size();

  // Arrow a: j -> k appends itself: the class of path p goes to the class
  // of p.a, read off in coordinates over the (vertex, k) block basis.
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow& arrow = alg.arrows()[a];
    const std::vector<std::size_t>& from = alg.basis_paths(vertex, arrow.source, field);
    Matrix m(field, dims[arrow.target], dims[arrow.source]);
    for (std::size_t c = 0; c < from.size(); ++c) {
      std::vector<std::size_t> word = alg.path(from[c], field).arrows;
      word.push_back(a);
      std::optional<std::size_t> ext = alg.find_path(vertex, word, field);
      if (!ext) continue;  // length reached the nilpotency bound: zero class
      const Vector& coords = alg.class_coords(*ext, field);
      for (std::size_t r = 0; r < coords.size(); ++r) m.set(r, c, coords[r]);
    }
    maps.push_back(std::move(m));
  }
  return Representation::make(algebra, field, std::move(dims), std::move(maps));
}

Subrepresentation radical(const Representation& v) {
  return Subrepresentation::make(
      v, arrow_image_bases(v, Subrepresentation::full(v).bases()));
}

Subrepresentation socle(const Representation& v) {
  const Algebra& alg = *v.algebra();
  std::vector<Matrix> bases;
  for (std::size_t j = 0; j < alg.vertex_count(); ++j) {
    Matrix stacked(v.field(), 0, v.dim(j));
    for (std::size_t a = 0; a < alg.arrow_count(); ++a)
      if (alg.arrows()[a].source == j)
        stacked = vstack(stacked, v.arrow_map(a));
    bases.push_back(nullspace_matrix(stacked));
  }
  return Subrepresentation::make(v, std::move(bases));
}

std::vector<Subrepresentation> radical_series(const Representation& v) {
  std::vector<Subrepresentation> series;
  series.push_back(Subrepresentation::full(v));
  while (!series.back().is_zero()) {
    Subrepresentation next = Subrepresentation::make(
        v, arrow_image_bases(v, series.back().bases()));
    if (next.total_dim() >= series.back().total_dim())
      throw Error(ErrorCode::internal_error, "radical series stalled");
    series.push_back(std::move(next));
  }
  return series;
}

JordanHolderData jordan_holder(const Representation& v) {
  std::vector<Subrepresentation> rad = radical_series(v);

  JordanHolderData data;
  data.chain.push_back(rad.back());  // the zero subobject

  // Walk the radical series upward; each layer rad^{k+1} <= W <= rad^k is
  // automatically a subobject (arrows push rad^k into rad^{k+1}), so we may
  // grow one line at a time, vertices in order, columns in basis order.
  for (std::size_t k = rad.size() - 1; k-- > 0;) {
    const Subrepresentation& upper = rad[k];
    std::vector<Matrix> cur = data.chain.back().bases();
    for (std::size_t j = 0; j < cur.size(); ++j) {
      const Matrix& target = upper.basis(j);
      for (std::size_t c = 0; c < target.cols(); ++c) {
        Matrix col(v.field(), target.rows(), 1);
        for (std::size_t r = 0; r < target.rows(); ++r)
          col.set(r, 0, target.at(r, c));
        if (solve_matrix(cur[j], col)) continue;  // already inside
        cur[j] = column_space_basis(hstack(cur[j], col));
        data.chain.push_back(Subrepresentation::make(v, cur));
        data.factors.push_back(j);
      }
    }
    if (!(data.chain.back() == upper))
      throw Error(ErrorCode::internal_error, "layer refinement incomplete");
  }
  return data;
}

GClass gr(const Representation& v) {
  JordanHolderData jh = jordan_holder(v);
  GClass g = GClass::zero(v.algebra()->vertex_count());
  for (std::size_t j : jh.factors) ++g.coeffs[j];
  return g;
}

std::size_t length(const Representation& v) { return jordan_holder(v).length(); }

bool is_semisimple(const Representation& v) { return radical(v).is_zero(); }

Representation semisimple_of_class(const AlgebraPtr& algebra, const GClass& alpha,
                                   const FieldSpec& field) {
  if (!algebra) throw Error(ErrorCode::bad_input, "empty algebra handle");
  if (alpha.size() != algebra->vertex_count())
    throw Error(ErrorCode::index_mismatch, "class length != vertex count");
  if (!alpha.is_effective())
    throw Error(ErrorCode::negative_class,
                "no semisimple object of non-effective class " + to_string(alpha));
  std::vector<std::size_t> dims(alpha.coeffs.begin(), alpha.coeffs.end());
  std::vector<Matrix> maps = zero_arrow_maps(*algebra, field, dims);
  return Representation::make(algebra, field, std::move(dims), std::move(maps));
}

}  // namespace repstab
