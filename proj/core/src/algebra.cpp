#include "repstab/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "repstab/error.hpp"

namespace repstab {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
      return false;
  }
  return true;
}

[[noreturn]] void reject(const std::string& why) {
  throw Error(ErrorCode::invalid_presentation, why);
}

// Incrementally maintained reduced row echelon basis of a row space;
// supports exact span-membership tests and coordinate extraction.
class RowReducer {
 public:
  RowReducer(FieldSpec field, std::size_t cols) : field_(field), cols_(cols) {}

  // Fully reduces v in place; afterwards v vanishes on every pivot column.
  void reduce(Vector& v) const {
    for (const auto& [pivot, row] : rows_) {
      Rational c = v[pivot];
      if (sgn(c) == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        v[j] = field_.sub(v[j], field_.mul(c, row[j]));
    }
  }

  // Returns true when v enlarged the span.
  bool insert(Vector v) {
    reduce(v);
    std::size_t pivot = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(v[j]) != 0) { pivot = j; break; }
    }
    if (pivot == cols_) return false;
    Rational inv = field_.inv(v[pivot]);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = field_.mul(inv, v[j]);
    for (auto& [q, row] : rows_) {
      Rational c = row[pivot];
      if (sgn(c) == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        row[j] = field_.sub(row[j], field_.mul(c, v[j]));
    }
    rows_[pivot] = std::move(v);
    return true;
  }

  bool in_span(Vector v) const {
    reduce(v);
    for (const Rational& x : v)
      if (sgn(x) != 0) return false;
    return true;
  }

  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }
  std::size_t rank() const { return rows_.size(); }

 private:
  FieldSpec field_;
  std::size_t cols_;
  std::map<std::size_t, Vector> rows_;  // pivot column -> reduced row
};

}  // namespace

AlgebraPtr Algebra::make(std::vector<std::string> vertices,
                         std::vector<Arrow> arrows,
                         std::vector<Relation> relations,
                         PresentationLimits limits) {
  if (vertices.empty()) reject("a quiver needs at least one vertex");
  for (const std::string& v : vertices)
    if (!valid_name(v)) reject("bad vertex name '" + v + "'");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j]) reject("duplicate vertex '" + vertices[i] + "'");

  for (const Arrow& a : arrows) {
    if (!valid_name(a.name)) reject("bad arrow name '" + a.name + "'");
    if (a.source >= vertices.size() || a.target >= vertices.size())
      reject("arrow '" + a.name + "' has an endpoint outside the quiver");
  }
  for (std::size_t i = 0; i < arrows.size(); ++i)
    for (std::size_t j = i + 1; j < arrows.size(); ++j)
      if (arrows[i].name == arrows[j].name)
        reject("duplicate arrow '" + arrows[i].name + "'");

  // Relations: nonempty, parallel, composable, words of length >= 2 (so the
  // ideal they generate is admissible), nonzero coefficients.
  for (Relation& r : relations) {
    if (r.terms.empty()) reject("empty relation");
    bool first = true;
    for (const RelationTerm& t : r.terms) {
      if (sgn(t.coeff) == 0) reject("relation term with zero coefficient");
      if (t.word.size() < 2)
        reject("relation word shorter than 2 arrows (not admissible)");
      for (std::size_t a : t.word)
        if (a >= arrows.size()) reject("relation references an unknown arrow");
      for (std::size_t k = 0; k + 1 < t.word.size(); ++k)
        if (arrows[t.word[k]].target != arrows[t.word[k + 1]].source)
          reject("relation word is not composable");
      std::size_t s = arrows[t.word.front()].source;
      std::size_t e = arrows[t.word.back()].target;
      if (first) {
        r.source = s;
        r.target = e;
        first = false;
      } else if (r.source != s || r.target != e) {
        reject("relation mixes non-parallel paths");
      }
    }
  }

  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->vertices_ = std::move(vertices);
  alg->arrows_ = std::move(arrows);
  alg->relations_ = std::move(relations);
  alg->limits_ = limits;
  // Certify over Q eagerly; prime fields are certified lazily on first use.
  alg->rational_table_ = alg->build_table(FieldSpec::rationals());
  return alg;
}

std::optional<std::size_t> Algebra::vertex_index(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Algebra::arrow_index(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  return std::nullopt;
}

bool Algebra::same_presentation(const Algebra& other) const {
  return vertices_ == other.vertices_ && arrows_ == other.arrows_ &&
         relations_ == other.relations_;
}

Algebra::PathTable Algebra::build_table(const FieldSpec& field) const {
  const std::size_t nv = vertices_.size();

  std::size_t max_rel_len = 0;
  for (const Relation& r : relations_)
    for (const RelationTerm& t : r.terms)
      max_rel_len = std::max(max_rel_len, t.word.size());

  // A nonzero path class forces all of its prefixes nonzero and those are
  // pairwise distinct words, so any certifiable-within-caps presentation has
  // nilpotency at most max_path_classes + 1.  Enumerate a window deep enough
  // to also hold every ideal product used by the certificate.
  const std::size_t len_cap = limits_.max_path_classes + max_rel_len + 2;

  PathTable t;
  std::vector<std::vector<std::size_t>> by_length;  // ids per length
  std::vector<std::vector<std::size_t>> out_arrows(nv);
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    out_arrows[arrows_[a].source].push_back(a);

  auto push_path = [&](Path p) {
    std::size_t id = t.paths.size();
    t.index.emplace(std::make_pair(p.source, p.arrows), id);
    t.paths.push_back(std::move(p));
    return id;
  };

  by_length.emplace_back();
  for (std::size_t v = 0; v < nv; ++v)
    by_length[0].push_back(push_path(Path{v, v, {}}));

  std::size_t complete_len = 0;  // every length <= complete_len fully listed
  for (std::size_t len = 1; len <= len_cap; ++len) {
    by_length.emplace_back();
    for (std::size_t pid : by_length[len - 1]) {
      // copy endpoints up front: push_path may reallocate t.paths
      const std::size_t psource = t.paths[pid].source;
      const std::size_t ptarget = t.paths[pid].target;
      for (std::size_t a : out_arrows[ptarget]) {
        if (t.paths.size() >= limits_.max_paths)
          reject("too many paths within the certification window (limit " +
                 std::to_string(limits_.max_paths) + ")");
        Path q;
        q.source = psource;
        q.target = arrows_[a].target;
        q.arrows = t.paths[pid].arrows;
        q.arrows.push_back(a);
        by_length[len].push_back(push_path(std::move(q)));
      }
    }
    complete_len = len;
    if (by_length[len].empty()) break;  // no longer paths exist at all
  }

  // Block bookkeeping over the full window.
  auto block_of = [&](std::size_t s, std::size_t tgt) { return s * nv + tgt; };
  std::vector<std::vector<std::size_t>> window_block_paths(nv * nv);
  std::vector<std::size_t> local_pos(t.paths.size());
  for (std::size_t id = 0; id < t.paths.size(); ++id) {
    std::size_t b = block_of(t.paths[id].source, t.paths[id].target);
    local_pos[id] = window_block_paths[b].size();
    window_block_paths[b].push_back(id);
  }

  std::vector<std::vector<std::size_t>> paths_into(nv), paths_from(nv);
  for (std::size_t id = 0; id < t.paths.size(); ++id) {
    paths_into[t.paths[id].target].push_back(id);
    paths_from[t.paths[id].source].push_back(id);
  }

  // Certification span: honest ideal elements u*r*v whose every term lies in
  // the enumerated window.  Membership of a path in this span proves the
  // path lies in the relation ideal (never the converse), so the nilpotency
  // certificate below cannot accept a bad presentation.
  std::vector<RowReducer> cert(nv * nv, RowReducer(field, 0));
  for (std::size_t b = 0; b < nv * nv; ++b)
    cert[b] = RowReducer(field, window_block_paths[b].size());

  std::size_t products = 0;
  for (const Relation& r : relations_) {
    std::vector<std::pair<Rational, std::vector<std::size_t>>> terms;
    for (const RelationTerm& term : r.terms) {
      Rational c = field.embed(term.coeff);
      if (sgn(c) != 0) terms.emplace_back(c, term.word);
    }
    if (terms.empty()) continue;  // relation degenerates over this field
    std::size_t rel_max = 0;
    for (const auto& [c, w] : terms) rel_max = std::max(rel_max, w.size());

    for (std::size_t u : paths_into[r.source]) {
      const Path& pu = t.paths[u];
      if (pu.arrows.size() + rel_max > complete_len) continue;
      for (std::size_t v : paths_from[r.target]) {
        const Path& pv = t.paths[v];
        if (pu.arrows.size() + rel_max + pv.arrows.size() > complete_len)
          continue;
        if (++products > limits_.max_products)
          reject("too many ideal products within the certification window "
                 "(limit " + std::to_string(limits_.max_products) + ")");
        std::size_t b = block_of(pu.source, pv.target);
        Vector row(window_block_paths[b].size(), Rational(0));
        for (const auto& [c, w] : terms) {
          std::vector<std::size_t> word = pu.arrows;
          word.insert(word.end(), w.begin(), w.end());
          word.insert(word.end(), pv.arrows.begin(), pv.arrows.end());
          auto it = t.index.find(std::make_pair(pu.source, word));
          if (it == t.index.end())
            throw Error(ErrorCode::internal_error, "path window too small");
          std::size_t pos = local_pos[it->second];
          row[pos] = field.add(row[pos], c);
        }
        cert[b].insert(std::move(row));
      }
    }
  }

  // Least N <= complete_len with every length-N path certified inside the
  // ideal.  Vacuous when no length-N path exists (acyclic quivers).
  std::size_t nilp = 0;
  for (std::size_t n = 1; n <= complete_len; ++n) {
    bool ok = true;
    if (n < by_length.size()) {
      for (std::size_t pid : by_length[n]) {
        std::size_t b = block_of(t.paths[pid].source, t.paths[pid].target);
        Vector e(window_block_paths[b].size(), Rational(0));
        e[local_pos[pid]] = Rational(1);
        if (!cert[b].in_span(std::move(e))) { ok = false; break; }
      }
    }
    if (ok) { nilp = n; break; }
  }
  if (nilp == 0)
    reject("cannot certify finite dimension over " + field.name() +
           ": no power of the arrow ideal up to " +
           std::to_string(complete_len) +
           " lies inside the relation ideal");
  t.nilpotency = nilp;

  // Quotient data lives on the words of length < N, which form a prefix of
  // the enumeration (ids are sorted by length).
  std::size_t keep = 0;
  while (keep < t.paths.size() && t.paths[keep].arrows.size() < nilp) ++keep;
  t.paths.resize(keep);
  {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> idx;
    for (std::size_t id = 0; id < keep; ++id)
      idx.emplace(std::make_pair(t.paths[id].source, t.paths[id].arrows), id);
    t.index = std::move(idx);
  }

  t.blocks.assign(nv * nv, Block{});
  std::vector<std::size_t> short_pos(keep);
  for (std::size_t id = 0; id < keep; ++id) {
    std::size_t b = block_of(t.paths[id].source, t.paths[id].target);
    short_pos[id] = t.blocks[b].path_ids.size();
    t.blocks[b].path_ids.push_back(id);
  }

  // Image of the ideal in the truncation: products u*r*v with terms of
  // length >= N dropped (those are zero classes by the certificate).
  std::vector<RowReducer> ideal(nv * nv, RowReducer(field, 0));
  for (std::size_t b = 0; b < nv * nv; ++b)
    ideal[b] = RowReducer(field, t.blocks[b].path_ids.size());

  for (const Relation& r : relations_) {
    std::vector<std::pair<Rational, std::vector<std::size_t>>> terms;
    std::size_t rel_min = SIZE_MAX;
    for (const RelationTerm& term : r.terms) {
      Rational c = field.embed(term.coeff);
      if (sgn(c) == 0) continue;
      terms.emplace_back(c, term.word);
      rel_min = std::min(rel_min, term.word.size());
    }
    if (terms.empty()) continue;
    for (std::size_t u : paths_into[r.source]) {
      if (u >= keep) continue;
      const Path& pu = t.paths[u];
      if (pu.arrows.size() + rel_min >= nilp) continue;
      for (std::size_t v : paths_from[r.target]) {
        if (v >= keep) continue;
        const Path& pv = t.paths[v];
        if (pu.arrows.size() + rel_min + pv.arrows.size() >= nilp) continue;
        std::size_t b = block_of(pu.source, pv.target);
        Vector row(t.blocks[b].path_ids.size(), Rational(0));
        bool nonzero = false;
        for (const auto& [c, w] : terms) {
          if (pu.arrows.size() + w.size() + pv.arrows.size() >= nilp) continue;
          std::vector<std::size_t> word = pu.arrows;
          word.insert(word.end(), w.begin(), w.end());
          word.insert(word.end(), pv.arrows.begin(), pv.arrows.end());
          std::size_t pos = short_pos[t.index.at(std::make_pair(pu.source, word))];
          row[pos] = field.add(row[pos], c);
          nonzero = true;
        }
        if (nonzero) ideal[b].insert(std::move(row));
      }
    }
  }

  t.dimension = 0;
  t.nonzero_classes = 0;
  for (std::size_t b = 0; b < nv * nv; ++b) {
    Block& blk = t.blocks[b];
    const std::size_t n = blk.path_ids.size();
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (!ideal[b].is_pivot(pos)) blk.basis.push_back(blk.path_ids[pos]);
    }
    t.dimension += blk.basis.size();
    blk.coords.reserve(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
      Vector e(n, Rational(0));
      e[pos] = Rational(1);
      ideal[b].reduce(e);
      // residual is supported away from pivots: its basis coordinates
      Vector coords;
      coords.reserve(blk.basis.size());
      bool nonzero = false;
      for (std::size_t q = 0; q < n; ++q) {
        if (ideal[b].is_pivot(q)) continue;
        coords.push_back(e[q]);
        if (sgn(e[q]) != 0) nonzero = true;
      }
      if (nonzero) ++t.nonzero_classes;
      blk.coords.push_back(std::move(coords));
    }
  }
  if (t.nonzero_classes > limits_.max_path_classes)
    reject("quotient algebra has " + std::to_string(t.nonzero_classes) +
           " nonzero path classes, above the cap of " +
           std::to_string(limits_.max_path_classes));

  return t;
}

const Algebra::PathTable& Algebra::table(const FieldSpec& field) const {
  if (!field.is_prime()) return rational_table_;
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = prime_tables_.find(field.characteristic());
  if (it == prime_tables_.end())
    it = prime_tables_.emplace(field.characteristic(), build_table(field)).first;
  return it->second;
}

std::size_t Algebra::nilpotency(const FieldSpec& field) const {
  return table(field).nilpotency;
}

std::size_t Algebra::dimension(const FieldSpec& field) const {
  return table(field).dimension;
}

std::size_t Algebra::nonzero_class_count(const FieldSpec& field) const {
  return table(field).nonzero_classes;
}

std::size_t Algebra::path_count(const FieldSpec& field) const {
  return table(field).paths.size();
}

const Path& Algebra::path(std::size_t id, const FieldSpec& field) const {
  return table(field).paths.at(id);
}

std::optional<std::size_t> Algebra::find_path(
    std::size_t source, const std::vector<std::size_t>& word,
    const FieldSpec& field) const {
  const PathTable& t = table(field);
  auto it = t.index.find(std::make_pair(source, word));
  if (it == t.index.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& Algebra::basis_paths(
    std::size_t i, std::size_t j, const FieldSpec& field) const {
  return table(field).blocks.at(i * vertices_.size() + j).basis;
}

const Vector& Algebra::class_coords(std::size_t path_id,
                                    const FieldSpec& field) const {
  const PathTable& t = table(field);
  const Path& p = t.paths.at(path_id);
  const Block& b = t.blocks.at(p.source * vertices_.size() + p.target);
  for (std::size_t pos = 0; pos < b.path_ids.size(); ++pos)
    if (b.path_ids[pos] == path_id) return b.coords[pos];
  throw Error(ErrorCode::internal_error, "path not in its block");
}

}  // namespace repstab
