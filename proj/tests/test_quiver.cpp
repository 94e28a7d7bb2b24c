#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "repstab/error.hpp"
#include "repstab/presets.hpp"
#include "repstab/representation.hpp"
#include "repstab/structure.hpp"

using namespace repstab;

namespace {

Matrix mat(FieldSpec f, std::vector<std::vector<long>> rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Rational(rows[r][c]));
  return m;
}

Relation rel(std::vector<std::pair<long, std::vector<std::size_t>>> terms) {
  Relation r;
  for (auto& [c, w] : terms) r.terms.push_back({Rational(c), w});
  return r;
}

// Rejection-sample a representation satisfying the relations.
Representation random_rep(const AlgebraPtr& alg, const FieldSpec& f,
                          const std::vector<std::size_t>& dims,
                          std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(0, f.characteristic() - 1);
  while (true) {
    std::vector<Matrix> maps;
    for (const Arrow& a : alg->arrows()) {
      Matrix m(f, dims[a.target], dims[a.source]);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, Rational(d(rng)));
      maps.push_back(std::move(m));
    }
    try {
      return Representation::make(alg, f, dims, std::move(maps));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::relation_violated) throw;
    }
  }
}

}  // namespace

TEST_CASE("presentation validation") {
  // Names must be nonempty and must not contain the separators.
  CHECK_THROWS_AS(Algebra::make({""}, {}, {}), Error);
  CHECK_THROWS_AS(Algebra::make({"1", "1"}, {}, {}), Error);
  CHECK_THROWS_AS(Algebra::make({"a.b"}, {}, {}), Error);
  CHECK_THROWS_AS(Algebra::make({"1"}, {{"x", 0, 1}}, {}), Error);
  CHECK_THROWS_AS(Algebra::make({"1"}, {{"x", 0, 0}, {"x", 0, 0}}, {}), Error);

  // Relations: words of length >= 2, parallel, composable, nonzero coeffs.
  CHECK_THROWS_AS(Algebra::make({"1"}, {{"x", 0, 0}}, {rel({{1, {0}}})}), Error);
  CHECK_THROWS_AS(Algebra::make({"1"}, {{"x", 0, 0}}, {rel({{0, {0, 0}}})}), Error);
  CHECK_THROWS_AS(Algebra::make({"1"}, {{"x", 0, 0}}, {rel({})}), Error);
  CHECK_THROWS_AS(
      Algebra::make({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}}, {rel({{1, {0, 0}}})}),
      Error);
  CHECK_THROWS_AS(Algebra::make({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}},
                                {rel({{1, {0, 1}}, {1, {1, 0}}})}),
                  Error);

  try {
    Algebra::make({"1"}, {{"x", 0, 0}}, {rel({{1, {0}}})});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_presentation);
  }
}

TEST_CASE("finite-dimensionality certificates") {
  AlgebraPtr sl2 = preset_algebra("sl2block");
  CHECK(sl2->nilpotency() == 3);
  CHECK(sl2->dimension() == 5);
  CHECK(sl2->nonzero_class_count() == 5);

  CHECK(preset_algebra("a2")->dimension() == 3);
  CHECK(preset_algebra("kronecker")->dimension() == 4);
  CHECK(preset_algebra("dualnumbers")->nilpotency() == 2);
  CHECK(preset_algebra("dualnumbers")->dimension() == 2);

  // Commuting square: e_i (4), single arrows (4), one diagonal class (1).
  AlgebraPtr square = Algebra::make(
      {"1", "2", "3", "4"},
      {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}},
      {rel({{1, {0, 2}}, {-1, {1, 3}}})});
  CHECK(square->nilpotency() == 3);
  CHECK(square->dimension() == 9);

  // Inhomogeneous but admissible: x.x = x.x.x = 0 follows.
  AlgebraPtr inhom = Algebra::make(
      {"1"}, {{"x", 0, 0}},
      {rel({{1, {0, 0, 0}}}), rel({{1, {0, 0}}, {-1, {0, 0, 0}}})});
  CHECK(inhom->nilpotency() == 2);
  CHECK(inhom->dimension() == 2);

  // x.x - x.x.x alone certifies nothing: x.x = x.x.x = x.x.x.x = ... never
  // terminates inside the arrow ideal.
  CHECK_THROWS_AS(
      Algebra::make({"1"}, {{"x", 0, 0}}, {rel({{1, {0, 0}}, {-1, {0, 0, 0}}})}),
      Error);

  // A relation can degenerate modulo p: 2*x.x dies over F_2.
  AlgebraPtr twice = Algebra::make({"1"}, {{"x", 0, 0}}, {rel({{2, {0, 0}}})});
  CHECK(twice->dimension() == 2);
  CHECK(twice->dimension(FieldSpec::prime(3)) == 2);
  CHECK_THROWS_AS(twice->dimension(FieldSpec::prime(2)), Error);
}

TEST_CASE("path classes of the sl2 block") {
  AlgebraPtr sl2 = preset_algebra("sl2block");
  const std::size_t a = *sl2->arrow_index("a");
  const std::size_t b = *sl2->arrow_index("b");

  // Basis classes: e1, e2, a, b, b.a -- and a.b is the relation.
  CHECK(sl2->basis_paths(0, 0).size() == 1);
  CHECK(sl2->basis_paths(0, 1).size() == 1);
  CHECK(sl2->basis_paths(1, 0).size() == 1);
  CHECK(sl2->basis_paths(1, 1).size() == 2);

  std::optional<std::size_t> ab = sl2->find_path(0, {a, b});
  REQUIRE(ab.has_value());
  for (const Rational& c : sl2->class_coords(*ab)) CHECK(sign(c) == 0);

  std::optional<std::size_t> ba = sl2->find_path(1, {b, a});
  REQUIRE(ba.has_value());
  const Vector& coords = sl2->class_coords(*ba);
  REQUIRE(coords.size() == 2);
  CHECK(coords[0] == 0);
  CHECK(coords[1] == 1);

  // Length-3 words hit the nilpotency bound and are not stored.
  CHECK(!sl2->find_path(0, {a, b, a}).has_value());
}

TEST_CASE("representation validation") {
  AlgebraPtr dn = preset_algebra("dualnumbers");
  FieldSpec q = FieldSpec::rationals();

  Representation ok =
      Representation::make(dn, q, {1}, {mat(q, {{0}}, 1)});
  CHECK(relations_hold(ok));
  CHECK_NOTHROW(validate(ok));

  try {
    Representation::make(dn, q, {1}, {mat(q, {{1}}, 1)});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::relation_violated);
  }

  // Shape and field mismatches.
  CHECK_THROWS_AS(Representation::make(dn, q, {1}, {mat(q, {{0, 0}}, 2)}), Error);
  CHECK_THROWS_AS(Representation::make(dn, q, {1, 1}, {mat(q, {{0}}, 1)}), Error);
  CHECK_THROWS_AS(
      Representation::make(dn, q, {1}, {mat(FieldSpec::prime(2), {{0}}, 1)}),
      Error);

  // Relation-free quivers accept anything of the right shape.
  AlgebraPtr kr = preset_algebra("kronecker");
  CHECK_NOTHROW(Representation::make(kr, q, {2, 1},
                                     {mat(q, {{1, 2}}, 2), mat(q, {{3, 4}}, 2)}));
}

TEST_CASE("hom spaces match hand counts") {
  AlgebraPtr sl2 = preset_algebra("sl2block");
  std::vector<Representation> s = simples(sl2);
  CHECK(hom_space(s[0], s[0]).dim() == 1);
  CHECK(hom_space(s[0], s[1]).dim() == 0);
  CHECK(hom_space(s[1], s[0]).dim() == 0);

  // End(P) of the dual numbers is k[x]/(x^2) itself.
  Representation p = preset_object("dualnumbers", "P1");
  CHECK(hom_space(p, p).dim() == 2);

  Representation p1 = preset_object("sl2block", "P1");
  CHECK(hom_space(p1, p1).dim() == 1);

  // Mismatched contexts are rejected.
  CHECK_THROWS_AS(hom_space(p, p1), Error);
  CHECK_THROWS_AS(
      hom_space(p, preset_object("dualnumbers", "P1", FieldSpec::prime(2))),
      Error);
}

TEST_CASE("hom dimension agrees with brute force over F_2") {
  FieldSpec f2 = FieldSpec::prime(2);
  std::mt19937_64 rng(20240817);
  AlgebraPtr algebras[] = {preset_algebra("a2"), preset_algebra("dualnumbers"),
                           preset_algebra("sl2block")};
  for (const AlgebraPtr& alg : algebras) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<std::size_t> xdims, ydims;
      std::uniform_int_distribution<std::size_t> d(0, 2);
      std::size_t xtotal = 0, ytotal = 0;
      for (std::size_t i = 0; i < alg->vertex_count(); ++i) {
        xdims.push_back(d(rng));
        ydims.push_back(d(rng));
        xtotal += xdims.back();
        ytotal += ydims.back();
      }
      if (xtotal > 3 || ytotal > 3) continue;
      Representation x = random_rep(alg, f2, xdims, rng);
      Representation y = random_rep(alg, f2, ydims, rng);

      // Count all vertex-map tuples that intertwine.
      std::size_t cells = 0;
      for (std::size_t i = 0; i < alg->vertex_count(); ++i)
        cells += xdims[i] * ydims[i];
      std::size_t hits = 0;
      for (std::size_t code = 0; code < (std::size_t{1} << cells); ++code) {
        std::vector<Matrix> maps;
        std::size_t bit = 0;
        for (std::size_t i = 0; i < alg->vertex_count(); ++i) {
          Matrix m(f2, ydims[i], xdims[i]);
          for (std::size_t r = 0; r < ydims[i]; ++r)
            for (std::size_t c = 0; c < xdims[i]; ++c)
              m.set(r, c, Rational((code >> bit++) & 1));
          maps.push_back(std::move(m));
        }
        bool ok = true;
        for (std::size_t a = 0; a < alg->arrow_count() && ok; ++a) {
          const Arrow& arrow = alg->arrows()[a];
          ok = mul(maps[arrow.target], x.arrow_map(a)) ==
               mul(y.arrow_map(a), maps[arrow.source]);
        }
        if (ok) ++hits;
      }
      std::size_t dim = hom_space(x, y).dim();
      CHECK(hits == (std::size_t{1} << dim));
    }
  }
}

TEST_CASE("kernel, image, quotient") {
  AlgebraPtr sl2 = preset_algebra("sl2block");
  Representation p1 = preset_object("sl2block", "P1");  // M(0)
  Representation s1 = preset_object("sl2block", "S1");

  // The epimorphism P_1 -> S_1 spans Hom(P_1, S_1).
  HomBasis h = hom_space(p1, s1);
  REQUIRE(h.dim() == 1);
  const Morphism& f = h.basis[0];

  Subrepresentation ker = kernel(f);
  CHECK(ker.dims() == std::vector<std::size_t>{0, 1});  // the L(-2) inside M(0)
  Subrepresentation img = image(f);
  CHECK(img.is_full());

  // Vertex-wise rank-nullity.
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(ker.dims()[i] + img.dims()[i] == p1.dim(i));

  // Quotient by the kernel is the simple, and projection o inclusion = 0.
  auto [q, pi] = quotient(p1, ker);
  CHECK(q.dims() == std::vector<std::size_t>{1, 0});
  CHECK(compose(pi, ker.inclusion()).is_zero());

  // Quotient by zero and by everything.
  auto [q0, pi0] = quotient(p1, Subrepresentation::zero(p1));
  CHECK(q0.dims() == p1.dims());
  CHECK(!pi0.is_zero());
  auto [qf, pif] = quotient(p1, Subrepresentation::full(p1));
  CHECK(qf.total_dim() == 0);
  CHECK(pif.is_zero());

  // identity / zero morphisms.
  CHECK(kernel(Morphism::identity(p1)).is_zero());
  CHECK(kernel(Morphism::zero(p1, s1)).is_full());
  CHECK(image(Morphism::identity(p1)).is_full());
  CHECK(image(Morphism::zero(p1, s1)).is_zero());
}

TEST_CASE("morphism and subrepresentation rejections") {
  FieldSpec q = FieldSpec::rationals();
  Representation p = preset_object("dualnumbers", "P1");
  Representation s = preset_object("dualnumbers", "S1");

  // The identity on vertex spaces does not intertwine P -> S... wrong shape;
  // use a map P -> P that ignores the arrow action instead.
  Matrix bad(q, 2, 2);
  bad.set(0, 1, Rational(1));
  try {
    Morphism::make(p, p, {bad});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_morphism);
  }

  // A line not closed under the loop: x sends e_1 to e_2, so span{e_1} is
  // not a subobject.
  Matrix line(q, 2, 1);
  line.set(0, 0, Rational(1));
  try {
    Subrepresentation::make(p, {line});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_subrep);
  }

  // Dependent columns are rejected, not cleaned up.
  Matrix dependent(q, 2, 2);
  dependent.set(1, 0, Rational(1));
  dependent.set(1, 1, Rational(2));
  try {
    Subrepresentation::make(p, {dependent});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_subrep);
  }

  // The x-image line is a subobject, canonicalized to the unit vector.
  Matrix good(q, 2, 1);
  good.set(1, 0, Rational(7));
  Subrepresentation sub = Subrepresentation::make(p, {good});
  CHECK(sub.basis(0).at(1, 0) == 1);
  CHECK(sub.to_representation().dims() == std::vector<std::size_t>{1});
  CHECK(!sub.contains(Subrepresentation::full(p)));
  CHECK(Subrepresentation::full(p).contains(sub));
  (void)s;
}

TEST_CASE("direct sums and generated subobjects") {
  AlgebraPtr sl2 = preset_algebra("sl2block");
  Representation p2 = preset_object("sl2block", "P2");
  Representation s1 = preset_object("sl2block", "S1");

  Representation sum = direct_sum(p2, s1);
  CHECK(sum.dims() == std::vector<std::size_t>{2, 2});
  CHECK(hom_space(direct_sum(p2, p2), s1).dim() ==
        2 * hom_space(p2, s1).dim());

  Representation zero = Representation::zero(sl2, FieldSpec::rationals());
  CHECK(direct_sum(p2, zero).dims() == p2.dims());

  // Generators: nothing, everything, and the vertex-1 line of P_2 (which
  // drags in its arrow image and yields the M(0)-shaped subobject).
  CHECK(sub_from_generators(p2, {{}, {}}).is_zero());
  Subrepresentation everything = sub_from_generators(
      p2, {{Vector{Rational(1)}},
           {Vector{Rational(1), Rational(0)}, Vector{Rational(0), Rational(1)}}});
  CHECK(everything.is_full());
  Subrepresentation generated =
      sub_from_generators(p2, {{Vector{Rational(1)}}, {}});
  CHECK(generated.dims() == std::vector<std::size_t>{1, 1});

  // preimage and restriction round out the lattice operations.
  HomBasis h = hom_space(p2, p2);
  REQUIRE(h.dim() == 2);
  Subrepresentation back = preimage(Morphism::identity(p2), generated);
  CHECK(back == generated);
  Subrepresentation inner = restrict_to(generated, sub_from_generators(
      p2, {{}, {Vector{Rational(0), Rational(1)}}}));
  CHECK(inner.dims() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("length additivity across kernel/quotient pairs") {
  FieldSpec f2 = FieldSpec::prime(2);
  std::mt19937_64 rng(424242);
  for (const char* name : {"a2", "kronecker", "sl2block", "dualnumbers"}) {
    AlgebraPtr alg = preset_algebra(name);
    for (int trial = 0; trial < 8; ++trial) {
      std::uniform_int_distribution<std::size_t> d(0, 2);
      std::vector<std::size_t> xdims, ydims;
      for (std::size_t i = 0; i < alg->vertex_count(); ++i) {
        xdims.push_back(d(rng));
        ydims.push_back(d(rng));
      }
      Representation x = random_rep(alg, f2, xdims, rng);
      Representation y = random_rep(alg, f2, ydims, rng);
      HomBasis h = hom_space(x, y);
      if (h.dim() == 0) continue;
      const Morphism& f = h.basis[rng() % h.dim()];
      Subrepresentation ker = kernel(f);
      auto [q, pi] = quotient(x, ker);
      CHECK(length(x) == length(ker.to_representation()) + length(q));
      CHECK(compose(pi, ker.inclusion()).is_zero());
    }
  }
}
