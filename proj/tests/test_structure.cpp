#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "repstab/error.hpp"
#include "repstab/presets.hpp"
#include "repstab/structure.hpp"

using namespace repstab;

namespace {

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

Matrix random_invertible(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(0, f.characteristic() - 1);
  while (true) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, Rational(d(rng)));
    if (inverse(m).has_value()) return m;
  }
}

GClass dims_class(const Representation& v) {
  GClass g = GClass::zero(v.algebra()->vertex_count());
  for (std::size_t i = 0; i < g.size(); ++i)
    g.coeffs[i] = static_cast<long long>(v.dim(i));
  return g;
}

}  // namespace

TEST_CASE("simples") {
  for (const char* name : {"a2", "kronecker", "dualnumbers", "sl2block"}) {
    AlgebraPtr alg = preset_algebra(name);
    std::vector<Representation> s = simples(alg);
    REQUIRE(s.size() == alg->vertex_count());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].total_dim() == 1);
      CHECK(s[i].dim(i) == 1);
      for (const Matrix& m : s[i].arrow_maps()) CHECK(m.is_zero());
      CHECK(is_semisimple(s[i]));
      CHECK(length(s[i]) == 1);
      CHECK(s[i] == simple_at(alg, i));
    }
  }
  CHECK_THROWS_AS(simple_at(preset_algebra("a2"), 2), std::exception);
}

TEST_CASE("projectives") {
  // a2: P_1 has socle S_2, P_2 is simple.
  AlgebraPtr a2 = preset_algebra("a2");
  CHECK(projective(a2, 0).dims() == std::vector<std::size_t>{1, 1});
  CHECK(projective(a2, 1).dims() == std::vector<std::size_t>{0, 1});
  CHECK(projective(a2, 1) == simple_at(a2, 1));

  AlgebraPtr kr = preset_algebra("kronecker");
  Representation kp1 = projective(kr, 0);
  CHECK(kp1.dims() == std::vector<std::size_t>{1, 2});
  // The two arrows pick out the two basis paths at vertex 2.
  CHECK(rank(hstack(kp1.arrow_map(0), kp1.arrow_map(1))) == 2);

  Representation dp = projective(preset_algebra("dualnumbers"), 0);
  CHECK(dp.dims() == std::vector<std::size_t>{2});
  CHECK(rank(dp.arrow_map(0)) == 1);
  CHECK(mul(dp.arrow_map(0), dp.arrow_map(0)).is_zero());

  // sl2block: P_2 is uniserial S_2 / S_1 / S_2 with pinned matrices.
  Representation p2 = preset_object("sl2block", "P2");
  CHECK(p2.dims() == std::vector<std::size_t>{1, 2});
  Matrix va(FieldSpec::rationals(), 2, 1);
  va.set(1, 0, Rational(1));
  Matrix vb(FieldSpec::rationals(), 1, 2);
  vb.set(0, 0, Rational(1));
  CHECK(p2.arrow_map(0) == va);
  CHECK(p2.arrow_map(1) == vb);
}

TEST_CASE("radical and socle") {
  Representation dp = preset_object("dualnumbers", "P1");
  Subrepresentation rad = radical(dp);
  Subrepresentation soc = socle(dp);
  CHECK(rad.total_dim() == 1);
  CHECK(soc.total_dim() == 1);
  CHECK(rad == soc);  // the x-image line is both

  Representation p2 = preset_object("sl2block", "P2");
  CHECK(radical(p2).dims() == std::vector<std::size_t>{1, 1});
  CHECK(socle(p2).dims() == std::vector<std::size_t>{0, 1});

  // Semisimple objects: radical zero, socle everything.
  Representation ss = semisimple_of_class(preset_algebra("kronecker"),
                                          GClass{{2, 1}});
  CHECK(radical(ss).is_zero());
  CHECK(socle(ss).is_full());
  CHECK(is_semisimple(ss));
}

TEST_CASE("radical series descends to zero") {
  Representation p2 = preset_object("sl2block", "P2");
  std::vector<Subrepresentation> series = radical_series(p2);
  REQUIRE(series.size() == 4);
  CHECK(series[0].is_full());
  CHECK(series[1].dims() == std::vector<std::size_t>{1, 1});
  CHECK(series[2].dims() == std::vector<std::size_t>{0, 1});
  CHECK(series[3].is_zero());
  for (std::size_t k = 0; k + 1 < series.size(); ++k) {
    CHECK(series[k].contains(series[k + 1]));
    CHECK(series[k].total_dim() > series[k + 1].total_dim());
  }
}

TEST_CASE("composition series") {
  Representation p2 = preset_object("sl2block", "P2");
  JordanHolderData jh = jordan_holder(p2);
  REQUIRE(jh.length() == 3);
  REQUIRE(jh.chain.size() == 4);
  CHECK(jh.chain.front().is_zero());
  CHECK(jh.chain.back().is_full());
  for (std::size_t t = 0; t + 1 < jh.chain.size(); ++t) {
    CHECK(jh.chain[t + 1].contains(jh.chain[t]));
    CHECK(jh.chain[t + 1].total_dim() == jh.chain[t].total_dim() + 1);
  }
  // Socle first, then the middle S_1, then the top S_2.
  CHECK(jh.factors == std::vector<std::size_t>{1, 0, 1});
  CHECK(gr(p2) == GClass{{1, 2}});
  CHECK(length(p2) == 3);

  Representation dp = preset_object("dualnumbers", "P1");
  CHECK(length(dp) == 2);
  CHECK(gr(dp) == GClass{{2}});
  CHECK(!is_semisimple(dp));

  Representation zero =
      Representation::zero(preset_algebra("a2"), FieldSpec::rationals());
  CHECK(length(zero) == 0);
  CHECK(jordan_holder(zero).chain.size() == 1);
  CHECK(is_semisimple(zero));
}

TEST_CASE("semisimple_of_class") {
  AlgebraPtr a2 = preset_algebra("a2");
  Representation ss = semisimple_of_class(a2, GClass{{2, 1}});
  CHECK(ss.dims() == std::vector<std::size_t>{2, 1});
  for (const Matrix& m : ss.arrow_maps()) CHECK(m.is_zero());
  CHECK(gr(ss) == GClass{{2, 1}});

  try {
    semisimple_of_class(a2, GClass{{1, -1}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::negative_class);
  }
  CHECK_THROWS_AS(semisimple_of_class(a2, GClass{{1}}), Error);
}

TEST_CASE("gr agrees with dimension vectors") {
  std::mt19937_64 rng(3175);
  FieldSpec f2 = FieldSpec::prime(2);
  for (const char* name : {"a2", "kronecker", "sl2block", "dualnumbers"}) {
    AlgebraPtr alg = preset_algebra(name);
    std::uniform_int_distribution<std::size_t> d(0, 3);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::size_t> dims;
      for (std::size_t i = 0; i < alg->vertex_count(); ++i) dims.push_back(d(rng));
      Representation v = random_rep(alg, f2, dims, rng);
      CHECK(gr(v) == dims_class(v));
      CHECK(length(v) == v.total_dim());  // all simples are one-dimensional
    }
  }
}

TEST_CASE("composition factors are basis independent") {
  std::mt19937_64 rng(90210);
  FieldSpec f3 = FieldSpec::prime(3);
  AlgebraPtr alg = preset_algebra("sl2block");
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<std::size_t> d(0, 2);
    std::vector<std::size_t> dims = {d(rng), d(rng)};
    Representation v = random_rep(alg, f3, dims, rng);

    // Conjugate every vertex space by a random invertible change of basis.
    std::vector<Matrix> g, ginv;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      g.push_back(random_invertible(f3, dims[i], rng));
      ginv.push_back(*inverse(g.back()));
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < alg->arrow_count(); ++a) {
      const Arrow& arrow = alg->arrows()[a];
      maps.push_back(
          mul(g[arrow.target], mul(v.arrow_map(a), ginv[arrow.source])));
    }
    Representation w = Representation::make(alg, f3, dims, std::move(maps));

    CHECK(gr(v) == gr(w));
    CHECK(length(v) == length(w));
    CHECK(radical(v).dims() == radical(w).dims());
    CHECK(socle(v).dims() == socle(w).dims());
  }
}

TEST_CASE("semisimplicity characterizations agree") {
  std::mt19937_64 rng(5150);
  FieldSpec f2 = FieldSpec::prime(2);
  for (const char* name : {"a2", "kronecker", "sl2block", "dualnumbers"}) {
    AlgebraPtr alg = preset_algebra(name);
    std::uniform_int_distribution<std::size_t> d(0, 2);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<std::size_t> dims;
      for (std::size_t i = 0; i < alg->vertex_count(); ++i) dims.push_back(d(rng));
      Representation v = random_rep(alg, f2, dims, rng);
      bool ss = is_semisimple(v);
      CHECK(ss == radical(v).is_zero());
      CHECK(ss == socle(v).is_full());
      if (ss) CHECK(v == semisimple_of_class(alg, gr(v), f2));
    }
  }
}
