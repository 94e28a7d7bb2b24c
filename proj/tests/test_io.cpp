#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "repstab/error.hpp"
#include "repstab/io.hpp"
#include "repstab/presets.hpp"
#include "repstab/structure.hpp"

using namespace repstab;

namespace {

// Scratch directory for the path-resolution tests.
std::filesystem::path scratch_dir() {
  static std::filesystem::path dir = [] {
    std::filesystem::path d =
        std::filesystem::temp_directory_path() / "repstab_io_scratch";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

ParseError capture(const std::string& text, bool representation = false) {
  try {
    if (representation)
      parse_representation(text);
    else
      parse_algebra(text);
  } catch (const ParseError& e) {
    return e;
  }
  REQUIRE(false);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("algebra round trips") {
  for (const PresetInfo& info : preset_list()) {
    AlgebraPtr alg = preset_algebra(info.name);
    std::string text = format_algebra(*alg);
    AlgebraPtr back = parse_algebra(text);
    CHECK(back->same_presentation(*alg));
    // Formatting is canonical: a second pass is byte-identical.
    CHECK(format_algebra(*back) == text);
  }

  CHECK(format_algebra(*preset_algebra("sl2block")) ==
        "vertex 1\nvertex 2\narrow a 1 2\narrow b 2 1\nrelation a.b\n");

  // Signs and coefficients: leading minus, fractions, mixed terms.  (The
  // cubic relation keeps the pair admissible.)
  AlgebraPtr alg = parse_algebra(
      "vertex v\n"
      "arrow x v v\n"
      "relation x.x.x\n"
      "relation - x.x + 3/2*x.x.x\n");
  REQUIRE(alg->relations().size() == 2);
  CHECK(alg->relations()[1].terms[0].coeff == -1);
  CHECK(alg->relations()[1].terms[1].coeff == make_rational(3, 2));
  CHECK(format_algebra(*alg) ==
        "vertex v\narrow x v v\nrelation x.x.x\nrelation - x.x + 3/2*x.x.x\n");
  CHECK(parse_algebra(format_algebra(*alg))->same_presentation(*alg));
  CHECK(alg->nilpotency() == 2);
  CHECK(alg->dimension() == 2);

  // Comments and blank lines are invisible.
  AlgebraPtr spaced = parse_algebra(
      "# a quiver\n\nvertex v   # the only vertex\n\narrow x v v\n"
      "relation x.x\n");
  CHECK(spaced->same_presentation(
      *parse_algebra("vertex v\narrow x v v\nrelation x.x\n")));
}

TEST_CASE("algebra parse errors carry positions") {
  ParseError bad_directive = capture("vertexx 1\n");
  CHECK(bad_directive.code() == ErrorCode::parse_error);
  CHECK(bad_directive.line() == 1);
  CHECK(bad_directive.column() == 1);

  ParseError bad_vertex = capture("vertex 1\narrow a 1 2\n");
  CHECK(bad_vertex.line() == 2);
  CHECK(bad_vertex.column() == 11);

  ParseError bad_arity = capture("vertex 1\narrow a 1\n");
  CHECK(bad_arity.line() == 2);

  ParseError empty_relation = capture("vertex 1\narrow x 1 1\nrelation\n");
  CHECK(empty_relation.line() == 3);

  ParseError double_sign = capture("vertex 1\narrow x 1 1\nrelation x.x + + x.x\n");
  CHECK(double_sign.line() == 3);
  CHECK(double_sign.column() == 16);

  ParseError unknown_arrow = capture("vertex 1\narrow x 1 1\nrelation x.y\n");
  CHECK(unknown_arrow.line() == 3);
  CHECK(unknown_arrow.column() == 10);

  ParseError trailing_sign = capture("vertex 1\narrow x 1 1\nrelation x.x +\n");
  CHECK(trailing_sign.line() == 3);

  // Semantic problems are domain errors, not parse errors.
  try {
    parse_algebra("vertex 1\nvertex 1\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_presentation);
  }
  try {
    parse_algebra("vertex 1\narrow x 1 1\nrelation x.x - x.x.x\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_presentation);
  }
}

TEST_CASE("representation round trips") {
  Representation p2 = preset_object("sl2block", "P2");
  std::string text = format_representation(p2, "preset:sl2block");
  CHECK(text ==
        "algebra preset:sl2block\n"
        "field Q\n"
        "dims 1 2\n"
        "map a\n"
        "0\n"
        "1\n"
        "map b\n"
        "1 0\n");
  Representation back = parse_representation(text);
  CHECK(back == p2);
  CHECK(format_representation(back, "preset:sl2block") == text);

  // Matrix entries keep exact rationals; fields survive the trip.
  Representation fp = preset_object("kronecker", "P1", FieldSpec::prime(3));
  Representation fp_back =
      parse_representation(format_representation(fp, "preset:kronecker"));
  CHECK(fp_back == fp);
  CHECK(fp_back.field() == FieldSpec::prime(3));

  Representation scaled = Representation::make(
      preset_algebra("a2"), FieldSpec::rationals(), {1, 1},
      {Matrix::from_rows(FieldSpec::rationals(), {{make_rational(-7, 3)}})});
  Representation scaled_back =
      parse_representation(format_representation(scaled, "preset:a2"));
  CHECK(scaled_back == scaled);

  // Maps may come in any order; zero-size matrices need no rows.
  Representation reordered = parse_representation(
      "algebra preset:kronecker\nfield Q\ndims 1 0\nmap b\nmap a\n");
  CHECK(reordered.dims() == std::vector<std::size_t>{1, 0});
}

TEST_CASE("representation parse errors") {
  ParseError missing_field = capture("algebra preset:a2\ndims 1 1\n", true);
  CHECK(missing_field.code() == ErrorCode::parse_error);
  CHECK(missing_field.line() == 3);

  ParseError early_map =
      capture("algebra preset:a2\ndims 1 1\nmap a\n0\n", true);
  CHECK(early_map.line() == 3);  // 'map' before 'field'

  ParseError early_dims = capture("dims 1 1\n", true);
  CHECK(early_dims.line() == 1);

  ParseError dup = capture(
      "algebra preset:a2\nfield Q\nfield Q\ndims 1 1\nmap a\n0\n", true);
  CHECK(dup.line() == 3);

  ParseError bad_field = capture("algebra preset:a2\nfield F4\n", true);
  CHECK(bad_field.line() == 2);
  CHECK(bad_field.column() == 7);

  ParseError negative_dim =
      capture("algebra preset:a2\nfield Q\ndims 1 -1\n", true);
  CHECK(negative_dim.line() == 3);
  CHECK(negative_dim.column() == 8);

  ParseError wide_row = capture(
      "algebra preset:kronecker\nfield Q\ndims 2 1\nmap a\n1 2 3\nmap b\n0 0\n",
      true);
  CHECK(wide_row.line() == 5);

  ParseError missing_row =
      capture("algebra preset:a2\nfield Q\ndims 1 1\nmap a\n", true);
  CHECK(missing_row.line() == 5);

  ParseError bad_entry = capture(
      "algebra preset:a2\nfield Q\ndims 1 1\nmap a\n1/0\n", true);
  CHECK(bad_entry.line() == 5);
  CHECK(bad_entry.column() == 1);

  ParseError unknown_map = capture(
      "algebra preset:a2\nfield Q\ndims 1 1\nmap z\n0\n", true);
  CHECK(unknown_map.line() == 4);
  CHECK(unknown_map.column() == 5);

  ParseError dup_map = capture(
      "algebra preset:a2\nfield Q\ndims 1 1\nmap a\n0\nmap a\n0\n", true);
  CHECK(dup_map.line() == 6);

  // Unknown preset and violated relations surface as domain errors.
  CHECK_THROWS_AS(
      parse_representation("algebra preset:nosuch\nfield Q\ndims 1\n"), Error);
  try {
    parse_representation(
        "algebra preset:dualnumbers\nfield Q\ndims 1\nmap x\n1\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::relation_violated);
  }
}

TEST_CASE("algebra references resolve relative to the file") {
  std::filesystem::path dir = scratch_dir();
  write_file(dir / "loop.alg",
             "vertex v\narrow x v v\nrelation x.x\n");
  write_file(dir / "rep.txt",
             "algebra loop.alg\nfield F2\ndims 2\nmap x\n0 0\n1 0\n");

  Representation rep = load_representation((dir / "rep.txt").string());
  CHECK(rep.dims() == std::vector<std::size_t>{2});
  CHECK(rep.field() == FieldSpec::prime(2));
  CHECK(rank(rep.arrow_map(0)) == 1);

  // Absolute references work from anywhere.
  write_file(dir / "rep_abs.txt",
             "algebra " + (dir / "loop.alg").string() +
                 "\nfield Q\ndims 1\nmap x\n0\n");
  CHECK(load_representation((dir / "rep_abs.txt").string()).total_dim() == 1);

  CHECK_THROWS_AS(load_algebra((dir / "missing.alg").string()), Error);
  try {
    load_representation((dir / "missing.txt").string());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::bad_input);
  }
}

TEST_CASE("stability file round trips") {
  StabilityFileData data = parse_stability(
      "# slope data\nbeta 1 -3/2\ngamma canonical\nalpha 2 1\n");
  CHECK(data.beta == std::vector<Rational>{Rational(1), make_rational(-3, 2)});
  CHECK(!data.gamma.has_value());
  REQUIRE(data.alpha.has_value());
  CHECK(*data.alpha == std::vector<long long>{2, 1});

  std::string text = format_stability(data);
  CHECK(text == "beta 1 -3/2\ngamma canonical\nalpha 2 1\n");
  StabilityFileData back = parse_stability(text);
  CHECK(back.beta == data.beta);
  CHECK(back.gamma == data.gamma);
  CHECK(back.alpha == data.alpha);

  StabilityFileData explicit_gamma =
      parse_stability("beta 0 1\ngamma 1 1/2\n");
  REQUIRE(explicit_gamma.gamma.has_value());
  CHECK(*explicit_gamma.gamma ==
        std::vector<Rational>{Rational(1), make_rational(1, 2)});
  CHECK(!explicit_gamma.alpha.has_value());
  CHECK(format_stability(explicit_gamma) == "beta 0 1\ngamma 1 1/2\n");
}

TEST_CASE("stability parse errors") {
  auto capture_stab = [](const std::string& text) {
    try {
      parse_stability(text);
    } catch (const ParseError& e) {
      return e;
    }
    REQUIRE(false);
    throw std::logic_error("unreachable");
  };

  CHECK(capture_stab("gamma canonical\n").line() == 1);   // missing beta
  CHECK(capture_stab("beta 1\n").line() == 1);            // missing gamma
  CHECK(capture_stab("beta 1\nbeta 2\ngamma canonical\n").line() == 2);
  CHECK(capture_stab("beta 1\ngamma canonical\ngamma 1\n").line() == 3);
  CHECK(capture_stab("beta 1\ngamma\n").line() == 2);
  CHECK(capture_stab("beta\ngamma canonical\n").line() == 1);
  CHECK(capture_stab("beta 1\ngamma canonical\nalpha 1/2\n").line() == 3);
  CHECK(capture_stab("beta 1\ngamma canonical\ndelta 1\n").column() == 1);

  ParseError bad_entry = capture_stab("beta x\ngamma canonical\n");
  CHECK(bad_entry.line() == 1);
  CHECK(bad_entry.column() == 6);
}
