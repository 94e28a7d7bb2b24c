// Command line surface over the repstab library.  Every subcommand prints
// one self-describing JSON record per result on stdout (insertion-ordered
// keys, one line per record, exact rationals as "a/b" strings); --table
// switches to a key/value listing for reading by humans.  Exit codes: 0 ok,
// 1 domain or validation error, 2 parse error, 3 search budget exceeded.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "repstab/census.hpp"
#include "repstab/error.hpp"
#include "repstab/io.hpp"
#include "repstab/presets.hpp"

using namespace repstab;
using Json = nlohmann::ordered_json;

namespace {

// ---- shared flag bundles ----

struct SourceArgs {
  std::string preset;
  std::string algebra_path;
};

struct ObjectArgs {
  SourceArgs source;
  std::string object;
  std::string rep_path;
  std::string field = "Q";
};

struct DatumArgs {
  std::string beta;
  std::string gamma;
  std::string alpha;
  std::string stability_path;
};

struct OutputArgs {
  bool table = false;
};

std::uint64_t g_budget = 0;  // 0: library defaults

SearchLimits limits() {
  SearchLimits l;
  if (g_budget != 0) {
    l.max_tuples = g_budget;
    l.max_hom_combos = g_budget;
  }
  return l;
}

void add_source_flags(CLI::App* cmd, SourceArgs& args) {
  CLI::Option* preset =
      cmd->add_option("--preset", args.preset, "built-in algebra name");
  cmd->add_option("--algebra", args.algebra_path, "algebra file")
      ->excludes(preset);
}

void add_object_flags(CLI::App* cmd, ObjectArgs& args) {
  add_source_flags(cmd, args.source);
  cmd->add_option("--object", args.object,
                  "named object of the preset (S<v>, P<v>, ...)");
  cmd->add_option("--rep", args.rep_path, "representation file");
  cmd->add_option("--field", args.field,
                  "coefficient field for preset objects (Q or F<p>)");
}

void add_datum_flags(CLI::App* cmd, DatumArgs& args) {
  cmd->add_option("--beta", args.beta, "slope parameter, comma separated");
  cmd->add_option("--gamma", args.gamma,
                  "length functional, comma separated or 'canonical'");
  cmd->add_option("--alpha", args.alpha, "ambient class, comma separated");
  cmd->add_option("--stability", args.stability_path,
                  "stability file providing beta/gamma/alpha");
}

void add_output_flags(CLI::App* cmd, OutputArgs& args) {
  CLI::Option* table =
      cmd->add_flag("--table", args.table, "human-readable key/value output");
  cmd->add_flag("--json", "machine-readable records (the default)")
      ->excludes(table);
  cmd->add_option("--budget", g_budget,
                  "cap on enumeration sizes (tuples and hom combinations)");
}

// ---- argument resolution ----

std::vector<Rational> parse_vector(const std::string& text,
                                   const std::string& what) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_rational(piece));
    } catch (const Error&) {
      throw Error(ErrorCode::bad_input,
                  "--" + what + ": expected a rational, got '" + piece + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

AlgebraPtr resolve_algebra(const SourceArgs& args) {
  if (!args.preset.empty()) return preset_algebra(args.preset);
  if (!args.algebra_path.empty()) return load_algebra(args.algebra_path);
  throw Error(ErrorCode::bad_input, "need --preset or --algebra");
}

Representation resolve_object(const ObjectArgs& args) {
  if (!args.rep_path.empty()) return load_representation(args.rep_path);
  if (!args.source.preset.empty() && !args.object.empty())
    return preset_object(args.source.preset, args.object,
                         FieldSpec::parse(args.field));
  throw Error(ErrorCode::bad_input,
              "need --rep, or --preset together with --object");
}

// beta/gamma/alpha resolved from the stability file first, individual flags
// overriding; alpha falls back to the class of the object.
struct Datum {
  KClass beta;
  std::optional<KClass> gamma;  // nullopt: canonical
  GClass alpha;
};

Datum resolve_datum(const DatumArgs& args, const GClass& default_alpha) {
  std::optional<std::vector<Rational>> beta;
  std::optional<std::vector<Rational>> gamma;
  bool canonical = false;
  std::optional<GClass> alpha;

  if (!args.stability_path.empty()) {
    StabilityFileData file = load_stability(args.stability_path);
    beta = file.beta;
    if (file.gamma)
      gamma = *file.gamma;
    else
      canonical = true;
    if (file.alpha) alpha = GClass(*file.alpha);
  }
  if (!args.beta.empty()) beta = parse_vector(args.beta, "beta");
  if (!args.gamma.empty()) {
    if (args.gamma == "canonical") {
      canonical = true;
      gamma.reset();
    } else {
      gamma = parse_vector(args.gamma, "gamma");
      canonical = false;
    }
  }
  if (!args.alpha.empty()) {
    GClass a;
    for (const Rational& r : parse_vector(args.alpha, "alpha"))
      a.coeffs.push_back(to_longlong(r));
    alpha = std::move(a);
  }

  if (!beta)
    throw Error(ErrorCode::bad_input, "need --beta or --stability");
  if (!gamma && !canonical)
    throw Error(ErrorCode::bad_input,
                "need --gamma (a vector or 'canonical') or --stability");

  Datum d;
  d.beta = KClass(std::move(*beta));
  if (gamma) d.gamma = KClass(std::move(*gamma));
  d.alpha = alpha ? std::move(*alpha) : default_alpha;
  return d;
}

StabilityData make_datum(const AlgebraPtr& algebra, const Datum& d) {
  KClass gamma =
      d.gamma ? *d.gamma : canonical_gamma(algebra, d.alpha);
  return StabilityData::make(algebra, d.beta, std::move(gamma), d.alpha);
}

// ---- record building ----

Json jrational(const Rational& r) { return to_string(r); }

Json jrationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const Rational& r : v) a.push_back(jrational(r));
  return a;
}

Json jclass(const GClass& g) {
  Json a = Json::array();
  for (long long c : g.coeffs) a.push_back(c);
  return a;
}

Json jdims(const std::vector<std::size_t>& dims) {
  Json a = Json::array();
  for (std::size_t d : dims) a.push_back(d);
  return a;
}

Json jmatrix(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(jrational(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json jmaps(const Representation& v) {
  Json maps = Json::object();
  for (std::size_t a = 0; a < v.algebra()->arrow_count(); ++a)
    maps[v.algebra()->arrows()[a].name] = jmatrix(v.arrow_map(a));
  return maps;
}

Json jdatum(const Datum& d) {
  Json j = Json::object();
  j["beta"] = jrationals(d.beta.coeffs);
  if (d.gamma)
    j["gamma"] = jrationals(d.gamma->coeffs);
  else
    j["gamma"] = "canonical";
  j["alpha"] = jclass(d.alpha);
  return j;
}

Json jhn_type(const std::vector<HNStep>& type) {
  Json steps = Json::array();
  for (const HNStep& s : type) {
    Json step = Json::object();
    step["class"] = jclass(s.cls);
    step["slope"] = jrational(s.slope);
    steps.push_back(std::move(step));
  }
  return steps;
}

void emit(const std::vector<Json>& records, const OutputArgs& out) {
  if (!out.table) {
    for (const Json& r : records) std::cout << r.dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i > 0) std::cout << "\n";
    for (const auto& [key, value] : records[i].items()) {
      std::cout << key << ": ";
      if (value.is_string())
        std::cout << value.get<std::string>();
      else
        std::cout << value.dump();
      std::cout << "\n";
    }
  }
}

// ---- subcommands ----

void cmd_presets(const OutputArgs& out) {
  std::vector<Json> records;
  for (const PresetInfo& info : preset_list()) {
    Json r = Json::object();
    r["command"] = "presets";
    r["name"] = info.name;
    r["description"] = info.description;
    Json objs = Json::array();
    for (const std::string& name : preset_object_names(info.name))
      objs.push_back(name);
    r["objects"] = std::move(objs);
    records.push_back(std::move(r));
  }
  emit(records, out);
}

void cmd_validate(const ObjectArgs& args, const OutputArgs& out) {
  Json r = Json::object();
  r["command"] = "validate";

  AlgebraPtr algebra;
  std::optional<Representation> rep;
  if (!args.rep_path.empty()) {
    rep = load_representation(args.rep_path);
    algebra = rep->algebra();
    // An explicitly named algebra must agree with the one the rep file
    // references.
    if (!args.source.preset.empty() || !args.source.algebra_path.empty()) {
      if (!resolve_algebra(args.source)->same_presentation(*algebra))
        throw Error(ErrorCode::algebra_mismatch,
                    "representation file references a different algebra");
    }
  } else {
    algebra = resolve_algebra(args.source);
    if (!args.object.empty())
      rep = preset_object(args.source.preset, args.object,
                          FieldSpec::parse(args.field));
  }

  r["vertices"] = static_cast<std::uint64_t>(algebra->vertex_count());
  r["arrows"] = static_cast<std::uint64_t>(algebra->arrow_count());
  r["relations"] = static_cast<std::uint64_t>(algebra->relations().size());
  FieldSpec field = rep ? rep->field() : FieldSpec::rationals();
  r["field"] = field.name();
  r["nilpotency"] = static_cast<std::uint64_t>(algebra->nilpotency(field));
  r["algebra_dimension"] = static_cast<std::uint64_t>(algebra->dimension(field));
  if (rep) {
    validate(*rep);
    r["dims"] = jdims(rep->dims());
    r["total_dim"] = static_cast<std::uint64_t>(rep->total_dim());
  }
  r["ok"] = true;
  emit({r}, out);
}

void cmd_pairing(const SourceArgs& source, const std::string& field_name,
                 const OutputArgs& out) {
  AlgebraPtr algebra = resolve_algebra(source);
  FieldSpec field = FieldSpec::parse(field_name);
  PairingMatrix pm = dual_basis_matrix(algebra, field);
  Json r = Json::object();
  r["command"] = "pairing";
  r["field"] = field.name();
  Json tau = Json::array();
  for (std::size_t i = 0; i < pm.size(); ++i) tau.push_back(jrational(pm.tau(i)));
  r["tau"] = std::move(tau);
  r["entries"] = jmatrix(pm.entries());
  emit({r}, out);
}

void cmd_jh(const ObjectArgs& args, const OutputArgs& out) {
  Representation v = resolve_object(args);
  JordanHolderData jh = jordan_holder(v);
  Json r = Json::object();
  r["command"] = "jh";
  r["field"] = v.field().name();
  r["dims"] = jdims(v.dims());
  r["length"] = static_cast<std::uint64_t>(jh.length());
  Json factors = Json::array();
  for (std::size_t f : jh.factors) factors.push_back(v.algebra()->vertices()[f]);
  r["factors"] = std::move(factors);
  r["gr"] = jclass(gr(v));
  Json series = Json::array();
  for (const Subrepresentation& s : radical_series(v))
    series.push_back(jdims(s.dims()));
  r["radical_series"] = std::move(series);
  r["socle_dims"] = jdims(socle(v).dims());
  r["semisimple"] = is_semisimple(v);
  emit({r}, out);
}

void cmd_slope(const ObjectArgs& args, const DatumArgs& dargs,
               const OutputArgs& out) {
  Representation v = resolve_object(args);
  Datum d = resolve_datum(dargs, g_class(v));
  StabilityData sd = make_datum(v.algebra(), d);
  Json r = Json::object();
  r["command"] = "slope";
  r.update(jdatum(d));
  r["class"] = jclass(g_class(v));
  r["slope"] = jrational(slope(sd, v));
  emit({r}, out);
}

void cmd_ss(const ObjectArgs& args, const DatumArgs& dargs,
            const OutputArgs& out) {
  Representation v = resolve_object(args);
  Datum d = resolve_datum(dargs, g_class(v));
  StabilityData sd = make_datum(v.algebra(), d);
  auto [semistable, witness] = is_semistable(sd, v, limits());
  Json r = Json::object();
  r["command"] = "ss";
  r.update(jdatum(d));
  r["semistable"] = semistable;
  if (witness) {
    r["witness_dims"] = jdims(witness->dims());
    r["witness_slope"] = jrational(slope(sd, witness->to_representation()));
  }
  emit({r}, out);
}

void cmd_hn(const ObjectArgs& args, const DatumArgs& dargs,
            const OutputArgs& out) {
  Representation v = resolve_object(args);
  Datum d = resolve_datum(dargs, g_class(v));
  StabilityData sd = make_datum(v.algebra(), d);
  HNFiltration hn = hn_filtration(sd, v, limits());
  Json r = Json::object();
  r["command"] = "hn";
  r.update(jdatum(d));
  r["steps"] = jhn_type(hn.type);
  Json chain = Json::array();
  for (const Subrepresentation& s : hn.chain) chain.push_back(jdims(s.dims()));
  r["chain_dims"] = std::move(chain);
  emit({r}, out);
}

void cmd_mu(const ObjectArgs& args, const DatumArgs& dargs,
            long long weight_bound, const OutputArgs& out) {
  Representation v = resolve_object(args);
  Datum d = resolve_datum(dargs, g_class(v));
  StabilityData sd = make_datum(v.algebra(), d);
  auto [best, mu] = filtration_enumerate_max(sd, v, weight_bound, limits());
  Json r = Json::object();
  r["command"] = "mu";
  r.update(jdatum(d));
  r["weight_bound"] = weight_bound;
  Json weights = Json::array();
  for (long long w : best.weights()) weights.push_back(w);
  r["weights"] = std::move(weights);
  Json steps = Json::array();
  for (const Subrepresentation& s : best.steps()) steps.push_back(jdims(s.dims()));
  r["step_dims"] = std::move(steps);
  r["numerator"] = jrational(mu.numerator);
  r["norm_sq"] = jrational(mu.norm_sq);
  r["signed_square"] = jrational(mu.signed_square());
  r["sign"] = mu.sign();
  emit({r}, out);
}

GClass parse_alpha_flag(const std::string& text) {
  if (text.empty())
    throw Error(ErrorCode::bad_input, "need --alpha");
  GClass a;
  for (const Rational& r : parse_vector(text, "alpha"))
    a.coeffs.push_back(to_longlong(r));
  return a;
}

// Census-style commands need alpha up front: from the flag, or from the
// stability file.
GClass resolve_alpha_required(const DatumArgs& dargs) {
  if (!dargs.alpha.empty()) return parse_alpha_flag(dargs.alpha);
  if (!dargs.stability_path.empty()) {
    StabilityFileData file = load_stability(dargs.stability_path);
    if (file.alpha) return GClass(*file.alpha);
  }
  throw Error(ErrorCode::bad_input, "need --alpha");
}

void cmd_census(const SourceArgs& source, const std::string& field_name,
                const DatumArgs& dargs, bool orbits, const OutputArgs& out) {
  AlgebraPtr algebra = resolve_algebra(source);
  GClass alpha = resolve_alpha_required(dargs);
  FieldSpec field = FieldSpec::parse(field_name);
  CensusOptions options;
  options.orbit_sizes = orbits;
  options.limits = limits();
  IsoClassCatalog catalog = enumerate_reps(algebra, alpha, field, options);

  // Optional stability data refines the summary with the semistable count.
  std::optional<StrataReport> report;
  std::vector<bool> semistable(catalog.representatives.size(), false);
  if (!dargs.beta.empty() || !dargs.stability_path.empty()) {
    Datum d = resolve_datum(dargs, alpha);
    StabilityData sd = make_datum(algebra, d);
    report = theta_strata(catalog, sd, limits());
    for (const Stratum& s : report->strata)
      if (s.semistable)
        for (std::size_t i : s.members) semistable[i] = true;
  }

  std::vector<Json> records;
  Json summary = Json::object();
  summary["command"] = "census";
  summary["alpha"] = jclass(alpha);
  summary["field"] = field.name();
  summary["tuples"] = catalog.valid_tuple_count;
  summary["classes"] =
      static_cast<std::uint64_t>(catalog.representatives.size());
  if (catalog.orbit_sizes) {
    Json sizes = Json::array();
    for (std::uint64_t s : *catalog.orbit_sizes) sizes.push_back(s);
    summary["orbit_sizes"] = std::move(sizes);
  }
  if (report) {
    std::uint64_t count = 0;
    for (bool b : semistable) count += b ? 1 : 0;
    summary["semistable_classes"] = count;
  }
  records.push_back(std::move(summary));

  for (std::size_t i = 0; i < catalog.representatives.size(); ++i) {
    const Representation& rep = catalog.representatives[i];
    Json r = Json::object();
    r["command"] = "census.class";
    r["index"] = static_cast<std::uint64_t>(i);
    r["dims"] = jdims(rep.dims());
    r["maps"] = jmaps(rep);
    if (catalog.orbit_sizes) r["orbit_size"] = (*catalog.orbit_sizes)[i];
    if (report) r["semistable"] = static_cast<bool>(semistable[i]);
    records.push_back(std::move(r));
  }
  emit(records, out);
}

void cmd_strata(const SourceArgs& source, const std::string& field_name,
                const DatumArgs& dargs, const OutputArgs& out) {
  AlgebraPtr algebra = resolve_algebra(source);
  GClass alpha = resolve_alpha_required(dargs);
  FieldSpec field = FieldSpec::parse(field_name);
  CensusOptions options;
  options.limits = limits();
  IsoClassCatalog catalog = enumerate_reps(algebra, alpha, field, options);
  Datum d = resolve_datum(dargs, alpha);
  StabilityData sd = make_datum(algebra, d);
  StrataReport report = theta_strata(catalog, sd, limits());

  std::vector<Json> records;
  Json summary = Json::object();
  summary["command"] = "strata";
  summary["alpha"] = jclass(alpha);
  summary["field"] = field.name();
  summary.update(jdatum(d));
  summary["classes"] = static_cast<std::uint64_t>(catalog.representatives.size());
  summary["strata"] = static_cast<std::uint64_t>(report.strata.size());
  summary["closed_point"] = static_cast<std::uint64_t>(report.closed_point);
  records.push_back(std::move(summary));

  for (std::size_t i = 0; i < report.strata.size(); ++i) {
    const Stratum& s = report.strata[i];
    Json r = Json::object();
    r["command"] = "strata.stratum";
    r["index"] = static_cast<std::uint64_t>(i);
    r["semistable"] = s.semistable;
    r["hn_type"] = jhn_type(s.hn_type);
    Json members = Json::array();
    for (std::size_t m : s.members) members.push_back(m);
    r["members"] = std::move(members);
    records.push_back(std::move(r));
  }
  emit(records, out);
}

void cmd_cover(const SourceArgs& source, const std::string& alpha_text,
               const std::string& field_name, const OutputArgs& out) {
  AlgebraPtr algebra = resolve_algebra(source);
  GClass alpha = parse_alpha_flag(alpha_text);
  FieldSpec field = FieldSpec::parse(field_name);
  CensusOptions options;
  options.limits = limits();
  IsoClassCatalog catalog = enumerate_reps(algebra, alpha, field, options);
  bool ok = cover_check(catalog, limits());
  Json r = Json::object();
  r["command"] = "cover";
  r["alpha"] = jclass(alpha);
  r["field"] = field.name();
  r["classes"] = static_cast<std::uint64_t>(catalog.representatives.size());
  r["cover_multiplicities"] = jclass(minimal_cover_vector(alpha));
  r["ok"] = ok;
  emit({r}, out);
}

// Worker cap: searches run deterministically regardless, so any validated
// value is accepted; garbage is rejected up front.
void check_workers_env() {
  const char* raw = std::getenv("REPSTAB_WORKERS");
  if (!raw) return;
  std::string text(raw);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos ||
      text == "0" || text.size() > 6)
    throw Error(ErrorCode::bad_input,
                "REPSTAB_WORKERS must be a small positive integer, got '" +
                    text + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "repstab: exact invariants, stability and censuses of quiver "
      "representations"};
  app.require_subcommand(1);

  ObjectArgs validate_args, jh_args, slope_args, ss_args, hn_args, mu_args;
  SourceArgs pairing_source, census_source, strata_source, cover_source;
  std::string pairing_field = "Q", census_field = "Q", strata_field = "Q",
              cover_field = "Q";
  DatumArgs slope_datum, ss_datum, hn_datum, mu_datum, census_datum,
      strata_datum;
  std::string cover_alpha;
  long long weight_bound = 2;
  bool census_orbits = false;
  OutputArgs out;

  CLI::App* presets = app.add_subcommand("presets", "list built-in algebras");
  add_output_flags(presets, out);

  CLI::App* validate = app.add_subcommand(
      "validate", "check an algebra presentation or a representation file");
  add_object_flags(validate, validate_args);
  add_output_flags(validate, out);

  CLI::App* pairing = app.add_subcommand(
      "pairing", "projective/simple pairing matrix of an algebra");
  add_source_flags(pairing, pairing_source);
  pairing->add_option("--field", pairing_field, "coefficient field");
  add_output_flags(pairing, out);

  CLI::App* jh = app.add_subcommand(
      "jh", "composition series, radical series and socle of an object");
  add_object_flags(jh, jh_args);
  add_output_flags(jh, out);

  CLI::App* slope_cmd =
      app.add_subcommand("slope", "slope of an object under a stability datum");
  add_object_flags(slope_cmd, slope_args);
  add_datum_flags(slope_cmd, slope_datum);
  add_output_flags(slope_cmd, out);

  CLI::App* ss = app.add_subcommand(
      "ss", "semistability test with a destabilizing witness");
  add_object_flags(ss, ss_args);
  add_datum_flags(ss, ss_datum);
  add_output_flags(ss, out);

  CLI::App* hn =
      app.add_subcommand("hn", "Harder-Narasimhan filtration of an object");
  add_object_flags(hn, hn_args);
  add_datum_flags(hn, hn_datum);
  add_output_flags(hn, out);

  CLI::App* mu = app.add_subcommand(
      "mu", "maximize the numerical invariant over weighted filtrations");
  add_object_flags(mu, mu_args);
  add_datum_flags(mu, mu_datum);
  mu->add_option("--weight-bound", weight_bound, "weight range [-b, b]");
  add_output_flags(mu, out);

  CLI::App* census = app.add_subcommand(
      "census", "isomorphism classes of a fixed class over a prime field");
  add_source_flags(census, census_source);
  census->add_option("--field", census_field, "prime field F<p>");
  add_datum_flags(census, census_datum);
  census->add_flag("--orbits", census_orbits, "count orbit sizes");
  add_output_flags(census, out);

  CLI::App* strata = app.add_subcommand(
      "strata", "Harder-Narasimhan strata of a census");
  add_source_flags(strata, strata_source);
  strata->add_option("--field", strata_field, "prime field F<p>");
  add_datum_flags(strata, strata_datum);
  add_output_flags(strata, out);

  CLI::App* cover = app.add_subcommand(
      "cover", "verify every census member is a projective quotient");
  add_source_flags(cover, cover_source);
  cover->add_option("--alpha", cover_alpha, "class, comma separated");
  cover->add_option("--field", cover_field, "prime field F<p>");
  add_output_flags(cover, out);

  try {
    app.parse(argc, argv);
    check_workers_env();

    if (*presets) cmd_presets(out);
    if (*validate) cmd_validate(validate_args, out);
    if (*pairing) cmd_pairing(pairing_source, pairing_field, out);
    if (*jh) cmd_jh(jh_args, out);
    if (*slope_cmd) cmd_slope(slope_args, slope_datum, out);
    if (*ss) cmd_ss(ss_args, ss_datum, out);
    if (*hn) cmd_hn(hn_args, hn_datum, out);
    if (*mu) cmd_mu(mu_args, mu_datum, weight_bound, out);
    if (*census)
      cmd_census(census_source, census_field, census_datum, census_orbits, out);
    if (*strata) cmd_strata(strata_source, strata_field, strata_datum, out);
    if (*cover) cmd_cover(cover_source, cover_alpha, cover_field, out);
    return 0;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << " [" << error_code_name(e.code())
              << ", required budget " << e.required() << ", allowed "
              << e.allowed() << "]\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " [" << error_code_name(e.code())
              << " at line " << e.line() << ", column " << e.column() << "]\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " [" << error_code_name(e.code())
              << "]\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
