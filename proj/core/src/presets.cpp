#include "repstab/presets.hpp"

#include <mutex>

#include "repstab/error.hpp"
#include "repstab/structure.hpp"

namespace repstab {

namespace {

AlgebraPtr build_a2() {
  return Algebra::make({"1", "2"}, {{"a", 0, 1}}, {});
}

AlgebraPtr build_kronecker() {
  return Algebra::make({"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}}, {});
}

AlgebraPtr build_dualnumbers() {
  Relation xx;
  xx.terms = {{Rational(1), {0, 0}}};
  return Algebra::make({"1"}, {{"x", 0, 0}}, {xx});
}

AlgebraPtr build_sl2block() {
  Relation ab;
  ab.terms = {{Rational(1), {0, 1}}};  // traverse a, then b: the loop at 1
  return Algebra::make({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}}, {ab});
}

// Presentations are immutable; build each once.
const AlgebraPtr& cached(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, AlgebraPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;

  AlgebraPtr built;
  if (name == "a2") built = build_a2();
  else if (name == "kronecker") built = build_kronecker();
  else if (name == "dualnumbers") built = build_dualnumbers();
  else if (name == "sl2block") built = build_sl2block();
  else
    throw Error(ErrorCode::bad_input,
                "unknown preset '" + name +
                    "' (available: a2, kronecker, dualnumbers, sl2block)");
  return cache.emplace(name, std::move(built)).first->second;
}

// The self-dual string module: both arrows rank one is impossible under
// a.b = 0, so the dual of M0 = P_1 is its own presentation with the arrow
// roles swapped.
Representation build_m0dual(const FieldSpec& field) {
  AlgebraPtr alg = cached("sl2block");
  Matrix va(field, 1, 1);
  Matrix vb(field, 1, 1);
  vb.set(0, 0, Rational(1));
  return Representation::make(alg, field, {1, 1}, {va, vb});
}

}  // namespace

std::vector<PresetInfo> preset_list() {
  return {
      {"a2", "path algebra of 1 -> 2 (arrow a)"},
      {"kronecker", "two parallel arrows 1 -> 2 (a, b), no relations"},
      {"dualnumbers", "one vertex, loop x, relation x.x"},
      {"sl2block",
       "vertices 1, 2 with a: 1 -> 2, b: 2 -> 1 and relation a.b; objects "
       "L0, L-2, M0, M0dual, P2"},
  };
}

AlgebraPtr preset_algebra(const std::string& name) { return cached(name); }

std::vector<std::string> preset_object_names(const std::string& preset) {
  AlgebraPtr alg = cached(preset);
  std::vector<std::string> names;
  for (const std::string& v : alg->vertices()) names.push_back("S" + v);
  for (const std::string& v : alg->vertices()) names.push_back("P" + v);
  if (preset == "sl2block")
    for (const char* extra : {"L0", "L-2", "M0", "M0dual"})
      names.push_back(extra);
  return names;
}

Representation preset_object(const std::string& preset, const std::string& object,
                             const FieldSpec& field) {
  AlgebraPtr alg = cached(preset);

  if (preset == "sl2block") {
    if (object == "L0") return simple_at(alg, 0, field);
    if (object == "L-2") return simple_at(alg, 1, field);
    if (object == "M0") return projective(alg, 0, field);
    if (object == "M0dual") return build_m0dual(field);
    // P2 falls through to the generic projective names.
  }
  if (object.size() > 1 && (object[0] == 'S' || object[0] == 'P')) {
    if (auto v = alg->vertex_index(object.substr(1))) {
      if (object[0] == 'S') return simple_at(alg, *v, field);
      return projective(alg, *v, field);
    }
  }
  throw Error(ErrorCode::bad_input,
              "unknown object '" + object + "' in preset '" + preset + "'");
}

}  // namespace repstab
