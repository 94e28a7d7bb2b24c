#pragma once

#include <string>
#include <vector>

#include "repstab/representation.hpp"

namespace repstab {

struct PresetInfo {
  std::string name;
  std::string description;
};

// Built-in presentations: a2 (1 -> 2), kronecker (1 => 2), dualnumbers (one
// loop x with x.x = 0), sl2block (a: 1 -> 2, b: 2 -> 1 with a.b = 0).
std::vector<PresetInfo> preset_list();

AlgebraPtr preset_algebra(const std::string& name);

// Named objects of a preset: S<v> and P<v> for every vertex v, plus the
// sl2block module names L0, L-2, M0, M0dual, P2.
std::vector<std::string> preset_object_names(const std::string& preset);

Representation preset_object(const std::string& preset, const std::string& object,
                             const FieldSpec& field = FieldSpec::rationals());

}  // namespace repstab
