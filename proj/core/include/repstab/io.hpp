#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repstab/representation.hpp"

namespace repstab {

// Flat text formats.  Lines hold one directive each ('#' starts a comment):
//
//   algebra file:    vertex NAME / arrow NAME SRC TGT / relation TERMS
//   rep file:        algebra REF / field Q|F<p> / dims D... / map ARROW + rows
//   stability file:  beta V... / gamma canonical|V... / alpha V...
//
// Relation terms are rational combinations of dot-joined arrow words, read
// left to right (a.b traverses a, then b).  A rep file's algebra REF is
// either "preset:NAME" or a path, resolved relative to the rep file.
// Parsers throw ParseError with 1-based line/column; semantic rejections
// (bad presentations, violated relations) surface as domain errors instead.

AlgebraPtr parse_algebra(const std::string& text);
AlgebraPtr load_algebra(const std::string& path);
std::string format_algebra(const Algebra& algebra);

Representation parse_representation(const std::string& text,
                                    const std::string& base_dir = ".");
Representation load_representation(const std::string& path);
// algebra_ref is written verbatim as the "algebra" line.
std::string format_representation(const Representation& rep,
                                  const std::string& algebra_ref);

struct StabilityFileData {
  std::vector<Rational> beta;
  std::optional<std::vector<Rational>> gamma;  // nullopt: the "canonical" token
  std::optional<std::vector<long long>> alpha;
};

StabilityFileData parse_stability(const std::string& text);
StabilityFileData load_stability(const std::string& path);
std::string format_stability(const StabilityFileData& data);

}  // namespace repstab
