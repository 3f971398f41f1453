#pragma once

#include <optional>
#include <string>

#include "bicoh/relation.hpp"
#include "bicoh/term.hpp"

namespace bicoh {

struct Verdict {
  enum class Kind : unsigned char { Equal, NotEqual, Unknown };
  Kind kind;
  System sys;
  std::optional<OccPair> witness;  // NotEqual only
  std::string reason;              // theorem used, or why coherence is not available
};

std::string verdict_name(Verdict::Kind k);
// `{"verdict":..., "system":..., "witness":[j,k]?, "reason":...}`
std::string verdict_json(const Verdict& v);

// Least pair in the symmetric difference of the two images, if any.
std::optional<OccPair> image_difference(const Relation& a, const Relation& b);

// Equality of f and g in `sys` where a coherence result applies. NotEqual
// whenever the G-images differ; Unknown only in Ltopbot and Bicart.
Verdict decide(const Term& f, const Term& g, System sys);

}  // namespace bicoh
