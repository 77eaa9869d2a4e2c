#pragma once

#include <string>

#include "contact_atlas/chow.hpp"

namespace contact_atlas {

// Parses a sum of products over the generators xi, l, B0, pt, K (with
// K = -2*xi) and rational literals:
//
//   expr     := term ('+' term)*
//   term     := factor ('*'? factor)*
//   factor   := '-' factor | rational | generator
//   rational := integer ('/' integer)?
//
// The '*' may be omitted between a rational and a following generator
// ("2xi"). Whitespace is ignored. Throws std::invalid_argument with the
// offending 1-based column on malformed input.
BundleClass parse_chow_expression(const std::string& text, const RuledSurfaceParams& params);

}  // namespace contact_atlas
