#pragma once

#include <string_view>

#include "domination/manifold.hpp"

namespace domination {

/// Parses a manifold description:
///
///   manifold := "S3" | piece ( "#" piece )*
///   piece    := sfs | "Spherical(" INT ")" | "S2xS1" | "Hyperbolic" | "Sol" | "OtherAspherical"
///   sfs      := "SFS(" "g=" INT ";" "b=" INT ( ";" pairs )? ")"
///   pairs    := "(" INT "," INT ")" ( "," "(" INT "," INT ")" )*
///
/// Whitespace (including newlines) is ignored between tokens. The result is
/// the literal manifold; Seifert data is not normalized. Throws ParseError
/// with the 1-based line and column of the offending character.
Manifold parse_manifold(std::string_view text);

}  // namespace domination
