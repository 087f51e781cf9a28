#pragma once

#include "mosaic/laurent.hpp"
#include "mosaic/trace.hpp"

namespace mosaic {

inline constexpr int kBracketCrossingLimit = 16;

/// The loop value -A^2 - A^-2.
LaurentPoly loop_value();

/// Kauffman bracket by state sum over all 2^c smoothings, normalized so a
/// single crossing-free loop has bracket 1. Parallel over states for larger
/// diagrams. Throws std::invalid_argument above kBracketCrossingLimit crossings
/// or for an empty diagram.
LaurentPoly bracket(const PDCode& pd);
/// Single-threaded state sum; reference for bracket().
LaurentPoly bracket_serial(const PDCode& pd);
/// Skein recursion <X> = A<smooth_A> + A^-1<smooth_B>, independent of the
/// state sum.
LaurentPoly bracket_skein(const PDCode& pd);

/// (-A^3)^(-writhe) times the bracket; an oriented link invariant.
LaurentPoly normalized_bracket(const PDCode& pd);

/// Jones polynomial in t from a normalized bracket via A = t^(-1/4).
/// Throws std::invalid_argument if some exponent is not divisible by 4.
LaurentPoly jones_from_normalized(const LaurentPoly& f);
/// Inverse of jones_from_normalized.
LaurentPoly normalized_from_jones(const LaurentPoly& v);

}  // namespace mosaic
