#ifndef SLANTLAB_PARSE_HPP
#define SLANTLAB_PARSE_HPP

#include <string>

#include "slantlab/inner_fn.hpp"

namespace slantlab {

/// Symbol shorthand: sums of terms c*z^n and c*conj(z)^n with complex
/// literals a+bi, e.g. "z^4", "conj(z)^2 - z", "(2+1i)*z^3 + 0.5".
/// A string starting with '{' is parsed as CircleFunction JSON; a string
/// naming a readable file is loaded and parsed as JSON.
CircleFunction parse_symbol(const std::string& spec, int band);

/// Inner-function shorthand: "z^N" (or "z"), inline JSON, or a JSON file.
FiniteBlaschke parse_inner(const std::string& spec);

}  // namespace slantlab

#endif  // SLANTLAB_PARSE_HPP
