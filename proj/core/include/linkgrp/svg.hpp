#pragma once

#include <string>

#include "linkgrp/conjugacy.hpp"

namespace linkgrp {

// Documentation rendering of a square tiling: squares, edge labels and the
// base path. Display only.
std::string tiling_to_svg(const SquareTiling& t);
std::string strip_to_svg(const ConjugacyStrip& s);

}  // namespace linkgrp
