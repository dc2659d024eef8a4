#pragma once

#include <string>

#include "linkgrp/presentation.hpp"

namespace linkgrp::testing {

inline std::string fixture(const std::string& name) {
    return std::string(LINKGRP_FIXTURE_DIR) + "/" + name;
}

inline SymPresentation trefoil() { return load_presentation_file(fixture("trefoil.pres")); }
inline SymPresentation fig8() { return load_presentation_file(fixture("fig8.pres")); }

inline Word W(const std::string& s) { return parse_word(s); }

}  // namespace linkgrp::testing
