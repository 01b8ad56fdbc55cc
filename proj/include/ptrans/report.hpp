#pragma once

#include <string>

#include "ptrans/scenario.hpp"

namespace ptrans {

/// Human-readable summary: junction classes, the parameter relation, quartic
/// coefficients, perfect-transmission roots (or incidental candidates), peak
/// widths for anti-symmetric configs, and the delta-potential special cases
/// when junction 1 is a pure delta.
std::string emit_report(const Scenario& scenario);

} // namespace ptrans
