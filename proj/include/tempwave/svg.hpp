#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tempwave/trace.hpp"

namespace tempwave {

// Self-contained SVG plot of one or more field traces: a top panel with the
// real part and a bottom panel with the magnitude, shared time axis, legend
// from the trace labels. Output is deterministic for identical inputs.
void write_traces_svg(const std::vector<const FieldTrace*>& traces,
                      std::ostream& out, const std::string& title);

}  // namespace tempwave
