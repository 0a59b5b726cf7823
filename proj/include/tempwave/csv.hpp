#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tempwave/effective.hpp"
#include "tempwave/trace.hpp"

namespace tempwave {

// All numeric CSV output uses 12 significant digits, locale-independent.
std::string format_number(double x);

// Header `t,re,im,abs`.
void write_trace_csv(const FieldTrace& trace, std::ostream& out);

// Header `lambda,lambdaT_over_pi,tan_lambdaT,abs_C2,abs_C5,regime`.
struct CoefficientReportRow {
    EffectiveSolution solution;
    RegimeClass regime;
};
void write_coefficient_report(const std::vector<CoefficientReportRow>& rows,
                              std::ostream& out);

}  // namespace tempwave
