#include "tempwave/csv.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>

namespace tempwave {

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    return buf;
}

void write_trace_csv(const FieldTrace& trace, std::ostream& out) {
    trace.validate();
    out << "t,re,im,abs\n";
    for (std::size_t i = 0; i < trace.grid.size(); ++i) {
        const std::complex<double> v = trace.values[i];
        out << format_number(trace.grid[i]) << ',' << format_number(v.real())
            << ',' << format_number(v.imag()) << ','
            << format_number(std::abs(v)) << '\n';
    }
}

void write_coefficient_report(const std::vector<CoefficientReportRow>& rows,
                              std::ostream& out) {
    out << "lambda,lambdaT_over_pi,tan_lambdaT,abs_C2,abs_C5,regime\n";
    for (const CoefficientReportRow& row : rows) {
        const double lt = row.solution.lambda * row.solution.T;
        out << format_number(row.solution.lambda) << ','
            << format_number(lt / std::numbers::pi) << ','
            << format_number(std::tan(lt))
            << ',' << format_number(std::abs(row.solution.c2)) << ','
            << format_number(std::abs(row.solution.c5)) << ','
            << row.regime.describe() << '\n';
    }
}

}  // namespace tempwave
