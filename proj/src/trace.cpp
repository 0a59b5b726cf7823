#include "tempwave/trace.hpp"

#include <algorithm>
#include <cmath>

namespace tempwave {

std::vector<double> uniform_grid(double t_min, double t_max, std::size_t samples) {
    if (samples < 2 || !(t_max > t_min)) {
        fail(ErrorKind::config, "grid needs t_max > t_min and >= 2 samples");
    }
    std::vector<double> grid(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        grid[i] = t_min + (t_max - t_min) * static_cast<double>(i) /
                              static_cast<double>(samples - 1);
    }
    return grid;
}

double sup_difference(const FieldTrace& a, const FieldTrace& b) {
    a.validate();
    b.validate();
    if (a.grid != b.grid) {
        fail(ErrorKind::config, "sup_difference: traces sampled on different grids");
    }
    double sup = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        sup = std::max(sup, std::abs(a.values[i] - b.values[i]));
    }
    return sup;
}

}  // namespace tempwave
