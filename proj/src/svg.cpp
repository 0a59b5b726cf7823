#include "tempwave/svg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>

#include "tempwave/error.hpp"

namespace tempwave {
namespace {

constexpr int kWidth = 900;
constexpr int kPanelHeight = 280;
constexpr int kGap = 50;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 45;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b"};
constexpr std::size_t kPaletteSize = sizeof kPalette / sizeof kPalette[0];

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (hi <= lo) {
            lo -= 0.5;
            hi += 0.5;
            return;
        }
        const double margin = 0.05 * (hi - lo);
        lo -= margin;
        hi += margin;
    }
};

class Panel {
  public:
    Panel(int top, Range x, Range y) : top_(top), x_(x), y_(y) {}

    double px(double x) const {
        return kMarginLeft + (x - x_.lo) / (x_.hi - x_.lo) *
                                 (kWidth - kMarginLeft - kMarginRight);
    }
    double py(double y) const {
        return top_ + kPanelHeight -
               (y - y_.lo) / (y_.hi - y_.lo) * kPanelHeight;
    }

    void frame(std::ostream& out, const std::string& y_label) const {
        out << "<rect x=\"" << kMarginLeft << "\" y=\"" << top_ << "\" width=\""
            << kWidth - kMarginLeft - kMarginRight << "\" height=\""
            << kPanelHeight
            << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        for (int i = 0; i <= 4; ++i) {
            const double xv = x_.lo + (x_.hi - x_.lo) * i / 4.0;
            const double yv = y_.lo + (y_.hi - y_.lo) * i / 4.0;
            const double xp = px(xv);
            const double yp = py(yv);
            out << "<line x1=\"" << fmt(xp) << "\" y1=\"" << top_ + kPanelHeight
                << "\" x2=\"" << fmt(xp) << "\" y2=\""
                << top_ + kPanelHeight + 5
                << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
            out << "<text x=\"" << fmt(xp) << "\" y=\""
                << top_ + kPanelHeight + 20
                << "\" font-size=\"12\" text-anchor=\"middle\" "
                   "fill=\"#333333\">"
                << fmt_tick(xv) << "</text>\n";
            out << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << fmt(yp)
                << "\" x2=\"" << kMarginLeft << "\" y2=\"" << fmt(yp)
                << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
            out << "<text x=\"" << kMarginLeft - 9 << "\" y=\""
                << fmt(yp + 4.0)
                << "\" font-size=\"12\" text-anchor=\"end\" fill=\"#333333\">"
                << fmt_tick(yv) << "</text>\n";
        }
        out << "<text x=\"" << kMarginLeft << "\" y=\"" << top_ - 8
            << "\" font-size=\"13\" fill=\"#333333\">" << y_label
            << "</text>\n";
    }

    template <typename F>
    void polyline(std::ostream& out, const FieldTrace& trace,
                  const char* color, F value) const {
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < trace.grid.size(); ++i) {
            if (i != 0) out << ' ';
            out << fmt(px(trace.grid[i])) << ',' << fmt(py(value(trace.values[i])));
        }
        out << "\"/>\n";
    }

  private:
    int top_;
    Range x_;
    Range y_;
};

}  // namespace

void write_traces_svg(const std::vector<const FieldTrace*>& traces,
                      std::ostream& out, const std::string& title) {
    if (traces.empty()) fail(ErrorKind::config, "svg: no traces to plot");
    Range x, y_re, y_abs;
    for (const FieldTrace* trace : traces) {
        trace->validate();
        for (double t : trace->grid) x.include(t);
        for (const std::complex<double>& v : trace->values) {
            y_re.include(v.real());
            y_abs.include(std::abs(v));
        }
    }
    x.pad();
    y_re.pad();
    y_abs.pad();

    const int height =
        kMarginTop + 2 * kPanelHeight + kGap + kMarginBottom;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << kWidth << ' '
        << height << "\">\n";
    out << "<rect width=\"" << kWidth << "\" height=\"" << height
        << "\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"22\" font-size=\"16\" "
           "text-anchor=\"middle\" fill=\"#111111\">"
        << title << "</text>\n";

    const Panel top(kMarginTop, x, y_re);
    const Panel bottom(kMarginTop + kPanelHeight + kGap, x, y_abs);
    top.frame(out, "Re E(t)");
    bottom.frame(out, "|E(t)|");
    for (std::size_t i = 0; i < traces.size(); ++i) {
        const char* color = kPalette[i % kPaletteSize];
        top.polyline(out, *traces[i], color,
                     [](std::complex<double> v) { return v.real(); });
        bottom.polyline(out, *traces[i], color,
                        [](std::complex<double> v) { return std::abs(v); });
    }

    // Legend in the top-right corner of the upper panel.
    double ly = kMarginTop + 16.0;
    for (std::size_t i = 0; i < traces.size(); ++i) {
        const double lx = kWidth - kMarginRight - 170.0;
        out << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly - 4.0)
            << "\" x2=\"" << fmt(lx + 24.0) << "\" y2=\"" << fmt(ly - 4.0)
            << "\" stroke=\"" << kPalette[i % kPaletteSize]
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << fmt(lx + 30.0) << "\" y=\"" << fmt(ly)
            << "\" font-size=\"12\" fill=\"#333333\">" << traces[i]->label
            << "</text>\n";
        ly += 16.0;
    }
    out << "</svg>\n";
}

}  // namespace tempwave
