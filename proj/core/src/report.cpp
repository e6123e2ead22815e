#include "patmat/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "patmat/errors.hpp"

namespace patmat {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::string fixed2(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string format_sig17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += cells[i];
    }
    out += '\n';
    return out;
}

std::string svg_histogram(const Histogram& h,
                          const std::function<double(double)>& overlay,
                          const std::string& caption) {
    const double width = 800.0;
    const double height = 500.0;
    const double left = 60.0;
    const double right = 785.0;
    const double top = 40.0;
    const double bottom = 455.0;

    const int bins = static_cast<int>(h.counts.size());
    const int curve_points = 512;

    double ymax = 0.0;
    for (double d : h.density) {
        ymax = std::max(ymax, d);
    }
    std::vector<double> curve(curve_points);
    for (int i = 0; i < curve_points; ++i) {
        double x = h.lo + (h.hi - h.lo) * i / (curve_points - 1);
        curve[i] = overlay(x);
        ymax = std::max(ymax, curve[i]);
    }
    if (ymax <= 0.0) {
        ymax = 1.0;
    }
    ymax *= 1.08;

    auto px = [&](double x) {
        return left + (x - h.lo) / (h.hi - h.lo) * (right - left);
    };
    auto py = [&](double y) { return bottom - y / ymax * (bottom - top); };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
          "viewBox=\"0 0 800 500\">\n";
    os << "<title>" << xml_escape(caption) << "</title>\n";

    for (int i = 0; i < bins; ++i) {
        double x0 = px(h.lo + i * h.width);
        double x1 = px(h.lo + (i + 1) * h.width);
        double y = py(h.density[i]);
        os << "<rect x=\"" << fixed2(x0) << "\" y=\"" << fixed2(y) << "\" width=\""
           << fixed2(x1 - x0) << "\" height=\"" << fixed2(bottom - y)
           << "\" fill=\"#9db8d9\" stroke=\"#5c79a0\" stroke-width=\"0.5\"/>\n";
    }

    os << "<path d=\"M " << fixed2(left) << " " << fixed2(top) << " L "
       << fixed2(right) << " " << fixed2(top) << " L " << fixed2(right) << " "
       << fixed2(bottom) << " L " << fixed2(left) << " " << fixed2(bottom)
       << " Z\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1\"/>\n";

    os << "<path d=\"";
    for (int i = 0; i < curve_points; ++i) {
        double x = h.lo + (h.hi - h.lo) * i / (curve_points - 1);
        os << (i == 0 ? "M " : " L ") << fixed2(px(x)) << " " << fixed2(py(curve[i]));
    }
    os << "\" fill=\"none\" stroke=\"#b03030\" stroke-width=\"1.5\"/>\n";

    // axis ticks and labels
    const int xticks = 5;
    for (int i = 0; i <= xticks; ++i) {
        double x = h.lo + (h.hi - h.lo) * i / xticks;
        os << "<line x1=\"" << fixed2(px(x)) << "\" y1=\"" << fixed2(bottom)
           << "\" x2=\"" << fixed2(px(x)) << "\" y2=\"" << fixed2(bottom + 6)
           << "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << fixed2(px(x)) << "\" y=\"" << fixed2(bottom + 22)
           << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
           << fixed2(x) << "</text>\n";
    }
    const int yticks = 4;
    for (int i = 0; i <= yticks; ++i) {
        double y = ymax * i / yticks;
        os << "<line x1=\"" << fixed2(left - 6) << "\" y1=\"" << fixed2(py(y))
           << "\" x2=\"" << fixed2(left) << "\" y2=\"" << fixed2(py(y))
           << "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << fixed2(left - 10) << "\" y=\"" << fixed2(py(y) + 4)
           << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"end\">"
           << fixed2(y) << "</text>\n";
    }
    os << "<text x=\"" << fixed2(0.5 * (left + right)) << "\" y=\"24\" "
          "font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">"
       << xml_escape(caption) << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace patmat
