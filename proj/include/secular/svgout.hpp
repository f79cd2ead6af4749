#pragma once
// Minimal self-contained SVG line plots: one polyline through the given
// points, light axes with tick labels, optional vertical marker lines (used
// for the integer breakpoints of piecewise curves). Output is a single valid
// XML document with no external references.
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>
#include "csvout.hpp"
#include "errors.hpp"

namespace secular {

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string svg_line_plot(const std::vector<double>& xs, const std::vector<double>& ys,
                                 const std::string& title, const std::string& x_label,
                                 const std::string& y_label,
                                 const std::vector<double>& vertical_marks = {}) {
    require(xs.size() == ys.size(), "point coordinate lists must have equal length");
    require(xs.size() >= 2, "a plot needs at least two points");
    const double W = 720, H = 480, ml = 70, mr = 20, mt = 40, mb = 50;
    double xmin = xs[0], xmax = xs[0], ymin = ys[0], ymax = ys[0];
    for (double v : xs) {
        xmin = std::min(xmin, v);
        xmax = std::max(xmax, v);
    }
    for (double v : ys) {
        ymin = std::min(ymin, v);
        ymax = std::max(ymax, v);
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const double px = (W - ml - mr) / (xmax - xmin);
    const double py = (H - mt - mb) / (ymax - ymin);
    auto X = [&](double x) { return ml + (x - xmin) * px; };
    auto Y = [&](double y) { return H - mb - (y - ymin) * py; };
    auto num = [](double v) {
        char b[48];
        std::snprintf(b, sizeof(b), "%.6g", v);
        return std::string(b);
    };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
         "viewBox=\"0 0 720 480\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"720\" height=\"480\" fill=\"white\"/>\n";
    s += "<text x=\"" + num(W / 2) + "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">" + xml_escape(title) + "</text>\n";
    // axes
    s += "<line x1=\"" + num(ml) + "\" y1=\"" + num(H - mb) + "\" x2=\"" + num(W - mr) +
         "\" y2=\"" + num(H - mb) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    s += "<line x1=\"" + num(ml) + "\" y1=\"" + num(mt) + "\" x2=\"" + num(ml) + "\" y2=\"" +
         num(H - mb) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // ticks: 5 per axis
    for (int i = 0; i <= 4; ++i) {
        double xv = xmin + (xmax - xmin) * i / 4.0;
        double yv = ymin + (ymax - ymin) * i / 4.0;
        s += "<line x1=\"" + num(X(xv)) + "\" y1=\"" + num(H - mb) + "\" x2=\"" + num(X(xv)) +
             "\" y2=\"" + num(H - mb + 5) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        s += "<text x=\"" + num(X(xv)) + "\" y=\"" + num(H - mb + 20) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
             num(xv) + "</text>\n";
        s += "<line x1=\"" + num(ml - 5) + "\" y1=\"" + num(Y(yv)) + "\" x2=\"" + num(ml) +
             "\" y2=\"" + num(Y(yv)) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        s += "<text x=\"" + num(ml - 8) + "\" y=\"" + num(Y(yv) + 4) +
             "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(yv) +
             "</text>\n";
    }
    // axis labels
    s += "<text x=\"" + num((ml + W - mr) / 2) + "\" y=\"" + num(H - 12) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
         xml_escape(x_label) + "</text>\n";
    s += "<text x=\"16\" y=\"" + num((mt + H - mb) / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 16 " + num((mt + H - mb) / 2) + ")\">" +
         xml_escape(y_label) + "</text>\n";
    for (double mx : vertical_marks) {
        if (mx < xmin || mx > xmax) continue;
        s += "<line x1=\"" + num(X(mx)) + "\" y1=\"" + num(mt) + "\" x2=\"" + num(X(mx)) +
             "\" y2=\"" + num(H - mb) +
             "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }
    s += "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += num(X(xs[i])) + "," + num(Y(ys[i]));
    }
    s += "\"/>\n</svg>\n";
    return s;
}

} // namespace secular
