// Tabular and SVG serialization.
#include <catch2/catch_amalgamated.hpp>

#include "secular/csvout.hpp"
#include "secular/svgout.hpp"

using namespace secular;

TEST_CASE("float formatting is fixed at 12 significant digits") {
    CHECK(format_float(0.5) == "0.5");
    CHECK(format_float(1.0 / 3.0) == "0.333333333333");
    CHECK(format_float(-2.0) == "-2");
    CHECK(format_float(1.0e-7) == "1e-07");
    CHECK(format_int(-42) == "-42");
}

TEST_CASE("csv serialization is byte-stable") {
    OutputTable t;
    t.header = {"a", "b"};
    t.add_row({"1", "x"});
    t.add_row({"2", "yy"});
    CHECK(to_csv(t) == "a,b\n1,x\n2,yy\n");
    CHECK(to_csv(t) == to_csv(t));
    CHECK_THROWS_AS(t.add_row({"only-one"}), precondition_error);
}

TEST_CASE("text rendering pads columns") {
    OutputTable t;
    t.header = {"m", "value"};
    t.add_row({"10", "7"});
    CHECK(to_text(t) == "m   value\n10  7\n"); // trailing spaces stripped
}

TEST_CASE("xml escaping") {
    CHECK(xml_escape("a<b&c>d\"e'f") == "a&lt;b&amp;c&gt;d&quot;e&apos;f");
    CHECK(xml_escape("plain") == "plain");
}

TEST_CASE("svg plots are well-formed and deterministic") {
    std::vector<double> xs{0.0, 1.0, 2.0}, ys{0.0, 0.5, 0.0};
    std::string svg = svg_line_plot(xs, ys, "x < y", "c", "value", {1.0});
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("x &lt; y") != std::string::npos);      // title passes the escaper
    CHECK(svg.find("stroke-dasharray") != std::string::npos); // the vertical mark
    CHECK(svg == svg_line_plot(xs, ys, "x < y", "c", "value", {1.0}));

    // angle brackets only open tags: crude well-formedness scan
    int depth = 0;
    bool ok = true;
    for (char ch : svg) {
        if (ch == '<') {
            if (depth != 0) ok = false;
            ++depth;
        } else if (ch == '>') {
            if (depth != 1) ok = false;
            --depth;
        }
    }
    CHECK(ok);
    CHECK(depth == 0);

    CHECK_THROWS_AS(svg_line_plot({1.0}, {1.0}, "t", "x", "y", {}), precondition_error);
    CHECK_THROWS_AS(svg_line_plot({1.0, 2.0}, {1.0}, "t", "x", "y", {}), precondition_error);
}
