#include "polyrec/format.hpp"
#include "polyrec/report_json.hpp"
#include "polyrec/roots.hpp"
#include "polyrec/svg.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace polyrec;

TEST_CASE("float formatting round-trips doubles") {
    for (double v : {0.0, 1.0, -3.5, 1.3027756377319946, 1e-300, -2.2250738585072014e-308,
                     123456789.123456789}) {
        std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
        CHECK(s.find('e') != std::string::npos);  // scientific notation
    }
}

TEST_CASE("report JSON carries the documented schema") {
    VerificationReport rep = verify_sign_conditions({1, -1, 2, -3}, 5);
    nlohmann::json j = to_json(rep);
    CHECK(j.contains("claim"));
    CHECK(j.contains("params"));
    CHECK(j["params"].contains("a"));
    CHECK(j.contains("horizon"));
    CHECK(j.contains("passed"));
    CHECK(j.contains("worst_margin"));
    CHECK(j["details"].is_array());
    CHECK(j["details"].size() > 0);
}

TEST_CASE("classify JSON carries kind, geometry and scalar table") {
    nlohmann::json j = to_json(classify({1, 2, -2, -1}));
    CHECK(j["kind"] == "lollipop");
    CHECK(j["interval"][0] == 0.0);
    CHECK(j["interval"][1] == 4.0);
    CHECK(j["circle"]["center"] == -0.5);
    CHECK(j["circle"]["radius"] == 1.5);
    CHECK(j["scalars"]["x_A"] == -2.0);
    CHECK(j["scalars"]["x_B"] == -0.5);
    CHECK(j["scalars"]["B_at_xA"] == 3.0);
}

TEST_CASE("SVG output is byte-deterministic and self-contained") {
    auto w = generate_sequence({1, 2, -2, -1}, 10, 128);
    RootSet rs = snap_real(find_roots(w[10]));
    LimitSet ls = classify({1, 2, -2, -1}, 128);
    std::string svg1 = render_plot_svg(ls, rs.roots);
    std::string svg2 = render_plot_svg(ls, rs.roots);
    CHECK(svg1 == svg2);
    CHECK(svg1.rfind("<svg", 0) == 0);
    CHECK(svg1.find("width=\"800\" height=\"800\"") != std::string::npos);
    CHECK(svg1.find("href") == std::string::npos);  // no external assets
    CHECK(svg1.find("circle") != std::string::npos);
    CHECK(svg1.find("</svg>") != std::string::npos);
}

TEST_CASE("single root plot contains one marker") {
    auto w = generate_sequence({1, -1, 2, -3}, 1, 53);
    RootSet rs = snap_real(find_roots(w[1]));
    REQUIRE(rs.roots.size() == 1);
    LimitSet ls = classify({1, -1, 2, -3}, 53);
    std::string svg = render_plot_svg(ls, rs.roots);
    CHECK(svg.find("fill=\"#d62728\"") != std::string::npos);
}
