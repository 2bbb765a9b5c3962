#include "polyrec/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace polyrec {

namespace {

constexpr double kView = 800.0;

struct Box {
    double xlo, xhi, ylo, yhi;
    void include(double x, double y) {
        xlo = std::min(xlo, x);
        xhi = std::max(xhi, x);
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace

std::string render_plot_svg(const LimitSet& ls, const std::vector<Complex>& roots) {
    double cx = ls.circle_center.convert_to<double>();
    double r = ls.circle_radius.convert_to<double>();

    Box box{cx, cx, 0.0, 0.0};
    switch (ls.kind) {
        case LimitKind::Circle:
        case LimitKind::Arc:
        case LimitKind::Lollipop:
            box.include(cx - r, -r);
            box.include(cx + r, r);
            if (ls.kind != LimitKind::Circle) {
                if (ls.kind == LimitKind::Arc) {
                    box.include(ls.arc_through.convert_to<double>(), 0.0);
                } else {
                    box.include(ls.interval_lo.convert_to<double>(), 0.0);
                    box.include(ls.interval_hi.convert_to<double>(), 0.0);
                }
            }
            break;
        case LimitKind::Interval:
            box.include(ls.interval_lo.convert_to<double>(), 0.0);
            box.include(ls.interval_hi.convert_to<double>(), 0.0);
            break;
    }
    for (const Complex& z : ls.isolated)
        box.include(z.re.convert_to<double>(), z.im.convert_to<double>());

    double w = box.xhi - box.xlo, h = box.yhi - box.ylo;
    double span = std::max({w, h, 1e-3});
    double mx = (box.xlo + box.xhi) / 2, my = (box.ylo + box.yhi) / 2;
    span *= 1.2;  // 20% inflation
    double xlo = mx - span / 2, ylo = my - span / 2;
    double scale = kView / span;

    auto X = [&](double x) { return (x - xlo) * scale; };
    auto Y = [&](double y) { return kView - (y - ylo) * scale; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    svg += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

    // axes
    if (xlo < 0 && xlo + span > 0)
        svg += "<line x1=\"" + num(X(0)) + "\" y1=\"0\" x2=\"" + num(X(0)) +
               "\" y2=\"800\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    if (ylo < 0 && ylo + span > 0)
        svg += "<line x1=\"0\" y1=\"" + num(Y(0)) + "\" x2=\"800\" y2=\"" + num(Y(0)) +
               "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"780\" y=\"" + num(Y(0) - 6) + "\" font-size=\"14\">Re</text>\n";
    svg += "<text x=\"" + num(X(0) + 6) + "\" y=\"16\" font-size=\"14\">Im</text>\n";

    const std::string stroke = "stroke=\"#1f77b4\" stroke-width=\"2\" fill=\"none\"";
    if (ls.kind == LimitKind::Circle || ls.kind == LimitKind::Lollipop) {
        svg += "<circle cx=\"" + num(X(cx)) + "\" cy=\"" + num(Y(0)) + "\" r=\"" +
               num(r * scale) + "\" " + stroke + "/>\n";
    }
    if (ls.kind == LimitKind::Interval || ls.kind == LimitKind::Lollipop) {
        svg += "<line x1=\"" + num(X(ls.interval_lo.convert_to<double>())) + "\" y1=\"" +
               num(Y(0)) + "\" x2=\"" + num(X(ls.interval_hi.convert_to<double>())) +
               "\" y2=\"" + num(Y(0)) + "\" " + stroke + "/>\n";
    }
    if (ls.kind == LimitKind::Arc) {
        double ex = ls.arc_endpoint_plus.re.convert_to<double>();
        double ey = ls.arc_endpoint_plus.im.convert_to<double>();
        double tx = ls.arc_through.convert_to<double>();
        // two svg arc segments endpoint- -> through -> endpoint+
        bool sweep_up = tx > cx;
        std::string flags = sweep_up ? "0 0,1 " : "0 0,0 ";
        svg += "<path d=\"M " + num(X(ex)) + " " + num(Y(-ey)) + " A " + num(r * scale) +
               " " + num(r * scale) + " " + flags + num(X(tx)) + " " + num(Y(0)) + " A " +
               num(r * scale) + " " + num(r * scale) + " " + flags + num(X(ex)) + " " +
               num(Y(ey)) + "\" " + stroke + "/>\n";
    }
    for (const Complex& z : ls.isolated) {
        double px = X(z.re.convert_to<double>()), py = Y(z.im.convert_to<double>());
        svg += "<path d=\"M " + num(px - 6) + " " + num(py - 6) + " L " + num(px + 6) +
               " " + num(py + 6) + " M " + num(px - 6) + " " + num(py + 6) + " L " +
               num(px + 6) + " " + num(py - 6) +
               "\" stroke=\"#2ca02c\" stroke-width=\"2\"/>\n";
    }
    for (const Complex& z : roots) {
        svg += "<circle cx=\"" + num(X(z.re.convert_to<double>())) + "\" cy=\"" +
               num(Y(z.im.convert_to<double>())) +
               "\" r=\"3.5\" fill=\"#d62728\" fill-opacity=\"0.8\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace polyrec
