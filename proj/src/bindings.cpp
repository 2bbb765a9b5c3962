#include "polyrec/report_json.hpp"
#include "polyrec/sturm.hpp"
#include "polyrec/svg.hpp"
#include "polyrec/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

namespace py = pybind11;
using namespace polyrec;

namespace {

py::object to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            py::dict d;
            for (auto it = j.begin(); it != j.end(); ++it)
                d[py::str(it.key())] = to_py(it.value());
            return d;
        }
        case nlohmann::json::value_t::array: {
            py::list l;
            for (const auto& v : j) l.append(to_py(v));
            return l;
        }
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        default:
            return py::none();
    }
}

RecurrenceParams make_params(double a, double b, double c, double d) {
    RecurrenceParams p{a, b, c, d};
    p.require_valid();
    return p;
}

Complex from_std(const std::complex<double>& z) { return Complex(Real(z.real()), Real(z.imag())); }

std::complex<double> to_std(const Complex& z) {
    return {z.re.convert_to<double>(), z.im.convert_to<double>()};
}

py::dict roots_impl(double a, double b, double c, double d, int n, unsigned precision,
                    bool snap) {
    auto w = generate_sequence(make_params(a, b, c, d), n, precision);
    RootSet rs = find_roots(w[n]);
    if (snap) rs = snap_real(rs);
    py::list roots, is_real, residuals;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        roots.append(to_std(rs.roots[i]));
        is_real.append(static_cast<bool>(rs.is_real[i]));
        residuals.append(rs.residuals[i].convert_to<double>());
    }
    py::dict out;
    out["roots"] = roots;
    out["is_real"] = is_real;
    out["residuals"] = residuals;
    out["converged"] = rs.converged;
    out["iterations"] = rs.iterations;
    out["precision_bits"] = rs.precision_bits;
    return out;
}

py::dict verify_impl(const std::string& suite, double a, double b, double c, double d,
                     int N, unsigned precision) {
    RecurrenceParams p = make_params(a, b, c, d);
    VerifyConfig cfg;
    cfg.precision_bits = precision;
    VerificationReport rep;
    if (suite == "interlace")
        rep = verify_interlacing_chain(p, N, cfg);
    else if (suite == "signs")
        rep = verify_sign_conditions(p, N, cfg);
    else if (suite == "sharpness")
        rep = verify_bound_sharpness(p, N, cfg);
    else if (suite == "limits")
        rep = verify_limit_convergence(p, N, cfg);
    else if (suite == "lollipop")
        rep = verify_lollipop(p, cfg);
    else if (suite == "normalized")
        rep = verify_normalized_case(p, N, cfg);
    else
        throw std::invalid_argument("unknown suite: " + suite);
    return to_py(to_json(rep)).cast<py::dict>();
}

}  // namespace

PYBIND11_MODULE(_polyrec, m) {
    m.doc() = "Polynomial sequences from order-two recurrences with linear "
              "coefficients: zeros, limit sets, and theorem checks";

    m.def(
        "sequence",
        [](double a, double b, double c, double d, int N, unsigned precision) {
            auto w = generate_sequence(make_params(a, b, c, d), N, precision);
            py::list out;
            for (const Polynomial& p : w) {
                py::list coeffs;
                for (const Real& ck : p.coeffs()) coeffs.append(ck.convert_to<double>());
                out.append(coeffs);
            }
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("N"),
        py::arg("precision") = 256,
        "Coefficient lists (ascending) of W_0..W_N");

    m.def(
        "closed_form",
        [](double a, double b, double c, double d, int n, std::complex<double> z,
           unsigned precision) {
            return to_std(closed_form_eval(make_params(a, b, c, d), n, from_std(z), precision));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("n"), py::arg("z"),
        py::arg("precision") = 256, "W_n(z) through the closed form of the recurrence");

    m.def("roots", &roots_impl, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
          py::arg("n"), py::arg("precision") = 256, py::arg("snap") = true,
          "All zeros of W_n with residuals and reality flags");

    m.def(
        "classify",
        [](double a, double b, double c, double d, unsigned precision) {
            return to_py(to_json(classify(make_params(a, b, c, d), precision)));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("precision") = 256,
        "Limit set of zeros: kind, geometry, isolated points, scalars");

    m.def(
        "critical_scalars",
        [](double a, double b, double c, double d, unsigned precision) {
            return to_py(to_json(critical_scalars(make_params(a, b, c, d), precision)));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("precision") = 256);

    m.def(
        "limit_distance",
        [](double a, double b, double c, double d, std::complex<double> z,
           unsigned precision) {
            LimitSet ls = classify(make_params(a, b, c, d), precision);
            return distance_to(ls, from_std(z)).convert_to<double>();
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("z"),
        py::arg("precision") = 256, "Euclidean distance from z to the limit set");

    m.def(
        "real_rooted_criterion",
        [](double a, double b, double c, double d) {
            return real_rooted_criterion(make_params(a, b, c, d));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
        "x_A <= x_B in the (+,-,+,-) sign case");

    m.def(
        "real_rooted_exact",
        [](double a, double b, double c, double d, int n) {
            auto w = exact_sequence(make_params(a, b, c, d), n);
            return real_rooted_exact(w[n]);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("n"),
        "Exact real-rootedness of W_n by integer Sturm sequences");

    m.def("verify", &verify_impl, py::arg("suite"), py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("d"), py::arg("N") = 40, py::arg("precision") = 256,
          "Run a verification suite; suite in {interlace, signs, sharpness, limits, "
          "lollipop, normalized}");

    m.def(
        "scan",
        [](int horizon) {
            ScanSummary sum = scan_sign_region({0.5, 1, 2}, {-0.5, -1, -2}, {0.5, 1, 2},
                                               {-0.5, -1, -2}, horizon);
            return to_py(to_json(sum));
        },
        py::arg("horizon") = 60, "Sign-region grid scan of the real-rootedness criterion");

    m.def(
        "render_svg",
        [](double a, double b, double c, double d, int n, unsigned precision) {
            RecurrenceParams p = make_params(a, b, c, d);
            LimitSet ls = classify(p, precision);
            auto w = generate_sequence(p, n, precision);
            RootSet rs = find_roots(w[n]);
            return render_plot_svg(ls, rs.roots);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("n"),
        py::arg("precision") = 256, "SVG plot of the limit set with the zeros of W_n");
}
