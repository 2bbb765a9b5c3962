#include "polyrec/format.hpp"
#include "polyrec/report_json.hpp"
#include "polyrec/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace polyrec;

constexpr int kExitPass = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNonConvergence = 3;

struct Options {
    std::string params_csv;
    int n = -1;
    unsigned precision = 256;
    std::string format = "json";
    std::string output;
    std::vector<std::string> tol_overrides;
};

RecurrenceParams parse_params(const std::string& csv) {
    std::stringstream ss(csv);
    std::vector<double> vals;
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad number in --params: " + tok);
        vals.push_back(v);
    }
    if (vals.size() != 4)
        throw std::invalid_argument("--params expects four comma-separated values a,b,c,d");
    RecurrenceParams p{vals[0], vals[1], vals[2], vals[3]};
    p.require_valid();
    return p;
}

void check_precision(unsigned bits) {
    if (bits != 53 && bits != 128 && bits != 256 && bits != 512)
        throw std::invalid_argument("--precision must be one of 53, 128, 256, 512");
}

VerifyConfig make_verify_config(const Options& opt) {
    VerifyConfig cfg;
    cfg.precision_bits = opt.precision;
    for (const std::string& ov : opt.tol_overrides) {
        std::size_t eq = ov.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--tol expects name=value, got: " + ov);
        std::string name = ov.substr(0, eq);
        double value = std::stod(ov.substr(eq + 1));
        if (name == "interlace")
            cfg.interlace_tol = value;
        else if (name == "convergence")
            cfg.convergence_tol = value;
        else
            throw std::invalid_argument("unknown tolerance name: " + name);
    }
    return cfg;
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.output);
    out << text;
}

int cmd_classify(const Options& opt) {
    check_precision(opt.precision);
    RecurrenceParams p = parse_params(opt.params_csv);
    LimitSet ls = classify(p, opt.precision);
    write_output(opt, to_json(ls).dump(2) + "\n");
    return kExitPass;
}

int cmd_roots(const Options& opt) {
    check_precision(opt.precision);
    RecurrenceParams p = parse_params(opt.params_csv);
    if (opt.n < 1) throw std::invalid_argument("--n must be at least 1 (degree 0 has no roots)");
    Polynomial wn = generate_sequence(p, opt.n, opt.precision).back();
    RootSet rs = snap_real(find_roots(wn));

    std::string text;
    if (opt.format == "csv") {
        text = "n,re,im,is_real,residual\n";
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            text += std::to_string(opt.n) + "," + format_real(rs.roots[i].re) + "," +
                    format_real(rs.roots[i].im) + "," +
                    (rs.is_real[i] ? "true" : "false") + "," +
                    format_real(rs.residuals[i]) + "\n";
        }
    } else if (opt.format == "json") {
        nlohmann::json roots = nlohmann::json::array();
        for (std::size_t i = 0; i < rs.roots.size(); ++i)
            roots.push_back({{"re", as_double(rs.roots[i].re)},
                             {"im", as_double(rs.roots[i].im)},
                             {"is_real", static_cast<bool>(rs.is_real[i])},
                             {"residual", as_double(rs.residuals[i])}});
        nlohmann::json j = {{"n", opt.n},
                            {"params", to_json(p)},
                            {"converged", rs.converged},
                            {"iterations", rs.iterations},
                            {"roots", roots}};
        text = j.dump(2) + "\n";
    } else {
        throw std::invalid_argument("roots supports --format csv or json");
    }
    write_output(opt, text);
    return rs.converged ? kExitPass : kExitNonConvergence;
}

int cmd_verify(const Options& opt, const std::string& suite) {
    check_precision(opt.precision);
    RecurrenceParams p{1, -1, 2, -3};
    if (suite != "scan" || !opt.params_csv.empty()) p = parse_params(opt.params_csv);
    VerifyConfig cfg = make_verify_config(opt);

    if (suite == "real-rooted") {
        bool crit = real_rooted_criterion(p);
        CriticalScalars s = critical_scalars(p, opt.precision);
        nlohmann::json j = {{"claim", "real-rooted-criterion"},
                            {"params", to_json(p)},
                            {"criterion", crit},
                            {"x_A", as_double(s.x_A)},
                            {"x_B", as_double(s.x_B)}};
        write_output(opt, j.dump(2) + "\n");
        return kExitPass;
    }
    if (suite == "scan") {
        int horizon = opt.n > 0 ? opt.n : 60;
        ScanSummary sum = scan_sign_region({0.5, 1, 2}, {-0.5, -1, -2}, {0.5, 1, 2},
                                           {-0.5, -1, -2}, horizon);
        write_output(opt, to_json(sum).dump(2) + "\n");
        return sum.false_negatives == 0 ? kExitPass : kExitSuiteFailure;
    }

    VerificationReport rep;
    if (suite == "interlace") {
        rep = verify_interlacing_chain(p, opt.n > 0 ? opt.n : 40, cfg);
    } else if (suite == "signs") {
        rep = verify_sign_conditions(p, opt.n > 0 ? opt.n : 40, cfg);
    } else if (suite == "sharpness") {
        if (cfg.convergence_tol == 0.1) cfg.convergence_tol = 0.05;
        rep = verify_bound_sharpness(p, opt.n > 0 ? opt.n : 60, cfg);
    } else if (suite == "limits") {
        rep = verify_limit_convergence(p, opt.n > 0 ? opt.n : 60, cfg);
    } else if (suite == "lollipop") {
        rep = verify_lollipop(p, cfg);
        LollipopJunction j = lollipop_junction(p, opt.precision);
        nlohmann::json out = to_json(rep);
        out["junction"] = as_double(j.point);
        out["inside_len"] = as_double(j.inside_len);
        out["outside_len"] = as_double(j.outside_len);
        write_output(opt, out.dump(2) + "\n");
        return rep.passed ? kExitPass : kExitSuiteFailure;
    } else if (suite == "normalized") {
        rep = verify_normalized_case(p, opt.n > 0 ? opt.n : 80, cfg);
    } else {
        throw std::invalid_argument(
            "unknown suite; expected one of real-rooted, interlace, signs, sharpness, "
            "limits, lollipop, normalized, scan");
    }
    write_output(opt, to_json(rep).dump(2) + "\n");
    return rep.passed ? kExitPass : kExitSuiteFailure;
}

int cmd_plot(const Options& opt) {
    check_precision(opt.precision);
    RecurrenceParams p = parse_params(opt.params_csv);
    if (opt.n < 1) throw std::invalid_argument("--n must be at least 1");
    Polynomial wn = generate_sequence(p, opt.n, opt.precision).back();
    RootSet rs = snap_real(find_roots(wn));
    LimitSet ls = classify(p, opt.precision);
    write_output(opt, render_plot_svg(ls, rs.roots));
    return rs.converged ? kExitPass : kExitNonConvergence;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recurrence polynomial sequences: roots, limit sets, verification"};
    app.require_subcommand(1);

    Options opt;
    std::string suite;

    auto add_common = [&](CLI::App* cmd, bool needs_n) {
        cmd->add_option("--params", opt.params_csv, "recurrence coefficients a,b,c,d");
        if (needs_n) cmd->add_option("--n,--N", opt.n, "horizon / polynomial index");
        cmd->add_option("--precision", opt.precision, "working precision in bits");
        cmd->add_option("--tol", opt.tol_overrides, "tolerance override name=value");
        cmd->add_option("--format", opt.format, "output format");
        cmd->add_option("-o,--output", opt.output, "output path (default stdout)");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify the limit set");
    add_common(classify_cmd, false);
    CLI::App* roots_cmd = app.add_subcommand("roots", "zeros of W_n");
    add_common(roots_cmd, true);
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "suite name")->required();
    add_common(verify_cmd, true);
    CLI::App* plot_cmd = app.add_subcommand("plot", "SVG scatter of roots and limit set");
    add_common(plot_cmd, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return cmd_classify(opt);
        if (roots_cmd->parsed()) return cmd_roots(opt);
        if (verify_cmd->parsed()) return cmd_verify(opt, suite);
        if (plot_cmd->parsed()) return cmd_plot(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonConvergence;
    }
    return kExitInputError;
}
