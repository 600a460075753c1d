#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "radial/conformal.hpp"
#include "radial/curvature.hpp"
#include "radial/frobenius.hpp"
#include "radial/numeric.hpp"
#include "radial/series_io.hpp"
#include "radial/verify.hpp"

namespace {

using namespace radial;

struct CommonOpts {
    std::string space;
    std::string density_json;
    int m = 0;
    int order = 40;
    std::string lambda;
    bool symbolic = false;
    std::string format = "text";
    std::string out;
    std::string scale = "1";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_lambda) {
    cmd->add_option("--space", o.space, "catalog name, Flat, DR:m,k, or custom:<json>");
    cmd->add_option("--density-json", o.density_json, "path to (or inline) custom density JSON");
    cmd->add_option("--m", o.m, "dimension (Flat or bare custom density)");
    cmd->add_option("--order", o.order, "truncation order")->default_val(40);
    cmd->add_option("--scale", o.scale, "curvature scale c as p/q")->default_val("1");
    if (with_lambda) {
        cmd->add_option("--lambda", o.lambda, "eigenvalue as p/q");
        cmd->add_flag("--symbolic", o.symbolic, "keep the eigenvalue symbolic");
    }
    cmd->add_option("--format", o.format, "text, json, or csv")->default_val("text");
    cmd->add_option("--out", o.out, "write output to a file instead of stdout");
}

json parse_json_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open '" + arg + "'");
    json j;
    in >> j;
    return j;
}

ModelSpace resolve_space(const CommonOpts& o) {
    const bool have_name = !o.space.empty();
    const bool have_density = !o.density_json.empty();
    if (have_name == have_density)
        throw std::invalid_argument("exactly one of --space and --density-json is required");
    if (have_density) return custom_space_from_json(parse_json_arg(o.density_json), o.m);
    if (o.space.rfind("custom:", 0) == 0)
        return custom_space_from_json(json::parse(o.space.substr(7)), o.m);
    return space_by_name(o.space, o.m, Rat::from_string(o.scale));
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(o.out);
        if (!f) throw std::runtime_error("cannot write '" + o.out + "'");
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
    }
}

std::string f17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string series_pretty(const Series<Rat>& s) {
    std::string out;
    for (int p = s.offset(); p <= s.known_through(); ++p) {
        Rat c = s.coeff(p);
        if (c.is_zero()) continue;
        std::string term = c.str();
        if (p != 0) term += " r^" + std::to_string(p);
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

std::string series_pretty(const Series<LambdaPoly>& s) {
    std::string out;
    for (int p = s.offset(); p <= s.known_through(); ++p) {
        LambdaPoly c = s.coeff(p);
        if (c.is_zero()) continue;
        std::string term = "(" + c.str("lambda") + ")";
        if (p != 0) term += " r^" + std::to_string(p);
        if (out.empty()) out = term;
        else out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

std::string series_csv(const Series<Rat>& s) {
    std::string out = "power,coefficient\n";
    for (int p = s.offset(); p <= s.known_through(); ++p)
        out += std::to_string(p) + "," + f17(s.coeff(p).to_double()) + "\n";
    return out;
}

int cmd_density(const CommonOpts& o) {
    ModelSpace sp = resolve_space(o);
    Series<Rat> d = density_series(sp, o.order);
    if (o.format == "json") {
        json j = {{"space", sp.name}, {"m", sp.m}, {"theta_tilde", to_json(d)},
                  {"xi_tilde", to_json(xi_series(sp, o.order))}};
        emit(o, j.dump(2));
    } else if (o.format == "csv") {
        emit(o, series_csv(d));
    } else {
        emit(o, series_pretty(d));
    }
    return 0;
}

int cmd_hcoeffs(const CommonOpts& o, const std::string& traces_arg) {
    CurvatureTraces t;
    std::string label;
    if (!traces_arg.empty()) {
        if (!o.space.empty() || !o.density_json.empty())
            throw std::invalid_argument("give either --traces or a space, not both");
        json j = parse_json_arg(traces_arg);
        auto get = [&](const char* key) {
            return j.contains(key) ? Rat::from_string(j.at(key).get<std::string>()) : Rat(0);
        };
        t.trJ = get("trJ");
        t.trJ2 = get("trJ2");
        t.trJ3 = get("trJ3");
        t.trJ4 = get("trJ4");
        t.trJ1sq = get("trJ1sq");
        t.trJJ1sq = get("trJJ1sq");
        t.trJsqJ2 = get("trJsqJ2");
        t.trJ2sq = get("trJ2sq");
        t.trJ2op = get("trJ2op");
        label = "traces";
    } else {
        ModelSpace sp = resolve_space(o);
        t = traces_from_spectrum(jacobi_spectrum(sp));
        label = sp.name;
    }
    HCoefficients h = h_coefficients(t);
    json j = {{"input", label},
              {"H2", h.H2.str()},
              {"H4", h.H4.str()},
              {"H6", h.H6.str()},
              {"H8", h.H8.str()},
              {"H4_point_harmonic", h4_point_harmonic(t).str()}};
    if (o.format == "csv") {
        std::string out = "coefficient,value\n";
        out += "H2," + f17(h.H2.to_double()) + "\n";
        out += "H4," + f17(h.H4.to_double()) + "\n";
        out += "H6," + f17(h.H6.to_double()) + "\n";
        out += "H8," + f17(h.H8.to_double()) + "\n";
        emit(o, out);
    } else if (o.format == "json") {
        emit(o, j.dump(2));
    } else {
        emit(o, "H2 = " + h.H2.str() + "\nH4 = " + h.H4.str() + "\nH6 = " + h.H6.str() +
                    "\nH8 = " + h.H8.str());
    }
    return 0;
}

int cmd_logconst(const CommonOpts& o) {
    ModelSpace sp = resolve_space(o);
    LambdaPoly c = log_constant(symbolic_operator_for(sp, sp.m));
    if (!o.symbolic && !o.lambda.empty()) {
        Rat v = c.eval(Rat::from_string(o.lambda));
        if (o.format == "json")
            emit(o, json{{"space", sp.name}, {"lambda", o.lambda}, {"logC", v.str()}}.dump(2));
        else emit(o, v.str());
        return 0;
    }
    if (o.format == "json")
        emit(o, json{{"space", sp.name}, {"logC", to_json(c)}, {"pretty", c.str("lambda")}}.dump(2));
    else emit(o, c.str("lambda") + "   coefficients " + to_json(c).dump());
    return 0;
}

int cmd_eigen(const CommonOpts& o, bool numeric, double r0, double r1, double tol) {
    ModelSpace sp = resolve_space(o);
    const int N = std::max(o.order, sp.m);
    RadialOperator<LambdaPoly> op = symbolic_operator_for(sp, N);
    EigenBasis basis = eigenbasis(op, N);

    json j = {{"space", sp.name}, {"m", sp.m}, {"order", N}};
    std::optional<Rat> lambda_value;
    if (!o.lambda.empty() && !o.symbolic) lambda_value = Rat::from_string(o.lambda);

    if (lambda_value) {
        j["lambda"] = lambda_value->str();
        j["f0"] = to_json(specialize_lambda(basis.f0, *lambda_value));
        j["f1"] = {{"main", to_json(specialize_lambda(basis.f1.main, *lambda_value))},
                   {"logpart", to_json(specialize_lambda(basis.f1.logpart, *lambda_value))}};
        j["w0"] = to_json(specialize_lambda(basis.w0, *lambda_value));
        j["w1"] = {{"main", to_json(specialize_lambda(basis.w1.main, *lambda_value))},
                   {"logpart", to_json(specialize_lambda(basis.w1.logpart, *lambda_value))}};
        j["logC"] = basis.log_constant.eval(*lambda_value).str();
        j["normalization"] = basis.normalization;
    } else {
        j["lambda"] = "symbolic";
        j.update(to_json(basis));
    }

    if (numeric) {
        if (!lambda_value)
            throw std::invalid_argument("--numeric needs a numeric --lambda");
        double lv = lambda_value->to_double();
        OdeProblem prob = ode_problem(sp, lv);
        RadialOperator<Rat> opn = operator_for(sp, *lambda_value, N);
        auto reg = cross_validate(prob, BranchEvaluator::regular(solve_regular(opn, N)), r0, r1, tol);
        auto sng = cross_validate(prob, BranchEvaluator::singular(solve_singular(opn, N)), r0, r1, tol);
        auto rep_json = [](const CrossValidationReport& r) {
            return json{{"r0", r.r0}, {"r1", r.r1}, {"tol", r.tol},
                        {"series_y0", r.series_y0}, {"series_dy0", r.series_dy0},
                        {"ode_y1", r.ode_y1}, {"ode_dy1", r.ode_dy1},
                        {"series_y1", r.series_y1}, {"series_dy1", r.series_dy1},
                        {"rel_err_y", r.rel_err_y}, {"rel_err_dy", r.rel_err_dy},
                        {"tail_rel_r0", r.tail_rel_r0}, {"tail_rel_r1", r.tail_rel_r1},
                        {"integrator_ok", r.integrator_ok}, {"error", r.error}};
        };
        j["crossval"] = {{"regular", rep_json(reg)}, {"singular", rep_json(sng)}};
        if (o.format == "csv") {
            // profile dump for plotting: both branches sampled on [r0, r1]
            RadialOperator<Rat> opc = operator_for(sp, *lambda_value, N);
            BranchEvaluator fr = BranchEvaluator::regular(solve_regular(opc, N));
            BranchEvaluator fs = BranchEvaluator::singular(solve_singular(opc, N));
            std::string out = "branch,r,y,dy\n";
            for (int i = 0; i <= 50; ++i) {
                double r = r0 + (r1 - r0) * i / 50.0;
                auto [y, dy] = fr(r);
                out += "regular," + f17(r) + "," + f17(y) + "," + f17(dy) + "\n";
                auto [ys, dys] = fs(r);
                out += "singular," + f17(r) + "," + f17(ys) + "," + f17(dys) + "\n";
            }
            emit(o, out);
            return 0;
        }
    }

    if (o.format == "csv" && !numeric) {
        if (lambda_value) emit(o, series_csv(specialize_lambda(basis.f0, *lambda_value)));
        else throw std::invalid_argument("csv output of a symbolic basis is not defined; use json");
        return 0;
    }
    if (o.format == "text") {
        std::string out;
        if (lambda_value) {
            out += "f0 = " + series_pretty(specialize_lambda(basis.f0, *lambda_value)) + "\n";
            out += "f1 = [" + series_pretty(specialize_lambda(basis.f1.main, *lambda_value)) + "] + [" +
                   series_pretty(specialize_lambda(basis.f1.logpart, *lambda_value)) + "] log r\n";
            out += "logC = " + basis.log_constant.eval(*lambda_value).str() + "\n";
        } else {
            out += "f0 = " + series_pretty(basis.f0) + "\n";
            out += "w0 = " + series_pretty(basis.w0) + "\n";
            out += "logC = " + basis.log_constant.str("lambda") + "\n";
        }
        out += "normalization: " + basis.normalization;
        emit(o, out);
        return 0;
    }
    emit(o, j.dump(2));
    return 0;
}

int cmd_deform(const CommonOpts& o, const std::string& phi_arg, bool do_flatten) {
    ModelSpace sp = resolve_space(o);
    Series<Rat> phi = Series<Rat>::zero(o.order);
    if (do_flatten) {
        if (!phi_arg.empty()) throw std::invalid_argument("--phi and --flatten are exclusive");
        phi = flatten(sp, o.order);
    } else {
        if (phi_arg.empty()) throw std::invalid_argument("deform needs --phi or --flatten");
        // user-supplied factors are exact polynomials; extend to the order
        phi = rat_series_from_json(parse_json_arg(phi_arg)).extended_with_zeros(o.order);
    }
    DeformedSpace d = deform(sp, phi, o.order);
    if (o.format == "json") {
        json j = {{"space", sp.name},
                  {"m", sp.m},
                  {"phi", to_json(d.phi)},
                  {"log_scale", d.log_scale.str()},
                  {"rho_of_r", to_json(d.rho_of_r)},
                  {"r_of_rho", to_json(d.r_of_rho)},
                  {"theta_tilde", to_json(d.theta_tilde)}};
        emit(o, j.dump(2));
    } else if (o.format == "csv") {
        emit(o, series_csv(d.theta_tilde));
    } else {
        emit(o, "phi         = " + series_pretty(d.phi) + "\nrho(r)      = " +
                    series_pretty(d.rho_of_r) + "\ntheta_tilde = " + series_pretty(d.theta_tilde));
    }
    return 0;
}

int cmd_verify(bool list_only) {
    if (list_only) {
        for (const auto& c : acceptance_criteria())
            std::cout << c.id << "  " << c.title << "\n";
        return 0;
    }
    bool ok = run_acceptance([](const std::string& line) { std::cout << line << "\n"; });
    return ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"radial: exact and numeric radial Laplace eigenfunctions on model densities"};
    app.require_subcommand(1);

    CommonOpts od, oh, oe, ol, ocf;
    std::string traces_arg, phi_arg;
    bool numeric = false, do_flatten = false, list_only = false;
    double r0 = 0.5, r1 = 1.0, tol = 1e-10;

    auto* density = app.add_subcommand("density", "reduced volume density as an exact series");
    add_common(density, od, false);

    auto* hco = app.add_subcommand("hcoeffs", "density asymptotics from Jacobi traces");
    add_common(hco, oh, false);
    hco->add_option("--traces", traces_arg, "trace record JSON (trJ, trJ2, ...)");

    auto* eig = app.add_subcommand("eigen", "radial eigenbasis (regular + singular branches)");
    add_common(eig, oe, true);
    eig->add_flag("--numeric", numeric, "cross-validate against the ODE integrator");
    eig->add_option("--r0", r0, "cross-validation start radius")->default_val(0.5);
    eig->add_option("--r1", r1, "cross-validation end radius")->default_val(1.0);
    eig->add_option("--tol", tol, "integrator tolerance")->default_val(1e-10);

    auto* logc = app.add_subcommand("logconst", "log obstruction constant");
    add_common(logc, ol, true);

    auto* def = app.add_subcommand("deform", "radial conformal deformation");
    add_common(def, ocf, false);
    def->add_option("--phi", phi_arg, "conformal exponent as series JSON (even polynomial)");
    def->add_flag("--flatten", do_flatten, "choose the density-flattening exponent");

    auto* ver = app.add_subcommand("verify", "run the verification suite");
    ver->add_flag("--list", list_only, "list criteria without running them");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (density->parsed()) return cmd_density(od);
        if (hco->parsed()) return cmd_hcoeffs(oh, traces_arg);
        if (eig->parsed()) return cmd_eigen(oe, numeric, r0, r1, tol);
        if (logc->parsed()) return cmd_logconst(ol);
        if (def->parsed()) return cmd_deform(ocf, phi_arg, do_flatten);
        if (ver->parsed()) return cmd_verify(list_only);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
