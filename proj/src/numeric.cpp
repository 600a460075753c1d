#include "radial/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace radial {

OdeProblem ode_problem(const ModelSpace& sp, double lambda, int series_order) {
    OdeProblem prob;
    prob.m = sp.m;
    prob.lambda = lambda;
    if (sp.family == Family::Custom) {
        Series<double> xi = to_float(xi_series(sp, series_order));
        prob.xi_tilde = [xi](double r) { return eval_series(xi, r).value; };
    } else {
        ModelSpace copy = sp;
        prob.xi_tilde = [copy](double r) { return closed_form_xi_tilde(copy, r); };
    }
    return prob;
}

static void rhs(const OdeProblem& prob, double r, const double y[2], double out[2]) {
    double xi = prob.xi_tilde(r);
    out[0] = y[1];
    out[1] = -((prob.m - 1) / r + xi) * y[1] - prob.lambda * y[0];
}

double dp54_step(const OdeProblem& prob, double r, const double y[2], double h, double y_out[2]) {
    static const double c[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1, 1};
    static const double a[7][6] = {
        {},
        {1.0 / 5},
        {3.0 / 40, 9.0 / 40},
        {44.0 / 45, -56.0 / 15, 32.0 / 9},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
        {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
    };
    static const double b5[7] = {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192,
                                 -2187.0 / 6784, 11.0 / 84, 0};
    static const double b4[7] = {5179.0 / 57600, 0, 7571.0 / 16695, 393.0 / 640,
                                 -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

    double k[7][2];
    rhs(prob, r, y, k[0]);
    for (int s = 1; s < 7; ++s) {
        double ys[2];
        for (int d = 0; d < 2; ++d) {
            double acc = y[d];
            for (int j = 0; j < s; ++j) acc += h * a[s][j] * k[j][d];
            ys[d] = acc;
        }
        rhs(prob, r + c[s] * h, ys, k[s]);
    }
    double err = 0.0;
    for (int d = 0; d < 2; ++d) {
        double y5 = y[d], y4 = y[d];
        for (int s = 0; s < 7; ++s) {
            y5 += h * b5[s] * k[s][d];
            y4 += h * b4[s] * k[s][d];
        }
        y_out[d] = y5;
        err = std::max(err, std::abs(y5 - y4));
    }
    return err;
}

OdeState integrate(const OdeProblem& prob, const OdeState& from, double r1, double tol) {
    if (from.r <= 0.0 || r1 <= 0.0) throw std::domain_error("integrate: need r > 0");
    if (tol <= 0.0) throw std::invalid_argument("integrate: need tol > 0");
    double r = from.r;
    double y[2] = {from.y, from.dy};
    double dir = r1 >= r ? 1.0 : -1.0;
    double h = dir * std::min(0.1, std::abs(r1 - r));
    if (h == 0.0) return from;

    int rejected_in_a_row = 0;
    while (dir * (r1 - r) > 0.0) {
        if (std::abs(h) > std::abs(r1 - r)) h = r1 - r;
        if (std::abs(h) < 16.0 * std::numeric_limits<double>::epsilon() * std::abs(r))
            throw std::runtime_error("integrate: step size underflow at r = " + std::to_string(r));
        double ynew[2];
        double err = dp54_step(prob, r, y, h, ynew);
        double scale = tol + tol * std::max({std::abs(y[0]), std::abs(y[1]),
                                             std::abs(ynew[0]), std::abs(ynew[1])});
        double ratio = err / scale;
        if (ratio <= 1.0) {
            r += h;
            y[0] = ynew[0];
            y[1] = ynew[1];
            rejected_in_a_row = 0;
        } else if (++rejected_in_a_row > 60) {
            throw std::runtime_error("integrate: cannot satisfy tolerance at r = " + std::to_string(r));
        }
        double factor = ratio > 0.0 ? 0.9 * std::pow(ratio, -0.2) : 5.0;
        factor = std::min(5.0, std::max(0.2, factor));
        h *= factor;
    }
    return OdeState{r, y[0], y[1]};
}

double residual_one_form(const ModelSpace& sp, double r) {
    if (sp.family != Family::Trig && sp.family != Family::Hyperbolic)
        throw std::domain_error("residual_one_form: needs a Trig or Hyperbolic model");
    double c = sp.scale.to_double();
    double x = c * r;
    double s, co, ds, dco; // s(x), t(x) and their derivatives in r
    if (sp.family == Family::Trig) {
        if (r <= 0.0 || r >= sp.injectivity_radius())
            throw std::domain_error("residual_one_form: r outside the valid range");
        s = std::sin(x);
        co = std::cos(x);
        ds = c * std::cos(x);
        dco = -c * std::sin(x);
    } else {
        if (r <= 0.0) throw std::domain_error("residual_one_form: need r > 0");
        s = std::sinh(x);
        co = std::cosh(x);
        ds = c * std::cosh(x);
        dco = c * std::sinh(x);
    }
    int m = sp.m, k = sp.k;
    double psi = std::pow(co, -k) * std::pow(s, 1 - m);
    // product-rule derivative, independent of the Xi evaluation below
    double dpsi = -k * std::pow(co, -k - 1) * dco * std::pow(s, 1 - m)
                + (1 - m) * std::pow(co, -k) * std::pow(s, -m) * ds;
    double xi_full = (m - 1) * ds / s + k * dco / co;
    return std::abs(dpsi + xi_full * psi);
}

// ---------------------------------------------------------------------------

EvalResult eval_series(const Series<double>& s, double r, double guard) {
    const auto& c = s.coeffs();
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * r + c[i];
    double value = std::pow(r, s.offset()) * acc;
    int last = -1;
    for (int i = s.order(); i >= 0; --i)
        if (c[static_cast<std::size_t>(i)] != 0.0) {
            last = i;
            break;
        }
    EvalResult res;
    res.value = value;
    if (last < 0) {
        res.tail_rel = 0.0;
    } else {
        double term = std::abs(c[static_cast<std::size_t>(last)]) * std::pow(r, last);
        double denom = std::max(std::abs(acc), 1e-300);
        res.tail_rel = term / denom;
    }
    res.comfortable = res.tail_rel <= guard;
    return res;
}

EvalResult eval_series(const Series<Rat>& s, double r, double guard) {
    return eval_series(to_float(s), r, guard);
}

BranchEvaluator BranchEvaluator::regular(const Series<Rat>& f0) {
    BranchEvaluator b;
    b.has_log_ = false;
    b.sigma_offset_ = 0;
    b.main_ = to_float(f0);
    b.dmain_ = to_float(differentiate(f0));
    return b;
}

BranchEvaluator BranchEvaluator::singular(const SingularSolution<Rat>& s) {
    BranchEvaluator b;
    b.has_log_ = true;
    b.sigma_offset_ = s.sigma.offset();
    b.log_coefficient_ = s.log_coefficient.to_double();
    // store the polynomial factor of the Laurent part at offset 0
    b.main_ = Series<double>(0, to_float(s.sigma).coeffs());
    b.dmain_ = differentiate(b.main_);
    b.phi0_ = to_float(s.phi0);
    b.dphi0_ = to_float(differentiate(s.phi0));
    return b;
}

std::pair<double, double> BranchEvaluator::operator()(double r) const {
    double S = eval_series(main_, r).value;
    double dS = eval_series(dmain_, r).value;
    if (!has_log_) return {S, dS};
    double e = sigma_offset_;
    double rp = std::pow(r, e);
    double y = rp * S;
    double dy = rp * dS + e * std::pow(r, e - 1) * S;
    if (log_coefficient_ != 0.0) {
        double F = eval_series(phi0_, r).value;
        double dF = eval_series(dphi0_, r).value;
        double lg = std::log(r);
        y += log_coefficient_ * F * lg;
        dy += log_coefficient_ * (dF * lg + F / r);
    }
    return {y, dy};
}

double BranchEvaluator::tail_rel(double r) const {
    double t = eval_series(main_, r).tail_rel;
    if (has_log_ && log_coefficient_ != 0.0)
        t = std::max(t, eval_series(phi0_, r).tail_rel);
    return t;
}

CrossValidationReport cross_validate(const OdeProblem& prob, const BranchEvaluator& branch,
                                     double r0, double r1, double tol) {
    CrossValidationReport rep;
    rep.r0 = r0;
    rep.r1 = r1;
    rep.tol = tol;
    auto [y0, dy0] = branch(r0);
    auto [y1, dy1] = branch(r1);
    rep.series_y0 = y0;
    rep.series_dy0 = dy0;
    rep.series_y1 = y1;
    rep.series_dy1 = dy1;
    rep.tail_rel_r0 = branch.tail_rel(r0);
    rep.tail_rel_r1 = branch.tail_rel(r1);
    try {
        OdeState end = integrate(prob, OdeState{r0, y0, dy0}, r1, tol);
        rep.ode_y1 = end.y;
        rep.ode_dy1 = end.dy;
    } catch (const std::exception& e) {
        rep.integrator_ok = false;
        rep.error = e.what();
        return rep;
    }
    auto rel = [](double got, double want) {
        double denom = std::max(std::abs(want), 1e-300);
        return std::abs(got - want) / denom;
    };
    rep.rel_err_y = rel(rep.ode_y1, rep.series_y1);
    rep.rel_err_dy = rel(rep.ode_dy1, rep.series_dy1);
    return rep;
}

double integrate_function(const std::function<double(double)>& f, double a, double b, int panels) {
    // 16-point Gauss-Legendre nodes/weights on [-1, 1].
    static const double xs[8] = {
        0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
        0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
    static const double ws[8] = {
        0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
        0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        double lo = a + (b - a) * p / panels;
        double hi = a + (b - a) * (p + 1) / panels;
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double acc = 0.0;
        for (int i = 0; i < 8; ++i)
            acc += ws[i] * (f(mid + half * xs[i]) + f(mid - half * xs[i]));
        total += acc * half;
    }
    return total;
}

} // namespace radial
