#ifndef RADIAL_NUMERIC_HPP
#define RADIAL_NUMERIC_HPP

#include <functional>
#include <string>
#include <utility>

#include "radial/frobenius.hpp"
#include "radial/series.hpp"
#include "radial/spaces.hpp"

namespace radial {

// State of the first-order system for y'' = -((m-1)/r + xi(r)) y' - lambda y
// on the punctured interval; the equation is singular at r = 0.
struct OdeState {
    double r;
    double y;
    double dy;
};

// The ODE data in binary64: dimension, eigenvalue, and the regular drift
// part as a callable (closed form for model spaces, series for custom ones).
struct OdeProblem {
    int m;
    double lambda;
    std::function<double(double)> xi_tilde;
};

OdeProblem ode_problem(const ModelSpace& sp, double lambda, int series_order = 48);

// One Dormand-Prince 5(4) step from (r, y) with step h; writes the 5th-order
// update into y_out and returns the embedded local error estimate.
double dp54_step(const OdeProblem& prob, double r, const double y[2], double h, double y_out[2]);

// Adaptive integration to r1 with mixed absolute/relative control at tol.
// Throws on step-size underflow or if the path leaves r > 0.
OdeState integrate(const OdeProblem& prob, const OdeState& from, double r1, double tol);

// Residual of the closed-form singular harmonic 1-form coefficient
// psi = cos(cr)^-k sin(cr)^(1-m) (resp. cosh/sinh): |psi' + Xi psi|.
double residual_one_form(const ModelSpace& sp, double r);

// ---------------------------------------------------------------------------
// Series evaluation in binary64

struct EvalResult {
    double value;
    double tail_rel;    // |last stored nonzero term| / |value|
    bool comfortable;   // tail_rel below the configured guard
};

// Horner evaluation of r^offset * poly(r) with a last-term tail heuristic.
EvalResult eval_series(const Series<double>& s, double r, double guard = 1e-14);
EvalResult eval_series(const Series<Rat>& s, double r, double guard = 1e-14);

// A radial solution branch evaluable in binary64: either the regular series
// or the assembled singular branch r^(2-m) sigma + c phi0 log r, with each
// factor evaluated separately.
class BranchEvaluator {
public:
    static BranchEvaluator regular(const Series<Rat>& f0);
    static BranchEvaluator singular(const SingularSolution<Rat>& s);

    // value and radial derivative
    std::pair<double, double> operator()(double r) const;
    double tail_rel(double r) const;

private:
    bool has_log_ = false;
    int sigma_offset_ = 0;
    double log_coefficient_ = 0.0;
    Series<double> main_ = Series<double>::zero(0);   // polynomial factor of the r^offset part
    Series<double> dmain_ = Series<double>::zero(0);
    Series<double> phi0_ = Series<double>::zero(0);
    Series<double> dphi0_ = Series<double>::zero(0);
};

struct CrossValidationReport {
    std::string label;
    double r0 = 0, r1 = 0, tol = 0;
    double series_y0 = 0, series_dy0 = 0;
    double ode_y1 = 0, ode_dy1 = 0;
    double series_y1 = 0, series_dy1 = 0;
    double rel_err_y = 0, rel_err_dy = 0;
    double tail_rel_r0 = 0, tail_rel_r1 = 0;
    bool integrator_ok = true;
    std::string error;
};

// Series data at r0, integrate to r1, compare against the series at r1.
// Failures are reported in the result, never thrown.
CrossValidationReport cross_validate(const OdeProblem& prob, const BranchEvaluator& branch,
                                     double r0, double r1, double tol);

// Composite Gauss-Legendre quadrature of f over [a, b].
double integrate_function(const std::function<double(double)>& f, double a, double b,
                          int panels = 8);

} // namespace radial

#endif
