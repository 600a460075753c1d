#include "radial/conformal.hpp"

#include <cmath>
#include <stdexcept>

#include "radial/numeric.hpp"

namespace radial {

bool is_even_factor(const Series<Rat>& phi) { return phi.is_even(); }

DeformedSpace deform(const ModelSpace& base, const Series<Rat>& phi, int order) {
    if (order < 4) throw std::invalid_argument("deform: order must be >= 4");
    if (phi.offset() < 0) throw std::invalid_argument("deform: factor must be analytic");
    if (!is_even_factor(phi)) throw std::invalid_argument("deform: factor must be even");

    int n = std::min(order, phi.known_through());
    DeformedSpace out;
    out.base = base;
    out.phi = phi;
    out.log_scale = phi.coeff(0);

    Series<Rat> psi = phi.truncated(n) - Series<Rat>::constant(out.log_scale, n);
    Series<Rat> growth = exp(psi);             // e^(phi - phi(0)), constant term 1
    out.rho_of_r = integrate(growth);          // u(r), odd, order n+1
    out.r_of_rho = revert(out.rho_of_r);

    // Reduced density in the r coordinate:
    //   F(r) = e^((m-1)(phi-phi(0))) theta_tilde_base(r) (r/u(r))^(m-1)
    Series<Rat> u_over_r = out.rho_of_r.shifted(-1);
    Series<Rat> F = powi(growth, base.m - 1) * density_series(base, n)
                  * powi(u_over_r, -(base.m - 1));
    out.theta_tilde = compose(F, out.r_of_rho);
    return out;
}

Series<Rat> flatten(const ModelSpace& base, int order) {
    Series<Rat> d = density_series(base, order);
    Series<Rat> w = pow_rational(d, Rat(-1, base.m - 1));
    Series<Rat> integrand = (w - Series<Rat>::one(order)).shifted(-1);
    Series<Rat> u = exp(integrate(integrand)).shifted(1); // r * exp(I(r))
    return log(differentiate(u));
}

Series<Rat> flatten_pointwise(const ModelSpace& base, int order) {
    // log of theta_tilde^(-1/(m-1)); satisfies e^((m-1)phi) theta_tilde = 1
    // at each r but leaves the density in the new coordinate unflattened.
    return log(density_series(base, order)).scaled(Rat(-1, base.m - 1));
}

double flatten_numeric_residual(const ModelSpace& base, int order, int grid, double rho_max) {
    Series<double> phi = to_float(flatten(base, order));
    int m = base.m;
    auto growth = [&](double t) { return std::exp(eval_series(phi, t).value); };
    auto rho_at = [&](double r) { return integrate_function(growth, 0.0, r, 8); };

    // largest r with rho(r) <= rho_max, by bisection
    double lo = 0.0, hi = rho_max;
    while (rho_at(hi) < rho_max) {
        lo = hi;
        hi *= 1.5;
        if (base.family == Family::Trig && hi >= base.injectivity_radius()) {
            hi = 0.999 * base.injectivity_radius();
            break;
        }
    }
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        if (rho_at(mid) <= rho_max) lo = mid;
        else hi = mid;
    }
    double r_top = lo;

    double worst = 0.0;
    for (int i = 1; i <= grid; ++i) {
        double r = r_top * i / grid;
        double rho = rho_at(r);
        double theta = closed_form_theta(base, r);
        double deformed = std::exp((m - 1) * eval_series(phi, r).value) * theta;
        double ratio = deformed / std::pow(rho, m - 1);
        worst = std::max(worst, std::abs(ratio - 1.0));
    }
    return worst;
}

} // namespace radial
