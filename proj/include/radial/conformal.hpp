#ifndef RADIAL_CONFORMAL_HPP
#define RADIAL_CONFORMAL_HPP

#include "radial/series.hpp"
#include "radial/spaces.hpp"

namespace radial {

// Result of the radial deformation g -> e^(2 phi(r)) g around the base point.
// A constant part of phi is a homothety; it is split off into log_scale so
// all series stay exact: the stored coordinate u relates to the true new
// radius by rho = e^(log_scale) u, and theta_tilde is the reduced density of
// the rescaled metric as a series in u.
struct DeformedSpace {
    ModelSpace base;
    Series<Rat> phi;         // the requested conformal exponent (even)
    Rat log_scale;           // phi(0), carried as metadata
    Series<Rat> rho_of_r;    // u(r), odd, unit linear coefficient
    Series<Rat> r_of_rho;    // compositional inverse of u
    Series<Rat> theta_tilde; // deformed reduced density, even, constant 1
};

// Theorem-level contract: the deformed metric is again harmonic at the base
// point; its reduced density in the new radial coordinate is computed here
// exactly.
DeformedSpace deform(const ModelSpace& base, const Series<Rat>& phi, int order);

// Conformal exponent that flattens the density: the deformed space has
// theta_tilde identically 1. Solves u'/u = 1/(r theta_tilde(r)^(1/(m-1)))
// by u(r) = r exp(int_0^r (theta_tilde(t)^(-1/(m-1)) - 1)/t dt), phi = log u'.
Series<Rat> flatten(const ModelSpace& base, int order);

// The paper-facing hypothesis check for a conformal exponent.
bool is_even_factor(const Series<Rat>& phi);

// The literal pointwise prescription e^((m-1)phi) theta_tilde = 1. It does
// not flatten the density in the new radial coordinate (the coordinate
// Jacobian survives); exposed for comparison only.
Series<Rat> flatten_pointwise(const ModelSpace& base, int order);

// Binary64 check of the flattening, independent of series reversion: for a
// grid of radii with rho <= rho_max, evaluates the closed-form density,
// integrates rho(r) by quadrature, and returns the maximum of
// |Theta_deformed(rho)/rho^(m-1) - 1|.
double flatten_numeric_residual(const ModelSpace& base, int order = 80, int grid = 20,
                                double rho_max = 1.0);

} // namespace radial

#endif
