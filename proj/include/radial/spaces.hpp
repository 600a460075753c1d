#ifndef RADIAL_SPACES_HPP
#define RADIAL_SPACES_HPP

#include <string>
#include <utility>
#include <vector>

#include "radial/series.hpp"

namespace radial {

enum class Family { Flat, Trig, Hyperbolic, Custom };

struct JacobiSpectrum {
    // (eigenvalue, multiplicity) pairs; multiplicities sum to m-1.
    std::vector<std::pair<Rat, int>> entries;

    Rat power_sum(int p) const;
    int total_multiplicity() const;
};

// A model space harmonic about the base point, described by its volume
// density. Trig densities are (sin(cr)/c)^(m-1) cos(cr)^k, hyperbolic ones
// the sinh/cosh analogue, normalized so the reduced density starts at 1.
struct ModelSpace {
    Family family = Family::Flat;
    int m = 2;          // dimension
    int k = 0;          // cut-locus exponent (0 spheres, 1 complex, 3 quaternionic)
    Rat scale = Rat(1); // curvature scale c > 0
    Series<Rat> custom_theta_tilde = Series<Rat>::one(0); // Custom family only
    std::string name;

    // Largest radius on which the polar coordinate chart is valid
    // (infinity is reported as 0 meaning "unbounded").
    double injectivity_radius() const;
};

ModelSpace flat_space(int m);
ModelSpace trig_space(int m, int k, const Rat& scale = Rat(1));
ModelSpace hyperbolic_space(int m, int k, const Rat& scale = Rat(1));
ModelSpace custom_space(int m, const Series<Rat>& theta_tilde);

// Reduced density Theta/r^(m-1) as an exact even series with constant term 1.
Series<Rat> density_series(const ModelSpace& sp, int order);

// Regular drift part: d/dr log of the reduced density (odd, vanishing at 0).
Series<Rat> xi_series(const ModelSpace& sp, int order);

// Binary64 evaluation of the full density Theta(r).
double closed_form_theta(const ModelSpace& sp, double r);

// Full drift Xi(r) = (m-1)/r + xi_tilde(r) and the regular part alone,
// from the closed forms (Flat/Trig/Hyperbolic only).
double closed_form_xi_tilde(const ModelSpace& sp, double r);

JacobiSpectrum jacobi_spectrum(const ModelSpace& sp);

// The fourteen rank-one model spaces with golden log-obstruction data.
const std::vector<ModelSpace>& catalog();

// Resolve a CLI name: catalog entries ("S4", "CP2~", ...), "Flat" (with m),
// "DR:m,k" for the hyperbolic family with free exponent.
ModelSpace space_by_name(const std::string& name, int m_hint = 0, const Rat& scale = Rat(1));

} // namespace radial

#endif
