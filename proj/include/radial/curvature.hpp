#ifndef RADIAL_CURVATURE_HPP
#define RADIAL_CURVATURE_HPP

#include "radial/rational.hpp"
#include "radial/spaces.hpp"

namespace radial {

// Traces of the Jacobi operator J along a unit direction and of its
// covariant derivatives J1, J2. Only traces enter the density asymptotics,
// so the operator itself is never materialized.
struct CurvatureTraces {
    Rat trJ;       // Tr{J}
    Rat trJ2;      // Tr{J^2}
    Rat trJ3;      // Tr{J^3}
    Rat trJ4;      // Tr{J^4}
    Rat trJ1sq;    // Tr{J1^2}
    Rat trJJ1sq;   // Tr{J J1^2}
    Rat trJsqJ2;   // Tr{J^2 J2}
    Rat trJ2sq;    // Tr{J2^2}
    Rat trJ2op;    // Tr{J2}, used only by the point-harmonic H4 correction
};

struct HCoefficients {
    Rat H2, H4, H6, H8;
};

// Density asymptotics H2..H8 of the reduced volume density from the trace
// record, valid when the density is radial around every point.
HCoefficients h_coefficients(const CurvatureTraces& t);

// H4 when the space is only harmonic at the base point; the extra Tr{J2}
// term vanishes on honest harmonic spaces.
Rat h4_point_harmonic(const CurvatureTraces& t);

// Power sums of a parallel Jacobi spectrum; all derivative traces are zero.
CurvatureTraces traces_from_spectrum(const JacobiSpectrum& s);

} // namespace radial

#endif
