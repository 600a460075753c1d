#include "radial/curvature.hpp"

namespace radial {

HCoefficients h_coefficients(const CurvatureTraces& t) {
    HCoefficients h;
    h.H2 = Rat(-1, 6) * t.trJ;
    h.H4 = Rat(1, 72) * t.trJ * t.trJ - Rat(1, 180) * t.trJ2;
    h.H6 = Rat(-1, 1296) * t.trJ * t.trJ * t.trJ
         + Rat(1, 1080) * t.trJ * t.trJ2
         - Rat(1, 2835) * t.trJ3
         + Rat(1, 10080) * t.trJ1sq;
    h.H8 = Rat(1, 31104) * t.trJ * t.trJ * t.trJ * t.trJ
         - Rat(1, 12960) * t.trJ * t.trJ * t.trJ2
         + Rat(1, 17010) * t.trJ * t.trJ3
         - Rat(1, 60480) * t.trJ * t.trJ1sq
         + Rat(1, 64800) * t.trJ2 * t.trJ2
         - Rat(1, 37800) * t.trJ4
         - Rat(1, 340200) * t.trJsqJ2
         + Rat(1, 54432) * t.trJJ1sq
         - Rat(1, 907200) * t.trJ2sq;
    return h;
}

Rat h4_point_harmonic(const CurvatureTraces& t) {
    return Rat(1, 72) * t.trJ * t.trJ - Rat(1, 180) * t.trJ2 - Rat(1, 40) * t.trJ2op;
}

CurvatureTraces traces_from_spectrum(const JacobiSpectrum& s) {
    CurvatureTraces t;
    t.trJ = s.power_sum(1);
    t.trJ2 = s.power_sum(2);
    t.trJ3 = s.power_sum(3);
    t.trJ4 = s.power_sum(4);
    return t;
}

} // namespace radial
