#ifndef RADIAL_RING_HPP
#define RADIAL_RING_HPP

#include <cmath>
#include <optional>
#include <string>

#include "radial/lambda_poly.hpp"
#include "radial/rational.hpp"

namespace radial {

// Coefficient-ring plug for Series<R>. Three instances: exact rationals,
// rational polynomials in the spectral parameter, and binary64.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rat> {
    static constexpr const char* name = "RationalExact";
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_rat(const Rat& q) { return q; }
    static bool is_zero(const Rat& x) { return x.is_zero(); }
    static Rat mul_rat(const Rat& x, const Rat& q) { return x * q; }
    static std::optional<Rat> try_invert(const Rat& x) {
        if (x.is_zero()) return std::nullopt;
        return Rat(1) / x;
    }
};

template <>
struct ring_traits<LambdaPoly> {
    static constexpr const char* name = "RationalPolyLambda";
    static LambdaPoly zero() { return LambdaPoly(); }
    static LambdaPoly one() { return LambdaPoly(1); }
    static LambdaPoly from_rat(const Rat& q) { return LambdaPoly(q); }
    static bool is_zero(const LambdaPoly& x) { return x.is_zero(); }
    static LambdaPoly mul_rat(const LambdaPoly& x, const Rat& q) { return x.scaled(q); }
    // Units of Q[L] are the nonzero constants.
    static std::optional<LambdaPoly> try_invert(const LambdaPoly& x) {
        if (!x.is_constant() || x.is_zero()) return std::nullopt;
        return LambdaPoly(Rat(1) / x.constant_term());
    }
};

template <>
struct ring_traits<double> {
    static constexpr const char* name = "Float64";
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_rat(const Rat& q) { return q.to_double(); }
    static bool is_zero(double x) { return x == 0.0; }
    static double mul_rat(double x, const Rat& q) { return x * q.to_double(); }
    static std::optional<double> try_invert(double x) {
        if (x == 0.0) return std::nullopt;
        return 1.0 / x;
    }
};

} // namespace radial

#endif
