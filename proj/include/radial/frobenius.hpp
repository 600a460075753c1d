#ifndef RADIAL_FROBENIUS_HPP
#define RADIAL_FROBENIUS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "radial/series.hpp"
#include "radial/spaces.hpp"

namespace radial {

// The radial Laplace operator P(y) = y'' + ((m-1)/r + xi(r)) y' + lambda y
// acting on functions of the geodesic radius. xi is the regular drift part
// (odd, vanishing at 0); lambda lives in the coefficient ring, so it can be
// an exact rational or the polynomial indeterminate.
template <class R>
struct RadialOperator {
    int m;
    R lambda;
    Series<R> xi;
};

template <class R>
RadialOperator<R> make_operator(int m, const R& lambda, const Series<R>& xi) {
    if (m < 2) throw std::invalid_argument("RadialOperator: dimension must be >= 2");
    if (!xi.is_odd() || !ring_traits<R>::is_zero(xi.coeff(0)))
        throw std::invalid_argument("RadialOperator: drift must be odd with zero constant term");
    return RadialOperator<R>{m, lambda, xi};
}

inline RadialOperator<Rat> operator_for(const ModelSpace& sp, const Rat& lambda, int order) {
    return make_operator(sp.m, lambda, xi_series(sp, order + 2));
}

inline RadialOperator<LambdaPoly> symbolic_operator_for(const ModelSpace& sp, int order) {
    return make_operator(sp.m, LambdaPoly::variable(), lift_to_lambda(xi_series(sp, order + 2)));
}

// main + logpart * log(r); the pair form keeps the singular branch exact.
template <class R>
struct LogSeries {
    Series<R> main;
    Series<R> logpart;
};

template <class R>
LogSeries<R> differentiate_log(const LogSeries<R>& a) {
    return {differentiate(a.main) + a.logpart.shifted(-1), differentiate(a.logpart)};
}

template <class R>
Series<R> apply_operator(const RadialOperator<R>& op, const Series<R>& y) {
    Series<R> dy = differentiate(y);
    return differentiate(dy) + dy.shifted(-1).scaled(Rat(op.m - 1)) + op.xi * dy
         + y.scaled_by(op.lambda);
}

// P(u + v log r) = [P(u) + 2 v'/r + (m-2) v/r^2 + xi v/r] + P(v) log r.
template <class R>
LogSeries<R> apply_operator_log(const RadialOperator<R>& op, const LogSeries<R>& y) {
    Series<R> cross = differentiate(y.logpart).shifted(-1).scaled(Rat(2))
                    + y.logpart.shifted(-2).scaled(Rat(op.m - 2))
                    + (op.xi * y.logpart).shifted(-1);
    return {apply_operator(op, y.main) + cross, apply_operator(op, y.logpart)};
}

// ---------------------------------------------------------------------------
// Regular branch

// Coefficient recursion for P(psi) = eta with psi(0) = 1, psi'(0) = 0:
//   psi_k = -(lambda psi_{k-2} - eta_{k-2} + sum_{i+j=k-1, i>=1} j xi_i psi_j)
//           / (k (m+k-2)).
// The denominator never vanishes for k >= 1, m >= 2.
template <class R>
Series<R> solve_regular(const RadialOperator<R>& op, const Series<R>& eta, int order) {
    using T = ring_traits<R>;
    if (order < 2) throw std::invalid_argument("solve_regular: order must be >= 2");
    if (eta.offset() < 0)
        throw std::invalid_argument("solve_regular: source term must be analytic");
    if (eta.known_through() < order - 2 || op.xi.known_through() < order - 1)
        throw std::invalid_argument("solve_regular: inputs known to insufficient order");
    std::vector<R> psi(static_cast<std::size_t>(order) + 1, T::zero());
    psi[0] = T::one();
    for (int k = 2; k <= order; ++k) {
        R acc = op.lambda * psi[static_cast<std::size_t>(k - 2)] - eta.coeff(k - 2);
        for (int j = 1; j <= k - 2; ++j) {
            const R& xi_i = op.xi.coeff(k - 1 - j);
            if (T::is_zero(xi_i)) continue;
            acc = acc + T::mul_rat(xi_i * psi[static_cast<std::size_t>(j)], Rat(j));
        }
        psi[static_cast<std::size_t>(k)] = T::mul_rat(acc, Rat(-1, k * (op.m + k - 2)));
    }
    return Series<R>(0, std::move(psi));
}

template <class R>
Series<R> solve_regular(const RadialOperator<R>& op, int order) {
    return solve_regular(op, Series<R>::zero(std::max(order - 2, 0)), order);
}

// ---------------------------------------------------------------------------
// Singular branch

template <class R>
struct SingularSolution {
    // m >= 3: the full solution is r^(2-m) sigma(r) + logCoefficient phi0 log r
    // with sigma stored at leading exponent 2-m and sigma(0) = 1.
    // m = 2: sigma is analytic and the solution is sigma + phi0 log r.
    Series<R> sigma;
    R log_constant;    // the obstruction C; zero polynomial for odd m
    R log_coefficient; // C/(m-2) for m >= 3, fixed 1 for m = 2
    Series<R> phi0;    // regular companion used in the log term
    Series<R> eta;     // analytic part of P(phi0 log r) - (m-2) r^-2
    std::string normalization;

    LogSeries<R> assembled() const {
        return {sigma, phi0.scaled_by(log_coefficient)};
    }
};

// Analytic remainder of P(phi0 log r), regrouped so each term is visibly
// regular: eta = 2 phi0'/r + phi0 xi/r + (m-2)(phi0 - 1)/r^2.
template <class R>
Series<R> log_source_eta(const RadialOperator<R>& op, const Series<R>& phi0) {
    Series<R> eta = differentiate(phi0).shifted(-1).scaled(Rat(2))
                  + (phi0 * op.xi).shifted(-1)
                  + (phi0 - Series<R>::one(phi0.order())).shifted(-2).scaled(Rat(op.m - 2));
    if (eta.offset() < 0)
        throw std::logic_error("log_source_eta: singular remainder did not cancel");
    return eta;
}

// Frobenius construction of the second solution at the singular indicial
// root. One code path for every dimension >= 3: run the sigma recursion,
// read the obstruction at the resonant index m-2, bridge it with a log term
// and fold the analytic remainder back into the source. For m = 2 the
// indicial root is double and the log term always appears with weight 1.
template <class R>
SingularSolution<R> solve_singular(const RadialOperator<R>& op, int order,
                                   const Rat& resonant_value = Rat(0)) {
    using T = ring_traits<R>;
    if (order < op.m) throw std::invalid_argument("solve_singular: order must be >= m");
    SingularSolution<R> out;
    out.phi0 = solve_regular(op, order);

    if (op.m == 2) {
        out.eta = log_source_eta(op, out.phi0);
        out.sigma = solve_regular(op, -out.eta, order);
        out.log_constant = T::one();
        out.log_coefficient = T::one();
        out.normalization = "m=2 double root: sigma(0)=1, log weight 1";
        return out;
    }

    out.eta = log_source_eta(op, out.phi0);
    const int m = op.m;
    std::vector<R> sigma(static_cast<std::size_t>(order) + 1, T::zero());
    sigma[0] = T::one();
    R log_coef = T::zero();
    bool have_log = false;
    for (int j = 1; j <= order; ++j) {
        R rhs = T::zero();
        if (j >= 2) rhs = op.lambda * sigma[static_cast<std::size_t>(j - 2)];
        for (int jp = 0; jp <= j - 2; ++jp) {
            const R& xi_i = op.xi.coeff(j - 1 - jp);
            if (T::is_zero(xi_i)) continue;
            rhs = rhs + T::mul_rat(xi_i * sigma[static_cast<std::size_t>(jp)], Rat(2 - m + jp));
        }
        if (have_log && j >= m) rhs = rhs + log_coef * out.eta.coeff(j - m);
        if (j == m - 2) {
            out.log_constant = -rhs;
            log_coef = T::mul_rat(out.log_constant, Rat(1, m - 2));
            have_log = true;
            sigma[static_cast<std::size_t>(j)] = T::from_rat(resonant_value);
        } else {
            sigma[static_cast<std::size_t>(j)] = T::mul_rat(rhs, Rat(-1, j * (j + 2 - m)));
        }
    }
    out.log_coefficient = log_coef;
    out.sigma = Series<R>(2 - m, std::move(sigma));
    out.normalization = "resonant coefficient sigma[m-2] = " + resonant_value.str();
    return out;
}

// The log obstruction alone; computed at the smallest admissible order.
template <class R>
R log_constant(const RadialOperator<R>& op) {
    int order = std::max(op.m, 2);
    if (op.xi.known_through() < order - 1)
        throw std::invalid_argument("log_constant: drift known to insufficient order");
    return solve_singular(op, order).log_constant;
}

// ---------------------------------------------------------------------------
// Eigenbasis (symbolic ring only; the lambda-division must be exact)

struct EigenBasis {
    Series<LambdaPoly> f0;
    LogSeries<LambdaPoly> f1;
    Series<LambdaPoly> w0; // 1-form coefficient, -(m/lambda) f0'
    LogSeries<LambdaPoly> w1;
    LambdaPoly log_constant;
    std::string normalization;
};

inline EigenBasis eigenbasis(const RadialOperator<LambdaPoly>& op, int order) {
    EigenBasis basis;
    basis.f0 = solve_regular(op, order);
    SingularSolution<LambdaPoly> sing = solve_singular(op, order);
    basis.f1 = sing.assembled();
    basis.log_constant = sing.log_constant;
    basis.normalization = sing.normalization;

    Series<LambdaPoly> d = differentiate(basis.f0);
    std::vector<LambdaPoly> w0(d.coeffs());
    for (auto& p : w0) p = p.divided_by_lambda().scaled(Rat(-op.m));
    basis.w0 = Series<LambdaPoly>(d.offset(), std::move(w0));
    basis.w1 = differentiate_log(basis.f1);
    return basis;
}

// ---------------------------------------------------------------------------
// Convergence certificate from the inductive majorant bound

struct KappaCertificate {
    Rat kappa;    // smallest power of two > 1 dominating drift, source, lambda
    bool verdict; // |psi_k| <= kappa^(k+1) for every computed k
    int first_failure = -1;
};

inline KappaCertificate kappa_certificate(const RadialOperator<Rat>& op,
                                          const Series<Rat>& eta, int order) {
    auto dominated = [&](const Rat& kappa) {
        if (abs(op.lambda) > kappa) return false;
        for (int nu = 1; nu <= std::min(order, op.xi.known_through()); ++nu)
            if (abs(op.xi.coeff(nu)) > pow(kappa, nu + 1)) return false;
        for (int nu = 0; nu <= std::min(order, eta.known_through()); ++nu)
            if (abs(eta.coeff(nu)) > pow(kappa, nu + 1)) return false;
        return true;
    };
    Rat kappa(2);
    while (!dominated(kappa)) {
        kappa *= Rat(2);
        if (kappa > pow(Rat(2), 64))
            throw std::runtime_error("kappa_certificate: no reasonable majorant");
    }
    Series<Rat> psi = solve_regular(op, eta, order);
    KappaCertificate cert{kappa, true, -1};
    for (int k = 0; k <= order; ++k) {
        if (abs(psi.coeff(k)) > pow(kappa, k + 1)) {
            cert.verdict = false;
            cert.first_failure = k;
            break;
        }
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Ring changes for the assembled objects

inline LogSeries<Rat> specialize_lambda(const LogSeries<LambdaPoly>& a, const Rat& v) {
    return {specialize_lambda(a.main, v), specialize_lambda(a.logpart, v)};
}

inline SingularSolution<Rat> specialize_lambda(const SingularSolution<LambdaPoly>& s, const Rat& v) {
    SingularSolution<Rat> out;
    out.sigma = specialize_lambda(s.sigma, v);
    out.log_constant = s.log_constant.eval(v);
    out.log_coefficient = s.log_coefficient.eval(v);
    out.phi0 = specialize_lambda(s.phi0, v);
    out.eta = specialize_lambda(s.eta, v);
    out.normalization = s.normalization;
    return out;
}

} // namespace radial

#endif
