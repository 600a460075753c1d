#ifndef RADIAL_SERIES_HPP
#define RADIAL_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "radial/ring.hpp"

namespace radial {

// Truncated power series r^offset * (c_0 + c_1 r + ... + c_order r^order),
// known modulo r^(offset+order+1). The offset is an integer leading
// exponent, so Laurent-type objects like r^(2-m)*sigma(r) fit the same type.
//
// Arithmetic truncates to the tightest window supported by both operands;
// mixing orders never throws. Canonical form keeps offset <= 0, and a
// negative offset only when the leading coefficient is genuinely nonzero.
template <class R>
class Series {
public:
    using traits = ring_traits<R>;

    Series() : offset_(0), c_{traits::zero()} {}

    Series(int offset, std::vector<R> coeffs) : offset_(offset), c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("Series: needs at least one coefficient");
        normalize();
    }

    static Series constant(const R& value, int order) {
        std::vector<R> c(static_cast<std::size_t>(order) + 1, traits::zero());
        c[0] = value;
        return Series(0, std::move(c));
    }
    static Series zero(int order) { return constant(traits::zero(), order); }
    static Series one(int order) { return constant(traits::one(), order); }
    // The identity series r.
    static Series identity(int order) { return monomial(1, traits::one(), order); }
    static Series monomial(int power, const R& value, int order) {
        if (power < 0) {
            std::vector<R> c(static_cast<std::size_t>(order) + 1, traits::zero());
            c[0] = value;
            return Series(power, std::move(c));
        }
        if (order < power) throw std::invalid_argument("Series::monomial: order < power");
        std::vector<R> c(static_cast<std::size_t>(order) + 1, traits::zero());
        c[static_cast<std::size_t>(power)] = value;
        return Series(0, std::move(c));
    }

    int offset() const { return offset_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    // Highest absolute power whose coefficient is trusted.
    int known_through() const { return offset_ + order(); }
    const std::vector<R>& coeffs() const { return c_; }

    // Coefficient of r^power. Zero below the leading exponent; asking past
    // the truncation window is a bug, not a zero.
    R coeff(int power) const {
        if (power < offset_) return traits::zero();
        if (power > known_through())
            throw std::out_of_range("Series::coeff: beyond truncation order");
        return c_[static_cast<std::size_t>(power - offset_)];
    }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!traits::is_zero(x)) return false;
        return true;
    }
    bool is_even() const { return parity_ok(0); }
    bool is_odd() const { return parity_ok(1); }

    Series truncated(int new_order) const {
        if (new_order < 0) throw std::invalid_argument("Series::truncated: negative order");
        if (new_order >= order()) return *this;
        std::vector<R> c(c_.begin(), c_.begin() + new_order + 1);
        return Series(offset_, std::move(c));
    }

    // Declares higher coefficients to be zero. Only for algorithms that
    // really know that (Newton iterations, polynomial densities).
    Series extended_with_zeros(int new_order) const {
        if (new_order <= order()) return truncated(new_order);
        std::vector<R> c(c_);
        c.resize(static_cast<std::size_t>(new_order) + 1, traits::zero());
        return Series(offset_, std::move(c));
    }

    // Multiply by r^d.
    Series shifted(int d) const { return Series(offset_ + d, c_); }

    Series operator-() const {
        std::vector<R> c(c_);
        for (auto& x : c) x = -x;
        return Series(offset_, std::move(c));
    }

    Series scaled(const Rat& q) const {
        std::vector<R> c(c_);
        for (auto& x : c) x = traits::mul_rat(x, q);
        return Series(offset_, std::move(c));
    }

    Series scaled_by(const R& f) const {
        std::vector<R> c(c_);
        for (auto& x : c) x = x * f;
        return Series(offset_, std::move(c));
    }

    friend Series operator+(const Series& a, const Series& b) {
        int e = std::min(a.offset_, b.offset_);
        int known = std::min(a.known_through(), b.known_through());
        std::vector<R> c(static_cast<std::size_t>(known - e) + 1, traits::zero());
        for (int p = e; p <= known; ++p)
            c[static_cast<std::size_t>(p - e)] = a.coeff(p) + b.coeff(p);
        return Series(e, std::move(c));
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        std::vector<R> c(static_cast<std::size_t>(n) + 1, traits::zero());
        for (int i = 0; i <= std::min(a.order(), n); ++i) {
            const R& ai = a.c_[static_cast<std::size_t>(i)];
            if (traits::is_zero(ai)) continue;
            for (int j = 0; j <= std::min(b.order(), n - i); ++j)
                c[static_cast<std::size_t>(i + j)] = c[static_cast<std::size_t>(i + j)] + ai * b.c_[static_cast<std::size_t>(j)];
        }
        return Series(a.offset_ + b.offset_, std::move(c));
    }

    friend Series operator/(const Series& a, const Series& b) {
        // Strip exact zeros off b's head so sin-like divisors work.
        int z = 0;
        while (z <= b.order() && traits::is_zero(b.c_[static_cast<std::size_t>(z)])) ++z;
        if (z > b.order()) throw std::domain_error("Series: division by the zero series");
        auto inv0 = traits::try_invert(b.c_[static_cast<std::size_t>(z)]);
        if (!inv0) throw std::domain_error("Series: leading coefficient not invertible");
        int n = std::min(a.order(), b.order() - z);
        std::vector<R> c(static_cast<std::size_t>(n) + 1, traits::zero());
        for (int k = 0; k <= n; ++k) {
            R acc = k <= a.order() ? a.c_[static_cast<std::size_t>(k)] : traits::zero();
            for (int j = 0; j < k; ++j)
                acc = acc - c[static_cast<std::size_t>(j)] * b.c_[static_cast<std::size_t>(z + k - j)];
            c[static_cast<std::size_t>(k)] = acc * (*inv0);
        }
        return Series(a.offset_ - (b.offset_ + z), std::move(c));
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.offset_ == b.offset_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    bool parity_ok(int residue) const {
        for (int p = offset_; p <= known_through(); ++p)
            if (((p % 2) + 2) % 2 != residue && !traits::is_zero(coeff(p))) return false;
        return true;
    }

    void normalize() {
        // Positive leading exponents fold into explicit zero coefficients.
        while (offset_ > 0) {
            c_.insert(c_.begin(), traits::zero());
            --offset_;
        }
        // Strip exactly-zero heads of Laurent windows back toward 0.
        while (offset_ < 0 && !c_.empty() && traits::is_zero(c_.front())) {
            c_.erase(c_.begin());
            ++offset_;
        }
        if (c_.empty())
            throw std::logic_error("Series: truncation window collapsed below r^0");
    }

    int offset_;
    std::vector<R> c_;
};

// ---------------------------------------------------------------------------
// Calculus

template <class R>
Series<R> differentiate(const Series<R>& a) {
    using T = ring_traits<R>;
    std::vector<R> c(a.coeffs());
    for (int i = 0; i <= a.order(); ++i)
        c[static_cast<std::size_t>(i)] = T::mul_rat(c[static_cast<std::size_t>(i)], Rat(a.offset() + i));
    return Series<R>(a.offset() - 1, std::move(c));
}

// Antiderivative with zero constant term; refuses to cross an r^(-1) term.
template <class R>
Series<R> integrate(const Series<R>& a) {
    using T = ring_traits<R>;
    std::vector<R> c(a.coeffs());
    for (int i = 0; i <= a.order(); ++i) {
        int p = a.offset() + i;
        if (p == -1) {
            if (!T::is_zero(c[static_cast<std::size_t>(i)]))
                throw std::domain_error("Series: cannot integrate across an r^-1 term");
            continue;
        }
        c[static_cast<std::size_t>(i)] = T::mul_rat(c[static_cast<std::size_t>(i)], Rat(1, p + 1));
    }
    return Series<R>(a.offset() + 1, std::move(c));
}

// ---------------------------------------------------------------------------
// Transcendental operations (formal; quadratic cost via the ODE method)

template <class R>
Series<R> exp(const Series<R>& a) {
    using T = ring_traits<R>;
    if (a.offset() < 0 || !T::is_zero(a.coeff(0)))
        throw std::domain_error("Series::exp: nonzero constant term");
    int n = a.known_through();
    std::vector<R> b(static_cast<std::size_t>(n) + 1, T::zero());
    b[0] = T::one();
    for (int k = 1; k <= n; ++k) {
        R acc = T::zero();
        for (int j = 1; j <= k; ++j)
            acc = acc + T::mul_rat(a.coeff(j) * b[static_cast<std::size_t>(k - j)], Rat(j));
        b[static_cast<std::size_t>(k)] = T::mul_rat(acc, Rat(1, k));
    }
    return Series<R>(0, std::move(b));
}

template <class R>
Series<R> log(const Series<R>& a) {
    using T = ring_traits<R>;
    if (a.offset() != 0 || !(a.coeff(0) == T::one()))
        throw std::domain_error("Series::log: constant term must be 1");
    return integrate(differentiate(a) / a);
}

template <class R>
Series<R> pow_rational(const Series<R>& a, const Rat& q) {
    return exp(log(a).scaled(q));
}

// Integer power by repeated squaring; exponent may be negative.
template <class R>
Series<R> powi(const Series<R>& a, long n) {
    if (n < 0) return Series<R>::one(a.order()) / powi(a, -n);
    Series<R> acc = Series<R>::one(a.order());
    Series<R> base = a;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = n > 1 ? base * base : base;
        n >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Composition and reversion

template <class R>
Series<R> compose(const Series<R>& outer, const Series<R>& inner) {
    using T = ring_traits<R>;
    if (inner.offset() < 0 || !T::is_zero(inner.coeff(0)))
        throw std::domain_error("Series::compose: inner constant term must vanish");
    if (outer.offset() < 0)
        throw std::domain_error("Series::compose: outer series must be analytic");
    int n = std::min(outer.known_through(), inner.known_through());
    Series<R> x = inner.truncated(n);
    // Horner from the top coefficient down.
    int top = std::min(outer.known_through(), n);
    Series<R> acc = Series<R>::constant(outer.coeff(top), n);
    for (int k = top - 1; k >= 0; --k)
        acc = acc * x + Series<R>::constant(outer.coeff(k), n);
    return acc.truncated(n);
}

// Compositional inverse of a = c1 r + O(r^2) by Newton iteration.
template <class R>
Series<R> revert(const Series<R>& a) {
    using T = ring_traits<R>;
    if (a.offset() != 0 || !T::is_zero(a.coeff(0)))
        throw std::domain_error("Series::revert: series must vanish at 0");
    auto inv1 = T::try_invert(a.coeff(1));
    if (!inv1) throw std::domain_error("Series::revert: linear coefficient not invertible");
    int n = a.order();
    Series<R> g = Series<R>::monomial(1, *inv1, 1);
    int prec = 1;
    while (prec < n) {
        prec = std::min(2 * prec, n);
        Series<R> at = a.truncated(prec);
        Series<R> gt = g.extended_with_zeros(prec);
        Series<R> err = compose(at, gt) - Series<R>::identity(prec);
        Series<R> slope = compose(differentiate(at).extended_with_zeros(prec), gt);
        g = (gt - err / slope).truncated(prec);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Ring changes

inline Series<Rat> specialize_lambda(const Series<LambdaPoly>& a, const Rat& v) {
    std::vector<Rat> c;
    c.reserve(a.coeffs().size());
    for (const auto& p : a.coeffs()) c.push_back(p.eval(v));
    return Series<Rat>(a.offset(), std::move(c));
}

inline Series<LambdaPoly> lift_to_lambda(const Series<Rat>& a) {
    std::vector<LambdaPoly> c;
    c.reserve(a.coeffs().size());
    for (const auto& q : a.coeffs()) c.push_back(LambdaPoly(q));
    return Series<LambdaPoly>(a.offset(), std::move(c));
}

inline Series<double> to_float(const Series<Rat>& a) {
    std::vector<double> c;
    c.reserve(a.coeffs().size());
    for (const auto& q : a.coeffs()) c.push_back(q.to_double());
    return Series<double>(a.offset(), std::move(c));
}

// True when the two windows agree on every shared trusted coefficient.
template <class R>
bool agree_on_overlap(const Series<R>& a, const Series<R>& b) {
    int lo = std::min(a.offset(), b.offset());
    int hi = std::min(a.known_through(), b.known_through());
    for (int p = lo; p <= hi; ++p)
        if (!(a.coeff(p) == b.coeff(p))) return false;
    return true;
}

} // namespace radial

#endif
