#ifndef RADIAL_LAMBDA_POLY_HPP
#define RADIAL_LAMBDA_POLY_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "radial/rational.hpp"

namespace radial {

// Polynomial in a single indeterminate (the spectral parameter) with exact
// rational coefficients, stored densely by degree. The zero polynomial has
// an empty coefficient vector; otherwise the leading coefficient is nonzero.
class LambdaPoly {
public:
    LambdaPoly() = default;
    LambdaPoly(long n) { if (n != 0) c_.push_back(Rat(n)); }
    LambdaPoly(const Rat& q) { if (!q.is_zero()) c_.push_back(q); }
    explicit LambdaPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static LambdaPoly variable() { return LambdaPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rat coeff(std::size_t d) const { return d < c_.size() ? c_[d] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat constant_term() const { return coeff(0); }

    Rat eval(const Rat& v) const {
        Rat acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
        return acc;
    }

    LambdaPoly operator-() const {
        LambdaPoly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    LambdaPoly& operator+=(const LambdaPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    LambdaPoly& operator-=(const LambdaPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    LambdaPoly& operator*=(const LambdaPoly& o) { *this = *this * o; return *this; }

    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { a += b; return a; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { a -= b; return a; }

    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
        if (a.is_zero() || b.is_zero()) return LambdaPoly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return LambdaPoly(std::move(r));
    }

    LambdaPoly scaled(const Rat& q) const {
        if (q.is_zero()) return LambdaPoly();
        LambdaPoly r(*this);
        for (auto& x : r.c_) x *= q;
        return r;
    }

    // Exact division by the indeterminate; the constant term must vanish.
    LambdaPoly divided_by_lambda() const {
        if (is_zero()) return LambdaPoly();
        if (!c_[0].is_zero())
            throw std::domain_error("LambdaPoly: not divisible by lambda");
        return LambdaPoly(std::vector<Rat>(c_.begin() + 1, c_.end()));
    }

    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LambdaPoly& a, const LambdaPoly& b) { return !(a == b); }

    // Human-readable form, e.g. "-2 - 1*L" with L the indeterminate.
    std::string str(const std::string& sym = "L") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            std::string term = c_[i].str();
            if (i > 0) {
                term += "*" + sym;
                if (i > 1) term += "^" + std::to_string(i);
            }
            if (out.empty()) out = term;
            else if (term[0] == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

} // namespace radial

#endif
