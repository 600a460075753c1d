#ifndef RADIAL_RATIONAL_HPP
#define RADIAL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace radial {

// Arbitrary-precision rational with plain value semantics. Wraps GMP's
// mpq_class so that generic code never sees gmpxx expression templates.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p", "p/q", optional leading '-'.
    static Rat from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        q.canonicalize();
        return Rat(q);
    }

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend Rat abs(const Rat& a) { return Rat(mpq_class(abs(a.v_))); }

    // q^e for integer e (e may be negative when q != 0).
    friend Rat pow(const Rat& q, long e) {
        if (e == 0) return Rat(1);
        if (q.is_zero()) {
            if (e < 0) throw std::domain_error("Rat: 0^negative");
            return Rat(0);
        }
        mpq_class base = e < 0 ? mpq_class(1 / q.v_) : q.v_;
        unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
        mpq_class num, den;
        mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), n);
        mpz_set_ui(num.get_den_mpz_t(), 1);
        mpz_pow_ui(den.get_num_mpz_t(), base.get_den_mpz_t(), n);
        mpz_set_ui(den.get_den_mpz_t(), 1);
        mpq_class r = num / den;
        r.canonicalize();
        return Rat(r);
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rat rat(long n) { return Rat(n); }
inline Rat rat(long n, long d) { return Rat(n, d); }

} // namespace radial

#endif
