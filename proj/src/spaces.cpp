#include "radial/spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace radial {

Rat JacobiSpectrum::power_sum(int p) const {
    Rat acc(0);
    for (const auto& [eig, mult] : entries) acc += pow(eig, p) * Rat(mult);
    return acc;
}

int JacobiSpectrum::total_multiplicity() const {
    int n = 0;
    for (const auto& [eig, mult] : entries) n += mult;
    return n;
}

double ModelSpace::injectivity_radius() const {
    if (family != Family::Trig) return 0.0;
    double c = scale.to_double();
    return k > 0 ? M_PI / (2.0 * c) : M_PI / c;
}

static void check_dim(int m) {
    if (m < 2) throw std::invalid_argument("ModelSpace: dimension must be >= 2");
}

ModelSpace flat_space(int m) {
    check_dim(m);
    ModelSpace sp;
    sp.family = Family::Flat;
    sp.m = m;
    sp.name = "Flat" + std::to_string(m);
    return sp;
}

ModelSpace trig_space(int m, int k, const Rat& scale) {
    check_dim(m);
    if (k < 0 || k > m - 1) throw std::invalid_argument("ModelSpace: need 0 <= k <= m-1");
    if (scale.sign() <= 0) throw std::invalid_argument("ModelSpace: scale must be positive");
    ModelSpace sp;
    sp.family = Family::Trig;
    sp.m = m;
    sp.k = k;
    sp.scale = scale;
    return sp;
}

ModelSpace hyperbolic_space(int m, int k, const Rat& scale) {
    ModelSpace sp = trig_space(m, k, scale);
    sp.family = Family::Hyperbolic;
    return sp;
}

ModelSpace custom_space(int m, const Series<Rat>& theta_tilde) {
    check_dim(m);
    if (theta_tilde.offset() != 0 || !theta_tilde.coeff(0).is_one())
        throw std::invalid_argument("ModelSpace: custom density must start at 1");
    if (!theta_tilde.is_even())
        throw std::invalid_argument("ModelSpace: custom density must be even");
    ModelSpace sp;
    sp.family = Family::Custom;
    sp.m = m;
    sp.custom_theta_tilde = theta_tilde;
    sp.name = "custom";
    return sp;
}

// sin(cr)/(cr) resp. sinh(cr)/(cr) as an exact even series.
static Series<Rat> sinc_series(const Rat& c, bool trig, int order) {
    std::vector<Rat> coeffs(static_cast<std::size_t>(order) + 1, Rat(0));
    Rat c2 = c * c;
    Rat term(1); // c^(2n) / (2n+1)!
    for (int n = 0; 2 * n <= order; ++n) {
        if (n > 0) {
            term *= c2;
            term /= Rat(2 * n) * Rat(2 * n + 1);
            if (trig && n % 2 == 1) coeffs[static_cast<std::size_t>(2 * n)] = -term;
            else coeffs[static_cast<std::size_t>(2 * n)] = term;
        } else {
            coeffs[0] = Rat(1);
        }
    }
    return Series<Rat>(0, std::move(coeffs));
}

// cos(cr) resp. cosh(cr).
static Series<Rat> cosine_series(const Rat& c, bool trig, int order) {
    std::vector<Rat> coeffs(static_cast<std::size_t>(order) + 1, Rat(0));
    Rat c2 = c * c;
    Rat term(1); // c^(2n) / (2n)!
    coeffs[0] = Rat(1);
    for (int n = 1; 2 * n <= order; ++n) {
        term *= c2;
        term /= Rat(2 * n - 1) * Rat(2 * n);
        coeffs[static_cast<std::size_t>(2 * n)] = (trig && n % 2 == 1) ? -term : term;
    }
    return Series<Rat>(0, std::move(coeffs));
}

Series<Rat> density_series(const ModelSpace& sp, int order) {
    if (order < 0) throw std::invalid_argument("density_series: negative order");
    switch (sp.family) {
        case Family::Flat:
            return Series<Rat>::one(order);
        case Family::Custom:
            // The stored polynomial is the exact density.
            return sp.custom_theta_tilde.extended_with_zeros(order).truncated(order);
        case Family::Trig:
        case Family::Hyperbolic: {
            bool trig = sp.family == Family::Trig;
            Series<Rat> s = sinc_series(sp.scale, trig, order);
            Series<Rat> t = cosine_series(sp.scale, trig, order);
            return powi(s, sp.m - 1) * powi(t, sp.k);
        }
    }
    throw std::logic_error("density_series: unreachable");
}

Series<Rat> xi_series(const ModelSpace& sp, int order) {
    Series<Rat> d = density_series(sp, order + 1);
    return (differentiate(d) / d).truncated(order);
}

double closed_form_theta(const ModelSpace& sp, double r) {
    if (r <= 0.0) throw std::domain_error("closed_form_theta: need r > 0");
    double c = sp.scale.to_double();
    switch (sp.family) {
        case Family::Flat:
            return std::pow(r, sp.m - 1);
        case Family::Trig: {
            double bound = sp.injectivity_radius();
            if (r >= bound) throw std::domain_error("closed_form_theta: r beyond injectivity radius");
            return std::pow(std::sin(c * r) / c, sp.m - 1) * std::pow(std::cos(c * r), sp.k);
        }
        case Family::Hyperbolic:
            return std::pow(std::sinh(c * r) / c, sp.m - 1) * std::pow(std::cosh(c * r), sp.k);
        case Family::Custom:
            throw std::domain_error("closed_form_theta: custom spaces have no closed form");
    }
    throw std::logic_error("closed_form_theta: unreachable");
}

double closed_form_xi_tilde(const ModelSpace& sp, double r) {
    if (r <= 0.0) throw std::domain_error("closed_form_xi_tilde: need r > 0");
    double c = sp.scale.to_double();
    switch (sp.family) {
        case Family::Flat:
            return 0.0;
        case Family::Trig: {
            double bound = sp.injectivity_radius();
            if (r >= bound) throw std::domain_error("closed_form_xi_tilde: r beyond injectivity radius");
            double full = (sp.m - 1) * c / std::tan(c * r) - sp.k * c * std::tan(c * r);
            return full - (sp.m - 1) / r;
        }
        case Family::Hyperbolic: {
            double full = (sp.m - 1) * c / std::tanh(c * r) - sp.k * c * std::tanh(c * r);
            return full - (sp.m - 1) / r;
        }
        case Family::Custom:
            throw std::domain_error("closed_form_xi_tilde: custom spaces have no closed form");
    }
    throw std::logic_error("closed_form_xi_tilde: unreachable");
}

JacobiSpectrum jacobi_spectrum(const ModelSpace& sp) {
    if (sp.family == Family::Custom)
        throw std::domain_error("jacobi_spectrum: not defined for custom densities");
    JacobiSpectrum js;
    Rat c2 = sp.scale * sp.scale;
    switch (sp.family) {
        case Family::Flat:
            js.entries = {{Rat(0), sp.m - 1}};
            break;
        case Family::Trig:
            if (sp.k == 0) js.entries = {{c2, sp.m - 1}};
            else js.entries = {{Rat(4) * c2, sp.k}, {c2, sp.m - 1 - sp.k}};
            break;
        case Family::Hyperbolic:
            if (sp.k == 0) js.entries = {{-c2, sp.m - 1}};
            else js.entries = {{Rat(-4) * c2, sp.k}, {-c2, sp.m - 1 - sp.k}};
            break;
        case Family::Custom:
            break;
    }
    return js;
}

const std::vector<ModelSpace>& catalog() {
    static const std::vector<ModelSpace> entries = [] {
        auto named = [](ModelSpace sp, const char* n) {
            sp.name = n;
            return sp;
        };
        std::vector<ModelSpace> v;
        v.push_back(named(trig_space(4, 0), "S4"));
        v.push_back(named(hyperbolic_space(4, 0), "H4"));
        v.push_back(named(trig_space(4, 1), "CP2"));
        v.push_back(named(hyperbolic_space(4, 1), "CP2~"));
        v.push_back(named(trig_space(6, 0), "S6"));
        v.push_back(named(hyperbolic_space(6, 0), "H6"));
        v.push_back(named(trig_space(6, 1), "CP3"));
        v.push_back(named(hyperbolic_space(6, 1), "CP3~"));
        v.push_back(named(trig_space(8, 0), "S8"));
        v.push_back(named(hyperbolic_space(8, 0), "H8"));
        v.push_back(named(trig_space(8, 1), "CP4"));
        v.push_back(named(hyperbolic_space(8, 1), "CP4~"));
        v.push_back(named(trig_space(8, 3), "HP2"));
        v.push_back(named(hyperbolic_space(8, 3), "HP2~"));
        return v;
    }();
    return entries;
}

ModelSpace space_by_name(const std::string& name, int m_hint, const Rat& scale) {
    for (const auto& sp : catalog())
        if (sp.name == name) {
            ModelSpace out = sp;
            out.scale = scale;
            return out;
        }
    if (name == "Flat") {
        if (m_hint < 2) throw std::invalid_argument("space 'Flat' needs --m");
        return flat_space(m_hint);
    }
    if (name.rfind("DR:", 0) == 0) {
        auto comma = name.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("Damek-Ricci style name must be DR:m,k");
        int m = std::stoi(name.substr(3, comma - 3));
        int k = std::stoi(name.substr(comma + 1));
        ModelSpace sp = hyperbolic_space(m, k, scale);
        sp.name = name;
        return sp;
    }
    throw std::invalid_argument("unknown space name '" + name + "'");
}

} // namespace radial
