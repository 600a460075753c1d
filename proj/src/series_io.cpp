#include "radial/series_io.hpp"

#include <stdexcept>

namespace radial {

json to_json(const Series<Rat>& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
    return {{"ring", "RationalExact"}, {"offset", s.offset()}, {"order", s.order()}, {"coeffs", coeffs}};
}

json to_json(const LambdaPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

json to_json(const Series<LambdaPoly>& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    return {{"ring", "RationalPolyLambda"}, {"offset", s.offset()}, {"order", s.order()}, {"coeffs", coeffs}};
}

json to_json(const Series<double>& s) {
    json coeffs = json::array();
    for (double c : s.coeffs()) coeffs.push_back(c);
    return {{"ring", "Float64"}, {"offset", s.offset()}, {"order", s.order()}, {"coeffs", coeffs}};
}

static int offset_of(const json& j) {
    return j.contains("offset") ? j.at("offset").get<int>() : 0;
}

Series<Rat> rat_series_from_json(const json& j) {
    if (j.contains("ring") && j.at("ring") != "RationalExact")
        throw std::invalid_argument("series_from_json: expected RationalExact");
    std::vector<Rat> c;
    for (const auto& e : j.at("coeffs")) c.push_back(Rat::from_string(e.get<std::string>()));
    if (c.empty()) c.push_back(Rat(0));
    return Series<Rat>(offset_of(j), std::move(c));
}

Series<LambdaPoly> lambda_series_from_json(const json& j) {
    if (j.contains("ring") && j.at("ring") != "RationalPolyLambda")
        throw std::invalid_argument("series_from_json: expected RationalPolyLambda");
    std::vector<LambdaPoly> c;
    for (const auto& e : j.at("coeffs")) {
        std::vector<Rat> p;
        for (const auto& q : e) p.push_back(Rat::from_string(q.get<std::string>()));
        c.push_back(LambdaPoly(std::move(p)));
    }
    if (c.empty()) c.push_back(LambdaPoly());
    return Series<LambdaPoly>(offset_of(j), std::move(c));
}

template <class R>
static json singular_to_json(const SingularSolution<R>& s, json logC, json logCoef) {
    return {{"sigma", to_json(s.sigma)},
            {"logC", std::move(logC)},
            {"logCoefficient", std::move(logCoef)},
            {"phi0", to_json(s.phi0)},
            {"normalization", s.normalization}};
}

json to_json(const SingularSolution<LambdaPoly>& s) {
    return singular_to_json(s, to_json(s.log_constant), to_json(s.log_coefficient));
}

json to_json(const SingularSolution<Rat>& s) {
    return singular_to_json(s, s.log_constant.str(), s.log_coefficient.str());
}

json to_json(const EigenBasis& basis) {
    return {{"f0", to_json(basis.f0)},
            {"f1", {{"main", to_json(basis.f1.main)}, {"logpart", to_json(basis.f1.logpart)}}},
            {"w0", to_json(basis.w0)},
            {"w1", {{"main", to_json(basis.w1.main)}, {"logpart", to_json(basis.w1.logpart)}}},
            {"logC", to_json(basis.log_constant)},
            {"logC_pretty", basis.log_constant.str("lambda")},
            {"normalization", basis.normalization}};
}

ModelSpace custom_space_from_json(const json& j, int m_hint) {
    int m = m_hint;
    json series = j;
    if (j.is_object() && j.contains("m")) {
        m = j.at("m").get<int>();
        series = j.contains("theta_tilde") ? j.at("theta_tilde") : j;
    }
    if (m < 2)
        throw std::invalid_argument("custom density: dimension missing (provide \"m\" or --m)");
    return custom_space(m, rat_series_from_json(series));
}

} // namespace radial
