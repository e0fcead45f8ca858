#include "msd/stratum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace msd {

Signature::Signature(std::vector<long long> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("signature must be non-empty");
    long long total = 0;
    for (long long m : orders_) {
        total += m;
        if (m < 0) holomorphic_ = false;
        if (m == -1) ++simple_poles_;
    }
    if (total % 2 != 0) throw std::invalid_argument("signature entries must sum to 2g-2 (even)");
    genus_ = (total + 2) / 2;
    if (genus_ < 0) throw std::invalid_argument("signature has negative genus");
}

Signature Signature::parse(const std::string& csv) {
    std::vector<long long> v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        v.push_back(std::stoll(item));
    }
    return Signature(v);
}

std::string Signature::str() const {
    std::string s = "(";
    for (size_t i = 0; i < orders_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(orders_[i]);
    }
    return s + ")";
}

void validate_weights(const Signature& sig, const WeightVector& w) {
    if (w.alpha.size() != sig.size())
        throw std::invalid_argument("weight vector length differs from signature length");
    long long total = 0;
    for (size_t i = 0; i < w.alpha.size(); ++i) {
        if (w.alpha[i] < 0 || w.alpha[i] > sig.order(i))
            throw std::invalid_argument("weight out of range at entry " + std::to_string(i));
        total += w.alpha[i];
    }
    if (total != sig.genus() - 1)
        throw std::invalid_argument("weights must sum to g-1");
}

Rat kappa_mu(const Signature& sig) {
    Rat k = rat(2 * sig.genus() - 2 + sig.simple_pole_count());
    for (long long m : sig.orders())
        if (m != -1) k += rat(m, m + 1);
    return k;
}

Rat vartheta(const Signature& sig, const WeightVector& w) {
    validate_weights(sig, w);
    Rat t = 0;
    for (size_t i = 0; i < w.alpha.size(); ++i) {
        long long a = w.alpha[i];
        t += rat(a * (a + 1), 2 * (sig.order(i) + 1));
    }
    return t;
}

Rat m_inv(const Signature& sig) {
    Rat s = 0;
    for (long long m : sig.orders()) {
        if (m == -1) throw std::domain_error("M_{-1} undefined with simple poles");
        s += rat(1, m + 1);
    }
    return s;
}

Rat m_inv_odd(const Signature& sig) {
    Rat s = 0;
    for (long long m : sig.orders())
        if (m >= 0 && m % 2 != 0) s += rat(1, m + 1);
    return s;
}

Rat epsilon(long long g) {
    if (g < 2) throw std::domain_error("epsilon(g) requires g >= 2");
    return rat(11 * g - 2, 4 * g * g + 16 * g - 8);
}

long long unprojectivized_dim(const Signature& sig) {
    return 2 * sig.genus() + static_cast<long long>(sig.size()) - (sig.holomorphic() ? 1 : 2);
}

StratumConstants stratum_constants(const Signature& sig) {
    StratumConstants c;
    c.N = unprojectivized_dim(sig);
    c.kappa = kappa_mu(sig);
    if (sig.simple_pole_count() == 0) c.m_inv = m_inv(sig);
    c.m_inv_odd = m_inv_odd(sig);
    c.eps = sig.genus() >= 2 ? epsilon(sig.genus()) : Rat(0);
    return c;
}

Rat w_lambda_mid(const Signature& sig) {
    Rat k = kappa_mu(sig);
    if (k == 0) throw std::domain_error("w_lambda undefined for kappa_mu = 0");
    return (Rat(12) + k / 2) / k;
}

Rat w_lambda_app(const Signature& sig) {
    Rat k = kappa_mu(sig);
    if (k == 0) throw std::domain_error("w_lambda undefined for kappa_mu = 0");
    return w_lambda_mid(sig) + Rat(12) * m_inv_odd(sig) / (8 * k);
}

bool few_zeros_qualifies(const Signature& sig) {
    if (!sig.holomorphic()) throw std::domain_error("few-zeros test requires holomorphic signature");
    if (sig.genus() < 2) return false;
    Rat lhs = m_inv(sig);
    Rat wl = w_lambda_app(sig);
    Rat rhs = (Rat(12) / wl) * Rat(unprojectivized_dim(sig)) / kappa_mu(sig) *
                  (rat(1, 4) - epsilon(sig.genus())) -
              1;
    return lhs <= rhs;
}

std::string to_string(ComponentProfile p) {
    switch (p) {
        case ComponentProfile::Connected: return "connected";
        case ComponentProfile::OddEven: return "odd+even";
        case ComponentProfile::OddEvenHyp: return "odd+even+hyp";
        case ComponentProfile::HypNonhyp: return "hyp+nonhyp";
    }
    return "?";
}

ComponentProfile component_profile(const Signature& sig) {
    if (!sig.holomorphic()) throw std::domain_error("component lookup is for holomorphic signatures");
    long long g = sig.genus();
    if (g < 2) throw std::domain_error("component lookup requires g >= 2");
    const auto& m = sig.orders();
    bool all_even = std::all_of(m.begin(), m.end(), [](long long x) { return x % 2 == 0; });
    bool minimal = sig.is_minimal();
    bool two_equal = m.size() == 2 && m[0] == m[1];
    if (g == 2) return ComponentProfile::Connected;
    if (g == 3) {
        if (minimal || (two_equal && all_even)) return ComponentProfile::HypNonhyp;
        return ComponentProfile::Connected;
    }
    if (minimal) return ComponentProfile::OddEvenHyp;
    if (two_equal && m[0] == g - 1) {
        // (g-1, g-1): spin only for g odd (even entries)
        return g % 2 == 1 ? ComponentProfile::OddEvenHyp : ComponentProfile::HypNonhyp;
    }
    if (all_even) return ComponentProfile::OddEven;
    return ComponentProfile::Connected;
}

}  // namespace msd
