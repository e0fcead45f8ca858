#pragma once

#include "msd/rational.hpp"

#include <string>
#include <vector>

namespace msd {

// Zero/pole order tuple mu = (m_1,...,m_n) with labeled entries.
class Signature {
  public:
    explicit Signature(std::vector<long long> orders);

    static Signature parse(const std::string& csv);  // "2,2,2" or "24"

    const std::vector<long long>& orders() const { return orders_; }
    long long order(size_t i) const { return orders_.at(i); }
    size_t size() const { return orders_.size(); }
    long long genus() const { return genus_; }
    bool holomorphic() const { return holomorphic_; }
    long long simple_pole_count() const { return simple_poles_; }
    bool is_minimal() const { return orders_.size() == 1 && holomorphic_; }

    std::string str() const;

  private:
    std::vector<long long> orders_;
    long long genus_ = 0;
    bool holomorphic_ = true;
    long long simple_poles_ = 0;
};

// Integer weights alpha with 0 <= alpha_i <= m_i and sum alpha_i = g-1.
struct WeightVector {
    std::vector<long long> alpha;
};

void validate_weights(const Signature& sig, const WeightVector& w);

// kappa_mu = 2g-2+s + sum_{m_i != -1} m_i/(m_i+1)  (simple poles contribute via s)
Rat kappa_mu(const Signature& sig);

// vartheta_{mu,alpha} = sum alpha_i(alpha_i+1) / (2(m_i+1))
Rat vartheta(const Signature& sig, const WeightVector& w);

Rat m_inv(const Signature& sig);       // M_{-1}  = sum 1/(m_i+1)
Rat m_inv_odd(const Signature& sig);   // M_{-1}^odd, over odd m_i only
Rat epsilon(long long g);              // (11g-2)/(4g^2+16g-8), g >= 2

// N = 2g+n-1 (holomorphic), 2g+n-2 (meromorphic)
long long unprojectivized_dim(const Signature& sig);

struct StratumConstants {
    long long N = 0;
    Rat kappa;
    Rat m_inv;
    Rat m_inv_odd;
    Rat eps;  // epsilon(g); zero when g < 2
};

StratumConstants stratum_constants(const Signature& sig);

// Mid-range Weierstrass lambda coefficient (12 + kappa/2)/kappa and its
// rounding-average correction; needed already here for the few-zeros test.
Rat w_lambda_mid(const Signature& sig);
Rat w_lambda_app(const Signature& sig);

// M_{-1} <= (12/w_lambda_app)(N/kappa)(1/4 - eps) - 1
bool few_zeros_qualifies(const Signature& sig);

enum class ComponentProfile { Connected, OddEven, OddEvenHyp, HypNonhyp };

std::string to_string(ComponentProfile p);

// Kontsevich-Zorich component decomposition (lookup; reporting/eligibility only).
ComponentProfile component_profile(const Signature& sig);

}  // namespace msd
