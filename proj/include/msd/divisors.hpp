#pragma once

#include "msd/levelgraph.hpp"
#include "msd/nccomp.hpp"
#include "msd/rational.hpp"
#include "msd/stratum.hpp"

#include <functional>

namespace msd {

// Coefficients on the basis {lambda_1, psi_{-1}, [D_h]} together with the
// per-graph coefficient of [D_Gamma] (any ell_Gamma factor already included).
struct DivisorClassVector {
    Rat lambda;
    Rat psi_minus1;
    Rat d_h;
    std::function<Rat(const GraphData&)> gamma;

    DivisorClassVector scaled(const Rat& c) const;
    DivisorClassVector plus(const DivisorClassVector& other) const;
};

// kappa_mu xi = psi_{-1} + 12 lambda - [D_h] - sum ell kappa_bot [D_Gamma]
DivisorClassVector xi_in_lambda(const Signature& sig);

// psi_i for m_i != -1
DivisorClassVector psi_to_lambda(const Signature& sig, size_t i);

// kappa_1 = -psi_{-1} + kappa_mu xi + sum ell (kappa_bot - P_{-1}) [D_Gamma]
DivisorClassVector kappa1_class(const Signature& sig);

// f*_{[n]} delta_{[n]} = [D_h] + sum ell P_{-1} [D_Gamma]
DivisorClassVector delta_pullback(const Signature& sig);

// (kappa/N) c1(Omega^d(log D)) = psi_{-1} + 12 lambda - [D_h] + sum ell(kappa N_bot/N - kappa_bot)[D_Gamma]
DivisorClassVector log_canonical_class(const Signature& sig);

// (kappa/N) K of the coarse space; refuses two-even-zero signatures unless
// k_prime_override (the certifier then routes through the ramification gate).
DivisorClassVector canonical_class(const Signature& sig, bool k_prime_override = false);

// c_Gamma = (1 - kappa/N)(M_top + n_top + P) - M_top_inv - P_{-1} - (kappa/N)(v_top + R)
Rat c_gamma(const Signature& sig, const GraphData& d, const Rat& R);
// cross-check form (kappa/N) N_bot - kappa_bot - (kappa/N) R
Rat c_gamma_nbot_form(const Signature& sig, const GraphData& d, const Rat& R);

// Brill-Noether (g odd), Hurwitz (g even), n-fold point divisors.
Rat bn_gamma(const Signature& sig, const GraphData& d);
DivisorClassVector bn_class(const Signature& sig);
Rat hur_gamma(const Signature& sig, const GraphData& d);
DivisorClassVector hur_class(const Signature& sig);
DivisorClassVector nf_class(long long g);  // minimal strata only, g even

// Untwisted generalized Weierstrass divisor class of weight alpha.
DivisorClassVector w_alpha_class(const Signature& sig, const WeightVector& alpha);

struct WCoeffs {
    Rat lambda;
    Rat hor;
};

WCoeffs w_mid_coeffs(const Signature& sig);
WCoeffs w_app_coeffs(const Signature& sig);

// w_Gamma^mid = (v_top - 1)/2 + kappa_bot/kappa on a graph or profile.
Rat w_mid_gamma(const Signature& sig, const GraphData& d);
Rat w_mid_gamma_profile(const Signature& sig, const GraphProfile& p);
// lower bound w_Gamma^app >= w_Gamma^mid + (kappa_bot/kappa) M_{-1}^odd/8
//                            - sum over odd legs on bottom of 1/(8(m_i+1))
Rat w_app_gamma_lower(const Signature& sig, const GraphData& d);

// Mid/app classes as vectors (gamma is the sound lower-bound coefficient).
DivisorClassVector w_mid_class(const Signature& sig);
DivisorClassVector w_app_class(const Signature& sig);

// Twisting improvement for the boundary coefficient of D_Gamma.
Rat twist_improvement_exact(const Signature& sig, const GraphData& d, const WeightVector& alpha);
Rat twist_improvement_bound(const Signature& sig, const GraphData& d, const WeightVector& alpha);

}  // namespace msd
