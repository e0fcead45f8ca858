#include "msd/divisors.hpp"

#include <algorithm>

namespace msd {

DivisorClassVector DivisorClassVector::scaled(const Rat& c) const {
    DivisorClassVector out;
    out.lambda = lambda * c;
    out.psi_minus1 = psi_minus1 * c;
    out.d_h = d_h * c;
    auto g = gamma;
    out.gamma = [g, c](const GraphData& d) { return g(d) * c; };
    return out;
}

DivisorClassVector DivisorClassVector::plus(const DivisorClassVector& other) const {
    DivisorClassVector out;
    out.lambda = lambda + other.lambda;
    out.psi_minus1 = psi_minus1 + other.psi_minus1;
    out.d_h = d_h + other.d_h;
    auto g1 = gamma, g2 = other.gamma;
    out.gamma = [g1, g2](const GraphData& d) { return g1(d) + g2(d); };
    return out;
}

DivisorClassVector xi_in_lambda(const Signature& sig) {
    Rat k = kappa_mu(sig);
    if (k == 0) throw std::domain_error("xi conversion needs kappa_mu != 0");
    DivisorClassVector v;
    v.lambda = Rat(12) / k;
    v.psi_minus1 = Rat(1) / k;
    v.d_h = Rat(-1) / k;
    v.gamma = [k](const GraphData& d) { return -Rat(d.lcm_prongs) * d.kappa_bot / k; };
    return v;
}

DivisorClassVector psi_to_lambda(const Signature& sig, size_t i) {
    if (sig.order(i) == -1) throw std::domain_error("psi conversion unsupported at a simple pole");
    Rat k = kappa_mu(sig);
    if (k == 0) throw std::domain_error("psi conversion needs kappa_mu != 0");
    Rat scale = Rat(1) / (k * Rat(sig.order(i) + 1));
    DivisorClassVector v;
    v.lambda = 12 * scale;
    v.psi_minus1 = scale;
    v.d_h = -scale;
    v.gamma = [scale, k, i](const GraphData& d) {
        Rat delta = d.leg_on_bottom(i) ? k : Rat(0);
        return -scale * (d.kappa_bot - delta) * Rat(d.lcm_prongs);
    };
    return v;
}

DivisorClassVector kappa1_class(const Signature& sig) {
    Rat k = kappa_mu(sig);
    DivisorClassVector v = xi_in_lambda(sig).scaled(k);
    v.psi_minus1 -= 1;
    auto g = v.gamma;
    v.gamma = [g](const GraphData& d) {
        return g(d) + Rat(d.lcm_prongs) * (d.kappa_bot - d.P_inv);
    };
    return v;
}

DivisorClassVector delta_pullback(const Signature&) {
    DivisorClassVector v;
    v.lambda = 0;
    v.psi_minus1 = 0;
    v.d_h = 1;
    v.gamma = [](const GraphData& d) { return Rat(d.lcm_prongs) * d.P_inv; };
    return v;
}

DivisorClassVector log_canonical_class(const Signature& sig) {
    Rat k = kappa_mu(sig);
    Rat N = Rat(unprojectivized_dim(sig));
    DivisorClassVector v;
    v.lambda = 12;
    v.psi_minus1 = 1;
    v.d_h = -1;
    v.gamma = [k, N](const GraphData& d) {
        return Rat(d.lcm_prongs) * (k * Rat(d.N_bot) / N - d.kappa_bot);
    };
    return v;
}

DivisorClassVector canonical_class(const Signature& sig, bool k_prime_override) {
    if (!sig.holomorphic())
        throw std::domain_error("canonical class implemented for holomorphic signatures");
    if (!k_prime_override && sig.size() == 2 && sig.order(0) % 2 == 0 && sig.order(1) % 2 == 0)
        throw std::domain_error(
            "signature (2m, 2g-2-2m) has an interior ramification divisor; "
            "use the ramification-aware criterion route");
    Rat k = kappa_mu(sig);
    Rat kn = k / Rat(unprojectivized_dim(sig));
    DivisorClassVector v;
    v.lambda = 12;
    v.psi_minus1 = 1;
    v.d_h = -(1 + kn);
    v.gamma = [kn](const GraphData& d) {
        Rat g = -(Rat(d.lcm_prongs) * d.kappa_bot - kn * (Rat(d.lcm_prongs) * Rat(d.N_bot) - 1));
        return g - kn * Rat(d.shapes.delta_H);
    };
    return v;
}

Rat c_gamma(const Signature& sig, const GraphData& d, const Rat& R) {
    Rat k = kappa_mu(sig);
    Rat kn = k / Rat(unprojectivized_dim(sig));
    return (1 - kn) * Rat(d.M_top + d.n_top + d.P) - d.M_top_inv - d.P_inv -
           kn * (Rat(d.v_top) + R);
}

Rat c_gamma_nbot_form(const Signature& sig, const GraphData& d, const Rat& R) {
    Rat k = kappa_mu(sig);
    Rat kn = k / Rat(unprojectivized_dim(sig));
    return kn * Rat(d.N_bot) - d.kappa_bot - kn * R;
}

namespace {

// sum over edges of the Delta-image coefficients, already divided by (g+3) etc.
Rat pullback_gamma(const GraphData& d, const Rat& irr_coef,
                   const std::function<Rat(long long)>& delta_coef) {
    Rat total = 0;
    for (size_t i = 0; i < d.graph.edges.size(); ++i) {
        const auto& img = d.mg_images[i];
        Rat pinv = rat(1, d.graph.edges[i].prong);
        if (img.contracted) continue;
        if (img.irreducible) total += irr_coef * pinv;
        else total += delta_coef(img.i) * pinv;
    }
    return Rat(d.lcm_prongs) * total;
}

}  // namespace

Rat bn_gamma(const Signature& sig, const GraphData& d) {
    long long g = sig.genus();
    return pullback_gamma(d, rat(g + 1, g + 3), [g](long long i) {
        return rat(6 * i * (g - i), g + 3);
    });
}

DivisorClassVector bn_class(const Signature& sig) {
    long long g = sig.genus();
    if (g % 2 == 0 || g < 3) throw std::domain_error("Brill-Noether divisor needs odd g >= 3");
    DivisorClassVector v;
    v.lambda = 6;
    v.psi_minus1 = 0;
    v.d_h = -rat(g + 1, g + 3);
    v.gamma = [sig](const GraphData& d) { return -bn_gamma(sig, d); };
    return v;
}

Rat hur_gamma(const Signature& sig, const GraphData& d) {
    long long g = sig.genus();
    Rat den = Rat((g + 8) * (3 * g - 1));
    return pullback_gamma(d, Rat(3 * g * g + 12 * g - 6) / den, [g, den](long long i) {
        return Rat(6 * i * (g - i) * (3 * g + 4)) / den;
    });
}

DivisorClassVector hur_class(const Signature& sig) {
    long long g = sig.genus();
    if (g % 2 != 0) throw std::domain_error("Hurwitz divisor needs even g");
    if (g < 4) throw std::domain_error("Hurwitz divisor needs g >= 4");
    DivisorClassVector v;
    v.lambda = 6;
    v.psi_minus1 = 0;
    v.d_h = -Rat(3 * g * g + 12 * g - 6) / Rat((g + 8) * (3 * g - 1));
    v.gamma = [sig](const GraphData& d) { return -hur_gamma(sig, d); };
    return v;
}

DivisorClassVector nf_class(long long g) {
    if (g % 2 != 0 || g < 4) throw std::domain_error("NF divisor needs even g >= 4");
    Signature sig({2 * g - 2});
    // [NF_{g,1}] = A ([BN_g] + B [W]),  [W] = -lambda + C(g+1,2) psi - sum C(g-j+1,2) delta_{j;1}
    // NF_(2g-2) = e^{-1} f_1^* NF_{g,1}
    Rat A = Rat(2 * (g + 3)) / Rat((g + 1) * (g - 2)) * Rat(binomial(g - 2, g / 2));
    Rat B = Rat(12) / Rat((g + 3) * (g + 2));
    Rat e = Rat(2 * (g * g + 3 * g - 1)) / Rat((g - 1) * (g * g - 4)) * Rat(binomial(g - 2, g / 2));
    Rat scale = A / e;

    DivisorClassVector psi = psi_to_lambda(sig, 0);
    Rat cpsi = Rat(binomial(g + 1, 2));

    DivisorClassVector v;
    v.lambda = scale * (Rat(6) + B * (Rat(-1) + cpsi * psi.lambda));
    v.psi_minus1 = scale * B * cpsi * psi.psi_minus1;  // identically zero terms kept for shape
    Rat bn_dh = -rat(g + 1, g + 3);
    v.d_h = scale * (bn_dh + B * cpsi * psi.d_h);
    auto psi_gamma = psi.gamma;
    v.gamma = [g, sig, scale, B, cpsi, psi_gamma](const GraphData& d) {
        if (!d.sig.is_minimal())
            throw std::domain_error("NF class is implemented for minimal strata only");
        Rat bn = -bn_gamma(sig, d);
        Rat w = cpsi * psi_gamma(d);
        // delta_{j;1} pullback: a separating edge contributes ell/p_e to the
        // divisor indexed by the genus j of the side carrying the marked zero.
        Rat djsum = 0;
        auto marked = marked_side_genus(d.graph, 0);
        for (size_t i = 0; i < d.graph.edges.size(); ++i) {
            if (!marked[i]) continue;  // non-separating
            long long j = *marked[i];
            if (j < 1 || j > g - 1) continue;  // rational/full sides stabilize away
            djsum += Rat(binomial(g - j + 1, 2)) * rat(1, d.graph.edges[i].prong);
        }
        w -= Rat(d.lcm_prongs) * djsum;
        return scale * (bn + B * w);
    };
    return v;
}

WCoeffs w_mid_coeffs(const Signature& sig) {
    Rat k = kappa_mu(sig);
    if (k == 0) throw std::domain_error("Weierstrass coefficients need kappa_mu != 0");
    return {(Rat(12) + k / 2) / k, (Rat(1) + k / 8) / k};
}

WCoeffs w_app_coeffs(const Signature& sig) {
    Rat k = kappa_mu(sig);
    if (k == 0) throw std::domain_error("Weierstrass coefficients need kappa_mu != 0");
    Rat theta_app = k / 8 + m_inv_odd(sig) / 8;
    return {(Rat(12) + 12 * theta_app - k) / k, (Rat(1) + theta_app) / k};
}

Rat w_mid_gamma(const Signature& sig, const GraphData& d) {
    Rat k = kappa_mu(sig);
    return Rat(d.v_top - 1) / 2 + d.kappa_bot / k;
}

Rat w_mid_gamma_profile(const Signature& sig, const GraphProfile& p) {
    Rat k = kappa_mu(sig);
    Rat kappa_top = Rat(p.P()) - p.P_inv();  // minimal strata: M_top = n_top = 0
    return Rat(p.v_top - 1) / 2 + (k - kappa_top) / k;
}

Rat w_app_gamma_lower(const Signature& sig, const GraphData& d) {
    Rat k = kappa_mu(sig);
    Rat correction = d.kappa_bot / k * (m_inv_odd(sig) / 8);
    for (const auto& v : d.graph.bottom)
        for (int l : v.legs) {
            long long m = sig.order(l);
            if (m >= 0 && m % 2 != 0) correction -= rat(1, 8 * (m + 1));
        }
    return w_mid_gamma(sig, d) + correction;
}

DivisorClassVector w_mid_class(const Signature& sig) {
    auto c = w_mid_coeffs(sig);
    DivisorClassVector v;
    v.lambda = c.lambda;
    v.psi_minus1 = 0;
    v.d_h = -c.hor;
    v.gamma = [sig](const GraphData& d) {
        return -Rat(d.lcm_prongs) * w_mid_gamma(sig, d);
    };
    return v;
}

DivisorClassVector w_app_class(const Signature& sig) {
    auto c = w_app_coeffs(sig);
    DivisorClassVector v;
    v.lambda = c.lambda;
    v.psi_minus1 = 0;
    v.d_h = -c.hor;
    v.gamma = [sig](const GraphData& d) {
        return -Rat(d.lcm_prongs) * w_app_gamma_lower(sig, d);
    };
    return v;
}

DivisorClassVector w_alpha_class(const Signature& sig, const WeightVector& alpha) {
    validate_weights(sig, alpha);
    if (!sig.holomorphic())
        throw std::domain_error("generalized Weierstrass divisors are defined for holomorphic mu");
    Rat k = kappa_mu(sig);
    Rat th = vartheta(sig, alpha);
    DivisorClassVector v;
    v.lambda = (Rat(12) + 12 * th - k) / k;
    v.psi_minus1 = 0;
    v.d_h = -(1 + th) / k;
    v.gamma = [sig, alpha, k, th](const GraphData& d) {
        Rat th_bot = d.vartheta_bot(alpha);
        return -Rat(d.lcm_prongs) * (d.kappa_bot / k * (1 + th) - th_bot);
    };
    return v;
}

namespace {

struct BottomAggregate {
    Rat alpha_Y;
    long long m_Y = 0;
    long long p_Y = 0;
    std::vector<size_t> edges;
};

std::vector<BottomAggregate> bottom_aggregates(const Signature& sig, const GraphData& d,
                                               const WeightVector& alpha) {
    std::vector<BottomAggregate> out(d.graph.bottom.size());
    for (size_t j = 0; j < d.graph.bottom.size(); ++j) {
        for (int l : d.graph.bottom[j].legs) {
            out[j].alpha_Y += Rat(alpha.alpha[l]);
            out[j].m_Y += sig.order(l);
        }
    }
    for (size_t i = 0; i < d.graph.edges.size(); ++i) {
        out[d.graph.edges[i].bot].p_Y += d.graph.edges[i].prong;
        out[d.graph.edges[i].bot].edges.push_back(i);
    }
    return out;
}

}  // namespace

Rat twist_improvement_exact(const Signature& sig, const GraphData& d, const WeightVector& alpha) {
    validate_weights(sig, alpha);
    long long ell = d.lcm_prongs;
    auto agg = bottom_aggregates(sig, d, alpha);
    Rat total = 0;
    for (const auto& Y : agg) {
        Rat best = 0;  // sigma = 0 gives zero
        for (long long sigma = 0; sigma <= ell; ++sigma) {
            Rat val = Rat(sigma) * (2 * Y.alpha_Y - Rat(Y.m_Y) + Rat(Y.p_Y)) / 2;
            for (size_t ei : Y.edges) {
                long long a = ell / d.graph.edges[ei].prong;
                long long q = sigma / a, r = sigma % a;
                val -= Rat(q * sigma + r * (q + 1)) / 2;
            }
            best = rat_max(best, val);
        }
        total += best;
    }
    return total;
}

Rat twist_improvement_bound(const Signature& sig, const GraphData& d, const WeightVector& alpha) {
    validate_weights(sig, alpha);
    long long ell = d.lcm_prongs;
    auto agg = bottom_aggregates(sig, d, alpha);
    Rat first = 0;
    for (const auto& Y : agg) first += Y.alpha_Y - Rat(Y.m_Y) / 2;
    return Rat(ell / 2) * first + Rat(ell) / 8 * (Rat(d.P) - d.P_inv);
}

}  // namespace msd
