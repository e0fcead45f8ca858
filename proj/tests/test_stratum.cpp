#include "msd/stratum.hpp"

#include <doctest.h>

#include <random>

using namespace msd;

TEST_CASE("kappa_mu on pinned examples") {
    CHECK(kappa_mu(Signature({0, 0, 0, 0})) == Rat(0));
    CHECK(kappa_mu(Signature({1, 1, -4, 0})) == rat(1, 3));
    CHECK(kappa_mu(Signature({2})) == rat(8, 3));
    // equidistributed: n s(s+2)/(s+1)
    for (long long s = 1; s <= 6; ++s)
        for (long long n = 2; n <= 8; ++n) {
            if ((s * n) % 2) continue;
            Signature sig{std::vector<long long>(n, s)};
            CHECK(kappa_mu(sig) == Rat(n) * Rat(s * (s + 2)) / Rat(s + 1));
        }
    // simple poles through the 2g-2+s closed form
    CHECK(kappa_mu(Signature({3, -1, -1, 1})) == Rat(2 * 2 - 2 + 2) + rat(3, 4) + rat(1, 2));
}

TEST_CASE("kappa_mu positivity (Lemma on meromorphic signatures)") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(1, 8), val(-20, 20);
    int tested = 0;
    while (tested < 4000) {
        std::vector<long long> m(len(rng));
        long long total = 0;
        bool simple = false;
        for (auto& x : m) {
            x = val(rng);
            if (x == -1) simple = true;
            total += x;
        }
        if (simple || total % 2 != 0 || total < -2) continue;
        Signature sig(m);
        ++tested;
        Rat k = kappa_mu(sig);
        CHECK(k >= 0);
        if (k != 0) CHECK(k >= rat(1, 3));
        if (k == 0) {
            // only (0,...,0) or (-m, m-2, 0, ..., 0)
            long long zeros = 0, pos = 0, neg = 0;
            for (long long x : m) {
                if (x == 0) ++zeros;
                else if (x > 0) ++pos;
                else ++neg;
            }
            bool all_zero = zeros == static_cast<long long>(m.size());
            CHECK((all_zero || (pos == 1 && neg == 1)));
        }
    }
}

TEST_CASE("vartheta") {
    Signature sig({2});
    CHECK(vartheta(sig, {{1}}) == rat(1, 3));
    // alpha = mu/2 gives kappa/8 for even signatures
    for (auto mu : {std::vector<long long>{2, 2}, {4, 2, 2}, {6}, {4, 4, 2, 2}}) {
        Signature s(mu);
        WeightVector w;
        for (long long m : mu) w.alpha.push_back(m / 2);
        CHECK(vartheta(s, w) == kappa_mu(s) / 8);
    }
    // zero weights only legal in genus one
    Signature torus({0, 0});
    CHECK(vartheta(torus, {{0, 0}}) == Rat(0));
    CHECK_THROWS(vartheta(sig, {{0}}));     // weights must sum to g-1
    CHECK_THROWS(vartheta(sig, {{3}}));     // out of range
}

TEST_CASE("stratum constants") {
    CHECK(epsilon(13) == rat(141, 876));
    for (long long g = 2; g <= 30; ++g)
        CHECK(m_inv(Signature({2 * g - 2})) == rat(1, 2 * g - 1));
    CHECK(m_inv_odd(Signature({3, 3})) == rat(1, 2));
    CHECK(unprojectivized_dim(Signature({24})) == 26);
    CHECK(unprojectivized_dim(Signature({4, -2})) == 4);

    // kappa/N = 1 - (1 + M_{-1})/N exactly, holomorphic mu
    for (auto mu : {std::vector<long long>{24}, {2, 2, 2}, {6, 4}, {1, 1, 2}}) {
        Signature s(mu);
        Rat N = Rat(unprojectivized_dim(s));
        CHECK(kappa_mu(s) / N == 1 - (1 + m_inv(s)) / N);
    }
}

TEST_CASE("few zeros qualifies") {
    CHECK(few_zeros_qualifies(Signature({198})));                 // g = 100
    CHECK(few_zeros_qualifies(Signature({98})));                  // g = 50 minimal
    CHECK_FALSE(few_zeros_qualifies(Signature(std::vector<long long>(19, 2))));  // (2^{g-1}), g = 20
    // any n <= 10 with large g qualifies
    CHECK(few_zeros_qualifies(Signature({20, 20, 20, 20, 20, 20, 20, 20, 20, 18})));
}

TEST_CASE("component profile lookup") {
    CHECK(component_profile(Signature({6})) == ComponentProfile::OddEvenHyp);       // g = 4
    CHECK(component_profile(Signature({24})) == ComponentProfile::OddEvenHyp);      // g = 13
    CHECK(component_profile(Signature({1, 1, 1, 1})) == ComponentProfile::Connected);
    CHECK(component_profile(Signature({4})) == ComponentProfile::HypNonhyp);        // g = 3
    CHECK(component_profile(Signature({2})) == ComponentProfile::Connected);        // g = 2
    CHECK(component_profile(Signature({2, 2, 2})) == ComponentProfile::OddEven);    // g = 4
    CHECK(component_profile(Signature({3, 3})) == ComponentProfile::HypNonhyp);     // g = 4, (g-1,g-1) odd
    CHECK(component_profile(Signature({4, 4})) == ComponentProfile::OddEvenHyp);    // g = 5, (g-1,g-1) even
}

TEST_CASE("signature validation") {
    CHECK_THROWS(Signature({1}));      // odd total
    CHECK_THROWS(Signature({-3, -3})); // negative genus
    CHECK(Signature::parse("2,2,2").genus() == 4);
    CHECK(Signature::parse("24").str() == "(24)");
}

TEST_CASE("w_lambda coefficients") {
    CHECK(w_lambda_mid(Signature({24})) == rat(51, 52));
    // odd equidistributed correction 3/(2s^2+4s)
    for (long long s : {1, 3, 5}) {
        for (long long n : {4, 6, 8}) {
            if ((s * n) % 2) continue;
            Signature sig{std::vector<long long>(n, s)};
            CHECK(w_lambda_app(sig) - w_lambda_mid(sig) == Rat(3) / Rat(2 * s * s + 4 * s));
        }
    }
}
