#include "msd/nccomp.hpp"

#include <algorithm>

namespace msd {

std::string to_string(DncVersion v) {
    switch (v) {
        case DncVersion::V1: return "v1";
        case DncVersion::V2: return "v2";
        case DncVersion::RefinedMinimal: return "refined";
    }
    return "?";
}

DncVersion parse_dnc(const std::string& s) {
    if (s == "v1" || s == "V1") return DncVersion::V1;
    if (s == "v2" || s == "V2") return DncVersion::V2;
    if (s == "refined" || s == "dnc-refined") return DncVersion::RefinedMinimal;
    throw std::invalid_argument("unknown D_NC version '" + s + "'");
}

namespace {

// RMB override on a sorted prong multiset; ties resolve to the smaller value.
std::optional<Rat> rmb_refined(const std::vector<long long>& prongs, long long lcm) {
    long long E = static_cast<long long>(prongs.size());
    if (E < 2) return std::nullopt;
    std::optional<Rat> best;
    auto offer = [&](const Rat& r) {
        if (!best || r < *best) best = r;
    };
    long long p = prongs.back();
    bool ones_head = std::all_of(prongs.begin(), prongs.end() - 1,
                                 [](long long x) { return x == 1; });
    if (ones_head && p >= 2 * E - 3) offer(Rat(1) / Rat(lcm));
    if (E >= 2) {
        bool pattern = std::all_of(prongs.begin(), prongs.end() - 2,
                                   [](long long x) { return x == 1; }) &&
                       prongs[E - 2] == 2;
        if (pattern && p >= 2 * E - 2) offer(Rat(1) / Rat(lcm));
    }
    bool has_one = prongs.front() == 1;
    bool has_large = prongs.back() > 7;
    if (has_one && has_large) {
        Rat pinv = 0;
        for (long long q : prongs) pinv += rat(1, q);
        offer(pinv / Rat(E + 1));
    }
    return best;
}

}  // namespace

Rat r_nc(const GraphData& d, DncVersion version) {
    if (d.sig.genus() < 2) throw std::domain_error("D_NC requires g >= 2");
    if (version == DncVersion::RefinedMinimal) {
        if (!d.sig.is_minimal())
            throw std::domain_error("the refined D_NC applies to minimal strata only");
        if (d.shapes.is_RMB) {
            std::vector<long long> prongs;
            for (const auto& e : d.graph.edges) prongs.push_back(e.prong);
            std::sort(prongs.begin(), prongs.end());
            if (auto r = rmb_refined(prongs, d.lcm_prongs)) return *r;
        }
        // fall through to the v2 coefficients
    }
    Rat nct_coef = version == DncVersion::V1 ? rat(1, 2) : Rat(1) / Rat(d.E);
    Rat r = 0;
    for (size_t i = 0; i < d.graph.edges.size(); ++i) {
        Rat pinv = rat(1, d.graph.edges[i].prong);
        switch (d.edge_types[i]) {
            case EdgeType::NCT: r += nct_coef * pinv; break;
            case EdgeType::RBT: r += pinv; break;
            case EdgeType::OCT: r += 2 * pinv; break;
            case EdgeType::EDB: r += 4 * pinv; break;
        }
    }
    if (version != DncVersion::V1) r += Rat(d.v_top - 1);
    return r;
}

Rat r_nc_profile(const GraphProfile& p, long long g, DncVersion version) {
    if (g < 2) throw std::domain_error("D_NC requires g >= 2");
    bool rmb = p.v_top == 1 && p.E >= 2 && (g - p.g_top - (p.E - p.v_top)) == 0;
    if (version == DncVersion::RefinedMinimal && rmb) {
        if (auto r = rmb_refined(p.prongs, p.lcm_prongs())) return *r;
    }
    Rat nct_coef = version == DncVersion::V1 ? rat(1, 2) : Rat(1) / Rat(p.E);
    Rat r = nct_coef * p.P_inv();
    if (version != DncVersion::V1) r += Rat(p.v_top - 1);
    return r;
}

Rat r_nc_structural(const TwoLevelGraph& g, DncVersion version, bool minimal_stratum) {
    auto types = classify_edges(g);
    long long E = static_cast<long long>(g.edges.size());
    long long v_top = static_cast<long long>(g.top.size());
    if (version == DncVersion::RefinedMinimal && minimal_stratum && v_top == 1 &&
        g.bottom.size() == 1 && E >= 2 && g.bottom[0].genus == 0) {
        std::vector<long long> prongs;
        long long l = 1;
        for (const auto& e : g.edges) {
            prongs.push_back(e.prong);
            l = lcm_ll(l, e.prong);
        }
        std::sort(prongs.begin(), prongs.end());
        if (auto r = rmb_refined(prongs, l)) return *r;
    }
    Rat nct_coef = version == DncVersion::V1 ? rat(1, 2) : Rat(1) / Rat(E);
    Rat r = 0;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        Rat pinv = rat(1, g.edges[i].prong);
        switch (types[i]) {
            case EdgeType::NCT: r += nct_coef * pinv; break;
            case EdgeType::RBT: r += pinv; break;
            case EdgeType::OCT: r += 2 * pinv; break;
            case EdgeType::EDB: r += 4 * pinv; break;
        }
    }
    if (version != DncVersion::V1) r += Rat(v_top - 1);
    return r;
}

Rat b_nc(const GraphData& d, DncVersion version) {
    return Rat(d.lcm_prongs) * r_nc(d, version) - 1;
}

Rat r_star(const GraphData& d, DncVersion version) {
    return r_star(d, version, d.shapes.delta_H);
}

Rat r_star(const GraphData& d, DncVersion version, int delta_H) {
    return r_nc(d, version) + Rat(delta_H) / Rat(d.lcm_prongs);
}

Rat r_star_profile(const GraphProfile& p, long long g, DncVersion version, int delta_H) {
    return r_nc_profile(p, g, version) + Rat(delta_H) / Rat(p.lcm_prongs());
}

Rat r_upper_bound(const GraphData& d) {
    Rat r = 0;
    for (size_t i = 0; i < d.graph.edges.size(); ++i) {
        Rat pinv = rat(1, d.graph.edges[i].prong);
        switch (d.edge_types[i]) {
            case EdgeType::NCT: r += pinv / 2; break;
            case EdgeType::RBT: r += pinv; break;
            case EdgeType::OCT: r += 2 * pinv; break;
            case EdgeType::EDB: r += 4 * pinv; break;
        }
    }
    return r + Rat(d.shapes.delta_H) / Rat(d.lcm_prongs);
}

}  // namespace msd
