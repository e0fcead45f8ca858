#include "msd/reidtai.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace msd {

Rat age(const EigenSpectrum& spec, long long projectivizer) {
    if (spec.order < 1) throw std::invalid_argument("order must be >= 1");
    if (projectivizer < 0 || projectivizer >= spec.order)
        throw std::invalid_argument("projectivizer must lie in [0, k)");
    long long total = 0;
    for (long long a : spec.exponents) {
        long long r = (a - projectivizer) % spec.order;
        if (r < 0) r += spec.order;
        total += r;
    }
    return rat(total, spec.order);
}

Rat phi_k(long long k, long long a) {
    if (k < 1) throw std::invalid_argument("phi_k needs k >= 1");
    long long total = 0;
    for (long long n = 1; n < k; ++n) {
        if (std::gcd(n, k) != 1) continue;
        long long r = (n - a) % k;
        if (r < 0) r += k;
        total += r;
    }
    return rat(total, k);
}

int MultiLevelGraph::depth() const {
    int lo = 0;
    for (const auto& v : vertices) lo = std::min(lo, v.level);
    return -lo;
}

bool MultiLevelGraph::crosses(const MLEdge& e, int j) const {
    return vertices[e.upper].level > -j && vertices[e.lower].level <= -j;
}

long long MultiLevelGraph::passage_lcm(int j) const {
    long long l = 1;
    for (const auto& e : edges)
        if (crosses(e, j)) l = lcm_ll(l, e.prong);
    return l;
}

void MultiLevelGraph::validate_structure() const {
    if (vertices.empty()) throw ValidationError("graph has no vertices");
    for (const auto& e : edges) {
        if (e.upper < 0 || e.upper >= static_cast<int>(vertices.size()) || e.lower < 0 ||
            e.lower >= static_cast<int>(vertices.size()))
            throw ValidationError("edge endpoint out of range");
        if (vertices[e.upper].level <= vertices[e.lower].level)
            throw ValidationError("edges must go from a higher to a strictly lower level (no horizontal edges)");
        if (e.prong < 1) throw ValidationError("prong must be >= 1");
    }
    std::set<int> levels;
    for (const auto& v : vertices) levels.insert(v.level);
    for (int l = 0; l >= -depth(); --l)
        if (!levels.count(l)) throw ValidationError("levels must be consecutive from 0 downward");
    if (!vertices.empty()) {
        std::vector<int> parent(vertices.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& e : edges) parent[find(e.upper)] = find(e.lower);
        for (size_t v = 1; v < vertices.size(); ++v)
            if (find(static_cast<int>(v)) != find(0)) throw ValidationError("graph is disconnected");
    }
}

TwoLevelGraph undegenerate(const MultiLevelGraph& g, int j) {
    int L = g.depth();
    if (j < 1 || j > L) throw std::invalid_argument("passage out of range");
    int n = static_cast<int>(g.vertices.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges)
        if (!g.crosses(e, j)) parent[find(e.upper)] = find(e.lower);

    // component -> merged vertex: genus = sum of genera + independent cycles
    std::map<int, int> comp_index;
    std::vector<long long> genus_sum, vcount, ecount;
    std::vector<bool> above;
    std::vector<std::vector<int>> legs;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        auto [it, fresh] = comp_index.try_emplace(r, static_cast<int>(genus_sum.size()));
        if (fresh) {
            genus_sum.push_back(0);
            vcount.push_back(0);
            ecount.push_back(0);
            above.push_back(g.vertices[v].level > -j);
            legs.emplace_back();
        }
        int c = it->second;
        genus_sum[c] += g.vertices[v].genus;
        vcount[c] += 1;
        for (int l : g.vertices[v].legs) legs[c].push_back(l);
    }
    for (const auto& e : g.edges)
        if (!g.crosses(e, j)) ecount[comp_index.at(find(e.upper))] += 1;

    TwoLevelGraph out;
    std::vector<int> to_out(genus_sum.size());
    for (size_t c = 0; c < genus_sum.size(); ++c) {
        VertexData v;
        v.genus = genus_sum[c] + ecount[c] - vcount[c] + 1;
        v.legs = legs[c];
        if (above[c]) {
            to_out[c] = static_cast<int>(out.top.size());
            out.top.push_back(v);
        } else {
            to_out[c] = static_cast<int>(out.bottom.size());
            out.bottom.push_back(v);
        }
    }
    for (const auto& e : g.edges)
        if (g.crosses(e, j))
            out.edges.push_back({to_out[comp_index.at(find(e.upper))],
                                 to_out[comp_index.at(find(e.lower))], e.prong});
    return out;
}

Rat edge_contribution(const MultiLevelGraph& g, const AutomorphismProfile& p, size_t edge) {
    const auto& e = g.edges[edge];
    Rat c = 0;
    int L = g.depth();
    for (int j = 1; j <= L; ++j)
        if (g.crosses(e, j)) c += Rat(g.passage_lcm(j)) / Rat(e.prong) * p.s[j - 1];
    return c;
}

namespace {

bool is_positive_integer(const Rat& r) { return r > 0 && den(r) == 1; }

}  // namespace

void check_profile(const MultiLevelGraph& g, const AutomorphismProfile& p) {
    int L = g.depth();
    if (static_cast<int>(p.s.size()) != L)
        throw ProfileError("profile provides " + std::to_string(p.s.size()) + " arguments for " +
                           std::to_string(L) + " level passages");
    if (p.vertex_order.size() != g.vertices.size() || p.vertex_age.size() != g.vertices.size())
        throw ProfileError("per-vertex data size mismatch");
    for (const auto& sj : p.s)
        if (sj < 0 || sj >= 1) throw ProfileError("arguments s_j must lie in [0,1)");

    std::vector<int> grouped(g.edges.size(), 0);
    auto lcm_orders = [&](size_t ei) {
        const auto& e = g.edges[ei];
        return lcm_ll(p.vertex_order[e.upper], p.vertex_order[e.lower]);
    };
    auto check_edge = [&](size_t ei) {
        long long k1 = p.vertex_order[g.edges[ei].upper];
        long long k2 = p.vertex_order[g.edges[ei].lower];
        Rat ce = edge_contribution(g, p, ei);
        if (k1 == k2 && ce == 0) return;           // trivial fixed edge
        if (!is_positive_integer(Rat(lcm_orders(ei)) * ce))
            throw ProfileError("edge " + std::to_string(ei) +
                               " violates the integrality constraint lcm(k1,k2)*c_e in Z_{>0}");
    };
    for (const auto& pr : p.swapped_pairs) {
        for (int ei : pr) grouped[ei] = 1;
        if (g.edges[pr[0]].prong != g.edges[pr[1]].prong)
            throw ProfileError("swapped edges must have equal prongs");
    }
    for (const auto& tr : p.tripled_groups) {
        for (int ei : tr) grouped[ei] = 1;
        if (g.edges[tr[0]].prong != g.edges[tr[1]].prong ||
            g.edges[tr[1]].prong != g.edges[tr[2]].prong)
            throw ProfileError("permuted edges must have equal prongs");
    }
    for (size_t ei = 0; ei < g.edges.size(); ++ei) check_edge(ei);
    (void)grouped;
}

Rat c_tau(const MultiLevelGraph& g, const AutomorphismProfile& p, DncVersion version,
          bool minimal_stratum) {
    g.validate_structure();
    check_profile(g, p);
    int L = g.depth();
    Rat c = 0;
    for (int j = 1; j <= L; ++j) {
        if (p.s[j - 1] == 0) continue;
        TwoLevelGraph two = undegenerate(g, j);
        Rat rnc = r_nc_structural(two, version, minimal_stratum);
        c += Rat(g.passage_lcm(j)) * rnc * p.s[j - 1];
    }
    for (const auto& a : p.vertex_age) c += a;
    return c;
}

const std::vector<AgeTableEntry>& age_table() {
    static const std::vector<AgeTableEntry> table = {
        {"H", 2, Rat(0), false, "hyperelliptic differentials"},
        {"1", 2, rat(1, 2), false, "POm_1({0,0})"},
        {"2", 3, rat(1, 3), false, "POm_0({m,m,m},-3m-2)"},
        {"3", 3, rat(2, 3), false, "POm_2(m,2-m), 1!=m=1 mod 3"},
        {"4", 3, rat(1, 3), false, "POm_1(0)"},
        {"5", 3, rat(1, 3), false, "POm_1(m,-m), 0!=m=0 mod 3"},
        {"6", 3, rat(2, 3), false, "POm_1({0,0,0})"},
        {"7", 3, rat(2, 3), false, "POm_1({m,m,m},-3m), m!=0"},
        {"8", 4, rat(3, 4), false, "POm_0({m,m,m,m},-4m-2)"},
        {"9", 4, rat(1, 2), false, "POm_1(0)"},
        {"10", 4, rat(1, 2), false, "POm_1(m,-m), m even"},
        {"11", 4, rat(3, 4), false, "POm_1({0,0})"},
        {"12", 4, rat(3, 4), false, "POm_1({m,m},-2m), m even"},
        {"13", 6, rat(1, 3), false, "POm_1(0)"},
        {"RH", 2, Rat(0), true, "hyperelliptic differentials"},
        {"R1", 3, rat(1, 3), true, "POm_0(3m1+m2-2,-m2,{-m1}^3)"},
        {"R2", 3, rat(1, 3), true, "POm_0({m1+m2-1}^3,-3m1,1-3m2)"},
        {"R3", 3, rat(2, 3), true, "POm_2(m1+m2+m3+2,-m1,-m2,-m3)"},
        {"R4", 3, rat(2, 3), true, "POm_2(m1+m2+2,-m1,-m2)"},
        {"R5", 3, rat(1, 3), true, "POm_1(m1+m2,-m1,-m2)"},
        {"R6", 4, rat(3, 4), true, "POm_1({m1+m2}^2,-2m1,-2m2)"},
        {"R7", 4, rat(3, 4), true, "POm_1(4m1+2m2,{-2m1}^2,-2m2)"},
    };
    return table;
}

Rat min_age_for_order(long long k) {
    switch (k) {
        case 1: return Rat(0);
        case 2: return Rat(0);
        case 3: return rat(1, 3);
        case 4: return rat(1, 2);
        case 6: return rat(1, 3);
        default: return Rat(1);  // not in the tables: age >= 1
    }
}

}  // namespace msd
