#include "msd/levelgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace msd {

std::string to_string(EdgeType t) {
    switch (t) {
        case EdgeType::NCT: return "NCT";
        case EdgeType::RBT: return "RBT";
        case EdgeType::EDB: return "EDB";
        case EdgeType::OCT: return "OCT";
    }
    return "?";
}

namespace {

// Union-find over top vertices [0, vt) and bottom vertices [vt, vt+vb).
struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Side of edge `skip` containing the bottom end; returns the vertex sets of
// the component NOT containing the top end, or nullopt if non-separating.
struct SplitSide {
    std::vector<int> tops, bots;  // indices of the side containing the lower end
    long long arith_genus = 0;
};

std::optional<SplitSide> split_at_edge(const TwoLevelGraph& g, size_t skip) {
    int vt = static_cast<int>(g.top.size());
    int vb = static_cast<int>(g.bottom.size());
    DSU dsu(vt + vb);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (i == skip) continue;
        dsu.unite(g.edges[i].top, vt + g.edges[i].bot);
    }
    int top_root = dsu.find(g.edges[skip].top);
    int bot_root = dsu.find(vt + g.edges[skip].bot);
    if (top_root == bot_root) return std::nullopt;
    SplitSide side;
    long long genus_sum = 0;
    int nverts = 0;
    long long internal_edges = 0;
    for (int v = 0; v < vt; ++v)
        if (dsu.find(v) == bot_root) {
            side.tops.push_back(v);
            genus_sum += g.top[v].genus;
            ++nverts;
        }
    for (int v = 0; v < vb; ++v)
        if (dsu.find(vt + v) == bot_root) {
            side.bots.push_back(v);
            genus_sum += g.bottom[v].genus;
            ++nverts;
        }
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (i == skip) continue;
        if (dsu.find(g.edges[i].top) == bot_root) ++internal_edges;
    }
    side.arith_genus = genus_sum + internal_edges - nverts + 1;
    return side;
}

}  // namespace

std::vector<EdgeType> classify_edges(const TwoLevelGraph& graph) {
    std::vector<EdgeType> types(graph.edges.size(), EdgeType::NCT);
    for (size_t i = 0; i < graph.edges.size(); ++i) {
        auto side = split_at_edge(graph, i);
        if (!side) continue;  // non-separating
        if (graph.edges.size() == 1) {
            // vertical dumbbell; elliptic if one end has genus one
            long long gu = graph.top[graph.edges[0].top].genus;
            long long gl = graph.bottom[graph.edges[0].bot].genus;
            // arithmetic genus of either side (single edge: sides are full halves)
            long long top_side = 0, bot_side = 0;
            {
                for (const auto& v : graph.top) top_side += v.genus;
                for (const auto& v : graph.bottom) bot_side += v.genus;
                (void)gu;
                (void)gl;
            }
            if (side->bots.size() == 1 && side->tops.empty() &&
                graph.bottom[side->bots[0]].genus == 0) {
                types[i] = EdgeType::RBT;
            } else if (top_side == 1 || bot_side == 1) {
                types[i] = EdgeType::EDB;
            } else {
                types[i] = EdgeType::OCT;
            }
            continue;
        }
        if (side->tops.empty() && side->bots.size() == 1 &&
            graph.bottom[side->bots[0]].genus == 0) {
            types[i] = EdgeType::RBT;
        } else {
            types[i] = EdgeType::OCT;
        }
    }
    return types;
}

std::vector<MgBoundaryImage> map_to_Mg_boundary(const TwoLevelGraph& graph) {
    long long g = 0;
    for (const auto& v : graph.top) g += v.genus;
    for (const auto& v : graph.bottom) g += v.genus;
    g += static_cast<long long>(graph.edges.size()) -
         static_cast<long long>(graph.top.size() + graph.bottom.size()) + 1;

    std::vector<MgBoundaryImage> out(graph.edges.size());
    for (size_t i = 0; i < graph.edges.size(); ++i) {
        auto side = split_at_edge(graph, i);
        if (!side) {
            out[i].irreducible = true;
            continue;
        }
        long long a = side->arith_genus;
        long long b = g - a;
        if (a == 0 || b == 0) {
            out[i].contracted = true;
        } else {
            out[i].i = std::min(a, b);
        }
    }
    return out;
}

std::vector<std::optional<long long>> marked_side_genus(const TwoLevelGraph& graph, int leg) {
    long long g = 0;
    for (const auto& v : graph.top) g += v.genus;
    for (const auto& v : graph.bottom) g += v.genus;
    g += static_cast<long long>(graph.edges.size()) -
         static_cast<long long>(graph.top.size() + graph.bottom.size()) + 1;

    std::vector<std::optional<long long>> out(graph.edges.size());
    for (size_t i = 0; i < graph.edges.size(); ++i) {
        auto side = split_at_edge(graph, i);
        if (!side) continue;
        bool leg_in_lower_side = false;
        for (int v : side->tops)
            for (int l : graph.top[v].legs)
                if (l == leg) leg_in_lower_side = true;
        for (int v : side->bots)
            for (int l : graph.bottom[v].legs)
                if (l == leg) leg_in_lower_side = true;
        out[i] = leg_in_lower_side ? side->arith_genus : g - side->arith_genus;
    }
    return out;
}

bool GraphData::leg_on_bottom(size_t leg_index) const {
    for (const auto& v : graph.bottom)
        for (int l : v.legs)
            if (static_cast<size_t>(l) == leg_index) return true;
    return false;
}

Rat GraphData::vartheta_top(const WeightVector& alpha) const {
    validate_weights(sig, alpha);
    Rat t = 0;
    for (const auto& v : graph.top)
        for (int l : v.legs) {
            long long a = alpha.alpha[l];
            t += rat(a * (a + 1), 2 * (sig.order(l) + 1));
        }
    // edge legs carry alpha = 0 and contribute nothing
    return t;
}

Rat GraphData::vartheta_bot(const WeightVector& alpha) const {
    return vartheta(sig, alpha) - vartheta_top(alpha);
}

ShapeFlags shape_flags(const GraphData& d, bool conservative) {
    ShapeFlags f;
    const auto& g = d.graph;
    bool tree = d.E == d.v_top + d.v_bot - 1;

    // HTB: tree, unique bottom vertex, every top vertex legless with one edge.
    if (tree && d.v_bot == 1) {
        bool ok = true;
        std::vector<int> degree(g.top.size(), 0);
        for (const auto& e : g.edges) ++degree[e.top];
        for (size_t v = 0; v < g.top.size(); ++v)
            if (!g.top[v].legs.empty() || degree[v] != 1) ok = false;
        // type (2g_i - 2) forces the prong 2 g_i - 1; the order equation already
        // guarantees this on valid graphs, so the structural test suffices.
        f.is_HTB = ok;
    }

    // HBT: tree, every bottom vertex has exactly one leg of even positive order
    // and only odd prongs (pole orders -p_e-1 even).
    if (tree) {
        bool ok = true;
        for (const auto& v : g.bottom) {
            if (v.legs.size() != 1) ok = false;
            else {
                long long m = d.sig.order(v.legs[0]);
                if (m <= 0 || m % 2 != 0) ok = false;
            }
        }
        for (const auto& e : g.edges)
            if (e.prong % 2 == 0) ok = false;
        f.is_HBT = ok;
    }

    // HBB (minimal strata): unique bottom vertex with the zero; each top vertex
    // carries either a single fixed edge of odd prong or one equal-prong banana
    // pair; at least one pair.
    if (d.sig.is_minimal() && d.v_bot == 1) {
        bool ok = true;
        long long pairs = 0;
        std::map<int, std::vector<long long>> at_top;
        for (const auto& e : g.edges) at_top[e.top].push_back(e.prong);
        for (size_t v = 0; v < g.top.size(); ++v) {
            auto it = at_top.find(static_cast<int>(v));
            if (it == at_top.end()) { ok = false; break; }
            auto& ps = it->second;
            if (ps.size() == 1) {
                if (ps[0] % 2 == 0) ok = false;
            } else if (ps.size() == 2) {
                if (ps[0] != ps[1]) ok = false;
                else ++pairs;
            } else {
                ok = false;
            }
        }
        f.is_HBB = ok && pairs >= 1;
    }

    // RMB (minimal strata): one top, one bottom, E >= 2, rational bottom.
    if (d.sig.is_minimal() && d.v_top == 1 && d.v_bot == 1 && d.E >= 2 &&
        g.bottom[0].genus == 0)
        f.is_RMB = true;

    bool both = f.is_HTB && f.is_HBT && d.sig.is_minimal();
    if (conservative) {
        f.delta_H = both ? 0 : 1;
    } else {
        f.delta_H = ((f.is_HTB || f.is_HBT || f.is_HBB) && !both) ? 1 : 0;
    }
    return f;
}

GraphData validate(const TwoLevelGraph& graph, const Signature& sig, bool conservative_shapes) {
    GraphData d{graph, sig};
    const auto& g = d.graph;
    if (g.top.empty() || g.bottom.empty())
        throw ValidationError("two-level graph needs vertices on both levels");
    if (g.edges.empty()) throw ValidationError("two-level graph needs at least one edge");

    d.E = static_cast<long long>(g.edges.size());
    d.v_top = static_cast<long long>(g.top.size());
    d.v_bot = static_cast<long long>(g.bottom.size());

    std::vector<int> seen(sig.size(), 0);
    for (const auto& v : g.top)
        for (int l : v.legs) {
            if (l < 0 || static_cast<size_t>(l) >= sig.size())
                throw ValidationError("leg index out of range");
            ++seen[l];
            ++d.n_top;
            d.M_top += sig.order(l);
            if (sig.order(l) == -1) throw ValidationError("simple pole legs are not supported on two-level graphs");
            d.M_top_inv += rat(1, sig.order(l) + 1);
        }
    for (const auto& v : g.bottom)
        for (int l : v.legs) {
            if (l < 0 || static_cast<size_t>(l) >= sig.size())
                throw ValidationError("leg index out of range");
            ++seen[l];
            ++d.n_bot;
        }
    for (size_t i = 0; i < sig.size(); ++i)
        if (seen[i] != 1)
            throw ValidationError("leg " + std::to_string(i) + " must appear exactly once");

    for (const auto& e : g.edges) {
        if (e.top < 0 || e.top >= d.v_top || e.bot < 0 || e.bot >= d.v_bot)
            throw ValidationError("edge endpoint out of range");
        if (e.prong < 1) throw ValidationError("prong must be >= 1 on vertical edges");
        d.P += e.prong;
        d.P_inv += rat(1, e.prong);
        d.lcm_prongs = lcm_ll(d.lcm_prongs, e.prong);
    }

    // connectivity
    {
        DSU dsu(static_cast<int>(d.v_top + d.v_bot));
        for (const auto& e : g.edges) dsu.unite(e.top, static_cast<int>(d.v_top) + e.bot);
        int root = dsu.find(0);
        for (int v = 0; v < d.v_top + d.v_bot; ++v)
            if (dsu.find(v) != root) throw ValidationError("graph is disconnected");
    }

    // order equations and stability
    for (long long v = 0; v < d.v_top; ++v) {
        long long sum = 0, deg = 0;
        for (int l : g.top[v].legs) sum += sig.order(l);
        for (const auto& e : g.edges)
            if (e.top == v) { sum += e.prong - 1; ++deg; }
        if (sum != 2 * g.top[v].genus - 2)
            throw ValidationError("top vertex " + std::to_string(v) + " violates the order equation");
        if (2 * g.top[v].genus - 2 + deg + static_cast<long long>(g.top[v].legs.size()) <= 0)
            throw ValidationError("top vertex " + std::to_string(v) + " is unstable");
        d.g_top += g.top[v].genus;
    }
    for (long long v = 0; v < d.v_bot; ++v) {
        long long sum = 0, deg = 0;
        for (int l : g.bottom[v].legs) sum += sig.order(l);
        for (const auto& e : g.edges)
            if (e.bot == v) { sum -= e.prong + 1; ++deg; }
        if (sum != 2 * g.bottom[v].genus - 2)
            throw ValidationError("bottom vertex " + std::to_string(v) + " violates the order equation");
        if (2 * g.bottom[v].genus - 2 + deg + static_cast<long long>(g.bottom[v].legs.size()) <= 0)
            throw ValidationError("bottom vertex " + std::to_string(v) + " is unstable");
        d.g_bot += g.bottom[v].genus;
    }

    long long genus = d.g_top + d.g_bot + d.E - (d.v_top + d.v_bot) + 1;
    if (genus != sig.genus())
        throw ValidationError("graph genus " + std::to_string(genus) + " differs from signature genus");

    // kappa on each level, including the edges as legs
    d.kappa_top = Rat(d.M_top + d.n_top) - d.M_top_inv + Rat(d.P) - d.P_inv;
    d.kappa_bot = kappa_mu(sig) - d.kappa_top;
    // dimensions: N_top = M_top + n_top + P + v_top, N_bot the complement
    d.N_top = d.M_top + d.n_top + d.P + d.v_top;
    d.N_bot = unprojectivized_dim(sig) - d.N_top;

    d.edge_types = classify_edges(g);
    d.mg_images = map_to_Mg_boundary(g);
    d.shapes = shape_flags(d, conservative_shapes);
    return d;
}

long long GraphProfile::P() const {
    long long s = 0;
    for (long long p : prongs) s += p;
    return s;
}

Rat GraphProfile::P_inv() const {
    Rat s = 0;
    for (long long p : prongs) s += rat(1, p);
    return s;
}

long long GraphProfile::lcm_prongs() const {
    long long l = 1;
    for (long long p : prongs) l = lcm_ll(l, p);
    return l;
}

long long GraphProfile::ones() const {
    return std::count(prongs.begin(), prongs.end(), 1LL);
}

std::string GraphProfile::str() const {
    std::string s = "(v=" + std::to_string(v_top) + ",g=" + std::to_string(g_top) +
                    ",E=" + std::to_string(E) + ",p=[";
    for (size_t i = 0; i < prongs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(prongs[i]);
    }
    return s + "])";
}

bool profile_is_hbb_candidate(const GraphProfile& p) {
    long long f = 2 * p.v_top - p.E;  // fixed edges
    long long q = p.E - p.v_top;      // banana pairs
    if (f < 0 || q < 1) return false;
    // greedy: pair up equal prongs, leave f odd singletons
    std::map<long long, long long> count;
    for (long long x : p.prongs) ++count[x];
    // try every split: for each prong value choose how many pairs to take
    // (small multisets; recursion over values)
    std::vector<std::pair<long long, long long>> vals(count.begin(), count.end());
    std::function<bool(size_t, long long, long long)> rec = [&](size_t idx, long long fleft,
                                                                long long qleft) -> bool {
        if (idx == vals.size()) return fleft == 0 && qleft == 0;
        auto [val, cnt] = vals[idx];
        for (long long pairs = 0; 2 * pairs <= cnt && pairs <= qleft; ++pairs) {
            long long singles = cnt - 2 * pairs;
            if (singles > fleft) continue;
            if (singles > 0 && val % 2 == 0) continue;  // fixed edges have odd prongs
            if (rec(idx + 1, fleft - singles, qleft - pairs)) return true;
        }
        return false;
    };
    return rec(0, f, q);
}

namespace {

// Enumerates multisets of E prongs >= 1 summing to P, ascending.
bool enumerate_partitions(long long P, long long E, long long minpart,
                          std::vector<long long>& cur,
                          const std::function<bool(const std::vector<long long>&)>& cb) {
    if (E == 0) return P == 0 ? cb(cur) : true;
    for (long long p = minpart; p * E <= P; ++p) {
        if (P - p < (E - 1) * p) break;
        cur.push_back(p);
        bool go = enumerate_partitions(P - p, E - 1, p, cur, cb);
        cur.pop_back();
        if (!go) return false;
    }
    return true;
}

}  // namespace

size_t enumerate_minimal_profiles(long long g, EnumerationMode mode,
                                  const std::function<bool(const GraphProfile&)>& cb) {
    size_t count = 0;
    bool stopped = false;
    auto emit = [&](GraphProfile& p) {
        ++count;
        if (!cb(p)) stopped = true;
        return !stopped;
    };
    if (mode == EnumerationMode::Reduced) {
        for (long long E = 1; E <= g && !stopped; ++E) {
            for (long long gt = 1; gt <= g - E + 1 && !stopped; ++gt) {
                long long gbot = g - gt - E + 1;
                if (gbot == 0 && E < 2) continue;  // rational bottom needs >= 2 edges
                long long P = 2 * gt - 2 + E;
                if (P < E) continue;
                GraphProfile p;
                p.v_top = 1;
                p.g_top = gt;
                p.E = E;
                // most equidistributed
                p.prongs.assign(E, P / E);
                for (long long i = 0; i < P % E; ++i) ++p.prongs[E - 1 - i];
                std::sort(p.prongs.begin(), p.prongs.end());
                if (!emit(p)) break;
                // most unbalanced
                GraphProfile q = p;
                q.prongs.assign(E - 1, 1);
                q.prongs.push_back(P - (E - 1));
                if (q.prongs != p.prongs)
                    if (!emit(q)) break;
            }
        }
        return count;
    }
    for (long long vt = 1; vt <= g && !stopped; ++vt) {
        for (long long E = vt; E <= g && !stopped; ++E) {
            for (long long gt = vt; gt <= g - E + vt && !stopped; ++gt) {
                long long gbot = g - gt - (E - vt);
                if (gbot < 0) continue;
                if (gbot == 0 && E < 2) continue;  // bottom stability (1 leg + E edges)
                long long P = 2 * gt - 2 * vt + E;
                if (P < E) continue;
                GraphProfile p;
                p.v_top = vt;
                p.g_top = gt;
                p.E = E;
                std::vector<long long> cur;
                enumerate_partitions(P, E, 1, cur, [&](const std::vector<long long>& parts) {
                    p.prongs = parts;
                    return emit(p);
                });
            }
        }
    }
    return count;
}

}  // namespace msd
