// Bounded exhaustive verification of the compensation inequality c(tau) >= 1.
//
// Configurations are abstract automorphism profiles on multi-level graphs:
// vertex species drawn from the age tables (order, age lower bound, and the
// exact zero/pole slot pattern of the listed strata), level-rotation arguments
// s_j on a rational grid, and the edge integrality constraints for fixed and
// permuted edges. Quasi-reflections and all-trivial-passage profiles are
// excluded, and any assignment whose vertex ages already sum to >= 1 is
// skipped since c(tau) >= 1 holds there outright.

#include "msd/reidtai.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace msd {

namespace {

struct EdgeSlot {
    int upper, lower;
    long long prong = 1;
    int group = -1;  // swap/triple group id, -1 for fixed
};

enum class SpeciesTag { Triv, Hyp0, HypHalf, O3Third, O3TwoThirds, O4Half, O4ThreeQ, O6Third };

struct Species {
    SpeciesTag tag;
    long long order;
    Rat age;
};

const std::vector<Species>& species_list() {
    static const std::vector<Species> list = {
        {SpeciesTag::Triv, 1, Rat(0)},
        {SpeciesTag::Hyp0, 2, Rat(0)},
        {SpeciesTag::HypHalf, 2, rat(1, 2)},
        {SpeciesTag::O3Third, 3, rat(1, 3)},
        {SpeciesTag::O3TwoThirds, 3, rat(2, 3)},
        {SpeciesTag::O4Half, 4, rat(1, 2)},
        {SpeciesTag::O4ThreeQ, 4, rat(3, 4)},
        {SpeciesTag::O6Third, 6, rat(1, 3)},
    };
    return list;
}

struct VertexLocal {
    int level = 0;
    int genus = 0;  // 0, 1, 2 (= two or more)
    long long down_fixed = 0, up_fixed = 0;
    long long down_pairs = 0, up_pairs = 0;
    long long down_triples = 0, up_triples = 0;
    long long up_fixed_forced = 0;   // component-GRC forced pole edges
    long long up_pairs_forced = 0;   // component-GRC forced pole pairs
};

// Slot demands of a species given the local edge pattern. Returns the number
// of marked zero legs / pole legs needed, or nullopt when incompatible.
struct LegPlan {
    long long zero_legs = 0;
    long long pole_legs = 0;
};

std::optional<LegPlan> match_species(const Species& sp, const VertexLocal& v) {
    auto no_swaps = [&] { return v.down_pairs + v.up_pairs + v.down_triples + v.up_triples == 0; };
    switch (sp.tag) {
        case SpeciesTag::Triv:
            if (!no_swaps()) return std::nullopt;  // order 1 fixes everything
            return LegPlan{};                      // stability legs free, not tracked
        case SpeciesTag::HypHalf:
            if (v.down_triples + v.up_triples > 0) return std::nullopt;  // 3 does not divide 2
            return LegPlan{};
        case SpeciesTag::Hyp0: {
            if (v.down_triples + v.up_triples > 0) return std::nullopt;
            // at most one fixed zero-object or one permuted pair of zeros
            if (v.down_pairs > 1) return std::nullopt;
            if (v.down_pairs == 1 && v.down_fixed > 0) return std::nullopt;
            if (v.down_fixed > 1) return std::nullopt;
            LegPlan plan;
            long long zero_objects = v.down_fixed + (v.down_pairs ? 2 : 0);
            // poles: every unit forced except at most one (residue theorem)
            long long unforced =
                (v.up_fixed - v.up_fixed_forced) + (v.up_pairs - v.up_pairs_forced);
            if (unforced > 1) return std::nullopt;
            // stability and fixed-point bound
            long long deg = v.down_fixed + 2 * v.down_pairs + v.up_fixed + 2 * v.up_pairs;
            long long zleg_budget = (v.down_fixed + v.down_pairs == 0) ? 1 : 0;
            long long need = v.genus == 0 ? 3 - deg : 1 - deg;
            if (need > zleg_budget) return std::nullopt;
            plan.zero_legs = std::max(0LL, need);
            long long fixed_objects = v.down_fixed + v.up_fixed + plan.zero_legs;
            long long maxfixed = v.genus == 0 ? 2 : (v.genus == 1 ? 4 : 1000);
            if (fixed_objects > maxfixed) return std::nullopt;
            (void)zero_objects;
            return plan;
        }
        case SpeciesTag::O3Third: {
            // triple type (cases 2, R1, R2): genus 0, exactly one triple group
            long long triples = v.down_triples + v.up_triples;
            if (triples == 1 && v.down_pairs + v.up_pairs == 0 && v.genus == 0) {
                // fixed objects: (2): 1 pole; (R1): 1 zero + 1 pole; (R2): 2 poles
                bool ok = false;
                LegPlan plan;
                if (v.down_triples == 1) {
                    // zeros are the triple; one fixed pole object
                    if (v.down_fixed != 0 || v.up_fixed > 2) return std::nullopt;
                    plan.pole_legs = v.up_fixed >= 1 ? 0 : 1;
                    ok = v.up_fixed + plan.pole_legs <= 2 && v.up_fixed + plan.pole_legs >= 1;
                } else {
                    // poles are the triple (R1); one fixed zero and one fixed pole
                    if (v.down_fixed > 1 || v.up_fixed > 1) return std::nullopt;
                    plan.zero_legs = 1 - v.down_fixed;
                    plan.pole_legs = 1 - v.up_fixed;
                    ok = true;
                }
                if (!ok) return std::nullopt;
                long long unforced = (v.up_fixed - v.up_fixed_forced) +
                                     (v.up_triples ? 1 : 0) + plan.pole_legs;
                if (unforced > 1) return std::nullopt;
                return plan;
            }
            // genus-one type (cases 4, 5, R5): one zero object, up to two poles
            if (v.genus != 1 || !no_swaps()) return std::nullopt;
            if (v.down_fixed > 1) return std::nullopt;
            if (v.up_fixed > 2) return std::nullopt;
            LegPlan plan;
            plan.zero_legs = 1 - v.down_fixed;
            long long unforced = v.up_fixed - v.up_fixed_forced;
            if (unforced > 1) return std::nullopt;
            // fixed points of an order-3 torus automorphism: at most 3
            if (v.down_fixed + plan.zero_legs + v.up_fixed > 3) return std::nullopt;
            return plan;
        }
        case SpeciesTag::O3TwoThirds: {
            // cases (3), (R3), (R4): genus >= 2, one zero and up to three poles;
            // cases (6), (7): genus 1 with a permuted zero triple
            if (v.genus == 1 && v.down_triples == 1 && v.up_triples == 0 &&
                v.down_pairs + v.up_pairs == 0) {
                if (v.down_fixed != 0 || v.up_fixed > 1) return std::nullopt;
                long long unforced = v.up_fixed - v.up_fixed_forced;
                if (unforced > 1) return std::nullopt;
                return LegPlan{};
            }
            if (v.genus < 2 || !no_swaps()) return std::nullopt;
            if (v.down_fixed > 1 || v.up_fixed > 3) return std::nullopt;
            LegPlan plan;
            plan.zero_legs = 1 - v.down_fixed;
            long long unforced = v.up_fixed - v.up_fixed_forced;
            if (unforced > 1) return std::nullopt;
            if (v.down_fixed + plan.zero_legs + v.up_fixed > 4) return std::nullopt;
            return plan;
        }
        case SpeciesTag::O4Half: {
            // cases (9), (10): genus 1, one zero object, at most one pole
            if (v.genus != 1 || !no_swaps()) return std::nullopt;
            if (v.down_fixed > 1 || v.up_fixed > 1) return std::nullopt;
            LegPlan plan;
            plan.zero_legs = 1 - v.down_fixed;
            long long unforced = v.up_fixed - v.up_fixed_forced;
            if (unforced > 1) return std::nullopt;
            if (v.down_fixed + plan.zero_legs + v.up_fixed > 2) return std::nullopt;
            return plan;
        }
        case SpeciesTag::O4ThreeQ: {
            // cases (11), (12), (R6): permuted zero pair plus fixed poles;
            // case (R7): fixed zero, permuted pole pair, one more pole
            if (v.down_triples + v.up_triples > 0) return std::nullopt;
            if (v.genus != 1) return std::nullopt;
            if (v.down_pairs == 1 && v.up_pairs == 0) {
                if (v.down_fixed != 0 || v.up_fixed > 2) return std::nullopt;
                long long unforced = v.up_fixed - v.up_fixed_forced;
                if (unforced > 1) return std::nullopt;
                return LegPlan{};
            }
            if (v.up_pairs == 1 && v.down_pairs == 0) {
                if (v.down_fixed > 1 || v.up_fixed > 1) return std::nullopt;
                LegPlan plan;
                plan.zero_legs = 1 - v.down_fixed;
                long long unforced = (v.up_fixed - v.up_fixed_forced) +
                                     (1 - v.up_pairs_forced);
                if (unforced > 1) return std::nullopt;
                return plan;
            }
            return std::nullopt;
        }
        case SpeciesTag::O6Third: {
            // case (13): genus 1, a single zero object and nothing else
            if (v.genus != 1 || !no_swaps()) return std::nullopt;
            if (v.up_fixed > 0) return std::nullopt;
            if (v.down_fixed > 1) return std::nullopt;
            LegPlan plan;
            plan.zero_legs = 1 - v.down_fixed;
            if (v.down_fixed + plan.zero_legs > 1) return std::nullopt;
            return plan;
        }
    }
    return std::nullopt;
}

struct SearchState {
    const SearchBounds& bounds;
    long long order_lcm;
    SearchResult result;
    std::mutex mu;

    explicit SearchState(const SearchBounds& b) : bounds(b) {
        order_lcm = 1;
        for (long long k : b.orders) order_lcm = lcm_ll(order_lcm, k);
        result.min_c = Rat(1000);
        result.denominator_bound =
            "s_j in (1/K_j) Z with K_j = lcm(orders) * ell_j = " +
            std::to_string(order_lcm) + " * ell_j (search hypothesis)";
    }

    void offer(const Rat& c, const std::string& desc, size_t feasible_count) {
        std::lock_guard<std::mutex> lock(mu);
        result.feasible_profiles += feasible_count;
        result.any_feasible = result.any_feasible || feasible_count > 0;
        if (c < result.min_c) {
            result.min_c = c;
            result.witness = {desc, c};
        }
    }
};

struct GraphShell {
    std::vector<int> levels;            // per vertex (0 = top)
    std::vector<int> genus;             // 0, 1, 2 (= 2+)
    std::vector<EdgeSlot> edges;
    int passages = 0;
};

std::string describe(const GraphShell& shell, const std::vector<Species>& sp,
                     const std::vector<Rat>& s) {
    std::ostringstream os;
    os << "levels[";
    for (size_t v = 0; v < shell.levels.size(); ++v)
        os << (v ? "," : "") << shell.levels[v] << ":g" << shell.genus[v] << ":k"
           << sp[v].order << ":a" << to_string(sp[v].age);
    os << "] edges[";
    for (size_t e = 0; e < shell.edges.size(); ++e) {
        os << (e ? "," : "") << shell.edges[e].upper << "-" << shell.edges[e].lower << ":p"
           << shell.edges[e].prong;
        if (shell.edges[e].group >= 0) os << ":grp" << shell.edges[e].group;
    }
    os << "] s[";
    for (size_t j = 0; j < s.size(); ++j) os << (j ? "," : "") << to_string(s[j]);
    os << "]";
    return os.str();
}

// component-GRC forcing data per (vertex level, pole edge)
void compute_forcing(const GraphShell& shell, const std::vector<long long>& pole_legs,
                     std::vector<VertexLocal>& locals) {
    int n = static_cast<int>(shell.levels.size());
    std::set<int> level_set(shell.levels.begin(), shell.levels.end());
    for (int v = 0; v < n; ++v) {
        locals[v].up_fixed_forced = 0;
        locals[v].up_pairs_forced = 0;
    }
    for (int lambda : level_set) {
        // components of the subgraph strictly above level lambda
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& e : shell.edges)
            if (shell.levels[e.upper] > lambda && shell.levels[e.lower] > lambda)
                parent[find(e.upper)] = find(e.lower);
        // per component: number of edges ending exactly at lambda, pole legs above
        std::map<int, std::vector<size_t>> comp_edges;
        std::map<int, long long> comp_poles;
        for (size_t ei = 0; ei < shell.edges.size(); ++ei) {
            const auto& e = shell.edges[ei];
            if (shell.levels[e.upper] > lambda && shell.levels[e.lower] == lambda)
                comp_edges[find(e.upper)].push_back(ei);
        }
        for (int v = 0; v < n; ++v)
            if (shell.levels[v] > lambda && pole_legs[v] > 0) comp_poles[find(v)] += pole_legs[v];
        for (auto& [root, eis] : comp_edges) {
            if (comp_poles.count(root)) continue;  // marked poles void the condition
            if (eis.size() == 1) {
                const auto& e = shell.edges[eis[0]];
                if (e.group < 0) ++locals[e.lower].up_fixed_forced;
            } else if (eis.size() == 2) {
                const auto& e1 = shell.edges[eis[0]];
                const auto& e2 = shell.edges[eis[1]];
                if (e1.group >= 0 && e1.group == e2.group && e1.lower == e2.lower)
                    ++locals[e1.lower].up_pairs_forced;
            }
        }
    }
}

// enumerate connected edge multisets over admissible vertex pairs
void enumerate_edge_multisets(int V, const std::vector<int>& levels, int max_edges,
                              const std::function<void(const std::vector<std::pair<int, int>>&)>& cb) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < V; ++u)
        for (int w = 0; w < V; ++w)
            if (levels[u] > levels[w]) pairs.emplace_back(u, w);
    std::vector<std::pair<int, int>> cur;
    std::function<void(size_t, int)> rec = [&](size_t idx, int remaining) {
        if (static_cast<int>(cur.size()) >= V - 1) {
            // check connectivity, degree, and upward coverage
            std::vector<int> parent(V);
            std::iota(parent.begin(), parent.end(), 0);
            std::function<int(int)> find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            std::vector<int> deg(V, 0), up(V, 0);
            for (auto& [u, w] : cur) {
                parent[find(u)] = find(w);
                ++deg[u];
                ++deg[w];
                ++up[w];
            }
            bool ok = true;
            for (int v = 0; v < V && ok; ++v) {
                if (find(v) != find(0)) ok = false;
                if (deg[v] == 0) ok = false;
                if (levels[v] < 0 && up[v] == 0) ok = false;
            }
            if (ok) cb(cur);
        }
        if (remaining == 0 || idx == pairs.size()) return;
        for (size_t i = idx; i < pairs.size(); ++i) {
            cur.push_back(pairs[i]);
            rec(i, remaining - 1);
            cur.pop_back();
        }
    };
    rec(0, max_edges);
}

}  // namespace

SearchResult search_min_c(const SearchBounds& bounds) {
    SearchState state(bounds);
    int maxlev = bounds.max_levels;
    if (maxlev < 2) throw std::invalid_argument("need at least two levels");

    // vertex-level distributions
    std::vector<std::vector<int>> level_profiles;
    for (int nlev = 2; nlev <= maxlev; ++nlev) {
        int maxV = bounds.max_edges + 1;
        std::vector<int> counts(nlev, 1);
        std::function<void(int, int)> rec = [&](int level, int used) {
            if (level == nlev) {
                std::vector<int> levels;
                for (int l = 0; l < nlev; ++l)
                    for (int c = 0; c < counts[l]; ++c) levels.push_back(-l);
                level_profiles.push_back(levels);
                return;
            }
            for (int c = 1; used + c + (nlev - level - 1) <= maxV; ++c) {
                counts[level] = c;
                rec(level + 1, used + c);
            }
        };
        rec(0, 0);
    }

    std::atomic<size_t> shells{0};

    auto process_shell = [&](GraphShell& shell) {
        ++shells;
        int V = static_cast<int>(shell.levels.size());
        int L = shell.passages;
        // passage data: lcm, undegenerations
        std::vector<long long> ell(L + 1, 1);
        std::vector<Rat> rj(L + 1);
        {
            MultiLevelGraph g;
            for (int v = 0; v < V; ++v)
                g.vertices.push_back({shell.levels[v], shell.genus[v], {}});
            for (const auto& e : shell.edges) g.edges.push_back({e.upper, e.lower, e.prong});
            for (int j = 1; j <= L; ++j) {
                ell[j] = g.passage_lcm(j);
                TwoLevelGraph two = undegenerate(g, j);
                rj[j] = Rat(ell[j]) * r_nc_structural(two, bounds.version, false);
            }
        }
        // local vertex structure
        std::vector<VertexLocal> locals(V);
        for (int v = 0; v < V; ++v) {
            locals[v].level = shell.levels[v];
            locals[v].genus = shell.genus[v];
        }
        std::map<int, std::vector<size_t>> groups;
        for (size_t ei = 0; ei < shell.edges.size(); ++ei) {
            const auto& e = shell.edges[ei];
            if (e.group >= 0) {
                groups[e.group].push_back(ei);
                continue;
            }
            ++locals[e.upper].down_fixed;
            ++locals[e.lower].up_fixed;
        }
        for (auto& [gid, eis] : groups) {
            const auto& e = shell.edges[eis[0]];
            if (eis.size() == 2) {
                ++locals[e.upper].down_pairs;
                ++locals[e.lower].up_pairs;
            } else {
                ++locals[e.upper].down_triples;
                ++locals[e.lower].up_triples;
            }
        }

        // species assignment with age pruning
        std::vector<Species> assign(V, species_list()[0]);
        std::vector<long long> pole_legs(V, 0);
        std::vector<long long> zero_legs(V, 0);

        std::function<void(int, Rat)> rec_species = [&](int v, Rat age_sum) {
            if (age_sum >= 1) return;  // c(tau) >= 1 outright: not a candidate
            if (v == V) {
                // permuted-group order compatibility
                for (auto& [gid, eis] : groups) {
                    const auto& e = shell.edges[eis[0]];
                    long long ku = assign[e.upper].order, kl = assign[e.lower].order;
                    if (eis.size() == 2 && (ku % 2 || kl % 2)) return;
                    if (eis.size() == 3 && (ku % 3 || kl % 3)) return;
                }
                // forcing depends on pole legs: compute, then re-match species
                compute_forcing(shell, pole_legs, locals);
                for (int u = 0; u < V; ++u) {
                    auto plan = match_species(assign[u], locals[u]);
                    if (!plan) return;
                    if (plan->pole_legs != pole_legs[u]) return;  // consistency
                    zero_legs[u] = plan->zero_legs;
                }
                // s-grid enumeration over the level passages
                std::vector<std::vector<size_t>> edges_single(L + 1);
                std::vector<size_t> edges_multi;
                MultiLevelGraph g;
                for (int u = 0; u < V; ++u)
                    g.vertices.push_back({shell.levels[u], shell.genus[u], {}});
                for (const auto& e : shell.edges) g.edges.push_back({e.upper, e.lower, e.prong});
                for (size_t ei = 0; ei < shell.edges.size(); ++ei) {
                    int count = 0, last = 0;
                    for (int j = 1; j <= L; ++j)
                        if (g.crosses(g.edges[ei], j)) { ++count; last = j; }
                    if (count == 1) edges_single[last].push_back(ei);
                    else edges_multi.push_back(ei);
                }
                // per-passage grids
                std::vector<std::vector<Rat>> grid(L + 1);
                for (int j = 1; j <= L; ++j) {
                    long long K = state.order_lcm * ell[j];
                    long long step_den = K;
                    bool need_positive = false;
                    for (size_t ei : edges_single[j]) {
                        const auto& e = shell.edges[ei];
                        long long k1 = assign[e.upper].order, k2 = assign[e.lower].order;
                        long long q = lcm_ll(k1, k2) * (ell[j] / e.prong);
                        step_den = std::gcd(step_den, q);
                        if (k1 != k2) need_positive = true;
                    }
                    for (long long t = need_positive ? 1 : 0; t < step_den; ++t)
                        grid[j].push_back(rat(t, step_den));
                }
                Rat age_total = 0;
                for (int u = 0; u < V; ++u) age_total += assign[u].age;
                const Rat cap = rat(3, 2);  // c >= 3/2 never improves the verdict
                if (age_total >= cap) return;

                std::vector<Rat> s(L);
                size_t feasible = 0;
                Rat best_here = Rat(1000);
                std::string best_desc;
                std::function<void(int, Rat)> rec_s = [&](int j, Rat partial) {
                    if (j > L) {
                        bool all_trivial = std::all_of(s.begin(), s.end(),
                                                       [](const Rat& x) { return x == 0; });
                        if (all_trivial) return;
                        // multi-passage edge constraints
                        for (size_t ei : edges_multi) {
                            const auto& e = shell.edges[ei];
                            long long k1 = assign[e.upper].order, k2 = assign[e.lower].order;
                            Rat ce = 0;
                            for (int p = 1; p <= L; ++p)
                                if (g.crosses(g.edges[ei], p))
                                    ce += Rat(ell[p]) / Rat(e.prong) * s[p - 1];
                            if (k1 == k2 && ce == 0) continue;
                            Rat test = Rat(lcm_ll(k1, k2)) * ce;
                            if (test <= 0 || den(test) != 1) return;
                        }
                        // quasi-reflection exclusion
                        if (age_total == 0) {
                            int nontrivial = 0;
                            bool half = false;
                            for (const auto& x : s)
                                if (x != 0) { ++nontrivial; half = x == rat(1, 2); }
                            if (nontrivial == 1 && half) return;
                        }
                        Rat c = age_total + partial;
                        ++feasible;
                        if (c < best_here) {
                            best_here = c;
                            best_desc = describe(shell, assign, s);
                        }
                        return;
                    }
                    for (const Rat& val : grid[j]) {
                        Rat next = partial + rj[j] * val;
                        if (val != 0 && next + age_total >= cap) break;  // grid ascending
                        s[j - 1] = val;
                        rec_s(j + 1, next);
                    }
                    s[j - 1] = 0;
                };
                rec_s(1, Rat(0));
                if (feasible > 0) state.offer(best_here, best_desc, feasible);
                return;
            }
            for (const auto& sp : species_list()) {
                bool order_ok = std::find(bounds.orders.begin(), bounds.orders.end(), sp.order) !=
                                bounds.orders.end();
                if (!order_ok) continue;
                // cheap local pre-check with zero forcing info (superset)
                VertexLocal pre = locals[v];
                pre.up_fixed_forced = pre.up_fixed;
                pre.up_pairs_forced = pre.up_pairs;
                auto plan = match_species(sp, pre);
                if (!plan) continue;
                assign[v] = sp;
                pole_legs[v] = plan->pole_legs;
                rec_species(v + 1, age_sum + sp.age);
            }
        };
        rec_species(0, Rat(0));
    };

    // enumerate shells
    for (const auto& levels : level_profiles) {
        int V = static_cast<int>(levels.size());
        GraphShell shell;
        shell.levels = levels;
        shell.passages = -*std::min_element(levels.begin(), levels.end());
        enumerate_edge_multisets(V, levels, bounds.max_edges,
                                 [&](const std::vector<std::pair<int, int>>& multiset) {
            int E = static_cast<int>(multiset.size());
            shell.edges.assign(E, {});
            for (int i = 0; i < E; ++i)
                shell.edges[i] = {multiset[i].first, multiset[i].second, 1, -1};
            // prong assignment, canonical (non-decreasing on identical pairs)
            std::function<void(int)> rec_prong = [&](int i) {
                if (i == E) {
                    // pairing structure: per parallel class of equal prongs,
                    // choose number of 2-swaps and 3-cycles
                    std::map<std::tuple<int, int, long long>, std::vector<size_t>> cls;
                    for (size_t ei = 0; ei < shell.edges.size(); ++ei)
                        cls[{shell.edges[ei].upper, shell.edges[ei].lower,
                             shell.edges[ei].prong}]
                            .push_back(ei);
                    std::vector<std::vector<size_t>> classes;
                    for (auto& [key, v] : cls) classes.push_back(v);
                    std::function<void(size_t, int)> rec_pair = [&](size_t ci, int next_group) {
                        if (ci == classes.size()) {
                            // genus assignment
                            int V2 = static_cast<int>(shell.levels.size());
                            std::function<void(int)> rec_genus = [&](int v) {
                                if (v == V2) {
                                    process_shell(shell);
                                    return;
                                }
                                for (int ge : {0, 1, 2}) {
                                    shell.genus[v] = ge;
                                    rec_genus(v + 1);
                                }
                            };
                            shell.genus.assign(V2, 0);
                            rec_genus(0);
                            return;
                        }
                        auto& eis = classes[ci];
                        long long n = static_cast<long long>(eis.size());
                        for (long long pairs = 0; 2 * pairs <= n; ++pairs) {
                            for (long long triples = 0; 2 * pairs + 3 * triples <= n; ++triples) {
                                int gid = next_group;
                                size_t idx = 0;
                                for (long long p = 0; p < pairs; ++p, ++gid) {
                                    shell.edges[eis[idx]].group = gid;
                                    shell.edges[eis[idx + 1]].group = gid;
                                    idx += 2;
                                }
                                for (long long t = 0; t < triples; ++t, ++gid) {
                                    shell.edges[eis[idx]].group = gid;
                                    shell.edges[eis[idx + 1]].group = gid;
                                    shell.edges[eis[idx + 2]].group = gid;
                                    idx += 3;
                                }
                                for (size_t r = idx; r < eis.size(); ++r)
                                    shell.edges[eis[r]].group = -1;
                                rec_pair(ci + 1, gid);
                            }
                        }
                        for (size_t r = 0; r < eis.size(); ++r) shell.edges[eis[r]].group = -1;
                    };
                    rec_pair(0, 0);
                    return;
                }
                long long lo = 1;
                if (i > 0 && shell.edges[i].upper == shell.edges[i - 1].upper &&
                    shell.edges[i].lower == shell.edges[i - 1].lower)
                    lo = shell.edges[i - 1].prong;
                for (long long p = lo; p <= bounds.max_prong; ++p) {
                    shell.edges[i].prong = p;
                    rec_prong(i + 1);
                }
            };
            rec_prong(0);
        });
    }
    state.result.structures = shells.load();
    return state.result;
}

}  // namespace msd
