#include "msd/certifier.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

namespace msd {

std::string to_string(DivisorChoice d) {
    switch (d) {
        case DivisorChoice::Auto: return "auto";
        case DivisorChoice::BN: return "bn";
        case DivisorChoice::Hur: return "hur";
        case DivisorChoice::NF: return "nf";
    }
    return "?";
}

DivisorChoice parse_divisor(const std::string& s) {
    if (s == "auto") return DivisorChoice::Auto;
    if (s == "bn") return DivisorChoice::BN;
    if (s == "hur") return DivisorChoice::Hur;
    if (s == "nf") return DivisorChoice::NF;
    throw std::invalid_argument("unknown divisor '" + s + "'");
}

namespace {

DivisorChoice resolve_divisor(long long g, DivisorChoice d) {
    if (d != DivisorChoice::Auto) return d;
    if (g == 12 || g == 14) return DivisorChoice::NF;
    return g % 2 == 1 ? DivisorChoice::BN : DivisorChoice::Hur;
}

DncVersion resolve_dnc(long long g, const CertificationOptions& o) {
    if (o.dnc) return *o.dnc;
    if (g <= o.full_regime_max_genus) return DncVersion::RefinedMinimal;
    if (g <= 43) return DncVersion::V2;
    return DncVersion::V1;
}

Regime resolve_regime(long long g, const CertificationOptions& o) {
    if (o.regime != Regime::Auto) return o.regime;
    return g <= o.full_regime_max_genus ? Regime::Full : Regime::Reduced;
}

struct MinimalContext {
    long long g = 0;
    Signature sig{{2}};
    DncVersion version = DncVersion::V1;
    DivisorChoice divisor = DivisorChoice::BN;
    bool conservative = false;

    Rat kappa, kn;  // kappa_mu and kappa_mu / N
    long long N = 0;
    Rat w_lambda, w_hor;
    Rat wl12;      // 12 / w_lambda
    Rat dh_mag;    // |D_h-coefficient| of the auxiliary divisor
    Rat irr;       // per-edge Delta_irr coefficient
    Rat psi_term;  // NF only: kappa_top coefficient inside gamma/ell
    std::vector<Rat> dcoef;  // tail coefficient by top-side genus i = 1..g-1

    Rat nct_coef(long long E) const {
        return version == DncVersion::V1 ? rat(1, 2) : Rat(1) / Rat(E);
    }
};

MinimalContext make_context(long long g, const CertificationOptions& o) {
    MinimalContext ctx;
    ctx.g = g;
    ctx.sig = Signature({2 * g - 2});
    ctx.version = resolve_dnc(g, o);
    ctx.divisor = resolve_divisor(g, o.divisor);
    ctx.conservative = o.conservative_delta_h;
    ctx.kappa = kappa_mu(ctx.sig);
    ctx.N = unprojectivized_dim(ctx.sig);
    ctx.kn = ctx.kappa / Rat(ctx.N);
    auto wc = w_app_coeffs(ctx.sig);  // equals the mid version on minimal strata
    ctx.w_lambda = wc.lambda;
    ctx.w_hor = wc.hor;
    ctx.wl12 = Rat(12) / ctx.w_lambda;
    ctx.dcoef.assign(static_cast<size_t>(g), Rat(0));

    switch (ctx.divisor) {
        case DivisorChoice::BN: {
            if (g % 2 == 0) throw std::domain_error("Brill-Noether divisor needs odd g");
            ctx.dh_mag = rat(g + 1, g + 3);
            ctx.irr = ctx.dh_mag;
            for (long long i = 1; i <= g - 1; ++i)
                ctx.dcoef[i] = rat(6 * i * (g - i), g + 3);
            break;
        }
        case DivisorChoice::Hur: {
            if (g % 2 != 0) throw std::domain_error("Hurwitz divisor needs even g");
            Rat D = Rat((g + 8) * (3 * g - 1));
            ctx.dh_mag = Rat(3 * g * g + 12 * g - 6) / D;
            ctx.irr = ctx.dh_mag;
            for (long long i = 1; i <= g - 1; ++i)
                ctx.dcoef[i] = Rat(6 * i * (g - i) * (3 * g + 4)) / D;
            break;
        }
        case DivisorChoice::NF: {
            if (g % 2 != 0 || g < 4) throw std::domain_error("NF divisor needs even g >= 4");
            Rat A = Rat(2 * (g + 3)) / Rat((g + 1) * (g - 2)) * Rat(binomial(g - 2, g / 2));
            Rat B = Rat(12) / Rat((g + 3) * (g + 2));
            Rat e = Rat(2 * (g * g + 3 * g - 1)) / Rat((g - 1) * (g * g - 4)) *
                    Rat(binomial(g - 2, g / 2));
            Rat scale = A / e;
            Rat cpsi = Rat(binomial(g + 1, 2));
            Rat kap_m1 = ctx.kappa * Rat(2 * g - 1);
            ctx.dh_mag = scale * (rat(g + 1, g + 3) + B * cpsi / kap_m1);
            ctx.irr = scale * rat(g + 1, g + 3);
            ctx.psi_term = scale * B * cpsi / kap_m1;
            for (long long i = 1; i <= g - 1; ++i)
                ctx.dcoef[i] =
                    scale * (rat(6 * i * (g - i), g + 3) - B * Rat(binomial(i + 1, 2)));
            break;
        }
        default: throw std::logic_error("unresolved divisor");
    }
    return ctx;
}

Rat bterm_all_nct(const MinimalContext& ctx, const Rat& P_inv, const Rat& kappa_top) {
    return ctx.irr * P_inv - ctx.psi_term * kappa_top;
}

// Conversion delta, relative to all-NCT, for one tail of top-side genus i
// (forced prong p = 2i - 1): affine in y.
AffineForm tail_delta_form(const MinimalContext& ctx, long long i, long long E) {
    Rat p = Rat(2 * i - 1);
    Rat d = (ctx.dcoef[i] - ctx.irr) / p;
    Rat r = ctx.kn * (Rat(2) - ctx.nct_coef(E)) / p;
    return {2 * d - r, -2 * d};
}

struct ProfileEval {
    AffineForm s0;
    std::string note;
    bool hbb = false;
};

ProfileEval eval_profile(const MinimalContext& ctx, const GraphProfile& p) {
    ProfileEval out;
    Rat P_inv = p.P_inv();
    long long P = p.P();
    Rat kappa_top = Rat(P) - P_inv;
    Rat R = r_nc_profile(p, ctx.g, ctx.version);
    Rat delta_term = 0;
    bool tree = p.E == p.v_top;  // realizable trees are HTB and HBT: delta_H = 0
    out.hbb = profile_is_hbb_candidate(p);
    if (out.hbb || (ctx.conservative && !tree))
        delta_term = ctx.kn / Rat(p.lcm_prongs());
    Rat c = (1 - ctx.kn) * Rat(P) - P_inv - ctx.kn * (Rat(p.v_top) + R) - delta_term;
    Rat w = Rat(p.v_top - 1) / 2 + (ctx.kappa - kappa_top) / ctx.kappa;
    Rat b = bterm_all_nct(ctx, P_inv, kappa_top);
    out.s0 = {c + 2 * b, ctx.wl12 * w - 2 * b};
    out.note = p.str();
    return out;
}

// Exact single-edge graphs (EDB or OCT tails; a rational bottom is unstable here).
ProfileEval eval_single_edge(const MinimalContext& ctx, long long gt) {
    long long g = ctx.g;
    long long p = 2 * gt - 1;
    long long gbot = g - gt;
    Rat P_inv = rat(1, p);
    Rat kappa_top = Rat(p) - P_inv;
    bool edb = gt == 1 || gbot == 1;
    Rat R = Rat(edb ? 4 : 2) / Rat(p);  // tree of both HTB and HBT type: delta_H = 0
    Rat c = (1 - ctx.kn) * Rat(p) - P_inv - ctx.kn * (Rat(1) + R);
    Rat w = (ctx.kappa - kappa_top) / ctx.kappa;
    Rat b = ctx.dcoef[gt] * P_inv - ctx.psi_term * kappa_top;
    ProfileEval out;
    out.s0 = {c + 2 * b, ctx.wl12 * w - 2 * b};
    out.note = "(v=1,g=" + std::to_string(gt) + ",E=1,p=[" + std::to_string(p) + "]) " +
               std::string(edb ? "EDB" : "OCT tail");
    return out;
}

// Exact worst-case tail-conversion damage at fixed y (budgeted over the profile).
Rat tail_damage(const MinimalContext& ctx, const GraphProfile& p, const Rat& y) {
    if (p.v_top < 2 || p.E < 2) return 0;
    long long count_budget = p.E > p.v_top ? p.v_top - 1 : p.v_top;
    long long genus_slack = p.g_top - p.v_top;  // sum (i_e - 1) <= slack
    std::map<long long, long long> counts;
    for (long long q : p.prongs) {
        if (q % 2 == 0) continue;
        long long i = (q + 1) / 2;
        if (i < 1 || i > ctx.g - 1 || i > p.g_top) continue;
        ++counts[i];
    }
    std::vector<std::pair<long long, Rat>> neg;
    for (auto& [i, c] : counts) {
        Rat d = tail_delta_form(ctx, i, p.E).at(y);
        if (d < 0) neg.emplace_back(i, d);
    }
    if (neg.empty()) return 0;
    if (neg.size() == 1) {
        auto [i, d] = neg[0];
        long long t = std::min(counts[i], count_budget);
        if (i > 1) t = std::min(t, genus_slack / (i - 1));
        return Rat(t) * d;
    }
    std::map<std::pair<long long, long long>, Rat> state;
    state[{0, 0}] = Rat(0);
    for (auto& [i, d] : neg) {
        long long c = counts[i];
        auto next = state;
        for (auto& [key, val] : state) {
            auto [t, sl] = key;
            for (long long k = 1; k <= c; ++k) {
                long long nt = t + k, nsl = sl + k * (i - 1);
                if (nt > count_budget || nsl > genus_slack) break;
                Rat nv = val + Rat(k) * d;
                auto it = next.find({nt, nsl});
                if (it == next.end() || nv < it->second) next[{nt, nsl}] = nv;
            }
        }
        state = std::move(next);
    }
    Rat best = 0;
    for (auto& [key, val] : state) best = rat_min(best, val);
    return best;
}

// For interval mode: per candidate class a separate affine constraint with the
// class-local budget (classes rarely overlap on the same profile).
void tail_constraints(const MinimalContext& ctx, const GraphProfile& p, const ProfileEval& ev,
                      const std::function<void(const Constraint&)>& sink) {
    if (p.v_top < 2 || p.E < 2) return;
    long long count_budget = p.E > p.v_top ? p.v_top - 1 : p.v_top;
    long long genus_slack = p.g_top - p.v_top;
    std::map<long long, long long> counts;
    for (long long q : p.prongs) {
        if (q % 2 == 0) continue;
        long long i = (q + 1) / 2;
        if (i < 1 || i > ctx.g - 1 || i > p.g_top) continue;
        ++counts[i];
    }
    for (auto& [i, c] : counts) {
        long long t = std::min(c, count_budget);
        if (i > 1) t = std::min(t, genus_slack / (i - 1));
        if (t == 0) continue;
        AffineForm d = tail_delta_form(ctx, i, p.E);
        Constraint cc;
        cc.kind = "gamma";
        cc.profile = ev.note + " with " + std::to_string(t) + " genus-" + std::to_string(i) +
                     " tail(s)";
        cc.form = {ev.s0.a + Rat(t) * d.a, ev.s0.b + Rat(t) * d.b};
        sink(cc);
    }
}

AffineForm s_hor_form_ctx(const MinimalContext& ctx) {
    Rat a = -1 - ctx.kn + 2 * ctx.dh_mag;
    Rat b = ctx.wl12 * ctx.w_hor - 2 * ctx.dh_mag;
    return {a, b};
}

// ---- constraint generation ---------------------------------------------

void special_constraints_reduced(const MinimalContext& ctx,
                                 const std::function<void(const Constraint&)>& sink) {
    long long g = ctx.g;
    // v_top-coefficient of the main estimate: (6/w_lambda) y - kappa/N >= 0
    {
        Constraint c;
        c.kind = "vtop_coefficient";
        c.profile = "(6/w_lambda) y - kappa/N";
        c.form = {-ctx.kn, Rat(6) / ctx.w_lambda};
        c.strict = false;
        sink(c);
    }
    // merging a ramified graph with v_top >= 3 loses at most (kappa/N) delta_H/ell <= kappa/N
    {
        Constraint c;
        c.kind = "ramification_outweigh";
        c.profile = "2 ((6/w_lambda) y - kappa/N) - kappa/N";
        c.form = {-3 * ctx.kn, Rat(12) / ctx.w_lambda};
        c.strict = false;
        sink(c);
    }
    // compact-type domination for every tail genus
    for (long long i = 1; i <= g - 1; ++i) {
        AffineForm d = tail_delta_form(ctx, i, g);  // E = g gives the weakest NCT coefficient
        Constraint c;
        c.kind = "cpt_domination";
        c.profile = "tail genus " + std::to_string(i);
        c.form = d;
        c.strict = false;
        sink(c);
    }
    // exact single-edge graphs
    for (long long gt = 1; gt <= g - 1; ++gt) {
        auto ev = eval_single_edge(ctx, gt);
        Constraint c;
        c.kind = "edb_special";
        c.profile = ev.note;
        c.form = ev.s0;
        sink(c);
    }
    // HBB banana (v=1, prongs (p,p), p = g_top) with exact delta_H = 1
    for (long long gt = 1; gt <= g - 1; ++gt) {
        GraphProfile p;
        p.v_top = 1;
        p.g_top = gt;
        p.E = 2;
        p.prongs = {gt, gt};
        auto ev = eval_profile(ctx, p);  // HBB candidate: delta included
        Constraint c;
        c.kind = "hbb_special";
        c.profile = ev.note + " HBB banana";
        c.form = ev.s0;
        sink(c);
    }
    // HBB with v_top = 2: one fixed odd edge + one banana pair (E = 3), or two
    // banana pairs (E = 4). Evaluated exactly with delta_H = 1.
    auto eval_v2_hbb = [&](const std::vector<long long>& prongs, long long gt,
                           bool fixed_tail, long long tail_genus) {
        long long E = static_cast<long long>(prongs.size());
        Rat P_inv = 0;
        long long P = 0, ell = 1;
        for (long long q : prongs) {
            P_inv += rat(1, q);
            P += q;
            ell = lcm_ll(ell, q);
        }
        Rat kappa_top = Rat(P) - P_inv;
        Rat cN = ctx.nct_coef(E);
        Rat R = 0;
        for (long long q : prongs) R += cN / Rat(q);
        if (fixed_tail) {
            // the fixed edge is a separating tail: OCT instead of NCT
            R += (Rat(2) - cN) / Rat(2 * tail_genus - 1);
        }
        if (ctx.version != DncVersion::V1) R += Rat(1);  // (v_top - 1)
        R += Rat(1) / Rat(ell);                          // delta_H = 1
        Rat c = (1 - ctx.kn) * Rat(P) - P_inv - ctx.kn * (Rat(2) + R);
        Rat w = rat(1, 2) + (ctx.kappa - kappa_top) / ctx.kappa;
        Rat b = ctx.irr * P_inv - ctx.psi_term * kappa_top;
        if (fixed_tail)
            b += (ctx.dcoef[tail_genus] - ctx.irr) / Rat(2 * tail_genus - 1);
        Constraint cc;
        cc.kind = "hbb_special";
        cc.profile = "(v=2,g=" + std::to_string(gt) + ",E=" + std::to_string(E) + ") HBB";
        cc.form = {c + 2 * b, ctx.wl12 * w - 2 * b};
        sink(cc);
    };
    for (long long a = 1; a <= g; ++a) {        // fixed-edge top genus (prong 2a-1)
        for (long long q = 1; q <= g; ++q) {    // banana pair top genus (prong q)
            long long gt = a + q;
            long long gbot = g - gt - 1;  // E = 3, v = 2
            if (gbot < 0) break;
            eval_v2_hbb({2 * a - 1, q, q}, gt, true, a);
        }
    }
    for (long long q1 = 1; q1 <= g; ++q1) {
        for (long long q2 = q1; q2 <= g; ++q2) {
            long long gt = q1 + q2;
            long long gbot = g - gt - 2;  // E = 4, v = 2
            if (gbot < 0) break;
            eval_v2_hbb({q1, q1, q2, q2}, gt, false, 0);
        }
    }
}

struct Aggregator {
    bool fixed_y = false;
    Rat y;
    size_t total = 0;
    size_t violations = 0;
    std::vector<Constraint> violated;
    Rat lo = 0, hi = 1;
    bool empty = false;
    std::optional<Constraint> lo_binding, hi_binding;
    static constexpr size_t kCap = 40;

    void add(const Constraint& c) {
        ++total;
        if (fixed_y) {
            Rat v = c.form.at(y);
            bool bad = c.strict ? v <= 0 : v < 0;
            if (bad) {
                ++violations;
                if (violated.size() < kCap) violated.push_back(c);
            }
            return;
        }
        if (c.form.b == 0) {
            bool bad = c.strict ? c.form.a <= 0 : c.form.a < 0;
            if (bad) empty = true;
            return;
        }
        Rat root = -c.form.a / c.form.b;
        if (c.form.b > 0) {
            if (root >= lo) { lo = root; lo_binding = c; }
        } else {
            if (root <= hi) { hi = root; hi_binding = c; }
        }
    }

    void merge(const Aggregator& o) {
        total += o.total;
        violations += o.violations;
        for (const auto& c : o.violated)
            if (violated.size() < kCap) violated.push_back(c);
        if (o.empty) empty = true;
        if (o.lo >= lo) { lo = o.lo; lo_binding = o.lo_binding; }
        if (o.hi <= hi) { hi = o.hi; hi_binding = o.hi_binding; }
    }
};

void run_minimal(const MinimalContext& ctx, Regime regime, int jobs, Aggregator& agg) {
    long long g = ctx.g;
    {
        Constraint c;
        c.kind = "horizontal";
        c.profile = "s_hor";
        c.form = s_hor_form_ctx(ctx);
        agg.add(c);
    }
    if (regime == Regime::Reduced) {
        special_constraints_reduced(ctx, [&](const Constraint& c) { agg.add(c); });
        // affine in P_{-1}: check both extremal bounds per (E, g_top), v_top = 1
        for (long long E = 2; E <= g; ++E) {
            for (long long gt = 1; gt <= g - E + 1; ++gt) {
                long long P = 2 * gt - 2 + E;
                if (P < E) continue;
                for (int which = 0; which < 2; ++which) {
                    Rat P_inv = which == 0 ? Rat(E) * Rat(E) / Rat(P)
                                           : Rat(E - 1) + Rat(1) / Rat(P - E + 1);
                    Rat kappa_top = Rat(P) - P_inv;
                    Rat R = ctx.nct_coef(E) * P_inv;
                    Rat c0 = (1 - ctx.kn) * Rat(P) - P_inv - ctx.kn * (Rat(1) + R);
                    Rat w = (ctx.kappa - kappa_top) / ctx.kappa;
                    Rat b = bterm_all_nct(ctx, P_inv, kappa_top);
                    Constraint c;
                    c.kind = "gamma";
                    c.profile = "(v=1,g=" + std::to_string(gt) + ",E=" + std::to_string(E) +
                                (which == 0 ? ") equidistributed bound" : ") unbalanced bound");
                    c.form = {c0 + 2 * b, ctx.wl12 * w - 2 * b};
                    agg.add(c);
                }
            }
        }
        return;
    }
    // Full regime: exact E = 1 graphs, then every profile with E >= 2.
    for (long long gt = 1; gt <= g - 1; ++gt) {
        auto ev = eval_single_edge(ctx, gt);
        Constraint c;
        c.kind = "edb_special";
        c.profile = ev.note;
        c.form = ev.s0;
        agg.add(c);
    }
    // partition work by (v_top, g_top, E) block; each worker enumerates all and
    // keeps its share (deterministic by block index)
    int nw = std::max(1, jobs);
    std::vector<Aggregator> parts(nw);
    for (auto& p : parts) {
        p.fixed_y = agg.fixed_y;
        p.y = agg.y;
    }
    auto worker = [&](int w) {
        Aggregator& local = parts[w];
        long long block = 0;
        long long cur_v = -1, cur_g = -1, cur_E = -1;
        enumerate_minimal_profiles(g, EnumerationMode::Full, [&](const GraphProfile& p) {
            if (p.E == 1) return true;
            if (p.v_top != cur_v || p.g_top != cur_g || p.E != cur_E) {
                cur_v = p.v_top;
                cur_g = p.g_top;
                cur_E = p.E;
                ++block;
            }
            if (block % nw != w) return true;
            auto ev = eval_profile(ctx, p);
            if (local.fixed_y) {
                Constraint c;
                c.kind = ev.hbb ? "hbb_special" : "gamma";
                c.profile = ev.note;
                Rat damage = tail_damage(ctx, p, local.y);
                c.form = {ev.s0.a + damage, ev.s0.b};  // exact value at y only
                local.add(c);
            } else {
                Constraint c;
                c.kind = ev.hbb ? "hbb_special" : "gamma";
                c.profile = ev.note;
                c.form = ev.s0;
                local.add(c);
                tail_constraints(ctx, p, ev, [&](const Constraint& tc) { local.add(tc); });
            }
            return true;
        });
    };
    if (nw == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < nw; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }
    for (auto& p : parts) agg.merge(p);
}

std::string options_string(const MinimalContext& ctx, Regime regime) {
    return "dnc=" + to_string(ctx.version) + " divisor=" + to_string(ctx.divisor) +
           " regime=" + std::string(regime == Regime::Full ? "full" : "reduced") +
           (ctx.conservative ? " conservative-hyp" : "");
}

}  // namespace

AffineForm s_hor_form(long long g, DivisorChoice divisor) {
    CertificationOptions o;
    o.divisor = divisor;
    return s_hor_form_ctx(make_context(g, o));
}

Rat s_hor(long long g, const Rat& y, DivisorChoice divisor) {
    return s_hor_form(g, divisor).at(y);
}

Rat s_gamma_profile(long long g, const GraphProfile& p, const Rat& y,
                    const CertificationOptions& options) {
    MinimalContext ctx = make_context(g, options);
    if (p.E == 1) return eval_single_edge(ctx, p.g_top).s0.at(y);
    auto ev = eval_profile(ctx, p);
    return ev.s0.at(y) + tail_damage(ctx, p, y);
}

Rat s_gamma_graph(const Signature& sig, const GraphData& d, const Rat& y, DncVersion version,
                  DivisorChoice divisor) {
    Rat k = kappa_mu(sig);
    long long g = sig.genus();
    Rat R = r_star(d, version);
    Rat c = c_gamma(sig, d, R);
    Rat wl = w_app_coeffs(sig).lambda;
    Rat w = w_app_gamma_lower(sig, d);
    DivisorChoice dc = resolve_divisor(g, divisor);
    Rat b;
    switch (dc) {
        case DivisorChoice::BN: b = bn_gamma(sig, d) / Rat(d.lcm_prongs); break;
        case DivisorChoice::Hur: b = hur_gamma(sig, d) / Rat(d.lcm_prongs); break;
        case DivisorChoice::NF: b = -nf_class(g).gamma(d) / Rat(d.lcm_prongs); break;
        default: throw std::logic_error("unresolved divisor");
    }
    return c + y * Rat(12) * w / wl + (2 - 2 * y) * b;
}

bool cpt_domination_check(long long g, const Rat& y, const CertificationOptions& options) {
    MinimalContext ctx = make_context(g, options);
    for (long long i = 1; i <= g - 1; ++i)
        if (tail_delta_form(ctx, i, g).at(y) < 0) return false;
    return true;
}

Certificate certify_minimal(long long g, const Rat& y, const CertificationOptions& options) {
    Certificate cert;
    cert.stratum = "(" + std::to_string(2 * g - 2) + ")^odd";
    cert.y = y;
    if (g < 13) {
        cert.verdict = "out-of-range";
        cert.note = "certification supported for minimal strata with g >= 13";
        return cert;
    }
    MinimalContext ctx = make_context(g, options);
    Regime regime = resolve_regime(g, options);
    cert.options = options_string(ctx, regime);
    Aggregator agg;
    agg.fixed_y = true;
    agg.y = y;
    run_minimal(ctx, regime, options.jobs, agg);
    cert.constraint_count = agg.total;
    if (agg.violations == 0) {
        cert.verdict = "certified-at";
    } else {
        cert.verdict = "failed";
        cert.binding = agg.violated;
        std::sort(cert.binding.begin(), cert.binding.end(),
                  [&](const Constraint& a, const Constraint& b) {
                      return a.form.at(y) < b.form.at(y);
                  });
        cert.note = std::to_string(agg.violations) + " constraint(s) violated";
    }
    return cert;
}

Certificate certify_minimal_interval(long long g, const CertificationOptions& options) {
    Certificate cert;
    cert.stratum = "(" + std::to_string(2 * g - 2) + ")^odd";
    if (g < 13) {
        cert.verdict = "out-of-range";
        cert.note = "certification supported for minimal strata with g >= 13";
        return cert;
    }
    MinimalContext ctx = make_context(g, options);
    Regime regime = resolve_regime(g, options);
    cert.options = options_string(ctx, regime);
    Aggregator agg;
    run_minimal(ctx, regime, options.jobs, agg);
    cert.constraint_count = agg.total;
    if (!agg.empty && agg.lo < agg.hi) {
        cert.feasible_y = std::make_pair(agg.lo, agg.hi);
        cert.verdict = "certified-interval";
        if (agg.lo_binding) cert.binding.push_back(*agg.lo_binding);
        if (agg.hi_binding) cert.binding.push_back(*agg.hi_binding);
    } else {
        cert.verdict = "failed";
        cert.note = "empty feasible interval";
        if (agg.lo_binding) cert.binding.push_back(*agg.lo_binding);
        if (agg.hi_binding) cert.binding.push_back(*agg.hi_binding);
    }
    return cert;
}

std::optional<std::pair<Rat, Rat>> feasible_y_interval(long long g,
                                                       const CertificationOptions& options) {
    auto cert = certify_minimal_interval(g, options);
    return cert.feasible_y;
}

// ---- few zeros and equidistributed strata --------------------------------

namespace {

Rat delta_hur_bn(long long g) {
    if (g % 2 != 0) return 0;
    return Rat(g * g - 3 * g + 2) / Rat(3 * g * g * g + 32 * g * g + 61 * g - 24);
}

void add_t1_brackets(long long g, const Rat& y, std::vector<Constraint>& cs) {
    Rat dhb = delta_hur_bn(g);
    Rat inner = Rat(2) / Rat(g + 3) + 5 * dhb;
    cs.push_back({"t1.nct", "(1-4y)/2 - 2(1-y)(2/(g+3) + 5 dHur)",
                  {(1 - 4 * y) / 2 - 2 * (1 - y) * inner, Rat(0)}});
    Rat inner2 = Rat(24) / Rat(g + 3) + 60 * dhb;
    cs.push_back({"t1.oct", "9 - 12y - 2(1-y)(24/(g+3) + 60 dHur)",
                  {Rat(9) - 12 * y - 2 * (1 - y) * inner2, Rat(0)}});
    cs.push_back({"t1.edb", "7 - 12y - 2(1-y)(24/(g+3) + 60 dHur)",
                  {Rat(7) - 12 * y - 2 * (1 - y) * inner2, Rat(0)}});
}

Certificate finish_fixed_point_cert(Certificate cert, std::vector<Constraint> cs) {
    cert.constraint_count = cs.size();
    for (const auto& c : cs) {
        Rat v = c.form.a;  // all constraints here are constants at the chosen y
        bool bad = c.strict ? v <= 0 : v < 0;
        if (bad) cert.binding.push_back(c);
    }
    cert.verdict = cert.binding.empty() ? "certified-at" : "failed";
    return cert;
}

}  // namespace

Certificate certify_few_zeros(const Signature& sig, const CertificationOptions&) {
    Certificate cert;
    cert.stratum = sig.str();
    if (!sig.holomorphic()) {
        cert.verdict = "out-of-range";
        cert.note = "few-zeros certification needs a holomorphic signature";
        return cert;
    }
    long long g = sig.genus();
    if (g < 2 || sig.is_minimal()) {
        cert.verdict = "out-of-range";
        cert.note = "few-zeros route excludes minimal strata and g < 2";
        return cert;
    }
    bool all_even = true;
    for (long long m : sig.orders()) all_even = all_even && m % 2 == 0;
    bool two_odd = sig.size() == 2 && sig.order(0) % 2 == 1 && sig.order(1) % 2 == 1;
    if (!all_even && !two_odd) {
        cert.verdict = "out-of-range";
        cert.note = "supported: even signatures, or two zeros of odd order";
        return cert;
    }

    Rat wl = w_lambda_app(sig);
    Rat k = kappa_mu(sig);
    Rat N = Rat(unprojectivized_dim(sig));
    Rat M1 = m_inv(sig);
    Rat q = (1 + M1) / N;
    Rat y = all_even ? rat(1, 4) - epsilon(g) : rat(1, 6);
    cert.y = y;
    cert.options = all_even ? "few-zeros (even), y = 1/4 - eps" : "two odd zeros, y = 1/6";

    std::vector<Constraint> cs;
    cs.push_back({"yrange.lower", "y - w_lambda_app/6", {y - wl / 6, Rat(0)}, false});
    cs.push_back({"yrange.upper", "1/4 - eps - y", {rat(1, 4) - epsilon(g) - y, Rat(0)}, false});
    add_t1_brackets(g, y, cs);
    Rat Y = y * Rat(12) / (wl * k);
    cs.push_back({"t2.kbot", "y 12/(w_lambda kappa) - (1+M_{-1})/N", {Y - q, Rat(0)}});
    cs.push_back({"t2.mbot", "1 - (1+M_{-1})/N", {1 - q, Rat(0)}});

    if (all_even) {
        cs.push_back(
            {"fewzero.condition", "(12/w_lambda)(N/kappa)(1/4-eps) - 1 - M_{-1}",
             {(Rat(12) / wl) * (N / k) * (rat(1, 4) - epsilon(g)) - 1 - M1, Rat(0)}, false});
        // rational tails: (1 - q) M_{-1,v} >= 3(1-q)/p_e must beat 2/p_e
        cs.push_back({"t2.rational_tail", "3(1 - (1+M_{-1})/N) - 2", {3 * (1 - q) - 2, Rat(0)}});
        // rational-bottom dumbbell carrying all marked points: beat 3/p_e
        Rat p = Rat(2 * g - 1);
        cs.push_back({"t2.dumbbell", "(1 - Y) M_{-1} + Y/(M+1) - 3/(2g-1)",
                      {(1 - Y) * M1 + Y / p - 3 / p, Rat(0)}});
    } else {
        cs.push_back({"gate.y24", "y - 1/24 (interior ramification gate)", {y - rat(1, 24), Rat(0)}});
        cs.push_back({"odd.mbot", "1 - (1+M_{-1})/N - 1/(4 w_lambda_app)",
                      {1 - q - Rat(1) / (4 * wl), Rat(0)}});
        // dumbbell with rational bottom and both legs below
        Rat p = Rat(2 * g - 1);
        Rat kbot = k - Rat(2 * g) * Rat(2 * g - 2) / Rat(2 * g - 1);
        Rat T2 = (Y - q) * kbot + (1 - q) * M1 + q / p;
        cs.push_back({"odd.dumbbell", "T2 - 3/P - M_{-1}(1 - kappa_bot/kappa)/(4 w_lambda)",
                      {T2 - 3 / p - M1 * (1 - kbot / k) / (4 * wl), Rat(0)}});
    }
    return finish_fixed_point_cert(std::move(cert), std::move(cs));
}

Certificate certify_equidistributed(long long s, long long n, const CertificationOptions&) {
    Certificate cert;
    if (s < 1 || n < 2 || (s * n) % 2 != 0) {
        cert.stratum = "(" + std::to_string(s) + "^" + std::to_string(n) + ")";
        cert.verdict = "out-of-range";
        cert.note = "need s >= 1, n >= 2, s*n even";
        return cert;
    }
    Signature sig{std::vector<long long>(n, s)};
    cert.stratum = "(" + std::to_string(s) + "^" + std::to_string(n) + ")";
    long long g = sig.genus();
    if (g < 2) {
        cert.verdict = "out-of-range";
        cert.note = "need g >= 2";
        return cert;
    }
    Rat wl_app = w_lambda_app(sig);
    Rat wl_mid = w_lambda_mid(sig);
    Rat k = kappa_mu(sig);
    Rat N = Rat(unprojectivized_dim(sig));
    Rat M1 = m_inv(sig);
    Rat q = (1 + M1) / N;
    bool few = n <= 2 * (s + 1);
    Rat y = few ? wl_app / 4 : wl_app / 6;
    cert.y = y;
    cert.options = std::string(few ? "few-zeros regime, y = w_app/4" : "many-zeros regime, y = w_app/6");

    std::vector<Constraint> cs;
    cs.push_back({"yrange.lower", "y - w_lambda_app/6", {y - wl_app / 6, Rat(0)}, false});
    cs.push_back({"yrange.upper", "1/4 - eps - y", {rat(1, 4) - epsilon(g) - y, Rat(0)}, false});
    add_t1_brackets(g, y, cs);
    Rat Y = y * Rat(12) / (wl_app * k);
    if (few) {
        cs.push_back({"t2.kbot", "3/kappa - (1+M_{-1})/N", {Rat(3) / k - q, Rat(0)}});
        if (s % 2 == 1)
            cs.push_back({"odd.mbot", "1 - (1+M_{-1})/N - 3/8", {1 - q - rat(3, 8), Rat(0)}});
    } else {
        cs.push_back({"t2.P", "(1+M_{-1})/N - y 12/(w_mid kappa)",
                      {q - y * Rat(12) / (wl_mid * k), Rat(0)}});
        cs.push_back({"t2.line1", "12y/w_mid - kappa/N", {Rat(12) * y / wl_mid - k / N, Rat(0)}});
        if (s % 2 == 1)
            cs.push_back({"odd.P", "(1+M_{-1})/N - 2/kappa - M_{-1}/(4 kappa)",
                          {q - Rat(2) / k - M1 / (4 * k), Rat(0)}});
    }
    // rational tails, one constraint per possible tail size n_v
    for (long long nv = 2; nv <= n; ++nv) {
        long long Mv = s * nv;
        Rat pe = Rat(Mv + 1);
        Rat M1v = Rat(nv) / Rat(s + 1);
        Rat margin = (Y - q) * Rat(nv - 1) + (1 - Y) * M1v + Y / pe;
        Rat need = (nv == n ? Rat(3) : Rat(2)) / pe;
        if (s % 2 == 1) margin -= y * Rat(12) / (8 * wl_app) * M1v;
        cs.push_back({nv == n ? "t2.dumbbell" : "t2.rational_tail",
                      "tail with " + std::to_string(nv) + " legs", {margin - need, Rat(0)}});
    }
    return finish_fixed_point_cert(std::move(cert), std::move(cs));
}

std::string Certificate::to_json() const {
    nlohmann::json j;
    j["stratum"] = stratum;
    j["options"] = options;
    if (y) j["y"] = msd::to_string(*y);
    if (feasible_y) {
        j["feasible_y"] = {msd::to_string(feasible_y->first), msd::to_string(feasible_y->second)};
    } else if (verdict == "failed") {
        j["feasible_y"] = nullptr;
    }
    j["verdict"] = verdict;
    j["constraint_count"] = constraint_count;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : binding) {
        nlohmann::json cj;
        cj["kind"] = c.kind;
        cj["profile"] = c.profile;
        cj["affine"] = {msd::to_string(c.form.a), msd::to_string(c.form.b)};
        if (y) cj["value_at_y"] = msd::to_string(c.form.at(*y));
        arr.push_back(cj);
    }
    j["constraints"] = arr;
    if (!note.empty()) j["note"] = note;
    return j.dump(2);
}

}  // namespace msd
