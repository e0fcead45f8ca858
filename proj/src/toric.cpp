#include "msd/toric.hpp"

#include <algorithm>
#include <numeric>

namespace msd {

CyclicQuotient::CyclicQuotient(long long order, std::vector<long long> ws)
    : n(order), weights(std::move(ws)) {
    if (n < 1) throw std::invalid_argument("cyclic quotient needs n >= 1");
    if (weights.empty()) throw std::invalid_argument("cyclic quotient needs weights");
    long long g = n;
    for (auto& a : weights) {
        a %= n;
        if (a < 0) a += n;
        g = std::gcd(g, a);
    }
    if (n > 1 && g != 1)
        throw std::invalid_argument("weights must generate a faithful action: gcd(n, a_i) = 1");
}

std::vector<std::vector<Rat>> interior_orbit_points(const CyclicQuotient& q) {
    std::vector<std::vector<Rat>> pts;
    size_t L = q.weights.size();
    std::vector<std::vector<Rat>> all;
    for (long long j = 1; j < q.n; ++j) {
        std::vector<Rat> v(L);
        bool interior = true;
        for (size_t i = 0; i < L; ++i) {
            long long c = (j * q.weights[i]) % q.n;
            v[i] = rat(c, q.n);
            if (c == 0) interior = false;
        }
        if (interior) all.push_back(std::move(v));
    }
    // primitive: not an integer multiple (>= 2) of another interior orbit point
    for (const auto& v : all) {
        bool primitive = true;
        for (const auto& w : all) {
            if (&v == &w) continue;
            // v = k w for integer k >= 2?
            Rat k = 0;
            bool match = true;
            for (size_t i = 0; i < v.size() && match; ++i) {
                if (w[i] == 0) { match = v[i] == 0; continue; }
                Rat ratio = v[i] / w[i];
                if (k == 0) k = ratio;
                else if (k != ratio) match = false;
            }
            if (match && k > 1 && den(k) == 1) { primitive = false; break; }
        }
        if (primitive) pts.push_back(v);
    }
    return pts;
}

ResolutionLedger discrepancies(const CyclicQuotient& q) {
    ResolutionLedger ledger;
    for (auto& v : interior_orbit_points(q)) {
        ExceptionalRay ray;
        ray.point = v;
        Rat s = 0;
        for (const auto& c : v) s += c;
        ray.discrepancy = s - 1;
        ray.pullback = v;  // <m_{sigma,i}, v> = i-th coordinate
        ledger.rays.push_back(std::move(ray));
    }
    return ledger;
}

bool extends(const CyclicQuotient& q, const std::vector<long long>& b) {
    if (b.size() != q.weights.size())
        throw std::invalid_argument("vanishing orders must match the number of weights");
    for (long long x : b)
        if (x < 0) throw std::invalid_argument("vanishing orders must be >= 0");
    for (long long j = 1; j < q.n; ++j) {
        Rat s = 0;
        for (size_t i = 0; i < b.size(); ++i) {
            long long a = (j * q.weights[i]) % q.n;
            s += rat(a, q.n) * Rat(b[i] + 1);
        }
        if (s < 1) return false;
    }
    return true;
}

ResolutionLedger hj_resolve(long long n, long long q) {
    if (n <= 1) return {};
    if (q <= 0 || q >= n || std::gcd(n, q) != 1)
        throw std::invalid_argument("hj_resolve expects 0 < q < n with gcd(n,q) = 1");

    // Lattice N = Z^2 + Z (1/n)(1, q). Points of N in the open quadrant with
    // coordinates in (0,1) x (0,1): (j/n, (jq mod n)/n), j = 1..n-1. The compact
    // hull boundary runs from (1,0) to (0,1); we take the lower-left hull chain.
    struct Pt {
        Rat x, y;
    };
    std::vector<Pt> cand;
    for (long long j = 1; j < n; ++j) {
        long long r = (j * q) % n;
        if (r == 0) continue;
        cand.push_back({rat(j, n), rat(r, n)});
    }
    cand.push_back({Rat(1), Rat(0)});
    cand.push_back({Rat(0), Rat(1)});
    // also include translates that could undercut the hull (x<1+..): points with
    // x in (0,1), y in (0,1) suffice: any lattice point with x>=1 or y>=1 is
    // dominated by (1,0)/(0,1) plus a positive vector.
    std::sort(cand.begin(), cand.end(), [](const Pt& a, const Pt& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    // lower convex hull from (0,1) side: sort by x ascending, keep chain that
    // turns right (convex toward origin)
    std::vector<Pt> hull;
    for (const auto& p : cand) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            // keep b only on a strict left turn a -> b -> p
            Rat cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }
    // hull now runs from (0,1) ... (1,0) by x ascending; boundary points are the
    // chain vertices PLUS lattice points on the segments. Collect all candidate
    // points lying on the hull boundary (excluding the two axis generators).
    ResolutionLedger ledger;
    std::vector<Pt> boundary;
    auto on_segment = [](const Pt& a, const Pt& b, const Pt& p) {
        Rat cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
        if (cross != 0) return false;
        return p.x >= rat_min(a.x, b.x) && p.x <= rat_max(a.x, b.x) &&
               p.y >= rat_min(a.y, b.y) && p.y <= rat_max(a.y, b.y);
    };
    for (const auto& p : cand) {
        if (p.x == 1 && p.y == 0) continue;
        if (p.x == 0 && p.y == 1) continue;
        for (size_t i = 0; i + 1 < hull.size(); ++i) {
            if (on_segment(hull[i], hull[i + 1], p)) {
                boundary.push_back(p);
                break;
            }
        }
    }
    std::sort(boundary.begin(), boundary.end(), [](const Pt& a, const Pt& b) {
        return a.x < b.x;
    });
    for (const auto& p : boundary) {
        ExceptionalRay ray;
        ray.point = {p.x, p.y};
        ray.discrepancy = p.x + p.y - 1;
        ray.pullback = {p.x, p.y};
        ledger.rays.push_back(std::move(ray));
    }
    // chain relation v_{i-1} + v_{i+1} = b_i v_i with v_0 = (1,0), v_{r+1} = (0,1)
    std::vector<Pt> chain;
    chain.push_back({Rat(1), Rat(0)});
    for (auto it = ledger.rays.rbegin(); it != ledger.rays.rend(); ++it)
        chain.push_back({it->point[0], it->point[1]});
    chain.push_back({Rat(0), Rat(1)});
    for (size_t i = 1; i + 1 < chain.size(); ++i) {
        Rat bx = (chain[i - 1].x + chain[i + 1].x) / chain[i].x;
        Rat by = chain[i].y == 0 ? bx : (chain[i - 1].y + chain[i + 1].y) / chain[i].y;
        if (bx != by || den(bx) != 1)
            throw std::logic_error("hull chain violates the continued-fraction relation");
        ledger.hj_expansion.push_back(static_cast<long long>(num(bx)));
    }
    return ledger;
}

CherryQuotient cherry_quotient(long long a, long long b) {
    if (a < 1 || b < 1) throw std::invalid_argument("cherry enhancements must be >= 1");
    if (b < a) std::swap(a, b);
    CherryQuotient c;
    long long g = std::gcd(a, b);
    c.n = b / g;
    c.q = (b - a) / g;
    c.l1 = a / g * b;  // lcm(a, b)
    c.l2 = b;
    // generator of N/N' acts by (zeta_{l1}^a, zeta_{l2}^{q l2 / n})
    c.exp1 = a % c.l1;
    c.exp2 = c.n == 1 ? 0 : (c.q * (c.l2 / c.n)) % c.l2;
    return c;
}

}  // namespace msd
