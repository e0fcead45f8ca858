#pragma once

#include "msd/rational.hpp"

#include <string>
#include <vector>

namespace msd {

// Cyclic quotient singularity of type 1/n (a_1, ..., a_L).
struct CyclicQuotient {
    long long n = 1;
    std::vector<long long> weights;  // 0 <= a_i < n after reduction

    CyclicQuotient(long long order, std::vector<long long> ws);
};

struct ExceptionalRay {
    std::vector<Rat> point;   // coordinates of the ray generator v_j
    Rat discrepancy;          // <m_sigma, v> - 1 = sum of coordinates - 1
    std::vector<Rat> pullback;  // coefficient of E on pi* D_i - ~D_i, per axis divisor
};

struct ResolutionLedger {
    std::vector<ExceptionalRay> rays;
    std::vector<long long> hj_expansion;  // 2D minimal resolutions: chain relation coefficients
};

// Primitive interior points v_{tau^j} of the cone, in the extended lattice.
std::vector<std::vector<Rat>> interior_orbit_points(const CyclicQuotient& q);

// Cyclic normalization: one ray per primitive interior orbit point.
ResolutionLedger discrepancies(const CyclicQuotient& q);

// Tai extension test: for every non-trivial power tau^j,
// sum_i (a_i^{(j)}/n)(b_i + 1) >= 1 with a^{(j)} = j a mod n.
bool extends(const CyclicQuotient& q, const std::vector<long long>& b);

// Minimal resolution of 1/n(1,q): primitive lattice points on the compact
// boundary of the convex hull of (sigma cap N) minus the origin.
ResolutionLedger hj_resolve(long long n, long long q);

// Cherry graph with enhancements a (short edge), b (long edge), b >= a after
// swapping: quotient singularity of order n = b/gcd(a,b), type 1/n(1, q) with
// q = (b-a)/gcd(a,b).
struct CherryQuotient {
    long long n = 1;
    long long q = 0;
    long long l1 = 1, l2 = 1;       // lcm(a,b), b
    long long exp1 = 0, exp2 = 0;   // generator acts by (zeta_l1^exp1, zeta_l2^exp2)
};

CherryQuotient cherry_quotient(long long a, long long b);

}  // namespace msd
