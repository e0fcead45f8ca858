#pragma once

#include "msd/levelgraph.hpp"
#include "msd/nccomp.hpp"
#include "msd/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace msd {

// Eigenvalue exponents of a finite-order linear action.
struct EigenSpectrum {
    long long order = 1;                 // k >= 1
    std::vector<long long> exponents;    // a_i in [0, k)
};

// age = sum ((a_i - a) mod k) / k for the projectivizer exponent a.
Rat age(const EigenSpectrum& spec, long long projectivizer);

// phi_k(a) = sum over 1 <= n < k coprime to k of (n - a) mod k.
Rat phi_k(long long k, long long a);

struct MLVertex {
    int level = 0;   // 0 = top, negative below
    long long genus = 0;
    std::vector<int> legs;
};

struct MLEdge {
    int upper = 0;
    int lower = 0;
    long long prong = 1;
};

struct MultiLevelGraph {
    std::vector<MLVertex> vertices;
    std::vector<MLEdge> edges;

    int depth() const;                        // L = number of level passages
    bool crosses(const MLEdge& e, int j) const;  // passage j in 1..L
    long long passage_lcm(int j) const;       // ell_j
    void validate_structure() const;          // connectivity, level monotonicity
};

// Contracts all passages except j, producing a two-level graph whose vertices
// are the connected components above/below with merged genus (cycles counted).
TwoLevelGraph undegenerate(const MultiLevelGraph& g, int j);

// Automorphism data for the c(tau) functional. Swapped vertex pairs are
// pre-merged into single order-2 vertices, so all vertices here are fixed.
struct AutomorphismProfile {
    std::vector<long long> vertex_order;            // k_v >= 1
    std::vector<Rat> vertex_age;                    // age contribution of v
    std::vector<Rat> s;                             // s_j in [0,1), one per passage
    std::vector<std::array<int, 2>> swapped_pairs;  // edge index pairs permuted by tau
    std::vector<std::array<int, 3>> tripled_groups; // 3-cycles of edges
};

class ProfileError : public std::runtime_error {
  public:
    explicit ProfileError(const std::string& what) : std::runtime_error(what) {}
};

// c_e = sum_{j in [e]} (ell_j / p_e) s_j
Rat edge_contribution(const MultiLevelGraph& g, const AutomorphismProfile& p, size_t edge);

// Throws ProfileError naming the first edge whose integrality constraint
// (Lemmas on fixed/permuted edges) fails.
void check_profile(const MultiLevelGraph& g, const AutomorphismProfile& p);

// c(tau) = sum_j ell_j R_NC(delta_j) s_j + sum_v age_v.
// minimal_stratum enables the RefinedMinimal coefficients on undegenerations.
Rat c_tau(const MultiLevelGraph& g, const AutomorphismProfile& p, DncVersion version,
          bool minimal_stratum = false);

// The exceptional-case records of the age tables.
struct AgeTableEntry {
    std::string id;        // "H", "1".."13", "RH", "R1".."R7"
    long long order;
    Rat age_bound;
    bool residue_conditions;
    std::string stratum;   // human-readable pattern
};

const std::vector<AgeTableEntry>& age_table();

// Minimal age bound for a vertex of the given order per the tables
// (0 for orders 1 and 2, 1/3 for 3 and 6, 1/2 for 4).
Rat min_age_for_order(long long k);

struct SearchBounds {
    int max_levels = 3;  // total number of levels (passages = levels - 1)
    int max_edges = 5;
    long long max_prong = 6;
    std::vector<long long> orders = {1, 2, 3, 4, 6};
    DncVersion version = DncVersion::V1;
    int jobs = 1;
};

struct SearchWitness {
    std::string description;
    Rat value;
};

struct SearchResult {
    Rat min_c;
    bool any_feasible = false;
    SearchWitness witness;
    size_t structures = 0;       // (graph, prong, pairing, species) shells examined
    size_t feasible_profiles = 0;
    std::string denominator_bound;  // the documented search hypothesis for s_j
};

// Exhaustive minimum of c(tau) over the bounded configuration space, excluding
// quasi-reflections and all-trivial-passage profiles.
SearchResult search_min_c(const SearchBounds& bounds);

}  // namespace msd
