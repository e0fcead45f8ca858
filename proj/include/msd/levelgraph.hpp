#pragma once

#include "msd/rational.hpp"
#include "msd/stratum.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace msd {

struct VertexData {
    long long genus = 0;
    std::vector<int> legs;  // indices into the signature
};

struct EdgeData {
    int top = 0;
    int bot = 0;
    long long prong = 1;  // p_e >= 1
};

// Enhanced two-level graph without horizontal edges (an element of LG_1).
struct TwoLevelGraph {
    std::vector<VertexData> top;
    std::vector<VertexData> bottom;
    std::vector<EdgeData> edges;
};

class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

enum class EdgeType { NCT, RBT, EDB, OCT };

std::string to_string(EdgeType t);

// Image of the one-edge contraction in \bar M_g.
struct MgBoundaryImage {
    bool contracted = false;   // rational side stabilizes away
    bool irreducible = false;  // Delta_irr
    long long i = 0;           // Delta_i otherwise (1 <= i <= g/2)
};

struct ShapeFlags {
    bool is_HTB = false;
    bool is_HBT = false;
    bool is_HBB = false;
    bool is_RMB = false;
    int delta_H = 0;
};

// Everything the divisor evaluators consume about a validated graph.
struct GraphData {
    TwoLevelGraph graph;
    Signature sig;

    long long E = 0, v_top = 0, v_bot = 0, n_top = 0, n_bot = 0;
    long long g_top = 0, g_bot = 0;
    long long P = 0;
    Rat P_inv;           // P_{-1}
    long long lcm_prongs = 1;  // ell_Gamma
    long long M_top = 0;
    Rat M_top_inv;
    long long N_top = 0, N_bot = 0;
    Rat kappa_top, kappa_bot;

    std::vector<EdgeType> edge_types;
    std::vector<MgBoundaryImage> mg_images;
    ShapeFlags shapes;

    bool leg_on_bottom(size_t leg_index) const;
    // vartheta of the top/bottom level signature; edge legs get alpha = 0.
    Rat vartheta_top(const WeightVector& alpha) const;
    Rat vartheta_bot(const WeightVector& alpha) const;
};

// Checks connectivity, order equations, stability; computes derived data,
// classifies edges and shapes. Throws ValidationError with a specific reason.
GraphData validate(const TwoLevelGraph& graph, const Signature& sig, bool conservative_shapes = false);

std::vector<EdgeType> classify_edges(const TwoLevelGraph& graph);
std::vector<MgBoundaryImage> map_to_Mg_boundary(const TwoLevelGraph& graph);

// Per edge: arithmetic genus of the side containing the given leg when the
// edge separates; nullopt for non-separating edges.
std::vector<std::optional<long long>> marked_side_genus(const TwoLevelGraph& graph, int leg);
ShapeFlags shape_flags(const GraphData& data, bool conservative = false);

// Reduced numeric profile of a minimal-stratum two-level graph (v_bot = 1).
struct GraphProfile {
    long long v_top = 1;
    long long g_top = 1;
    long long E = 1;
    std::vector<long long> prongs;  // sorted ascending, size E, sum = 2 g_top - 2 v_top + E

    long long P() const;
    Rat P_inv() const;
    long long lcm_prongs() const;
    long long ones() const;  // number of prong-1 edges
    std::string str() const;
};

// HBB candidate test on a minimal-stratum profile: the multiset splits into
// (2 v_top - E) odd singletons plus (E - v_top) equal pairs, at least one pair.
bool profile_is_hbb_candidate(const GraphProfile& p);

enum class EnumerationMode { Full, Reduced };

// Streams profiles for the minimal stratum of genus g.
//  Full: all (v_top, g_top, E) with every prong multiset (a superset of the
//        realizable distributions; no per-vertex parity filtering).
//  Reduced: v_top = 1 only; per (E, g_top) the two P_{-1}-extremal multisets.
// The callback returns false to stop early. Returns the number of profiles seen.
size_t enumerate_minimal_profiles(long long g, EnumerationMode mode,
                                  const std::function<bool(const GraphProfile&)>& cb);

}  // namespace msd
