#pragma once

#include "msd/levelgraph.hpp"
#include "msd/rational.hpp"

namespace msd {

enum class DncVersion { V1, V2, RefinedMinimal };

std::string to_string(DncVersion v);
DncVersion parse_dnc(const std::string& s);

// R_NC on a validated graph.
//  V1:  sum_NCT 1/(2 p_e) + sum_RBT 1/p_e + sum_OCT 2/p_e + sum_EDB 4/p_e
//  V2:  NCT coefficient 1/E_Gamma, plus the additive (v_top - 1)
//  RefinedMinimal: V2 with the rational-multi-banana overrides.
Rat r_nc(const GraphData& d, DncVersion version);

// Profile version for minimal strata (edges treated as NCT; RMB overrides
// apply when the profile has v_top = 1 and rational bottom).
Rat r_nc_profile(const GraphProfile& p, long long g, DncVersion version);

// R_NC from graph structure alone (edge classification needs no signature);
// used on undegenerations of multi-level graphs inside c(tau).
Rat r_nc_structural(const TwoLevelGraph& g, DncVersion version, bool minimal_stratum);

// b_NC = ell * R_NC - 1
Rat b_nc(const GraphData& d, DncVersion version);

// R = R_NC + delta_H / ell  (the renormalized contribution used by c_Gamma).
Rat r_star(const GraphData& d, DncVersion version);
Rat r_star(const GraphData& d, DncVersion version, int delta_H);

// Profile mode: delta_H / ell is majorized by delta_H * min_e(1/p_e) when the
// lcm is not wanted; here the multiset is explicit so the exact ell is used.
Rat r_star_profile(const GraphProfile& p, long long g, DncVersion version, int delta_H);

// R <= P_{-1}^NCT/2 + 4 P_{-1}^EDB + P_{-1}^RBT + 2 P_{-1}^OCT + delta_H/ell
Rat r_upper_bound(const GraphData& d);

}  // namespace msd
