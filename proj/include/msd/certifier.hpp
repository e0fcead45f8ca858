#pragma once

#include "msd/divisors.hpp"
#include "msd/levelgraph.hpp"
#include "msd/nccomp.hpp"
#include "msd/rational.hpp"
#include "msd/stratum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msd {

enum class DivisorChoice { Auto, BN, Hur, NF };
enum class Regime { Auto, Full, Reduced };

std::string to_string(DivisorChoice d);
DivisorChoice parse_divisor(const std::string& s);

struct CertificationOptions {
    std::optional<DncVersion> dnc;       // default: refined (g<=18), v2 (19..43), v1 (>=44)
    DivisorChoice divisor = DivisorChoice::Auto;
    Regime regime = Regime::Auto;
    bool conservative_delta_h = false;
    int jobs = 1;
    long long full_regime_max_genus = 18;
};

// value(y) = a + b*y; required > 0 (or >= 0 when strict is false).
struct AffineForm {
    Rat a, b;
    Rat at(const Rat& y) const { return a + b * y; }
};

struct Constraint {
    std::string kind;     // horizontal | gamma | edb_special | hbb_special |
                          // cpt_domination | vtop_coefficient | ramification_outweigh | ...
    std::string profile;  // provenance note
    AffineForm form;
    bool strict = true;
};

struct Certificate {
    std::string stratum;
    std::string options;
    std::optional<Rat> y;                      // fixed-y mode
    std::optional<std::pair<Rat, Rat>> feasible_y;  // interval mode (open interval)
    std::string verdict;  // certified-at | certified-interval | failed | out-of-range
    size_t constraint_count = 0;
    std::vector<Constraint> binding;  // violated constraints (fixed-y) or interval binders
    std::string note;

    bool certified() const { return verdict.rfind("certified", 0) == 0; }
    std::string to_json() const;
};

// s_hor(y), exact and affine in y. The divisor choice supplies the D_h term.
AffineForm s_hor_form(long long g, DivisorChoice divisor);
Rat s_hor(long long g, const Rat& y, DivisorChoice divisor);

// s_Gamma lower bound for a minimal-stratum profile (NCT-everywhere b-term,
// HBB-candidate delta_H, worst-case tail conversions at the given y).
Rat s_gamma_profile(long long g, const GraphProfile& p, const Rat& y,
                    const CertificationOptions& options);

// Exact s_Gamma on a validated graph of any holomorphic stratum.
Rat s_gamma_graph(const Signature& sig, const GraphData& d, const Rat& y,
                  DncVersion version, DivisorChoice divisor);

// Per-edge compact-type vs non-compact-type domination at (g, y): when true for
// every tail genus, treating every edge as NCT is the worst case.
bool cpt_domination_check(long long g, const Rat& y, const CertificationOptions& options);

Certificate certify_minimal(long long g, const Rat& y, const CertificationOptions& options);
Certificate certify_minimal_interval(long long g, const CertificationOptions& options);
std::optional<std::pair<Rat, Rat>> feasible_y_interval(long long g,
                                                       const CertificationOptions& options);

// Few-zeros strata (even entries, y = 1/4 - eps) and the two-odd-zeros route
// (mu = (m, 2g-2-m), m odd, y = 1/6).
Certificate certify_few_zeros(const Signature& sig, const CertificationOptions& options);

// Equidistributed strata mu = (s^n).
Certificate certify_equidistributed(long long s, long long n,
                                    const CertificationOptions& options);

}  // namespace msd
