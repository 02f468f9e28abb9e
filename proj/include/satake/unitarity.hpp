#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satake/orbits.hpp"
#include "satake/repweights.hpp"
#include "satake/rootdata.hpp"

namespace satake {

// nu dominant and <gamma^vee, nu> < 1.
bool fundamental_alcove_test(const ChamberPoint& p);

struct LevelBound {
    SimpleType type;
    int r0 = 0;
    std::vector<RationalVector> level_r0_coroots;
};

// Largest coroot level r0 such that unitary half-integral candidates must
// satisfy <beta^vee, nu> < 1 for the listed coroots beta^vee of level r0.
LevelBound max_level_bound(const SimpleType& t);

struct EliminationStep {
    RationalVector candidate;  // fundamental coordinates
    std::string reason;
};

struct HalfIntegralResult {
    std::vector<ChamberPoint> points;      // sorted: 0 first, then by fundamental coordinates
    std::vector<EliminationStep> trace;    // every eliminated candidate, with the first failing test
};

// Candidates sum nu_i omega_i with nu_i in {0, 1/2}, filtered by hermiticity,
// the level-r0 bounds, the reducibility hyperplanes <alpha^vee, nu> = 1 and
// the fundamental alcove.
HalfIntegralResult half_integral_unitary_analysis(const SimpleType& t);
std::vector<ChamberPoint> half_integral_unitary_points(const SimpleType& t);

// True when <alpha^vee, nu> is a positive integer for some positive coroot
// (such a point is excluded from the generic unitary set).
bool integral_point_nonunitary(const ChamberPoint& p);

// The generic unitary set U_0 is the hermitian part of a union of 2^d
// alcoves of C_0; this returns d (catalog data, the alcoves are not listed).
int unitary_alcove_exponent(const SimpleType& t);

// prod (d_i + h) / d_i
std::int64_t count_chamber_regions(const SimpleType& t);

struct ChamberRegion {
    std::vector<bool> below;   // per positive coroot (datum order): <alpha^vee, nu> < 1
    RationalVector witness;    // interior point, fundamental coordinates
};

// Open regions of C_0 cut out by the hyperplanes <alpha^vee, nu> = 1; exact
// enumeration by hyperplane splitting with an LP feasibility check.  Rank <= 4.
std::vector<ChamberRegion> enumerate_chamber_regions(const SimpleType& t);

ChamberPoint central_point(const NilpotentOrbit& o);

struct ExtraneousCatalogEntry {
    SimpleType dual_type;
    NilpotentOrbit orbit;
    ChamberPoint re_s;
    std::optional<std::map<int, int>> epsilon;  // part -> 0/1, classical families only
    std::vector<std::string> centralizer;
};

std::vector<ExtraneousCatalogEntry> extraneous_points(const NilpotentOrbit& o);

// Parts eligible for an epsilon shift: Sp: even parts with r >= 3; Spin: odd
// parts with r >= 3; none otherwise.
std::vector<int> extraneous_parts(const NilpotentOrbit& o);

// 1/2 h + 1/2 sum eps_j omega^j for an arbitrary epsilon pattern (including
// ones the classification excludes), as a dominant point.
ChamberPoint classical_shifted_point(const NilpotentOrbit& o, const std::map<int, int>& epsilon);

using Quad = std::array<Rational, 4>;

// Requires 0 <= nu1 <= nu2 <= nu3 <= nu4.
bool cs_e8_4a1_member(const Quad& nu);
bool cs_e8_4a1_extra_region(const Quad& nu);
// 1/2 h + (0,0,nu1,nu1,nu2,nu2,-nu3+nu4,nu3+nu4) in E8 coordinates (not made dominant).
RationalVector cs_e8_4a1_parameter(const Quad& nu);
// (0, 1, -1/2, 1/2, -1/2, 1/2, 0, 0)
RationalVector cs_e8_4a1_half_h();

struct GridScan {
    std::int64_t scanned = 0;
    std::vector<Quad> members;
};
// All ordered points of step * Z^4 with 0 <= nu1 <= ... <= nu4 < bound that lie
// in the extra region.
GridScan cs_e8_4a1_grid_scan(const Rational& step, const Rational& bound);

struct QuasiSplitResult {
    SimpleType folded;
    std::vector<ChamberPoint> candidates;  // half_integral_unitary_points(folded)
    std::vector<ChamberPoint> points;      // survivors
    std::vector<std::string> available_reps;
    std::vector<EliminationStep> trace;
};

QuasiSplitResult quasi_split_analysis(const SimpleType& t, int tau_order);
std::vector<ChamberPoint> quasi_split_reduction(const SimpleType& t, int tau_order);

}  // namespace satake
