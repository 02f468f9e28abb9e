#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satake/rootdata.hpp"

namespace satake {

enum class VeryEvenTag { I, II };

// A nilpotent orbit in the Lie algebra of the dual group G^vee, recorded
// through the neutral element h of an sl2-triple (Kostant).  `dual_type` is the
// type of G^vee; h lives in the ambient coordinates of the root datum of G
// whose coroots are the roots of G^vee (the datum of `datum_type`).
struct NilpotentOrbit {
    SimpleType dual_type;
    SimpleType datum_type;
    std::string label;               // partition "2,2,1,1" or Bala-Carter label "E8(a7)"
    std::vector<int> partition;      // classical only, non-increasing
    std::optional<VeryEvenTag> tag;  // very even D partitions only
    RationalVector h;                // dominant
    std::vector<int> marks;          // weighted Dynkin diagram <alpha_i, h>
    std::vector<std::string> centralizer;  // simple/torus factors, e.g. {"Sp(2)", "O(3)"} or {"B3", "A1"}
    int dimension = 0;
    bool centralizer_verified = false;  // exceptional: cross-checked against an independent table

    std::string full_label() const;  // label plus " I"/" II" for very even orbits
    std::string centralizer_string() const;
    bool is_zero() const { return satake::is_zero(h); }

    friend bool operator==(const NilpotentOrbit& a, const NilpotentOrbit& b) {
        return a.dual_type == b.dual_type && a.label == b.label && a.tag == b.tag;
    }
};

// Type of G whose coroots are the roots of G^vee: B <-> C, everything else
// self-dual in this sense.
SimpleType datum_type_for_dual(const SimpleType& dual);

// Size N of the defining representation of a classical dual group:
// SL(r+1), Spin(2r+1), Sp(2r), Spin(2r).
int defining_dimension(const SimpleType& dual);

// All orbits of a classical dual group, in reverse lexicographic order of
// partitions; very even D partitions appear twice (tag I then II).
std::vector<NilpotentOrbit> classical_orbits(const SimpleType& dual);
// Same, with an explicit N which must match the rank convention.
std::vector<NilpotentOrbit> classical_orbits(const SimpleType& dual, int n);

std::vector<NilpotentOrbit> exceptional_catalog(const SimpleType& dual);

// Classical or exceptional catalog, whichever applies.
std::vector<NilpotentOrbit> orbit_catalog(const SimpleType& dual);

// Lookup by label.  Bala-Carter labels are compared after dropping '+' and
// blanks, so "A42A1" finds "A4+2A1".  Partitions may be given as "2,2,2",
// "2 2 2", "2^3" or "(2,2,2)"; very even ones take a trailing "I"/"II".
NilpotentOrbit find_orbit(const SimpleType& dual, std::string_view label);

RationalVector neutral_element(const NilpotentOrbit& o);

// Neutral element of a partition orbit, in the coordinates described above
// (tag only relevant for very even D partitions).
RationalVector classical_neutral_element(const SimpleType& dual, const std::vector<int>& partition,
                                         std::optional<VeryEvenTag> tag = std::nullopt);

// Eigenvalues of 1/2 h on the defining representation: for each part d, the
// string (d-1)/2, (d-3)/2, ..., (1-d)/2.
std::vector<Rational> half_h_eigenvalues(const std::vector<int>& partition);

bool is_very_even(const SimpleType& dual, const std::vector<int>& partition);
bool satisfies_parity(const SimpleType& dual, const std::vector<int>& partition);

std::vector<int> parse_partition(std::string_view s);
std::string partition_label(const std::vector<int>& partition);

// Canonical comparison key for Bala-Carter labels.
std::string normalize_label(std::string_view label);

// The raw bundled dataset (JSON text).
std::string_view exceptional_dataset_json();

}  // namespace satake
