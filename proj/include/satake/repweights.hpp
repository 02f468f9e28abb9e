#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satake/orbits.hpp"
#include "satake/rootdata.hpp"

namespace satake {

enum class RepKind {
    Adjoint,
    StandardClassical,
    Spin,
    HalfSpinPlus,
    HalfSpinMinus,
    MinusculeOrbit,
    HighestWeightPairingOnly,
};

// A representation of the dual group.  Its weights are elements of the space
// spanned by the coroots of the datum (they pair with points nu by the dot
// product).  MinusculeOrbit and HighestWeightPairingOnly carry lambda.
struct RepLabel {
    RepKind kind = RepKind::Adjoint;
    std::optional<RationalVector> highest_weight;

    static RepLabel adjoint() { return {RepKind::Adjoint, std::nullopt}; }
    static RepLabel standard() { return {RepKind::StandardClassical, std::nullopt}; }
    static RepLabel spin() { return {RepKind::Spin, std::nullopt}; }
    static RepLabel half_spin_plus() { return {RepKind::HalfSpinPlus, std::nullopt}; }
    static RepLabel half_spin_minus() { return {RepKind::HalfSpinMinus, std::nullopt}; }
    static RepLabel minuscule(RationalVector lambda) { return {RepKind::MinusculeOrbit, std::move(lambda)}; }
    static RepLabel pairing_only(RationalVector lambda) {
        return {RepKind::HighestWeightPairingOnly, std::move(lambda)};
    }

    std::string name() const;
};

// "adjoint", "standard", "spin", "halfspin+", "halfspin-"
RepLabel parse_rep_label(const std::string& s);

struct WeightedRep {
    RepLabel rep;
    std::vector<std::pair<RationalVector, std::int64_t>> weights;  // distinct weights, multiplicity

    std::int64_t dimension() const;
};

// Multiplicities n(i) of Frobenius weight i.
class WeightPattern {
public:
    WeightPattern() = default;
    explicit WeightPattern(std::map<int, std::int64_t> entries);

    std::int64_t operator()(int i) const;
    void add(int i, std::int64_t m);
    const std::map<int, std::int64_t>& entries() const { return entries_; }

    std::int64_t total() const;
    bool empty() const { return entries_.empty(); }
    int max_index() const;  // requires non-empty
    int min_index() const;
    bool is_symmetric() const;  // n(i) = n(-i)

    // Row n(0), n(1), ..., n(max) as the tables print it.
    std::vector<std::int64_t> nonnegative_row() const;
    std::string row_string() const;  // "4,0,4,0,1"
    static WeightPattern from_row(const std::vector<std::int64_t>& row);
    static WeightPattern parse_row(const std::string& s);

    friend bool operator==(const WeightPattern&, const WeightPattern&) = default;

private:
    std::map<int, std::int64_t> entries_;  // zero entries are never stored
};

// The weight pattern is undefined when some 2<chi, nu> is not an integer; the
// offending weights are listed.
struct NonIntegralWeightError : DomainError {
    NonIntegralWeightError(std::string msg, std::vector<RationalVector> weights)
        : DomainError(std::move(msg)), offending(std::move(weights)) {}
    std::vector<RationalVector> offending;
};

// `d` is the root datum of G; the representation is of the dual group, whose
// roots are the coroots of d.
WeightedRep weights_of(const RootDatum& d, const RepLabel& r);

WeightPattern weight_pattern(const WeightedRep& v, const ChamberPoint& nu);

// Adjoint weight pattern of 1/2 h restricted to i >= 0.
WeightPattern filtration_row(const NilpotentOrbit& o);

bool is_half_integral(const RootDatum& d, const ChamberPoint& nu, const RepLabel& r);

// Adjoint half-integrality: every <alpha^vee, nu> in 1/2 Z.
bool is_adjoint_half_integral(const ChamberPoint& nu);

// Weyl orbit of a dominant coweight lambda (BFS by simple reflections).
std::vector<RationalVector> coweight_orbit(const RootDatum& d, const RationalVector& lambda);

// lambda dominant with |<lambda, alpha>| <= 1 for every root alpha of G.
bool is_minuscule(const RootDatum& d, const RationalVector& lambda);

}  // namespace satake
