#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satake/errors.hpp"
#include "satake/rational.hpp"

namespace satake {

enum class Family { A, B, C, D, E, F, G };
enum class Isogeny { Adjoint, SimplyConnected, Intermediate };

char family_letter(Family f);

struct SimpleType {
    Family family = Family::A;
    int rank = 1;
    Isogeny isogeny = Isogeny::Adjoint;  // informational only

    std::string name() const;  // "C3", "E8", ...
    bool is_classical() const { return family <= Family::D; }
    bool is_exceptional() const { return !is_classical(); }

    // Accepts "C3", "C 3", "c3".  Throws DomainError on an invalid family/rank.
    static SimpleType parse(std::string_view s);

    friend bool operator==(const SimpleType& a, const SimpleType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
};

bool is_valid_type(Family f, int rank);
SimpleType make_type(Family f, int rank);  // validates

// dim g from the closed formulas (A_n: n(n+2), B_n/C_n: n(2n+1), ...)
int lie_algebra_dimension(const SimpleType& t);

struct PositiveCoroot {
    RationalVector coords;
    std::vector<int> coefficients;  // in the basis of simple coroots
    int level = 0;                  // = sum of coefficients = <coroot, rho>
};

// A based root datum of the group G, written in the ambient coordinates used
// throughout: coroots of G (= roots of the dual group) and weights of G live in
// the same Euclidean space and pair by the dot product.
struct RootDatum {
    SimpleType type;
    int rank = 0;
    int ambient_dim = 0;
    std::vector<RationalVector> simple_roots;
    std::vector<RationalVector> simple_coroots;
    std::vector<RationalVector> fundamental_weights;
    std::vector<RationalVector> fundamental_coweights;
    std::vector<PositiveCoroot> positive_coroots;  // sorted by level, then coefficients
    RationalVector rho;
    int coxeter_number = 0;
    std::vector<int> degrees;
    std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i^vee, alpha_j>

    const PositiveCoroot& highest_coroot() const { return positive_coroots.back(); }
    int dim_g() const { return rank + 2 * static_cast<int>(positive_coroots.size()); }

    // index into positive_coroots, if x is one
    std::optional<std::size_t> find_positive_coroot(const RationalVector& x) const;

    // (<alpha_i^vee, nu>)_i
    RationalVector fundamental_coordinates(const RationalVector& nu) const;
    // sum_i c_i omega_i
    RationalVector from_fundamental_coordinates(const RationalVector& c) const;
    // the element of span(coroots) with coordinates sum_i c_i alpha_i^vee
    RationalVector coroot_combination(const std::vector<int>& c) const;

    RationalVector reflect_weight(std::size_t i, const RationalVector& nu) const;
    RationalVector reflect_coweight(std::size_t i, const RationalVector& x) const;
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

RootDatumPtr build_root_datum(const SimpleType& t);

Rational pairing(const RationalVector& x, const RationalVector& y);

// <a, rho>; throws DomainError when a is not a positive coroot of d.
int coroot_level(const RootDatum& d, const RationalVector& a);

// A point nu of X (x) R for the datum.
struct ChamberPoint {
    RootDatumPtr datum;
    RationalVector nu;

    RationalVector fundamental_coordinates() const { return datum->fundamental_coordinates(nu); }
    bool is_dominant() const;
    bool is_zero() const { return satake::is_zero(nu); }

    friend bool operator==(const ChamberPoint& a, const ChamberPoint& b) {
        return a.datum->type == b.datum->type && a.nu == b.nu;
    }
};

// Validates the dimension and that nu lies in the span of the weights (relevant
// for type A and E6/E7, whose ambient space is larger than the rank).
ChamberPoint make_point(const RootDatumPtr& d, RationalVector nu);
ChamberPoint point_from_fundamental(const RootDatumPtr& d, const RationalVector& c);

ChamberPoint dominant_representative(const ChamberPoint& p);

// w0(nu) = -nu.  Requires a dominant point.
bool is_hermitian(const ChamberPoint& p);

// "c1*w1 + c2*w2", "0" for the origin
std::string format_fundamental(const RationalVector& c);

// Table of quasi-split outer forms: (type of G, order of tau) -> split type G(tau).
SimpleType fold(const SimpleType& t, int tau_order);

struct FoldingRow {
    SimpleType source;
    int tau_order;
    SimpleType target;
};
// One instance of each row of the table for a given n (n >= 2 where relevant).
std::vector<FoldingRow> folding_rows(int n);

}  // namespace satake
