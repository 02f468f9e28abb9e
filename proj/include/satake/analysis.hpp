#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "satake/orbits.hpp"
#include "satake/repweights.hpp"
#include "satake/unitarity.hpp"

namespace satake {

// Finite matrix a(i, k) of nonnegative multiplicities.  Row i collects the
// weight-i part at the place v; column k the weight-k part at u.
class MarginalMatrix {
public:
    void set(int i, int k, std::int64_t a);
    std::int64_t operator()(int i, int k) const;
    const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }

    // a(i, i+j) = a(i, i-j) for all i, j
    bool is_row_symmetric() const;

    // TSV with header "i\tk\ta"; blank lines and '#' comments are skipped.
    static MarginalMatrix parse_tsv(std::istream& in);
    std::string to_tsv() const;

private:
    std::map<std::pair<int, int>, std::int64_t> entries_;
};

struct Marginals {
    WeightPattern n_v;  // row sums
    WeightPattern n_u;  // column sums
};

Marginals marginals(const MarginalMatrix& m);

struct PropertyAVerdict {
    enum class Case { DiagonalMatch, TruncationAt, Violation };
    Case kind = Case::DiagonalMatch;
    int i0 = 0;            // meaningful unless DiagonalMatch
    std::int64_t n_u = 0;  // n_u(i0)
    std::int64_t n_v = 0;  // n_v(i0)

    std::string str() const;  // "DiagonalMatch", "TruncationAt(3)", "Violation(8)"
};

// Scan i downward from the top of the joint support and classify the first
// discrepancy.  Throws DomainError when the totals differ.
PropertyAVerdict property_a_check(const WeightPattern& n_u, const WeightPattern& n_v);

// Random matrix satisfying a(i, i+j) = a(i, i-j), support in [-bound, bound]^2.
MarginalMatrix random_symmetric_matrix(std::mt19937_64& rng, int bound = 20, int max_terms = 12);

struct AzsRow {
    SimpleType dual_type;
    std::string orbit;                     // full label
    std::optional<std::map<int, int>> epsilon;
    std::string rep;                       // "standard" or "adjoint"
    ChamberPoint re_s;
    PropertyAVerdict verdict;              // central pattern (u) against extraneous pattern (v)
    // Sp/Spin: i0 predicted as the largest part with epsilon = 1 and n_v = n_u + 1.
    // Exceptional: the printed (i0, n_v(i0), n_u(i0)).
    int expected_i0 = 0;
    std::int64_t expected_n_v = 0;
    std::int64_t expected_n_u = 0;

    bool matches() const;
};

// Every extraneous point for Sp(2n), n <= 6, Spin(N), N <= 12, and the
// exceptional groups, with the discriminating representation recomputed.
std::vector<AzsRow> azs_elimination_table();
std::vector<AzsRow> azs_rows_for(const SimpleType& dual);

// The orbit whose adjoint filtration row equals `row`.  For very even D
// partitions the two forms share a row; `halfspin_top` (the top level of the
// half-spin plus module, see halfspin_top_levels) selects one.  Throws
// DomainError on no match or an unresolved tie.
NilpotentOrbit orbit_from_pattern(const SimpleType& dual, const WeightPattern& row,
                                  std::optional<int> halfspin_top = std::nullopt);

// Top weights of the half-spin plus module at 1/2 h for the I and II forms of
// a very even D orbit.
std::pair<int, int> halfspin_top_levels(const NilpotentOrbit& o);

}  // namespace satake
