#include "satake/analysis.hpp"

#include <algorithm>
#include <istream>
#include <mutex>
#include <set>
#include <sstream>

namespace satake {

// ---- marginal matrices ---------------------------------------------------------

void MarginalMatrix::set(int i, int k, std::int64_t a) {
    if (a < 0) throw DomainError("negative matrix entry");
    if (a == 0)
        entries_.erase({i, k});
    else
        entries_[{i, k}] = a;
}

std::int64_t MarginalMatrix::operator()(int i, int k) const {
    auto it = entries_.find({i, k});
    return it == entries_.end() ? 0 : it->second;
}

bool MarginalMatrix::is_row_symmetric() const {
    for (auto& [ik, a] : entries_) {
        auto [i, k] = ik;
        if ((*this)(i, 2 * i - k) != a) return false;
    }
    return true;
}

MarginalMatrix MarginalMatrix::parse_tsv(std::istream& in) {
    MarginalMatrix m;
    std::string line;
    bool header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, '\t');) cols.push_back(c);
        if (!header) {
            if (cols != std::vector<std::string>{"i", "k", "a"})
                throw DomainError("matrix file must start with the header i<TAB>k<TAB>a");
            header = true;
            continue;
        }
        if (cols.size() != 3) throw DomainError("line " + std::to_string(lineno) + ": expected 3 columns");
        long long v[3];
        for (int c = 0; c < 3; ++c) {
            std::size_t used = 0;
            try {
                v[c] = std::stoll(cols[c], &used);
            } catch (const std::logic_error&) {
                used = 0;
            }
            if (used == 0 || used != cols[c].size())
                throw DomainError("line " + std::to_string(lineno) + ": malformed integer '" + cols[c] + "'");
        }
        if (v[2] < 0) throw DomainError("line " + std::to_string(lineno) + ": negative entry");
        m.set(static_cast<int>(v[0]), static_cast<int>(v[1]), m(static_cast<int>(v[0]), static_cast<int>(v[1])) + v[2]);
    }
    if (!header) throw DomainError("empty matrix file");
    return m;
}

std::string MarginalMatrix::to_tsv() const {
    std::string s = "i\tk\ta\n";
    for (auto& [ik, a] : entries_)
        s += std::to_string(ik.first) + "\t" + std::to_string(ik.second) + "\t" + std::to_string(a) + "\n";
    return s;
}

Marginals marginals(const MarginalMatrix& m) {
    Marginals r;
    for (auto& [ik, a] : m.entries()) {
        r.n_v.add(ik.first, a);
        r.n_u.add(ik.second, a);
    }
    return r;
}

std::string PropertyAVerdict::str() const {
    switch (kind) {
        case Case::DiagonalMatch: return "DiagonalMatch";
        case Case::TruncationAt: return "TruncationAt(" + std::to_string(i0) + ")";
        case Case::Violation: return "Violation(" + std::to_string(i0) + ")";
    }
    return "?";
}

PropertyAVerdict property_a_check(const WeightPattern& n_u, const WeightPattern& n_v) {
    if (n_u.total() != n_v.total())
        throw DomainError("weight patterns have different totals (" + std::to_string(n_u.total()) + " vs " +
                          std::to_string(n_v.total()) + ")");
    std::set<int, std::greater<>> support;
    for (auto& [i, m] : n_u.entries()) support.insert(i);
    for (auto& [i, m] : n_v.entries()) support.insert(i);
    PropertyAVerdict v;
    for (int i : support) {
        if (n_u(i) == n_v(i)) continue;
        v.kind = n_u(i) > n_v(i) ? PropertyAVerdict::Case::TruncationAt : PropertyAVerdict::Case::Violation;
        v.i0 = i;
        v.n_u = n_u(i);
        v.n_v = n_v(i);
        break;
    }
    return v;
}

MarginalMatrix random_symmetric_matrix(std::mt19937_64& rng, int bound, int max_terms) {
    std::uniform_int_distribution<int> terms(1, max_terms), row(-bound, bound), mult(1, 3);
    MarginalMatrix m;
    for (int t = terms(rng); t > 0; --t) {
        const int i = row(rng);
        const int j = std::uniform_int_distribution<int>(0, bound - std::abs(i))(rng);
        const int a = mult(rng);
        m.set(i, i + j, m(i, i + j) + a);
        if (j != 0) m.set(i, i - j, m(i, i - j) + a);
    }
    return m;
}

// ---- elimination of extraneous points -------------------------------------------

namespace {

struct PrintedAzs {
    const char* type;
    const char* label;
    int i0, n_v, n_u;
};

const PrintedAzs kPrinted[] = {
    {"F4", "B3", 8, 2, 1},   {"F4", "A1+~A1", 4, 1, 0}, {"E7", "D5(a1)+A1", 9, 1, 0}, {"E8", "D6", 16, 2, 1},
    {"E8", "A6", 13, 1, 0},  {"E8", "A4+A2", 9, 1, 0},  {"E8", "A2+2A1", 5, 1, 0},
};

}  // namespace

bool AzsRow::matches() const {
    return verdict.kind == PropertyAVerdict::Case::Violation && verdict.i0 == expected_i0 &&
           verdict.n_v == expected_n_v && verdict.n_u == expected_n_u;
}

std::vector<AzsRow> azs_rows_for(const SimpleType& dual) {
    std::vector<AzsRow> rows;
    if (dual.family == Family::A) return rows;
    const auto d = build_root_datum(datum_type_for_dual(dual));
    const RepLabel rep = dual.is_classical() ? RepLabel::standard() : RepLabel::adjoint();
    const WeightedRep weights = weights_of(*d, rep);
    for (auto& o : orbit_catalog(dual)) {
        auto entries = extraneous_points(o);
        if (entries.empty()) continue;
        const WeightPattern central = weight_pattern(weights, central_point(o));
        for (auto& e : entries) {
            AzsRow r{dual, o.full_label(), e.epsilon, rep.name(), e.re_s, {}, 0, 0, 0};
            r.verdict = property_a_check(central, weight_pattern(weights, e.re_s));
            if (e.epsilon) {
                for (auto& [part, eps] : *e.epsilon)
                    if (eps) r.expected_i0 = std::max(r.expected_i0, part);
                r.expected_n_u = central(r.expected_i0);
                r.expected_n_v = r.expected_n_u + 1;
            } else {
                bool found = false;
                for (auto& p : kPrinted) {
                    if (dual.name() != p.type || normalize_label(o.label) != normalize_label(p.label)) continue;
                    r.expected_i0 = p.i0;
                    r.expected_n_v = p.n_v;
                    r.expected_n_u = p.n_u;
                    found = true;
                }
                if (!found) throw std::logic_error("no recorded elimination data for " + dual.name() + " " + o.label);
            }
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::vector<AzsRow> azs_elimination_table() {
    std::vector<SimpleType> duals;
    for (int n = 1; n <= 6; ++n) duals.push_back(make_type(Family::C, n));  // Sp(2n)
    for (int n = 1; n <= 5; ++n) duals.push_back(make_type(Family::B, n));  // Spin(2n+1)
    for (int n = 3; n <= 6; ++n) duals.push_back(make_type(Family::D, n));  // Spin(2n)
    for (auto s : {"F4", "E7", "E8"}) duals.push_back(SimpleType::parse(s));
    std::vector<AzsRow> rows;
    for (auto& t : duals) {
        auto part = azs_rows_for(t);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

// ---- orbit identification ---------------------------------------------------------

std::pair<int, int> halfspin_top_levels(const NilpotentOrbit& o) {
    if (o.dual_type.family != Family::D || !is_very_even(o.dual_type, o.partition))
        throw DomainError("half-spin discriminator needs a very even D orbit");
    const auto d = build_root_datum(o.datum_type);
    const WeightedRep spin = weights_of(*d, RepLabel::half_spin_plus());
    auto top = [&](VeryEvenTag tag) {
        RationalVector h = classical_neutral_element(o.dual_type, o.partition, tag);
        return weight_pattern(spin, ChamberPoint{d, Rational(1, 2) * h}).max_index();
    };
    return {top(VeryEvenTag::I), top(VeryEvenTag::II)};
}

namespace {

// Filtration rows of a whole catalog, computed once per type.
const std::vector<std::pair<NilpotentOrbit, WeightPattern>>& catalog_rows(const SimpleType& dual) {
    static std::mutex mu;
    static std::map<std::string, std::vector<std::pair<NilpotentOrbit, WeightPattern>>> cache;
    std::lock_guard lock(mu);
    auto [it, fresh] = cache.try_emplace(dual.name());
    if (fresh)
        for (auto& o : orbit_catalog(dual)) it->second.emplace_back(o, filtration_row(o));
    return it->second;
}

}  // namespace

NilpotentOrbit orbit_from_pattern(const SimpleType& dual, const WeightPattern& row, std::optional<int> halfspin_top) {
    std::vector<NilpotentOrbit> hits;
    for (auto& [o, r] : catalog_rows(dual))
        if (r.entries() == row.entries()) hits.push_back(o);
    if (hits.empty()) throw DomainError("no " + dual.name() + " orbit has filtration row " + row.row_string());
    if (hits.size() > 1 && halfspin_top) {
        std::vector<NilpotentOrbit> kept;
        for (auto& o : hits) {
            if (!o.tag) continue;
            auto [i_one, i_two] = halfspin_top_levels(o);
            if (*halfspin_top == (*o.tag == VeryEvenTag::I ? i_one : i_two)) kept.push_back(o);
        }
        hits = std::move(kept);
        if (hits.empty()) throw DomainError("half-spin level " + std::to_string(*halfspin_top) + " matches no candidate");
    }
    if (hits.size() > 1) {
        if (dual.is_exceptional()) throw std::logic_error("ambiguous filtration row in " + dual.name());
        std::string names;
        for (auto& o : hits) names += (names.empty() ? "" : ", ") + o.full_label();
        throw DomainError("filtration row " + row.row_string() + " is shared by " + names);
    }
    return hits.front();
}

}  // namespace satake
