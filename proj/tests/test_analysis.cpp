#include <doctest.h>

#include <set>
#include <sstream>

#include "satake/analysis.hpp"

using namespace satake;

namespace {

using Case = PropertyAVerdict::Case;

MarginalMatrix counterexample() {
    MarginalMatrix m;
    m.set(0, 1, 1);
    m.set(0, -1, 1);
    return m;
}

// max <w, h> over half-spin plus weights, by direct enumeration
int halfspin_top_oracle(const RationalVector& h) {
    const int n = static_cast<int>(h.size());
    Rational best(-1000);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) % 2) continue;
        Rational s;
        for (int i = 0; i < n; ++i) s += (mask >> i & 1u) ? -Rational(1, 2) * h[i] : Rational(1, 2) * h[i];
        best = std::max(best, s);
    }
    return static_cast<int>(best.num());
}

}  // namespace

TEST_CASE("marginals") {
    const auto m = marginals(counterexample());
    CHECK(m.n_u.entries() == std::map<int, std::int64_t>{{-1, 1}, {1, 1}});
    CHECK(m.n_v.entries() == std::map<int, std::int64_t>{{0, 2}});

    MarginalMatrix diag;
    diag.set(3, 3, 2);
    diag.set(-1, -1, 5);
    const auto dm = marginals(diag);
    CHECK(dm.n_u == dm.n_v);
    CHECK(dm.n_u.entries() == std::map<int, std::int64_t>{{-1, 5}, {3, 2}});

    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        const auto a = random_symmetric_matrix(rng);
        CHECK(a.is_row_symmetric());
        const auto mg = marginals(a);
        for (int i = -20; i <= 20; ++i) {
            std::int64_t row = 0, col = 0;
            for (int j = -20; j <= 20; ++j) {
                row += a(i, j);
                col += a(j, i);
            }
            CHECK(mg.n_v(i) == row);
            CHECK(mg.n_u(i) == col);
        }
        for (auto& [ik, x] : a.entries()) {
            CHECK(std::abs(ik.first) <= 20);
            CHECK(std::abs(ik.second) <= 20);
        }
    }
}

TEST_CASE("Property A verdicts") {
    const WeightPattern p({{2, 1}, {0, 3}, {-2, 1}});
    CHECK(property_a_check(p, p).kind == Case::DiagonalMatch);

    // the two-dimensional symmetric example: first discrepancy at i = 1 with n_u > n_v
    const auto m = marginals(counterexample());
    const auto v = property_a_check(m.n_u, m.n_v);
    CHECK(v.kind == Case::TruncationAt);
    CHECK(v.i0 == 1);
    CHECK(v.n_u == 1);
    CHECK(v.n_v == 0);
    CHECK(v.str() == "TruncationAt(1)");
    // with the roles exchanged the same marginals are a violation at 1
    CHECK(property_a_check(m.n_v, m.n_u).str() == "Violation(1)");

    // a non-symmetric matrix can violate
    MarginalMatrix skew;
    skew.set(1, 0, 1);
    CHECK_FALSE(skew.is_row_symmetric());
    const auto sm = marginals(skew);
    CHECK(property_a_check(sm.n_u, sm.n_v).str() == "Violation(1)");

    CHECK_THROWS_AS(property_a_check(WeightPattern::from_row({1}), WeightPattern::from_row({2})), DomainError);

    // F4, B3: central pattern against the extraneous one
    const auto f4 = build_root_datum(SimpleType::parse("F4"));
    const auto adj = weights_of(*f4, RepLabel::adjoint());
    const auto o = find_orbit(SimpleType::parse("F4"), "B3");
    const Rational h(1, 2);
    const auto fv = property_a_check(weight_pattern(adj, central_point(o)),
                                     weight_pattern(adj, point_from_fundamental(f4, {1, 0, h, h})));
    CHECK(fv.str() == "Violation(8)");
    CHECK(fv.n_v == 2);
    CHECK(fv.n_u == 1);
}

TEST_CASE("symmetric matrices never violate Property A") {
    std::mt19937_64 rng(20240601);
    int violations = 0, truncations = 0;
    for (int k = 0; k < 10000; ++k) {
        const auto m = marginals(random_symmetric_matrix(rng));
        const auto v = property_a_check(m.n_u, m.n_v);
        violations += v.kind == Case::Violation;
        truncations += v.kind == Case::TruncationAt;
    }
    CHECK(violations == 0);
    CHECK(truncations > 0);
}

TEST_CASE("matrix files") {
    std::istringstream in("# comment\ni\tk\ta\n0\t1\t1\n0\t-1\t1\n");
    const auto m = MarginalMatrix::parse_tsv(in);
    CHECK(m.entries() == counterexample().entries());
    std::istringstream again(m.to_tsv());
    CHECK(MarginalMatrix::parse_tsv(again).entries() == m.entries());
    std::istringstream bad_header("a\tb\tc\n");
    CHECK_THROWS_AS(MarginalMatrix::parse_tsv(bad_header), DomainError);
    std::istringstream bad_row("i\tk\ta\n0\t1\n");
    CHECK_THROWS_AS(MarginalMatrix::parse_tsv(bad_row), DomainError);
    std::istringstream negative("i\tk\ta\n0\t1\t-2\n");
    CHECK_THROWS_AS(MarginalMatrix::parse_tsv(negative), DomainError);
    std::istringstream junk("i\tk\ta\n0\tx\t1\n");
    CHECK_THROWS_AS(MarginalMatrix::parse_tsv(junk), DomainError);
}

TEST_CASE("elimination table") {
    const auto rows = azs_elimination_table();
    for (auto& r : rows) {
        CAPTURE(r.dual_type.name());
        CAPTURE(r.orbit);
        CHECK(r.matches());
        CHECK(r.verdict.kind == Case::Violation);
    }
    struct Printed {
        const char *type, *orbit;
        int i0, n_v, n_u;
    };
    std::vector<Printed> printed{{"F4", "B3", 8, 2, 1},  {"F4", "A1+~A1", 4, 1, 0}, {"E7", "D5(a1)+A1", 9, 1, 0},
                                 {"E8", "D6", 16, 2, 1}, {"E8", "A6", 13, 1, 0},    {"E8", "A4+A2", 9, 1, 0},
                                 {"E8", "A2+2A1", 5, 1, 0}};
    std::size_t found = 0;
    for (auto& p : printed)
        for (auto& r : rows)
            if (r.dual_type.name() == p.type && r.orbit == p.orbit) {
                CHECK(r.verdict.i0 == p.i0);
                CHECK(r.verdict.n_v == p.n_v);
                CHECK(r.verdict.n_u == p.n_u);
                CHECK(r.rep == "adjoint");
                ++found;
            }
    CHECK(found == printed.size());
    for (auto& r : rows)
        if (r.dual_type.is_classical()) {
            CHECK(r.rep == "standard");
            int top = 0;
            for (auto& [part, e] : *r.epsilon)
                if (e) top = std::max(top, part);
            CHECK(r.verdict.i0 == top);
            CHECK(r.verdict.n_v == r.verdict.n_u + 1);
        }
    // the E8 D6 row also agrees above i0
    const auto e8 = azs_rows_for(SimpleType::parse("E8"));
    const auto d = build_root_datum(SimpleType::parse("E8"));
    const auto adj = weights_of(*d, RepLabel::adjoint());
    for (auto& r : e8)
        if (r.orbit == "D6") {
            const auto u = weight_pattern(adj, central_point(find_orbit(SimpleType::parse("E8"), "D6")));
            const auto v = weight_pattern(adj, r.re_s);
            CHECK(u(18) == 1);
            CHECK(v(18) == 1);
            CHECK(u(17) == v(17));
            for (int i = 19; i <= 40; ++i) CHECK(u(i) == v(i));
        }
}

TEST_CASE("classical extraneous families follow the epsilon rules") {
    // oracle: parts with multiplicity >= 3 of the right parity; Spin needs an even epsilon sum
    auto expected = [](const SimpleType& t, const NilpotentOrbit& o) {
        std::map<int, int> mult;
        for (int x : o.partition) ++mult[x];
        std::vector<int> parts;
        for (auto [p, r] : mult)
            if (r >= 3 && (t.family == Family::C ? p % 2 == 0 : p % 2 == 1)) parts.push_back(p);
        std::set<std::map<int, int>> out;
        for (unsigned m = 1; m < (1u << parts.size()); ++m) {
            if (t.family != Family::C && std::popcount(m) % 2) continue;
            std::map<int, int> eps;
            for (std::size_t k = 0; k < parts.size(); ++k) eps[parts[k]] = (m >> k) & 1u;
            out.insert(eps);
        }
        return out;
    };
    std::vector<SimpleType> duals;
    for (int n = 1; n <= 6; ++n) duals.push_back(make_type(Family::C, n));
    for (int n = 1; n <= 5; ++n) duals.push_back(make_type(Family::B, n));
    for (int n = 3; n <= 6; ++n) duals.push_back(make_type(Family::D, n));
    int total = 0;
    for (auto& t : duals)
        for (auto& o : orbit_catalog(t)) {
            std::set<std::map<int, int>> got;
            for (auto& e : extraneous_points(o)) got.insert(*e.epsilon);
            CHECK(got == expected(t, o));
            total += static_cast<int>(got.size());
        }
    CHECK(total > 0);
}

TEST_CASE("orbit identification") {
    CHECK(orbit_from_pattern(SimpleType::parse("E8"), WeightPattern::parse_row("64,56,28,8")).label == "4A1");
    CHECK(orbit_from_pattern(SimpleType::parse("G2"), WeightPattern::parse_row("14")).label == "1");
    CHECK(orbit_from_pattern(SimpleType::parse("F4"), WeightPattern::parse_row("10,0,7,0,6,0,6,0,1,0,1")).label == "B3");
    CHECK_THROWS_AS(orbit_from_pattern(SimpleType::parse("G2"), WeightPattern::parse_row("13")), DomainError);

    for (auto t : {"G2", "F4", "E6", "E7", "E8"}) {
        std::set<std::string> rows;
        const auto catalog = orbit_catalog(SimpleType::parse(t));
        for (auto& o : catalog) {
            CHECK(orbit_from_pattern(o.dual_type, filtration_row(o)) == o);
            rows.insert(filtration_row(o).row_string());
        }
        CHECK(rows.size() == catalog.size());
    }

    // very even pairs share the adjoint row; the half-spin level separates them
    const SimpleType d4 = SimpleType::parse("D4");
    const auto one = find_orbit(d4, "4,4 I");
    const auto two = find_orbit(d4, "4,4 II");
    CHECK(filtration_row(one) == filtration_row(two));
    CHECK_THROWS_AS(orbit_from_pattern(d4, filtration_row(one)), DomainError);
    CHECK(orbit_from_pattern(d4, filtration_row(one), 4) == one);
    CHECK(orbit_from_pattern(d4, filtration_row(one), 3) == two);
    CHECK_THROWS_AS(orbit_from_pattern(d4, filtration_row(one), 7), DomainError);
}

TEST_CASE("half-spin top levels") {
    CHECK(halfspin_top_levels(find_orbit(SimpleType::parse("D4"), "4,4 I")) == std::pair{4, 3});
    CHECK_THROWS_AS(halfspin_top_levels(find_orbit(SimpleType::parse("D4"), "3,3,1,1")), DomainError);
    for (auto [type, label] : {std::pair{"D4", "2,2,2,2 I"}, std::pair{"D6", "4,4,2,2 I"}, std::pair{"D6", "6,6 I"},
                               std::pair{"D8", "4,4,4,4 I"}, std::pair{"D8", "6,6,2,2 I"}}) {
        CAPTURE(label);
        const auto t = SimpleType::parse(type);
        const auto o = find_orbit(t, label);
        const auto [i1, i2] = halfspin_top_levels(o);
        const auto h1 = classical_neutral_element(t, o.partition, VeryEvenTag::I);
        const auto h2 = classical_neutral_element(t, o.partition, VeryEvenTag::II);
        CHECK(i1 == halfspin_top_oracle(h1));
        CHECK(i2 == halfspin_top_oracle(h2));
        // closed form: a = h_I, i_I = sum(a)/2, i_II = (sum(a) - 2 a_1)/2
        Rational s;
        for (auto& x : h1) s += x;
        CHECK(Rational(i1) == Rational(1, 2) * s);
        CHECK(Rational(i2) == Rational(1, 2) * (s - Rational(2) * h1[0]));
        CHECK(i1 != i2);
    }
}
