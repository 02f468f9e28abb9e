#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "satake/orbits.hpp"
#include "satake/repweights.hpp"

using namespace satake;

namespace {

RootDatumPtr datum(const char* s) { return build_root_datum(SimpleType::parse(s)); }

std::vector<RationalVector> expand(const WeightedRep& v) {
    std::vector<RationalVector> out;
    for (auto& [w, m] : v.weights)
        for (std::int64_t k = 0; k < m; ++k) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("weights of the named representations") {
    const auto g2 = weights_of(*datum("G2"), RepLabel::adjoint());
    CHECK(g2.dimension() == 14);
    int zero = 0, nonzero = 0;
    for (auto& [w, m] : g2.weights) (is_zero(w) ? zero : nonzero) += static_cast<int>(m);
    CHECK(zero == 2);
    CHECK(nonzero == 12);

    const auto hs = weights_of(*datum("D4"), RepLabel::half_spin_plus());
    CHECK(hs.dimension() == 8);
    for (auto& [w, m] : hs.weights) {
        const auto negatives = std::count_if(w.begin(), w.end(), [](const Rational& x) { return x < Rational(0); });
        CHECK(negatives % 2 == 0);
        for (auto& x : w) CHECK((x == Rational(1, 2) || x == Rational(-1, 2)));
    }
    CHECK(weights_of(*datum("D4"), RepLabel::half_spin_minus()).dimension() == 8);

    // the standard representation of SO(7), dual to Sp(6): {+-e_i, 0}
    const auto so7 = weights_of(*build_root_datum(datum_type_for_dual(SimpleType::parse("B3"))), RepLabel::standard());
    CHECK(so7.dimension() == 7);
    CHECK(weights_of(*datum("A4"), RepLabel::standard()).dimension() == 5);
    CHECK(weights_of(*datum("C3"), RepLabel::spin()).dimension() == 8);

    CHECK_THROWS_AS(weights_of(*datum("E8"), RepLabel::standard()), DomainError);
    CHECK_THROWS_AS(weights_of(*datum("B3"), RepLabel::spin()), DomainError);
    CHECK_THROWS_AS(weights_of(*datum("C3"), RepLabel::half_spin_plus()), DomainError);
    CHECK_THROWS_AS(weights_of(*datum("E7"), RepLabel::minuscule(datum("E7")->fundamental_coweights[0])), DomainError);
    CHECK(weights_of(*datum("E7"), RepLabel::minuscule(datum("E7")->fundamental_coweights[6])).dimension() == 56);
    CHECK(weights_of(*datum("E6"), RepLabel::minuscule(datum("E6")->fundamental_coweights[0])).dimension() == 27);
    CHECK(parse_rep_label("halfspin+").kind == RepKind::HalfSpinPlus);
    CHECK_THROWS_AS(parse_rep_label("tensor"), DomainError);
}

TEST_CASE("weight multisets are Weyl invariant") {
    for (auto name : {"A3", "C3", "D4", "G2", "F4"}) {
        const auto d = datum(name);
        std::vector<RepLabel> reps{RepLabel::adjoint()};
        if (d->type.is_classical()) reps.push_back(RepLabel::standard());
        if (d->type.family == Family::D) reps.push_back(RepLabel::half_spin_plus());
        for (auto& r : reps) {
            const auto v = weights_of(*d, r);
            const auto base = expand(v);
            for (int i = 0; i < d->rank; ++i) {
                std::vector<RationalVector> moved;
                for (auto& w : base) moved.push_back(d->reflect_coweight(i, w));
                std::sort(moved.begin(), moved.end());
                CHECK(moved == base);
            }
        }
    }
}

TEST_CASE("weight patterns") {
    const SimpleType e7 = SimpleType::parse("E7");
    const auto d7 = datum("E7");
    const auto p = weight_pattern(weights_of(*d7, RepLabel::adjoint()), ChamberPoint{d7, Rational(1, 2) * find_orbit(e7, "D5(a1)+A1").h});
    CHECK(p.max_index() == 10);
    CHECK(p(10) == 1);
    CHECK(p(9) == 0);

    const auto zero = weight_pattern(weights_of(*d7, RepLabel::adjoint()), ChamberPoint{d7, RationalVector(8)});
    CHECK(zero.entries() == std::map<int, std::int64_t>{{0, 133}});

    const auto f4 = datum("F4");
    const auto adj = weights_of(*f4, RepLabel::adjoint());
    const Rational h(1, 2);
    // F4/B3 elimination point
    const auto b3 = weight_pattern(adj, point_from_fundamental(f4, {1, 0, h, h}));
    CHECK(b3.max_index() == 10);
    CHECK(b3(10) == 1);
    CHECK(b3(9) == 0);
    CHECK(b3(8) == 2);
    // the expression with an extra w2 overshoots the central point's top weight
    CHECK(weight_pattern(adj, point_from_fundamental(f4, {1, 1, h, h})).max_index() == 16);

    // Half-integrality failures report the offending weights.
    const auto c3 = datum("C3");
    try {
        weight_pattern(weights_of(*c3, RepLabel::spin()), point_from_fundamental(c3, {0, 0, h}));
        FAIL("expected a non-integral weight");
    } catch (const NonIntegralWeightError& e) {
        CHECK(e.offending.size() == 8);
    }
}

TEST_CASE("pattern symmetry and dimension") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coord(0, 4);
    for (auto name : {"B3", "C3", "D4", "D5", "G2", "F4", "E7", "E8"}) {
        CAPTURE(name);
        const auto d = datum(name);
        std::vector<RepLabel> reps{RepLabel::adjoint()};
        if (d->type.family == Family::B || d->type.family == Family::C || d->type.family == Family::D)
            reps.push_back(RepLabel::standard());
        if (d->type.family == Family::C) reps.push_back(RepLabel::spin());
        if (d->type.family == Family::D && d->rank % 2 == 0) reps.push_back(RepLabel::half_spin_plus());
        for (int k = 0; k < 10; ++k) {
            RationalVector c(d->rank);
            for (auto& x : c) x = Rational(coord(rng), 2);
            const auto p = point_from_fundamental(d, c);
            for (auto& r : reps) {
                const auto v = weights_of(*d, r);
                if (!is_half_integral(*d, p, r)) continue;
                const auto w = weight_pattern(v, p);
                CHECK(w.total() == v.dimension());
                CHECK(w.is_symmetric());
            }
        }
    }
}

TEST_CASE("filtration rows") {
    auto row = [](const char* t, const char* label) {
        return filtration_row(find_orbit(SimpleType::parse(t), label)).row_string();
    };
    CHECK(row("G2", "G2(a1)") == "4,0,4,0,1");
    CHECK(row("F4", "A1+~A1") == "12,12,6,2");
    CHECK(row("E8", "1") == "248");
    CHECK(row("E8", "4A1") == "64,56,28,8");

    // every row of the checked-in tables
    for (auto t : {"G2", "F4", "E8"}) {
        std::ifstream in(std::string(SATAKE_GOLDEN_DIR) + "/filtration_" + t + ".txt");
        int n = 0;
        for (std::string line; std::getline(in, line);) {
            if (line.empty()) continue;
            const auto a = line.find(" | "), b = line.rfind(" | ");
            const auto o = find_orbit(SimpleType::parse(t), line.substr(0, a));
            const auto r = filtration_row(o);
            CHECK(std::to_string(r.max_index()) == line.substr(a + 3, b - a - 3));
            CHECK(r.row_string() == line.substr(b + 3));
            ++n;
        }
        CHECK(n == static_cast<int>(exceptional_catalog(SimpleType::parse(t)).size()));
    }
}

TEST_CASE("sum identity n(0) + 2 sum n(i) = dim g for every catalog orbit") {
    for (auto t : {"G2", "F4", "E6", "E7", "E8", "A4", "B4", "C4", "D4", "D5"}) {
        const SimpleType st = SimpleType::parse(t);
        for (auto& o : orbit_catalog(st)) {
            const auto r = filtration_row(o);
            std::int64_t s = r(0);
            for (auto [i, m] : r.entries())
                if (i > 0) s += 2 * m;
            CHECK(s == lie_algebra_dimension(st));
            // full pattern at 1/2 h is symmetric
            const auto d = build_root_datum(o.datum_type);
            CHECK(weight_pattern(weights_of(*d, RepLabel::adjoint()), ChamberPoint{d, Rational(1, 2) * o.h}).is_symmetric());
        }
    }
}

TEST_CASE("half-integrality") {
    const Rational h(1, 2);
    const auto e7 = datum("E7");
    const auto half_w7 = point_from_fundamental(e7, {0, 0, 0, 0, 0, 0, h});
    CHECK(is_adjoint_half_integral(half_w7));
    CHECK_FALSE(is_half_integral(*e7, half_w7, RepLabel::minuscule(e7->fundamental_coweights[6])));
    CHECK_FALSE(is_half_integral(*e7, half_w7, RepLabel::pairing_only(e7->fundamental_coweights[6])));
    CHECK(is_half_integral(*e7, half_w7, RepLabel::adjoint()));
    CHECK(is_half_integral(*e7, ChamberPoint{e7, RationalVector(8)}, RepLabel::minuscule(e7->fundamental_coweights[6])));

    for (int n = 2; n <= 6; ++n) {
        const auto c = build_root_datum(make_type(Family::C, n));
        RationalVector coords(n);
        coords[n - 1] = h;
        const auto p = point_from_fundamental(c, coords);
        CHECK_FALSE(is_half_integral(*c, p, RepLabel::spin()));
        CHECK(pairing(c->fundamental_coweights[0], p.nu) == Rational(1, 4));
    }
    CHECK_THROWS_AS(is_half_integral(*e7, point_from_fundamental(e7, {Rational(1, 4), 0, 0, 0, 0, 0, 0}),
                                     RepLabel::pairing_only(e7->fundamental_coweights[6])),
                    DomainError);
}

TEST_CASE("pairing shortcut agrees with full weight enumeration on minuscule representations") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coord(0, 3);
    int checked = 0;
    for (auto name : {"A4", "A5", "B3", "C4", "D4", "D5", "E6", "E7"}) {
        const auto d = datum(name);
        std::vector<RationalVector> minuscule;
        for (auto& w : d->fundamental_coweights)
            if (is_minuscule(*d, w)) minuscule.push_back(w);
        REQUIRE(!minuscule.empty());
        for (int k = 0; k < 125; ++k) {
            RationalVector c(d->rank);
            for (auto& x : c) x = Rational(coord(rng), 2);
            const auto p = point_from_fundamental(d, c);
            REQUIRE(is_adjoint_half_integral(p));
            for (auto& lambda : minuscule) {
                CHECK(is_half_integral(*d, p, RepLabel::minuscule(lambda)) ==
                      is_half_integral(*d, p, RepLabel::pairing_only(lambda)));
            }
            ++checked;
        }
    }
    CHECK(checked == 1000);
}

TEST_CASE("row parsing") {
    CHECK(WeightPattern::parse_row("4,0,4,0,1").row_string() == "4,0,4,0,1");
    CHECK(WeightPattern::parse_row("14").total() == 14);
    CHECK_THROWS_AS(WeightPattern::parse_row("4,x"), DomainError);
    CHECK_THROWS_AS(WeightPattern::parse_row("4,-1"), DomainError);
    CHECK_THROWS_AS(WeightPattern::parse_row(""), DomainError);
}
