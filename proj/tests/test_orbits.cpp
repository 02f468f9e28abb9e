#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "satake/orbits.hpp"
#include "satake/repweights.hpp"

using namespace satake;

namespace {

// Independent oracle: all partitions of n, non-increasing.
void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions(n, n, cur, out);
    return out;
}

// Expected orbit count: parts of the "wrong" parity need even multiplicity;
// very even D partitions count twice.
std::size_t expected_count(char family, int n_defining) {
    std::size_t count = 0;
    for (auto& p : partitions(n_defining)) {
        std::map<int, int> mult;
        for (int x : p) ++mult[x];
        bool ok = true, very_even = family == 'D';
        for (auto [part, r] : mult) {
            if (family == 'C' && part % 2 == 1 && r % 2 == 1) ok = false;
            if ((family == 'B' || family == 'D') && part % 2 == 0 && r % 2 == 1) ok = false;
            if (part % 2 == 1) very_even = false;
        }
        if (ok) count += very_even ? 2 : 1;
    }
    return count;
}

std::vector<std::string> golden_labels(const std::string& type) {
    std::ifstream in(std::string(SATAKE_GOLDEN_DIR) + "/filtration_" + type + ".txt");
    std::vector<std::string> labels;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) labels.push_back(line.substr(0, line.find(" | ")));
    return labels;
}

}  // namespace

TEST_CASE("Sp(6) has the eight expected orbits") {
    const auto orbits = classical_orbits(SimpleType::parse("C3"));
    std::vector<std::string> labels;
    for (auto& o : orbits) labels.push_back(o.label);
    CHECK(labels == std::vector<std::string>{"6", "4,2", "4,1,1", "3,3", "2,2,2", "2,2,1,1", "2,1,1,1,1",
                                             "1,1,1,1,1,1"});
    CHECK(classical_orbits(SimpleType::parse("C3"), 6).size() == 8);
    CHECK_THROWS_AS(classical_orbits(SimpleType::parse("C3"), 7), DomainError);
    CHECK_THROWS_AS(classical_orbits(SimpleType::parse("F4")), DomainError);
}

TEST_CASE("classical orbit counts against a partition oracle") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(classical_orbits(make_type(Family::A, n)).size() == partitions(n + 1).size());
        CHECK(classical_orbits(make_type(Family::B, n)).size() == expected_count('B', 2 * n + 1));
        CHECK(classical_orbits(make_type(Family::C, n)).size() == expected_count('C', 2 * n));
        if (n >= 3) CHECK(classical_orbits(make_type(Family::D, n)).size() == expected_count('D', 2 * n));
    }
}

TEST_CASE("classical orbit invariants") {
    for (auto name : {"A4", "B4", "C4", "D4", "D5", "D6"}) {
        CAPTURE(name);
        const SimpleType t = SimpleType::parse(name);
        const auto d = build_root_datum(datum_type_for_dual(t));
        for (auto& o : classical_orbits(t)) {
            CAPTURE(o.full_label());
            int sum = 0;
            for (int x : o.partition) sum += x;
            CHECK(sum == defining_dimension(t));
            CHECK(satisfies_parity(t, o.partition));
            CHECK(ChamberPoint{d, o.h}.is_dominant());
            for (int m : o.marks) CHECK((m >= 0 && m <= 2));
            CHECK(o.h == neutral_element(o));
        }
        CHECK(classical_orbits(t).back().is_zero());
    }
}

TEST_CASE("neutral elements") {
    const auto o = find_orbit(SimpleType::parse("C3"), "2,2,2");
    CHECK(Rational(1, 2) * o.h == vec({Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
    CHECK(is_zero(find_orbit(SimpleType::parse("E8"), "1").h));
    CHECK(half_h_eigenvalues({3}) == std::vector<Rational>{1, 0, -1});

    // E8 4A1: the stored h/2 is the dominant form of (0,1,-1/2,1/2,-1/2,1/2,0,0)
    const auto e8 = build_root_datum(SimpleType::parse("E8"));
    RationalVector raw{0, 1, Rational(-1, 2), Rational(1, 2), Rational(-1, 2), Rational(1, 2), 0, 0};
    CHECK(dominant_representative(ChamberPoint{e8, raw}).nu == Rational(1, 2) * find_orbit(SimpleType::parse("E8"), "4A1").h);
}

TEST_CASE("very even D orbits come in pairs") {
    const SimpleType d4 = SimpleType::parse("D4");
    const auto one = find_orbit(d4, "4,4 I");
    const auto two = find_orbit(d4, "4,4 II");
    CHECK(one.tag == VeryEvenTag::I);
    CHECK(two.tag == VeryEvenTag::II);
    CHECK(one.h != two.h);
    RationalVector flipped = one.h;
    flipped[0] = -flipped[0];
    CHECK(classical_neutral_element(d4, {4, 4}, VeryEvenTag::II) == flipped);
    CHECK_THROWS_AS(find_orbit(d4, "4,4"), DomainError);
    CHECK(is_very_even(d4, {2, 2, 2, 2}));
    CHECK_FALSE(is_very_even(d4, {3, 3, 1, 1}));
}

TEST_CASE("exceptional catalogs") {
    CHECK(exceptional_catalog(SimpleType::parse("G2")).size() == 5);
    CHECK(exceptional_catalog(SimpleType::parse("F4")).size() == 16);
    CHECK(exceptional_catalog(SimpleType::parse("E6")).size() == 21);
    CHECK(exceptional_catalog(SimpleType::parse("E7")).size() == 45);
    CHECK(exceptional_catalog(SimpleType::parse("E8")).size() == 70);
    CHECK_THROWS_AS(exceptional_catalog(SimpleType::parse("C3")), DomainError);
    for (auto t : {"G2", "F4", "E8"}) {
        std::vector<std::string> labels;
        for (auto& o : exceptional_catalog(SimpleType::parse(t))) labels.push_back(o.full_label());
        CHECK(labels == golden_labels(t));
    }
    std::vector<std::string> g2;
    for (auto& o : exceptional_catalog(SimpleType::parse("G2"))) g2.push_back(o.label);
    CHECK(g2 == std::vector<std::string>{"G2", "G2(a1)", "~A1", "A1", "1"});
    for (auto t : {"G2", "F4", "E6", "E7", "E8"}) {
        const auto d = build_root_datum(SimpleType::parse(t));
        for (auto& o : exceptional_catalog(SimpleType::parse(t))) {
            CAPTURE(o.label);
            CHECK(ChamberPoint{d, o.h}.is_dominant());
            CHECK(d->fundamental_coordinates(o.h) == RationalVector(o.marks.begin(), o.marks.end()));
        }
    }
}

TEST_CASE("centralizers of orbits with extraneous points") {
    struct Row {
        const char *type, *label, *centralizer;
    };
    for (auto r : {Row{"F4", "B3", "A1"}, Row{"F4", "A1+~A1", "2A1"}, Row{"E7", "D5(a1)+A1", "A1"},
                   Row{"E8", "D6", "B2"}, Row{"E8", "A6", "2A1"}, Row{"E8", "A4+A2", "2A1"},
                   Row{"E8", "A2+2A1", "B3+A1"}}) {
        CAPTURE(r.label);
        const auto o = find_orbit(SimpleType::parse(r.type), r.label);
        CHECK(o.centralizer_string() == r.centralizer);
        CHECK(o.centralizer_verified);
    }
    CHECK(find_orbit(SimpleType::parse("C3"), "2,2,2").centralizer_string() == "O(3)");
    CHECK(find_orbit(SimpleType::parse("C3"), "4,1,1").centralizer_string() == "O(1)xSp(2)");
    CHECK(find_orbit(SimpleType::parse("B3"), "3,3,1").centralizer_string() == "O(2)xO(1)");
}

TEST_CASE("orbit dimensions agree with the adjoint filtration") {
    for (auto t : {"G2", "F4", "E6", "E7", "E8", "C4", "B4", "D5", "A5"}) {
        const SimpleType st = SimpleType::parse(t);
        const int dim_g = lie_algebra_dimension(st);
        for (auto& o : orbit_catalog(st)) {
            CAPTURE(o.full_label());
            const auto row = filtration_row(o);
            CHECK(o.dimension == dim_g - row(0) - row(1));
        }
    }
}

TEST_CASE("label lookup") {
    const SimpleType e8 = SimpleType::parse("E8");
    CHECK(find_orbit(e8, "A42A1").label == "A4+2A1");
    CHECK(find_orbit(e8, "A_4+2A_1").label == "A4+2A1");
    CHECK(find_orbit(e8, "E8(a7)").label == "E8(a7)");
    CHECK(find_orbit(SimpleType::parse("F4"), "A1+\\widetilde A1").label == "A1+~A1");
    CHECK(find_orbit(SimpleType::parse("E7"), "(A5)''").label == "(A5)''");
    CHECK(find_orbit(SimpleType::parse("C3"), "2^3").label == "2,2,2");
    CHECK(find_orbit(SimpleType::parse("C3"), "(2,2,2)").label == "2,2,2");
    CHECK_THROWS_AS(find_orbit(e8, "A9"), DomainError);
    CHECK_THROWS_AS(find_orbit(SimpleType::parse("C3"), "3,2,1"), DomainError);  // parity
    CHECK_THROWS_AS(find_orbit(SimpleType::parse("C3"), "2,2"), DomainError);    // wrong size
}
