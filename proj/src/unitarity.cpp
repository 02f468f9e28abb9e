#include "satake/unitarity.hpp"

#include <algorithm>
#include <functional>

#include "lp.hpp"

namespace satake {

namespace {

const Rational kHalf(1, 2);
const Rational kOne(1);

RationalVector half_vec(std::initializer_list<int> twice) {
    RationalVector v;
    for (int x : twice) v.emplace_back(x, 2);
    return v;
}

RationalVector eps_sum(int n, std::initializer_list<std::pair<int, int>> terms) {
    RationalVector v(n);
    for (auto [i, c] : terms) v[i - 1] += c;
    return v;
}

// Exceptional extraneous points, as fundamental-weight coordinates of Re(s).
// F4/B3 is w1 + 1/2 w3 + 1/2 w4; the expression w1 + w2 + 1/2 w3 + 1/2 w4
// has adjoint top weight 16 > 10 and cannot lie in this complementary series;
// the corrected point is the only half-integral one with the elimination
// pattern n(10) = 1, n(9) = 0, n(8) = 2.
struct ExceptionalExtraneous {
    const char* type;
    const char* label;
    RationalVector coords;
};

const std::vector<ExceptionalExtraneous>& exceptional_extraneous_table() {
    const Rational h = kHalf;
    static const std::vector<ExceptionalExtraneous> table = {
        {"F4", "B3", {1, 0, h, h}},
        {"F4", "A1+~A1", {h, 0, 0, h}},
        {"E7", "D5(a1)+A1", {h, h, h, 0, 0, h, h}},
        {"E8", "D6", {1, 0, 0, h, 0, h, 0, 1}},
        {"E8", "A6", {h, 0, 0, h, 0, 0, h, h}},
        {"E8", "A4+A2", {h, 0, 0, 0, h, 0, 0, h}},
        {"E8", "A2+2A1", {0, h, 0, 0, 0, 0, 0, h}},
    };
    return table;
}

bool sort_points_before(const ChamberPoint& a, const ChamberPoint& b) {
    if (a.is_zero() != b.is_zero()) return a.is_zero();
    return a.fundamental_coordinates() > b.fundamental_coordinates();
}

std::string describe(const RationalVector& x) { return to_string(x); }

}  // namespace

bool fundamental_alcove_test(const ChamberPoint& p) {
    return p.is_dominant() && dot(p.datum->highest_coroot().coords, p.nu) < kOne;
}

LevelBound max_level_bound(const SimpleType& t_in) {
    const SimpleType t = make_type(t_in.family, t_in.rank);
    const int n = t.rank;
    LevelBound lb{t, 0, {}};
    const auto d = build_root_datum(t);
    switch (t.family) {
        case Family::A:
            // handled through a_1 < 1/2, which for hermitian points is <gamma^vee, nu> < 1
            lb.r0 = d->coxeter_number - 1;
            lb.level_r0_coroots = {d->highest_coroot().coords};
            break;
        case Family::B:
            lb.r0 = 2 * n - 1;
            lb.level_r0_coroots = {eps_sum(n, {{n, 2}})};
            break;
        case Family::C:
            if (n % 2 == 1) {
                lb.r0 = n;
                for (int i = 1; 2 * i < n; ++i) lb.level_r0_coroots.push_back(eps_sum(n, {{i, 1}, {n - i, 1}}));
                lb.level_r0_coroots.push_back(eps_sum(n, {{n, 1}}));
            } else {
                lb.r0 = n + 1;
                for (int i = 1; 2 * i <= n; ++i)
                    lb.level_r0_coroots.push_back(eps_sum(n, {{i, 1}, {n + 1 - i, 1}}));
            }
            break;
        case Family::D:
            // e_1+e_n, -e_1+e_n, e_i+e_{n+1-i}; the same list serves odd n
            lb.r0 = n - 1;
            lb.level_r0_coroots.push_back(eps_sum(n, {{1, 1}, {n, 1}}));
            lb.level_r0_coroots.push_back(eps_sum(n, {{1, -1}, {n, 1}}));
            for (int i = 2; 2 * i < n + 1; ++i)
                lb.level_r0_coroots.push_back(eps_sum(n, {{i, 1}, {n + 1 - i, 1}}));
            break;
        case Family::G:
            lb.r0 = 3;
            lb.level_r0_coroots = {d->coroot_combination({2, 1})};
            break;
        case Family::F:
            lb.r0 = 9;
            lb.level_r0_coroots = {RationalVector{1, 1, 1, -1}};
            break;
        case Family::E:
            if (n == 6) {
                lb.r0 = 9;
                lb.level_r0_coroots = {half_vec({-1, 1, -1, 1, 1, -1, -1, 1})};
            } else if (n == 7) {
                lb.r0 = 9;
                lb.level_r0_coroots = {half_vec({-1, 1, -1, 1, 1, -1, -1, 1}), half_vec({-1, 1, 1, -1, -1, 1, -1, 1}),
                                       half_vec({1, -1, -1, 1, -1, 1, -1, 1}),
                                       eps_sum(8, {{5, 1}, {6, 1}})};
            } else {
                lb.r0 = 15;
                lb.level_r0_coroots = {half_vec({1, -1, 1, 1, 1, 1, -1, 1}), half_vec({1, 1, -1, 1, 1, -1, 1, 1}),
                                       half_vec({1, 1, 1, -1, -1, 1, 1, 1}), half_vec({-1, -1, -1, 1, -1, 1, 1, 1})};
            }
            break;
    }
    for (auto& b : lb.level_r0_coroots)
        if (coroot_level(*d, b) != lb.r0)
            throw std::logic_error("level bound coroot " + to_string(b) + " is not of level " + std::to_string(lb.r0));
    return lb;
}

HalfIntegralResult half_integral_unitary_analysis(const SimpleType& t) {
    const auto d = build_root_datum(t);
    const LevelBound bound = max_level_bound(t);
    const int r = d->rank;
    if (r > 20) throw DomainError("rank too large for candidate enumeration");
    HalfIntegralResult res;
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        RationalVector c(r);
        for (int i = 0; i < r; ++i)
            if (mask >> i & 1u) c[i] = kHalf;
        const ChamberPoint p = point_from_fundamental(d, c);
        auto reject = [&](std::string why) { res.trace.push_back({c, std::move(why)}); };

        if (!is_hermitian(p)) {
            reject("not hermitian");
            continue;
        }
        bool ok = true;
        if (t.family == Family::A) {
            if (!(p.nu[0] < kHalf)) {
                reject("a1 = " + p.nu[0].str() + " violates a1 < 1/2");
                ok = false;
            }
        } else {
            for (auto& b : bound.level_r0_coroots) {
                Rational v = dot(b, p.nu);
                if (!(v < kOne)) {
                    reject("<" + describe(b) + ", nu> = " + v.str() + " violates the level-" +
                           std::to_string(bound.r0) + " bound");
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        for (auto& a : d->positive_coroots) {
            if (dot(a.coords, p.nu) == kOne) {
                reject("on the reducibility hyperplane <" + describe(a.coords) + ", nu> = 1");
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (!fundamental_alcove_test(p)) {
            reject("outside the fundamental alcove");
            continue;
        }
        res.points.push_back(p);
    }
    std::sort(res.points.begin(), res.points.end(), sort_points_before);
    return res;
}

std::vector<ChamberPoint> half_integral_unitary_points(const SimpleType& t) {
    return half_integral_unitary_analysis(t).points;
}

bool integral_point_nonunitary(const ChamberPoint& p) {
    if (!p.is_dominant()) throw DomainError("integrality test needs a dominant point");
    for (auto& a : p.datum->positive_coroots) {
        Rational v = dot(a.coords, p.nu);
        if (v.is_integer() && v.sign() > 0) return true;
    }
    return false;
}

int unitary_alcove_exponent(const SimpleType& t_in) {
    const SimpleType t = make_type(t_in.family, t_in.rank);
    switch (t.family) {
        case Family::A:
        case Family::B: return 0;
        case Family::C: return (t.rank - 1) / 2;
        case Family::D: return (t.rank - 2) / 2;
        case Family::G:
        case Family::F: return 1;
        case Family::E: return t.rank == 6 ? 1 : t.rank == 7 ? 3 : 4;
    }
    return 0;
}

std::int64_t count_chamber_regions(const SimpleType& t) {
    const auto d = build_root_datum(t);
    Rational m(1);
    for (int di : d->degrees) m *= Rational(di + d->coxeter_number, di);
    if (!m.is_integer()) throw std::logic_error("non-integral region count");
    return m.num();
}

std::vector<ChamberRegion> enumerate_chamber_regions(const SimpleType& t) {
    const auto d = build_root_datum(t);
    const int r = d->rank;
    if (r > 4) throw DomainError("exact region enumeration is limited to rank <= 4");

    // Variables (c_1..c_r, t): c_i = <alpha_i^vee, nu>; maximize the margin t
    // of all strict inequalities (c_i > 0 and the chosen sides).
    struct Side {
        std::size_t coroot;
        bool below;
    };
    auto find_witness = [&](const std::vector<Side>& sides) -> std::optional<RationalVector> {
        std::vector<RationalVector> a;
        RationalVector b;
        for (int i = 0; i < r; ++i) {
            RationalVector row(r + 1);
            row[i] = -1;
            row[r] = 1;
            a.push_back(row);
            b.push_back(0);
        }
        RationalVector cap(r + 1);
        cap[r] = 1;
        a.push_back(cap);
        b.push_back(1);
        for (auto& s : sides) {
            RationalVector row(r + 1);
            const auto& k = d->positive_coroots[s.coroot].coefficients;
            for (int i = 0; i < r; ++i) row[i] = s.below ? Rational(k[i]) : Rational(-k[i]);
            row[r] = 1;
            a.push_back(row);
            b.push_back(s.below ? 1 : -1);
        }
        RationalVector obj(r + 1);
        obj[r] = 1;
        auto sol = detail::maximize(a, b, obj);
        if (sol.status != detail::LpResult::Status::Optimal || sol.value.sign() <= 0) return std::nullopt;
        return RationalVector(sol.x.begin(), sol.x.begin() + r);
    };

    struct Partial {
        std::vector<Side> sides;
        RationalVector witness;
    };
    std::vector<Partial> regions{{{}, RationalVector(r, Rational(1, 1000))}};
    for (std::size_t h = 0; h < d->positive_coroots.size(); ++h) {
        const auto& k = d->positive_coroots[h].coefficients;
        std::vector<Partial> next;
        for (auto& reg : regions) {
            Rational v;
            for (int i = 0; i < r; ++i) v += Rational(k[i]) * reg.witness[i];
            for (bool below : {true, false}) {
                auto sides = reg.sides;
                sides.push_back({h, below});
                if ((below && v < kOne) || (!below && v > kOne)) {
                    next.push_back({std::move(sides), reg.witness});
                } else if (auto w = find_witness(sides)) {
                    next.push_back({std::move(sides), *w});
                }
            }
        }
        regions = std::move(next);
    }
    std::vector<ChamberRegion> out;
    for (auto& reg : regions) {
        ChamberRegion cr;
        cr.below.resize(d->positive_coroots.size());
        for (auto& s : reg.sides) cr.below[s.coroot] = s.below;
        cr.witness = reg.witness;
        out.push_back(std::move(cr));
    }
    return out;
}

ChamberPoint central_point(const NilpotentOrbit& o) {
    return ChamberPoint{build_root_datum(o.datum_type), kHalf * o.h};
}

std::vector<int> extraneous_parts(const NilpotentOrbit& o) {
    std::vector<int> parts;
    if (o.partition.empty()) return parts;
    std::map<int, int> r;
    for (int x : o.partition) ++r[x];
    const Family f = o.dual_type.family;
    for (auto it = r.rbegin(); it != r.rend(); ++it) {
        auto [part, mult] = *it;
        if (mult < 3) continue;
        if (f == Family::C && part % 2 == 0) parts.push_back(part);
        if ((f == Family::B || f == Family::D) && part % 2 == 1) parts.push_back(part);
    }
    return parts;
}

ChamberPoint classical_shifted_point(const NilpotentOrbit& o, const std::map<int, int>& epsilon) {
    if (o.partition.empty() || o.dual_type.family == Family::A)
        throw DomainError("epsilon shifts are defined for Sp and Spin partition orbits only");
    std::map<int, int> r;
    for (int x : o.partition) ++r[x];
    // The shift by 1/2 omega^j moves one isotropic pair of copies of the
    // j-string by +-1/2; the remaining copies keep their h-eigenvalues.
    std::vector<Rational> ev;
    for (auto [part, mult] : r) {
        int shifted = 0;
        if (auto it = epsilon.find(part); it != epsilon.end() && it->second) {
            if (mult < 2) throw DomainError("part " + std::to_string(part) + " has multiplicity < 2");
            shifted = 1;
        }
        auto string = half_h_eigenvalues({part});
        for (int c = 0; c < mult - 2 * shifted; ++c) ev.insert(ev.end(), string.begin(), string.end());
        if (shifted)
            for (auto& x : string) {
                ev.push_back(x + kHalf);
                ev.push_back(-(x + kHalf));
            }
    }
    for (auto& [part, e] : epsilon)
        if (e && !r.count(part)) throw DomainError("epsilon refers to a missing part " + std::to_string(part));
    std::sort(ev.begin(), ev.end(), std::greater<>());
    const auto d = build_root_datum(o.datum_type);
    RationalVector nu(ev.begin(), ev.begin() + d->rank);
    std::reverse(nu.begin(), nu.end());
    return dominant_representative(ChamberPoint{d, nu});
}

std::vector<ExtraneousCatalogEntry> extraneous_points(const NilpotentOrbit& o) {
    std::vector<ExtraneousCatalogEntry> out;
    if (o.dual_type.is_exceptional()) {
        const auto d = build_root_datum(o.datum_type);
        for (auto& e : exceptional_extraneous_table()) {
            if (o.dual_type.name() != e.type || normalize_label(o.label) != normalize_label(e.label)) continue;
            out.push_back({o.dual_type, o, point_from_fundamental(d, e.coords), std::nullopt, o.centralizer});
        }
        return out;
    }
    const std::vector<int> parts = extraneous_parts(o);
    const bool spin = o.dual_type.family != Family::C;
    for (std::uint32_t mask = 1; mask < (1u << parts.size()); ++mask) {
        if (spin && std::popcount(mask) % 2 == 1) continue;
        std::map<int, int> eps;
        for (std::size_t k = 0; k < parts.size(); ++k) eps[parts[k]] = (mask >> k) & 1u;
        out.push_back({o.dual_type, o, classical_shifted_point(o, eps), eps, o.centralizer});
    }
    return out;
}

// ---- E8, 4A1 ------------------------------------------------------------------

namespace {
void check_ordered(const Quad& nu) {
    if (!(Rational(0) <= nu[0] && nu[0] <= nu[1] && nu[1] <= nu[2] && nu[2] <= nu[3]))
        throw DomainError("expected 0 <= nu1 <= nu2 <= nu3 <= nu4");
}
}  // namespace

bool cs_e8_4a1_extra_region(const Quad& nu) {
    check_ordered(nu);
    const Rational three_halves(3, 2);
    return nu[0] + nu[3] < kOne && nu[1] + nu[2] < kOne && nu[1] + nu[3] > kOne &&
           -nu[0] + nu[2] + nu[3] < three_halves && three_halves < nu[0] + nu[2] + nu[3];
}

bool cs_e8_4a1_member(const Quad& nu) {
    check_ordered(nu);
    return nu[3] < kHalf || cs_e8_4a1_extra_region(nu);
}

RationalVector cs_e8_4a1_half_h() { return half_vec({0, 2, -1, 1, -1, 1, 0, 0}); }

RationalVector cs_e8_4a1_parameter(const Quad& nu) {
    check_ordered(nu);
    RationalVector shift{0, 0, nu[0], nu[0], nu[1], nu[1], -nu[2] + nu[3], nu[2] + nu[3]};
    return cs_e8_4a1_half_h() + shift;
}

GridScan cs_e8_4a1_grid_scan(const Rational& step, const Rational& bound) {
    if (step.sign() <= 0) throw DomainError("grid step must be positive");
    GridScan out;
    std::vector<Rational> grid;
    for (Rational x(0); x < bound; x += step) grid.push_back(x);
    const std::size_t n = grid.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t c = b; c < n; ++c)
                for (std::size_t e = c; e < n; ++e) {
                    const Quad q{grid[a], grid[b], grid[c], grid[e]};
                    ++out.scanned;
                    if (cs_e8_4a1_extra_region(q)) out.members.push_back(q);
                }
    return out;
}

// ---- quasi-split forms ---------------------------------------------------------

QuasiSplitResult quasi_split_analysis(const SimpleType& t, int tau_order) {
    QuasiSplitResult res;
    res.folded = fold(t, tau_order);
    const auto d = build_root_datum(res.folded);
    res.candidates = half_integral_unitary_points(res.folded);

    // Representations of the fixed subgroup of G^vee that extend to G^vee x| <tau>.
    std::vector<std::pair<std::string, RepLabel>> reps{{"adjoint", RepLabel::adjoint()}};
    if (t.family == Family::A && t.rank % 2 == 1)
        reps.emplace_back("standard of Sp(" + std::to_string(t.rank + 1) + ") (restricted defining representation)",
                          RepLabel::standard());
    if (t.family == Family::A && t.rank % 2 == 0)
        reps.emplace_back("standard of SO(" + std::to_string(t.rank + 1) + ") (restricted defining representation)",
                          RepLabel::standard());
    if (t.family == Family::D && tau_order == 2)
        reps.emplace_back("spin of Spin(" + std::to_string(2 * t.rank - 1) + ") (restricted spin representation)",
                          RepLabel::spin());
    for (auto& [name, rep] : reps) res.available_reps.push_back(name);

    for (auto& p : res.candidates) {
        bool killed = false;
        for (auto& [name, rep] : reps) {
            if (!is_half_integral(*d, p, rep)) {
                res.trace.push_back({p.fundamental_coordinates(), "not half-integral for the " + name});
                killed = true;
                break;
            }
        }
        if (killed) continue;
        if (!p.is_zero())
            res.trace.push_back({p.fundamental_coordinates(),
                                 "survives: half-integral for every available representation"
                                 " (the spin representation does not descend)"});
        res.points.push_back(p);
    }
    return res;
}

std::vector<ChamberPoint> quasi_split_reduction(const SimpleType& t, int tau_order) {
    return quasi_split_analysis(t, tau_order).points;
}

}  // namespace satake
