#include "satake/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "linalg.hpp"

namespace satake {

namespace {

RationalVector unit(int n, int i, Rational c = 1) {
    RationalVector v(n);
    v[i] = c;
    return v;
}

// -e_{i-1} + e_i, the chain coroot shared by B, C and D
RationalVector chain(int n, int i) {
    RationalVector v(n);
    v[i - 1] = -1;
    v[i] = 1;
    return v;
}

std::vector<RationalVector> e8_simple_coroots() {
    const Rational h(1, 2);
    std::vector<RationalVector> s;
    s.push_back(vec({h, -h, -h, -h, -h, -h, -h, h}));
    s.push_back(vec({1, 1, 0, 0, 0, 0, 0, 0}));
    for (int i = 1; i <= 6; ++i) s.push_back(chain(8, i));
    return s;
}

std::vector<RationalVector> simple_coroots_for(const SimpleType& t) {
    const int n = t.rank;
    std::vector<RationalVector> s;
    switch (t.family) {
        case Family::A:
            for (int i = 0; i < n; ++i) {
                RationalVector v(n + 1);
                v[i] = 1;
                v[i + 1] = -1;
                s.push_back(v);
            }
            break;
        case Family::B:
            s.push_back(unit(n, 0, 2));
            for (int i = 1; i < n; ++i) s.push_back(chain(n, i));
            break;
        case Family::C:
            s.push_back(unit(n, 0, 1));
            for (int i = 1; i < n; ++i) s.push_back(chain(n, i));
            break;
        case Family::D: {
            RationalVector a1(n), a2(n);
            a1[0] = 1, a1[1] = 1;
            a2[0] = -1, a2[1] = 1;
            s.push_back(a1);
            s.push_back(a2);
            for (int i = 2; i < n; ++i) s.push_back(chain(n, i));
            break;
        }
        case Family::G:
            s.push_back(vec({Rational(2, 3), Rational(-1, 3), Rational(-1, 3)}));
            s.push_back(vec({-1, 1, 0}));
            break;
        case Family::F:
            s.push_back(vec({1, -1, -1, -1}));
            s.push_back(vec({0, 0, 0, 2}));
            s.push_back(vec({0, 0, 1, -1}));
            s.push_back(vec({0, 1, -1, 0}));
            break;
        case Family::E: {
            auto e8 = e8_simple_coroots();
            s.assign(e8.begin(), e8.begin() + n);
            break;
        }
    }
    return s;
}

std::vector<int> degrees_for(const SimpleType& t) {
    const int n = t.rank;
    std::vector<int> d;
    switch (t.family) {
        case Family::A:
            for (int i = 2; i <= n + 1; ++i) d.push_back(i);
            break;
        case Family::B:
        case Family::C:
            for (int i = 1; i <= n; ++i) d.push_back(2 * i);
            break;
        case Family::D:
            for (int i = 1; i < n; ++i) d.push_back(2 * i);
            d.push_back(n);
            std::sort(d.begin(), d.end());
            break;
        case Family::G: d = {2, 6}; break;
        case Family::F: d = {2, 6, 8, 12}; break;
        case Family::E:
            if (n == 6) d = {2, 5, 6, 8, 9, 12};
            if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
            if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
            break;
    }
    return d;
}

// Solve for the dual basis of `basis` inside span(basis'), i.e. vectors w_i in
// span(span_of) with <basis_j, w_i> = delta_ij.
std::vector<RationalVector> dual_basis(const std::vector<RationalVector>& basis,
                                       const std::vector<RationalVector>& span_of) {
    const std::size_t n = basis.size();
    detail::Matrix g(n, RationalVector(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) g[j][k] = dot(basis[j], span_of[k]);
    std::vector<RationalVector> out;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector e(n);
        e[i] = 1;
        RationalVector y = detail::solve(g, e);
        RationalVector w(basis[0].size());
        for (std::size_t k = 0; k < n; ++k) w += y[k] * span_of[k];
        out.push_back(w);
    }
    return out;
}

int to_int(const Rational& r) {
    if (!r.is_integer()) throw std::logic_error("expected integer, got " + r.str());
    return static_cast<int>(r.num());
}

}  // namespace

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

std::string SimpleType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

bool is_valid_type(Family f, int rank) {
    switch (f) {
        case Family::A:
        case Family::B:
        case Family::C: return rank >= 1;
        case Family::D: return rank >= 3;
        case Family::E: return rank >= 6 && rank <= 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

SimpleType make_type(Family f, int rank) {
    if (!is_valid_type(f, rank))
        throw DomainError("invalid simple type " + std::string(1, family_letter(f)) + std::to_string(rank));
    return SimpleType{f, rank, Isogeny::Adjoint};
}

SimpleType SimpleType::parse(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.size() < 2) throw DomainError("bad type string '" + std::string(s) + "'");
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
    if (letter < 'A' || letter > 'G') throw DomainError("bad type string '" + std::string(s) + "'");
    int rank = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i])) || rank > 1000)
            throw DomainError("bad type string '" + std::string(s) + "'");
        rank = rank * 10 + (t[i] - '0');
    }
    return make_type(static_cast<Family>(letter - 'A'), rank);
}

int lie_algebra_dimension(const SimpleType& t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 2);
        case Family::B:
        case Family::C: return n * (2 * n + 1);
        case Family::D: return n * (2 * n - 1);
        case Family::G: return 14;
        case Family::F: return 52;
        case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    }
    return 0;
}

std::optional<std::size_t> RootDatum::find_positive_coroot(const RationalVector& x) const {
    for (std::size_t i = 0; i < positive_coroots.size(); ++i)
        if (positive_coroots[i].coords == x) return i;
    return std::nullopt;
}

RationalVector RootDatum::fundamental_coordinates(const RationalVector& nu) const {
    RationalVector c(rank);
    for (int i = 0; i < rank; ++i) c[i] = dot(simple_coroots[i], nu);
    return c;
}

RationalVector RootDatum::from_fundamental_coordinates(const RationalVector& c) const {
    if (static_cast<int>(c.size()) != rank)
        throw DomainError("expected " + std::to_string(rank) + " fundamental coordinates, got " +
                          std::to_string(c.size()));
    RationalVector nu(ambient_dim);
    for (int i = 0; i < rank; ++i)
        if (!c[i].is_zero()) nu += c[i] * fundamental_weights[i];
    return nu;
}

RationalVector RootDatum::coroot_combination(const std::vector<int>& c) const {
    RationalVector x(ambient_dim);
    for (int i = 0; i < rank; ++i)
        if (c[i] != 0) x += Rational(c[i]) * simple_coroots[i];
    return x;
}

RationalVector RootDatum::reflect_weight(std::size_t i, const RationalVector& nu) const {
    Rational p = dot(simple_coroots[i], nu);
    if (p.is_zero()) return nu;
    return nu - p * simple_roots[i];
}

RationalVector RootDatum::reflect_coweight(std::size_t i, const RationalVector& x) const {
    Rational p = dot(x, simple_roots[i]);
    if (p.is_zero()) return x;
    return x - p * simple_coroots[i];
}

RootDatumPtr build_root_datum(const SimpleType& t_in) {
    const SimpleType t = make_type(t_in.family, t_in.rank);
    auto d = std::make_shared<RootDatum>();
    d->type = t;
    d->rank = t.rank;
    d->simple_coroots = simple_coroots_for(t);
    d->ambient_dim = static_cast<int>(d->simple_coroots[0].size());
    for (auto& a : d->simple_coroots) d->simple_roots.push_back(Rational(2) / dot(a, a) * a);
    d->fundamental_weights = dual_basis(d->simple_coroots, d->simple_coroots);
    d->fundamental_coweights = dual_basis(d->simple_roots, d->simple_coroots);

    const int n = t.rank;
    d->cartan.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d->cartan[i][j] = to_int(dot(d->simple_coroots[i], d->simple_roots[j]));

    d->rho = RationalVector(d->ambient_dim);
    for (auto& w : d->fundamental_weights) d->rho += w;

    // Close the simple coroots under simple reflections, keeping positive ones.
    // Coefficient vectors are integral and identify coroots uniquely.
    std::map<std::vector<int>, RationalVector> found;
    std::vector<std::vector<int>> frontier;
    auto coeffs_of = [&](const RationalVector& x) {
        std::vector<int> k(n);
        for (int j = 0; j < n; ++j) k[j] = to_int(dot(x, d->fundamental_weights[j]));
        return k;
    };
    for (auto& a : d->simple_coroots) {
        auto k = coeffs_of(a);
        found.emplace(k, a);
        frontier.push_back(k);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (auto& k : frontier) {
            const RationalVector x = found.at(k);
            for (int i = 0; i < n; ++i) {
                RationalVector y = d->reflect_coweight(i, x);
                auto ky = coeffs_of(y);
                if (std::any_of(ky.begin(), ky.end(), [](int v) { return v < 0; })) continue;
                if (found.emplace(ky, y).second) next.push_back(ky);
            }
        }
        frontier = std::move(next);
    }
    for (auto& [k, x] : found) d->positive_coroots.push_back({x, k, std::accumulate(k.begin(), k.end(), 0)});
    std::stable_sort(d->positive_coroots.begin(), d->positive_coroots.end(),
                     [](const PositiveCoroot& a, const PositiveCoroot& b) { return a.level < b.level; });

    d->degrees = degrees_for(t);
    d->coxeter_number = d->degrees.back();

    // Cheap self-checks; a failure here is a typo in the coordinate tables.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dot(d->simple_coroots[i], d->fundamental_weights[j]) != Rational(i == j ? 1 : 0))
                throw std::logic_error("coroot/weight duality fails for " + t.name());
    if (d->dim_g() != lie_algebra_dimension(t)) throw std::logic_error("wrong number of coroots for " + t.name());
    if (d->highest_coroot().level != d->coxeter_number - 1)
        throw std::logic_error("highest coroot level mismatch for " + t.name());
    return d;
}

Rational pairing(const RationalVector& x, const RationalVector& y) { return dot(x, y); }

int coroot_level(const RootDatum& d, const RationalVector& a) {
    auto idx = d.find_positive_coroot(a);
    if (!idx) throw DomainError(to_string(a) + " is not a positive coroot of " + d.type.name());
    return to_int(dot(a, d.rho));
}

bool ChamberPoint::is_dominant() const {
    for (auto& a : datum->simple_coroots)
        if (dot(a, nu).sign() < 0) return false;
    return true;
}

ChamberPoint make_point(const RootDatumPtr& d, RationalVector nu) {
    if (static_cast<int>(nu.size()) != d->ambient_dim)
        throw DomainError("point has dimension " + std::to_string(nu.size()) + ", expected " +
                          std::to_string(d->ambient_dim) + " for " + d->type.name());
    if (d->from_fundamental_coordinates(d->fundamental_coordinates(nu)) != nu)
        throw DomainError(to_string(nu) + " is not in the span of the weights of " + d->type.name());
    return ChamberPoint{d, std::move(nu)};
}

ChamberPoint point_from_fundamental(const RootDatumPtr& d, const RationalVector& c) {
    return ChamberPoint{d, d->from_fundamental_coordinates(c)};
}

ChamberPoint dominant_representative(const ChamberPoint& p) {
    const RootDatum& d = *p.datum;
    RationalVector nu = p.nu;
    // Each reflection in a simple coroot with negative pairing strictly raises
    // the point in the dominance order, so this terminates.
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < d.rank; ++i) {
            if (dot(d.simple_coroots[i], nu).sign() < 0) {
                nu = d.reflect_weight(i, nu);
                changed = true;
            }
        }
    }
    return ChamberPoint{p.datum, nu};
}

bool is_hermitian(const ChamberPoint& p) {
    if (!p.is_dominant()) throw DomainError("hermiticity test needs a dominant point, got " + to_string(p.nu));
    const SimpleType& t = p.datum->type;
    const RationalVector c = p.fundamental_coordinates();
    const int n = t.rank;
    switch (t.family) {
        case Family::A:
            // -w0 reverses the Dynkin diagram
            for (int i = 0; i < n; ++i)
                if (c[i] != c[n - 1 - i]) return false;
            return true;
        case Family::D:
            // for odd n, -w0 swaps the two fork nodes (1 and 2 in these coordinates)
            return n % 2 == 0 || c[0] == c[1];
        case Family::E:
            if (n == 6) return c[0] == c[5] && c[2] == c[4];
            return true;
        default: return true;
    }
}

std::string format_fundamental(const RationalVector& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        if (c[i] == Rational(1))
            os << "w" << i + 1;
        else
            os << c[i] << "*w" << i + 1;
        first = false;
    }
    return first ? "0" : os.str();
}

SimpleType fold(const SimpleType& t, int tau_order) {
    const int n = t.rank;
    if (tau_order == 2) {
        if (t.family == Family::A && n >= 2) return n % 2 ? make_type(Family::B, (n + 1) / 2) : make_type(Family::C, n / 2);
        if (t.family == Family::D) return make_type(Family::C, n - 1);
        if (t.family == Family::E && n == 6) return make_type(Family::F, 4);
    }
    if (tau_order == 3 && t.family == Family::D && n == 4) return make_type(Family::G, 2);
    throw DomainError("(" + t.name() + ", " + std::to_string(tau_order) + ") is not a quasi-split folding");
}

std::vector<FoldingRow> folding_rows(int n) {
    return {
        {make_type(Family::A, 2 * n - 1), 2, make_type(Family::B, n)},
        {make_type(Family::A, 2 * n), 2, make_type(Family::C, n)},
        {make_type(Family::D, n + 1), 2, make_type(Family::C, n)},
        {make_type(Family::D, 4), 3, make_type(Family::G, 2)},
        {make_type(Family::E, 6), 2, make_type(Family::F, 4)},
    };
}

}  // namespace satake
