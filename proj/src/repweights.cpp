#include "satake/repweights.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace satake {

namespace {

RationalVector signed_half_vector(int n, unsigned mask) {
    RationalVector v(n, Rational(1, 2));
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) v[i] = Rational(-1, 2);
    return v;
}

// Simple roots of G, i.e. the vectors alpha with s_alpha acting on coweights.
bool is_dominant_coweight(const RootDatum& d, const RationalVector& x) {
    for (auto& a : d.simple_roots)
        if (dot(x, a).sign() < 0) return false;
    return true;
}

}  // namespace

std::string RepLabel::name() const {
    switch (kind) {
        case RepKind::Adjoint: return "adjoint";
        case RepKind::StandardClassical: return "standard";
        case RepKind::Spin: return "spin";
        case RepKind::HalfSpinPlus: return "halfspin+";
        case RepKind::HalfSpinMinus: return "halfspin-";
        case RepKind::MinusculeOrbit: return "minuscule" + to_string(*highest_weight);
        case RepKind::HighestWeightPairingOnly: return "highest-weight" + to_string(*highest_weight);
    }
    return "?";
}

RepLabel parse_rep_label(const std::string& s) {
    if (s == "adjoint" || s == "ad") return RepLabel::adjoint();
    if (s == "standard" || s == "std") return RepLabel::standard();
    if (s == "spin") return RepLabel::spin();
    if (s == "halfspin+" || s == "halfspin-plus") return RepLabel::half_spin_plus();
    if (s == "halfspin-" || s == "halfspin-minus") return RepLabel::half_spin_minus();
    throw DomainError("unknown representation '" + s + "'");
}

std::int64_t WeightedRep::dimension() const {
    std::int64_t s = 0;
    for (auto& [w, m] : weights) s += m;
    return s;
}

// ---- WeightPattern ---------------------------------------------------------

WeightPattern::WeightPattern(std::map<int, std::int64_t> entries) {
    for (auto [i, m] : entries) add(i, m);
}

std::int64_t WeightPattern::operator()(int i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? 0 : it->second;
}

void WeightPattern::add(int i, std::int64_t m) {
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    if (m == 0) return;
    entries_[i] += m;
}

std::int64_t WeightPattern::total() const {
    std::int64_t s = 0;
    for (auto& [i, m] : entries_) s += m;
    return s;
}

int WeightPattern::max_index() const {
    if (entries_.empty()) throw std::logic_error("empty weight pattern");
    return entries_.rbegin()->first;
}

int WeightPattern::min_index() const {
    if (entries_.empty()) throw std::logic_error("empty weight pattern");
    return entries_.begin()->first;
}

bool WeightPattern::is_symmetric() const {
    for (auto& [i, m] : entries_)
        if ((*this)(-i) != m) return false;
    return true;
}

std::vector<std::int64_t> WeightPattern::nonnegative_row() const {
    std::vector<std::int64_t> row;
    if (entries_.empty() || max_index() < 0) return row;
    for (int i = 0; i <= max_index(); ++i) row.push_back((*this)(i));
    return row;
}

std::string WeightPattern::row_string() const {
    std::string s;
    auto row = nonnegative_row();
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
    return s;
}

WeightPattern WeightPattern::from_row(const std::vector<std::int64_t>& row) {
    WeightPattern p;
    for (std::size_t i = 0; i < row.size(); ++i) p.add(static_cast<int>(i), row[i]);
    return p;
}

WeightPattern WeightPattern::parse_row(const std::string& s) {
    std::vector<std::int64_t> row;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
            if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
            row.push_back(v);
        } catch (const std::logic_error&) {
            throw DomainError("malformed filtration row '" + s + "'");
        }
    }
    if (row.empty()) throw DomainError("empty filtration row");
    return from_row(row);
}

// ---- weights ---------------------------------------------------------------

std::vector<RationalVector> coweight_orbit(const RootDatum& d, const RationalVector& lambda) {
    std::set<RationalVector> seen{lambda};
    std::vector<RationalVector> order{lambda}, frontier{lambda};
    while (!frontier.empty()) {
        std::vector<RationalVector> next;
        for (auto& x : frontier)
            for (int i = 0; i < d.rank; ++i) {
                RationalVector y = d.reflect_coweight(i, x);
                if (seen.insert(y).second) {
                    order.push_back(y);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return order;
}

bool is_minuscule(const RootDatum& d, const RationalVector& lambda) {
    if (static_cast<int>(lambda.size()) != d.ambient_dim || !is_dominant_coweight(d, lambda)) return false;
    // Roots of G are the alpha = 2 alpha^vee / |alpha^vee|^2.
    for (auto& b : d.positive_coroots) {
        Rational p = Rational(2) / dot(b.coords, b.coords) * dot(lambda, b.coords);
        if (p > Rational(1) || p < Rational(-1)) return false;
    }
    return true;
}

WeightedRep weights_of(const RootDatum& d, const RepLabel& r) {
    WeightedRep out{r, {}};
    const int n = d.ambient_dim;
    const Family f = d.type.family;
    auto unsupported = [&] {
        return DomainError("representation " + r.name() + " is not supported for the dual of " + d.type.name());
    };
    switch (r.kind) {
        case RepKind::Adjoint:
            for (auto& b : d.positive_coroots) {
                out.weights.emplace_back(b.coords, 1);
                out.weights.emplace_back(-b.coords, 1);
            }
            out.weights.emplace_back(RationalVector(n), d.rank);
            break;
        case RepKind::StandardClassical:
            // datum A: SL(n); B: Sp(2n); C: Spin(2n+1) via SO(2n+1); D: SO(2n)
            if (f == Family::A) {
                for (int i = 0; i < n; ++i) {
                    RationalVector w(n, Rational(-1, n));
                    w[i] += 1;
                    out.weights.emplace_back(w, 1);
                }
            } else if (f == Family::B || f == Family::C || f == Family::D) {
                for (int i = 0; i < n; ++i) {
                    RationalVector e(n);
                    e[i] = 1;
                    out.weights.emplace_back(e, 1);
                    out.weights.emplace_back(-e, 1);
                }
                if (f == Family::C) out.weights.emplace_back(RationalVector(n), 1);
            } else {
                throw unsupported();
            }
            break;
        case RepKind::Spin:
            // dual Spin(2n+1) (datum C) or Spin(2n) (datum D, = both half-spins)
            if (f != Family::C && f != Family::D) throw unsupported();
            for (unsigned m = 0; m < (1u << n); ++m) out.weights.emplace_back(signed_half_vector(n, m), 1);
            break;
        case RepKind::HalfSpinPlus:
        case RepKind::HalfSpinMinus: {
            if (f != Family::D) throw unsupported();
            const int parity = r.kind == RepKind::HalfSpinPlus ? 0 : 1;
            for (unsigned m = 0; m < (1u << n); ++m)
                if (std::popcount(m) % 2 == parity) out.weights.emplace_back(signed_half_vector(n, m), 1);
            break;
        }
        case RepKind::MinusculeOrbit:
            if (!r.highest_weight || !is_minuscule(d, *r.highest_weight))
                throw DomainError("highest weight is not minuscule for the dual of " + d.type.name());
            for (auto& w : coweight_orbit(d, *r.highest_weight)) out.weights.emplace_back(w, 1);
            break;
        case RepKind::HighestWeightPairingOnly:
            throw DomainError("weights of a highest-weight-only representation are not enumerated");
    }
    return out;
}

WeightPattern weight_pattern(const WeightedRep& v, const ChamberPoint& nu) {
    WeightPattern p;
    std::vector<RationalVector> bad;
    for (auto& [w, m] : v.weights) {
        Rational i = Rational(2) * dot(w, nu.nu);
        if (!i.is_integer()) {
            bad.push_back(w);
            continue;
        }
        p.add(static_cast<int>(i.num()), m);
    }
    if (!bad.empty()) {
        std::string msg = "point " + to_string(nu.nu) + " is not half-integral for " + v.rep.name() + "; weights:";
        for (std::size_t k = 0; k < bad.size() && k < 8; ++k) msg += " " + to_string(bad[k]);
        if (bad.size() > 8) msg += " ...";
        throw NonIntegralWeightError(msg, std::move(bad));
    }
    return p;
}

WeightPattern filtration_row(const NilpotentOrbit& o) {
    const auto d = build_root_datum(o.datum_type);
    const ChamberPoint half{d, Rational(1, 2) * o.h};
    const WeightPattern full = weight_pattern(weights_of(*d, RepLabel::adjoint()), half);
    WeightPattern row;
    for (auto [i, m] : full.entries())
        if (i >= 0) row.add(i, m);
    return row;
}

bool is_adjoint_half_integral(const ChamberPoint& nu) {
    for (auto& b : nu.datum->positive_coroots)
        if (!(Rational(2) * dot(b.coords, nu.nu)).is_integer()) return false;
    return true;
}

bool is_half_integral(const RootDatum& d, const ChamberPoint& nu, const RepLabel& r) {
    if (r.kind == RepKind::HighestWeightPairingOnly) {
        // For adjoint-half-integral nu all weights of V(lambda) differ from
        // lambda by sums of roots, so only <lambda, nu> matters.
        if (!is_adjoint_half_integral(nu))
            throw DomainError("pairing-only half-integrality test needs an adjoint-half-integral point");
        return (Rational(2) * dot(*r.highest_weight, nu.nu)).is_integer();
    }
    for (auto& [w, m] : weights_of(d, r).weights)
        if (!(Rational(2) * dot(w, nu.nu)).is_integer()) return false;
    return true;
}

}  // namespace satake
