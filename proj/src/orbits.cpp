#include "satake/orbits.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace satake {

namespace {

using json = nlohmann::json;

// Multiplicities r_d of each part d.
std::map<int, int> multiplicities(const std::vector<int>& p) {
    std::map<int, int> r;
    for (int d : p) ++r[d];
    return r;
}

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int d = std::min(remaining, max_part); d >= 1; --d) {
        cur.push_back(d);
        partitions_rec(remaining - d, d, cur, out);
        cur.pop_back();
    }
}

// dim of the orbit through h: dim g - dim g_0 - dim g_1 for the ad(h) grading.
int orbit_dimension(const RootDatum& d, const RationalVector& h) {
    int n0 = d.rank, n1 = 0;
    for (auto& b : d.positive_coroots) {
        Rational v = dot(b.coords, h);
        if (v.is_zero()) n0 += 2;
        if (v == Rational(1) || v == Rational(-1)) ++n1;
    }
    return d.dim_g() - n0 - n1;
}

std::vector<int> weighted_diagram(const RootDatum& d, const RationalVector& h) {
    std::vector<int> m;
    for (auto& a : d.simple_coroots) {
        Rational v = dot(a, h);
        if (!v.is_integer()) throw std::logic_error("non-integral weighted Dynkin diagram");
        m.push_back(static_cast<int>(v.num()));
    }
    return m;
}

std::vector<std::string> classical_centralizer(const SimpleType& dual, const std::vector<int>& p) {
    std::vector<std::string> f;
    auto r = multiplicities(p);
    for (auto it = r.rbegin(); it != r.rend(); ++it) {
        auto [d, m] = *it;
        const std::string sz = "(" + std::to_string(m) + ")";
        switch (dual.family) {
            case Family::A: f.push_back("GL" + sz); break;
            case Family::C: f.push_back((d % 2 ? "Sp" : "O") + sz); break;
            default: f.push_back((d % 2 ? "O" : "Sp") + sz); break;
        }
    }
    return f;
}

std::string strip_label(std::string_view s) {
    std::string t(s);
    for (std::string_view pat : {"\\widetilde", "\\tilde"}) {
        for (std::size_t pos; (pos = t.find(pat)) != std::string::npos;) t.replace(pos, pat.size(), "~");
    }
    std::string out;
    for (char c : t)
        if (c != '+' && c != '_' && c != '{' && c != '}' && c != '$' && !std::isspace(static_cast<unsigned char>(c)))
            out += c;
    return out;
}

// ---- exceptional dataset ---------------------------------------------------

std::vector<std::string> split_factors(const std::string& s) {
    std::vector<std::string> f;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, '+');) f.push_back(item);
    return f;
}

using Catalog = std::map<std::string, std::vector<NilpotentOrbit>>;

Catalog load_catalog() {
    const json doc = json::parse(exceptional_dataset_json());
    if (doc.at("version").get<int>() != 1) throw std::logic_error("unsupported orbit dataset version");
    Catalog cat;
    for (auto& [tname, orbits] : doc.at("types").items()) {
        const SimpleType dual = SimpleType::parse(tname);
        const auto datum = build_root_datum(datum_type_for_dual(dual));
        auto& out = cat[dual.name()];
        for (auto& o : orbits) {
            NilpotentOrbit orb;
            orb.dual_type = dual;
            orb.datum_type = datum->type;
            orb.label = o.at("label").get<std::string>();
            for (auto& x : o.at("h")) orb.h.push_back(Rational::parse(x.get<std::string>()));
            orb.marks = o.at("marks").get<std::vector<int>>();
            const std::string z = o.at("centralizer").get<std::string>();
            orb.centralizer = z == "1" ? std::vector<std::string>{} : split_factors(z);
            orb.dimension = o.at("dimension").get<int>();
            orb.centralizer_verified = o.at("centralizer_source").get<std::string>() == "verified";
            // The stored marks, h and dimension must agree with each other.
            if (static_cast<int>(orb.h.size()) != datum->ambient_dim || weighted_diagram(*datum, orb.h) != orb.marks ||
                datum->from_fundamental_coordinates([&] {
                    RationalVector c;
                    for (int m : orb.marks) c.push_back(m);
                    return c;
                }()) != orb.h ||
                orbit_dimension(*datum, orb.h) != orb.dimension)
                throw std::logic_error("inconsistent dataset entry " + tname + " " + orb.label);
            out.push_back(std::move(orb));
        }
    }
    return cat;
}

const Catalog& catalog() {
    static const Catalog cat = load_catalog();
    return cat;
}

}  // namespace

std::string NilpotentOrbit::full_label() const {
    if (!tag) return label;
    return label + (*tag == VeryEvenTag::I ? " I" : " II");
}

std::string NilpotentOrbit::centralizer_string() const {
    if (centralizer.empty()) return "1";
    const char* sep = dual_type.is_classical() ? "x" : "+";
    std::string s;
    for (std::size_t i = 0; i < centralizer.size(); ++i) s += (i ? sep : "") + centralizer[i];
    if (dual_type.family == Family::A) s = "S(" + s + ")";
    return s;
}

SimpleType datum_type_for_dual(const SimpleType& dual) {
    switch (dual.family) {
        case Family::B: return make_type(Family::C, dual.rank);
        case Family::C: return make_type(Family::B, dual.rank);
        default: return make_type(dual.family, dual.rank);
    }
}

int defining_dimension(const SimpleType& dual) {
    switch (dual.family) {
        case Family::A: return dual.rank + 1;
        case Family::B: return 2 * dual.rank + 1;
        case Family::C:
        case Family::D: return 2 * dual.rank;
        default: throw DomainError(dual.name() + " is not a classical type");
    }
}

std::vector<Rational> half_h_eigenvalues(const std::vector<int>& partition) {
    std::vector<Rational> ev;
    for (int d : partition)
        for (int k = d - 1; k >= 1 - d; k -= 2) ev.emplace_back(k, 2);
    return ev;
}

bool satisfies_parity(const SimpleType& dual, const std::vector<int>& p) {
    for (auto [d, r] : multiplicities(p)) {
        if (dual.family == Family::C && d % 2 == 1 && r % 2 == 1) return false;
        if ((dual.family == Family::B || dual.family == Family::D) && d % 2 == 0 && r % 2 == 1) return false;
    }
    return true;
}

bool is_very_even(const SimpleType& dual, const std::vector<int>& p) {
    if (dual.family != Family::D) return false;
    for (auto [d, r] : multiplicities(p))
        if (d % 2 == 1 || r % 2 == 1) return false;
    return true;
}

RationalVector classical_neutral_element(const SimpleType& dual, const std::vector<int>& partition,
                                         std::optional<VeryEvenTag> tag) {
    const int n = defining_dimension(dual);
    int sum = 0;
    for (int d : partition) sum += d;
    if (sum != n) throw DomainError(partition_label(partition) + " is not a partition of " + std::to_string(n));
    if (!satisfies_parity(dual, partition))
        throw DomainError(partition_label(partition) + " violates the parity condition for " + dual.name());
    std::vector<Rational> ev = half_h_eigenvalues(partition);
    for (auto& x : ev) x *= 2;
    std::sort(ev.begin(), ev.end(), std::greater<>());
    if (dual.family == Family::A) return ev;
    // The eigenvalue multiset is symmetric; its top half (ascending) is the
    // dominant form in the B/C/D coordinates.
    RationalVector h(ev.begin(), ev.begin() + dual.rank);
    std::reverse(h.begin(), h.end());
    if (tag == VeryEvenTag::II) h[0] = -h[0];
    return h;
}

std::vector<NilpotentOrbit> classical_orbits(const SimpleType& dual) {
    if (!dual.is_classical()) throw DomainError(dual.name() + " is not a classical type");
    const auto datum = build_root_datum(datum_type_for_dual(dual));
    const int n = defining_dimension(dual);
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_rec(n, n, cur, parts);
    std::vector<NilpotentOrbit> out;
    for (auto& p : parts) {
        if (!satisfies_parity(dual, p)) continue;
        std::vector<std::optional<VeryEvenTag>> tags{std::nullopt};
        if (is_very_even(dual, p)) tags = {VeryEvenTag::I, VeryEvenTag::II};
        for (auto tag : tags) {
            NilpotentOrbit o;
            o.dual_type = dual;
            o.datum_type = datum->type;
            o.label = partition_label(p);
            o.partition = p;
            o.tag = tag;
            o.h = classical_neutral_element(dual, p, tag);
            o.marks = weighted_diagram(*datum, o.h);
            o.centralizer = classical_centralizer(dual, p);
            o.dimension = orbit_dimension(*datum, o.h);
            o.centralizer_verified = dual.family != Family::A;
            out.push_back(std::move(o));
        }
    }
    return out;
}

std::vector<NilpotentOrbit> classical_orbits(const SimpleType& dual, int n) {
    if (!dual.is_classical()) throw DomainError(dual.name() + " is not a classical type");
    if (defining_dimension(dual) != n)
        throw DomainError("N = " + std::to_string(n) + " does not match " + dual.name() + " (expected " +
                          std::to_string(defining_dimension(dual)) + ")");
    return classical_orbits(dual);
}

std::vector<NilpotentOrbit> exceptional_catalog(const SimpleType& dual) {
    if (!dual.is_exceptional()) throw DomainError(dual.name() + " is not an exceptional type");
    return catalog().at(dual.name());
}

std::vector<NilpotentOrbit> orbit_catalog(const SimpleType& dual) {
    return dual.is_classical() ? classical_orbits(dual) : exceptional_catalog(dual);
}

std::string normalize_label(std::string_view label) {
    std::string s = strip_label(label);
    static const std::regex primed(R"(^\((.*)\)('+)$)");
    std::smatch m;
    if (std::regex_match(s, m, primed)) s = m[1].str() + m[2].str();
    return s;
}

std::vector<int> parse_partition(std::string_view s) {
    std::string t;
    for (char c : s)
        if (c != '(' && c != ')' && c != '[' && c != ']') t += (c == ',' ? ' ' : c);
    std::stringstream ss(t);
    std::vector<int> p;
    for (std::string tok; ss >> tok;) {
        int part = 0, mult = 1;
        auto caret = tok.find('^');
        try {
            std::size_t used = 0;
            part = std::stoi(tok.substr(0, caret), &used);
            if (used != (caret == std::string::npos ? tok.size() : caret)) throw std::invalid_argument(tok);
            if (caret != std::string::npos) {
                mult = std::stoi(tok.substr(caret + 1), &used);
                if (used != tok.size() - caret - 1) throw std::invalid_argument(tok);
            }
        } catch (const std::logic_error&) {
            throw DomainError("malformed partition '" + std::string(s) + "'");
        }
        if (part <= 0 || mult <= 0) throw DomainError("malformed partition '" + std::string(s) + "'");
        p.insert(p.end(), mult, part);
    }
    if (p.empty()) throw DomainError("empty partition");
    std::sort(p.begin(), p.end(), std::greater<>());
    return p;
}

std::string partition_label(const std::vector<int>& partition) {
    std::string s;
    for (std::size_t i = 0; i < partition.size(); ++i) s += (i ? "," : "") + std::to_string(partition[i]);
    return s;
}

NilpotentOrbit find_orbit(const SimpleType& dual, std::string_view label) {
    if (dual.is_exceptional()) {
        const std::string key = normalize_label(label);
        for (auto& o : exceptional_catalog(dual))
            if (normalize_label(o.label) == key) return o;
        throw DomainError("unknown orbit label '" + std::string(label) + "' for " + dual.name());
    }
    std::string body(label);
    std::optional<VeryEvenTag> tag;
    static const std::regex tagged(R"(^(.*?)[\s/_:]*(II|I)$)");
    std::smatch m;
    if (std::regex_match(body, m, tagged)) {
        tag = m[2].str() == "I" ? VeryEvenTag::I : VeryEvenTag::II;
        body = m[1].str();
    }
    const std::vector<int> p = parse_partition(body);
    for (auto& o : classical_orbits(dual)) {
        if (o.partition != p) continue;
        if (o.tag && !tag)
            throw DomainError("very even partition " + o.label + " needs a tag I or II");
        if (o.tag == tag || (!o.tag && !tag)) return o;
        if (!o.tag && tag) break;
    }
    throw DomainError("unknown orbit '" + std::string(label) + "' for " + dual.name());
}

RationalVector neutral_element(const NilpotentOrbit& o) { return o.h; }

}  // namespace satake
