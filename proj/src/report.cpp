#include "satake/report.hpp"

namespace satake::report {

json document(const std::string& schema) { return json{{"schema", schema}, {"version", kVersion}}; }

json to_json(const Rational& r) { return r.str(); }

json to_json(const RationalVector& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(x.str());
    return a;
}

Rational rational_from_json(const json& j) { return Rational::parse(j.get<std::string>()); }

RationalVector vector_from_json(const json& j) {
    RationalVector v;
    for (auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

json to_json(const ChamberPoint& p) {
    const RationalVector c = p.fundamental_coordinates();
    return {{"point", format_fundamental(c)}, {"fundamental", to_json(c)}, {"ambient", to_json(p.nu)}};
}

json to_json(const WeightPattern& p) {
    json a = json::array();
    for (auto& [i, m] : p.entries()) a.push_back({i, m});
    return a;
}

json to_json(const PropertyAVerdict& v) {
    static const char* names[] = {"DiagonalMatch", "TruncationAt", "Violation"};
    json j{{"case", names[static_cast<int>(v.kind)]}, {"verdict", v.str()}};
    if (v.kind != PropertyAVerdict::Case::DiagonalMatch) {
        j["i0"] = v.i0;
        j["n_u"] = v.n_u;
        j["n_v"] = v.n_v;
    }
    return j;
}

json to_json(const NilpotentOrbit& o) {
    json j{{"label", o.full_label()},
           {"dimension", o.dimension},
           {"marks", o.marks},
           {"h", to_json(o.h)},
           {"centralizer", o.centralizer_string()}};
    if (!o.partition.empty()) j["partition"] = o.partition;
    return j;
}

std::string format_coroot_combination(const std::vector<int>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (c[i] != 1) s += std::to_string(c[i]) + "*";
        s += "a" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

json root_datum_report(const RootDatum& d) {
    json j = document("satake.root_datum");
    j["type"] = d.type.name();
    j["rank"] = d.rank;
    j["ambient_dim"] = d.ambient_dim;
    auto vecs = [](const std::vector<RationalVector>& vs) {
        json a = json::array();
        for (auto& v : vs) a.push_back(to_json(v));
        return a;
    };
    j["simple_roots"] = vecs(d.simple_roots);
    j["simple_coroots"] = vecs(d.simple_coroots);
    j["fundamental_weights"] = vecs(d.fundamental_weights);
    j["fundamental_coweights"] = vecs(d.fundamental_coweights);
    j["cartan"] = d.cartan;
    json pos = json::array();
    for (auto& b : d.positive_coroots)
        pos.push_back({{"level", b.level}, {"coefficients", b.coefficients}, {"coords", to_json(b.coords)}});
    j["positive_coroots"] = pos;
    j["highest_coroot"] = format_coroot_combination(d.highest_coroot().coefficients);
    j["rho"] = to_json(d.rho);
    j["coxeter_number"] = d.coxeter_number;
    j["degrees"] = d.degrees;
    j["dim_g"] = d.dim_g();
    return j;
}

json orbits_report(const SimpleType& dual) {
    json j = document("satake.orbits");
    j["dual_type"] = dual.name();
    j["orbits"] = json::array();
    for (auto& o : orbit_catalog(dual)) j["orbits"].push_back(to_json(o));
    return j;
}

json filtration_report(const SimpleType& dual) {
    json j = document("satake.filtration_table");
    j["dual_type"] = dual.name();
    j["rows"] = json::array();
    for (auto& o : orbit_catalog(dual)) {
        auto row = filtration_row(o);
        j["rows"].push_back({{"label", o.full_label()}, {"i_max", row.max_index()}, {"row", row.nonnegative_row()}});
    }
    return j;
}

json half_integral_report(const SimpleType& t, const HalfIntegralResult& r) {
    json j = document("satake.half_integral");
    j["type"] = t.name();
    j["points"] = json::array();
    for (auto& p : r.points) j["points"].push_back(to_json(p));
    j["eliminated"] = json::array();
    for (auto& s : r.trace)
        j["eliminated"].push_back({{"candidate", format_fundamental(s.candidate)}, {"reason", s.reason}});
    return j;
}

json extraneous_report(const SimpleType& dual, const std::vector<ExtraneousCatalogEntry>& entries) {
    json j = document("satake.extraneous");
    j["dual_type"] = dual.name();
    j["entries"] = json::array();
    for (auto& e : entries) {
        json x{{"orbit", e.orbit.full_label()},
               {"centralizer", e.orbit.centralizer_string()},
               {"central_point", to_json(central_point(e.orbit))},
               {"re_s", to_json(e.re_s)}};
        if (e.epsilon) {
            json eps = json::object();
            for (auto& [part, v] : *e.epsilon) eps[std::to_string(part)] = v;
            x["epsilon"] = eps;
        }
        j["entries"].push_back(x);
    }
    return j;
}

json azs_report(const std::vector<AzsRow>& rows) {
    json j = document("satake.azs_table");
    j["rows"] = json::array();
    for (auto& r : rows) {
        json x{{"dual_type", r.dual_type.name()},
               {"orbit", r.orbit},
               {"rep", r.rep},
               {"re_s", to_json(r.re_s)},
               {"verdict", to_json(r.verdict)},
               {"i0", r.verdict.i0},
               {"n_v", r.verdict.n_v},
               {"n_u", r.verdict.n_u},
               {"expected", {{"i0", r.expected_i0}, {"n_v", r.expected_n_v}, {"n_u", r.expected_n_u}}},
               {"matches", r.matches()}};
        if (r.epsilon) {
            json eps = json::object();
            for (auto& [part, v] : *r.epsilon) eps[std::to_string(part)] = v;
            x["epsilon"] = eps;
        }
        j["rows"].push_back(x);
    }
    return j;
}

json quasi_split_report(const SimpleType& source, int tau_order, const QuasiSplitResult& r) {
    json j = document("satake.quasi_split");
    j["type"] = source.name();
    j["tau_order"] = tau_order;
    j["folded"] = r.folded.name();
    j["available_reps"] = r.available_reps;
    j["candidates"] = json::array();
    for (auto& p : r.candidates) j["candidates"].push_back(to_json(p));
    j["points"] = json::array();
    for (auto& p : r.points) j["points"].push_back(to_json(p));
    j["trace"] = json::array();
    for (auto& s : r.trace) j["trace"].push_back({{"candidate", format_fundamental(s.candidate)}, {"reason", s.reason}});
    return j;
}

}  // namespace satake::report
