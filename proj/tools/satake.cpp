// satake: command-line front end to the library.
//
// Exit codes: 0 success, 1 usage error, 2 domain error (bad type, unknown
// orbit, malformed rational, point not half-integral, ...).

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "satake/analysis.hpp"
#include "satake/report.hpp"

using namespace satake;
using report::json;

namespace {

enum class Format { Text, Json, Tsv };

struct Options {
    Format format = Format::Text;
    std::uint64_t seed = 20240601;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "C3" as well as the split form "C 3".
SimpleType take_type(std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("missing type argument");
    std::string s = args.front();
    args.erase(args.begin());
    const bool letters = std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalpha(c); });
    if (letters && !args.empty() && !args.front().empty() &&
        std::all_of(args.front().begin(), args.front().end(), [](unsigned char c) { return std::isdigit(c); })) {
        s += args.front();
        args.erase(args.begin());
    }
    return SimpleType::parse(s);
}

std::string take(std::vector<std::string>& args, const char* what) {
    if (args.empty()) throw UsageError(std::string("missing ") + what);
    std::string s = args.front();
    args.erase(args.begin());
    return s;
}

void no_more(const std::vector<std::string>& args) {
    if (!args.empty()) throw UsageError("unexpected argument '" + args.front() + "'");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string points_line(const std::vector<ChamberPoint>& pts) {
    std::vector<std::string> s;
    for (auto& p : pts) s.push_back(format_fundamental(p.fundamental_coordinates()));
    return join(s, ", ");
}

RationalVector parse_vector(const std::string& s) {
    RationalVector v;
    std::string body = s;
    if (!body.empty() && body.front() == '(') body = body.substr(1);
    if (!body.empty() && body.back() == ')') body.pop_back();
    std::stringstream ss(body);
    for (std::string tok; std::getline(ss, tok, ',');) v.push_back(Rational::parse(tok));
    return v;
}

// ---- subcommands ------------------------------------------------------------------

int cmd_roots(std::vector<std::string> args, const Options& opt) {
    const auto d = build_root_datum(take_type(args));
    no_more(args);
    if (opt.format == Format::Json) {
        print(report::root_datum_report(*d));
        return 0;
    }
    std::cout << "type " << d->type.name() << "  rank " << d->rank << "  dim " << d->dim_g() << "  h "
              << d->coxeter_number << "\n";
    std::cout << "degrees";
    for (int x : d->degrees) std::cout << " " << x;
    std::cout << "\n";
    for (int i = 0; i < d->rank; ++i) {
        std::cout << "a" << i + 1 << "^v = " << to_string(d->simple_coroots[i]) << "   a" << i + 1 << " = "
                  << to_string(d->simple_roots[i]) << "   w" << i + 1 << " = " << to_string(d->fundamental_weights[i])
                  << "\n";
    }
    std::cout << "cartan <a_i^v, a_j>:\n";
    for (auto& row : d->cartan) {
        for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "  ") << row[j];
        std::cout << "\n";
    }
    std::cout << "positive coroots by level:\n";
    int level = 0;
    for (auto& b : d->positive_coroots) {
        if (b.level != level) {
            level = b.level;
            std::cout << "  level " << level << ":";
        }
        std::cout << " [" << report::format_coroot_combination(b.coefficients) << "]";
        if (&b == &d->positive_coroots.back() ||
            (&b + 1)->level != level)
            std::cout << "\n";
    }
    std::cout << "highest coroot gamma^v = " << report::format_coroot_combination(d->highest_coroot().coefficients)
              << "\n";
    return 0;
}

int cmd_orbits(std::vector<std::string> args, const Options& opt) {
    const SimpleType t = take_type(args);
    no_more(args);
    if (opt.format == Format::Json) {
        print(report::orbits_report(t));
        return 0;
    }
    const bool tsv = opt.format == Format::Tsv;
    if (tsv) std::cout << "label\tdimension\tmarks\tcentralizer\th\n";
    for (auto& o : orbit_catalog(t)) {
        std::vector<std::string> marks;
        for (int m : o.marks) marks.push_back(std::to_string(m));
        if (tsv)
            std::cout << o.full_label() << "\t" << o.dimension << "\t" << join(marks, "") << "\t"
                      << o.centralizer_string() << "\t" << to_string(o.h) << "\n";
        else
            std::cout << o.full_label() << " | dim " << o.dimension << " | " << join(marks, "") << " | "
                      << o.centralizer_string() << "\n";
    }
    return 0;
}

int cmd_filtration_table(std::vector<std::string> args, const Options& opt) {
    const SimpleType t = take_type(args);
    no_more(args);
    if (!t.is_exceptional()) throw DomainError("filtration tables are produced for exceptional types only");
    if (opt.format == Format::Json) {
        print(report::filtration_report(t));
        return 0;
    }
    if (opt.format == Format::Tsv) std::cout << "label\ti_max\trow\n";
    const char* sep = opt.format == Format::Tsv ? "\t" : " | ";
    for (auto& o : orbit_catalog(t)) {
        auto row = filtration_row(o);
        std::cout << o.full_label() << sep << row.max_index() << sep << row.row_string() << "\n";
    }
    return 0;
}

int cmd_half_integral(std::vector<std::string> args, const Options& opt, bool trace) {
    const SimpleType t = take_type(args);
    no_more(args);
    auto res = half_integral_unitary_analysis(t);
    if (opt.format == Format::Json) {
        print(report::half_integral_report(t, res));
        return 0;
    }
    if (opt.format == Format::Tsv) {
        std::cout << "point\tambient\n";
        for (auto& p : res.points)
            std::cout << format_fundamental(p.fundamental_coordinates()) << "\t" << to_string(p.nu) << "\n";
    } else {
        std::cout << points_line(res.points) << "\n";
    }
    if (trace)
        for (auto& s : res.trace) std::cout << "# " << format_fundamental(s.candidate) << ": " << s.reason << "\n";
    return 0;
}

int cmd_extraneous(std::vector<std::string> args, const Options& opt) {
    const SimpleType t = take_type(args);
    std::vector<NilpotentOrbit> orbits;
    if (!args.empty())
        orbits.push_back(find_orbit(t, join(args, " ")));
    else
        orbits = orbit_catalog(t);
    std::vector<ExtraneousCatalogEntry> entries;
    for (auto& o : orbits) {
        auto e = extraneous_points(o);
        entries.insert(entries.end(), e.begin(), e.end());
    }
    if (opt.format == Format::Json) {
        print(report::extraneous_report(t, entries));
        return 0;
    }
    if (opt.format == Format::Tsv) std::cout << "orbit\tepsilon\tre_s\tpoint\tcentralizer\n";
    for (auto& e : entries) {
        std::string eps = "-";
        if (e.epsilon) {
            std::vector<std::string> parts;
            for (auto& [part, v] : *e.epsilon) parts.push_back(std::to_string(part) + ":" + std::to_string(v));
            eps = join(parts, ",");
        }
        const std::string point = format_fundamental(e.re_s.fundamental_coordinates());
        if (opt.format == Format::Tsv)
            std::cout << e.orbit.full_label() << "\t" << eps << "\t" << to_string(e.re_s.nu) << "\t" << point << "\t"
                      << e.orbit.centralizer_string() << "\n";
        else if (e.epsilon)
            std::cout << e.orbit.full_label() << " eps " << eps << ": " << to_string(e.re_s.nu) << "\n";
        else
            std::cout << e.orbit.full_label() << " [" << e.orbit.centralizer_string() << "]: " << point << "\n";
    }
    if (entries.empty() && opt.format == Format::Text) std::cout << "none\n";
    return 0;
}

int cmd_central_point(std::vector<std::string> args, const Options& opt) {
    const SimpleType t = take_type(args);
    const auto o = find_orbit(t, join(args, " "));
    const auto p = central_point(o);
    if (opt.format == Format::Json) {
        json j = report::document("satake.central_point");
        j["dual_type"] = t.name();
        j["orbit"] = report::to_json(o);
        j["central_point"] = report::to_json(p);
        print(j);
    } else {
        std::cout << format_fundamental(p.fundamental_coordinates()) << "\n" << to_string(p.nu) << "\n";
    }
    return 0;
}

int cmd_weight_pattern(std::vector<std::string> args, const Options& opt, bool as_point) {
    const SimpleType t = take_type(args);
    const std::string target = take(args, "orbit or point");
    const RepLabel rep = parse_rep_label(args.empty() ? "adjoint" : take(args, "representation"));
    no_more(args);
    const auto d = build_root_datum(datum_type_for_dual(t));
    ChamberPoint p = as_point ? point_from_fundamental(d, parse_vector(target)) : central_point(find_orbit(t, target));
    const WeightPattern w = weight_pattern(weights_of(*d, rep), p);
    if (opt.format == Format::Json) {
        json j = report::document("satake.weight_pattern");
        j["dual_type"] = t.name();
        j["rep"] = rep.name();
        j["point"] = report::to_json(p);
        j["pattern"] = report::to_json(w);
        print(j);
    } else if (opt.format == Format::Tsv) {
        std::cout << "i\tn\n";
        for (auto& [i, m] : w.entries()) std::cout << i << "\t" << m << "\n";
    } else {
        std::cout << w.max_index() << " | " << w.row_string() << "\n";
    }
    return 0;
}

int cmd_orbit_from_pattern(std::vector<std::string> args, const Options& opt, std::optional<int> halfspin) {
    const SimpleType t = take_type(args);
    const WeightPattern row = WeightPattern::parse_row(join(args, ","));
    const auto o = orbit_from_pattern(t, row, halfspin);
    if (opt.format == Format::Json) {
        json j = report::document("satake.orbit_from_pattern");
        j["dual_type"] = t.name();
        j["row"] = row.nonnegative_row();
        j["orbit"] = report::to_json(o);
        print(j);
    } else {
        std::cout << o.full_label() << "\n";
    }
    return 0;
}

int cmd_cs_4a1(std::vector<std::string> args, const Options& opt, bool scan) {
    if (scan) {
        no_more(args);
        const auto res = cs_e8_4a1_grid_scan(Rational(1, 4), Rational(2));
        if (opt.format == Format::Json) {
            json j = report::document("satake.cs_4a1_scan");
            j["step"] = "1/4";
            j["bound"] = "2";
            j["scanned"] = res.scanned;
            j["extra_region_members"] = json::array();
            for (auto& q : res.members) j["extra_region_members"].push_back(report::to_json(RationalVector(q.begin(), q.end())));
            print(j);
        } else {
            std::cout << "scanned " << res.scanned << " quarter-integral points, " << res.members.size()
                      << " in the extra region\n";
        }
        return 0;
    }
    if (args.size() != 4) throw UsageError("cs-4a1 expects nu1 nu2 nu3 nu4 (or --scan)");
    Quad q;
    for (int i = 0; i < 4; ++i) q[i] = Rational::parse(args[i]);
    const bool member = cs_e8_4a1_member(q);
    const bool extra = cs_e8_4a1_extra_region(q);
    const auto d = build_root_datum(SimpleType::parse("E8"));
    const ChamberPoint s = dominant_representative(ChamberPoint{d, cs_e8_4a1_parameter(q)});
    if (opt.format == Format::Json) {
        json j = report::document("satake.cs_4a1");
        j["nu"] = report::to_json(RationalVector(q.begin(), q.end()));
        j["member"] = member;
        j["extra_region"] = extra;
        j["parameter"] = report::to_json(s);
        j["adjoint_half_integral"] = is_adjoint_half_integral(s);
        print(j);
    } else {
        std::cout << "member " << (member ? "yes" : "no") << "  extra-region " << (extra ? "yes" : "no") << "\n"
                  << "Re(s) = " << format_fundamental(s.fundamental_coordinates()) << "\n";
    }
    return 0;
}

int cmd_regions(std::vector<std::string> args, const Options& opt, bool enumerate) {
    const SimpleType t = take_type(args);
    no_more(args);
    const auto count = count_chamber_regions(t);
    std::optional<std::size_t> found;
    std::vector<ChamberRegion> regions;
    if (enumerate) {
        regions = enumerate_chamber_regions(t);
        found = regions.size();
    }
    if (opt.format == Format::Json) {
        json j = report::document("satake.regions");
        j["type"] = t.name();
        j["formula"] = count;
        if (found) {
            j["enumerated"] = *found;
            j["witnesses"] = json::array();
            for (auto& r : regions) j["witnesses"].push_back(report::to_json(r.witness));
        }
        print(j);
    } else {
        std::cout << count << "\n";
        if (found) std::cout << "enumerated " << *found << "\n";
    }
    return 0;
}

int cmd_fold(std::vector<std::string> args, const Options& opt) {
    const SimpleType t = take_type(args);
    const int order = std::stoi(take(args, "automorphism order"));
    no_more(args);
    const auto res = quasi_split_analysis(t, order);
    if (opt.format == Format::Json) {
        print(report::quasi_split_report(t, order, res));
        return 0;
    }
    std::cout << t.name() << " / " << order << " -> " << res.folded.name() << "\n";
    std::cout << "candidates: " << points_line(res.candidates) << "\n";
    std::cout << "available: " << join(res.available_reps, "; ") << "\n";
    for (auto& s : res.trace) std::cout << "# " << format_fundamental(s.candidate) << ": " << s.reason << "\n";
    std::cout << "points: " << points_line(res.points) << "\n";
    return 0;
}

void print_verdict(const Marginals& m, const PropertyAVerdict& v, const Options& opt) {
    if (opt.format == Format::Json) {
        json j = report::document("satake.property_a");
        j["n_u"] = report::to_json(m.n_u);
        j["n_v"] = report::to_json(m.n_v);
        j["verdict"] = report::to_json(v);
        print(j);
        return;
    }
    std::set<int, std::greater<>> support;
    for (auto& [i, x] : m.n_u.entries()) support.insert(i);
    for (auto& [i, x] : m.n_v.entries()) support.insert(i);
    std::cout << "i\tn_u\tn_v\n";
    for (int i : support) std::cout << i << "\t" << m.n_u(i) << "\t" << m.n_v(i) << "\n";
    std::cout << v.str() << "\n";
}

int cmd_check_property_a(std::vector<std::string> args, const Options& opt, int random) {
    if (random > 0) {
        no_more(args);
        std::mt19937_64 rng(opt.seed);
        int violations = 0, truncations = 0;
        for (int k = 0; k < random; ++k) {
            const auto m = marginals(random_symmetric_matrix(rng));
            const auto v = property_a_check(m.n_u, m.n_v);
            violations += v.kind == PropertyAVerdict::Case::Violation;
            truncations += v.kind == PropertyAVerdict::Case::TruncationAt;
        }
        if (opt.format == Format::Json) {
            json j = report::document("satake.property_a_suite");
            j["seed"] = opt.seed;
            j["instances"] = random;
            j["violations"] = violations;
            j["truncations"] = truncations;
            print(j);
        } else {
            std::cout << random << " matrices, seed " << opt.seed << ": " << violations << " violations, "
                      << truncations << " truncations\n";
        }
        return violations == 0 ? 0 : 2;
    }
    const std::string path = take(args, "matrix file");
    no_more(args);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    const auto matrix = MarginalMatrix::parse_tsv(in);
    const auto m = marginals(matrix);
    print_verdict(m, property_a_check(m.n_u, m.n_v), opt);
    return 0;
}

int cmd_azs_table(std::vector<std::string> args, const Options& opt) {
    std::vector<AzsRow> rows;
    if (args.empty()) {
        rows = azs_elimination_table();
    } else {
        rows = azs_rows_for(take_type(args));
        no_more(args);
    }
    if (opt.format == Format::Json) {
        print(report::azs_report(rows));
        return 0;
    }
    std::cout << "type\torbit\tepsilon\trep\ti0\tn_v\tn_u\tverdict\tmatches\n";
    for (auto& r : rows) {
        std::string eps = "-";
        if (r.epsilon) {
            std::vector<std::string> parts;
            for (auto& [part, v] : *r.epsilon) parts.push_back(std::to_string(part) + ":" + std::to_string(v));
            eps = join(parts, ",");
        }
        std::cout << r.dual_type.name() << "\t" << r.orbit << "\t" << eps << "\t" << r.rep << "\t" << r.verdict.i0
                  << "\t" << r.verdict.n_v << "\t" << r.verdict.n_u << "\t" << r.verdict.str() << "\t"
                  << (r.matches() ? "yes" : "NO") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact root data, nilpotent orbits and half-integral unitary points"};
    app.require_subcommand(1);
    Options opt;
    std::string format = "paper-table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "tsv", "paper-table"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized suites")->capture_default_str();

    std::vector<std::string> args;
    bool trace = false, as_point = false, scan = false, enumerate = false;
    int random = 0;
    std::optional<int> halfspin;

    auto sub = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("args", args, "arguments")->allow_extra_args();
        s->fallthrough();
        return s;
    };
    auto* roots = sub("roots", "root datum: simple (co)roots, weights, coroot poset");
    auto* orbits = sub("orbits", "nilpotent orbit catalog of the dual group");
    auto* ftable = sub("filtration-table", "adjoint filtration rows of all orbits (exceptional types)");
    auto* half = sub("half-integral", "half-integral generic unitary points");
    half->add_flag("--trace", trace, "list eliminated candidates");
    auto* extra = sub("extraneous", "extraneous complementary-series points [orbit]");
    auto* central = sub("central-point", "central point 1/2 h of an orbit");
    auto* wpat = sub("weight-pattern", "weight pattern: TYPE ORBIT|POINT [REP]");
    wpat->add_flag("--point", as_point, "read the second argument as fundamental coordinates \"c1,c2,...\"");
    auto* ofp = sub("orbit-from-pattern", "identify an orbit from its filtration row");
    ofp->add_option("--halfspin-top", halfspin, "half-spin top level (very even D tie-break)");
    auto* cs = sub("cs-4a1", "E8 4A1 complementary series membership: nu1 nu2 nu3 nu4");
    cs->add_flag("--scan", scan, "scan the quarter-integral grid with nu4 < 2");
    auto* regions = sub("regions", "number of regions of the fundamental chamber");
    regions->add_flag("--enumerate", enumerate, "also enumerate regions exactly (rank <= 4)");
    auto* fold_cmd = sub("fold", "quasi-split reduction: TYPE ORDER");
    auto* pa = sub("check-property-a", "Property A verdict for a TSV matrix file");
    pa->add_option("--random", random, "run N seeded random symmetric matrices instead");
    auto* azs = sub("azs-table", "elimination table for extraneous points [TYPE]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    opt.format = format == "json" ? Format::Json : format == "tsv" ? Format::Tsv : Format::Text;

    try {
        if (roots->parsed()) return cmd_roots(args, opt);
        if (orbits->parsed()) return cmd_orbits(args, opt);
        if (ftable->parsed()) return cmd_filtration_table(args, opt);
        if (half->parsed()) return cmd_half_integral(args, opt, trace);
        if (extra->parsed()) return cmd_extraneous(args, opt);
        if (central->parsed()) return cmd_central_point(args, opt);
        if (wpat->parsed()) return cmd_weight_pattern(args, opt, as_point);
        if (ofp->parsed()) return cmd_orbit_from_pattern(args, opt, halfspin);
        if (cs->parsed()) return cmd_cs_4a1(args, opt, scan);
        if (regions->parsed()) return cmd_regions(args, opt, enumerate);
        if (fold_cmd->parsed()) return cmd_fold(args, opt);
        if (pa->parsed()) return cmd_check_property_a(args, opt, random);
        if (azs->parsed()) return cmd_azs_table(args, opt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
