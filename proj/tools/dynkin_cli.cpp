#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dynkin/verify/acceptance.hpp"

using namespace dynkin;
using json = io::json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string type = "A2";
    std::string orient;
    bool orient_set = false;
    int degree = 6;
    int window = 1;
    std::uint64_t seed = 1;
    bool json = false;
    std::string out;
    unsigned threads = 1;

    // command specific
    bool longest = false, shortest = false, all = false, flipped = false, totally = false, counterexample = false;
    std::size_t sample = 0, limit = 100000, samples = 100;
    std::string format = "json", charges, labels, input;
    long t = 10, budget = 100000;
    int sink = 0, N = 3, bound = 4;
    std::vector<int> criteria, expect_fail;
};

struct Output {
    const Options& o;
    void emit(const json& j, const std::string& text) const {
        if (!o.out.empty()) io::write_file(o.out, j.dump(2) + "\n");
        std::cout << (o.json ? j.dump(2) : text) << "\n";
    }
};

Quiver quiver_of(const Options& o, bool reference = false) {
    const TypeTag tag = TypeTag::parse(o.type);
    if (reference && !o.orient_set) return build_quiver(tag, parse_orientation(reference_orientation(tag)));
    return o.orient.empty() ? build_quiver(tag) : build_quiver(tag, parse_orientation(o.orient));
}

struct Ctx {
    DerivedCategory dc;
    HeartCalculus hc;
    explicit Ctx(const Quiver& q) : dc(q), hc(dc) {}
};

/// "(0,1) (1,1)@1 ..." as objects; shift defaults to 0.
std::vector<IndecObject> parse_objects(const DerivedCategory& dc, const std::string& text) {
    static const std::regex item(R"(\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)(?:@(-?\d+))?)");
    std::vector<IndecObject> out;
    for (std::sregex_iterator it(text.begin(), text.end(), item), end; it != end; ++it) {
        DimVec d;
        std::stringstream ss((*it)[1].str());
        for (std::string x; std::getline(ss, x, ',');) d.push_back(std::stoi(x));
        const auto r = dc.reps().find_root(d);
        if (!r) throw UsageError("not a positive root: " + dim_str(d));
        out.push_back({*r, (*it)[2].matched ? std::stoi((*it)[2].str()) : 0});
    }
    if (out.empty()) throw UsageError("no objects found in '" + text + "'");
    return out;
}

std::string names(const DerivedCategory& dc, const std::vector<IndecObject>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : " ") + dc.name(x);
    return s;
}

json path_json(const DerivedCategory& dc, const DirectedPath& p) {
    json l = json::array();
    for (const auto& x : p.labels) l.push_back(io::to_json(dc, x));
    return {{"vertices", p.vertices}, {"labels", l}};
}

StabilityFunction load_charges(const Options& o, int n) {
    if (o.charges.empty()) {
        const TypeTag tag = TypeTag::parse(o.type);
        if (tag.family == Family::D) return charges_d(n, o.t);
        return verify::reference_charges(o.type);
    }
    std::string path = o.charges;
    if (!std::filesystem::exists(path)) {
        const std::string alt = std::string(DYNKIN_DATA_DIR) + "/charges/" + o.charges;
        if (std::filesystem::exists(alt)) path = alt;
    }
    return io::charges_from_json(io::parse_json(io::read_file(path), path), n);
}

// ---- commands; each returns an exit code

int quiver_info(const Options& o) {
    const Quiver q = quiver_of(o);
    const auto roots = positive_roots(q);
    const int h = coxeter_number(q);
    json r = json::array();
    for (const auto& a : roots) r.push_back(a);
    Output{o}.emit({{"quiver", io::to_json(q)}, {"roots", roots.size()}, {"coxeter", h}, {"positive_roots", r},
                    {"euler", euler_matrix(q)}},
                   "type=" + q.type().str() + " orientation=" + q.orientation_str() + " roots=" + std::to_string(roots.size()) +
                       " h=" + std::to_string(h));
    return 0;
}

ExchangeGraph interval(const Options& o, const Ctx& c) {
    if (!o.input.empty()) return io::graph_from_json(c.hc, io::parse_json(io::read_file(o.input), o.input));
    if (o.window < 1) throw UsageError("--window must be at least 1");
    auto g = enumerate_interval(c.hc, c.hc.initial_heart(), o.window);
    g.set_faces(find_faces(c.hc, g));
    return g;
}

int eg(const std::string& verb, const Options& o) {
    Ctx c(quiver_of(o));
    const auto g = interval(o, c);
    std::size_t sq = 0;
    for (const auto& f : g.faces()) sq += f.kind == FaceKind::Square;
    const std::size_t pent = g.faces().size() - sq;
    Output out{o};
    if (verb == "enum") {
        json v = json::array();
        std::string text = std::to_string(g.vertices().size()) + " hearts, " + std::to_string(g.edges().size()) + " edges";
        for (const auto& h : g.vertices()) {
            v.push_back(io::to_json(c.dc, h));
            text += "\n  " + names(c.dc, h.simples()) + (c.hc.is_standard(h) ? "" : "  (non-standard)");
        }
        out.emit({{"hearts", g.vertices().size()}, {"edges", g.edges().size()}, {"vertices", v}}, text);
    } else if (verb == "faces") {
        out.emit({{"squares", sq}, {"pentagons", pent}},
                 std::to_string(sq) + " squares, " + std::to_string(pent) + " pentagons");
    } else if (verb == "h1") {
        const auto h = h1_of_complex(g, g.faces());
        json tor = json::array();
        for (const auto& x : h.torsion) tor.push_back(x.get_str());
        out.emit({{"betti", h.betti}, {"torsion", tor}, {"trivial", h.trivial()}},
                 h.trivial() ? "H1 = 0" : "H1 has rank " + std::to_string(h.betti) + " and " + std::to_string(h.torsion.size()) +
                                              " torsion factors");
        return h.trivial() ? 0 : 1;
    } else {  // export
        if (o.format == "dot") {
            const std::string dot = io::to_dot(c.dc, g);
            if (!o.out.empty()) io::write_file(o.out, dot);
            else std::cout << dot;
        } else if (o.format == "json") {
            const json j = io::to_json(c.dc, g);
            if (!o.out.empty()) io::write_file(o.out, j.dump(2) + "\n");
            else std::cout << j.dump(2) << "\n";
        } else {
            throw UsageError("unknown format " + o.format);
        }
    }
    return 0;
}

int paths_enum(const Options& o) {
    Ctx c(quiver_of(o));
    const auto g = interval(o, c);
    PathQuery pq(g, g.id(g.base()), g.id(g.base().shifted(g.k())));
    const auto [dis, dia] = pq.distance_diameter();
    std::vector<DirectedPath> paths;
    if (o.sample > 0) {
        gmp_randclass rng(gmp_randinit_default);
        rng.seed(static_cast<unsigned long>(o.seed));
        for (std::size_t k = 0; k < o.sample; ++k) paths.push_back(pq.sample(rng));
    } else {
        const auto mode = o.longest ? PathQuery::Mode::Longest : o.shortest ? PathQuery::Mode::Shortest : PathQuery::Mode::All;
        paths = pq.enumerate(mode, o.limit);
    }
    json a = json::array();
    std::string text = "paths=" + pq.total().get_str() + " distance=" + std::to_string(dis) + " diameter=" + std::to_string(dia) +
                       " listed=" + std::to_string(paths.size());
    for (const auto& p : paths) {
        a.push_back(path_json(c.dc, p));
        text += "\n  " + names(c.dc, p.labels);
    }
    Output{o}.emit({{"total", pq.total().get_str()}, {"distance", dis}, {"diameter", dia}, {"paths", a}}, text);
    return 0;
}

int strata_validate(const Options& o) {
    Ctx c(quiver_of(o));
    if (o.all) {
        std::size_t n = 0, valid = 0, dis = 0;
        for (const auto& s : verify::detail::all_sequences(c.dc.reps().root_count())) {
            const bool a = validate_stratum_by_path(c.hc, s);
            const bool b = validate_stratum_by_filtration(c.dc.reps(), s);
            ++n;
            valid += a;
            dis += a != b;
        }
        Output{o}.emit({{"sequences", n}, {"strata", valid}, {"disagreements", dis}},
                       std::to_string(n) + " sequences, " + std::to_string(valid) + " strata, " + std::to_string(dis) +
                           " disagreements");
        return dis ? 1 : 0;
    }
    HNStratum s;
    if (!o.input.empty()) s = io::stratum_from_json(c.dc, io::parse_json(io::read_file(o.input), o.input));
    else if (!o.labels.empty()) s.labels = parse_objects(c.dc, o.labels);
    else throw UsageError("strata validate needs --labels, --in or --all");
    const bool a = validate_stratum_by_path(c.hc, s);
    const bool b = validate_stratum_by_filtration(c.dc.reps(), s);
    Output{o}.emit({{"path", a}, {"filtration", b}, {"stratum", io::to_json(c.dc, s)}},
                   std::string(a && b ? "valid" : !a && !b ? "invalid" : "DISAGREE") + ": path " + (a ? "yes" : "no") +
                       ", filtration " + (b ? "yes" : "no"));
    return a && b ? 0 : 1;
}

int stab(const std::string& verb, const Options& o) {
    const Quiver q = o.counterexample ? build_quiver("D4", "2>1,3>1,4>1") : quiver_of(o, true);
    Ctx c(q);
    StabilityChecker sc(c.hc);
    Output out{o};
    if (verb == "check") {
        const auto z = load_charges(o, q.rank());
        const auto bad = sc.unstable(z);
        json u = json::array();
        std::string text;
        for (int m : bad) {
            u.push_back(c.dc.reps().root(m));
            text += " " + dim_str(c.dc.reps().root(m));
        }
        std::string head = "orientation " + q.orientation_str() + ": ";
        if (o.totally) head += bad.empty() ? "OK: every indecomposable is stable" : "FAIL: unstable" + text;
        else head += std::to_string(c.dc.reps().root_count() - static_cast<int>(bad.size())) + " stable, " +
                     std::to_string(bad.size()) + " unstable" + text;
        out.emit({{"orientation", q.orientation_str()}, {"charges", io::to_json(z)}, {"unstable", u}}, head);
        return o.totally && !bad.empty() ? 1 : 0;
    }
    // induce
    if (o.counterexample || !o.labels.empty()) {
        HNStratum target;
        if (o.counterexample) target = verify::counterexample_stratum(c.dc);
        else target.labels = parse_objects(c.dc, o.labels);
        const auto r = search_inducing(sc, target, o.budget, o.seed);
        json j{{"target", io::to_json(c.dc, target)}, {"evaluations", r.evaluations}, {"best_score", r.best_score},
               {"witness", r.witness ? io::to_json(*r.witness) : json(nullptr)}};
        out.emit(j, r.witness ? "witness found: " + j["witness"].dump()
                              : "no witness in " + std::to_string(r.evaluations) + " evaluations (best score " +
                                    std::to_string(r.best_score) + "); a miss is not a proof");
        return 0;
    }
    const auto z = load_charges(o, q.rank());
    const auto s = sc.induced_stratum(z);
    const bool ok = validate_stratum_by_path(c.hc, s);
    out.emit({{"stratum", io::to_json(c.dc, s)}, {"valid", ok}}, names(c.dc, s.labels) + (ok ? "" : "  (not a stratum)"));
    return ok ? 0 : 1;
}

int dt(const std::string& verb, const Options& o) {
    if (o.degree < 1) throw UsageError("--degree must be positive");
    Output out{o};
    if (verb == "pentagon") {
        const bool p = pentagon_check(o.degree, o.flipped);
        out.emit({{"degree", o.degree}, {"flipped", o.flipped}, {"holds", p}},
                 std::string(p ? "OK" : "FAIL") + ": pentagon " + (o.flipped ? "with flipped sign " : "") + "at degree " +
                     std::to_string(o.degree));
        return p ? 0 : 1;
    }
    if (verb == "wallcross") {
        const Quiver q = quiver_of(o);
        int sink = o.sink;
        if (!sink)
            for (int i = q.rank(); i >= 1 && !sink; --i)
                if (q.is_sink(i)) sink = i;
        const auto r = wall_crossing_check(q, sink, o.degree);
        out.emit({{"sink", sink}, {"region_hearts", r.region_hearts}, {"pairs", r.pairs}, {"ok", r.ok()}, {"detail", r.detail}},
                 std::string(r.ok() ? "OK" : "FAIL") + ": sink " + std::to_string(sink) + ", " + std::to_string(r.region_hearts) +
                     " hearts, " + std::to_string(r.pairs) + " pairs" + (r.detail.empty() ? "" : " (" + r.detail + ")"));
        return r.ok() ? 0 : 1;
    }
    Ctx c(quiver_of(o));
    if (verb == "ls-identity") {
        const auto r = ls_identity_check(c.hc, o.degree);
        const bool ok = r.equal && r.ties_commute;
        out.emit({{"equal", r.equal}, {"ties_commute", r.ties_commute}},
                 std::string(ok ? "OK" : "FAIL") + ": product over Ind H_Q " + (r.equal ? "equals" : "differs from") +
                     " product over Sim H_Q");
        return ok ? 0 : 1;
    }
    DTEngine e(c.hc, o.degree);
    if (verb == "compute") {
        const Series s = e.invariant();
        std::string text;
        for (const auto& [a, co] : s.terms()) text += (text.empty() ? "" : "\n") + dim_str(a) + "  " + co.str();
        out.emit({{"degree", o.degree}, {"terms", io::to_json(s)}}, text);
        return 0;
    }
    // verify
    PathPolicy pol;
    pol.kind = o.all ? PathPolicy::Kind::All : PathPolicy::Kind::LongestPlusSample;
    pol.samples = o.all ? 0 : o.samples;
    pol.seed = o.seed;
    const auto r = verify_path_independence(e, pol);
    out.emit({{"directed", r.directed}, {"signed", r.signed_paths}, {"equal", r.equal}, {"offending", r.offending}},
             r.equal ? "OK: " + std::to_string(r.directed + r.signed_paths) + " paths, series equal"
                     : "FAIL: " + r.offending);
    return r.equal ? 0 : 1;
}

int cy(const Options& o) {
    Ctx c(quiver_of(o));
    const auto q = cy_quotient(c.hc, o.N);
    bool ok = true;
    for (const auto& l : q.lines) ok = ok && static_cast<int>(l.size()) == o.N - 1;
    Output{o}.emit({{"N", o.N}, {"hearts", q.interval.vertices().size()}, {"lines", q.lines.size()}, {"closed", ok}},
                   std::string(ok ? "OK" : "FAIL") + ": " + std::to_string(q.interval.vertices().size()) + " hearts, " +
                       std::to_string(q.lines.size()) + " tilt lines closed into " + std::to_string(o.N - 1) + "-cycles");
    return ok ? 0 : 1;
}

int hall(const Options& o) {
    if (o.type != "A2") throw UsageError("hall verify supports A2 only");
    const auto r = verify_reineke(o.bound);
    json f = json::array();
    for (bool b : r.strata_factorizations) f.push_back(b);
    Output{o}.emit({{"bound", o.bound}, {"integrated_matches_dt", r.integrated_matches_dt}, {"coefficients", r.coefficients},
                    {"strata_factorizations", f}, {"ok", r.ok()}},
                   std::string(r.ok() ? "OK" : "FAIL") + ": " + std::to_string(r.coefficients) + " coefficients match DT at v=2, " +
                       std::to_string(r.strata_factorizations.size()) + " stratum factorizations" +
                       (r.detail.empty() ? "" : " (" + r.detail + ")"));
    return r.ok() ? 0 : 1;
}

int acceptance(const Options& o) {
    std::vector<int> ids = o.criteria;
    if (ids.empty())
        for (const auto& c : verify::criteria()) ids.push_back(c.id);
    const std::set<int> xfail(o.expect_fail.begin(), o.expect_fail.end());
    json a = json::array();
    std::string text;
    int unexpected = 0;
    for (const auto& r : verify::run_criteria(ids, o.threads)) {
        a.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
        text += (text.empty() ? "" : "\n") + verify::result_line(r);
        if (xfail.count(r.id) ? r.pass : !r.pass) ++unexpected;
    }
    Output{o}.emit(a, text);
    return unexpected ? 1 : 0;
}

void add_common(CLI::App* c, Options& o) {
    c->add_option("--type", o.type, "Dynkin type, e.g. A3, D4, E6");
    c->add_option("--orient", o.orient, "arrows as \"2>1,3>1\"")->each([&o](const std::string&) { o.orient_set = true; });
    c->add_option("--degree", o.degree, "truncation degree");
    c->add_option("--window", o.window, "interval H .. H[k]");
    c->add_option("--seed", o.seed, "random seed");
    c->add_flag("--json", o.json, "JSON on stdout");
    c->add_option("--out", o.out, "write output to file");
    c->add_option("--threads", o.threads, "worker cap")->check(CLI::Range(1u, 256u));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exchange graphs, HN strata and DT invariants of Dynkin quivers"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto verb_cmd = [&](const char* name, const char* help, std::vector<std::string> verbs,
                        std::function<int(const std::string&)> f) {
        auto* c = app.add_subcommand(name, help);
        c->require_subcommand(1);
        std::vector<CLI::App*> subs;
        for (const auto& v : verbs) {
            auto* s = c->add_subcommand(v);
            add_common(s, o);
            s->callback([&action, f, v] { action = [f, v] { return f(v); }; });
            subs.push_back(s);
        }
        return subs;
    };

    verb_cmd("quiver", "quiver data", {"info"}, [&](const std::string&) { return quiver_info(o); });

    for (auto* s : verb_cmd("eg", "exchange graph intervals", {"enum", "faces", "h1", "export"},
                            [&](const std::string& v) { return eg(v, o); })) {
        s->add_option("--in", o.input, "graph JSON to load instead of enumerating");
        if (s->get_name() == "export") s->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    }

    for (auto* s : verb_cmd("paths", "directed paths H -> H[k]", {"enum"}, [&](const std::string&) { return paths_enum(o); })) {
        s->add_flag("--longest", o.longest);
        s->add_flag("--shortest", o.shortest);
        s->add_option("--sample", o.sample, "uniformly sample N paths");
        s->add_option("--limit", o.limit, "stop after this many paths");
        s->add_option("--in", o.input, "graph JSON");
    }

    for (auto* s : verb_cmd("strata", "HN strata", {"validate"}, [&](const std::string&) { return strata_validate(o); })) {
        s->add_option("--labels", o.labels, "\"(0,1) (1,1) (1,0)\" in tilt order");
        s->add_option("--in", o.input, "stratum JSON");
        s->add_flag("--all", o.all, "every ordering of distinct indecomposables");
    }

    for (auto* s : verb_cmd("stab", "stability functions", {"check", "induce"}, [&](const std::string& v) { return stab(v, o); })) {
        s->add_option("--charges", o.charges, "charges JSON (looked up in data/charges if not found)");
        s->add_option("--t", o.t, "D_n parameter for the default charges");
        if (s->get_name() == "check") s->add_flag("--totally-stable", o.totally);
        else {
            s->add_option("--labels", o.labels, "target stratum to search for");
            s->add_flag("--counterexample", o.counterexample, "search for the D4 path on 2>1,3>1,4>1");
            s->add_option("--budget", o.budget, "search evaluations");
        }
    }

    for (auto* s : verb_cmd("dt", "DT invariants", {"compute", "verify", "pentagon", "ls-identity", "wallcross"},
                            [&](const std::string& v) { return dt(v, o); })) {
        const std::string n = s->get_name();
        if (n == "verify") {
            s->add_flag("--all", o.all, "every directed path");
            s->add_option("--samples", o.samples, "sampled signed paths besides the longest ones");
        }
        if (n == "pentagon") s->add_flag("--flipped", o.flipped, "opposite commutation sign");
        if (n == "wallcross") s->add_option("--sink", o.sink, "sink to reverse (default: largest sink)");
    }

    for (auto* s : verb_cmd("cy", "Calabi-Yau quotient", {"quotient"}, [&](const std::string&) { return cy(o); }))
        s->add_option("--N", o.N, "CY dimension")->check(CLI::Range(2, 12));

    for (auto* s : verb_cmd("hall", "Hall algebra oracle over GF(4)", {"verify"}, [&](const std::string&) { return hall(o); }))
        s->add_option("--bound", o.bound, "dimension bound")->check(CLI::Range(1, 6));

    auto* acc = app.add_subcommand("acceptance", "acceptance criteria");
    add_common(acc, o);
    acc->add_option("--criterion", o.criteria)->check(CLI::Range(1, 14));
    acc->add_option("--expect-fail", o.expect_fail)->check(CLI::Range(1, 14));
    acc->callback([&] { action = [&] { return acceptance(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
