#include "c2lab/cli.hpp"

#include "c2lab/checks.hpp"
#include "c2lab/field.hpp"
#include "c2lab/graph.hpp"
#include "c2lab/grothendieck.hpp"
#include "c2lab/kirchhoff.hpp"
#include "c2lab/modular.hpp"
#include "c2lab/pointcount.hpp"
#include "c2lab/reduction.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <climits>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>

namespace c2lab {

namespace {

using Json = nlohmann::ordered_json;

// Raised for a failed check; maps to exit code 1.
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    bool json = false;
    bool timing = false;
    std::string cache_dir;
    int jobs = 1;
    double budget = 2e11;
    std::uint64_t seed = 1;

    CountOptions count_options() const {
        CountOptions o;
        o.jobs = jobs;
        o.budget = budget;
        o.cache_dir = cache_dir;
        if (o.cache_dir.empty()) {
            if (const char* env = std::getenv("C2LAB_CACHE")) o.cache_dir = env;
        }
        return o;
    }
};

Json json_int(const Int& x) {
    if (x >= LLONG_MIN && x <= LLONG_MAX) return Json(static_cast<long long>(x));
    return Json(x.str());
}

Json lpoly_coeffs(const LPoly& p) {
    Json a = Json::array();
    for (const Int& c : p.coeffs()) a.push_back(json_int(c));
    return a;
}

// L^k*(...) with the lowest power of L pulled out.
std::string factored(const LPoly& p) {
    if (p.is_zero()) return "0";
    int low = 0;
    while (p.coeff(low) == 0) ++low;
    if (low == 0) return p.to_string();
    LPoly rest(std::vector<Int>(p.coeffs().begin() + low, p.coeffs().end()));
    std::string head = low == 1 ? "L" : "L^" + std::to_string(low);
    if (rest == LPoly(1)) return head;
    return head + "*(" + rest.to_string() + ")";
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::pair<int, int> parse_range(const std::string& s) {
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            int n = std::stoi(s);
            return {n, n};
        }
        return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad range '" + s + "', expected a..b");
    }
}

std::vector<FqSpec> fields(const std::vector<int>& qs) {
    std::vector<FqSpec> f;
    for (int q : qs) f.push_back(FqSpec::of_size(q));
    return f;
}

// Runs fn(i) for i in [0, n) with at most `jobs` in flight; results in index order.
template <class T, class Fn>
std::vector<T> parallel_map(int n, int jobs, Fn fn) {
    std::vector<T> out(n);
    std::vector<std::future<void>> running;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(running.size()) >= std::max(1, jobs)) {
            running.front().get();
            running.erase(running.begin());
        }
        running.push_back(std::async(std::launch::async, [&, i] { out[i] = fn(i); }));
    }
    for (auto& r : running) r.get();
    return out;
}

std::vector<int> default_dodgson_edges(const Graph& g) {
    for (int v = 1; v <= g.vertex_count(); ++v) {
        auto inc = g.incident_edges(v);
        if (g.degree(v) == 3 && inc.size() == 3) return inc;
    }
    return {1, 2, 3};
}

int cmd_psi(const Common& c, const std::string& src, bool at_ones, std::ostream& out) {
    Graph g = load_graph(src);
    MultiPoly psi = graph_polynomial(g);
    Json j;
    j["graph"] = src;
    j["edges"] = g.edge_count();
    j["loops"] = loop_number(g);
    if (at_ones) {
        Int v = psi.evaluate(std::vector<Int>(g.edge_count(), Int(1)));
        j["at_ones"] = json_int(v);
        if (!c.json) out << v << "\n";
    } else {
        j["terms"] = psi.size();
        j["polynomial"] = psi.to_string();
        if (!c.json) out << psi.to_string() << "\n";
    }
    if (c.json) emit(out, j);
    return 0;
}

int cmd_dodgson(const Common& c, const std::string& src, const std::vector<int>& I, const std::vector<int>& J,
                const std::vector<int>& K, std::ostream& out) {
    Graph g = load_graph(src);
    MultiPoly d = dodgson(g, I, J, K);
    if (c.json) {
        Json j;
        j["graph"] = src;
        j["I"] = I;
        j["J"] = J;
        j["K"] = K;
        j["terms"] = d.size();
        j["polynomial"] = d.to_string();
        emit(out, j);
    } else {
        out << d.to_string() << "\n";
    }
    return 0;
}

int cmd_five(const Common& c, const std::string& src, const std::vector<int>& e, std::ostream& out) {
    if (e.size() != 5) throw std::invalid_argument("five-inv needs exactly five edges");
    Graph g = load_graph(src);
    MultiPoly d = five_invariant(g, {e[0], e[1], e[2], e[3], e[4]});
    if (c.json) {
        Json j;
        j["graph"] = src;
        j["edges"] = e;
        j["terms"] = d.size();
        j["polynomial"] = d.to_string();
        emit(out, j);
    } else {
        out << d.to_string() << "\n";
    }
    return 0;
}

ReductionTrace make_trace(const Graph& g, std::vector<int> order, bool automatic) {
    if (automatic) {
        if (order.empty()) order = {1, 2, 3, 4, 5};
        if (order.size() < 5) throw std::invalid_argument("--auto needs five initial edges");
        order.resize(5);
        return denominator_reduce_auto(g, order);
    }
    if (order.empty())
        for (int e = 1; e <= g.edge_count(); ++e) order.push_back(e);
    return denominator_reduce(g, order);
}

int cmd_denom(const Common& c, const std::string& src, const std::vector<int>& order, bool automatic, std::ostream& out) {
    Graph g = load_graph(src);
    ReductionTrace t = make_trace(g, order, automatic);
    if (c.json) {
        Json j = Json::parse(trace_json(t));
        emit(out, j);
        return 0;
    }
    out << "order " << join_ints(t.order) << "\n";
    for (const ReductionStep& s : t.steps) {
        out << "D^" << s.n;
        if (s.variable) out << " [" << variable_name(s.variable) << "]";
        out << " terms=" << s.poly.size() << " : " << s.poly.to_string() << "\n";
    }
    out << "status " << status_name(t.status);
    if (t.status == ReductionStatus::Irreducible) out << "(" << t.stopped_at << ")";
    out << "\n";
    return 0;
}

int cmd_c2(const Common& c, const std::string& src, const std::vector<int>& qs, const std::string& route,
           const std::vector<int>& order, bool automatic, std::vector<int> edges, std::ostream& out) {
    Graph g = load_graph(src);
    if (edges.empty()) edges = default_dodgson_edges(g);
    if (edges.size() != 3) throw std::invalid_argument("--edges needs three edges for the Dodgson route");
    std::vector<FqSpec> fs = fields(qs);
    std::vector<C2Route> routes;
    if (route == "direct" || route == "all") routes.push_back(C2Route::Direct);
    if (route == "dodgson" || route == "all") routes.push_back(C2Route::Dodgson);
    if (route == "denom" || route == "all") routes.push_back(C2Route::Denom);
    std::optional<ReductionTrace> trace;
    if (route == "denom" || route == "all") trace = make_trace(g, order, automatic);

    CountOptions opt = c.count_options();
    const int tasks = static_cast<int>(fs.size() * routes.size());
    if (tasks > 1) opt.jobs = 1;
    auto results = parallel_map<C2Value>(tasks, c.jobs, [&](int i) {
        const FqSpec& f = fs[i / routes.size()];
        switch (routes[i % routes.size()]) {
            case C2Route::Direct: return c2_direct(g, f, opt);
            case C2Route::Dodgson: return c2_dodgson(g, f, {edges[0], edges[1], edges[2]}, opt);
            case C2Route::Denom: return c2_denom(*trace, f, opt);
        }
        throw std::logic_error("unknown route");
    });

    bool agree = true;
    for (std::size_t k = 0; k < fs.size(); ++k)
        for (std::size_t r = 1; r < routes.size(); ++r)
            agree = agree && results[k * routes.size() + r].residue == results[k * routes.size()].residue;

    Json j;
    j["graph"] = src;
    j["edges"] = g.edge_count();
    j["loops"] = loop_number(g);
    if (trace) {
        j["order"] = trace->order;
        j["denominator_n"] = trace->last_n();
        j["status"] = status_name(trace->status);
    }
    j["entries"] = Json::array();
    for (const C2Value& v : results) {
        Json e;
        e["q"] = v.q;
        e["route"] = route_name(v.route);
        e["residue"] = v.residue;
        e["mod_p"] = v.mod_p;
        e["count"] = json_int(v.count);
        if (c.timing) e["seconds"] = v.seconds;
        j["entries"].push_back(e);
    }
    j["agree"] = agree;
    if (c.json) {
        emit(out, j);
    } else {
        for (const C2Value& v : results) {
            out << "q=" << v.q << " " << route_name(v.route) << " c2=" << v.residue;
            if (v.q != FqSpec::of_size(v.q).p()) out << " (mod p: " << v.mod_p << ")";
            if (c.timing) out << " " << v.seconds << "s";
            out << "\n";
        }
        if (routes.size() > 1) out << (agree ? "routes agree" : "ROUTES DISAGREE") << "\n";
    }
    if (!agree) throw CheckFailed("c2 routes disagree");
    return 0;
}

int cmd_count(const Common& c, const std::string& path, const std::vector<int>& qs, int dim, std::ostream& out) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read polynomial file " + path);
    std::vector<MultiPoly> sys;
    std::vector<std::string> text;
    std::string line;
    int top = 0;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        MultiPoly p = parse_poly(line);
        for (int v : p.variables()) top = std::max(top, v);
        text.push_back(p.to_string());
        sys.push_back(std::move(p));
    }
    if (sys.empty()) throw std::invalid_argument("no polynomials in " + path);
    if (dim == 0) dim = top;
    std::vector<FqSpec> fs = fields(qs);
    CountOptions opt = c.count_options();
    if (fs.size() > 1) opt.jobs = 1;
    auto counts = parallel_map<Int>(static_cast<int>(fs.size()), c.jobs, [&](int i) { return count_affine(sys, fs[i], dim, opt); });
    if (c.json) {
        Json j;
        j["file"] = path;
        j["polynomials"] = text;
        j["dim"] = dim;
        j["counts"] = Json::array();
        for (std::size_t i = 0; i < fs.size(); ++i) {
            Json e;
            e["q"] = fs[i].q();
            e["count"] = json_int(counts[i]);
            j["counts"].push_back(e);
        }
        emit(out, j);
    } else {
        for (std::size_t i = 0; i < fs.size(); ++i) out << "q=" << fs[i].q() << " count=" << counts[i] << "\n";
    }
    return 0;
}

int cmd_class(const Common& c, const std::string& src, const std::string& method, std::ostream& out) {
    Graph g = load_graph(src);
    LPoly cls;
    Json j;
    j["graph"] = src;
    j["method"] = method;
    if (method == "sp") {
        auto r = sp_class(g);
        if (!r) throw CheckFailed(src + " is not series-parallel reducible");
        cls = *r;
    } else {
        auto ordering = vertex_width(g, 3);
        if (!ordering) throw CheckFailed(src + " has vertex width above 3");
        cls = vw3_class(g, *ordering);
        j["ordering"] = *ordering;
    }
    j["coefficients"] = lpoly_coeffs(cls);
    j["class"] = cls.to_string();
    j["factored"] = factored(cls);
    if (c.json) emit(out, j);
    else out << cls.coeff_list() << "\n" << factored(cls) << "\n";
    return 0;
}

int cmd_family(const Common& c, const std::string& name, const std::string& range, bool series, std::ostream& out) {
    auto [lo, hi] = parse_range(range);
    if (lo < 1 || hi < lo) throw std::invalid_argument("bad range " + range);
    Family fam = parse_family(name);
    std::vector<LPoly> from_series;
    if (series) {
        if (hi > 64) throw std::invalid_argument("series coefficients need n <= 64");
        from_series = series_coeffs(parse_series(name), hi);
    }
    Json j;
    j["family"] = family_name(fam);
    j["source"] = series ? "series" : "recurrence";
    j["classes"] = Json::array();
    for (int n = lo; n <= hi; ++n) {
        LPoly p = series ? from_series[n] : family_class(fam, n);
        Json e;
        e["n"] = n;
        e["coefficients"] = lpoly_coeffs(p);
        e["class"] = p.to_string();
        e["factored"] = factored(p);
        j["classes"].push_back(e);
        if (!c.json) out << family_name(fam) << n << " = " << factored(p) << "\n";
    }
    if (c.json) emit(out, j);
    return 0;
}

int cmd_counterexample(const Common& c, int pmax, bool with_graph, std::ostream& out) {
    CountOptions opt = c.count_options();
    CounterexampleReport r = verify_counterexample(pmax, with_graph, opt);
    if (c.json) {
        emit(out, Json::parse(counterexample_json(r)));
    } else {
        for (const PrimeRow& row : r.rows) {
            out << "p=" << row.p << " a_p=" << row.a_p << " b_p=" << row.b_p << " [J]=" << row.j_count
                << " 2-[J]=" << row.c2 << " -a^2=" << row.minus_a2 << " -b=" << row.minus_b;
            if (row.graph_c2) out << " graph=" << *row.graph_c2;
            out << (row.ok ? " ok" : " FAIL " + row.failure) << "\n";
        }
        out << "witness residues:";
        for (long long x : r.witness_residues) out << " " << x;
        out << (r.witness_ok ? " ok" : " (fewer than 3)") << "\n";
    }
    if (!r.ok()) throw CheckFailed("counterexample congruences failed");
    return 0;
}

int cmd_k3(const Common& c, std::ostream& out) {
    K3Report r = k3_checks();
    if (c.json) {
        emit(out, Json::parse(k3_json(r)));
    } else {
        for (const CheckItem& it : r.items) out << (it.ok ? "ok   " : "FAIL ") << it.name << " " << it.detail << "\n";
    }
    if (!r.ok()) throw CheckFailed("K3 checks failed");
    return 0;
}

int cmd_check(const Common& c, const std::string& suite, int instances, std::ostream& out) {
    std::vector<SuiteResult> all = run_all_suites(instances, c.seed);
    std::vector<SuiteResult> picked;
    for (auto& r : all)
        if (suite.empty() || r.name == suite) picked.push_back(r);
    if (picked.empty()) throw std::invalid_argument("unknown suite: " + suite);
    bool ok = true;
    Json j;
    j["seed"] = c.seed;
    j["instances"] = instances;
    j["suites"] = Json::array();
    for (auto& r : picked) {
        bool pass = r.ok(instances);
        ok = ok && pass;
        Json e;
        e["name"] = r.name;
        e["checked"] = r.checked;
        e["failures"] = r.failures;
        e["pass"] = pass;
        if (!r.first_failure.empty()) e["first_failure"] = r.first_failure;
        j["suites"].push_back(e);
        if (!c.json) {
            out << (pass ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " instances, " << r.failures << " failures)";
            if (!r.first_failure.empty()) out << ": " << r.first_failure;
            out << "\n";
        }
    }
    if (c.json) emit(out, j);
    if (!ok) throw CheckFailed("identity suites failed");
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"c2lab: graph polynomials, denominator reduction, c2 invariants and Grothendieck classes"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", common.json, "JSON output");
        sub->add_flag("--timing", common.timing, "include wall times");
        sub->add_option("--cache-dir", common.cache_dir, "count cache directory (default $C2LAB_CACHE)");
        sub->add_option("--jobs", common.jobs, "worker threads")->check(CLI::Range(1, 256));
        sub->add_option("--budget", common.budget, "enumeration cost budget")->check(CLI::PositiveNumber);
        sub->add_option("--seed", common.seed, "seed for randomized suites");
    };

    std::string graph, route = "all", method = "vw3", range = "3..7", suite, family;
    std::vector<int> I, J, K, edges, order, qs{2, 3};
    bool at_ones = false, automatic = false, with_graph = false, series = false;
    int pmax = 50, instances = 100, dim = 0;

    auto* psi = app.add_subcommand("psi", "graph polynomial");
    psi->add_option("graph", graph, "built-in name or graph file")->required();
    psi->add_flag("--at-ones", at_ones, "evaluate at all ones (spanning tree count)");
    add_common(psi);

    auto* dod = app.add_subcommand("dodgson", "Dodgson polynomial Psi^{I,J}_K");
    dod->add_option("graph", graph)->required();
    dod->add_option("--I", I)->delimiter(',');
    dod->add_option("--J", J)->delimiter(',');
    dod->add_option("--K", K)->delimiter(',');
    add_common(dod);

    auto* five = app.add_subcommand("five-inv", "5-invariant");
    five->add_option("graph", graph)->required();
    five->add_option("--edges", edges, "five edges (default 1,2,3,4,5)")->delimiter(',');
    add_common(five);

    auto* den = app.add_subcommand("denom", "denominator reduction trace");
    den->add_option("graph", graph)->required();
    den->add_option("--order", order, "edge order (prefix allowed)")->delimiter(',');
    den->add_flag("--auto", automatic, "greedy variable choice after the first five edges");
    add_common(den);

    auto* c2 = app.add_subcommand("c2", "c2 invariant");
    c2->add_option("graph", graph)->required();
    c2->add_option("--q", qs, "field sizes")->delimiter(',');
    c2->add_option("--route", route)->check(CLI::IsMember({"direct", "dodgson", "denom", "all"}));
    c2->add_option("--order", order, "edge order for the denominator route")->delimiter(',');
    c2->add_flag("--auto", automatic, "greedy denominator reduction");
    c2->add_option("--edges", edges, "three edges for the Dodgson route")->delimiter(',');
    add_common(c2);

    auto* cnt = app.add_subcommand("count", "affine point counts of a polynomial system");
    cnt->add_option("file", graph, "one polynomial per line")->required();
    cnt->add_option("--q", qs)->delimiter(',');
    cnt->add_option("--dim", dim, "ambient dimension (default: highest variable index)")->check(CLI::NonNegativeNumber);
    add_common(cnt);

    auto* cls = app.add_subcommand("class", "Grothendieck class of the graph hypersurface");
    cls->add_option("graph", graph)->required();
    cls->add_option("--method", method)->check(CLI::IsMember({"sp", "vw3"}));
    add_common(cls);

    auto* fam = app.add_subcommand("family", "wheel and zig-zag class tables");
    fam->add_option("name", family, "W, Z, B, Zbar, What or Zhat")->required();
    fam->add_option("--n", range, "range a..b");
    fam->add_flag("--series", series, "read coefficients off the generating series");
    add_common(fam);

    auto* cex = app.add_subcommand("counterexample", "modular congruences for G8");
    cex->add_option("--pmax", pmax)->check(CLI::Range(2, 200));
    cex->add_flag("--with-graph", with_graph, "also count the reduced G8 polynomial (p <= 7)");
    add_common(cex);

    auto* k3 = app.add_subcommand("k3", "K3 fixture checks");
    add_common(k3);

    auto* chk = app.add_subcommand("check", "identity and property suites");
    chk->add_option("--suite", suite, "run one suite by name");
    chk->add_option("--instances", instances)->check(CLI::Range(1, 100000));
    add_common(chk);

    std::vector<std::string> argv{"c2lab"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<const char*> raw;
    for (auto& a : argv) raw.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (psi->parsed()) return cmd_psi(common, graph, at_ones, out);
        if (dod->parsed()) return cmd_dodgson(common, graph, I, J, K, out);
        if (five->parsed()) return cmd_five(common, graph, edges.empty() ? std::vector<int>{1, 2, 3, 4, 5} : edges, out);
        if (den->parsed()) return cmd_denom(common, graph, order, automatic, out);
        if (c2->parsed()) return cmd_c2(common, graph, qs, route, order, automatic, edges, out);
        if (cnt->parsed()) return cmd_count(common, graph, qs, dim, out);
        if (cls->parsed()) return cmd_class(common, graph, method, out);
        if (fam->parsed()) return cmd_family(common, family, range, series, out);
        if (cex->parsed()) return cmd_counterexample(common, pmax, with_graph, out);
        if (k3->parsed()) return cmd_k3(common, out);
        if (chk->parsed()) return cmd_check(common, suite, instances, out);
    } catch (const CheckFailed& e) {
        err << "c2lab: " << e.what() << "\n";
        return 1;
    } catch (const CostError& e) {
        err << "c2lab: " << e.what() << " (raise --budget)\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "c2lab: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "c2lab: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "c2lab: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace c2lab
