#include "c2lab/grothendieck.hpp"

#include "c2lab/canon.hpp"
#include "c2lab/kirchhoff.hpp"
#include "c2lab/relations.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

namespace c2lab {

namespace {

const LPoly kL = LPoly::L();

bool is_bridge(const Graph& g, int e) {
    if (g.edge(e).is_loop()) return false;
    return minor(g, {e}, {}).graph.component_count() > g.component_count();
}

// One series-parallel step; rec computes classes of the resulting minors.
template <class Rec>
std::optional<std::optional<LPoly>> sp_rule(const Graph& g, Rec&& rec) {
    const int n = g.edge_count();
    auto M = [&](const std::vector<int>& del, const std::vector<int>& con) { return rec(minor(g, del, con).graph); };
    using R = std::optional<std::optional<LPoly>>;
    for (int e = 1; e <= n; ++e) {
        if (!g.edge(e).is_loop()) continue;
        auto a = M({e}, {});
        if (!a) return R(std::optional<LPoly>());
        return R((kL - LPoly(1)) * *a + LPoly::L(n - 1));
    }
    for (int e = 1; e <= n; ++e) {
        if (!is_bridge(g, e)) continue;
        auto a = M({}, {e});
        if (!a) return R(std::optional<LPoly>());
        return R(kL * *a);
    }
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (g.degree(v) != 2) continue;
        auto es = g.incident_edges(v);
        if (es.size() != 2) continue;
        auto a = M({}, {es[0]});
        if (!a) return R(std::optional<LPoly>());
        return R(kL * *a);
    }
    for (int e1 = 1; e1 <= n; ++e1) {
        for (int e2 = e1 + 1; e2 <= n; ++e2) {
            if (!(g.edge(e1) == g.edge(e2))) continue;
            auto a = M({e1}, {}), b = M({e1, e2}, {}), c = M({e1}, {e2});
            if (!a || !b || !c) return R(std::optional<LPoly>());
            return R((kL - LPoly(2)) * *a + (kL - LPoly(1)) * *b + kL * *c + LPoly::L(n - 2));
        }
    }
    return std::nullopt;
}

// Shared memo tables across queries.
struct Memo {
    std::mutex mu;
    std::unordered_map<std::string, LPoly> psi, bracket;
    std::optional<LPoly> get(std::unordered_map<std::string, LPoly>& m, const std::string& k) {
        std::lock_guard<std::mutex> lock(mu);
        auto it = m.find(k);
        if (it == m.end()) return std::nullopt;
        return it->second;
    }
    void put(std::unordered_map<std::string, LPoly>& m, const std::string& k, const LPoly& v) {
        std::lock_guard<std::mutex> lock(mu);
        m.emplace(k, v);
    }
};

Memo& memo() {
    static Memo m;
    return m;
}

int far_end(const Graph& g, int e, int v) {
    const Edge& ed = g.edge(e);
    return ed.u == v ? ed.v : ed.u;
}

std::string describe(const Graph& g) { return std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges"; }

class Vw3 {
public:
    explicit Vw3(Vw3Stats* stats) : stats_(stats ? stats : &local_) {}

    LPoly psi(const Graph& g) {
        ++stats_->psi_calls;
        const int n = g.edge_count();
        if (g.is_zero() || !g.is_connected()) return LPoly::L(n);
        if (n == 0) return LPoly();
        const std::string key = canonical_certificate(g);
        if (auto hit = memo().get(memo().psi, key)) {
            ++stats_->memo_hits;
            return *hit;
        }
        LPoly r = psi_uncached(g);
        memo().put(memo().psi, key, r);
        return r;
    }

    LPoly bracket(const Graph& g, int e1, int e2, int e3) {
        ++stats_->bracket_calls;
        const int n = g.edge_count();
        if (g.is_zero()) throw std::logic_error("vertex bracket of the zero graph");
        const int v = three_valent_vertex(g, e1, e2, e3);
        if (!v) throw std::invalid_argument("edges do not form a 3-valent vertex");
        if (!g.is_connected()) return LPoly::L(n - 3);
        const std::string key = canonical_certificate(g, v);
        if (auto hit = memo().get(memo().bracket, key)) {
            ++stats_->memo_hits;
            return *hit;
        }
        LPoly r = bracket_uncached(g, v, {e1, e2, e3});
        memo().put(memo().bracket, key, r);
        return r;
    }

private:
    Vw3Stats local_;
    Vw3Stats* stats_;

    LPoly psi_uncached(const Graph& g) {
        auto rec = [&](const Graph& h) -> std::optional<LPoly> { return psi(h); };
        if (auto r = sp_rule(g, rec)) {
            ++stats_->series_parallel;
            return **r;
        }
        auto P = [&](const Graph& h) { return psi(h); };
        auto B = [&](const Graph& h, int a, int b, int c) { return bracket(h, a, b, c); };
        auto sv = find_split_vertex(g, {});
        auto st = find_split_triangle(g, {});
        auto score = [](std::initializer_list<int> es) { return std::max(es); };
        int s_sv = sv ? score({sv->a, sv->b, sv->c, sv->d, sv->e}) : 1 << 30;
        int s_st = st ? score({st->e1, st->e2, st->e3, st->e4, st->e5}) : 1 << 30;
        if (st && s_st < s_sv) {
            ++stats_->split_triangle;
            return split_triangle_class<LPoly>(g, *st, P, B, kL);
        }
        if (sv) {
            ++stats_->split_vertex;
            return split_vertex_class<LPoly>(g, *sv, P, B, kL);
        }
        throw UnreducedCase("simple graph with " + describe(g) + " has no split vertex or split triangle");
    }

    LPoly bracket_uncached(const Graph& g, int v, std::array<int, 3> es) {
        auto P = [&](const Graph& h) { return psi(h); };
        auto B = [&](const Graph& h, int a, int b, int c) { return bracket(h, a, b, c); };
        int far[3];
        for (int i = 0; i < 3; ++i) far[i] = far_end(g, es[i], v);
        const bool distinct = far[0] != far[1] && far[1] != far[2] && far[0] != far[2];
        if (distinct) {
            // Subdivided vertex edge.
            for (int i = 0; i < 3; ++i) {
                int w = far[i];
                if (g.degree(w) != 2) continue;
                auto inc = g.incident_edges(w);
                if (inc.size() != 2) continue;
                int e4 = inc[0] == es[i] ? inc[1] : inc[0];
                if (e4 == es[i] || g.edge(e4).is_loop()) continue;
                ++stats_->edge_split;
                return edge_split_bracket<LPoly>(g, es[0], es[1], es[2], e4, B, kL);
            }
            // Triangle on two vertex edges.
            for (int i = 0; i < 3; ++i) {
                int a = es[i], b = es[(i + 1) % 3], c = es[(i + 2) % 3];
                int x = far[i], y = far[(i + 1) % 3];
                for (int e4 = 1; e4 <= g.edge_count(); ++e4) {
                    const Edge& ed = g.edge(e4);
                    if (!((ed.u == x && ed.v == y) || (ed.u == y && ed.v == x))) continue;
                    ++stats_->triangle;
                    return triangle_bracket<LPoly>(g, a, b, c, e4, P, B, kL);
                }
            }
        }
        ++stats_->base_cases;
        VertexStructure s = three_valent_structure(g, es[0], es[1], es[2]);
        try {
            return class_of({s.f0, s.f1, s.f2, s.f3, s.f123}, g.edge_count()).divide_exact(LPoly::L(3));
        } catch (const UnreducedCase& e) {
            throw UnreducedCase(std::string("vertex bracket base case (") + (distinct ? "distinct" : "coinciding") +
                                " neighbours) on " + describe(g) + ": " + e.what());
        }
    }
};

}  // namespace

std::optional<LPoly> sp_class(const Graph& g) {
    const int n = g.edge_count();
    if (g.is_zero() || !g.is_connected()) return LPoly::L(n);
    if (n == 0) return LPoly();
    std::function<std::optional<LPoly>(const Graph&)> rec = [&](const Graph& h) { return sp_class(h); };
    auto r = sp_rule(g, rec);
    if (!r) return std::nullopt;
    return *r;
}

LPoly vertex_bracket(const Graph& g, int e1, int e2, int e3) {
    Vw3 engine(nullptr);
    return engine.bracket(g, e1, e2, e3);
}

LPoly vw3_class(const Graph& g, const std::vector<int>& ordering, Vw3Stats* stats) {
    const int n = g.edge_count();
    if (g.is_zero()) throw std::invalid_argument("vw3_class: zero graph");
    if (!g.is_connected()) throw std::invalid_argument("vw3_class: graph must be connected");
    std::vector<int> sorted = ordering;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(sorted.size()) != n || sorted[i] != i + 1)
            throw std::invalid_argument("vw3_class: ordering must be a permutation of the edges");
    int w = ordering_width(g, ordering);
    if (w > 3) throw std::invalid_argument("vw3_class: ordering has width " + std::to_string(w) + " > 3");
    Vw3 engine(stats);
    return engine.psi(reorder(g, ordering));
}

// ---------------------------------------------------------------------------
// Families.

Family parse_family(const std::string& name) {
    static const std::map<std::string, Family> m{{"W", Family::W},       {"Z", Family::Z},       {"B", Family::B},
                                                 {"Zbar", Family::Zbar}, {"What", Family::What}, {"Zhat", Family::Zhat}};
    auto it = m.find(name);
    if (it == m.end()) throw std::invalid_argument("unknown family: " + name);
    return it->second;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::W: return "W";
        case Family::Z: return "Z";
        case Family::B: return "B";
        case Family::Zbar: return "Zbar";
        case Family::What: return "What";
        case Family::Zhat: return "Zhat";
    }
    return "?";
}

namespace {

struct FamilyTables {
    std::vector<LPoly> b, what, w, z, zbar, zhat;

    void extend(int n) {
        const LPoly L = kL, L2 = L * L, one(1);
        auto Lp = [](int e) { return e < 0 ? LPoly() : LPoly::L(e); };
        auto at = [](const std::vector<LPoly>& v, int i) { return i < 0 ? LPoly() : v.at(i); };
        while (static_cast<int>(b.size()) <= n) {
            const int k = static_cast<int>(b.size());
            if (k == 0) b.push_back(LPoly());
            else if (k == 1) b.push_back(one);
            else b.push_back(L * (L - one) * b[k - 1] + L2 * (L - one) * b[k - 2] + Lp(2 * k - 3));
        }
        while (static_cast<int>(what.size()) <= n) {
            const int k = static_cast<int>(what.size());
            if (k <= 2) what.push_back(LPoly());
            else if (k == 3) what.push_back(one);
            else what.push_back(((L2 * L - L2) * what[k - 1] + b[k - 1] + L * b[k - 2] - Lp(2 * k - 4)).divide_exact(L));
        }
        while (static_cast<int>(w.size()) <= n) {
            const int k = static_cast<int>(w.size());
            if (k == 0) w.push_back(LPoly());
            else if (k == 1) w.push_back(L);
            else if (k == 2) w.push_back(LPoly::L(3));
            else
                w.push_back(-(L - one) * w[k - 1] - (L - L2) * (b[k - 1] - L2 * at(b, k - 3)) +
                            (LPoly::L(5) - LPoly::L(4)) * what[k - 1] + Lp(2 * k - 4) * (LPoly::L(3) + L - one));
        }
        while (static_cast<int>(z.size()) <= n) {
            const int k = static_cast<int>(z.size());
            if (k == 0) {
                z.push_back(LPoly());
                zbar.push_back(one);
                zhat.push_back(LPoly());
            } else if (k == 1) {
                z.push_back(L + one);
                zbar.push_back(L2);
                zhat.push_back(LPoly());
            } else if (k == 2) {
                z.push_back(LPoly::L(3));
                zbar.push_back(LPoly::L(4) + LPoly::L(3) - L2);
                zhat.push_back(LPoly());
            } else {
                zhat.push_back(((L2 * L - L2) * zhat[k - 1] + zbar[k - 2] + L * b[k - 2] - Lp(2 * k - 4)).divide_exact(L));
                z.push_back(-(L - L2) * (zbar[k - 2] - L2 * at(b, k - 3)) - (L - one) * z[k - 1] +
                            (LPoly::L(5) - LPoly::L(4)) * zhat[k - 1] + Lp(2 * k - 4) * (LPoly::L(3) + L - one));
                zbar.push_back((L - LPoly(2)) * z[k] + (L - one) * L2 * zbar[k - 2] + L * zbar[k - 1] + Lp(2 * k - 1));
            }
        }
    }
};

}  // namespace

LPoly family_class(Family f, int n) {
    if (n < 0) throw std::invalid_argument("family_class: n must be non-negative");
    if (n > 512) throw std::invalid_argument("family_class: n above 512");
    static std::mutex mu;
    static FamilyTables t;
    std::lock_guard<std::mutex> lock(mu);
    t.extend(n);
    switch (f) {
        case Family::B: return t.b[n];
        case Family::What: return t.what[n];
        case Family::W: return t.w[n];
        case Family::Z: return t.z[n];
        case Family::Zbar: return t.zbar[n];
        case Family::Zhat: return t.zhat[n];
    }
    throw std::invalid_argument("unknown family");
}

// ---------------------------------------------------------------------------
// Generating series.

Series parse_series(const std::string& name) {
    static const std::map<std::string, Series> m{{"B", Series::B},       {"What", Series::What}, {"W", Series::W},
                                                 {"Zgen", Series::Zgen}, {"Z", Series::Z},       {"Zbar", Series::Zbar},
                                                 {"Zhat", Series::Zhat}};
    auto it = m.find(name);
    if (it == m.end()) throw std::invalid_argument("unknown series: " + name);
    return it->second;
}

std::string series_name(Series s) {
    switch (s) {
        case Series::B: return "B";
        case Series::What: return "What";
        case Series::W: return "W";
        case Series::Zgen: return "Zgen";
        case Series::Z: return "Z";
        case Series::Zbar: return "Zbar";
        case Series::Zhat: return "Zhat";
    }
    return "?";
}

namespace {

using RS = RationalSeries;

RS poly_t(std::vector<LPoly> c) { return RS(std::move(c), {LPoly(1)}); }

RS series_B() {
    const LPoly L = kL, L2 = L * L, one(1);
    RS t = RS::t();
    RS inner = RS(one) + poly_t({LPoly(), L}) / poly_t({one, -L2});
    return inner * t / poly_t({one, -(L - one) * L, -(L - one) * L2});
}

RS series_What() {
    const LPoly L = kL, L2 = L * L, one(1);
    RS t = RS::t();
    RS num = poly_t({one, L}) * t * series_B() - RS::t(2) / poly_t({one, -L2});
    return num / poly_t({L, -(L - one) * L2});
}

RS series_W() {
    const LPoly L = kL, L2 = L * L, one(1);
    RS num = RS(LPoly::L(4) - LPoly::L(3)) * series_What() + RS(L - one) * poly_t({one, LPoly(), -L2}) * series_B() +
             poly_t({one, LPoly(), -L + L2}) / poly_t({one, -L2});
    return num / poly_t({one, L - one}) * poly_t({LPoly(), L});
}

RS series_Zgen() {
    const LPoly L = kL, L2 = L * L, one(1), M = L - one;
    // P(x, y) at x = L, y = L t.
    const LPoly x = L;
    std::vector<LPoly> py(6);
    py[5] = x * (x - one).pow(3);
    py[4] = (x - one) * (LPoly(2) * x.pow(3) - LPoly(3) * x * x + x + one);
    py[3] = (x - one) * (x.pow(3) - LPoly(3) * x * x + LPoly(2) * x + one);
    py[2] = -(LPoly(3) * x.pow(3) - LPoly(3) * x * x + LPoly(2));
    py[1] = -(x.pow(3) - x * x + one);
    py[0] = x * x + x + one;
    std::vector<LPoly> pt(6);
    for (int i = 0; i < 6; ++i) pt[i] = py[i] * L.pow(i);
    RS P = poly_t(pt);
    RS d1 = poly_t({one, -M * L, -M * L2});
    RS d2 = poly_t({one, -one, -M * M * L});
    return RS(one) / poly_t({one, -L2}) - RS(M * M * L2) * RS::t(3) * P / (d1 * d1 * d2);
}

// The three linear relations between Z, Zbar and Zhat, solved by Cramer's rule.
std::array<RS, 3> series_Z_system() {
    const LPoly L = kL, L2 = L * L, one(1);
    RS B = series_B();
    RS R = RS::t() / poly_t({one, -L2});
    RS zero(LPoly{});
    // Unknown order: Z, Zbar, Zhat.
    RS m[3][3] = {{RS(-(L - LPoly(2))), poly_t({one, -L, L2 * (one - L)}), zero},
                  {zero, poly_t({LPoly(), LPoly(), -L2}), poly_t({L2 * L, -(LPoly::L(5) - LPoly::L(4))})},
                  {poly_t({one, L - one}), poly_t({LPoly(), LPoly(), L - L2}), poly_t({LPoly(), -(LPoly::L(5) - LPoly::L(4))})}};
    RS rhs[3] = {poly_t({one, LPoly(2) - L}) + RS(L) * R, RS::t() - R + RS(L2 * L) * RS::t(2) * B,
                 poly_t({LPoly(), L + one}) + RS(L - L2) * RS(L2) * RS::t(3) * B + RS(LPoly::L(3) + L - one) * RS::t() * R};
    auto det3 = [](const RS a[3][3]) {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
    RS d = det3(m);
    std::array<RS, 3> out{zero, zero, zero};
    for (int k = 0; k < 3; ++k) {
        RS mk[3][3] = {{m[0][0], m[0][1], m[0][2]}, {m[1][0], m[1][1], m[1][2]}, {m[2][0], m[2][1], m[2][2]}};
        for (int i = 0; i < 3; ++i) mk[i][k] = rhs[i];
        out[k] = det3(mk) / d;
    }
    return out;
}

}  // namespace

RationalSeries generating_series(Series s) {
    switch (s) {
        case Series::B: return series_B();
        case Series::What: return series_What();
        case Series::W: return series_W();
        case Series::Zgen: return series_Zgen();
        case Series::Z: return series_Z_system()[0];
        case Series::Zbar: return series_Z_system()[1];
        case Series::Zhat: return series_Z_system()[2];
    }
    throw std::invalid_argument("unknown series");
}

std::vector<LPoly> series_coeffs(Series s, int n_max) {
    if (n_max < 0 || n_max > 64) throw std::invalid_argument("series_coeffs: n_max must be in 0..64");
    return generating_series(s).coefficients(n_max);
}

}  // namespace c2lab
