#include "c2lab/pointcount.hpp"

#include "c2lab/kirchhoff.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace c2lab {

CostError::CostError(double est, double budget)
    : std::runtime_error("point count too expensive: estimated cost " + std::to_string(static_cast<long long>(est)) +
                         " exceeds budget " + std::to_string(static_cast<long long>(budget))),
      estimate(est) {}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string route_name(C2Route r) {
    switch (r) {
        case C2Route::Direct: return "DIRECT";
        case C2Route::Dodgson: return "DODGSON";
        case C2Route::Denom: return "DENOM";
    }
    return "?";
}

namespace {

Int int_pow(long long base, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

long long inv_mod(long long a, long long p) {
    long long r = 1, b = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

MultiPoly reduce_mod(const MultiPoly& f, int p) {
    std::vector<Term> t;
    t.reserve(f.size());
    for (auto& term : f.terms()) {
        long long c = mod_floor(term.coef, p);
        if (c) t.push_back({term.mono, Int(c)});
    }
    return MultiPoly::from_terms(std::move(t));
}

MultiPoly make_monic(const MultiPoly& f, int p) {
    long long lc = static_cast<long long>(f.leading().coef);
    if (lc == 1) return f;
    return reduce_mod(f.scaled(Int(inv_mod(lc, p))), p);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration with per-level coefficient collapse.

class Enumerator {
public:
    Enumerator(const std::vector<MultiPoly>& system, int k, const FqSpec& f) : f_(f), k_(k) {
        // Order: innermost variable has the smallest maximal degree; outer ones by frequency.
        std::vector<int> freq(k + 1, 0), maxdeg(k + 1, 0);
        for (auto& poly : system)
            for (auto& t : poly.terms())
                for (int v = 1; v <= k; ++v)
                    if (int e = t.mono.exponent(v)) {
                        ++freq[v];
                        maxdeg[v] = std::max(maxdeg[v], e);
                    }
        std::vector<int> vars(k);
        std::iota(vars.begin(), vars.end(), 1);
        int inner = *std::min_element(vars.begin(), vars.end(), [&](int a, int b) {
            return std::make_pair(maxdeg[a], -freq[a]) < std::make_pair(maxdeg[b], -freq[b]);
        });
        vars.erase(std::find(vars.begin(), vars.end(), inner));
        std::stable_sort(vars.begin(), vars.end(), [&](int a, int b) { return freq[a] > freq[b]; });
        vars.push_back(inner);
        order_ = vars;
        for (auto& poly : system) polys_.push_back(build(poly));
    }

    double cost() const {
        double c = 0, qj = 1;
        for (int j = 0; j < k_; ++j) {
            double t = 0;
            for (auto& lp : polys_) t += lp.size[j];
            c += qj * (t + 1);
            qj *= f_.q();
        }
        bool nonlinear = false;
        for (auto& lp : polys_) nonlinear |= lp.maxdeg_last > 1;
        if (nonlinear) c += qj;  // univariate scans at the last level
        return c;
    }

    Int run(int jobs) {
        const int q = f_.q();
        if (k_ == 0) throw std::logic_error("enumerator needs variables");
        jobs = std::max(1, std::min(jobs, q));
        std::vector<std::uint64_t> partial(jobs, 0);
        auto work = [&](int tid) {
            Context ctx = make_context();
            std::uint64_t s = 0;
            for (int x = tid; x < q; x += jobs) s += step(ctx, 0, static_cast<FqElem>(x));
            partial[tid] = s;
        };
        if (k_ == 1) {
            Context ctx = make_context();
            return Int(solve_last(ctx, 0));
        }
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::thread> th;
            for (int t = 0; t < jobs; ++t) th.emplace_back(work, t);
            for (auto& t : th) t.join();
        }
        Int total = 0;
        for (auto s : partial) total += s;
        return total;
    }

private:
    struct LevelPoly {
        std::vector<std::vector<int>> target;  // target[j][t] in level j+1
        std::vector<std::vector<std::uint8_t>> expo;
        std::vector<int> const_index;
        std::vector<int> size;
        std::vector<FqElem> c0;
        int maxdeg = 0;
        int maxdeg_last = 0;
    };
    struct Context {
        std::vector<std::vector<std::vector<FqElem>>> buf;  // [level][poly][term]
        std::vector<std::vector<char>> active;              // [level][poly]
        std::vector<FqElem> pw;
    };

    const FqSpec& f_;
    int k_;
    std::vector<int> order_;
    std::vector<LevelPoly> polys_;

    LevelPoly build(const MultiPoly& poly) {
        LevelPoly lp;
        std::vector<std::vector<int>> keys;
        for (auto& t : poly.terms()) {
            std::vector<int> e(k_);
            for (int j = 0; j < k_; ++j) e[j] = t.mono.exponent(order_[j]);
            keys.push_back(e);
            lp.c0.push_back(f_.from_int(t.coef));
        }
        lp.target.resize(k_);
        lp.expo.resize(k_);
        lp.const_index.assign(k_, -1);
        lp.size.assign(k_, 0);
        std::vector<std::vector<int>> cur = keys;
        for (int j = 0; j < k_; ++j) {
            lp.size[j] = static_cast<int>(cur.size());
            std::map<std::vector<int>, int> next_index;
            std::vector<std::vector<int>> next;
            for (std::size_t t = 0; t < cur.size(); ++t) {
                lp.expo[j].push_back(static_cast<std::uint8_t>(cur[t][j]));
                lp.maxdeg = std::max(lp.maxdeg, cur[t][j]);
                bool is_const = true;
                for (int i = j; i < k_; ++i) is_const &= cur[t][i] == 0;
                if (is_const) lp.const_index[j] = static_cast<int>(t);
                if (j + 1 < k_) {
                    std::vector<int> rest = cur[t];
                    rest[j] = 0;
                    auto [it, fresh] = next_index.try_emplace(rest, static_cast<int>(next.size()));
                    if (fresh) next.push_back(rest);
                    lp.target[j].push_back(it->second);
                }
            }
            if (j == k_ - 1)
                for (auto& c : cur) lp.maxdeg_last = std::max(lp.maxdeg_last, c[j]);
            cur = std::move(next);
        }
        return lp;
    }

    Context make_context() const {
        Context c;
        c.buf.resize(k_);
        c.active.resize(k_);
        for (int j = 0; j < k_; ++j) {
            c.buf[j].resize(polys_.size());
            c.active[j].assign(polys_.size(), 1);
            for (std::size_t i = 0; i < polys_.size(); ++i) c.buf[j][i].assign(polys_[i].size[j], 0);
        }
        for (std::size_t i = 0; i < polys_.size(); ++i) {
            c.buf[0][i] = polys_[i].c0;
            c.active[0][i] = !polys_[i].c0.empty();
        }
        int md = 0;
        for (auto& lp : polys_) md = std::max(md, lp.maxdeg);
        c.pw.resize(md + 1);
        return c;
    }

    std::uint64_t qpow(int e) const {
        std::uint64_t r = 1;
        for (int i = 0; i < e; ++i) r *= f_.q();
        return r;
    }

    // Assign value x to the variable at position j, then recurse.
    std::uint64_t step(Context& c, int j, FqElem x) const {
        c.pw[0] = 1;
        for (std::size_t d = 1; d < c.pw.size(); ++d) c.pw[d] = f_.mul(c.pw[d - 1], x);
        bool any = false;
        for (std::size_t i = 0; i < polys_.size(); ++i) {
            c.active[j + 1][i] = 0;
            if (!c.active[j][i]) continue;
            const LevelPoly& lp = polys_[i];
            auto& out = c.buf[j + 1][i];
            std::fill(out.begin(), out.end(), 0);
            const auto& in = c.buf[j][i];
            const auto& tg = lp.target[j];
            const auto& ex = lp.expo[j];
            for (std::size_t t = 0; t < in.size(); ++t) {
                if (!in[t]) continue;
                out[tg[t]] = f_.add(out[tg[t]], f_.mul(in[t], c.pw[ex[t]]));
            }
            int nz = 0, last = -1;
            for (std::size_t t = 0; t < out.size(); ++t)
                if (out[t]) {
                    ++nz;
                    last = static_cast<int>(t);
                }
            if (nz == 0) continue;
            if (nz == 1 && last == lp.const_index[j + 1]) return 0;
            c.active[j + 1][i] = 1;
            any = true;
        }
        if (!any) return qpow(k_ - j - 1);
        if (j + 1 == k_ - 1) return solve_last(c, j + 1);
        std::uint64_t s = 0;
        for (int y = 0; y < f_.q(); ++y) s += step(c, j + 1, static_cast<FqElem>(y));
        return s;
    }

    // All remaining polynomials are univariate in the last variable.
    std::uint64_t solve_last(Context& c, int j) const {
        std::vector<std::vector<FqElem>> uni;
        int best = -1, best_deg = 1 << 30;
        for (std::size_t i = 0; i < polys_.size(); ++i) {
            if (!c.active[j][i]) continue;
            const LevelPoly& lp = polys_[i];
            std::vector<FqElem> coef(lp.maxdeg_last + 1, 0);
            const auto& in = c.buf[j][i];
            for (std::size_t t = 0; t < in.size(); ++t) coef[lp.expo[j][t]] = f_.add(coef[lp.expo[j][t]], in[t]);
            while (!coef.empty() && coef.back() == 0) coef.pop_back();
            if (coef.empty()) continue;
            int d = static_cast<int>(coef.size()) - 1;
            if (d == 0) return 0;
            if (d < best_deg) {
                best_deg = d;
                best = static_cast<int>(uni.size());
            }
            uni.push_back(std::move(coef));
        }
        if (uni.empty()) return f_.q();
        auto eval = [&](const std::vector<FqElem>& p, FqElem x) {
            FqElem r = 0;
            for (std::size_t d = p.size(); d-- > 0;) r = f_.add(f_.mul(r, x), p[d]);
            return r;
        };
        if (best_deg == 1) {
            FqElem root = f_.mul(f_.neg(uni[best][0]), f_.inv(uni[best][1]));
            for (auto& p : uni)
                if (eval(p, root)) return 0;
            return 1;
        }
        std::uint64_t n = 0;
        for (int x = 0; x < f_.q(); ++x) {
            bool ok = true;
            for (auto& p : uni)
                if (eval(p, static_cast<FqElem>(x))) {
                    ok = false;
                    break;
                }
            n += ok;
        }
        return n;
    }
};

// ---------------------------------------------------------------------------
// Algebraic recursion.

class Counter {
public:
    Counter(const FqSpec& f, const CountOptions& opt) : f_(f), opt_(opt) {}

    Int count(std::vector<MultiPoly> s, int nvars, int depth = 0) {
        const int p = f_.p();
        std::vector<MultiPoly> sys;
        for (auto& poly : s) {
            MultiPoly r = reduce_mod(poly, p);
            if (r.is_zero()) continue;
            if (r.is_constant()) return 0;
            sys.push_back(make_monic(r, p));
        }
        std::sort(sys.begin(), sys.end(), [](const MultiPoly& a, const MultiPoly& b) { return a.to_string() < b.to_string(); });
        sys.erase(std::unique(sys.begin(), sys.end()), sys.end());
        // Compact variables; free ones contribute q each.
        std::uint32_t used = 0;
        for (auto& poly : sys) used |= poly.support();
        const int k = __builtin_popcount(used);
        if (k > nvars) throw std::logic_error("count: ambient dimension smaller than variable count");
        Int free_factor = int_pow(f_.q(), nvars - k);
        if (sys.empty()) return free_factor;
        std::vector<int> rename(kMaxVars + 1, 0);
        int next = 0;
        for (int v = 1; v <= kMaxVars; ++v)
            if (used >> (v - 1) & 1) rename[v] = ++next;
        if (next != k || rename[k] != k)
            for (auto& poly : sys) poly = poly.rename(rename);
        return free_factor * count_compact(std::move(sys), k, depth);
    }

    Int exhaustive(const std::vector<MultiPoly>& sys, int k, int jobs) {
        Enumerator en(sys, k, f_);
        double c = en.cost();
        if (c > opt_.budget || std::pow(static_cast<double>(f_.q()), k) > 9e18) throw CostError(c, opt_.budget);
        return en.run(jobs);
    }

private:
    const FqSpec& f_;
    const CountOptions& opt_;
    std::unordered_map<std::string, Int> memo_;

    Int count_compact(std::vector<MultiPoly> sys, int k, int depth) {
        // Independent variable blocks multiply.
        std::vector<int> parent(k + 1);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (auto& poly : sys) {
            auto vs = poly.variables();
            for (std::size_t i = 1; i < vs.size(); ++i) parent[find(vs[i])] = find(vs[0]);
        }
        std::map<int, std::vector<MultiPoly>> blocks;
        for (auto& poly : sys) blocks[find(poly.variables()[0])].push_back(poly);
        if (blocks.size() > 1) {
            Int r = 1;
            for (auto& [root, b] : blocks) {
                int kb = 0;
                for (int v = 1; v <= k; ++v) kb += find(v) == root;
                r *= count(b, kb, depth + 1);
                if (r == 0) break;
            }
            return r;
        }

        std::string key = std::to_string(k) + "|";
        for (auto& poly : sys) key += poly.to_string() + ";";
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Int result = reduce(std::move(sys), k, depth);
        memo_.emplace(std::move(key), result);
        return result;
    }

    Int reduce(std::vector<MultiPoly> sys, int k, int depth) {
        const int p = f_.p();
        const Int q = f_.q();
        // A variable with an invertible constant coefficient is solved for.
        int best_poly = -1, best_var = 0;
        for (std::size_t i = 0; i < sys.size(); ++i) {
            for (int v : sys[i].variables()) {
                if (sys[i].degree_in(v) != 1) continue;
                MultiPoly c = sys[i].coefficient_of(v, 1);
                if (!c.is_constant()) continue;
                if (best_poly < 0 || sys[i].size() < sys[best_poly].size()) {
                    best_poly = static_cast<int>(i);
                    best_var = v;
                }
                break;
            }
        }
        if (best_poly >= 0) {
            const MultiPoly& f = sys[best_poly];
            long long c = mod_floor(f.coefficient_of(best_var, 1).constant_value(), p);
            MultiPoly rest = f.coefficient_of(best_var, 0);
            MultiPoly value = reduce_mod(rest.scaled(Int(p - inv_mod(c, p))), p);
            std::vector<MultiPoly> next;
            for (std::size_t i = 0; i < sys.size(); ++i)
                if (static_cast<int>(i) != best_poly) next.push_back(sys[i].substitute(best_var, value));
            return count(std::move(next), k - 1, depth + 1);
        }
        // A monomial factor x of some polynomial: [x g, R] = [x, R] + [g, R] - [x, g, R].
        for (std::size_t i = 0; i < sys.size(); ++i) {
            const MultiPoly& f = sys[i];
            for (int v : f.variables()) {
                bool divides = true;
                for (auto& t : f.terms()) divides &= t.mono.exponent(v) > 0;
                if (!divides) continue;
                MultiPoly g = f.divide_exact(MultiPoly::var(v));
                std::vector<MultiPoly> rest;
                for (std::size_t j = 0; j < sys.size(); ++j)
                    if (j != i) rest.push_back(sys[j]);
                auto with = [&](std::vector<MultiPoly> extra) {
                    std::vector<MultiPoly> s = rest;
                    for (auto& e : extra) s.push_back(std::move(e));
                    return count(std::move(s), k, depth + 1);
                };
                MultiPoly x = MultiPoly::var(v);
                return with({x}) + with({g}) - with({x, g});
            }
        }
        // Small systems: enumerate.
        Enumerator en(sys, k, f_);
        double cost = en.cost();
        if (k <= opt_.threshold || cost < 2e6) {
            if (cost > opt_.budget) throw CostError(cost, opt_.budget);
            return en.run(depth == 0 ? opt_.jobs : 1);
        }
        // A variable of degree <= 1 everywhere: lemlin pair form.
        int lin_var = 0, lin_count = 1 << 30;
        for (int v = 1; v <= k; ++v) {
            int n = 0;
            bool ok = true;
            for (auto& poly : sys) {
                int d = poly.degree_in(v);
                if (d > 1) ok = false;
                n += d > 0;
            }
            if (ok && n > 0 && n < lin_count) {
                lin_var = v;
                lin_count = n;
            }
        }
        if (lin_var) {
            std::vector<MultiPoly> a, b, h;
            for (auto& poly : sys) {
                if (poly.degree_in(lin_var) == 0) {
                    h.push_back(poly);
                } else {
                    a.push_back(poly.coefficient_of(lin_var, 1));
                    b.push_back(poly.coefficient_of(lin_var, 0));
                }
            }
            std::vector<MultiPoly> abh = h, rh = h, ah = h;
            for (auto& x : a) abh.push_back(x), ah.push_back(x);
            for (auto& x : b) abh.push_back(x);
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = i + 1; j < a.size(); ++j) rh.push_back(a[i] * b[j] - a[j] * b[i]);
            return q * count(abh, k - 1, depth + 1) + count(rh, k - 1, depth + 1) - count(ah, k - 1, depth + 1);
        }
        // Prime fields: branch on the values of the most frequent variable.
        if (f_.n() == 1) {
            int v = 1, best = -1;
            for (int u = 1; u <= k; ++u) {
                int n = 0;
                for (auto& poly : sys)
                    for (auto& t : poly.terms()) n += t.mono.exponent(u) > 0;
                if (n > best) {
                    best = n;
                    v = u;
                }
            }
            Int total = 0;
            for (int x = 0; x < f_.q(); ++x) {
                std::vector<MultiPoly> s;
                for (auto& poly : sys) s.push_back(poly.substitute(v, Int(x)));
                total += count(std::move(s), k - 1, depth + 1);
            }
            return total;
        }
        if (cost > opt_.budget) throw CostError(cost, opt_.budget);
        return en.run(depth == 0 ? opt_.jobs : 1);
    }
};

std::string cache_key(const std::vector<MultiPoly>& system, const FqSpec& f, int ambient) {
    std::vector<std::string> texts;
    for (auto& p : system) texts.push_back(p.to_string());
    std::sort(texts.begin(), texts.end());
    std::string key = "q=" + std::to_string(f.q()) + " dim=" + std::to_string(ambient);
    for (auto& t : texts) key += "\n" + t;
    return key;
}

std::mutex cache_mutex;

std::optional<Int> cache_lookup(const std::string& dir, const std::string& key) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    std::ostringstream name;
    name << std::hex << fnv1a(key);
    std::ifstream in(std::filesystem::path(dir) / (name.str() + ".count"));
    if (!in) return std::nullopt;
    std::string value, stored((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto nl = stored.find('\n');
    if (nl == std::string::npos || stored.substr(nl + 1) != key) return std::nullopt;
    return Int(stored.substr(0, nl));
}

void cache_store(const std::string& dir, const std::string& key, const Int& value) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    std::filesystem::create_directories(dir);
    std::ostringstream name;
    name << std::hex << fnv1a(key);
    auto path = std::filesystem::path(dir) / (name.str() + ".count");
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << to_string(value) << "\n" << key;
    }
    std::filesystem::rename(tmp, path);
}

int distinct_variables(const std::vector<MultiPoly>& system) {
    std::uint32_t used = 0;
    for (auto& p : system) used |= p.support();
    return __builtin_popcount(used);
}

int highest_variable(const std::vector<MultiPoly>& system) {
    std::uint32_t used = 0;
    for (auto& p : system) used |= p.support();
    return used ? 32 - __builtin_clz(used) : 0;
}

}  // namespace

Int count_affine(const std::vector<MultiPoly>& system, const FqSpec& f, int ambient_dim, const CountOptions& opt) {
    if (ambient_dim < highest_variable(system)) throw std::invalid_argument("count_affine: ambient dimension below the highest variable index");
    std::string key;
    if (!opt.cache_dir.empty()) {
        key = cache_key(system, f, ambient_dim);
        if (auto hit = cache_lookup(opt.cache_dir, key)) return *hit;
    }
    Counter c(f, opt);
    Int r = c.count(system, ambient_dim);
    if (!opt.cache_dir.empty()) cache_store(opt.cache_dir, key, r);
    return r;
}

Int count_exhaustive(const std::vector<MultiPoly>& system, const FqSpec& f, int ambient_dim, const CountOptions& opt) {
    const int k = distinct_variables(system);
    if (ambient_dim < highest_variable(system)) throw std::invalid_argument("count_exhaustive: ambient dimension below the highest variable index");
    std::vector<MultiPoly> sys;
    std::uint32_t used = 0;
    for (auto& p : system) used |= p.support();
    std::vector<int> rename(kMaxVars + 1, 0);
    int next = 0;
    for (int v = 1; v <= kMaxVars; ++v)
        if (used >> (v - 1) & 1) rename[v] = ++next;
    for (auto& p : system) {
        MultiPoly r = reduce_mod(p, f.p());
        if (r.is_zero()) continue;
        if (r.is_constant()) return 0;
        sys.push_back(r.rename(rename));
    }
    Int free_factor = int_pow(f.q(), ambient_dim - k);
    if (sys.empty()) return int_pow(f.q(), ambient_dim);
    Counter c(f, opt);
    return free_factor * c.exhaustive(sys, k, opt.jobs);
}

namespace {

C2Value finish(C2Route route, const Int& count, const FqSpec& f, long long residue, std::chrono::steady_clock::time_point t0) {
    C2Value v;
    v.q = f.q();
    v.count = count;
    v.route = route;
    v.residue = ((residue % f.q()) + f.q()) % f.q();
    v.mod_p = v.residue % f.p();
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return v;
}

// Renumbers the edge variables not in `removed` to 1..N-|removed|.
std::vector<MultiPoly> compact_except(std::vector<MultiPoly> sys, const std::vector<int>& removed, int edges) {
    std::vector<int> rename(kMaxVars + 1, 0);
    int next = 0;
    for (int e = 1; e <= edges; ++e)
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) rename[e] = ++next;
    for (auto& p : sys) p = p.rename(rename);
    return sys;
}

void require_connected(const Graph& g, const char* what) {
    if (g.is_zero() || !g.is_connected()) throw std::invalid_argument(std::string(what) + ": graph must be connected");
}

}  // namespace

C2Value c2_direct(const Graph& g, const FqSpec& f, const CountOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    require_connected(g, "c2_direct");
    if (loop_number(g) > g.edge_count() - 2) throw std::invalid_argument("c2_direct: needs h <= N - 2");
    Int count = count_affine({graph_polynomial(g)}, f, g.edge_count(), opt);
    Int q2 = Int(f.q()) * f.q();
    if (count % q2 != 0) throw std::logic_error("c2_direct: q^2 does not divide [Psi]_q = " + to_string(count));
    return finish(C2Route::Direct, count, f, mod_floor(count / q2, f.q()), t0);
}

C2Value c2_dodgson(const Graph& g, const FqSpec& f, const std::array<int, 3>& e, const CountOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    require_connected(g, "c2_dodgson");
    if (2 * loop_number(g) > g.edge_count()) throw std::invalid_argument("c2_dodgson: needs 2h <= N");
    if (g.edge_count() < 5) throw std::invalid_argument("c2_dodgson: needs N >= 5");
    if (e[0] == e[1] || e[0] == e[2] || e[1] == e[2]) throw std::invalid_argument("c2_dodgson: edges must be distinct");
    MultiPoly a = dodgson(g, {e[0], e[2]}, {e[1], e[2]});
    MultiPoly b = dodgson(g, {e[0]}, {e[1]}, {e[2]});
    auto sys = compact_except({a, b}, {e[0], e[1], e[2]}, g.edge_count());
    Int count = count_affine(sys, f, g.edge_count() - 3, opt);
    return finish(C2Route::Dodgson, count, f, mod_floor(count, f.q()), t0);
}

C2Value c2_denom(const ReductionTrace& t, const FqSpec& f, const CountOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    if (t.steps.empty()) throw std::invalid_argument("c2_denom: empty trace");
    const Graph& g = t.graph;
    if (2 * loop_number(g) > g.edge_count()) throw std::invalid_argument("c2_denom: needs 2h <= N");
    const int n = t.last_n();
    if (n >= g.edge_count()) throw std::invalid_argument("c2_denom: needs n < N");
    std::vector<int> removed(t.order.begin(), t.order.begin() + n);
    auto sys = compact_except({t.last()}, removed, g.edge_count());
    Int count = count_affine(sys, f, g.edge_count() - n, opt);
    long long r = t.status == ReductionStatus::WeightDrop ? 0 : mod_floor(count, f.q());
    if (n % 2) r = -r;
    return finish(C2Route::Denom, count, f, r, t0);
}

}  // namespace c2lab
