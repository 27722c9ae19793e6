#include "c2lab/grothendieck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace c2lab {

namespace {

bool support_subset(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

class ClassEngine {
public:
    LPoly run(const std::vector<MultiPoly>& system, int nvars) {
        std::vector<MultiPoly> sys;
        for (auto& p : system) {
            auto n = normalize(p);
            if (!n) return LPoly();
            if (!n->is_zero()) sys.push_back(*n);
        }
        return count(std::move(sys), nvars);
    }

private:
    std::unordered_map<std::string, LPoly> memo_;

    // nullopt: a unit constant (empty zero set). Zero polynomial: no condition.
    std::optional<MultiPoly> normalize(const MultiPoly& p) {
        if (p.is_zero()) return MultiPoly();
        if (p.is_constant()) {
            Int c = p.constant_value();
            if (c == 1 || c == -1) return std::nullopt;
            throw UnreducedCase("non-unit constant " + to_string(c) + " in a class computation");
        }
        Int g = p.content();
        if (g != 1) throw UnreducedCase("polynomial with content " + to_string(g) + ": " + p.to_string());
        MultiPoly r = p.sign_normalized();
        int d = r.total_degree();
        if (d >= 2 && r.size() >= 3) {
            if (auto s = poly_sqrt(r)) return normalize(*s);
        }
        return r;
    }

    LPoly count(std::vector<MultiPoly> s, int nvars) {
        // Normalize, dedupe, drop multiples of other members.
        std::vector<MultiPoly> sys;
        for (auto& p : s) {
            auto n = normalize(p);
            if (!n) return LPoly();
            if (!n->is_zero()) sys.push_back(std::move(*n));
        }
        std::sort(sys.begin(), sys.end(), [](const MultiPoly& a, const MultiPoly& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a.to_string() < b.to_string();
        });
        sys.erase(std::unique(sys.begin(), sys.end()), sys.end());
        std::vector<char> drop(sys.size(), 0);
        for (std::size_t i = 0; i < sys.size(); ++i) {
            for (std::size_t j = 0; j < sys.size() && !drop[i]; ++j) {
                if (i == j || drop[j]) continue;
                if (sys[j].total_degree() >= sys[i].total_degree()) continue;
                if (!support_subset(sys[j].support(), sys[i].support())) continue;
                if (sys[i].try_divide(sys[j])) drop[i] = 1;
            }
        }
        std::vector<MultiPoly> kept;
        for (std::size_t i = 0; i < sys.size(); ++i)
            if (!drop[i]) kept.push_back(std::move(sys[i]));
        sys = std::move(kept);

        std::uint32_t used = 0;
        for (auto& p : sys) used |= p.support();
        const int k = __builtin_popcount(used);
        if (k > nvars) throw std::logic_error("class_of: ambient dimension smaller than variable count");
        LPoly free = LPoly::L(nvars - k);
        if (sys.empty()) return free;
        std::vector<int> rename(kMaxVars + 1, 0);
        int next = 0;
        for (int v = 1; v <= kMaxVars; ++v)
            if (used >> (v - 1) & 1) rename[v] = ++next;
        for (auto& p : sys) p = p.rename(rename);
        std::sort(sys.begin(), sys.end(), [](const MultiPoly& a, const MultiPoly& b) { return a.to_string() < b.to_string(); });
        return free * compact(std::move(sys), k);
    }

    LPoly compact(std::vector<MultiPoly> sys, int k) {
        std::vector<int> parent(k + 1);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (auto& p : sys) {
            auto vs = p.variables();
            for (std::size_t i = 1; i < vs.size(); ++i) parent[find(vs[i])] = find(vs[0]);
        }
        std::map<int, std::vector<MultiPoly>> blocks;
        for (auto& p : sys) blocks[find(p.variables()[0])].push_back(p);
        if (blocks.size() > 1) {
            LPoly r(1);
            for (auto& [root, b] : blocks) {
                int kb = 0;
                for (int v = 1; v <= k; ++v) kb += find(v) == root;
                r = r * count(b, kb);
                if (r.is_zero()) break;
            }
            return r;
        }
        std::string key = std::to_string(k) + "|";
        for (auto& p : sys) key += p.to_string() + ";";
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        LPoly r = reduce(std::move(sys), k);
        memo_.emplace(std::move(key), r);
        return r;
    }

    LPoly reduce(std::vector<MultiPoly> sys, int k) {
        // Solve for a variable with coefficient +-1.
        int best_poly = -1, best_var = 0;
        for (std::size_t i = 0; i < sys.size(); ++i) {
            for (int v : sys[i].variables()) {
                if (sys[i].degree_in(v) != 1) continue;
                MultiPoly c = sys[i].coefficient_of(v, 1);
                if (!c.is_constant()) continue;
                Int cv = c.constant_value();
                if (cv != 1 && cv != -1) continue;
                if (best_poly < 0 || sys[i].size() < sys[best_poly].size()) {
                    best_poly = static_cast<int>(i);
                    best_var = v;
                }
                break;
            }
        }
        if (best_poly >= 0) {
            const MultiPoly& f = sys[best_poly];
            Int c = f.coefficient_of(best_var, 1).constant_value();
            MultiPoly value = f.coefficient_of(best_var, 0).scaled(-c);
            std::vector<MultiPoly> next;
            for (std::size_t i = 0; i < sys.size(); ++i)
                if (static_cast<int>(i) != best_poly) next.push_back(sys[i].substitute(best_var, value));
            return count(std::move(next), k - 1);
        }
        // Monomial factor.
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
                    return count(std::move(s), k);
                };
                MultiPoly x = MultiPoly::var(v);
                return with({x}) + with({g}) - with({x, g});
            }
        }
        // Variable linear in every member containing it.
        int lin_var = 0;
        std::pair<int, std::size_t> best{1 << 30, 0};
        for (int v = 1; v <= k; ++v) {
            int n = 0;
            std::size_t terms = 0;
            bool ok = true;
            for (auto& p : sys) {
                int d = p.degree_in(v);
                if (d > 1) ok = false;
                if (d > 0) {
                    ++n;
                    terms += p.size();
                }
            }
            if (ok && n > 0 && std::make_pair(n, terms) < best) {
                best = {n, terms};
                lin_var = v;
            }
        }
        if (lin_var) {
            std::vector<MultiPoly> a, b, h;
            for (auto& p : sys) {
                if (p.degree_in(lin_var) == 0) {
                    h.push_back(p);
                } else {
                    a.push_back(p.coefficient_of(lin_var, 1));
                    b.push_back(p.coefficient_of(lin_var, 0));
                }
            }
            std::vector<MultiPoly> abh = h, rh = h, ah = h;
            for (auto& x : a) abh.push_back(x), ah.push_back(x);
            for (auto& x : b) abh.push_back(x);
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = i + 1; j < a.size(); ++j) rh.push_back(a[i] * b[j] - a[j] * b[i]);
            return LPoly::L() * count(abh, k - 1) + count(rh, k - 1) - count(ah, k - 1);
        }
        std::string text;
        for (auto& p : sys) text += (text.empty() ? "" : ", ") + p.to_string();
        throw UnreducedCase("no linear reduction applies to {" + text + "}");
    }
};

std::mutex engine_mutex;

}  // namespace

LPoly class_of(const std::vector<MultiPoly>& system, int ambient) {
    std::uint32_t used = 0;
    for (auto& p : system) used |= p.support();
    int top = used ? 32 - __builtin_clz(used) : 0;
    if (ambient < top) throw std::invalid_argument("class_of: ambient dimension below the highest variable index");
    static ClassEngine engine;
    std::lock_guard<std::mutex> lock(engine_mutex);
    return engine.run(system, ambient);
}

}  // namespace c2lab
