#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dynkin {

using DimVec = std::vector<int>;
using Arrow = std::pair<int, int>;  // (tail, head), 1-based

enum class Family { A, D, E };

struct TypeTag {
    Family family = Family::A;
    int n = 1;

    std::string str() const {
        const char c = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
        return std::string(1, c) + std::to_string(n);
    }
    friend bool operator==(const TypeTag&, const TypeTag&) = default;

    static TypeTag parse(const std::string& text) {
        std::string s;
        for (char c : text)
            if (c != '_' && c != ' ') s += c;
        if (s.size() < 2) throw std::invalid_argument("unknown Dynkin type '" + text + "'");
        TypeTag t;
        switch (s[0]) {
            case 'A': case 'a': t.family = Family::A; break;
            case 'D': case 'd': t.family = Family::D; break;
            case 'E': case 'e': t.family = Family::E; break;
            default: throw std::invalid_argument("unknown Dynkin type '" + text + "'");
        }
        const std::string digits = s.substr(1);
        if (digits.empty() || digits.size() > 4 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
            throw std::invalid_argument("unknown Dynkin type '" + text + "'");
        t.n = std::stoi(digits);
        const bool ok = (t.family == Family::A && t.n >= 1) || (t.family == Family::D && t.n >= 4) ||
                        (t.family == Family::E && t.n >= 6 && t.n <= 8);
        if (!ok) throw std::invalid_argument("unknown Dynkin type '" + text + "'");
        return t;
    }
};

/// Edges of the labelled diagram (unoriented, i < j).
inline std::vector<Arrow> diagram_edges(const TypeTag& t) {
    std::vector<Arrow> e;
    switch (t.family) {
        case Family::A:
            for (int i = 1; i < t.n; ++i) e.emplace_back(i, i + 1);
            break;
        case Family::D:
            for (int i = 1; i < t.n - 2; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(t.n - 2, t.n - 1);
            e.emplace_back(t.n - 2, t.n);
            break;
        case Family::E:
            // 1-2-3-5-6-7-8 with 4 hanging off 3
            e = {{1, 2}, {2, 3}, {3, 4}, {3, 5}};
            for (int i = 5; i < t.n; ++i) e.emplace_back(i, i + 1);
            break;
    }
    return e;
}

namespace detail {

// AHU canonical form of an unrooted tree, rooted at each center.
inline std::string tree_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[static_cast<std::size_t>(v)])
        if (w != parent) kids.push_back(tree_code(adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
}

inline std::string tree_canonical(int n, const std::vector<Arrow>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a - 1)].push_back(b - 1);
        adj[static_cast<std::size_t>(b - 1)].push_back(a - 1);
    }
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        if (deg[static_cast<std::size_t>(v)] <= 1) leaves.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(leaves.size());
        std::vector<int> next;
        for (int l : leaves)
            for (int w : adj[static_cast<std::size_t>(l)])
                if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
        leaves = std::move(next);
    }
    std::string best;
    for (int c : leaves) {
        std::string s = tree_code(adj, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

inline bool is_tree(int n, const std::vector<Arrow>& edges) {
    if (static_cast<int>(edges.size()) != n - 1) return false;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (auto [a, b] : edges) {
        int ra = find(a - 1), rb = find(b - 1);
        if (ra == rb) return false;
        parent[static_cast<std::size_t>(ra)] = rb;
    }
    return true;
}

}  // namespace detail

/// An oriented Dynkin diagram. Vertex labels need not follow the standard
/// labelling; the underlying graph only has to be isomorphic to it.
class Quiver {
public:
    Quiver() = default;
    Quiver(TypeTag tag, std::vector<Arrow> arrows) : tag_(tag), arrows_(std::move(arrows)) { validate(); }

    const TypeTag& type() const { return tag_; }
    int rank() const { return tag_.n; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool is_sink(int i) const {
        return std::none_of(arrows_.begin(), arrows_.end(), [i](const Arrow& a) { return a.first == i; });
    }
    bool is_source(int i) const {
        return std::none_of(arrows_.begin(), arrows_.end(), [i](const Arrow& a) { return a.second == i; });
    }

    /// Reverses every arrow incident to vertex i.
    Quiver reversed_at(int i) const {
        std::vector<Arrow> a = arrows_;
        for (auto& [s, t] : a)
            if (s == i || t == i) std::swap(s, t);
        return Quiver(tag_, std::move(a));
    }

    /// e.g. "2>1,3>1,4>1"
    std::string orientation_str() const {
        std::string s;
        for (const auto& [a, b] : arrows_) {
            if (!s.empty()) s += ',';
            s += std::to_string(a) + ">" + std::to_string(b);
        }
        return s;
    }

    friend bool operator==(const Quiver& a, const Quiver& b) {
        if (!(a.tag_ == b.tag_)) return false;
        auto x = a.arrows_, y = b.arrows_;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        return x == y;
    }

private:
    void validate() const {
        const int n = tag_.n;
        std::set<Arrow> seen;
        for (const auto& [a, b] : arrows_) {
            if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("arrow endpoint out of range 1.." + std::to_string(n));
            if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
            if (seen.count({b, a})) throw std::invalid_argument("duplicate edge direction between " + std::to_string(a) + " and " + std::to_string(b));
            if (!seen.insert({a, b}).second) throw std::invalid_argument("repeated arrow " + std::to_string(a) + ">" + std::to_string(b));
        }
        if (static_cast<int>(arrows_.size()) != n - 1)
            throw std::invalid_argument("orientation must cover the " + std::to_string(n - 1) + " diagram edges");
        if (!detail::is_tree(n, arrows_)) throw std::invalid_argument("arrows do not form a tree");
        if (detail::tree_canonical(n, arrows_) != detail::tree_canonical(n, diagram_edges(tag_)))
            throw std::invalid_argument("underlying graph is not the " + tag_.str() + " diagram");
    }

    TypeTag tag_;
    std::vector<Arrow> arrows_;
};

inline std::vector<Arrow> parse_orientation(const std::string& text) {
    std::vector<Arrow> out;
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t p = item.find("->");
        std::size_t len = 2;
        if (p == std::string::npos) {
            p = item.find('>');
            len = 1;
        }
        if (p == std::string::npos || p == 0 || p + len >= item.size())
            throw std::invalid_argument("malformed arrow '" + item + "' (expected i>j)");
        try {
            out.emplace_back(std::stoi(item.substr(0, p)), std::stoi(item.substr(p + len)));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("malformed arrow '" + item + "' (expected i>j)");
        }
    }
    return out;
}

/// Default orientation: every diagram edge i - j oriented i -> j with i < j.
inline Quiver build_quiver(const TypeTag& t) { return Quiver(t, diagram_edges(t)); }
inline Quiver build_quiver(const TypeTag& t, std::vector<Arrow> arrows) { return Quiver(t, std::move(arrows)); }
inline Quiver build_quiver(const std::string& type, const std::string& orientation = "") {
    const TypeTag t = TypeTag::parse(type);
    if (orientation.empty()) return build_quiver(t);
    return build_quiver(t, parse_orientation(orientation));
}

inline void check_length(const Quiver& q, const DimVec& a) {
    if (static_cast<int>(a.size()) != q.rank())
        throw std::invalid_argument("dimension vector of length " + std::to_string(a.size()) + " for a rank " +
                                    std::to_string(q.rank()) + " quiver");
}

inline long euler_form(const Quiver& q, const DimVec& a, const DimVec& b) {
    check_length(q, a);
    check_length(q, b);
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    for (const auto& [i, j] : q.arrows()) s -= static_cast<long>(a[static_cast<std::size_t>(i - 1)]) * b[static_cast<std::size_t>(j - 1)];
    return s;
}

/// E[i][j] with <a,b> = a^T E b.
inline std::vector<std::vector<int>> euler_matrix(const Quiver& q) {
    const auto n = static_cast<std::size_t>(q.rank());
    std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
    for (const auto& [i, j] : q.arrows()) e[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] -= 1;
    return e;
}

inline DimVec simple_root(int n, int i) {
    DimVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return e;
}

inline DimVec operator+(DimVec a, const DimVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline DimVec operator-(DimVec a, const DimVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}
inline DimVec operator-(DimVec a) {
    for (auto& x : a) x = -x;
    return a;
}
inline DimVec operator*(int k, DimVec a) {
    for (auto& x : a) x *= k;
    return a;
}
inline int total(const DimVec& a) { return std::accumulate(a.begin(), a.end(), 0); }
inline bool is_nonnegative(const DimVec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}
inline bool is_zero(const DimVec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}
inline std::string dim_str(const DimVec& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

/// Positive roots by reflection closure of the simple roots, ordered by
/// height and then lexicographically decreasing.
inline std::vector<DimVec> positive_roots(const Quiver& q) {
    const int n = q.rank();
    auto sym = [&](const DimVec& a, const DimVec& b) { return euler_form(q, a, b) + euler_form(q, b, a); };
    std::set<DimVec> seen;
    std::vector<DimVec> todo;
    for (int i = 1; i <= n; ++i) {
        todo.push_back(simple_root(n, i));
        seen.insert(todo.back());
    }
    while (!todo.empty()) {
        DimVec a = todo.back();
        todo.pop_back();
        for (int i = 1; i <= n; ++i) {
            const DimVec e = simple_root(n, i);
            const DimVec r = a - static_cast<int>(sym(a, e)) * e;
            if (is_nonnegative(r) && !is_zero(r) && seen.insert(r).second) todo.push_back(r);
        }
    }
    std::vector<DimVec> roots(seen.begin(), seen.end());
    std::sort(roots.begin(), roots.end(), [](const DimVec& a, const DimVec& b) {
        const int ta = total(a), tb = total(b);
        if (ta != tb) return ta < tb;
        return a > b;
    });
    return roots;
}

inline int coxeter_number(const TypeTag& t) {
    switch (t.family) {
        case Family::A: return t.n + 1;
        case Family::D: return 2 * (t.n - 1);
        case Family::E: return t.n == 6 ? 12 : t.n == 7 ? 18 : 30;
    }
    return 0;
}
inline int coxeter_number(const Quiver& q) { return coxeter_number(q.type()); }

}  // namespace dynkin
