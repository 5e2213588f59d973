#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dynkin/exact/matrix.hpp"
#include "dynkin/exact/mpoly.hpp"
#include "dynkin/exact/number.hpp"
#include "dynkin/exact/sparse.hpp"
#include "dynkin/quiver.hpp"

namespace dynkin {

using QMatrix = Matrix<Rat>;

/// A representation: one vector space per vertex and one matrix per arrow,
/// arrow k of `arrows` mapping the tail space to the head space.
struct Rep {
    std::vector<Arrow> arrows;
    DimVec dim;
    std::vector<QMatrix> maps;

    int n() const { return static_cast<int>(dim.size()); }
    std::size_t d(int vertex) const { return static_cast<std::size_t>(dim[static_cast<std::size_t>(vertex - 1)]); }

    void check() const {
        if (maps.size() != arrows.size()) throw std::logic_error("Rep: one matrix per arrow required");
        for (std::size_t k = 0; k < arrows.size(); ++k) {
            const auto [s, t] = arrows[k];
            if (maps[k].rows() != d(t) || maps[k].cols() != d(s))
                throw std::logic_error("Rep: matrix shape does not match the dimension vector at arrow " +
                                       std::to_string(s) + ">" + std::to_string(t));
        }
    }

    static Rep zero_maps(std::vector<Arrow> arrows, DimVec dim) {
        Rep r{std::move(arrows), std::move(dim), {}};
        for (const auto& [s, t] : r.arrows) r.maps.emplace_back(r.d(t), r.d(s));
        return r;
    }
};

/// Per-vertex linear maps f_i : M_i -> N_i.
using Morphism = std::vector<QMatrix>;

namespace detail {

inline QMatrix hstack(const std::vector<QMatrix>& blocks, std::size_t rows) {
    std::size_t cols = 0;
    for (const auto& b : blocks) cols += b.cols();
    QMatrix m(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) m(r, off + c) = b(r, c);
        off += b.cols();
    }
    return m;
}

inline QMatrix vstack(const std::vector<QMatrix>& blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) rows += b.rows();
    QMatrix m(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c) m(off + r, c) = b(r, c);
        off += b.rows();
    }
    return m;
}

inline std::vector<Arrow> reverse_at(std::vector<Arrow> arrows, int k) {
    for (auto& [s, t] : arrows)
        if (s == k || t == k) std::swap(s, t);
    return arrows;
}

/// Sink reflection S_k^+: the new space at k is the kernel of the sum of the
/// incoming maps; arrow order is preserved (incident arrows flipped).
inline Rep reflect_at_sink(const Rep& m, int k) {
    std::vector<std::size_t> in;
    for (std::size_t a = 0; a < m.arrows.size(); ++a) {
        if (m.arrows[a].first == k) throw std::logic_error("reflect_at_sink: vertex is not a sink");
        if (m.arrows[a].second == k) in.push_back(a);
    }
    std::vector<QMatrix> blocks;
    for (auto a : in) blocks.push_back(m.maps[a]);
    const QMatrix h = hstack(blocks, m.d(k));
    const QMatrix ker = kernel_matrix(h);  // columns span the kernel inside (+)_j M_j
    Rep r;
    r.arrows = reverse_at(m.arrows, k);
    r.dim = m.dim;
    r.dim[static_cast<std::size_t>(k - 1)] = static_cast<int>(ker.cols());
    r.maps = m.maps;
    std::size_t off = 0;
    for (auto a : in) {
        const std::size_t dj = m.maps[a].cols();
        QMatrix proj(dj, ker.cols());
        for (std::size_t row = 0; row < dj; ++row)
            for (std::size_t c = 0; c < ker.cols(); ++c) proj(row, c) = ker(off + row, c);
        r.maps[a] = proj;
        off += dj;
    }
    r.check();
    return r;
}

/// Source reflection S_k^-: the new space at k is the cokernel of the sum of
/// the outgoing maps.
inline Rep reflect_at_source(const Rep& m, int k) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < m.arrows.size(); ++a) {
        if (m.arrows[a].second == k) throw std::logic_error("reflect_at_source: vertex is not a source");
        if (m.arrows[a].first == k) out.push_back(a);
    }
    std::vector<QMatrix> blocks;
    for (auto a : out) blocks.push_back(m.maps[a]);
    const QMatrix g = vstack(blocks, m.d(k));
    const QMatrix coker = cokernel_projection(g);  // rows annihilate the image
    Rep r;
    r.arrows = reverse_at(m.arrows, k);
    r.dim = m.dim;
    r.dim[static_cast<std::size_t>(k - 1)] = static_cast<int>(coker.rows());
    r.maps = m.maps;
    std::size_t off = 0;
    for (auto a : out) {
        const std::size_t dj = m.maps[a].rows();
        QMatrix inc(coker.rows(), dj);
        for (std::size_t row = 0; row < coker.rows(); ++row)
            for (std::size_t c = 0; c < dj; ++c) inc(row, c) = coker(row, off + c);
        r.maps[a] = inc;
        off += dj;
    }
    r.check();
    return r;
}

}  // namespace detail

/// Representation theory of one Dynkin quiver: indecomposables (built once,
/// indexed by root), Hom/Ext, monomorphism tests and add-quotients.
class RepTheory {
public:
    explicit RepTheory(Quiver q) : q_(std::move(q)), roots_(positive_roots(q_)) {
        for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = static_cast<int>(i);
    }

    const Quiver& quiver() const { return q_; }
    int rank() const { return q_.rank(); }
    const std::vector<DimVec>& roots() const { return roots_; }
    int root_count() const { return static_cast<int>(roots_.size()); }
    const DimVec& root(int idx) const { return roots_.at(static_cast<std::size_t>(idx)); }

    std::optional<int> find_root(const DimVec& a) const {
        auto it = index_.find(a);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    int root_index(const DimVec& a) const {
        auto r = find_root(a);
        if (!r) throw std::invalid_argument(dim_str(a) + " is not a positive root of " + q_.type().str());
        return *r;
    }
    int simple_index(int vertex) const { return root_index(simple_root(rank(), vertex)); }

    long euler(const DimVec& a, const DimVec& b) const { return euler_form(q_, a, b); }
    long euler(int a, int b) const { return euler(root(a), root(b)); }

    const Rep& indec(int idx) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = reps_.find(idx);
        if (it != reps_.end()) return *it->second;
        auto rep = std::make_unique<Rep>(build_indec(root(idx)));
        const Rep& ref = *rep;
        reps_.emplace(idx, std::move(rep));
        return ref;
    }
    const Rep& indec(const DimVec& a) const { return indec(root_index(a)); }

    /// Basis of Hom(M, N).
    std::vector<Morphism> hom_basis(const Rep& m, const Rep& n) const {
        same_quiver(m, n);
        const int nv = rank();
        std::vector<std::size_t> offset(static_cast<std::size_t>(nv) + 1, 0);
        for (int i = 1; i <= nv; ++i)
            offset[static_cast<std::size_t>(i)] = offset[static_cast<std::size_t>(i - 1)] + n.d(i) * m.d(i);
        const std::size_t nvars = offset[static_cast<std::size_t>(nv)];
        // variable for (f_i)(r, c) with r < dim N_i, c < dim M_i
        auto var = [&](int i, std::size_t r, std::size_t c) { return offset[static_cast<std::size_t>(i - 1)] + r * m.d(i) + c; };
        SparseSystem<Rat> sys(nvars);
        for (std::size_t a = 0; a < m.arrows.size(); ++a) {
            const auto [i, j] = m.arrows[a];
            const QMatrix& ma = m.maps[a];
            const QMatrix& na = n.maps[a];
            // (N(a) f_i - f_j M(a))(r, c) = 0, r < dim N_j, c < dim M_i
            for (std::size_t r = 0; r < n.d(j); ++r)
                for (std::size_t c = 0; c < m.d(i); ++c) {
                    SparseSystem<Rat>::Row row;
                    for (std::size_t k = 0; k < n.d(i); ++k)
                        if (na(r, k) != 0) row[var(i, k, c)] += na(r, k);
                    for (std::size_t k = 0; k < m.d(j); ++k)
                        if (ma(k, c) != 0) row[var(j, r, k)] -= ma(k, c);
                    if (!row.empty()) sys.add_equation(std::move(row));
                }
        }
        std::vector<Morphism> basis;
        for (const auto& x : sys.nullspace()) {
            Morphism f;
            for (int i = 1; i <= nv; ++i) {
                QMatrix fi(n.d(i), m.d(i));
                for (std::size_t r = 0; r < n.d(i); ++r)
                    for (std::size_t c = 0; c < m.d(i); ++c) fi(r, c) = x[var(i, r, c)];
                f.push_back(std::move(fi));
            }
            basis.push_back(std::move(f));
        }
        return basis;
    }

    int hom_dim(const Rep& m, const Rep& n) const { return static_cast<int>(hom_basis(m, n).size()); }

    /// Cached hom dimension between indecomposables.
    int hom(int a, int b) const {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = hom_cache_.find({a, b});
            if (it != hom_cache_.end()) return it->second;
        }
        const int h = hom_dim(indec(a), indec(b));
        std::lock_guard<std::mutex> lock(mu_);
        hom_cache_[{a, b}] = h;
        return h;
    }

    int ext1_dim(const Rep& m, const Rep& n) const {
        const long e = hom_dim(m, n) - euler(m.dim, n.dim);
        if (e < 0) throw std::logic_error("ext1_dim: negative value, inconsistent Hom computation");
        return static_cast<int>(e);
    }
    int ext1(int a, int b) const {
        const long e = hom(a, b) - euler(a, b);
        if (e < 0) throw std::logic_error("ext1: negative value, inconsistent Hom computation");
        return static_cast<int>(e);
    }

    /// Whether some morphism L -> M is injective at every vertex.
    bool exists_mono(const Rep& l, const Rep& m) const {
        for (int i = 1; i <= rank(); ++i)
            if (l.d(i) > m.d(i)) return false;
        if (is_zero(l.dim)) return true;
        const auto basis = hom_basis(l, m);
        if (basis.empty()) return false;
        // the generic rank of a block-diagonal pencil is the sum of block ranks
        for (int i = 1; i <= rank(); ++i) {
            if (l.d(i) == 0) continue;
            std::vector<QMatrix> pencil;
            for (const auto& f : basis) pencil.push_back(f[static_cast<std::size_t>(i - 1)]);
            const auto pm = ParamMatrix::pencil(pencil, m.d(i), l.d(i));
            if (generic_rank(pm) != l.d(i)) return false;
        }
        return true;
    }
    bool exists_mono(int l, int m) const { return exists_mono(indec(l), indec(m)); }

    struct AddQuotient {
        DimVec kernel_dim;
        int multiplicity = 0;
        Rep kernel;
    };

    /// Kernel and multiplicity of the universal map M -> T^{hom(M,T)}.
    AddQuotient max_add_quotient(const Rep& m, const Rep& t) const {
        const auto basis = hom_basis(m, t);
        AddQuotient out;
        out.kernel_dim = m.dim;
        std::vector<QMatrix> ker(static_cast<std::size_t>(rank()));
        DimVec image(static_cast<std::size_t>(rank()), 0);
        for (int i = 1; i <= rank(); ++i) {
            std::vector<QMatrix> blocks;
            for (const auto& f : basis) blocks.push_back(f[static_cast<std::size_t>(i - 1)]);
            const QMatrix stacked = detail::vstack(blocks, m.d(i));
            ker[static_cast<std::size_t>(i - 1)] = kernel_matrix(stacked);
            const int k = static_cast<int>(ker[static_cast<std::size_t>(i - 1)].cols());
            out.kernel_dim[static_cast<std::size_t>(i - 1)] = k;
            image[static_cast<std::size_t>(i - 1)] = m.dim[static_cast<std::size_t>(i - 1)] - k;
        }
        const int ti = total(t.dim);
        const int im = total(image);
        if (ti == 0 || im % ti != 0 || !(image == (im / ti) * t.dim))
            throw std::logic_error("max_add_quotient: image is not a sum of copies of " + dim_str(t.dim));
        out.multiplicity = im / ti;
        out.kernel = restrict_to(m, ker);
        return out;
    }

    enum class MapKind { Zero, Mono, Epi, Iso, Other };

    /// Shape of a generic morphism between indecomposables a -> b, read off a
    /// one-dimensional Hom space (throws if Hom has dimension > 1).
    MapKind map_kind(int a, int b) const {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = kind_cache_.find({a, b});
            if (it != kind_cache_.end()) return it->second;
        }
        const auto basis = hom_basis(indec(a), indec(b));
        MapKind k = MapKind::Zero;
        if (basis.size() > 1) throw std::logic_error("map_kind: Hom space of dimension > 1");
        if (basis.size() == 1) {
            bool mono = true, epi = true;
            for (int i = 1; i <= rank(); ++i) {
                const auto r = dynkin::rank(basis[0][static_cast<std::size_t>(i - 1)]);
                if (r != indec(a).d(i)) mono = false;
                if (r != indec(b).d(i)) epi = false;
            }
            k = mono && epi ? MapKind::Iso : mono ? MapKind::Mono : epi ? MapKind::Epi : MapKind::Other;
        }
        std::lock_guard<std::mutex> lock(mu_);
        kind_cache_[{a, b}] = k;
        return k;
    }

    /// Dimension vector of the middle term of the nonsplit extension
    /// 0 -> A -> E -> B -> 0, which must be indecomposable.
    DimVec extension_middle(int a, int b) const {
        if (ext1(b, a) != 1)
            throw std::invalid_argument("extension_middle: Ext^1(" + dim_str(root(b)) + ", " + dim_str(root(a)) +
                                        ") has dimension " + std::to_string(ext1(b, a)) + ", expected 1");
        const DimVec e = root(a) + root(b);
        if (!find_root(e)) throw std::logic_error("extension_middle: " + dim_str(e) + " is not a root");
        return e;
    }

private:
    void same_quiver(const Rep& m, const Rep& n) const {
        if (m.arrows != q_.arrows() || n.arrows != q_.arrows())
            throw std::invalid_argument("representations of different quivers");
    }

    /// Subrepresentation of M on the subspaces spanned by the columns of `sub`.
    Rep restrict_to(const Rep& m, const std::vector<QMatrix>& sub) const {
        Rep r;
        r.arrows = m.arrows;
        for (const auto& s : sub) r.dim.push_back(static_cast<int>(s.cols()));
        for (std::size_t a = 0; a < m.arrows.size(); ++a) {
            const auto [i, j] = m.arrows[a];
            const QMatrix& si = sub[static_cast<std::size_t>(i - 1)];
            const QMatrix& sj = sub[static_cast<std::size_t>(j - 1)];
            if (si.cols() == 0 || sj.cols() == 0) {
                r.maps.emplace_back(sj.cols(), si.cols());
                continue;
            }
            r.maps.push_back(solve_in_span(sj, m.maps[a] * si));
        }
        r.check();
        return r;
    }

    Rep build_indec(const DimVec& alpha) const {
        const int n = rank();
        std::vector<Arrow> arrows = q_.arrows();
        DimVec a = alpha;
        std::vector<int> steps;
        auto is_simple = [&](const DimVec& v) { return total(v) == 1; };
        int guard = 0;
        while (!is_simple(a)) {
            if (++guard > 4 * n * n + 16) throw std::logic_error("indec_rep: reflection sequence did not reach a simple root");
            int k = 0;
            for (int v = 1; v <= n && !k; ++v)
                if (std::none_of(arrows.begin(), arrows.end(), [v](const Arrow& x) { return x.first == v; })) k = v;
            // s_k(a) = a - (a, e_k) e_k with the symmetrized form of the graph
            int pairing = 2 * a[static_cast<std::size_t>(k - 1)];
            for (const auto& [s, t] : arrows) {
                if (s == k) pairing -= a[static_cast<std::size_t>(t - 1)];
                if (t == k) pairing -= a[static_cast<std::size_t>(s - 1)];
            }
            a[static_cast<std::size_t>(k - 1)] -= pairing;
            if (!is_nonnegative(a)) throw std::logic_error("indec_rep: root became negative before reaching a simple");
            arrows = detail::reverse_at(arrows, k);
            steps.push_back(k);
        }
        Rep r = Rep::zero_maps(arrows, a);
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) r = detail::reflect_at_source(r, *it);
        if (r.arrows != q_.arrows() || r.dim != alpha) throw std::logic_error("indec_rep: reflection bookkeeping failed");
        if (hom_dim(r, r) != 1)
            throw std::logic_error("indec_rep: constructed representation of " + dim_str(alpha) + " has End-dimension != 1");
        return r;
    }

    Quiver q_;
    std::vector<DimVec> roots_;
    std::map<DimVec, int> index_;
    mutable std::mutex mu_;
    mutable std::map<int, std::unique_ptr<Rep>> reps_;
    mutable std::map<std::pair<int, int>, int> hom_cache_;
    mutable std::map<std::pair<int, int>, MapKind> kind_cache_;
};

}  // namespace dynkin
