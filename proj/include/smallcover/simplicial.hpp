#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"

namespace smallcover {

/// A set of vertex positions (bit i = the i-th declared label in ascending order).
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

inline int mask_size(VertexMask m) { return std::popcount(m); }

inline bool mask_contains(VertexMask outer, VertexMask inner) { return (outer & inner) == inner; }

/// Lexicographic order of the sorted position sequences (a proper prefix sorts first).
inline bool lex_less(VertexMask x, VertexMask y) {
    const VertexMask d = x ^ y;
    if (d == 0) return false;
    const VertexMask b = d & (~d + 1);
    const VertexMask above = ~(b | (b - 1));
    if (x & b) return (y & above) != 0;
    return (x & above) == 0;
}

inline std::vector<int> mask_positions(VertexMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

struct FaceVector {
    std::vector<long long> f;  ///< f[k] = number of faces with k vertices (f_{k-1}), k = 0..n
    std::vector<long long> h;  ///< h_0..h_n
};

/// A finite abstract simplicial complex given by its facets. Labels are kept sorted
/// ascending; vertex position i refers to labels()[i]. Labels are never compacted, so
/// ghost vertices (declared, in no facet) survive every construction.
class SimplicialComplex {
public:
    SimplicialComplex() : SimplicialComplex(std::vector<int>{}, std::vector<VertexMask>{}) {}

    /// Keeps inclusion-maximal generators; an empty generator list yields {∅}.
    static SimplicialComplex from_facets(std::vector<int> labels, const std::vector<std::vector<int>>& generators) {
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
            throw InputError("duplicate vertex label");
        if (labels.size() > kMaxVertices)
            throw InputError("at most " + std::to_string(kMaxVertices) + " vertices are supported");
        for (int l : labels)
            if (l <= 0) throw InputError("vertex labels must be positive integers, got " + std::to_string(l));
        std::vector<VertexMask> masks;
        for (const auto& g : generators) {
            VertexMask m = 0;
            for (int v : g) {
                auto it = std::lower_bound(labels.begin(), labels.end(), v);
                if (it == labels.end() || *it != v)
                    throw InputError("facet uses undeclared vertex label " + std::to_string(v));
                const VertexMask bit = VertexMask{1} << (it - labels.begin());
                if (m & bit) throw InputError("duplicate vertex " + std::to_string(v) + " inside a facet");
                m |= bit;
            }
            masks.push_back(m);
        }
        return SimplicialComplex(std::move(labels), std::move(masks));
    }

    /// Same as from_facets but on positions of an already-sorted label list.
    SimplicialComplex(std::vector<int> sorted_labels, std::vector<VertexMask> generators)
        : labels_(std::move(sorted_labels)) {
        const std::size_t input_count = generators.size();
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        dropped_ = generators.size() != input_count;
        for (VertexMask g : generators) {
            const bool covered = std::any_of(generators.begin(), generators.end(),
                                             [g](VertexMask o) { return o != g && mask_contains(o, g); });
            if (covered)
                dropped_ = true;
            else
                facets_.push_back(g);
        }
        if (facets_.empty()) facets_.push_back(0);
        std::sort(facets_.begin(), facets_.end(), lex_less);
        build_faces();
    }

    [[nodiscard]] const std::vector<int>& labels() const { return labels_; }
    [[nodiscard]] std::size_t vertex_count() const { return labels_.size(); }
    [[nodiscard]] const std::vector<VertexMask>& facets() const { return facets_; }
    [[nodiscard]] bool normalization_dropped() const { return dropped_; }

    /// Dimension (max facet size minus one); -1 for {∅}.
    [[nodiscard]] int dimension() const { return static_cast<int>(faces_.size()) - 2; }

    [[nodiscard]] bool is_pure() const {
        const int s = mask_size(facets_.front());
        return std::all_of(facets_.begin(), facets_.end(), [s](VertexMask f) { return mask_size(f) == s; });
    }

    /// faces_of_size(k): all faces with exactly k vertices, lexicographically sorted.
    [[nodiscard]] const std::vector<VertexMask>& faces_of_size(std::size_t k) const {
        static const std::vector<VertexMask> none;
        return k < faces_.size() ? faces_[k] : none;
    }
    [[nodiscard]] std::size_t max_face_size() const { return faces_.size() - 1; }

    [[nodiscard]] std::size_t face_count() const { return face_set_.size(); }

    [[nodiscard]] bool contains(VertexMask face) const { return face_set_.count(face) != 0; }

    /// Vertices that lie in some facet.
    [[nodiscard]] VertexMask used_vertices() const {
        VertexMask u = 0;
        for (auto f : facets_) u |= f;
        return u;
    }

    [[nodiscard]] int position_of(int label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label) throw InputError("unknown vertex label " + std::to_string(label));
        return static_cast<int>(it - labels_.begin());
    }

    [[nodiscard]] VertexMask mask_of(const std::vector<int>& label_set) const {
        VertexMask m = 0;
        for (int l : label_set) m |= VertexMask{1} << position_of(l);
        return m;
    }

    [[nodiscard]] std::vector<int> labels_of(VertexMask m) const {
        std::vector<int> out;
        for (int p : mask_positions(m)) out.push_back(labels_.at(static_cast<std::size_t>(p)));
        return out;
    }

    [[nodiscard]] std::vector<std::vector<int>> facet_labels() const {
        std::vector<std::vector<int>> out;
        for (auto f : facets_) out.push_back(labels_of(f));
        return out;
    }

    [[nodiscard]] int facet_index(VertexMask facet) const {
        auto it = std::find(facets_.begin(), facets_.end(), facet);
        return it == facets_.end() ? -1 : static_cast<int>(it - facets_.begin());
    }

    /// Facet indices containing the given face of codimension one.
    [[nodiscard]] const std::vector<int>& facets_on_ridge(VertexMask ridge) const {
        static const std::vector<int> none;
        auto it = ridges_.find(ridge);
        return it == ridges_.end() ? none : it->second;
    }

    /// Minimal non-faces among the used vertices plus every ghost singleton.
    [[nodiscard]] std::vector<VertexMask> minimal_nonfaces() const {
        std::unordered_set<VertexMask> found;
        const std::size_t m = labels_.size();
        for (std::size_t v = 0; v < m; ++v)
            if (!contains(VertexMask{1} << v)) found.insert(VertexMask{1} << v);
        for (const auto& level : faces_)
            for (VertexMask face : level)
                for (std::size_t v = 0; v < m; ++v) {
                    const VertexMask bit = VertexMask{1} << v;
                    if ((face & bit) || !contains(bit)) continue;
                    const VertexMask cand = face | bit;
                    if (contains(cand) || found.count(cand)) continue;
                    bool minimal = true;
                    for (int u : mask_positions(cand))
                        if (!contains(cand & ~(VertexMask{1} << u))) {
                            minimal = false;
                            break;
                        }
                    if (minimal) found.insert(cand);
                }
        std::vector<VertexMask> out(found.begin(), found.end());
        std::sort(out.begin(), out.end(), [](VertexMask a, VertexMask b) {
            if (mask_size(a) != mask_size(b)) return mask_size(a) < mask_size(b);
            return lex_less(a, b);
        });
        return out;
    }

    /// Facets connected through shared ridges.
    [[nodiscard]] bool is_strongly_connected() const {
        if (facets_.size() <= 1) return true;
        std::vector<std::size_t> parent(facets_.size());
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (const auto& [ridge, fs] : ridges_)
            for (std::size_t k = 1; k < fs.size(); ++k)
                parent[find(static_cast<std::size_t>(fs[k]))] = find(static_cast<std::size_t>(fs[0]));
        const std::size_t root = find(0);
        for (std::size_t i = 0; i < facets_.size(); ++i)
            if (find(i) != root) return false;
        return true;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.labels_ == b.labels_ && a.facets_ == b.facets_;
    }

private:
    void build_faces() {
        std::size_t top = 0;
        for (auto f : facets_) top = std::max<std::size_t>(top, static_cast<std::size_t>(mask_size(f)));
        faces_.assign(top + 1, {});
        for (VertexMask f : facets_) {
            // Enumerate all subsets of f.
            VertexMask s = f;
            while (true) {
                if (face_set_.insert(s).second) faces_[static_cast<std::size_t>(mask_size(s))].push_back(s);
                if (s == 0) break;
                s = (s - 1) & f;
            }
        }
        for (auto& level : faces_) std::sort(level.begin(), level.end(), lex_less);
        for (std::size_t i = 0; i < facets_.size(); ++i)
            for (int p : mask_positions(facets_[i]))
                ridges_[facets_[i] & ~(VertexMask{1} << p)].push_back(static_cast<int>(i));
    }

    std::vector<int> labels_;
    std::vector<VertexMask> facets_;
    bool dropped_ = false;
    std::vector<std::vector<VertexMask>> faces_;
    std::unordered_set<VertexMask> face_set_;
    std::unordered_map<VertexMask, std::vector<int>> ridges_;
};

inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline FaceVector h_vector(const SimplicialComplex& k) {
    if (!k.is_pure()) throw InputError("h-vector requested for a non-pure complex");
    const long long n = k.dimension() + 1;
    FaceVector fv;
    for (long long j = 0; j <= n; ++j) fv.f.push_back(static_cast<long long>(k.faces_of_size(static_cast<std::size_t>(j)).size()));
    for (long long i = 0; i <= n; ++i) {
        long long h = 0;
        for (long long j = 0; j <= i; ++j) {
            const long long term = binomial(n - j, i - j) * fv.f[static_cast<std::size_t>(j)];
            h += ((i - j) % 2 == 0) ? term : -term;
        }
        fv.h.push_back(h);
    }
    return fv;
}

/// Induced subcomplex on the vertex positions in `w`, keeping the original labels of w.
inline SimplicialComplex full_subcomplex_positions(const SimplicialComplex& k, VertexMask w) {
    const auto positions = mask_positions(w);
    std::vector<int> labels;
    for (int p : positions) {
        if (static_cast<std::size_t>(p) >= k.vertex_count()) throw InputError("full subcomplex: unknown vertex");
        labels.push_back(k.labels()[static_cast<std::size_t>(p)]);
    }
    std::vector<int> remap(k.vertex_count(), -1);
    for (std::size_t i = 0; i < positions.size(); ++i) remap[static_cast<std::size_t>(positions[i])] = static_cast<int>(i);

    std::vector<VertexMask> maximal;
    for (std::size_t s = 0; s <= k.max_face_size(); ++s)
        for (VertexMask face : k.faces_of_size(s)) {
            if (!mask_contains(w, face)) continue;
            bool is_max = true;
            for (int v : mask_positions(w & ~face))
                if (k.contains(face | (VertexMask{1} << v))) {
                    is_max = false;
                    break;
                }
            if (!is_max) continue;
            VertexMask local = 0;
            for (int p : mask_positions(face)) local |= VertexMask{1} << remap[static_cast<std::size_t>(p)];
            maximal.push_back(local);
        }
    return SimplicialComplex(std::move(labels), std::move(maximal));
}

inline SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<int>& w_labels) {
    return full_subcomplex_positions(k, k.mask_of(w_labels));
}

/// True iff K is pure of dimension >= 0 and every ridge lies in exactly two facets.
inline bool is_closed_pseudomanifold(const SimplicialComplex& k) {
    if (k.dimension() < 0 || !k.is_pure()) return false;
    for (VertexMask f : k.facets())
        for (int p : mask_positions(f))
            if (k.facets_on_ridge(f & ~(VertexMask{1} << p)).size() != 2) return false;
    return true;
}

/// Join with K2's labels shifted above K1's largest label.
inline SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    const int shift = k1.labels().empty() ? 0 : k1.labels().back();
    std::vector<int> labels = k1.labels();
    for (int l : k2.labels()) labels.push_back(l + shift);
    const auto offset = k1.vertex_count();
    if (offset + k2.vertex_count() > kMaxVertices) throw InputError("join exceeds the vertex limit");
    std::vector<VertexMask> facets;
    for (VertexMask a : k1.facets())
        for (VertexMask b : k2.facets()) facets.push_back(a | (b << offset));
    return SimplicialComplex(std::move(labels), std::move(facets));
}

/// The vertex p != u_i such that (σ minus u_i) plus p is a facet; σ given by mask,
/// position is 1-based within σ's sorted vertices.
inline int ridge_flip_position(const SimplicialComplex& k, VertexMask sigma, int position) {
    const auto verts = mask_positions(sigma);
    if (position < 1 || position > static_cast<int>(verts.size())) throw InputError("ridge_flip: position out of range");
    if (k.facet_index(sigma) < 0) throw InputError("ridge_flip: not a facet");
    const VertexMask ridge = sigma & ~(VertexMask{1} << verts[static_cast<std::size_t>(position - 1)]);
    const auto& owners = k.facets_on_ridge(ridge);
    if (owners.size() != 2)
        throw InputError("ridge lies in " + std::to_string(owners.size()) + " facets, expected exactly two");
    const VertexMask other = k.facets()[static_cast<std::size_t>(owners[0])] == sigma ? k.facets()[static_cast<std::size_t>(owners[1])]
                                                                                      : k.facets()[static_cast<std::size_t>(owners[0])];
    return std::countr_zero(other & ~ridge);
}

inline int ridge_flip(const SimplicialComplex& k, const std::vector<int>& sigma_labels, int position) {
    return k.labels()[static_cast<std::size_t>(ridge_flip_position(k, k.mask_of(sigma_labels), position))];
}

// Standard complexes.

/// Boundary of the n-simplex on labels 1..n+1.
inline SimplicialComplex boundary_of_simplex(int n) {
    std::vector<int> labels(static_cast<std::size_t>(n + 1));
    std::iota(labels.begin(), labels.end(), 1);
    const VertexMask all = (VertexMask{1} << (n + 1)) - 1;
    std::vector<VertexMask> facets;
    for (int v = 0; v <= n; ++v) facets.push_back(all & ~(VertexMask{1} << v));
    return SimplicialComplex(std::move(labels), std::move(facets));
}

/// Boundary of the n-dimensional cross-polytope: labels 1..2n, antipodal pairs (i, i+n).
inline SimplicialComplex cross_polytope_boundary(int n) {
    std::vector<int> labels(static_cast<std::size_t>(2 * n));
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<VertexMask> facets;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << n); ++choice) {
        VertexMask f = 0;
        for (int i = 0; i < n; ++i) f |= VertexMask{1} << (((choice >> i) & 1U) ? i + n : i);
        facets.push_back(f);
    }
    return SimplicialComplex(std::move(labels), std::move(facets));
}

/// Boundary of the m-gon on labels 1..m.
inline SimplicialComplex polygon(int m) {
    std::vector<int> labels(static_cast<std::size_t>(m));
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<VertexMask> facets;
    for (int i = 0; i < m; ++i) facets.push_back((VertexMask{1} << i) | (VertexMask{1} << ((i + 1) % m)));
    return SimplicialComplex(std::move(labels), std::move(facets));
}

}  // namespace smallcover
