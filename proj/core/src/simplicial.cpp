#include "mpx/simplicial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mpx/multipath.hpp"

namespace mpx {

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::vector<int>> faces) {
    SimplicialComplex x;
    for (auto& f : faces) {
        if (f.empty()) throw std::invalid_argument("complex: empty face");
        if (!std::is_sorted(f.begin(), f.end()) ||
            std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("complex: face labels must be sorted and distinct");
        std::size_t d = f.size() - 1;
        if (x.faces_.size() <= d) x.faces_.resize(d + 1);
        x.faces_[d].push_back(std::move(f));
    }
    for (auto& level : x.faces_) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    return x;
}

const std::vector<std::vector<int>>& SimplicialComplex::faces(int d) const {
    static const std::vector<std::vector<int>> none;
    if (d < 0 || d > dimension()) return none;
    return faces_[d];
}

long long SimplicialComplex::face_count(int d) const {
    return static_cast<long long>(faces(d).size());
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f;
    for (int d = 0; d <= dimension(); ++d) f.push_back(face_count(d));
    return f;
}

long long SimplicialComplex::face_index(const std::vector<int>& face) const {
    int d = static_cast<int>(face.size()) - 1;
    const auto& level = faces(d);
    auto it = std::lower_bound(level.begin(), level.end(), face);
    if (it != level.end() && *it == face) return it - level.begin();
    return -1;
}

bool SimplicialComplex::has_downward_closure() const {
    for (int d = 1; d <= dimension(); ++d) {
        for (const auto& face : faces_[d]) {
            std::vector<int> sub(face.size() - 1);
            for (std::size_t k = 0; k < face.size(); ++k) {
                sub.assign(face.begin(), face.end());
                sub.erase(sub.begin() + static_cast<long>(k));
                if (face_index(sub) < 0) return false;
            }
        }
    }
    return true;
}

long long SimplicialComplex::reduced_euler() const {
    long long chi = -1;  // empty simplex
    for (int d = 0; d <= dimension(); ++d)
        chi += (d % 2 == 0) ? face_count(d) : -face_count(d);
    return chi;
}

SimplicialComplex multipath_complex(const Digraph& g) {
    std::vector<std::vector<int>> faces;
    for_each_multipath(g, [&](const std::vector<int>& mp) {
        if (!mp.empty()) faces.push_back(mp);
    });
    return SimplicialComplex::from_faces(std::move(faces));
}

SimplicialComplex matching_complex(int vertex_count,
                                   std::vector<std::pair<int, int>> undirected_edges) {
    for (auto& [a, b] : undirected_edges) {
        if (a == b) throw std::invalid_argument("matching_complex: loop edge");
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            throw std::invalid_argument("matching_complex: endpoint out of range");
        if (a > b) std::swap(a, b);
    }
    std::vector<std::pair<int, int>> sorted = undirected_edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("matching_complex: duplicate edge");

    std::vector<std::vector<int>> faces;
    std::vector<char> used(vertex_count, 0);
    std::vector<int> cur;
    int m = static_cast<int>(sorted.size());
    auto rec = [&](auto&& self, int next) -> void {
        if (!cur.empty()) faces.push_back(cur);
        for (int j = next; j < m; ++j) {
            auto [a, b] = sorted[j];
            if (used[a] || used[b]) continue;
            used[a] = used[b] = 1;
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
            used[a] = used[b] = 0;
        }
    };
    rec(rec, 0);
    return SimplicialComplex::from_faces(std::move(faces));
}

bool is_alternating(const Digraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.in_degree(v) > 0 && g.out_degree(v) > 0) return false;
    return true;
}

bool complexes_isomorphic_alternating_check(const Digraph& g) {
    if (!is_alternating(g)) return false;
    // Matchings of the underlying graph, labelled directly by the digraph's
    // edge indices so the face sets are literally comparable.
    std::vector<std::vector<int>> faces;
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (!cur.empty()) faces.push_back(cur);
        for (int j = next; j < g.edge_count(); ++j) {
            const Edge& e = g.edge(j);
            if (used[e.source] || used[e.target]) continue;
            used[e.source] = used[e.target] = 1;
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
            used[e.source] = used[e.target] = 0;
        }
    };
    rec(rec, 0);
    SimplicialComplex matchings = SimplicialComplex::from_faces(std::move(faces));
    if (!(matchings == multipath_complex(g)))
        throw std::logic_error(
            "alternating digraph whose multipath complex is not its matching complex");
    return true;
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& x, int d) {
    if (d < 0 || d > x.dimension())
        throw std::out_of_range("boundary_matrix: degree out of range");
    if (d == 0) {
        SparseIntMatrix aug(1, x.face_count(0));
        for (long long j = 0; j < x.face_count(0); ++j) aug.add(0, j, 1);
        return aug;
    }
    SparseIntMatrix m(x.face_count(d - 1), x.face_count(d));
    const auto& level = x.faces(d);
    std::vector<int> sub;
    for (long long j = 0; j < static_cast<long long>(level.size()); ++j) {
        const auto& face = level[j];
        for (std::size_t k = 0; k < face.size(); ++k) {
            sub.assign(face.begin(), face.end());
            sub.erase(sub.begin() + static_cast<long>(k));
            long long r = x.face_index(sub);
            if (r < 0) throw std::logic_error("boundary_matrix: complex not downward closed");
            m.add(r, j, (k % 2 == 0) ? 1 : -1);
        }
    }
    return m;
}

}  // namespace mpx
