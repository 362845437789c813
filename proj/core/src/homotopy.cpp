#include "mpx/homotopy.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mpx/dynamics.hpp"
#include "mpx/formulas.hpp"
#include "mpx/multipath.hpp"
#include "mpx/path_poset.hpp"
#include "mpx/simplicial.hpp"

namespace mpx {

HomotopyType HomotopyType::empty_type() {
    HomotopyType t;
    t.kind_ = Kind::empty;
    return t;
}

HomotopyType HomotopyType::contractible() { return HomotopyType{}; }

HomotopyType HomotopyType::sphere(int dim) {
    if (dim < 0) {
        if (dim == -1) return empty_type();
        throw std::invalid_argument("sphere: dimension < -1");
    }
    return wedge_of_spheres({{dim, 1}});
}

HomotopyType HomotopyType::wedge_of_spheres(std::map<int, long long> spheres) {
    for (auto it = spheres.begin(); it != spheres.end();) {
        if (it->second < 0) throw std::invalid_argument("wedge: negative multiplicity");
        if (it->first < 0) throw std::invalid_argument("wedge: sphere of negative dimension");
        it = it->second == 0 ? spheres.erase(it) : std::next(it);
    }
    HomotopyType t;
    if (spheres.empty()) return t;  // wedge of nothing is a point
    t.kind_ = Kind::wedge;
    t.spheres_ = std::move(spheres);
    return t;
}

HomotopyType HomotopyType::unknown(HomologySummary h) {
    HomotopyType t;
    t.kind_ = Kind::unknown;
    t.homology_ = std::move(h);
    return t;
}

HomotopyType HomotopyType::wedge_from_homology(const HomologySummary& h) {
    if (h.empty_complex) return empty_type();
    if (!h.torsion_free())
        throw std::invalid_argument("wedge_from_homology: homology has torsion");
    std::map<int, long long> spheres;
    for (std::size_t d = 0; d < h.betti.size(); ++d)
        if (h.betti[d]) spheres[static_cast<int>(d)] = h.betti[d];
    return wedge_of_spheres(std::move(spheres));
}

long long HomotopyType::sphere_count() const {
    long long n = 0;
    for (const auto& [d, c] : spheres_) n += c;
    return n;
}

HomologySummary HomotopyType::homology() const {
    switch (kind_) {
        case Kind::empty: {
            HomologySummary h;
            h.empty_complex = true;
            return h;
        }
        case Kind::contractible:
            return {};
        case Kind::wedge: {
            HomologySummary h;
            int top = spheres_.rbegin()->first;
            h.betti.assign(top + 1, 0);
            for (const auto& [d, c] : spheres_) h.betti[d] = c;
            return h;
        }
        case Kind::unknown:
            return *homology_;
    }
    return {};
}

Int HomotopyType::reduced_euler() const { return homology().reduced_euler(); }

std::string HomotopyType::to_string() const {
    switch (kind_) {
        case Kind::empty:
            return "empty";
        case Kind::contractible:
            return "contractible";
        case Kind::wedge: {
            std::ostringstream os;
            bool first = true;
            for (const auto& [d, c] : spheres_) {
                if (!first) os << " v ";
                first = false;
                if (c == 1)
                    os << "S^" << d;
                else
                    os << c << "*S^" << d;
            }
            return os.str();
        }
        case Kind::unknown:
            return "unknown(" + homology_->to_string() + ")";
    }
    return "";
}

namespace {

HomotopyType join_unknown_with_wedge(const HomologySummary& h,
                                     const std::map<int, long long>& spheres) {
    // X * S^d suspends d+1 times; a wedge multiplies and overlays.
    HomologySummary acc;
    bool first = true;
    for (const auto& [d, c] : spheres) {
        HomologySummary shifted = h.shifted(d + 1);
        for (auto& b : shifted.betti) b *= c;
        std::vector<std::vector<Int>> torsion = shifted.torsion;
        shifted.torsion.clear();
        shifted.torsion.resize(torsion.size());
        for (std::size_t deg = 0; deg < torsion.size(); ++deg)
            for (long long copy = 0; copy < c; ++copy)
                shifted.torsion[deg].insert(shifted.torsion[deg].end(), torsion[deg].begin(),
                                            torsion[deg].end());
        if (first) {
            acc = std::move(shifted);
            first = false;
            continue;
        }
        std::size_t degrees = std::max(acc.betti.size(), shifted.betti.size());
        acc.betti.resize(degrees, 0);
        acc.torsion.resize(degrees);
        for (std::size_t deg = 0; deg < shifted.betti.size(); ++deg)
            acc.betti[deg] += shifted.betti[deg];
        for (std::size_t deg = 0; deg < shifted.torsion.size(); ++deg)
            acc.torsion[deg].insert(acc.torsion[deg].end(), shifted.torsion[deg].begin(),
                                    shifted.torsion[deg].end());
    }
    acc.normalize();
    return HomotopyType::unknown(std::move(acc));
}

}  // namespace

HomotopyType join(const HomotopyType& a, const HomotopyType& b) {
    using Kind = HomotopyType::Kind;
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    if (a.is_contractible() || b.is_contractible()) return HomotopyType::contractible();
    if (a.kind() == Kind::unknown && b.kind() == Kind::unknown)
        throw std::invalid_argument("join: two unclassified factors");
    if (a.kind() == Kind::unknown) return join_unknown_with_wedge(a.homology(), b.spheres());
    if (b.kind() == Kind::unknown) return join_unknown_with_wedge(b.homology(), a.spheres());
    std::map<int, long long> spheres;
    for (const auto& [da, ca] : a.spheres())
        for (const auto& [db, cb] : b.spheres()) spheres[da + db + 1] += ca * cb;
    return HomotopyType::wedge_of_spheres(std::move(spheres));
}

HomotopyType join(const std::vector<HomotopyType>& factors) {
    HomotopyType acc = HomotopyType::empty_type();
    for (const HomotopyType& f : factors) acc = join(acc, f);
    return acc;
}

HomotopyType wedge(const std::vector<HomotopyType>& parts) {
    std::map<int, long long> spheres;
    for (const HomotopyType& p : parts) {
        if (p.is_empty())
            throw std::invalid_argument("wedge: empty complex has no basepoint");
        if (p.kind() == HomotopyType::Kind::unknown)
            throw std::invalid_argument("wedge: unclassified part");
        for (const auto& [d, c] : p.spheres()) spheres[d] += c;
    }
    return HomotopyType::wedge_of_spheres(std::move(spheres));
}

HomotopyType suspend(const HomotopyType& a) { return join(HomotopyType::sphere(0), a); }

HomotopyType classify_alternating_path(int vertex_count) {
    if (vertex_count < 1)
        throw std::invalid_argument("classify_alternating_path: vertex count < 1");
    if (vertex_count == 1) return HomotopyType::empty_type();
    if (vertex_count % 3 == 2) return HomotopyType::contractible();
    int dim = (vertex_count - 4 + 2) / 3;  // ceil((v-4)/3) for v not 2 mod 3
    if (vertex_count == 3) dim = 0;
    return HomotopyType::sphere(dim);
}

HomotopyType classify_linear(const OrientationWord& w) {
    Digraph g = linear_from_word(w);
    std::vector<HomotopyType> parts;
    for (const auto& mod : decompose(g).modules)
        parts.push_back(classify_alternating_path(static_cast<int>(mod.size()) + 1));
    return join(parts);
}

HomotopyType classify_polygon(const OrientationWord& w) {
    int n = static_cast<int>(w.size());
    if (n < 3) throw std::invalid_argument("classify_polygon: fewer than three edges");
    // Vertex i sits between edges i-1 and i; it is stable exactly when the
    // word switches direction there.
    std::vector<int> stable_positions, unstable_positions;
    for (int i = 0; i < n; ++i) {
        if (w[(i + n - 1) % n] != w[i])
            stable_positions.push_back(i);
        else
            unstable_positions.push_back(i);
    }
    if (stable_positions.empty())  // coherent cycle
        return HomotopyType::sphere(n - 2);
    if (unstable_positions.empty()) {
        int k = n / 3;
        switch (n % 3) {
            case 0:
                return HomotopyType::wedge_of_spheres({{k - 1, 2}});
            case 1:
                return HomotopyType::sphere(k - 1);
            default:
                return HomotopyType::sphere(k);
        }
    }
    // Mixed: stable runs between consecutive unstable vertices are
    // alternating-path modules on run+2 vertices.
    std::vector<HomotopyType> parts;
    int r = static_cast<int>(unstable_positions.size());
    for (int a = 0; a < r; ++a) {
        int from = unstable_positions[a];
        int to = unstable_positions[(a + 1) % r];
        int run = (to - from - 1 + n) % n;
        parts.push_back(classify_alternating_path(run + 2));
    }
    return join(parts);
}

HomotopyType classify_grid_II(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("classify_grid_II: negative parameter");
    if (n == 0 && m == 0) return HomotopyType::empty_type();  // one vertex, no edges
    if (n == 0 || m == 0) return HomotopyType::contractible();
    if (m == 1) return HomotopyType::sphere(n);
    if (n == 1) return HomotopyType::sphere(m);
    return HomotopyType::contractible();
}

HomotopyType classify_grid_AI(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("classify_grid_AI: parameters must be >= 1");
    if (n % 2 == 0) return HomotopyType::contractible();
    return HomotopyType::sphere((m - 1) * (n + 1) / 2 + n);
}

namespace {

// A trailing or leading spine vertex with no legs is itself a pendant of
// its neighbour; fold such vertices away so equal trees get equal forms.
std::vector<int> canonical_caterpillar(std::vector<int> legs) {
    while (legs.size() >= 2 && legs.back() == 0) {
        legs.pop_back();
        ++legs.back();
    }
    while (legs.size() >= 2 && legs.front() == 0) {
        legs.erase(legs.begin());
        ++legs.front();
    }
    return legs;
}

std::optional<std::vector<Int>> covered_caterpillar_weights(const std::vector<int>& legs) {
    int s = static_cast<int>(legs.size());
    if (s % 2 == 0) return std::nullopt;
    std::vector<Int> a;
    for (int i = 0; i < s; ++i) {
        if (i % 2 == 1) {
            if (legs[i] != 0) return std::nullopt;
        } else {
            if (legs[i] < 1) return std::nullopt;
            a.push_back(Int(legs[i] - 1));
        }
    }
    return a;
}

}  // namespace

HomotopyType classify_caterpillar(const std::vector<int>& legs) {
    if (legs.empty()) throw std::invalid_argument("classify_caterpillar: empty spine");
    std::vector<int> canon = canonical_caterpillar(legs);
    if (canon.size() == 1 && canon[0] == 0)
        return HomotopyType::empty_type();  // a single vertex
    if (auto weights = covered_caterpillar_weights(canon)) {
        Int count = L_poly(*weights);
        int k = static_cast<int>(weights->size());
        if (count == 0) return HomotopyType::contractible();
        return HomotopyType::wedge_of_spheres({{k - 1, static_cast<long long>(count)}});
    }
    return HomotopyType::unknown(reduced_homology(multipath_complex(caterpillar(legs))));
}

namespace {

// Leg counts of a caterpillar tree given as an alternating digraph, or
// nullopt if the underlying graph is not a caterpillar.
std::optional<std::vector<int>> caterpillar_legs_of(const Digraph& g) {
    auto und = g.underlying_undirected();
    int n = g.vertex_count();
    if (static_cast<int>(und.size()) != n - 1) return std::nullopt;  // not a tree
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : und) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != n) return std::nullopt;
    }
    if (n == 1) return std::vector<int>{0};
    std::vector<int> spine;
    for (int v = 0; v < n; ++v)
        if (adj[v].size() >= 2) spine.push_back(v);
    if (spine.empty())  // a single edge
        return std::vector<int>{1};
    // The non-leaves must form a path.
    std::vector<char> on_spine(n, 0);
    for (int v : spine) on_spine[v] = 1;
    std::vector<int> ends;
    for (int v : spine) {
        int deg = 0;
        for (int y : adj[v]) deg += on_spine[y];
        if (deg > 2) return std::nullopt;
        if (deg <= 1) ends.push_back(v);
    }
    if (spine.size() == 1) {
        return std::vector<int>{static_cast<int>(adj[spine[0]].size())};
    }
    if (ends.size() != 2) return std::nullopt;
    std::vector<int> order{ends[0]};
    int prev = -1, cur = ends[0];
    while (cur != ends[1]) {
        int next = -1;
        for (int y : adj[cur])
            if (on_spine[y] && y != prev) next = y;
        if (next < 0) return std::nullopt;
        prev = cur;
        cur = next;
        order.push_back(cur);
        if (order.size() > spine.size()) return std::nullopt;  // spine has a cycle
    }
    if (order.size() != spine.size()) return std::nullopt;
    std::vector<int> legs;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int spine_neighbours = (i == 0 ? 0 : 1) + (i + 1 == order.size() ? 0 : 1);
        legs.push_back(static_cast<int>(adj[order[i]].size()) - spine_neighbours);
    }
    return legs;
}

}  // namespace

HomotopyType classify_LxI1(const OrientationWord& w) {
    Digraph grid = cartesian_product(linear_from_word(w), linear_coherent(1));
    std::vector<HomotopyType> parts;
    for (const auto& mod : decompose(grid).modules) {
        Digraph sub = subgraph_from_edges(grid, mod);
        std::optional<std::vector<int>> legs;
        if (is_alternating(sub)) legs = caterpillar_legs_of(sub);
        if (legs) {
            HomotopyType t = classify_caterpillar(*legs);
            if (t.kind() != HomotopyType::Kind::unknown) {
                parts.push_back(std::move(t));
                continue;
            }
        }
        // Alternating caterpillar complexes are wedges of spheres, so a
        // torsion-free oracle answer can safely be read back as one.
        HomologySummary h = reduced_homology(multipath_complex(sub));
        parts.push_back(h.torsion_free() ? HomotopyType::wedge_from_homology(h)
                                         : HomotopyType::unknown(std::move(h)));
    }
    return join(parts);
}

HomotopyType classify_dandelion(int n, int m) {
    if (n < 0 || m < 0 || n + m < 1)
        throw std::invalid_argument("classify_dandelion: needs at least one leaf");
    if (n == 0 || m == 0) {
        long long copies = n + m - 1;
        return HomotopyType::wedge_of_spheres({{0, copies}});
    }
    if (n == 1 || m == 1) return HomotopyType::contractible();
    return HomotopyType::wedge_of_spheres(
        {{1, static_cast<long long>(n - 1) * (m - 1)}});
}

HomotopyType tournament_homotopy(int n) {
    if (n < 1) throw std::invalid_argument("tournament_homotopy: n < 1");
    if (n == 1) return HomotopyType::empty_type();
    HomologySummary h = reduced_homology(multipath_complex(tournament(n)));
    if (!h.torsion_free())
        throw std::domain_error("tournament complex with torsion");
    if (h.reduced_euler() != chi_tournament(n))
        throw std::logic_error("tournament homology disagrees with the closed form");
    return HomotopyType::wedge_from_homology(h);
}

LawCheck suspension_law_check(const Digraph& g) {
    bool has_sink_with_indegree = false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.out_degree(v) == 0 && g.in_degree(v) > 0) has_sink_with_indegree = true;
    if (!g.weakly_connected() || !has_sink_with_indegree) return LawCheck::skipped;

    HomologySummary base = reduced_homology(multipath_complex(g));
    HomologySummary suspended = reduced_homology(multipath_complex(suspension(g)));
    HomologySummary expected =
        base.empty_complex ? HomologySummary{false, {1}, {{}}} : base.shifted(1);
    return suspended.same_groups(expected) ? LawCheck::pass : LawCheck::fail;
}

HomologySummary oracle_homology(const Digraph& g, long long direct_face_limit) {
    long long total = count_multipaths_up_to(g, direct_face_limit + 1) - 1;
    if (total <= direct_face_limit) return reduced_homology(multipath_complex(g));
    // Too big to build: exact homology of every module, joined. The join
    // law itself is validated independently on brute-force-sized corpora.
    std::vector<HomologySummary> parts;
    for (const auto& mod : decompose(g).modules)
        parts.push_back(reduced_homology(multipath_complex(subgraph_from_edges(g, mod))));
    return join_homology(parts);
}

OracleComparison compare_with_oracle(const HomotopyType& type, const Digraph& g,
                                     long long direct_face_limit) {
    HomologySummary actual = oracle_homology(g, direct_face_limit);
    HomologySummary predicted = type.homology();
    OracleComparison out;
    out.match = predicted.same_groups(actual);
    if (!out.match)
        out.detail = "classifier " + predicted.to_string() + " vs oracle " + actual.to_string();
    return out;
}

}  // namespace mpx
