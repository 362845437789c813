#include "mpx/digraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mpx {

Digraph::Digraph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("digraph: negative vertex count");
    for (const Edge& e : edges) {
        if (e.source == e.target)
            throw std::invalid_argument("digraph: loop edge rejected");
        if (e.source < 0 || e.source >= n_ || e.target < 0 || e.target >= n_)
            throw std::invalid_argument("digraph: edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    out_edges_.assign(n_, {});
    in_edges_.assign(n_, {});
    for (int i = 0; i < edge_count(); ++i) {
        out_edges_[edges_[i].source].push_back(i);
        in_edges_[edges_[i].target].push_back(i);
    }
}

Digraph Digraph::from_pairs(int vertex_count,
                            const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> es;
    es.reserve(pairs.size());
    for (auto [u, v] : pairs) es.push_back({u, v});
    return Digraph(vertex_count, std::move(es));
}

int Digraph::edge_index(int u, int v) const {
    Edge probe{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
    if (it != edges_.end() && *it == probe)
        return static_cast<int>(it - edges_.begin());
    return -1;
}

bool Digraph::weakly_connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        auto visit = [&](int y) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        };
        for (int e : out_edges_[x]) visit(edges_[e].target);
        for (int e : in_edges_[x]) visit(edges_[e].source);
    }
    return reached == n_;
}

std::vector<int> Digraph::scc_ids() const {
    // Iterative Tarjan.
    std::vector<int> ids(n_, -1), low(n_, 0), num(n_, -1), stack, call;
    std::vector<int> edge_pos(n_, 0);
    std::vector<char> on_stack(n_, 0);
    int counter = 0, comp = 0;
    for (int root = 0; root < n_; ++root) {
        if (num[root] != -1) continue;
        call.push_back(root);
        while (!call.empty()) {
            int v = call.back();
            if (num[v] == -1) {
                num[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (edge_pos[v] < static_cast<int>(out_edges_[v].size())) {
                int w = edges_[out_edges_[v][edge_pos[v]]].target;
                ++edge_pos[v];
                if (num[w] == -1) {
                    call.push_back(w);
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], num[w]);
            }
            if (descended) continue;
            if (low[v] == num[v]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    ids[w] = comp;
                    if (w == v) break;
                }
                ++comp;
            }
            call.pop_back();
            if (!call.empty()) {
                int parent = call.back();
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return ids;
}

bool Digraph::is_acyclic() const {
    std::vector<int> ids = scc_ids();
    std::vector<int> size(n_ == 0 ? 0 : n_, 0);
    for (int v = 0; v < n_; ++v) ++size[ids[v]];
    for (int v = 0; v < n_; ++v)
        if (size[ids[v]] > 1) return false;
    return true;
}

std::vector<std::pair<int, int>> Digraph::underlying_undirected() const {
    std::set<std::pair<int, int>> s;
    for (const Edge& e : edges_)
        s.insert({std::min(e.source, e.target), std::max(e.source, e.target)});
    return {s.begin(), s.end()};
}

std::string Digraph::to_dot() const {
    std::ostringstream os;
    os << "digraph {\n";
    std::vector<char> touched(n_, 0);
    for (const Edge& e : edges_) touched[e.source] = touched[e.target] = 1;
    for (int v = 0; v < n_; ++v)
        if (!touched[v]) os << "  " << v << ";\n";
    for (const Edge& e : edges_) os << "  " << e.source << " -> " << e.target << ";\n";
    os << "}\n";
    return os.str();
}

OrientationWord word_from_string(const std::string& s) {
    OrientationWord w;
    w.reserve(s.size());
    for (char c : s) {
        if (c == 'f' || c == 'F')
            w.push_back(Orient::forward);
        else if (c == 'b' || c == 'B')
            w.push_back(Orient::backward);
        else
            throw std::invalid_argument("orientation word: expected 'f' or 'b'");
    }
    if (w.empty()) throw std::invalid_argument("orientation word: empty");
    return w;
}

Digraph linear_coherent(int edge_count) {
    if (edge_count < 0) throw std::invalid_argument("linear_coherent: n < 0");
    std::vector<Edge> es;
    for (int i = 0; i < edge_count; ++i) es.push_back({i, i + 1});
    return Digraph(edge_count + 1, std::move(es));
}

Digraph linear_alternating(int edge_count) {
    if (edge_count < 1) throw std::invalid_argument("linear_alternating: n < 1");
    std::vector<Edge> es;
    for (int i = 0; i < edge_count; ++i) {
        if (i % 2 == 0)
            es.push_back({i, i + 1});
        else
            es.push_back({i + 1, i});
    }
    return Digraph(edge_count + 1, std::move(es));
}

Digraph polygon_coherent(int edge_count) {
    if (edge_count < 3) throw std::invalid_argument("polygon_coherent: n < 3");
    std::vector<Edge> es;
    for (int i = 0; i < edge_count; ++i) es.push_back({i, (i + 1) % edge_count});
    return Digraph(edge_count, std::move(es));
}

Digraph linear_from_word(const OrientationWord& w) {
    if (w.empty()) throw std::invalid_argument("linear_from_word: empty word");
    std::vector<Edge> es;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] == Orient::forward)
            es.push_back({i, i + 1});
        else
            es.push_back({i + 1, i});
    }
    return Digraph(static_cast<int>(w.size()) + 1, std::move(es));
}

Digraph polygon_from_word(const OrientationWord& w) {
    int n = static_cast<int>(w.size());
    if (n < 3) throw std::invalid_argument("polygon_from_word: word length < 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        int a = i, b = (i + 1) % n;
        if (w[i] == Orient::forward)
            es.push_back({a, b});
        else
            es.push_back({b, a});
    }
    return Digraph(n, std::move(es));
}

Digraph dandelion(int in_leaves, int out_leaves) {
    if (in_leaves < 0 || out_leaves < 0)
        throw std::invalid_argument("dandelion: negative leaf count");
    if (in_leaves + out_leaves < 1)
        throw std::invalid_argument("dandelion: needs at least one edge");
    std::vector<Edge> es;
    for (int i = 0; i < in_leaves; ++i) es.push_back({1 + i, 0});
    for (int j = 0; j < out_leaves; ++j) es.push_back({0, 1 + in_leaves + j});
    return Digraph(in_leaves + out_leaves + 1, std::move(es));
}

Digraph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n < 1");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) es.push_back({i, j});
    return Digraph(n, std::move(es));
}

Digraph tournament(int n) {
    if (n < 1) throw std::invalid_argument("tournament: n < 1");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Digraph(n, std::move(es));
}

Digraph reversed_tournament(int n) {
    if (n < 3) throw std::invalid_argument("reversed_tournament: n < 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(i == 0 && j == n - 1)) es.push_back({i, j});
    es.push_back({n - 1, 0});
    return Digraph(n, std::move(es));
}

Digraph complete_bipartite(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("complete_bipartite: sides must be >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) es.push_back({i, n + j});
    return Digraph(n + m, std::move(es));
}

Digraph incomplete_tournament(int n, const std::vector<int>& removed) {
    if (n < 0) throw std::invalid_argument("incomplete_tournament: n < 0");
    for (std::size_t i = 0; i < removed.size(); ++i) {
        if (removed[i] < 0 || removed[i] > n)
            throw std::invalid_argument("incomplete_tournament: index out of range");
        if (i > 0 && removed[i] <= removed[i - 1])
            throw std::invalid_argument("incomplete_tournament: indices must be strictly increasing");
    }
    std::vector<char> cut(n + 1, 0);
    for (int i : removed) cut[i] = 1;
    std::vector<Edge> es;
    for (int i = 0; i <= n; ++i) {
        if (cut[i]) continue;
        for (int j = i + 1; j <= n; ++j) es.push_back({i, j});
    }
    return Digraph(n + 1, std::move(es));
}

Digraph caterpillar(const std::vector<int>& legs) {
    int s = static_cast<int>(legs.size());
    if (s < 1) throw std::invalid_argument("caterpillar: empty spine");
    for (int m : legs)
        if (m < 0) throw std::invalid_argument("caterpillar: negative leg count");
    // Spine vertex i has colour i%2; every edge points colour 0 -> colour 1.
    std::vector<Edge> es;
    int next = s;
    for (int i = 0; i + 1 < s; ++i) {
        if (i % 2 == 0)
            es.push_back({i, i + 1});
        else
            es.push_back({i + 1, i});
    }
    for (int i = 0; i < s; ++i) {
        for (int m = 0; m < legs[i]; ++m) {
            int leaf = next++;
            if (i % 2 == 0)
                es.push_back({i, leaf});
            else
                es.push_back({leaf, i});
        }
    }
    return Digraph(next, std::move(es));
}

Digraph cone(const Digraph& g) {
    int n = g.vertex_count();
    std::vector<Edge> es = g.edges();
    for (int v = 0; v < n; ++v) es.push_back({v, n});
    return Digraph(n + 1, std::move(es));
}

Digraph suspension(const Digraph& g) {
    int n = g.vertex_count();
    std::vector<Edge> es = g.edges();
    for (int v = 0; v < n; ++v) {
        es.push_back({v, n});
        es.push_back({v, n + 1});
    }
    return Digraph(n + 2, std::move(es));
}

Digraph cartesian_product(const Digraph& g, const Digraph& h) {
    int nh = h.vertex_count();
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        for (int a = 0; a < nh; ++a)
            es.push_back({e.source * nh + a, e.target * nh + a});
    for (const Edge& e : h.edges())
        for (int u = 0; u < g.vertex_count(); ++u)
            es.push_back({u * nh + e.source, u * nh + e.target});
    return Digraph(g.vertex_count() * nh, std::move(es));
}

Digraph disjoint_union(const Digraph& g, const Digraph& h) {
    int n = g.vertex_count();
    std::vector<Edge> es = g.edges();
    for (const Edge& e : h.edges()) es.push_back({e.source + n, e.target + n});
    return Digraph(n + h.vertex_count(), std::move(es));
}

Digraph subgraph_from_edges(const Digraph& g, const std::vector<int>& edge_ids) {
    std::map<int, int> relabel;
    for (int id : edge_ids) {
        const Edge& e = g.edge(id);
        relabel.emplace(e.source, 0);
        relabel.emplace(e.target, 0);
    }
    int next = 0;
    for (auto& [v, label] : relabel) label = next++;
    std::vector<Edge> es;
    es.reserve(edge_ids.size());
    for (int id : edge_ids) {
        const Edge& e = g.edge(id);
        es.push_back({relabel[e.source], relabel[e.target]});
    }
    return Digraph(next, std::move(es));
}

}  // namespace mpx
