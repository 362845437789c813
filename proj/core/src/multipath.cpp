#include "mpx/multipath.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace mpx {

namespace {

// Backtracking state over a partial union of directed paths. outUsed/inUsed
// cap the degrees at one; head/tail pointers detect cycles in O(1):
// head[x] is the start of x's path whenever x is a path end, tail[x] the
// end whenever x is a path start. Adding (u,v) closes a cycle exactly when
// u's path starts at v.
struct PathTracker {
    std::vector<char> out_used, in_used;
    std::vector<int> head, tail;

    explicit PathTracker(int n) : out_used(n, 0), in_used(n, 0), head(n), tail(n) {
        for (int v = 0; v < n; ++v) head[v] = tail[v] = v;
    }

    bool can_add(const Edge& e) const {
        if (out_used[e.source] || in_used[e.target]) return false;
        return head[e.source] != head[e.target];
    }

    // Returns undo data (head of u's path, tail of v's path).
    std::pair<int, int> add(const Edge& e) {
        int hu = head[e.source];
        int tv = tail[e.target];
        out_used[e.source] = 1;
        in_used[e.target] = 1;
        tail[hu] = tv;
        head[tv] = hu;
        return {hu, tv};
    }

    void remove(const Edge& e, std::pair<int, int> undo) {
        auto [hu, tv] = undo;
        out_used[e.source] = 0;
        in_used[e.target] = 0;
        tail[hu] = e.source;
        head[tv] = e.target;
    }
};

template <typename Visit>
void dfs(const Digraph& g, PathTracker& st, std::vector<int>& cur, int next, Visit&& visit) {
    visit(cur);
    int m = g.edge_count();
    for (int j = next; j < m; ++j) {
        const Edge& e = g.edge(j);
        if (!st.can_add(e)) continue;
        auto undo = st.add(e);
        cur.push_back(j);
        dfs(g, st, cur, j + 1, visit);
        cur.pop_back();
        st.remove(e, undo);
    }
}

}  // namespace

bool multipath_less(const Multipath& a, const Multipath& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
}

bool is_multipath(const Digraph& g, const std::vector<int>& edge_ids) {
    PathTracker st(g.vertex_count());
    std::vector<char> seen(g.edge_count(), 0);
    for (int id : edge_ids) {
        if (id < 0 || id >= g.edge_count())
            throw std::out_of_range("is_multipath: invalid edge index");
        if (seen[id]) continue;
        seen[id] = 1;
        const Edge& e = g.edge(id);
        if (!st.can_add(e)) return false;
        st.add(e);
    }
    return true;
}

void for_each_multipath(const Digraph& g,
                        const std::function<void(const std::vector<int>&)>& visit) {
    PathTracker st(g.vertex_count());
    std::vector<int> cur;
    dfs(g, st, cur, 0, visit);
}

std::vector<Multipath> enumerate_multipaths(const Digraph& g, std::uint64_t max_count,
                                            int threads) {
    std::vector<Multipath> out;
    if (threads <= 1) {
        PathTracker st(g.vertex_count());
        std::vector<int> cur;
        dfs(g, st, cur, 0, [&](const std::vector<int>& mp) {
            if (max_count && out.size() >= max_count)
                throw std::length_error("enumerate_multipaths: count cap exceeded");
            out.push_back({mp});
        });
    } else {
        // Shard by smallest edge index; state is rebuilt per shard so the
        // workers never share mutable data. Subtree results concatenated in
        // root order reproduce the single-threaded lex order.
        int m = g.edge_count();
        std::vector<std::vector<Multipath>> per_root(m);
        std::atomic<int> next_root{0};
        auto worker = [&]() {
            while (true) {
                int j = next_root.fetch_add(1);
                if (j >= m) return;
                PathTracker st(g.vertex_count());
                const Edge& e = g.edge(j);
                auto undo = st.add(e);
                std::vector<int> cur{j};
                dfs(g, st, cur, j + 1,
                    [&](const std::vector<int>& mp) { per_root[j].push_back({mp}); });
                st.remove(e, undo);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        out.push_back({});
        for (int j = 0; j < m; ++j) {
            out.insert(out.end(), std::make_move_iterator(per_root[j].begin()),
                       std::make_move_iterator(per_root[j].end()));
            per_root[j].clear();
        }
        if (max_count && out.size() > max_count)
            throw std::length_error("enumerate_multipaths: count cap exceeded");
    }
    std::stable_sort(out.begin(), out.end(), [](const Multipath& a, const Multipath& b) {
        return a.edges.size() < b.edges.size();
    });
    return out;
}

std::vector<long long> count_by_length(const Digraph& g) {
    std::vector<long long> counts;
    for_each_multipath(g, [&](const std::vector<int>& mp) {
        std::size_t l = mp.size();
        if (counts.size() <= l) counts.resize(l + 1, 0);
        ++counts[l];
    });
    return counts;
}

long long count_multipaths(const Digraph& g) {
    long long total = 0;
    for_each_multipath(g, [&](const std::vector<int>&) { ++total; });
    return total;
}

namespace {
struct CountCapReached {};

void counting_dfs(const Digraph& g, PathTracker& st, int next, long long cap,
                  long long& total) {
    if (++total > cap) throw CountCapReached{};
    int m = g.edge_count();
    for (int j = next; j < m; ++j) {
        const Edge& e = g.edge(j);
        if (!st.can_add(e)) continue;
        auto undo = st.add(e);
        counting_dfs(g, st, j + 1, cap, total);
        st.remove(e, undo);
    }
}
}  // namespace

long long count_multipaths_up_to(const Digraph& g, long long cap) {
    PathTracker st(g.vertex_count());
    long long total = 0;
    try {
        counting_dfs(g, st, 0, cap, total);
    } catch (const CountCapReached&) {
    }
    return total;
}

long long signed_multipath_count(const Digraph& g) {
    long long total = 0;
    for_each_multipath(g, [&](const std::vector<int>& mp) {
        total += (mp.size() % 2 == 0) ? 1 : -1;
    });
    return total;
}

std::vector<Multipath> maximal_multipaths(const Digraph& g) {
    std::vector<Multipath> all = enumerate_multipaths(g);
    std::vector<Multipath> facets;
    for (const Multipath& mp : all) {
        PathTracker st(g.vertex_count());
        std::vector<char> member(g.edge_count(), 0);
        for (int id : mp.edges) {
            st.add(g.edge(id));
            member[id] = 1;
        }
        bool extendable = false;
        for (int j = 0; j < g.edge_count() && !extendable; ++j)
            if (!member[j] && st.can_add(g.edge(j))) extendable = true;
        if (!extendable && !mp.edges.empty()) facets.push_back(mp);
    }
    return facets;
}

}  // namespace mpx
