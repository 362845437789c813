#include "mpx/dynamics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mpx/multipath.hpp"
#include "mpx/path_poset.hpp"
#include "mpx/simplicial.hpp"

namespace mpx {

Stability vertex_stability(const Digraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex_stability: bad vertex");
    return (g.in_degree(v) == 0 || g.out_degree(v) == 0) ? Stability::stable
                                                         : Stability::unstable;
}

RegionView::RegionView(const Digraph& g, std::vector<int> edge_ids) : g_(&g) {
    std::sort(edge_ids.begin(), edge_ids.end());
    edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());
    if (!edge_ids.empty() && (edge_ids.front() < 0 || edge_ids.back() >= g.edge_count()))
        throw std::out_of_range("region: invalid edge index");
    edges_ = std::move(edge_ids);
    member_.assign(g.edge_count(), 0);
    for (int id : edges_) member_[id] = 1;
    for (int id = 0; id < g.edge_count(); ++id)
        if (!member_[id]) complement_.push_back(id);

    std::set<int> support, complement_support;
    for (int id : edges_) {
        support.insert(g.edge(id).source);
        support.insert(g.edge(id).target);
    }
    for (int id : complement_) {
        complement_support.insert(g.edge(id).source);
        complement_support.insert(g.edge(id).target);
    }
    support_.assign(support.begin(), support.end());
    std::set_intersection(support.begin(), support.end(), complement_support.begin(),
                          complement_support.end(), std::back_inserter(boundary_));
}

bool RegionView::spans_connected_subgraph() const {
    if (edges_.empty()) return false;
    std::map<int, std::vector<int>> adj;
    for (int id : edges_) {
        const Edge& e = g_->edge(id);
        adj[e.source].push_back(e.target);
        adj[e.target].push_back(e.source);
    }
    std::set<int> seen;
    std::vector<int> stack{support_.front()};
    seen.insert(support_.front());
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (seen.insert(y).second) stack.push_back(y);
    }
    return seen.size() == support_.size();
}

int RegionView::region_in_degree(int v) const {
    int d = 0;
    for (int id : g_->in_edges(v)) d += member_[id];
    return d;
}
int RegionView::region_out_degree(int v) const {
    int d = 0;
    for (int id : g_->out_edges(v)) d += member_[id];
    return d;
}
int RegionView::complement_in_degree(int v) const {
    return g_->in_degree(v) - region_in_degree(v);
}
int RegionView::complement_out_degree(int v) const {
    return g_->out_degree(v) - region_out_degree(v);
}

RegionCheck is_dynamical_region(const Digraph& g, const std::vector<int>& region_edges) {
    if (region_edges.empty())
        throw std::invalid_argument("is_dynamical_region: empty region");
    RegionView view(g, region_edges);
    if (!view.spans_connected_subgraph())
        throw std::invalid_argument("is_dynamical_region: region not connected");

    for (int v : view.boundary()) {
        std::ostringstream why;
        if (g.in_degree(v) == 0 || g.out_degree(v) == 0) {
            why << "boundary vertex " << v << " is stable in the ambient digraph";
            return {false, why.str()};
        }
        if (view.region_in_degree(v) > 0 && view.region_out_degree(v) > 0) {
            why << "boundary vertex " << v << " is unstable inside the region";
            return {false, why.str()};
        }
        if (view.complement_in_degree(v) > 0 && view.complement_out_degree(v) > 0) {
            why << "boundary vertex " << v << " is unstable in the complement";
            return {false, why.str()};
        }
    }

    std::vector<int> scc = g.scc_ids();
    std::vector<char> member(g.edge_count(), 0);
    for (int id : view.edges()) member[id] = 1;
    for (int id : view.edges()) {
        const Edge& e = g.edge(id);
        if (scc[e.source] != scc[e.target]) continue;  // not on any cycle
        // Every edge of that component must be inside the region.
        for (int other = 0; other < g.edge_count(); ++other) {
            const Edge& f = g.edge(other);
            if (member[other]) continue;
            if (scc[f.source] == scc[e.source] && scc[f.target] == scc[e.source]) {
                std::ostringstream why;
                why << "edge (" << e.source << "," << e.target
                    << ") lies on a directed cycle through edge (" << f.source << ","
                    << f.target << ") outside the region";
                return {false, why.str()};
            }
        }
    }
    return {true, ""};
}

std::vector<int> module_of_edge(const Digraph& g, int e) {
    if (e < 0 || e >= g.edge_count())
        throw std::out_of_range("module_of_edge: invalid edge");
    std::vector<int> scc = g.scc_ids();
    // Edges inside one strongly connected component, grouped.
    std::map<int, std::vector<int>> scc_edges;
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& ed = g.edge(id);
        if (scc[ed.source] == scc[ed.target]) scc_edges[scc[ed.source]].push_back(id);
    }
    std::vector<char> in_module(g.edge_count(), 0), scc_done(g.vertex_count() + 1, 0);
    std::vector<int> work{e};
    in_module[e] = 1;
    auto push = [&](int id) {
        if (!in_module[id]) {
            in_module[id] = 1;
            work.push_back(id);
        }
    };
    while (!work.empty()) {
        int id = work.back();
        work.pop_back();
        const Edge& ed = g.edge(id);
        for (int other : g.out_edges(ed.source)) push(other);
        for (int other : g.in_edges(ed.target)) push(other);
        if (scc[ed.source] == scc[ed.target] && !scc_done[scc[ed.source]]) {
            scc_done[scc[ed.source]] = 1;
            for (int other : scc_edges[scc[ed.source]]) push(other);
        }
    }
    std::vector<int> out;
    for (int id = 0; id < g.edge_count(); ++id)
        if (in_module[id]) out.push_back(id);
    return out;
}

ModuleDecomposition decompose(const Digraph& g) {
    ModuleDecomposition d;
    std::vector<char> assigned(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (assigned[e]) continue;
        std::vector<int> mod = module_of_edge(g, e);
        for (int id : mod) {
            if (assigned[id])
                throw std::logic_error("decompose: modules overlap");
            assigned[id] = 1;
        }
        d.modules.push_back(std::move(mod));
    }
    return d;
}

RegionClass classify_region(const Digraph& g, const std::vector<int>& region_edges) {
    RegionView view(g, region_edges);
    std::set<int> boundary(view.boundary().begin(), view.boundary().end());
    int stable = 0, unstable = 0;
    for (int v : view.support()) {
        if (boundary.count(v)) continue;
        if (vertex_stability(g, v) == Stability::stable)
            ++stable;
        else
            ++unstable;
    }
    if (unstable == 0) return RegionClass::stable;
    if (stable == 0) return RegionClass::unstable;
    return RegionClass::mixed;
}

JoinCheckResult join_euler_check(const Digraph& g, long long direct_face_limit) {
    JoinCheckResult res;
    ModuleDecomposition dec = decompose(g);
    res.chi_whole = chi_via_fvector(g);

    Int product = 1;
    std::vector<HomologySummary> parts;
    bool all_torsion_free = true;
    for (const auto& mod : dec.modules) {
        Digraph sub = subgraph_from_edges(g, mod);
        product *= chi_via_fvector(sub);
        HomologySummary h = reduced_homology(multipath_complex(sub));
        if (!h.torsion_free()) all_torsion_free = false;
        parts.push_back(std::move(h));
    }
    int k = static_cast<int>(dec.modules.size());
    // Join multiplies reduced Euler characteristics with one sign per join;
    // the empty join (no edges) is the empty complex with chi = -1.
    res.chi_join = ((k - 1) % 2 == 0) ? product : -product;
    res.ok = res.chi_whole == res.chi_join;
    if (!res.ok) {
        res.detail = "euler characteristic mismatch";
        return res;
    }

    if (all_torsion_free &&
        count_multipaths_up_to(g, direct_face_limit + 1) <= direct_face_limit + 1) {
        HomologySummary joined = join_homology(parts);
        HomologySummary whole = reduced_homology(multipath_complex(g));
        res.betti_checked = true;
        res.ok = joined.same_groups(whole);
        if (!res.ok)
            res.detail = "betti profile mismatch: join " + joined.to_string() +
                         " vs whole " + whole.to_string();
    }
    return res;
}

}  // namespace mpx
