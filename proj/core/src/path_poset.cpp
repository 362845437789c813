#include "mpx/path_poset.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace mpx {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// mu(S) = -sum over proper subsets T of S of mu(T); every subset of a
// multipath edge set is again a multipath, so the interval really is the
// full subset lattice.
long long mobius_of_set(const std::vector<int>& edges,
                        std::unordered_map<std::vector<int>, long long, VecHash>& memo) {
    if (edges.empty()) return 1;
    auto it = memo.find(edges);
    if (it != memo.end()) return it->second;
    int k = static_cast<int>(edges.size());
    if (k > 62) throw std::length_error("mobius: interval rank too large");
    long long acc = 0;
    std::vector<int> sub;
    for (std::uint64_t mask = 0; mask + 1 < (1ull << k); ++mask) {
        sub.clear();
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) sub.push_back(edges[i]);
        acc += mobius_of_set(sub, memo);
    }
    memo.emplace(edges, -acc);
    return -acc;
}

}  // namespace

PathPoset::PathPoset(const Digraph& g) : g_(g), elements_(enumerate_multipaths(g)) {}

bool PathPoset::leq(int a, int b) const {
    const auto& ea = elements_.at(a).edges;
    const auto& eb = elements_.at(b).edges;
    return std::includes(eb.begin(), eb.end(), ea.begin(), ea.end());
}

Int PathPoset::mobius_from_bottom(int element) const {
    return mobius_from_bottom(elements_.at(element));
}

Int PathPoset::mobius_from_bottom(const Multipath& m) const {
    std::unordered_map<std::vector<int>, long long, VecHash> memo;
    return mobius_of_set(m.edges, memo);
}

Int chi_via_mobius(const Digraph& g) {
    PathPoset poset(g);
    std::unordered_map<std::vector<int>, long long, VecHash> memo;
    Int total = 0;
    for (const Multipath& m : poset.elements()) total += mobius_of_set(m.edges, memo);
    return -total;
}

Int chi_via_fvector(const Digraph& g) {
    return -Int(signed_multipath_count(g));
}

Int reduced_euler_characteristic(const Digraph& g) {
    Int by_mobius = chi_via_mobius(g);
    Int by_fvector = chi_via_fvector(g);
    if (by_mobius != by_fvector)
        throw std::logic_error("reduced_euler_characteristic: moebius and f-vector routes disagree");
    return by_mobius;
}

}  // namespace mpx
