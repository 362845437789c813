#include "mpx/formulas.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>

namespace mpx {

std::optional<Int> IntegerTable::lookup(const std::vector<int>& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

void IntegerTable::store(const std::vector<int>& key, Int value) {
    values_.emplace(key, std::move(value));
}

namespace {
std::mutex table_mutex;
IntegerTable stirling_table("stirling2");
IntegerTable factorial_table("factorial");
}  // namespace

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: n < 0");
    std::lock_guard lock(table_mutex);
    if (auto v = factorial_table.lookup({n})) return *v;
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    factorial_table.store({n}, r);
    return r;
}

Int binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: n < 0");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Int stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
    if (k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    if (k == 0) return 0;
    std::lock_guard lock(table_mutex);
    if (auto v = stirling_table.lookup({n, k})) return *v;
    // S(n,k) = k S(n-1,k) + S(n-1,k-1), filled row by row.
    std::vector<Int> prev{1};  // row 0
    for (int r = 1; r <= n; ++r) {
        std::vector<Int> row(r + 1, 0);
        for (int c = 1; c <= r; ++c) {
            Int a = (c < static_cast<int>(prev.size())) ? prev[c] : Int(0);
            Int b = (c - 1 < static_cast<int>(prev.size())) ? prev[c - 1] : Int(0);
            row[c] = Int(c) * a + b;
            stirling_table.store({r, c}, row[c]);
        }
        prev = std::move(row);
    }
    return *stirling_table.lookup({n, k});
}

Int lah(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("lah: negative argument");
    if (k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    if (k == 0) return 0;
    return binomial(n - 1, k - 1) * factorial(n) / factorial(k);
}

Int bell(int n) {
    Int total = 0;
    for (int k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

Int chi_complete(int n) {
    if (n < 1) throw std::invalid_argument("chi_complete: n < 1");
    Int sum = 0;
    for (int k = 1; k <= n; ++k) {
        Int term = binomial(n - 1, k - 1) * factorial(n) / factorial(k);
        sum += ((n - k - 1) % 2 == 0) ? term : -term;
    }
    return sum;
}

Int chi_tournament(int n) {
    if (n < 1) throw std::invalid_argument("chi_tournament: n < 1");
    Int sum = 0;
    for (int k = 1; k <= n; ++k) {
        Int term = stirling2(n, k);
        sum += ((n - k - 1) % 2 == 0) ? term : -term;
    }
    return sum;
}

Int chi_reversed_tournament(int n) {
    if (n < 3) throw std::invalid_argument("chi_reversed_tournament: n < 3");
    Int sum = 0;
    for (int k = 1; k <= n - 2; ++k) {
        Int term = Int(k) * stirling2(n - 2, k);
        sum += ((n - k - 1) % 2 == 0) ? term : -term;
    }
    return sum;
}

Int chi_bipartite(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("chi_bipartite: negative argument");
    if (n == 0 || m == 0) return -1;  // no edges, empty complex
    Int sum = 0;
    for (int k = 0; k <= std::min(n, m); ++k) {
        Int term = binomial(m, k) * binomial(n, k) * factorial(k);
        sum += (k % 2 == 0) ? -term : term;
    }
    return sum;
}

bool chi_bipartite_recurrence_check(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("recurrence check needs n,m >= 1");
    return chi_bipartite(n, m) ==
           chi_bipartite(n - 1, m) - Int(m) * chi_bipartite(n - 1, m - 1);
}

Int L_poly(const std::vector<Int>& a) {
    int k = static_cast<int>(a.size());
    if (k < 1) throw std::invalid_argument("L_poly: empty argument list");
    if (k > 30) throw std::length_error("L_poly: direct subset evaluation capped at 30 terms");
    Int total = 0;
    for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
        Int term = 1;
        int prev = -1;
        for (int i = 0; i < k; ++i) {
            if (!(mask >> i & 1)) continue;
            if (prev >= 0) term *= i - prev;
            term *= a[i];
            prev = i;
        }
        total += term;
    }
    return total;
}

WedgeCounts wedge_counts_qs(int m) {
    if (m < 0) throw std::invalid_argument("wedge_counts_qs: m < 0");
    WedgeCounts out;
    out.s = Int(1) << ((m + 3) / 2);
    if (m % 2 == 0) {
        out.q = Int(1) << ((m + 2) / 2);
    } else {
        Int q_next = Int(1) << ((m + 3) / 2);
        out.q = Int((m + 3) / 2) * q_next;
    }
    return out;
}

}  // namespace mpx
