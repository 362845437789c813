#include "mpx/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace mpx {

SparseIntMatrix::SparseIntMatrix(long long rows, long long cols)
    : rows_(rows), cols_(cols), row_(rows), col_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative shape");
}

void SparseIntMatrix::add(long long r, long long c, Int value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix: index out of range");
    if (value == 0) return;
    auto [it, inserted] = row_[r].try_emplace(c, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) {
            row_[r].erase(it);
            col_[c].erase(r);
            --nnz_;
            return;
        }
        col_[c][r] = it->second;
        return;
    }
    col_[c][r] = it->second;
    ++nnz_;
}

Int SparseIntMatrix::get(long long r, long long c) const {
    auto it = row_.at(r).find(c);
    return it == row_.at(r).end() ? Int(0) : it->second;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<Int>>& dense) {
    long long rows = static_cast<long long>(dense.size());
    long long cols = rows ? static_cast<long long>(dense[0].size()) : 0;
    SparseIntMatrix m(rows, cols);
    for (long long r = 0; r < rows; ++r)
        for (long long c = 0; c < cols; ++c) m.add(r, c, dense[r][c]);
    return m;
}

std::vector<std::vector<Int>> SparseIntMatrix::to_dense() const {
    std::vector<std::vector<Int>> dense(rows_, std::vector<Int>(cols_, 0));
    for (long long r = 0; r < rows_; ++r)
        for (const auto& [c, v] : row_[r]) dense[r][c] = v;
    return dense;
}

std::vector<Int> SmithNormalForm::nontrivial() const {
    std::vector<Int> out;
    for (const Int& d : divisors)
        if (d > 1) out.push_back(d);
    return out;
}

namespace {

bool is_unit(const Int& v) { return v == 1 || v == -1; }

// Dense textbook reduction for whatever the sparse pass leaves behind.
// Pivot on the smallest nonzero magnitude, reduce its row and column by
// Euclidean steps, and restart whenever a division leaves a remainder or
// an off-block entry is not divisible by the pivot.
std::vector<Int> dense_snf(std::vector<std::vector<Int>> a) {
    std::vector<Int> divisors;
    long long rows = static_cast<long long>(a.size());
    long long cols = rows ? static_cast<long long>(a[0].size()) : 0;
    long long t = 0;
    while (t < rows && t < cols) {
        long long pi = -1, pj = -1;
        Int best;
        for (long long i = t; i < rows; ++i)
            for (long long j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                Int mag = abs(a[i][j]);
                if (pi < 0 || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // block is zero
        std::swap(a[t], a[pi]);
        for (long long i = t; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

        bool stable = false;
        while (!stable) {
            stable = true;
            for (long long i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                if (q != 0)
                    for (long long j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {  // remainder strictly smaller: swap up
                    std::swap(a[t], a[i]);
                    stable = false;
                }
            }
            if (!stable) continue;
            for (long long j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                if (q != 0)
                    for (long long i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (long long i = t; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    stable = false;
                }
            }
            if (!stable) continue;
            // Pivot now alone in its row and column; enforce divisibility.
            for (long long i = t + 1; i < rows && stable; ++i)
                for (long long j = t + 1; j < cols && stable; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (long long jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                        stable = false;
                    }
        }
        divisors.push_back(abs(a[t][t]));
        ++t;
    }
    return divisors;
}

}  // namespace

struct SnfWorkspace {
    SparseIntMatrix& m;
    // Columns keyed by (nnz, col) so cheap pivots are found first.
    std::set<std::pair<long long, long long>> queue;

    explicit SnfWorkspace(SparseIntMatrix& mat) : m(mat) {
        for (long long c = 0; c < m.cols_; ++c)
            if (!m.col_[c].empty()) queue.insert({static_cast<long long>(m.col_[c].size()), c});
    }

    void queue_erase(long long c, long long old_nnz) { queue.erase({old_nnz, c}); }
    void queue_update(long long c, long long old_nnz) {
        if (old_nnz) queue.erase({old_nnz, c});
        if (!m.col_[c].empty())
            queue.insert({static_cast<long long>(m.col_[c].size()), c});
    }

    void set_entry(long long r, long long c, const Int& v) {
        auto& rowmap = m.row_[r];
        auto& colmap = m.col_[c];
        auto it = rowmap.find(c);
        if (v == 0) {
            if (it != rowmap.end()) {
                rowmap.erase(it);
                colmap.erase(r);
                --m.nnz_;
            }
            return;
        }
        if (it == rowmap.end()) {
            rowmap.emplace(c, v);
            colmap.emplace(r, v);
            ++m.nnz_;
        } else {
            it->second = v;
            colmap[r] = v;
        }
    }

    // Find a +-1 pivot with a small Markowitz score, preferring sparse
    // columns. Returns {row, col} or {-1, -1}.
    std::pair<long long, long long> find_unit_pivot() {
        constexpr int kCandidates = 12;
        long long best_r = -1, best_c = -1;
        long long best_score = -1;
        int seen = 0;
        for (auto it = queue.begin(); it != queue.end() && seen < kCandidates; ++it) {
            long long c = it->second;
            for (const auto& [r, v] : m.col_[c]) {
                if (!is_unit(v)) continue;
                long long score = (static_cast<long long>(m.row_[r].size()) - 1) *
                                  (static_cast<long long>(m.col_[c].size()) - 1);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    best_r = r;
                    best_c = c;
                }
            }
            if (best_score == 0) break;
            ++seen;
        }
        if (best_r >= 0) return {best_r, best_c};
        // Fall back to a full scan before giving up on the sparse phase.
        for (const auto& [nnz, c] : queue)
            for (const auto& [r, v] : m.col_[c])
                if (is_unit(v)) return {r, c};
        return {-1, -1};
    }

    // Eliminate a +-1 pivot: column operations clear the pivot row, after
    // which the pivot column can be dropped outright (the implied row
    // operations touch nothing else). Contributes elementary divisor 1.
    void eliminate(long long pr, long long pc) {
        Int pv = m.row_[pr][pc];  // +-1
        std::vector<std::pair<long long, Int>> row_entries(m.row_[pr].begin(), m.row_[pr].end());
        std::vector<std::pair<long long, Int>> col_entries(m.col_[pc].begin(), m.col_[pc].end());
        for (const auto& [c2, a] : row_entries) {
            if (c2 == pc) continue;
            Int f = a * pv;  // a / pv
            long long old_nnz = static_cast<long long>(m.col_[c2].size());
            for (const auto& [r2, w] : col_entries) {
                auto it = m.row_[r2].find(c2);
                Int cur = (it == m.row_[r2].end()) ? Int(0) : it->second;
                set_entry(r2, c2, cur - f * w);
            }
            queue_update(c2, old_nnz);
        }
        // Drop pivot column and row.
        queue_erase(pc, static_cast<long long>(m.col_[pc].size()));
        for (const auto& [r2, w] : col_entries) {
            m.row_[r2].erase(pc);
            --m.nnz_;
        }
        m.col_[pc].clear();
        m.row_[pr].clear();
    }
};

SmithNormalForm smith_normal_form(SparseIntMatrix m) {
    SmithNormalForm result;
    long long unit_count = 0;
    {
        SnfWorkspace ws(m);
        while (true) {
            auto [r, c] = ws.find_unit_pivot();
            if (r < 0) break;
            ws.eliminate(r, c);
            ++unit_count;
        }
    }
    result.divisors.assign(unit_count, Int(1));

    if (m.nonzeros() > 0) {
        // Compact the survivors into a small dense block.
        std::vector<long long> live_rows, live_cols;
        std::vector<long long> col_pos(m.cols(), -1);
        for (long long c = 0; c < m.cols(); ++c)
            if (!m.col(c).empty()) {
                col_pos[c] = static_cast<long long>(live_cols.size());
                live_cols.push_back(c);
            }
        for (long long r = 0; r < m.rows(); ++r)
            if (!m.row(r).empty()) live_rows.push_back(r);
        std::vector<std::vector<Int>> block(live_rows.size(),
                                            std::vector<Int>(live_cols.size(), 0));
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : m.row(live_rows[i])) block[i][col_pos[c]] = v;
        std::vector<Int> rest = dense_snf(std::move(block));
        for (Int& d : rest) result.divisors.push_back(std::move(d));
    }
    result.rank = static_cast<long long>(result.divisors.size());
    return result;
}

}  // namespace mpx
