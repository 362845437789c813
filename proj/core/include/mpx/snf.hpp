#ifndef MPX_SNF_HPP
#define MPX_SNF_HPP

#include <unordered_map>
#include <vector>

#include "mpx/ints.hpp"

namespace mpx {

/// Sparse integer matrix with row- and column-indexed storage, the input
/// format for Smith normal form. Entries accumulate; zeros are erased.
class SparseIntMatrix {
  public:
    SparseIntMatrix() = default;
    SparseIntMatrix(long long rows, long long cols);

    void add(long long row, long long col, Int value);

    long long rows() const noexcept { return rows_; }
    long long cols() const noexcept { return cols_; }
    long long nonzeros() const noexcept { return nnz_; }
    Int get(long long row, long long col) const;

    static SparseIntMatrix from_dense(const std::vector<std::vector<Int>>& dense);
    std::vector<std::vector<Int>> to_dense() const;

    const std::unordered_map<long long, Int>& row(long long r) const { return row_.at(r); }
    const std::unordered_map<long long, Int>& col(long long c) const { return col_.at(c); }

  private:
    friend struct SnfWorkspace;
    long long rows_ = 0, cols_ = 0, nnz_ = 0;
    std::vector<std::unordered_map<long long, Int>> row_;
    std::vector<std::unordered_map<long long, Int>> col_;
};

struct SmithNormalForm {
    /// Elementary divisors d1 | d2 | ... | dr, all positive; rank = r.
    std::vector<Int> divisors;
    long long rank = 0;

    std::vector<Int> nontrivial() const;  // divisors > 1
};

/// Exact Smith normal form over the integers. A sparse pass eliminates
/// unit pivots (chosen to limit fill-in) without any coefficient growth;
/// whatever survives is handed to a dense textbook reduction with
/// arbitrary-precision entries, where torsion, if any, lives.
SmithNormalForm smith_normal_form(SparseIntMatrix m);

}  // namespace mpx

#endif
