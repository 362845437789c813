#ifndef MPX_SERIES_HPP
#define MPX_SERIES_HPP

#include <vector>

#include "mpx/ints.hpp"

namespace mpx {

/// Univariate power series over the rationals, truncated at a fixed order.
/// All arithmetic is exact; floating point never enters this module.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order, Rat constant = 0);
    static TruncatedSeries x(int order);

    int order() const noexcept { return order_; }
    const Rat& coefficient(int i) const { return c_.at(i); }
    Rat& coefficient(int i) { return c_.at(i); }

    /// n! * c_n; throws std::domain_error if the result is not an integer.
    Int egf_coefficient(int n) const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries scaled(const Rat& s) const;

    /// exp of a series with zero constant term.
    TruncatedSeries exp() const;
    /// Substitution f(g) for g with zero constant term.
    TruncatedSeries compose(const TruncatedSeries& g) const;
    /// 1/f for f with nonzero constant term.
    TruncatedSeries reciprocal() const;

    bool operator==(const TruncatedSeries&) const = default;

  private:
    int order_;
    std::vector<Rat> c_;
};

/// Bivariate series truncated by total degree; coefficient (i,j) is the
/// x^i y^j term.
class BivariateSeries {
  public:
    explicit BivariateSeries(int order, Rat constant = 0);
    static BivariateSeries x(int order);
    static BivariateSeries y(int order);
    static BivariateSeries from_univariate_in_x(const TruncatedSeries& f);

    int order() const noexcept { return order_; }
    const Rat& coefficient(int i, int j) const;
    void set_coefficient(int i, int j, Rat v);

    BivariateSeries operator+(const BivariateSeries& o) const;
    BivariateSeries operator-(const BivariateSeries& o) const;
    BivariateSeries operator*(const BivariateSeries& o) const;
    BivariateSeries operator-() const;
    BivariateSeries reciprocal() const;

  private:
    int order_;
    std::vector<std::vector<Rat>> c_;  // c_[i][j], i + j <= order
};

/// n! [x^n] e^(x/(x-1)) for n = 0..order. Relation to the closed form:
/// value(n) = (-1)^(n+1) * chi_complete(n) for n >= 1.
std::vector<Int> egf_complete(int order);

/// n! [x^n] of -e^(1-e^(-x)); equals chi_tournament(n) for n >= 1.
std::vector<Int> egf_tournament(int order);

/// n! [x^n] of (e^(-x)-1) e^(1-e^(-x)); coefficient n equals
/// chi_reversed_tournament(n+2) for n >= 1.
std::vector<Int> egf_reversed(int order);

/// Mixed generating function of the bipartite Euler characteristics,
/// exponential in the x (second-index) variable: entry [n][m] is
/// m! [y^n x^m] of -e^x/(1-y+xy) and equals chi_bipartite(n,m).
/// Defined for n+m <= order.
std::vector<std::vector<Int>> gf_bipartite(int order);

/// Same layout for the multipath counts of K_{n,m}:
/// m! [y^n x^m] of e^x/(1-y-xy).
std::vector<std::vector<Int>> gf_bipartite_count(int order);

}  // namespace mpx

#endif
