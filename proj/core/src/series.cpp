#include "mpx/series.hpp"

#include <stdexcept>

#include "mpx/formulas.hpp"

namespace mpx {

TruncatedSeries::TruncatedSeries(int order, Rat constant) : order_(order) {
    if (order < 0) throw std::invalid_argument("series: negative order");
    c_.assign(order + 1, Rat(0));
    c_[0] = std::move(constant);
}

TruncatedSeries TruncatedSeries::x(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
}

Int TruncatedSeries::egf_coefficient(int n) const {
    Rat v = c_.at(n) * Rat(factorial(n));
    if (denominator(v) != 1)
        throw std::domain_error("egf_coefficient: not an integer");
    return numerator(v);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (order_ != o.order_) throw std::invalid_argument("series: order mismatch");
    TruncatedSeries r(order_);
    for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + (-o);
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(order_);
    for (int i = 0; i <= order_; ++i) r.c_[i] = -c_[i];
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rat& s) const {
    TruncatedSeries r(order_);
    for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i] * s;
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (order_ != o.order_) throw std::invalid_argument("series: order mismatch");
    TruncatedSeries r(order_);
    for (int i = 0; i <= order_; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= order_; ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::exp() const {
    if (c_[0] != 0) throw std::invalid_argument("series exp: nonzero constant term");
    // e' = f' e  =>  n e_n = sum_{k=1..n} k f_k e_{n-k}
    TruncatedSeries e(order_, 1);
    for (int n = 1; n <= order_; ++n) {
        Rat acc = 0;
        for (int k = 1; k <= n; ++k) acc += Rat(k) * c_[k] * e.c_[n - k];
        e.c_[n] = acc / n;
    }
    return e;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& g) const {
    if (order_ != g.order_) throw std::invalid_argument("series: order mismatch");
    if (g.c_[0] != 0) throw std::invalid_argument("series compose: g(0) != 0");
    TruncatedSeries r(order_, c_[order_]);
    for (int i = order_ - 1; i >= 0; --i) {
        r = r * g;
        r.c_[0] += c_[i];
    }
    return r;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (c_[0] == 0) throw std::invalid_argument("series reciprocal: zero constant term");
    TruncatedSeries r(order_);
    r.c_[0] = Rat(1) / c_[0];
    for (int n = 1; n <= order_; ++n) {
        Rat acc = 0;
        for (int k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
        r.c_[n] = -acc / c_[0];
    }
    return r;
}

BivariateSeries::BivariateSeries(int order, Rat constant) : order_(order) {
    if (order < 0) throw std::invalid_argument("series: negative order");
    c_.resize(order + 1);
    for (int i = 0; i <= order; ++i) c_[i].assign(order + 1 - i, Rat(0));
    c_[0][0] = std::move(constant);
}

BivariateSeries BivariateSeries::x(int order) {
    BivariateSeries s(order);
    if (order >= 1) s.c_[1][0] = 1;
    return s;
}

BivariateSeries BivariateSeries::y(int order) {
    BivariateSeries s(order);
    if (order >= 1) s.c_[0][1] = 1;
    return s;
}

BivariateSeries BivariateSeries::from_univariate_in_x(const TruncatedSeries& f) {
    BivariateSeries s(f.order());
    for (int i = 0; i <= f.order(); ++i) s.c_[i][0] = f.coefficient(i);
    return s;
}

const Rat& BivariateSeries::coefficient(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_)
        throw std::out_of_range("bivariate coefficient out of range");
    return c_[i][j];
}

void BivariateSeries::set_coefficient(int i, int j, Rat v) {
    if (i < 0 || j < 0 || i + j > order_)
        throw std::out_of_range("bivariate coefficient out of range");
    c_[i][j] = std::move(v);
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& o) const {
    if (order_ != o.order_) throw std::invalid_argument("series: order mismatch");
    BivariateSeries r(order_);
    for (int i = 0; i <= order_; ++i)
        for (int j = 0; i + j <= order_; ++j) r.c_[i][j] = c_[i][j] + o.c_[i][j];
    return r;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& o) const {
    return *this + (-o);
}

BivariateSeries BivariateSeries::operator-() const {
    BivariateSeries r(order_);
    for (int i = 0; i <= order_; ++i)
        for (int j = 0; i + j <= order_; ++j) r.c_[i][j] = -c_[i][j];
    return r;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
    if (order_ != o.order_) throw std::invalid_argument("series: order mismatch");
    BivariateSeries r(order_);
    for (int i = 0; i <= order_; ++i)
        for (int j = 0; i + j <= order_; ++j) {
            if (c_[i][j] == 0) continue;
            for (int k = 0; i + j + k <= order_; ++k)
                for (int l = 0; i + j + k + l <= order_; ++l) {
                    if (o.c_[k][l] == 0) continue;
                    r.c_[i + k][j + l] += c_[i][j] * o.c_[k][l];
                }
        }
    return r;
}

BivariateSeries BivariateSeries::reciprocal() const {
    if (c_[0][0] == 0)
        throw std::invalid_argument("series reciprocal: zero constant term");
    BivariateSeries r(order_);
    r.c_[0][0] = Rat(1) / c_[0][0];
    for (int d = 1; d <= order_; ++d) {
        for (int i = 0; i <= d; ++i) {
            int j = d - i;
            Rat acc = 0;
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= j; ++l) {
                    if (k == 0 && l == 0) continue;
                    if (c_[k][l] == 0) continue;
                    acc += c_[k][l] * r.c_[i - k][j - l];
                }
            r.c_[i][j] = -acc / c_[0][0];
        }
    }
    return r;
}

std::vector<Int> egf_complete(int order) {
    // x/(x-1) = -x * 1/(1-x)
    TruncatedSeries one_minus_x(order, 1);
    if (order >= 1) one_minus_x.coefficient(1) = -1;
    TruncatedSeries inner = -(TruncatedSeries::x(order) * one_minus_x.reciprocal());
    TruncatedSeries f = inner.exp();
    std::vector<Int> out;
    for (int n = 0; n <= order; ++n) out.push_back(f.egf_coefficient(n));
    return out;
}

namespace {
TruncatedSeries one_minus_exp_neg_x(int order) {
    TruncatedSeries g = (-TruncatedSeries::x(order)).exp();  // e^-x
    TruncatedSeries one(order, 1);
    return one - g;
}
}  // namespace

std::vector<Int> egf_tournament(int order) {
    TruncatedSeries f = -(one_minus_exp_neg_x(order).exp());
    std::vector<Int> out;
    for (int n = 0; n <= order; ++n) out.push_back(f.egf_coefficient(n));
    return out;
}

std::vector<Int> egf_reversed(int order) {
    // (e^-x - 1) e^(1 - e^-x); the sign is fixed by the enumeration oracle,
    // which pins coefficient n to the reversed-edge Euler characteristic.
    TruncatedSeries g = one_minus_exp_neg_x(order);
    TruncatedSeries f = -(g * g.exp());
    std::vector<Int> out;
    for (int n = 0; n <= order; ++n) out.push_back(f.egf_coefficient(n));
    return out;
}

namespace {

std::vector<std::vector<Int>> extract_mixed(const BivariateSeries& f) {
    int order = f.order();
    std::vector<std::vector<Int>> table(order + 1);
    for (int n = 0; n <= order; ++n) {
        for (int m = 0; n + m <= order; ++m) {
            Rat v = f.coefficient(m, n) * Rat(factorial(m));
            if (denominator(v) != 1)
                throw std::domain_error("mixed generating function: non-integer coefficient");
            table[n].push_back(numerator(v));
        }
    }
    return table;
}

BivariateSeries exp_x(int order) {
    TruncatedSeries e = TruncatedSeries::x(order).exp();
    return BivariateSeries::from_univariate_in_x(e);
}

}  // namespace

std::vector<std::vector<Int>> gf_bipartite(int order) {
    BivariateSeries one(order, 1);
    BivariateSeries xy = BivariateSeries::x(order) * BivariateSeries::y(order);
    BivariateSeries denom = one - BivariateSeries::y(order) + xy;
    // The sign makes the n=0 and m=0 rows equal to the Euler characteristic
    // of the empty complex, matching chi_bipartite's boundary convention.
    BivariateSeries f = -(exp_x(order) * denom.reciprocal());
    return extract_mixed(f);
}

std::vector<std::vector<Int>> gf_bipartite_count(int order) {
    BivariateSeries one(order, 1);
    BivariateSeries xy = BivariateSeries::x(order) * BivariateSeries::y(order);
    BivariateSeries denom = one - BivariateSeries::y(order) - xy;
    BivariateSeries f = exp_x(order) * denom.reciprocal();
    return extract_mixed(f);
}

}  // namespace mpx
