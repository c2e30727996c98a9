#pragma once
// Truncated formal power series over an exact rational or a complex
// floating-point coefficient ring.
//
// A tseries<T> of order N holds coefficients of z^0..z^N and all arithmetic
// is exact modulo z^{N+1} (exact in the ring sense; the complex backend is
// exact up to rounding).  Operations require equal orders on both sides, so
// mixed-order bugs surface as errors instead of silent truncation.

#include "shq/mp.hh"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace shq {

template <class T>
class tseries {
public:
    explicit tseries(std::size_t order) : c_(order + 1, T(0)) {}

    static tseries zvar(std::size_t order)
    {
        tseries s(order);
        if (order >= 1) s.c_[1] = T(1);
        return s;
    }

    static tseries constant(const T& v, std::size_t order)
    {
        tseries s(order);
        s.c_[0] = v;
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }

    const T& operator[](std::size_t i) const { return c_.at(i); }
    T& operator[](std::size_t i) { return c_.at(i); }

    friend tseries operator+(const tseries& a, const tseries& b)
    {
        check_orders(a, b);
        tseries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend tseries operator-(const tseries& a, const tseries& b)
    {
        check_orders(a, b);
        tseries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    friend tseries operator*(const tseries& a, const tseries& b)
    {
        check_orders(a, b);
        tseries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.c_[i] == T(0)) continue;
            for (std::size_t j = 0; i + j <= a.order(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend tseries operator*(const T& s, const tseries& a)
    {
        tseries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) r.c_[i] = s * a.c_[i];
        return r;
    }

    friend tseries operator-(const tseries& a)
    {
        return T(-1) * a;
    }

    // q with q*b = a mod z^{N+1}; forward substitution on the Cauchy product.
    friend tseries operator/(const tseries& a, const tseries& b)
    {
        check_orders(a, b);
        if (b.c_[0] == T(0))
            throw std::domain_error("series division by zero constant term");
        tseries q(a.order());
        for (std::size_t n = 0; n <= a.order(); ++n) {
            T acc = a.c_[n];
            for (std::size_t k = 0; k < n; ++k) acc -= q.c_[k] * b.c_[n - k];
            q.c_[n] = acc / b.c_[0];
        }
        return q;
    }

    tseries derivative() const
    {
        tseries r(order());
        for (std::size_t i = 1; i <= order(); ++i) r.c_[i - 1] = T(static_cast<long>(i)) * c_[i];
        r.c_[order()] = T(0);
        return r;
    }

    // Antiderivative with zero constant term; the top coefficient is lost,
    // which is the usual price of differentiating first at fixed order.
    tseries integral() const
    {
        tseries r(order());
        for (std::size_t i = 0; i < order(); ++i) r.c_[i + 1] = c_[i] / T(static_cast<long>(i + 1));
        return r;
    }

    bool operator==(const tseries& b) const { return c_ == b.c_; }

    // Evaluate by Horner at a point of the coefficient ring.
    T eval(const T& x) const
    {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

private:
    static void check_orders(const tseries& a, const tseries& b)
    {
        if (a.order() != b.order())
            throw std::invalid_argument("series order mismatch");
    }

    std::vector<T> c_;
};

// outer(inner) with inner(0) = 0, by Horner over truncated products.
template <class T>
tseries<T> compose(const tseries<T>& outer, const tseries<T>& inner)
{
    if (outer.order() != inner.order())
        throw std::invalid_argument("series order mismatch");
    if (inner[0] != T(0))
        throw std::domain_error("composition requires inner(0) = 0");
    tseries<T> acc(outer.order());
    for (std::size_t i = outer.order() + 1; i-- > 0;) {
        acc = acc * inner;
        acc[0] += outer[i];
    }
    return acc;
}

// Compositional inverse of f (f(0)=0, f'(0)!=0) by Newton iteration on
// f(h) = z; each step doubles the count of correct coefficients.
template <class T>
tseries<T> reverse(const tseries<T>& f)
{
    if (f[0] != T(0)) throw std::domain_error("reversion requires f(0) = 0");
    if (f.order() < 1 || f[1] == T(0))
        throw std::domain_error("reversion requires f'(0) != 0");
    const std::size_t N = f.order();
    tseries<T> h(N);
    h[1] = T(1) / f[1];
    const tseries<T> z = tseries<T>::zvar(N);
    const tseries<T> fp = f.derivative();
    std::size_t correct = 1;
    while (correct <= N) {
        h = h - (compose(f, h) - z) / compose(fp, h);
        correct *= 2;
    }
    return h;
}

// exp of a series.  The rational backend only supports zero constant term
// (exp of a nonzero rational is irrational); the complex backend lifts the
// constant out.  Solves E' = s'E which keeps everything in ring operations.
template <class T>
tseries<T> exp_series(const tseries<T>& s)
{
    const std::size_t N = s.order();
    tseries<T> a = s;
    T lead(1);
    if (s[0] != T(0)) {
        if constexpr (std::is_same_v<T, rat>)
            throw std::domain_error("exp of rational series needs zero constant term");
        else {
            using std::exp;
            lead = exp(s[0]);
            a[0] = T(0);
        }
    }
    tseries<T> e(N);
    e[0] = T(1);
    for (std::size_t n = 1; n <= N; ++n) {
        T acc(0);
        for (std::size_t k = 1; k <= n; ++k)
            acc += T(static_cast<long>(k)) * a[k] * e[n - k];
        e[n] = acc / T(static_cast<long>(n));
    }
    return lead * e;
}

// log of a series with nonzero constant term, via L' = s'/s.  The rational
// backend requires constant term 1 so that L(0) = 0 stays rational.
template <class T>
tseries<T> log_series(const tseries<T>& s)
{
    if (s[0] == T(0)) throw std::domain_error("log of series with zero constant term");
    T head(0);
    if (s[0] != T(1)) {
        if constexpr (std::is_same_v<T, rat>)
            throw std::domain_error("log of rational series needs constant term 1");
        else {
            using std::log;
            head = log(s[0]);
        }
    }
    tseries<T> l = (s.derivative() / s).integral();
    l[0] = head;
    return l;
}

tseries<cplx> to_complex(const tseries<rat>& s);

} // namespace shq
