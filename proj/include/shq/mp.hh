#pragma once
// Arbitrary-precision scalar types used across the library.
//
// Exact combinatorics runs on gmp rationals.  Numerical analysis runs on
// mpfr reals and on complex numbers built from the mpfr backend through
// complex_adaptor, so a single precision knob controls both.  Expression
// templates are switched off: intermediates here are cheap relative to the
// mpfr calls and value semantics keep the code readable.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/complex_adaptor.hpp>

#include <string>
#include <utility>

namespace shq {

namespace mp = boost::multiprecision;

using rat = mp::number<mp::gmp_rational, mp::et_off>;
using bigint = mp::number<mp::gmp_int, mp::et_off>;
using real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using cplx = mp::number<mp::complex_adaptor<mp::mpfr_float_backend<0>>, mp::et_off>;

// Working precision in bits.  mpfr_float_backend<0> tracks a thread-local
// default in decimal digits; the complex adaptor has no knob of its own and
// picks up the scalar default at construction.  Keep a bit-level interface
// since all precision laws in the analysis code are derived in bits.
inline void set_precision_bits(unsigned bits)
{
    unsigned digits10 = static_cast<unsigned>(bits * 0.30103) + 2;
    real::default_precision(digits10);
}

inline unsigned precision_bits()
{
    return static_cast<unsigned>((real::default_precision() - 2) / 0.30103);
}

// RAII guard: set precision for a scope, restore on exit.
class precision_guard {
public:
    explicit precision_guard(unsigned bits)
        : saved_(real::default_precision())
    {
        set_precision_bits(bits);
    }
    ~precision_guard() { real::default_precision(saved_); }
    precision_guard(const precision_guard&) = delete;
    precision_guard& operator=(const precision_guard&) = delete;

private:
    unsigned saved_;
};

// pi at the current working precision
inline real const_pi()
{
    real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

inline real to_real(const rat& q)
{
    return real(numerator(q)) / real(denominator(q));
}

inline cplx to_cplx(const rat& q) { return cplx(to_real(q)); }

inline real re(const cplx& z) { return z.real(); }
inline real im(const cplx& z) { return z.imag(); }

inline rat rat_pow(const rat& x, long e)
{
    rat r(1);
    rat base = e >= 0 ? x : rat(1) / x;
    unsigned long n = e >= 0 ? static_cast<unsigned long>(e)
                             : static_cast<unsigned long>(-e);
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

inline bigint factorial(unsigned n)
{
    bigint r(1);
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline bigint binomial(unsigned n, unsigned k)
{
    if (k > n) return bigint(0);
    if (k > n - k) k = n - k;
    bigint r(1);
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

} // namespace shq
