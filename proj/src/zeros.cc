#include "shq/zeros.hh"

#include <algorithm>
#include <stdexcept>

namespace shq {

namespace {

void horner(const std::vector<cplx>& c, const cplx& z, cplx& p, cplx& dp) {
    p = cplx(0);
    dp = cplx(0);
    for (std::size_t i = c.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
}

real norm_residual(const std::vector<cplx>& c, const cplx& z) {
    cplx p, dp;
    horner(c, z, p, dp);
    real scale(0), zp(1), az = abs(z);
    for (std::size_t i = 0; i < c.size(); ++i) {
        scale += abs(c[i]) * zp;
        zp *= az;
    }
    return scale > 0 ? abs(p) / scale : abs(p);
}

std::vector<cplx> aberth_once(const std::vector<cplx>& c, unsigned bits) {
    precision_guard pg(bits);
    std::size_t deg = c.size() - 1;
    std::vector<cplx> z(deg);
    real rg;
    if (abs(c[0]) > 0)
        rg = pow(abs(c[0] / c[deg]), real(1) / static_cast<int>(deg));
    else
        rg = real(1);
    real twopi = 2 * const_pi();
    for (std::size_t j = 0; j < deg; ++j) {
        // staggered radii break root-symmetry stalls deterministically
        real r = rg * (real(9) / 10 + real(2 * j) / (10 * deg));
        real th = twopi * real(j) / deg + real(2) / 5;
        z[j] = cplx(r * cos(th), r * sin(th));
    }
    real stop = ldexp(real(1), -static_cast<long>(bits) + 24);
    for (int it = 0; it < 600; ++it) {
        real worst(0);
        for (std::size_t j = 0; j < deg; ++j) {
            cplx p, dp;
            horner(c, z[j], p, dp);
            if (abs(p) == 0)
                continue;
            cplx w = abs(dp) > 0 ? p / dp : cplx(stop);
            cplx s(0);
            for (std::size_t k = 0; k < deg; ++k)
                if (k != j)
                    s += cplx(1) / (z[j] - z[k]);
            cplx den = cplx(1) - w * s;
            cplx corr = abs(den) > 0 ? w / den : w;
            z[j] -= corr;
            real rel = abs(corr) / (1 + abs(z[j]));
            if (rel > worst) worst = rel;
        }
        if (worst < stop)
            return z;
    }
    throw std::runtime_error("root iteration stalled at " + std::to_string(bits) + " bits");
}

} // namespace

std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs, unsigned bits) {
    if (coeffs.size() < 2)
        return {};
    if (!(abs(coeffs.back()) > 0))
        throw std::domain_error("leading coefficient must be nonzero");
    std::vector<cplx> c = coeffs;
    std::vector<cplx> roots;
    while (c.size() > 1 && abs(c.front()) == 0) {
        roots.push_back(cplx(0));
        c.erase(c.begin());
    }
    if (c.size() < 2)
        return roots;

    real thr;
    {
        precision_guard pg(std::max(bits, 64u));
        thr = pow(real(10), -real(bits) / 8);
    }
    for (unsigned attempt_bits = bits;; attempt_bits *= 2) {
        std::vector<cplx> z = aberth_once(c, attempt_bits);
        precision_guard pg(attempt_bits);
        real worst(0);
        for (const cplx& r : z) {
            real res = norm_residual(c, r);
            if (res > worst) worst = res;
        }
        if (worst <= thr) {
            roots.insert(roots.end(), z.begin(), z.end());
            return roots;
        }
        if (attempt_bits >= bits * 4)
            throw std::runtime_error("root residuals did not reach the target at " +
                                     std::to_string(attempt_bits) + " bits");
    }
}

line_report critical_line_report(const quadratic_q& q, unsigned n, unsigned bits,
                                 const real& tol) {
    poly_x P = q.form == quadratic_q::form_kind::ab
                   ? hn_poly(q.a, q.b, n)
                   : zform_hn_poly(q.z1, q.z2, n);
    precision_guard pg(bits);
    std::vector<cplx> c(P.c.size());
    for (std::size_t i = 0; i < P.c.size(); ++i)
        c[i] = to_cplx(P.c[i]);

    line_report rep;
    rep.n = n;
    rep.max_line_distance = real(0);
    rep.residual_max = real(0);
    std::vector<cplx> roots = poly_roots(c, bits);

    real half = real(1) / 2;
    for (const cplx& x : roots) {
        zero_info zi;
        zi.x = x;
        zi.line_distance = abs(re(x) - half);
        if (abs(x) <= tol)
            zi.cls = zero_class::trivial_zero;
        else if (abs(x - cplx(1)) <= tol)
            zi.cls = zero_class::trivial_one;
        else if (n % 2 == 1 && abs(x - cplx(half)) <= tol)
            zi.cls = zero_class::trivial_half;
        else if (zi.line_distance <= tol)
            zi.cls = zero_class::on_line;
        else
            zi.cls = zero_class::off_line;
        switch (zi.cls) {
        case zero_class::trivial_zero:
        case zero_class::trivial_one:
        case zero_class::trivial_half:
            ++rep.trivial;
            break;
        case zero_class::on_line:
            ++rep.on_line;
            if (zi.line_distance > rep.max_line_distance)
                rep.max_line_distance = zi.line_distance;
            break;
        case zero_class::off_line:
            ++rep.off_line;
            if (zi.line_distance > rep.max_line_distance)
                rep.max_line_distance = zi.line_distance;
            break;
        }
        real res = norm_residual(c, x);
        if (res > rep.residual_max)
            rep.residual_max = res;
        rep.zeros.push_back(zi);
    }

    // the multiset of roots must be closed under x -> 1-x and conjugation
    rep.symmetric = true;
    for (const zero_info& zi : rep.zeros) {
        real d_ref = real(1e6), d_conj = real(1e6);
        for (const zero_info& zj : rep.zeros) {
            d_ref = std::min(d_ref, abs(zj.x - (cplx(1) - zi.x)));
            d_conj = std::min(d_conj, abs(zj.x - conj(zi.x)));
        }
        if (d_ref > 2 * tol || d_conj > 2 * tol)
            rep.symmetric = false;
    }

    cplx sum(0);
    for (const zero_info& zi : rep.zeros)
        sum += zi.x;
    cplx expect = -c[c.size() - 2] / c.back();
    real scale = std::max(real(1), abs(expect));
    rep.vieta_gap = abs(sum - expect) / scale;
    return rep;
}

count_result line_zero_count(const critical_data& cd, unsigned n, unsigned grid,
                             const real& tmax) {
    if (grid < 8)
        grid = 8;
    auto pass = [&](unsigned g, bool& warn) -> unsigned {
        std::vector<real> vals(g);
        for (unsigned i = 1; i <= g; ++i) {
            real t = tmax * real(i) / g;
            cplx ph = exact_pi_h(cd, n, t);
            vals[i - 1] = parity_component(ph, n);
        }
        unsigned changes = 0;
        warn = false;
        for (unsigned i = 0; i + 1 < g; ++i) {
            if (vals[i] * vals[i + 1] < 0)
                ++changes;
            real a = abs(vals[i]), b = abs(vals[i + 1]);
            if (a > 0 && b > 0 && (a / b > real(1e6) || b / a > real(1e6)))
                warn = true;
        }
        return changes;
    };
    count_result out;
    out.n = n;
    out.tmax = tmax;
    bool warn_a = false, warn_b = false;
    unsigned coarse = pass(grid, warn_a);
    unsigned fine = pass(grid * 2, warn_b);
    out.sign_changes = fine;
    out.grid = grid * 2;
    out.refined_stable = coarse == fine;
    out.scale_warning = warn_a || warn_b;
    return out;
}

} // namespace shq
