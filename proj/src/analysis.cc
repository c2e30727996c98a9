#include "shq/analysis.hh"
#include "shq/gammafn.hh"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shq {

namespace {

real carg(const cplx& z) { return atan2(im(z), re(z)); }

struct tvals {
    real T1, T2, T;
};

// Threshold values recomputed from z1, z2 at the current working precision;
// the regime flag is taken from construction time (the sign of E does not
// move with precision for exactly representable inputs).
tvals tv_of(const critical_data& cd) {
    tvals o;
    o.T1 = (cd.z2 - cd.z1) / (cd.z1 + cd.z2);
    o.T2 = (cd.z1 + cd.z2) / (4 * sqrt(cd.z1 * cd.z2));
    o.T = cd.t_is_t2 ? o.T2 : o.T1;
    return o;
}

cplx zeta_k(const critical_data& cd, const real& t, bool second) {
    tvals tv = tv_of(cd);
    if (t < 0)
        throw std::domain_error("saddle curve requires t >= 0");
    real slack = ldexp(tv.T, -40);
    if (t > tv.T + slack)
        throw std::domain_error("saddle curve requires t <= T");
    real pref = (cd.z1 + cd.z2) / 2;
    if (t <= tv.T1) {
        real s = sqrt(tv.T1 * tv.T1 - t * t);
        if (!second)
            return cplx(pref) * (cplx(-s, t) + sqrt(cplx(1 - 2 * t * t, -2 * t * s)));
        return cplx(pref) * (cplx(s, t) + sqrt(cplx(1 - 2 * t * t, 2 * t * s)));
    }
    // arc regime, only reachable when T = T2
    real u = sqrt(t * t - tv.T1 * tv.T1);
    if (!second)
        return cplx(pref) * (cplx(real(0), t + u) + sqrt(cplx(1 - 2 * t * t - 2 * t * u, real(0))));
    return cplx(pref) * (cplx(real(0), t - u) + sqrt(cplx(1 - 2 * t * t + 2 * t * u, real(0))));
}

// phi and phi_zz where t is allowed to be complex (shared by g_zeta).
cplx phi_ct(const critical_data& cd, const cplx& z, const cplx& t) {
    // at t = 0 the t-term vanishes; writing it out would produce 0 * inf when
    // z sits on a branch point (as zeta1(0) = z1 does)
    if (abs(t) == 0)
        return log(z);
    cplx z1(cd.z1), z2(cd.z2);
    cplx S = log(z1 - z) + log(z2 - z) - log(z1 + z) - log(z2 + z);
    return log(z) - cplx(0, 1) * t * S;
}

cplx phi_zz_ct(const critical_data& cd, const cplx& z, const cplx& t) {
    cplx z1(cd.z1), z2(cd.z2), one(1);
    cplx a = one / ((z - z1) * (z - z1)), b = one / ((z - z2) * (z - z2));
    cplx c = one / ((z + z1) * (z + z1)), d = one / ((z + z2) * (z + z2));
    return cplx(-1) / (z * z) + cplx(0, 1) * t * (a + b - c - d);
}

} // namespace

critical_data thresholds(const real& z1, const real& z2) {
    if (!(z1 > 0) || !(z2 > z1))
        throw std::domain_error("thresholds: need z2 > z1 > 0");
    critical_data cd;
    cd.z1 = z1;
    cd.z2 = z2;
    cd.T1 = (z2 - z1) / (z1 + z2);
    cd.T2 = (z1 + z2) / (4 * sqrt(z1 * z2));
    cd.E = z1 * z1 - 6 * z1 * z2 + z2 * z2;
    cd.t_is_t2 = cd.E < 0;
    cd.T = cd.t_is_t2 ? cd.T2 : cd.T1;
    return cd;
}

cplx zeta1(const critical_data& cd, const real& t) { return zeta_k(cd, t, false); }
cplx zeta2(const critical_data& cd, const real& t) { return zeta_k(cd, t, true); }

real quartic_residual(const critical_data& cd, const cplx& z, const real& t) {
    cplx it(real(0), t);
    real s = cd.z1 + cd.z2, p = cd.z1 * cd.z2;
    cplx z2q = z * z, z3q = z2q * z, z4q = z2q * z2q;
    cplx t4 = z4q;
    cplx t3 = cplx(-2) * it * cplx(s) * z3q;
    cplx t2 = cplx(-(cd.z1 * cd.z1 + cd.z2 * cd.z2)) * z2q;
    cplx t1 = cplx(2) * it * cplx(p * s) * z;
    cplx t0 = cplx(p * p);
    real scale = abs(t4) + abs(t3) + abs(t2) + abs(t1) + abs(t0);
    return abs(t4 + t3 + t2 + t1 + t0) / scale;
}

cplx phi(const critical_data& cd, const cplx& z, const real& t) {
    return phi_ct(cd, z, cplx(t));
}

cplx phi_z(const critical_data& cd, const cplx& z, const real& t) {
    cplx z1(cd.z1), z2(cd.z2), one(1);
    cplx S1 = one / (z - z1) + one / (z - z2) - one / (z + z1) - one / (z + z2);
    return one / z - cplx(0, t) * S1;
}

cplx phi_zz(const critical_data& cd, const cplx& z, const real& t) {
    return phi_zz_ct(cd, z, cplx(t));
}

cplx phi_zzz(const critical_data& cd, const cplx& z, const real& t) {
    cplx z1(cd.z1), z2(cd.z2), one(1);
    auto cube = [&](cplx w) { return one / (w * w * w); };
    cplx S3 = cube(z - z1) + cube(z - z2) - cube(z + z1) - cube(z + z2);
    return cplx(2) / (z * z * z) - cplx(0, 2 * t) * S3;
}

cplx phi_zt(const critical_data& cd, const cplx& z) {
    cplx z1(cd.z1), z2(cd.z2), one(1);
    cplx S1 = one / (z - z1) + one / (z - z2) - one / (z + z1) - one / (z + z2);
    return cplx(0, -1) * S1;
}

cplx psi_f(const critical_data& cd, const cplx& z) {
    cplx z1(cd.z1), z2(cd.z2);
    cplx L = log(z1 - z) + log(z2 - z) + log(z1 + z) + log(z2 + z);
    return exp(L / 2) / z;
}

phi_eval phi_at(const critical_data& cd, const cplx& z, const real& t) {
    phi_eval e;
    e.value = phi(cd, z, t);
    e.dz = phi_z(cd, z, t);
    e.dz2 = phi_zz(cd, z, t);
    e.dz3 = phi_zzz(cd, z, t);
    e.psi = psi_f(cd, z);
    return e;
}

// ---------------------------------------------------------------------------
// contour integral
//
// The loop around the cut [z1, oo) splits into one arm continued from above
// and one from below; with the monodromy weights written out,
//
//     J = -e^{2 pi n t} A+  +  e^{-2 pi n t} A-
//
// where each arm runs from z1 to infinity on its own side.  The upper arm is
// pushed off the axis through the saddle zeta1(t), where the integrand
// magnitude stays at the scale of the result, so its working precision is
// the requested accuracy plus guard bits rather than the cancellation depth
// of the cut-hugging pieces.  The lower arm has no saddle in its half plane:
// it stays on the segments, where its internal cancellation is only about
// pi n t / 2 nats, and once e^{-2 pi n t} undercuts the target accuracy it
// is replaced by a magnitude bound.

namespace {

struct lfactor {
    cplx beta;
    cplx alpha;
};

// Taylor coefficients of exp(sum_i beta_i ln(1 + alpha_i s)) through order K.
std::vector<cplx> analytic_series(const std::vector<lfactor>& fs, unsigned K) {
    std::vector<cplx> l(K + 1, cplx(0)), e(K + 1, cplx(0));
    std::vector<cplx> apow(fs.size(), cplx(1));
    for (unsigned m = 1; m <= K; ++m) {
        cplx acc(0);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            apow[i] *= fs[i].alpha;
            acc += fs[i].beta * apow[i];
        }
        l[m] = acc * cplx((m % 2 ? real(1) : real(-1)) / m);
    }
    e[0] = cplx(1);
    for (unsigned m = 1; m <= K; ++m) {
        cplx acc(0);
        for (unsigned k = 1; k <= m; ++k)
            acc += cplx(real(k)) * l[k] * e[m - k];
        e[m] = acc / cplx(real(m));
    }
    return e;
}

struct piece_out {
    cplx val;
    real est;
    real absacc; // sum of piece magnitudes, scales the roundoff floor
};

// integral_0^delta s^x A(s) ds with A the analytic factor described by fs,
// all times the constant prefactor C.
piece_out endpoint_series(const std::vector<lfactor>& fs, const cplx& C, const cplx& x,
                          const real& delta, unsigned K) {
    std::vector<cplx> e = analytic_series(fs, K);
    cplx sum(0);
    real absacc(0);
    cplx dp = exp((x + cplx(1)) * cplx(log(delta)));
    real last(0), mid(0);
    for (unsigned k = 0; k <= K; ++k) {
        cplx term = e[k] * dp / (x + cplx(real(1 + k)));
        sum += term;
        absacc += abs(term);
        if (k == K / 2) mid = abs(term);
        if (k == K) last = abs(term);
        dp *= cplx(delta);
    }
    real est = abs(C) * last * 8;
    // non-decaying tail means delta was out of the series range; report the
    // whole magnitude honestly rather than pretending the cut-off converged
    if (last > mid) est = abs(C) * last * real(1000);
    return {C * sum, est, abs(C) * absacc};
}

template <class G>
piece_out composite_gl(G&& g, const real& a, const real& b, unsigned chunks,
                       unsigned nodes, unsigned bits) {
    auto hi = gauss_legendre(nodes, bits);
    auto lo = gauss_legendre(std::max(4u, nodes / 2), bits);
    cplx total(0);
    real est(0), absacc(0);
    real width = (b - a) / chunks;
    for (unsigned c = 0; c < chunks; ++c) {
        real c0 = a + width * c;
        real mid = c0 + width / 2, half = width / 2;
        cplx vh(0), vl(0);
        for (std::size_t i = 0; i < hi->x.size(); ++i)
            vh += cplx(hi->w[i]) * g(mid + half * hi->x[i]);
        for (std::size_t i = 0; i < lo->x.size(); ++i)
            vl += cplx(lo->w[i]) * g(mid + half * lo->x[i]);
        vh *= cplx(half);
        vl *= cplx(half);
        total += vh;
        est += abs(vh - vl);
        absacc += abs(vh);
    }
    return {total, est, absacc};
}

// Same composite rule, but chunks whose padded midpoint band cannot reach
// lnfloor are dropped and charged to the error estimate.  The integrands
// here decay like e^{-n * quadratic} away from a saddle, so nearly all
// chunks of a long leg are skipped after one probe evaluation each.
template <class G>
piece_out composite_gl_skip(G&& g, const real& a, const real& b, unsigned chunks,
                            unsigned nodes, unsigned bits, const real& lnfloor) {
    auto hi = gauss_legendre(nodes, bits);
    auto lo = gauss_legendre(std::max(4u, nodes / 2), bits);
    cplx total(0);
    real est(0), absacc(0);
    real width = (b - a) / chunks;
    std::vector<real> lm(chunks);
    for (unsigned c = 0; c < chunks; ++c) {
        real m = abs(g(a + width * (real(c) + real(1) / 2)));
        lm[c] = m > 0 ? log(m) : lnfloor - 1000;
    }
    real lw = log(width);
    for (unsigned c = 0; c < chunks; ++c) {
        // neighbour-to-neighbour drift bounds how far the interior of this
        // chunk can rise above its midpoint probe
        real pad(2);
        if (c > 0 && lm[c] - lm[c - 1] > pad) pad = lm[c] - lm[c - 1];
        if (c > 0 && lm[c - 1] - lm[c] > pad) pad = lm[c - 1] - lm[c];
        if (c + 1 < chunks && lm[c + 1] - lm[c] > pad) pad = lm[c + 1] - lm[c];
        if (c + 1 < chunks && lm[c] - lm[c + 1] > pad) pad = lm[c] - lm[c + 1];
        if (lm[c] + pad + lw < lnfloor) {
            est += exp(lm[c] + pad + lw);
            continue;
        }
        real c0 = a + width * c;
        real mid = c0 + width / 2, half = width / 2;
        cplx vh(0), vl(0);
        for (std::size_t i = 0; i < hi->x.size(); ++i)
            vh += cplx(hi->w[i]) * g(mid + half * hi->x[i]);
        for (std::size_t i = 0; i < lo->x.size(); ++i)
            vl += cplx(lo->w[i]) * g(mid + half * lo->x[i]);
        vh *= cplx(half);
        vl *= cplx(half);
        total += vh;
        est += abs(vh - vl);
        absacc += abs(vh);
    }
    return {total, est, absacc};
}

unsigned chunk_count(double nt, double sigma_range, const analysis_config& cfg) {
    double cycles = nt * (sigma_range + 4.0) / 6.283185307179586 + 4.0;
    return static_cast<unsigned>(cycles * cfg.chunk_factor) + 2;
}

// When pieces cancel by D nats the per-chunk rule must truncate below that,
// and the Gauss-Legendre error on a chunk holding c cycles behaves like
// (e pi c / 4m)^{2m}; a fixed node count therefore leaves a floor that no
// amount of precision or chunk splitting can cross at reasonable cost.
unsigned nodes_for_depth(double depth_nats, unsigned base) {
    const double C = 2.718281828459045 * 3.141592653589793 * 0.8;
    unsigned m = base < 8 ? 8 : base;
    while (2.0 * m * std::log(4.0 * m / C) < depth_nats + 64.0 && m < 6000)
        m = m + m / 4 + 8;
    return ((m + 15) / 16) * 16;
}

// log integrand continued to the chosen side of the cut.  All formula cuts
// land on the real axis, so each arm's open half plane is jump-free and the
// boundary values continue the positive-base segment integrands.
struct branch_env {
    cplx z1, z2, x, xm1, np1, ipi; // ipi = +/- i pi selects the side
};

cplx ln_f_side(const branch_env& B, const cplx& z) {
    return B.x * (log(z - B.z1) + log(B.z2 - z) + B.ipi) +
           B.xm1 * (log(B.z1 + z) + log(B.z2 + z)) - B.np1 * log(z);
}

cplx dln_f(const branch_env& B, const cplx& z) {
    cplx one(1);
    return B.x * (one / (z - B.z1) - one / (B.z2 - z)) +
           B.xm1 * (one / (z + B.z1) + one / (z + B.z2)) - B.np1 / z;
}

struct arm_result {
    cplx val;
    real est;
    real remax; // largest Re ln f seen on the path, for precision feedback
};

// Upper arm: z1 -> zeta1 -> out to infinity, entirely in the closed upper
// half plane.  The square-root endpoint is handled by the analytic series
// on a short ray towards the saddle; the legs are chunked by the measured
// total variation of ln f and integrated with the skipping composite rule.
arm_result upper_arm(const critical_data& cd, unsigned n, const real& t,
                     const analysis_config& cfg, unsigned bits, unsigned esc) {
    precision_guard pg(bits);
    const real z1 = cd.z1, z2 = cd.z2;
    const real pi = const_pi();
    branch_env B;
    B.z1 = cplx(z1);
    B.z2 = cplx(z2);
    B.x = cplx(real(1) / 2, real(n) * t);
    B.xm1 = cplx(1) - B.x;
    B.np1 = cplx(real(n + 1));
    B.ipi = cplx(real(0), pi);

    tvals tv = tv_of(cd);
    real tg = t < tv.T ? t : tv.T;
    cplx zs = zeta1(cd, tg);
    cplx dv = zs - B.z1;
    real adv = abs(dv);
    cplx dir = adv > 0 ? dv / cplx(adv) : cplx(real(0), real(1));
    real argdir = carg(dir);

    // leg towards the saddle, long enough to hold the endpoint mass window
    real mw = 8 * z1 * (2 + real(n) * t) / (n + 1);
    real mu = adv > mw ? adv : mw;
    real dcap = std::min(std::min(z2 - z1, z1) / 4, 4 * z1 / (n + 1));
    real delta = std::min(dcap, mu / 2);
    unsigned K = cfg.endpoint_terms + bits / 2;

    std::vector<lfactor> fs = {{B.x, -dir / cplx(z2 - z1)},
                               {B.xm1, dir / cplx(2 * z1)},
                               {B.xm1, dir / cplx(z1 + z2)},
                               {cplx(-real(n + 1)), dir / cplx(z1)}};
    cplx C = exp(B.x * cplx(log(z2 - z1), argdir + pi) +
                 B.xm1 * cplx(log(2 * z1) + log(z1 + z2)) -
                 cplx(real(n + 1) * log(z1))) *
             dir;
    piece_out ep = endpoint_series(fs, C, B.x, delta, K);

    // outgoing direction: probe a fan past the saddle and take the ray that
    // keeps the integrand smallest (the descent direction, near enough)
    cplx P1 = B.z1 + cplx(mu) * dir;
    cplx eout(real(0), real(1));
    {
        bool first = true;
        real best(0);
        for (int k = 1; k <= 7; ++k) {
            real th = pi * k / 12;
            cplx e(cos(th), sin(th));
            real worst(0);
            bool w1 = true;
            for (int j = -2; j <= 3; ++j) {
                real rho = ldexp(mu, j);
                real v = re(ln_f_side(B, P1 + cplx(rho) * e));
                if (w1 || v > worst) worst = v, w1 = false;
            }
            if (first || worst < best) best = worst, eout = e, first = false;
        }
    }

    real aP1 = abs(P1);
    real Rend = std::max(6 * z2, 9 * real(n) * t * (z1 + z2));
    {
        real lr = log(z2) + (bits * real("0.6931471805599453") + 8) / (n - 2);
        if (lr > log(Rend)) Rend = exp(lr);
    }
    real L0 = 2 * mu;
    real LR = std::max(Rend, 2 * L0) + 2 * aP1;
    // |integrand| <= 4 |z|^{1-n} out there and |z| >= rho - |P1| on the ray
    real tail = 4 * pow(Rend, 2 - static_cast<int>(n)) / (n - 2);

    struct legd {
        std::function<cplx(const real&)> zf, dzf;
        real a, b;
        unsigned chunks = 0;
    };
    std::vector<legd> legs;
    legs.push_back({[=](const real& s) { return cplx(z1) + cplx(exp(s)) * dir; },
                    [=](const real& s) { return cplx(exp(s)) * dir; },
                    log(delta), log(mu)});
    legs.push_back({[=](const real& s) { return P1 + cplx(s) * eout; },
                    [=](const real&) { return eout; },
                    real(0), L0});
    legs.push_back({[=](const real& s) { return P1 + cplx(exp(s)) * eout; },
                    [=](const real& s) { return cplx(exp(s)) * eout; },
                    log(L0), log(LR)});

    // probe pass: chunk counts from the swept variation of ln f, and the
    // global path maximum that anchors the skip floor
    real remax = re(ln_f_side(B, zs));
    const int NP = 24;
    for (auto& L : legs) {
        real tot(0), prev(0);
        for (int j = 0; j <= NP; ++j) {
            real s = L.a + (L.b - L.a) * j / NP;
            cplx zz = L.zf(s);
            real rate = abs(dln_f(B, zz) * L.dzf(s));
            real rl = re(ln_f_side(B, zz));
            if (rl > remax) remax = rl;
            if (j) tot += (prev + rate) / 2 * ((L.b - L.a) / NP);
            prev = rate;
        }
        double cyc = static_cast<double>(tot) / 6.283185307179586;
        double mult = cfg.chunk_factor * static_cast<double>(1u << esc);
        double want = cyc * mult + 8.0;
        L.chunks = static_cast<unsigned>(std::min(want, 4.0e6));
    }

    real lnfloor = remax - (bits + 24) * real("0.6931471805599453");
    unsigned m = nodes_for_depth(0.6 * static_cast<double>(bits), cfg.nodes_per_chunk);
    cplx acc = ep.val;
    real est = ep.est + tail;
    real absacc = ep.absacc;
    for (auto& L : legs) {
        auto g = [&](const real& s) { return exp(ln_f_side(B, L.zf(s)) + cplx(log(abs(L.dzf(s))), carg(L.dzf(s)))); };
        piece_out p = composite_gl_skip(g, L.a, L.b, L.chunks, m, bits, lnfloor);
        acc += p.val;
        est += p.est;
        absacc += p.absacc;
    }
    // roundoff floor: each evaluation of exp(ln f) carries about |ln f| ulp
    // of relative error, and cancellation between chunks cannot shrink it,
    // so a sum that cancels below this level is noise and must say so
    real lnf_mag = abs(remax) + 4 * real(n) * (1 + t) + 64;
    est += absacc * lnf_mag * ldexp(real(1), -static_cast<long>(bits));
    return {acc, est, remax};
}

struct segpair {
    cplx I1, I2;
    real est1, est2;
};

// Cut-hugging pieces: I1 over (z1, z2) and I2 over (z2, oo), both with the
// positive branch of the base.  Only the lower arm uses these, in the small
// n t regime where their internal cancellation is mild.
segpair cut_segments(const critical_data& cd, unsigned n, const real& t_in,
                     const analysis_config& cfg, unsigned bits, unsigned esc) {
    precision_guard pg(bits);
    const real z1 = cd.z1, z2 = cd.z2;
    const real t = t_in;
    const cplx x(real(1) / 2, real(n) * t);
    const cplx xm1 = cplx(1) - x;
    const cplx nb(-real(n + 1)); // exponent on u

    // each delta stays at most a quarter of the distance to the nearest
    // singularity of its analytic factor, so the term ratio settles under 1/4
    real d1 = std::min(std::min((z2 - z1) / 4, z1 / 4), 4 * z1 / (n + 1));
    real d2 = std::min((z2 - z1) / 4, 4 * z2 / (n + 1));
    // enough terms that a ratio-1/4 tail clears the full working precision;
    // a fixed count would leave a truncation floor escalation cannot move
    unsigned K = cfg.endpoint_terms + bits / 2;
    // push R out until the dropped tail is below 2^-bits of the z2-endpoint
    // scale; only matters for small n where u^{2-n} decays slowly
    real R = 6 * z2;
    {
        real lr = log(z2) + (bits * real("0.6931471805599453") + 1) / (n - 2);
        if (lr > log(R)) R = exp(lr);
    }

    // endpoint expansions: (value at the endpoint) * s^x * analytic(s)
    std::vector<lfactor> fs_a = {{x, cplx(-1 / (z2 - z1))},
                                 {xm1, cplx(1 / (2 * z1))},
                                 {xm1, cplx(1 / (z1 + z2))},
                                 {nb, cplx(1 / z1)}};
    cplx Ca = exp(x * cplx(log(z2 - z1)) + xm1 * cplx(log(2 * z1) + log(z1 + z2)) -
                  cplx(real(n + 1) * log(z1)));
    piece_out ep_a = endpoint_series(fs_a, Ca, x, d1, K);

    cplx Cb = exp(x * cplx(log(z2 - z1)) + xm1 * cplx(log(z1 + z2) + log(2 * z2)) -
                  cplx(real(n + 1) * log(z2)));
    std::vector<lfactor> fs_b = {{x, cplx(-1 / (z2 - z1))},
                                 {xm1, cplx(-1 / (z1 + z2))},
                                 {xm1, cplx(-1 / (2 * z2))},
                                 {nb, cplx(-1 / z2)}};
    piece_out ep_b = endpoint_series(fs_b, Cb, x, d2, K);

    std::vector<lfactor> fs_c = {{x, cplx(1 / (z2 - z1))},
                                 {xm1, cplx(1 / (z1 + z2))},
                                 {xm1, cplx(1 / (2 * z2))},
                                 {nb, cplx(1 / z2)}};
    piece_out ep_c = endpoint_series(fs_c, Cb, x, d2, K);

    // interior integrands
    auto f1 = [&](const real& u) -> cplx {
        real L1 = log((u - z1) * (z2 - u));
        real L2 = log((z1 + u) * (z2 + u));
        return exp(x * cplx(L1) + xm1 * cplx(L2) - cplx(real(n + 1) * log(u)));
    };
    auto f2 = [&](const real& u) -> cplx {
        real L1 = log((u - z1) * (u - z2));
        real L2 = log((z1 + u) * (z2 + u));
        return exp(x * cplx(L1) + xm1 * cplx(L2) - cplx(real(n + 1) * log(u)));
    };

    double nt = n * static_cast<double>(t);
    unsigned cmul = 1u << esc;
    real half_gap = (z2 - z1) / 2;

    unsigned m = nodes_for_depth(0.6 * static_cast<double>(bits), cfg.nodes_per_chunk);

    real la = log(d1), lb = log(half_gap);
    auto g_left = [&](const real& s) { return f1(z1 + exp(s)) * cplx(exp(s)); };
    piece_out in_left = composite_gl(g_left, la, lb,
                                     cmul * chunk_count(nt, static_cast<double>(lb - la), cfg),
                                     m, bits);

    real lc = log(d2), ld = log(half_gap);
    auto g_right = [&](const real& s) { return f1(z2 - exp(s)) * cplx(exp(s)); };
    piece_out in_right = composite_gl(g_right, lc, ld,
                                      cmul * chunk_count(nt, static_cast<double>(ld - lc), cfg),
                                      m, bits);

    real le = log(d2), lf = log(R - z2);
    auto g_tail = [&](const real& s) { return f2(z2 + exp(s)) * cplx(exp(s)); };
    piece_out in_tail = composite_gl(g_tail, le, lf,
                                     cmul * chunk_count(nt, static_cast<double>(lf - le), cfg),
                                     m, bits);

    // |integrand| <= u^{1-n} past R, so the dropped tail is under R^{2-n}/(n-2)
    real tail_bound = 2 * pow(R, 2 - static_cast<int>(n)) / (n - 2);

    segpair sp;
    sp.I1 = ep_a.val + ep_b.val + in_left.val + in_right.val;
    sp.est1 = ep_a.est + ep_b.est + in_left.est + in_right.est;
    sp.I2 = ep_c.val + in_tail.val;
    sp.est2 = ep_c.est + in_tail.est + tail_bound;
    // roundoff floor, as in the arm quadrature: the segments cancel
    // internally by about pi n t / 2 nats and the estimate must see the
    // level below which that cancellation is meaningless
    real lnf_mag = real(n) * (4 + 4 * t) + 64;
    real ulp = ldexp(real(1), -static_cast<long>(bits));
    sp.est1 += (ep_a.absacc + ep_b.absacc + in_left.absacc + in_right.absacc) * lnf_mag * ulp;
    sp.est2 += (ep_c.absacc + in_tail.absacc) * lnf_mag * ulp;
    return sp;
}

struct contour_diag {
    cplx A_up, A_lo;
    real est_up, est_lo, remax, B_lo;
    bool lower_done = false;
    unsigned bits_lo = 0;
};

// Past the saddle-merge threshold the path maximum of the upper arm sits
// well above the arm's value, so the base budget cannot be trusted; probe
// the path cheaply first and size the arm bits against a lower bound on
// |J| (the answer only grows with t beyond the last zero, so -n Re phi at
// the clamped saddle undershoots ln |J| and the budget overshoots: safe).
// The lower arm always matters here and is sized the same absolute way.
contour_result contour_beyond(const critical_data& cd, unsigned n, const real& t,
                              const analysis_config& cfg, unsigned bits, unsigned esc,
                              contour_diag* dg) {
    arm_result probe = upper_arm(cd, n, t, cfg, 256, 0);

    unsigned bup, blo;
    real Blo, w_probe;
    {
        precision_guard pg(192);
        const real pi = const_pi();
        tvals tv = tv_of(cd);
        real lnw = 2 * real(n) * pi * t;
        real lnJ_low = -real(n) * re(phi(cd, zeta1(cd, tv.T), tv.T));
        real z1 = cd.z1, z2 = cd.z2;
        real Ib1 = (z2 - z1) * (z2 - z1) * z2 * pow(z1, -static_cast<int>(n + 1));
        real Ib2 = 2 * pow(z2, 2 - static_cast<int>(n)) / (n - 2);
        const double ln2 = 0.6931471805599453;
        // arm budget: the headroom the probe actually measured, bounded by
        // the worst case against the |J| lower bound; an undershoot is
        // caught by the roundoff floor in the estimate and escalated
        real du_law = probe.remax - (lnJ_low - lnw);
        real pv = abs(probe.val);
        real du_probe = pv > 0 ? probe.remax - log(pv) + 64 : du_law;
        real du = du_probe < du_law ? du_probe : du_law;
        double needu = (du > 0 ? static_cast<double>(du) / ln2 : 0.0) +
                       cfg.rel_bits + 128 + 64.0 * esc;
        bup = std::max(bits, static_cast<unsigned>(std::min(needu, 4.0e5)));
        // lower arm: biggest weighted segment piece against the same target
        real s1 = real(n) * pi * t + log(Ib1);
        real lnI2 = log(Ib2);
        real dl = (s1 > lnI2 ? s1 : lnI2) - lnJ_low;
        double needl = (dl > 0 ? static_cast<double>(dl) / ln2 : 0.0) +
                       cfg.rel_bits + 160 + 64.0 * esc;
        blo = static_cast<unsigned>(std::min(needl, 4.0e5));
        w_probe = exp(lnw);
        Blo = (exp(real(n) * pi * t) * Ib1 + Ib2) / w_probe;
    }

    arm_result up = upper_arm(cd, n, t, cfg, bup, esc);

    // the weighted lower arm is skipped when its crude bound cannot move
    // the result at the requested accuracy, as on the main route
    cplx Alo(0);
    real estlo(0);
    bool lower_done = false;
    {
        precision_guard pg(bup + 32);
        real eps_skip = ldexp(real(1), -static_cast<long>(cfg.rel_bits + 16));
        if (!(Blo <= eps_skip * w_probe * abs(up.val))) {
            segpair sp = cut_segments(cd, n, t, cfg, blo, esc);
            precision_guard pg2(std::max(bup, blo) + 32);
            real ent = exp(real(n) * const_pi() * t);
            Alo = cplx(real(0), -ent) * sp.I1 + sp.I2;
            estlo = ent * sp.est1 + sp.est2;
            lower_done = true;
        }
    }

    precision_guard pg2(std::max(bup, blo) + 32);
    real went = exp(2 * real(n) * const_pi() * t);
    contour_result r;
    r.integral = cplx(-went) * up.val + Alo / cplx(went);
    r.est_error = went * up.est + (lower_done ? estlo / went : Blo);
    r.n = n;
    r.t = t;
    r.bits = lower_done ? std::max(bup, blo) : bup;
    if (dg) {
        dg->A_up = up.val;
        dg->A_lo = Alo;
        dg->est_up = up.est;
        dg->est_lo = estlo;
        dg->remax = up.remax;
        dg->B_lo = Blo;
        dg->lower_done = lower_done;
        dg->bits_lo = lower_done ? blo : 0;
    }
    return r;
}

contour_result contour_core(const critical_data& cd, unsigned n, const real& t,
                            const analysis_config& cfg, unsigned bits, unsigned esc,
                            contour_diag* dg = nullptr) {
    {
        precision_guard pgt(192);
        if (t > tv_of(cd).T)
            return contour_beyond(cd, n, t, cfg, bits, esc, dg);
    }
    arm_result up = upper_arm(cd, n, t, cfg, bits, esc);

    precision_guard pg(bits + 32);
    const real pi = const_pi();
    const real z1 = cd.z1, z2 = cd.z2;
    real ent = exp(real(n) * pi * t);  // e^{pi n t}
    real w = ent * ent;                // e^{2 pi n t}

    // magnitude bound for the weighted lower arm; when it cannot move the
    // result at the requested accuracy the arm is skipped outright
    real Ib1 = (z2 - z1) * (z2 - z1) * z2 * pow(z1, -static_cast<int>(n + 1));
    real Ib2 = 2 * pow(z2, 2 - static_cast<int>(n)) / (n - 2);
    real Blo = (ent * Ib1 + Ib2) / w;
    real eps_skip = ldexp(real(1), -static_cast<long>(cfg.rel_bits + 16));

    cplx Alo(0);
    real estlo(0);
    bool lower_done = false;
    unsigned blo = 0;
    if (!(Blo <= eps_skip * w * abs(up.val))) {
        // segment route cancels down by about pi n t / 2 nats inside I1
        double nt = n * static_cast<double>(t);
        blo = cfg.rel_bits + 160 + static_cast<unsigned>(nt * 2.2662) + 64 * esc;
        segpair sp = cut_segments(cd, n, t, cfg, blo, esc);
        precision_guard pg2(std::max(bits, blo) + 32);
        real ent2 = exp(real(n) * const_pi() * t);
        Alo = cplx(real(0), -ent2) * sp.I1 + sp.I2;
        estlo = ent2 * sp.est1 + sp.est2;
        lower_done = true;
    }

    precision_guard pg3(std::max(bits, blo) + 32);
    real entf = exp(real(n) * const_pi() * t);
    real wf = entf * entf;
    contour_result r;
    r.integral = cplx(-wf) * up.val + Alo / cplx(wf);
    r.est_error = wf * up.est + (lower_done ? estlo / wf : Blo);
    r.n = n;
    r.t = t;
    r.bits = std::max(bits, blo);
    if (dg) {
        dg->A_up = up.val;
        dg->A_lo = Alo;
        dg->est_up = up.est;
        dg->est_lo = estlo;
        dg->remax = up.remax;
        dg->B_lo = Blo;
        dg->lower_done = lower_done;
        dg->bits_lo = blo;
    }
    return r;
}

} // namespace

contour_result contour_integral(const critical_data& cd, unsigned n, const real& t,
                                const analysis_config& cfg) {
    if (n < 3)
        throw std::domain_error("contour integral requires n >= 3");
    if (t < 0)
        throw std::domain_error("contour integral requires t >= 0");

    // On the deformed path the integrand tops out near the scale of the
    // result, so the base budget is the requested accuracy plus guard bits;
    // any measured headroom between path maximum and result feeds back into
    // the escalation.
    unsigned bits = cfg.rel_bits + 160;
    for (unsigned esc = 0;; ++esc) {
        contour_diag dg;
        contour_result r = contour_core(cd, n, t, cfg, bits, esc, &dg);
        {
            precision_guard pg(r.bits);
            real eps = ldexp(real(1), -static_cast<long>(cfg.rel_bits));
            if (r.est_error <= eps * abs(r.integral))
                return r;
        }
        if (esc >= cfg.max_escalations)
            throw std::runtime_error("contour integral did not reach the requested accuracy at " +
                                     std::to_string(bits) + " bits");
        precision_guard pg(r.bits);
        real Jm = abs(r.integral);
        double deficit = 0;
        if (Jm > 0) {
            real d = dg.remax + 2 * real(n) * const_pi() * t - log(Jm);
            if (d > 0) deficit = static_cast<double>(d) / 0.6931471805599453;
        }
        double want = std::max(static_cast<double>(bits) * 1.5,
                               static_cast<double>(cfg.rel_bits + 160) + deficit + 64.0);
        bits = static_cast<unsigned>(std::min(want, 4.0e5));
    }
}

// ---------------------------------------------------------------------------
// exact evaluation through the generating-function recurrence

namespace {

// G(z) = Q(z)^x Q(-z)^{1-x} satisfies P G' = R G with P = Q(z) Q(-z); the
// Taylor coefficients g_m of G then satisfy a five-term recurrence.
cplx exact_core(const critical_data& cd, unsigned n, const real& t, unsigned bits) {
    precision_guard pg(bits);
    real z1 = cd.z1, z2 = cd.z2;
    real p = z1 * z2, s = z1 + z2;
    cplx x(real(1) / 2, real(n) * t);
    cplx one(1), two(2);
    cplx r0 = cplx(s * p) * (one - two * x);
    cplx r1(2 * p - s * s);
    cplx r2 = cplx(s) * (two * x - one);
    cplx r3 = two;
    real p0 = p * p;
    real p2 = -(z1 * z1 + z2 * z2);
    real p4 = 1;

    cplx ring[4];
    ring[0] = cplx(p); // g_0 = Q(0)
    auto at = [&](long k) -> cplx { return k < 0 ? cplx(0) : ring[k & 3]; };
    for (long m = 0; m < static_cast<long>(n); ++m) {
        cplx acc = r0 * at(m);
        acc += (r1 - cplx(p2 * (m - 1))) * at(m - 1);
        acc += r2 * at(m - 2);
        acc += (r3 - cplx(p4 * (m - 3))) * at(m - 3);
        ring[(m + 1) & 3] = acc / cplx(p0 * (m + 1));
    }
    real nf(factorial(n));
    return cplx(const_pi() * nf) * at(n);
}

} // namespace

cplx exact_pi_h(const critical_data& cd, unsigned n, const real& t) {
    double lnscale = 2 * 3.141592653589793 * n * static_cast<double>(t) +
                     n * std::log(static_cast<double>(cd.z2));
    double digits = 40 + 0.45 * std::max(0.0, lnscale);
    for (int round = 0; round < 5; ++round) {
        unsigned bits_a = static_cast<unsigned>(digits * 3.3219280948873623) + 16;
        unsigned bits_b = static_cast<unsigned>((digits + 120) * 3.3219280948873623) + 16;
        cplx v1 = exact_core(cd, n, t, bits_a);
        cplx v2 = exact_core(cd, n, t, bits_b);
        precision_guard pg(bits_b);
        if (abs(v1 - v2) <= real("1e-20") * abs(v2))
            return v2;
        digits = 1.5 * digits + 200;
    }
    throw std::runtime_error("exact evaluation did not stabilize across precisions");
}

real parity_component(const cplx& pi_h, unsigned n) {
    return n % 2 == 0 ? re(pi_h) : im(pi_h);
}

real parity_of_contour(const cplx& j, unsigned n) {
    real nf(factorial(n));
    return n % 2 == 0 ? nf * im(j) : -nf * re(j);
}

// ---------------------------------------------------------------------------
// interior saddle approximant

namespace {

struct arg_march {
    const critical_data& cd;
    real prev, acc;
    void step(const real& t0, const real& t1, int depth) {
        real a1 = carg(phi_zz(cd, zeta1(cd, t1), t1));
        real d = a1 - prev;
        real pi = const_pi();
        if (d > pi)
            d -= 2 * pi;
        else if (d <= -pi)
            d += 2 * pi;
        if (depth >= 48 || abs(d) < pi / 2) {
            acc += d;
            prev = a1;
            return;
        }
        real tm = (t0 + t1) / 2;
        step(t0, tm, depth + 1);
        step(tm, t1, depth + 1);
    }
};

} // namespace

saddle_result saddle_approx(const critical_data& cd, unsigned n, const real& t,
                            const analysis_config& cfg) {
    precision_guard pg(320);
    tvals tv = tv_of(cd);
    double td = static_cast<double>(t), Td = static_cast<double>(tv.T);
    bool adm = td >= cfg.saddle_lo_mult / std::sqrt(static_cast<double>(n)) &&
               (Td - td) >= cfg.saddle_hi_mult * std::pow(static_cast<double>(n), -2.0 / 3.0);
    saddle_result out;
    out.admissible = adm;
    if (!adm) {
        out.diagnostic = "t outside the interior window [" +
                         std::to_string(cfg.saddle_lo_mult / std::sqrt(static_cast<double>(n))) +
                         ", T - " +
                         std::to_string(cfg.saddle_hi_mult * std::pow(static_cast<double>(n), -2.0 / 3.0)) +
                         "]";
        if (cfg.enforce_gates) {
            out.plus = out.minus = out.chosen = cplx(0);
            return out;
        }
    }

    cplx zs = zeta1(cd, t);
    phi_eval pe = phi_at(cd, zs, t);
    cplx base = cplx(sqrt(2 * const_pi())) * pe.psi * exp(cplx(-real(n)) * pe.value);
    cplx w = cplx(real(n)) * pe.dz2;
    out.plus = base / sqrt(w);
    out.minus = -out.plus;

    // track arg phi_zz(zeta1(t), t) continuously from a near-zero anchor; the
    // principal square root loses the sheet when the argument crosses +-pi
    real ta = t / 1024;
    arg_march m{cd, real(0), real(0)};
    m.prev = carg(phi_zz(cd, zeta1(cd, ta), ta));
    real theta = m.prev;
    unsigned steps = 64;
    real h = (t - ta) / steps;
    for (unsigned i = 0; i < steps; ++i)
        m.step(ta + h * i, ta + h * (i + 1), 0);
    theta += m.acc;

    cplx root = exp(cplx(log(abs(w)) / 2, real(0)) + cplx(real(0), theta / 2));
    out.chosen = base / root;
    bool principal = abs(out.chosen - out.plus) < abs(out.chosen - out.minus);
    out.diagnostic += std::string(out.diagnostic.empty() ? "" : "; ") +
                      "branch " + (principal ? "+" : "-") +
                      ", arg(phi_zz) tracked to " +
                      std::to_string(static_cast<double>(theta));
    return out;
}

// ---------------------------------------------------------------------------
// boundary layers

cplx layer_c(const critical_data& cd) {
    precision_guard pg(std::max(precision_bits(), 192u));
    real pref = (cd.z1 + cd.z2) / 2;
    if (!cd.t_is_t2) {
        real T1 = (cd.z2 - cd.z1) / (cd.z1 + cd.z2);
        real disc = 2 * T1 * T1 - 1;
        if (!(disc > 0))
            throw std::domain_error("degenerate regime boundary: E = 0");
        real c = pref * (-sqrt(2 * T1) + T1 * sqrt(2 * T1) / sqrt(disc));
        return cplx(c);
    }
    real mE = -(cd.z1 * cd.z1 - 6 * cd.z1 * cd.z2 + cd.z2 * cd.z2);
    real c = pref * sqrt(real(32)) * pow(cd.z1 * cd.z2, real(3) / 4) /
             sqrt((cd.z1 + cd.z2) * mE);
    return cplx(c);
}

cplx layer_d(const critical_data& cd) {
    precision_guard pg(std::max(precision_bits(), 192u));
    if (!cd.t_is_t2)
        throw std::domain_error("d is defined at T1 inside the T2 regime");
    real T1 = (cd.z2 - cd.z1) / (cd.z1 + cd.z2);
    real disc = 1 - 2 * T1 * T1;
    cplx amp(-(cd.z1 + cd.z2) * sqrt(T1) / sqrt(real(2)));
    return amp * cplx(real(1), T1 / sqrt(disc));
}

cplx layer_dhat(const critical_data& cd) { return cplx(0, -1) * layer_d(cd); }

namespace {

struct layer_setup {
    real Tstar, tau, sqtau;
    cplx cc, beta, A, B, sqB, zeT;
    int sign_A;
    bool smooth;
    int sigma;
};

layer_setup make_layer(const critical_data& cd, const real& t, layer_kind kind) {
    tvals tv = tv_of(cd);
    layer_setup L;
    switch (kind) {
    case layer_kind::atT:
        L.Tstar = tv.T;
        L.tau = tv.T - t;
        L.cc = layer_c(cd);
        L.sign_A = -1;
        L.smooth = true;
        L.sigma = -1;
        L.zeT = cd.t_is_t2 ? cplx(real(0), sqrt(cd.z1 * cd.z2)) : zeta1(cd, tv.T1);
        break;
    case layer_kind::atT1_minus:
        if (!cd.t_is_t2)
            throw std::domain_error("T1 layer needs the T2 regime");
        L.Tstar = tv.T1;
        L.tau = tv.T1 - t;
        L.cc = layer_d(cd);
        L.sign_A = 1;
        L.smooth = false;
        L.sigma = 1;
        L.zeT = zeta1(cd, tv.T1);
        break;
    case layer_kind::atT1_plus:
        if (!cd.t_is_t2)
            throw std::domain_error("T1 layer needs the T2 regime");
        L.Tstar = tv.T1;
        L.tau = t - tv.T1;
        L.cc = layer_dhat(cd);
        L.sign_A = -1;
        L.smooth = true;
        L.sigma = -1;
        L.zeT = zeta1(cd, tv.T1);
        break;
    }
    if (!(L.tau > 0))
        throw std::domain_error("t is on the wrong side of the layer point");
    L.beta = L.cc * L.cc * L.cc * phi_zzz(cd, L.zeT, L.Tstar);
    L.sqtau = sqrt(L.tau);
    real t3 = 3 * L.sqtau;
    L.A = cplx(real(L.sign_A) * sqrt(real(6))) / (sqrt(L.beta) * cplx(pow(t3, real(3) / 2)));
    L.B = L.beta * cplx(L.sqtau / 2);
    L.sqB = sqrt(L.B);
    return L;
}

// cube root with the branch cut along [0, +inf), arg in (0, 2 pi]
cplx cube_root_cut(const cplx& w) {
    real th = carg(w);
    if (th <= 0)
        th += 2 * const_pi();
    return exp(cplx(log(abs(w)) / 3, th / 3));
}

// The root v(y) of y^2 = (beta/6) v^2 (3 sqrt(tau) + sg v) that passes through
// v(0) = 0 and matches the saddle curve direction, via the resolvent cubic.
cplx layer_v(const layer_setup& L, const real& y) {
    real s27 = sqrt(real(27));
    real c2 = cbrt(real(2));
    cplx W;
    if (L.smooth) {
        cplx A2 = L.A * L.A;
        cplx y2(y * y);
        cplx inner = sqrt(cplx(27) * A2 * A2 * y2 - cplx(4) * A2);
        cplx w = cplx(27) * A2 * y2 - cplx(2) + cplx(s27 * y) * inner;
        cplx r = cube_root_cut(w);
        W = r / cplx(c2) + cplx(c2) / r;
    } else {
        real Ar = re(L.A); // A is real in this class by construction
        real disc = 27 * Ar * Ar * Ar * Ar * y * y - 4 * Ar * Ar;
        real base = 27 * Ar * Ar * y * y - 2;
        if (disc < 0) {
            cplx w(base, s27 * y * sqrt(-disc));
            cplx r = cube_root_cut(w);
            W = r / cplx(c2) + cplx(c2) / r;
        } else if (y > 0) {
            real wr = base + s27 * y * sqrt(disc);
            real r = cbrt(wr);
            W = cplx(r / c2 + c2 / r);
        } else {
            real wr = base + s27 * y * sqrt(disc);
            cplx r = exp(cplx(real(0), -2 * const_pi() / 3)) * cplx(cbrt(wr));
            W = r / cplx(c2) + cplx(c2) / r;
        }
    }
    cplx Z = (W - cplx(1)) / (cplx(3) * L.A);
    return Z / L.sqB;
}

real layer_rel_residual(const layer_setup& L, const real& y, const cplx& v) {
    cplx rel = cplx(y * y) -
               (L.beta / cplx(6)) * v * v * (cplx(3 * L.sqtau) + cplx(real(L.sign_A)) * v);
    return abs(rel);
}

// y > 0 edge where |v| reaches the window size, capped at 40/sqrt(n)
real window_edge(const layer_setup& L, unsigned n, const analysis_config& cfg, bool positive) {
    real cap = real(40) / sqrt(real(n));
    real target = real(cfg.window_mult) * log(real(n)) / cbrt(real(n));
    auto mag = [&](const real& y) { return abs(layer_v(L, positive ? y : -y)); };
    if (mag(cap) <= target)
        return cap;
    real lo(0), hi = cap;
    for (int i = 0; i < 80; ++i) {
        real mid = (lo + hi) / 2;
        (mag(mid) <= target ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

bool layer_gate(const layer_setup& L, unsigned n, const analysis_config& cfg,
                std::string& why) {
    double taud = static_cast<double>(L.tau);
    double nd = n;
    double lo = cfg.layer_lo_mult * std::pow(nd, -2.0 / 3.0);
    double hi = cfg.layer_hi_mult * std::pow(std::log(nd), 2.0) * std::pow(nd, -2.0 / 3.0);
    if (taud < lo || taud > hi) {
        why = "tau = " + std::to_string(taud) + " outside the layer window [" +
              std::to_string(lo) + ", " + std::to_string(hi) + "]";
        return false;
    }
    return true;
}

} // namespace

layer_result boundary_layer_approx(const critical_data& cd, unsigned n, const real& t,
                                   layer_kind kind, const analysis_config& cfg) {
    precision_guard pg(320);
    layer_setup L = make_layer(cd, t, kind);
    layer_result out;
    std::string why;
    out.admissible = layer_gate(L, n, cfg, why);
    out.diagnostic = why;
    if (!out.admissible && cfg.enforce_gates) {
        out.value = cplx(0);
        out.est_error = out.residual_max = real(0);
        return out;
    }

    cplx zs = zeta1(cd, t);
    cplx K = cplx(real(L.sigma) * 4) * L.cc * psi_f(cd, L.zeT) *
             exp(cplx(-real(n)) * phi(cd, zs, t)) / (cplx(sqrt(real(6))) * sqrt(L.beta));

    real a = window_edge(L, n, cfg, false);
    real b = window_edge(L, n, cfg, true);
    real sqn = sqrt(real(n));

    auto f = [&](const real& u) -> cplx {
        real y = u / sqn;
        cplx v = layer_v(L, y);
        cplx s3 = sqrt(cplx(3 * L.sqtau) + cplx(real(L.sign_A)) * v);
        return exp(cplx(-u * u)) / ((s3 - cplx(L.sqtau) / s3) * cplx(sqn));
    };

    std::vector<real> bp;
    bp.push_back(-a * sqn);
    for (int c : {-2, 0, 2})
        if (real(c) > -a * sqn && real(c) < b * sqn)
            bp.push_back(real(c));
    bp.push_back(b * sqn);

    cplx total(0);
    real est(0);
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        piece_out seg = composite_gl(f, bp[i], bp[i + 1], 3, 64, precision_bits());
        total += seg.val;
        est += seg.est;
    }
    out.value = K * total;
    out.est_error = abs(total) > 0 ? est / abs(total) : est;

    real rmax(0);
    unsigned samples = 81;
    for (unsigned i = 0; i < samples; ++i) {
        real y = -a + (a + b) * real(i) / (samples - 1);
        cplx v = layer_v(L, y);
        real rr = layer_rel_residual(L, y, v);
        if (rr > rmax) rmax = rr;
    }
    out.residual_max = rmax;
    return out;
}

std::vector<layer_curve_point> layer_curve(const critical_data& cd, unsigned n,
                                           const real& t, layer_kind kind,
                                           std::size_t samples,
                                           const analysis_config& cfg) {
    precision_guard pg(320);
    layer_setup L = make_layer(cd, t, kind);
    real a = window_edge(L, n, cfg, false);
    real b = window_edge(L, n, cfg, true);
    std::vector<layer_curve_point> out;
    if (samples < 2) samples = 2;
    for (std::size_t i = 0; i < samples; ++i) {
        real y = -a + (a + b) * real(i) / (samples - 1);
        cplx v = layer_v(L, y);
        layer_curve_point p;
        p.y = y;
        p.z = L.zeT + L.cc * v;
        p.residual = layer_rel_residual(L, y, v);
        out.push_back(p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// small-t approximant

smallt_result smallt_approx(const critical_data& cd, unsigned n, const real& t,
                            const analysis_config& cfg) {
    precision_guard pg(320);
    smallt_result out;
    double nd = n;
    double gate = cfg.smallt_gate_mult * std::pow(std::log(nd), 4.0) / nd;
    out.admissible = static_cast<double>(t) <= gate;
    if (!out.admissible) {
        out.diagnostic = "t = " + std::to_string(static_cast<double>(t)) +
                         " exceeds the small-t window bound " + std::to_string(gate);
        if (cfg.enforce_gates) {
            out.value = cplx(0);
            return out;
        }
    }
    real pi = const_pi();
    real z1 = cd.z1, z2 = cd.z2;
    cplx half(real(1) / 2);
    cplx ix(real(0), real(n) * t);
    cplx hp = half + ix, hm = half - ix;
    cplx lg = log_gamma(cplx(real(3) / 2, real(n) * t));
    cplx expo = hm * cplx(log(real(2))) + hp * cplx(log(z2 - z1)) + hm * cplx(log(z2 + z1)) -
                (cplx(real(3) / 2) + ix) * cplx(log(real(n))) + lg -
                cplx((n - 1) * log(z1));
    real ent = exp(real(n) * pi * t);
    out.value = cplx(0, -1) * cplx(ent + 1 / ent) * exp(expo);
    return out;
}

// ---------------------------------------------------------------------------
// levels of the squared-saddle combination

cplx t_of_zeta(const critical_data& cd, const cplx& zeta) {
    cplx z1(cd.z1), z2(cd.z2);
    cplx zq = zeta * zeta;
    cplx num = (zq - z1 * z1) * (zq - z2 * z2);
    cplx den = cplx(2) * zeta * (z1 + z2) * (zq - z1 * z2);
    return num / den / cplx(0, 1);
}

cplx g_zeta(const critical_data& cd, unsigned n, const cplx& zeta) {
    precision_guard pg(std::max(precision_bits(), 192u));
    cplx tc = t_of_zeta(cd, zeta);
    cplx ph = phi_ct(cd, zeta, tc);
    cplx pzz = phi_zz_ct(cd, zeta, tc);
    cplx ps = psi_f(cd, zeta);
    return cplx(2 * const_pi()) * ps * ps * exp(cplx(-real(2 * n)) * ph) /
           (cplx(real(n)) * pzz);
}

} // namespace shq
