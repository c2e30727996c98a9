#include "shq/quadrature.hh"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace shq {

namespace {

std::mutex rule_mutex;
std::map<unsigned, std::shared_ptr<const gl_rule>> rule_cache;

// Legendre P_n and P_n' by the three-term recurrence.
void legendre(unsigned n, const real& x, real& p, real& dp)
{
    real p0(1), p1 = x;
    for (unsigned k = 2; k <= n; ++k) {
        real pk = (real(2 * k - 1) * x * p1 - real(k - 1) * p0) / real(k);
        p0 = p1;
        p1 = pk;
    }
    p = p1;
    dp = real(n) * (x * p1 - p0) / (x * x - 1);
}

std::shared_ptr<const gl_rule> make_rule(unsigned count, unsigned bits)
{
    precision_guard guard(bits + 16);
    auto rule = std::make_shared<gl_rule>();
    rule->bits = bits;
    rule->x.resize(count);
    rule->w.resize(count);
    const real tol = ldexp(real(1), -static_cast<long>(bits) - 8);
    const real pi_v = const_pi();
    for (unsigned i = 0; i < count; ++i) {
        // Newton from the Chebyshev-angle seed; quadratic convergence makes
        // the iteration count logarithmic in the precision.
        real x = cos(pi_v * (real(i) + real("0.75")) / (real(count) + real("0.5")));
        real p, dp;
        bool ok = false;
        for (unsigned it = 0; it < 200; ++it) {
            legendre(count, x, p, dp);
            real dx = p / dp;
            x -= dx;
            if (abs(dx) < tol) {
                ok = true;
                break;
            }
        }
        if (!ok) throw std::runtime_error("gauss_legendre: Newton stalled");
        legendre(count, x, p, dp);
        // seeds walk the roots from the largest down; store ascending
        rule->x[count - 1 - i] = x;
        rule->w[count - 1 - i] = 2 / ((1 - x * x) * dp * dp);
    }
    return rule;
}

} // namespace

std::shared_ptr<const gl_rule> gauss_legendre(unsigned count, unsigned bits)
{
    if (count < 2) throw std::invalid_argument("gauss_legendre: count < 2");
    {
        std::lock_guard<std::mutex> lock(rule_mutex);
        auto it = rule_cache.find(count);
        if (it != rule_cache.end() && it->second->bits >= bits) return it->second;
    }
    auto rule = make_rule(count, bits);
    std::lock_guard<std::mutex> lock(rule_mutex);
    auto& slot = rule_cache[count];
    if (!slot || slot->bits < bits) slot = rule;
    return slot;
}

} // namespace shq
