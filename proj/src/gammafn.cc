#include "shq/gammafn.hh"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace shq {

namespace {

std::mutex bern_mutex;
std::vector<rat> bern; // grown on demand

} // namespace

const std::vector<rat>& bernoulli_table(unsigned n)
{
    std::lock_guard<std::mutex> lock(bern_mutex);
    if (bern.empty()) bern = {rat(1)};
    while (bern.size() <= n) {
        // sum_{j<m} C(m+1,j) B_j = -(m+1) B_m
        unsigned m = static_cast<unsigned>(bern.size());
        rat acc(0);
        for (unsigned j = 0; j < m; ++j)
            acc += rat(binomial(m + 1, j)) * bern[j];
        bern.push_back(-acc / rat(static_cast<long>(m) + 1));
    }
    return bern;
}

cplx log_gamma(const cplx& z)
{
    if (!(z.real() > 0))
        throw std::domain_error("log_gamma requires Re z > 0");

    const unsigned bits = precision_bits();
    // Stirling's remainder at |w| ~ L bottoms out near exp(-2 pi L); lift
    // until the series can reach the working precision with some guard.
    const real L = real(bits) * log(real(2)) / (2 * const_pi()) * real("1.3") + 10;

    cplx w = z;
    cplx lift(0);
    while (abs(w) < L) {
        lift += log(w);
        w += 1;
    }

    const cplx w2 = w * w;
    cplx sum = (w - cplx(real(1) / 2)) * log(w) - w
               + cplx(log(2 * const_pi()) / 2);
    cplx invp = cplx(real(1)) / w; // w^{-(2k-1)}
    const real eps = ldexp(real(1), -static_cast<long>(bits) - 8);
    bool converged = false;
    // enough Bernoulli terms for the lifted |w|; extended on demand below
    for (unsigned k = 1; k <= 600; ++k) {
        const auto& B = bernoulli_table(2 * k);
        cplx term = to_real(B[2 * k] / (rat(2 * k) * rat(2 * k - 1))) * invp;
        sum += term;
        if (abs(term) < eps * abs(sum)) {
            converged = true;
            break;
        }
        invp = invp / w2;
    }
    if (!converged)
        throw std::runtime_error("log_gamma: Stirling series did not converge");
    return sum - lift;
}

} // namespace shq
