#pragma once
// Gauss-Legendre rules at arbitrary precision, cached by node count.
//
// A cached rule carries the precision it was generated at; asking for more
// bits regenerates it.  Never hand nodes generated at one precision to an
// integral running at a much higher one: the node error is amplified by the
// integrand's dynamic range.

#include "shq/mp.hh"

#include <memory>
#include <vector>

namespace shq {

struct gl_rule {
    std::vector<real> x; // nodes on (-1, 1), ascending
    std::vector<real> w;
    unsigned bits;
};

// Rule with `count` nodes accurate to at least `bits` bits.
std::shared_ptr<const gl_rule> gauss_legendre(unsigned count, unsigned bits);

} // namespace shq
