#pragma once
// Stirling triangles, the marked generating tree, and the weighted
// lattice-path table sigma(n,k).
//
// The tree expansion and the vector recurrence R_i = R_{i-1} P are kept as
// two separate routes on purpose: the tree tracks marked and unmarked node
// counts independently (annihilation happens in the caller), the recurrence
// works with the signed sums directly.

#include "shq/sheffer.hh"

namespace shq {

bigint stirling2(unsigned n, unsigned k);
bigint stirling1_unsigned(unsigned n, unsigned k);

struct marked_level {
    std::vector<bigint> unmarked; // index = label
    std::vector<bigint> marked;
};

// Expand the root (0) by the production rules of p for `depth` levels.
// p must be integer-valued; a negative entry spawns children whose mark is
// flipped relative to the parent.
std::vector<marked_level> tree_levels(const rat_matrix& p, unsigned depth);

// R_0 = e_0, R_i = R_{i-1} P over signed integers; row i equals
// unmarked minus marked of tree_levels level i.
std::vector<std::vector<bigint>> tree_vector_recurrence(const rat_matrix& p, unsigned depth);

// sigma(n,k): weighted paths (0,0) -> (n,k) over steps {U, H, H^2} with
// w(U) = 2(a+b), w_ij(H) = (i+j-2)(a+b), w_ij(H^2) = -(i-1)(i+2j-4)ab.
rat_matrix lattice_sigma(const rat& a, const rat& b, std::size_t nmax);

// [x^k]H_n = sum_i (-1)^{i+k} sigma(n,i) s(i,k), s unsigned first kind.
poly_x hn_from_sigma(const rat& a, const rat& b, unsigned n);

} // namespace shq
