#pragma once
// Exponential Riordan matrices [g, f] with materialized entries, group
// operations, and production (Stieltjes) matrices.
//
// Entries follow b_{n,k} = (n!/k!) [z^n] g f^k.  The production matrix is
// computed on two independent routes: from the horizontal pair (c, r) with
// c(f) = g'/g, r(f) = f', and by linear algebra from A P = U A.  Tests hold
// the two together; the library never trusts one route alone.

#include "shq/series.hh"

#include <cstddef>
#include <vector>

namespace shq {

using rat_matrix = std::vector<std::vector<rat>>;

struct exp_riordan {
    tseries<rat> g;
    tseries<rat> f;
    rat_matrix b; // rows 0..N, lower triangular

    std::size_t rows() const { return b.size(); }
};

struct production_matrix {
    std::vector<rat> c; // ordinary coefficients of c(z)
    std::vector<rat> r; // ordinary coefficients of r(z)
    rat_matrix p;       // Hessenberg: p_{i,j} = 0 for j > i+1
};

// g(0) != 0, f(0) = 0, f'(0) != 0; series orders must both be >= size.
exp_riordan build_riordan(const tseries<rat>& g, const tseries<rat>& f);

// [g,f]·[h,l] = [g·(h∘f), l∘f]
exp_riordan rmul(const exp_riordan& a, const exp_riordan& b);

// [g,f]^{-1} = [1/(g∘f̄), f̄]
exp_riordan rinv(const exp_riordan& a);

exp_riordan riordan_identity(std::size_t order);

// Horizontal pair route: c = (g'/g)∘f̄, r = f'∘f̄,
// p_{i,j} = (i!/j!)(c_{i-j} + j·r_{i-j+1}).
production_matrix horizontal_pair(const exp_riordan& a);

// Linear-algebra route: solve A·P = U·A by forward substitution on the
// leading (rows-1) x (rows-1) block.
rat_matrix production_from_matrix(const exp_riordan& a);

// A·P = U·A on all representable rows; exact.
bool stieltjes_check(const exp_riordan& a, const rat_matrix& p);

// Regenerate rows 1..rows-1 from row 0 = (g0, 0, ...) by a_{n+1,k} = Σ_i a_{n,i} p_{i,k}.
rat_matrix row_recurrence(const rat& g0, const rat_matrix& p, std::size_t rows);

// Conjugation to the ordinary array: a_{n,k} = (k!/n!) b_{n,k}.
rat_matrix conjugate_ordinary(const exp_riordan& a);

rat_matrix matrix_product(const rat_matrix& a, const rat_matrix& b);

} // namespace shq
