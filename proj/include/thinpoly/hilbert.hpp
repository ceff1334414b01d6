// Independent validation of the h-polynomial: build the binomial ideal of a
// polyomino, compute the truncated Hilbert function by exact sparse rank
// computations, and extract the h-polynomial from it.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "thinpoly/cell.hpp"
#include "thinpoly/polynomial.hpp"

namespace thinpoly {

struct Monomial {
    std::map<Vertex, int> exponents;
    int degree = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// plus - minus where both monomials have degree two and the four vertices
// span an axis-aligned rectangle of cells lying inside the polyomino.
struct BinomialGenerator {
    Monomial plus;
    Monomial minus;
};

struct HilbertProfile {
    std::vector<std::int64_t> h_function;  // H_0..H_d
    int krull_dim = 0;
    IntPolynomial h;
};

// How ranks are computed: independently modulo two word-sized primes with an
// agreement check (the default), or additionally cross-checked against exact
// integer elimination.
enum class RankMode { dual_prime, exact_audit };

struct OracleOptions {
    // Ceiling on the number of monomials of any degree the computation needs.
    std::int64_t budget = 1'000'000;
    RankMode mode = RankMode::dual_prime;
};

// One generator per vertex pair (i,j), (k,l) with i<k, j<l whose full
// rectangle of cells lies in p. Requires is_polyomino.
std::vector<BinomialGenerator> generators(const CellSet& p);

// H_d = dim of the degree-d part of the quotient by the ideal, for
// d = 0..d_max. The ideal is generated in degree two, so its degree-d part is
// spanned by monomial multiples of the generators; H_d is the monomial count
// minus the rank of that span.
std::vector<std::int64_t> hilbert_function(const CellSet& p, int d_max,
                                           const OracleOptions& opts = {});

// |vertices| - |cells|, for simple polyominoes. The h_1 = |cells| identity
// and the vanishing of h at degree r+1 both fail loudly if this formula were
// wrong.
int krull_dim(const CellSet& p);

// h_i = sum_{j<=i} (-1)^j C(dim, j) H_{i-j} for i = 0..r; the same expression
// must vanish at r+1 and no h_i may be negative, otherwise
// inconsistency_error.
IntPolynomial h_from_hilbert(const std::vector<std::int64_t>& h_func, int dim, int r);

// True when the Hilbert-function route reproduces the rook polynomial.
// Requires a simple thin polyomino within budget.
bool cross_validate(const CellSet& p, const OracleOptions& opts = {});

// Everything the oracle computes for one polyomino, for reporting.
HilbertProfile hilbert_profile(const CellSet& p, const OracleOptions& opts = {});

// Sparse triplet dump (row, column, +-1) of the degree-d relation matrix.
void dump_relation_matrix(const CellSet& p, int d, std::ostream& out,
                          const OracleOptions& opts = {});

}  // namespace thinpoly
