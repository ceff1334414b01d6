#include "thinpoly/hilbert.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <unordered_map>

#include "thinpoly/grid.hpp"
#include "thinpoly/rook.hpp"

namespace thinpoly {

namespace {

// Binomial coefficients with saturation, so budget comparisons stay safe.
std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > (std::numeric_limits<std::int64_t>::max)()) return (std::numeric_limits<std::int64_t>::max)();
    }
    return static_cast<std::int64_t>(acc);
}

// Monomials are sorted variable-index multisets. The combinadic of the
// shifted multiset ranks all degree-d monomials in [0, C(n+d-1, d)).
std::int64_t rank_monomial(const std::vector<int>& vars) {
    std::int64_t r = 0;
    for (size_t t = 0; t < vars.size(); ++t)
        r += binom(vars[t] + static_cast<int>(t), static_cast<int>(t) + 1);
    return r;
}

void for_each_multiset(int n, int k, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& fn, int from = 0) {
    if (static_cast<int>(cur.size()) == k) {
        fn(cur);
        return;
    }
    for (int v = from; v < n; ++v) {
        cur.push_back(v);
        for_each_multiset(n, k, cur, fn, v);
        cur.pop_back();
    }
}

using SparseRow = std::vector<std::pair<std::int64_t, std::int64_t>>;  // (col, coeff)

// Incremental Gaussian elimination keyed by leading column. Every incoming
// row has two unit entries of opposite sign and reductions keep rows that
// shape, so nothing ever fills in.
class SparseElim {
public:
    explicit SparseElim(std::int64_t prime) : p_(prime) {}  // prime 0 = exact integers

    void add_row(SparseRow row) {
        normalize(row);
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                ++rank_;
                pivots_.emplace(row.front().first, std::move(row));
                return;
            }
            reduce(row, it->second);
        }
    }

    int rank() const { return rank_; }

private:
    void normalize(SparseRow& row) {
        std::sort(row.begin(), row.end());
        SparseRow out;
        for (auto& [c, v] : row) {
            std::int64_t val = p_ ? ((v % p_) + p_) % p_ : v;
            if (!out.empty() && out.back().first == c) {
                out.back().second = p_ ? (out.back().second + val) % p_ : out.back().second + val;
            } else {
                out.push_back({c, val});
            }
        }
        row.clear();
        for (auto& [c, v] : out)
            if (v != 0) row.push_back({c, v});
    }

    std::int64_t inverse(std::int64_t a) const {
        // Fermat: p_ is prime.
        std::int64_t result = 1, base = a % p_, e = p_ - 2;
        while (e) {
            if (e & 1) result = static_cast<__int128>(result) * base % p_;
            base = static_cast<__int128>(base) * base % p_;
            e >>= 1;
        }
        return result;
    }

    void reduce(SparseRow& row, const SparseRow& pivot) {
        std::int64_t factor;
        if (p_) {
            factor = static_cast<__int128>(row.front().second) * inverse(pivot.front().second) % p_;
        } else {
            if (row.front().second % pivot.front().second != 0)
                throw theorem_violation("exact elimination hit a non-unit pivot");
            factor = row.front().second / pivot.front().second;
        }
        SparseRow merged = row;
        for (const auto& [c, v] : pivot) {
            std::int64_t delta = p_ ? p_ - static_cast<__int128>(factor) * v % p_ : -factor * v;
            merged.push_back({c, delta});
        }
        normalize(merged);
        row = std::move(merged);
    }

    std::int64_t p_;
    int rank_ = 0;
    std::unordered_map<std::int64_t, SparseRow> pivots_;
};

struct VertexIndex {
    std::vector<Vertex> verts;
    std::map<Vertex, int> index;

    explicit VertexIndex(const CellSet& p) {
        verts = vertices(p);
        for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    }
    int n() const { return static_cast<int>(verts.size()); }
};

// A generator as the two sorted variable-index pairs of its monomials.
struct GenPair {
    std::array<int, 2> plus;
    std::array<int, 2> minus;
};

std::vector<GenPair> indexed_generators(const CellSet& p, const VertexIndex& vi) {
    std::vector<GenPair> out;
    for (const BinomialGenerator& g : generators(p)) {
        GenPair gp{};
        int t = 0;
        for (const auto& [v, e] : g.plus.exponents)
            for (int i = 0; i < e; ++i) gp.plus[t++] = vi.index.at(v);
        t = 0;
        for (const auto& [v, e] : g.minus.exponents)
            for (int i = 0; i < e; ++i) gp.minus[t++] = vi.index.at(v);
        std::sort(gp.plus.begin(), gp.plus.end());
        std::sort(gp.minus.begin(), gp.minus.end());
        out.push_back(gp);
    }
    return out;
}

std::int64_t merged_rank(const std::vector<int>& m, const std::array<int, 2>& pair) {
    std::vector<int> vars = m;
    vars.push_back(pair[0]);
    vars.push_back(pair[1]);
    std::sort(vars.begin(), vars.end());
    return rank_monomial(vars);
}

int relation_rank(int d, const std::vector<GenPair>& gens, const VertexIndex& vi,
                  std::int64_t prime) {
    SparseElim elim(prime);
    std::vector<int> cur;
    for_each_multiset(vi.n(), d - 2, cur, [&](const std::vector<int>& m) {
        for (const GenPair& g : gens)
            elim.add_row({{merged_rank(m, g.plus), 1}, {merged_rank(m, g.minus), -1}});
    });
    return elim.rank();
}

void check_budget(int n, int d_max, const OracleOptions& opts) {
    for (int d = 2; d <= d_max; ++d)
        if (binom(n + d - 1, d) > opts.budget)
            throw resource_error("degree " + std::to_string(d) + " needs " +
                                 std::to_string(binom(n + d - 1, d)) + " monomials, over the budget of " +
                                 std::to_string(opts.budget));
}

}  // namespace

std::vector<BinomialGenerator> generators(const CellSet& p) {
    if (!is_polyomino(p)) throw domain_error("generators require a polyomino");
    std::vector<Vertex> vs = vertices(p);
    std::vector<BinomialGenerator> out;
    for (const Vertex& a : vs)
        for (const Vertex& b : vs) {
            if (a.x >= b.x || a.y >= b.y) continue;
            bool inside = true;
            for (int x = a.x; x < b.x && inside; ++x)
                for (int y = a.y; y < b.y && inside; ++y)
                    if (!p.contains({x, y})) inside = false;
            if (!inside) continue;
            BinomialGenerator g;
            g.plus.exponents[a] += 1;
            g.plus.exponents[{b.x, b.y}] += 1;
            g.plus.degree = 2;
            g.minus.exponents[{b.x, a.y}] += 1;
            g.minus.exponents[{a.x, b.y}] += 1;
            g.minus.degree = 2;
            out.push_back(std::move(g));
        }
    return out;
}

std::vector<std::int64_t> hilbert_function(const CellSet& p, int d_max, const OracleOptions& opts) {
    if (!is_polyomino(p)) throw domain_error("hilbert_function requires a polyomino");
    if (d_max < 0) throw domain_error("negative degree");
    VertexIndex vi(p);
    check_budget(vi.n(), d_max, opts);
    std::vector<GenPair> gens = indexed_generators(p, vi);

    std::vector<std::int64_t> out;
    for (int d = 0; d <= d_max; ++d) {
        if (d == 0) {
            out.push_back(1);
            continue;
        }
        if (d == 1) {
            out.push_back(vi.n());
            continue;
        }
        int r1 = relation_rank(d, gens, vi, 2147483647);
        int r2 = relation_rank(d, gens, vi, 2147483629);
        if (r1 != r2)
            throw theorem_violation("rank mismatch between the two primes at degree " +
                                    std::to_string(d));
        if (opts.mode == RankMode::exact_audit) {
            int r3 = relation_rank(d, gens, vi, 0);
            if (r3 != r1)
                throw theorem_violation("exact rank disagrees with the modular ranks at degree " +
                                        std::to_string(d));
        }
        out.push_back(binom(vi.n() + d - 1, d) - r1);
    }
    return out;
}

int krull_dim(const CellSet& p) {
    if (!is_polyomino(p) || !is_simple(p))
        throw domain_error("the dimension formula applies to simple polyominoes");
    return static_cast<int>(vertices(p).size()) - p.size();
}

IntPolynomial h_from_hilbert(const std::vector<std::int64_t>& h_func, int dim, int r) {
    if (static_cast<int>(h_func.size()) < r + 2)
        throw domain_error("need Hilbert function values through degree r+1");
    std::vector<std::int64_t> h;
    for (int i = 0; i <= r + 1; ++i) {
        std::int64_t acc = 0;
        for (int j = 0; j <= i; ++j) {
            std::int64_t term = binom(dim, j) * h_func[i - j];
            acc += (j % 2 == 0) ? term : -term;
        }
        if (i == r + 1) {
            if (acc != 0)
                throw inconsistency_error("h does not vanish at degree " + std::to_string(r + 1) +
                                          " (got " + std::to_string(acc) + ")");
        } else {
            if (acc < 0)
                throw inconsistency_error("negative h coefficient at degree " + std::to_string(i));
            h.push_back(acc);
        }
    }
    return IntPolynomial(std::move(h));
}

bool cross_validate(const CellSet& p, const OracleOptions& opts) {
    if (!is_polyomino(p) || !is_simple(p) || !is_thin(p))
        throw domain_error("cross-validation applies to simple thin polyominoes");
    int r = rook_number(p);
    std::vector<std::int64_t> H = hilbert_function(p, r + 1, opts);
    if (H[0] != 1) throw inconsistency_error("H_0 must be 1");
    if (H[1] != static_cast<std::int64_t>(vertices(p).size()))
        throw inconsistency_error("H_1 must equal the vertex count");
    IntPolynomial h = h_from_hilbert(H, krull_dim(p), r);
    if (h.coeff(1) != p.size())
        throw inconsistency_error("h_1 must equal the cell count");
    return h == rook_polynomial(p);
}

HilbertProfile hilbert_profile(const CellSet& p, const OracleOptions& opts) {
    if (!is_polyomino(p) || !is_simple(p))
        throw domain_error("the Hilbert profile applies to simple polyominoes");
    int r = rook_number(p);
    HilbertProfile prof;
    prof.h_function = hilbert_function(p, r + 1, opts);
    prof.krull_dim = krull_dim(p);
    prof.h = h_from_hilbert(prof.h_function, prof.krull_dim, r);
    return prof;
}

void dump_relation_matrix(const CellSet& p, int d, std::ostream& out, const OracleOptions& opts) {
    if (!is_polyomino(p)) throw domain_error("generators require a polyomino");
    if (d < 2) throw domain_error("the ideal has no relations below degree 2");
    VertexIndex vi(p);
    check_budget(vi.n(), d, opts);
    std::vector<GenPair> gens = indexed_generators(p, vi);
    std::int64_t row = 0;
    std::vector<int> cur;
    for_each_multiset(vi.n(), d - 2, cur, [&](const std::vector<int>& m) {
        for (const GenPair& g : gens) {
            out << row << " " << merged_rank(m, g.plus) << " 1\n";
            out << row << " " << merged_rank(m, g.minus) << " -1\n";
            ++row;
        }
    });
}

}  // namespace thinpoly
