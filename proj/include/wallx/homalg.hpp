#pragma once

#include "wallx/laurent.hpp"
#include "wallx/qlinalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wallx {

// Matrix over the Laurent ring. Row-major, zero shapes legal.
struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    int num_vars = 0;
    std::vector<LaurentPoly> e;

    PolyMatrix() = default;
    PolyMatrix(int r, int c, int nv);

    static PolyMatrix identity(int n, int nv);
    static PolyMatrix scalar(int n, const LaurentPoly& u); // u * identity

    LaurentPoly& at(int r, int c) { return e[static_cast<size_t>(r) * cols + c]; }
    const LaurentPoly& at(int r, int c) const { return e[static_cast<size_t>(r) * cols + c]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator-() const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    PolyMatrix scaled(const LaurentPoly& u) const;
    bool is_zero() const;
    QMatrix evaluate(const TorusPoint& p) const;
    PolyMatrix submatrix(int r0, int r1, int c0, int c1) const; // half-open ranges

    // Block assembly: copies src into *this with top-left corner (r0, c0).
    void paste(const PolyMatrix& src, int r0, int c0);
};

// Bounded complex of finite-rank free modules with cohomological differential
// of degree +1. ranks[i] is the rank in degree min_deg + i; diffs[i] maps
// degree min_deg+i to min_deg+i+1 (so it has shape ranks[i+1] x ranks[i]).
// support_hints lists torus points where homology is allowed to live; they
// are unioned through every construction and drive the exactness probes.
struct FreeComplex {
    int num_vars = 0;
    int min_deg = 0;
    std::vector<int> ranks;
    std::vector<PolyMatrix> diffs;
    std::vector<TorusPoint> support_hints;

    int length() const { return static_cast<int>(ranks.size()); }
    int max_deg() const { return min_deg + length() - 1; } // meaningless when empty
    bool is_empty() const;                                 // all ranks zero (or none)
    int rank_at(int k) const;
    PolyMatrix diff_at(int k) const; // correctly shaped zero matrix outside the range
    int total_rank() const;
};

// Validates shapes and d*d = 0; the error names the offending degree.
FreeComplex make_complex(int num_vars, int min_deg, std::vector<int> ranks,
                         std::vector<PolyMatrix> diffs,
                         std::vector<TorusPoint> support_hints = {});
void validate_complex(const FreeComplex& c);

FreeComplex zero_complex(int num_vars);

// Degreewise maps commuting with the differentials. Components are stored
// over the source's degree range; comp_at is zero-shaped elsewhere.
struct ChainMap {
    FreeComplex source;
    FreeComplex target;
    std::vector<PolyMatrix> comps;

    PolyMatrix comp_at(int k) const;
    bool is_zero() const;
};

ChainMap make_chain_map(FreeComplex source, FreeComplex target, std::vector<PolyMatrix> comps);
void validate_chain_map(const ChainMap& f); // error names the degree where d f != f d

ChainMap id_map(const FreeComplex& c);
ChainMap zero_map(const FreeComplex& source, const FreeComplex& target);
ChainMap scalar_map(const FreeComplex& c, const LaurentPoly& u); // u * id
ChainMap compose(const ChainMap& g, const ChainMap& f);          // g after f
ChainMap add_maps(const ChainMap& f, const ChainMap& g);
ChainMap scale_map(const ChainMap& f, const LaurentPoly& u);
bool maps_equal(const ChainMap& f, const ChainMap& g); // componentwise over the union range

// True when the complexes agree degreewise (ranks and differentials); hints
// are ignored. Robust against different stored paddings.
bool complexes_match(const FreeComplex& a, const FreeComplex& b);

// C[j]: degree k of the result is degree k+j of c; differential scaled by (-1)^j.
FreeComplex shift(const FreeComplex& c, int j);
ChainMap shift_map(const ChainMap& f, int j);

// Cone(f: A -> B): degree k is A^{k+1} (+) B^k, d = [[-dA, 0], [f, dB]].
// When A is empty the result is literally B; when B is empty it is A[1].
FreeComplex cone(const ChainMap& f);
ChainMap cone_inclusion(const ChainMap& f);  // B -> Cone(f), b -> (0, b)
ChainMap cone_projection(const ChainMap& f); // Cone(f) -> A[1], (a, b) -> a
// Functorial map Cone(fa) -> Cone(fb) induced by a strictly commuting square
// v o fa = fb o u; errors if the square does not commute exactly.
ChainMap cone_functorial(const ChainMap& fa, const ChainMap& fb, const ChainMap& u,
                         const ChainMap& v);

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b);

// Exact specialization of the differentials at a torus point.
std::vector<QMatrix> specialize(const FreeComplex& c, const TorusPoint& p);

// Naive fiber homology: h^k = rank_k - rank d^k(p) - rank d^{k-1}(p), exact
// over Q. Quasi-isomorphism invariant on bounded free complexes.
struct HomologyRanks {
    int min_deg = 0;
    std::vector<int> ranks;
    int at(int k) const;
    bool all_zero() const;
    bool operator==(const HomologyRanks& o) const;
};
HomologyRanks homology_ranks_at(const FreeComplex& c, const TorusPoint& p);

// Deterministic probe set: every hinted point, a fixed panel on the divisor
// 1 + y1 + ... + yv = 0, and 8 fixed pseudo-random torus points.
std::vector<TorusPoint> probe_points(const FreeComplex& c);
std::vector<TorusPoint> divisor_panel(int num_vars); // sigma = 0, all coordinates nonzero

// Certified on the constructed class: homology vanishes at every probe point.
bool is_exact(const FreeComplex& c, std::string* witness = nullptr);
bool is_quasi_iso(const ChainMap& f, std::string* witness = nullptr);

} // namespace wallx
