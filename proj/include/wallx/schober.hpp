#pragma once

#include "wallx/homalg.hpp"
#include "wallx/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wallx {

// The pair (torus of rank n-1, hypersurface sigma = 1 + y1 + ... + y_{n-1})
// together with the framing choice k in 1..n. The framing unit is y_k for
// k < n and 1 for k = n; the monodromy multiplier is sigma / unit.
struct HypersurfaceSchober {
    int n = 0;
    int k = 0;
    LaurentPoly sigma;
    LaurentPoly unit;
    LaurentPoly frakm;

    static HypersurfaceSchober make(int n, int k);
    int num_vars() const { return n - 1; }
    LaurentPoly unit_pow(int e) const; // unit^e, a genuine Laurent monomial for any e
};

// Object of the generic-fiber category: a complex with a twist label counting
// applications of the monodromy functor.
struct TwistedComplex {
    FreeComplex c;
    int twist = 0;

    bool operator==(const TwistedComplex& o) const {
        return twist == o.twist && complexes_match(c, o.c);
    }
};

// Object of the vanishing category: a complex together with a strict
// degreewise homotopy h witnessing that multiplication by sigma is zero up to
// homotopy: d h + h d = sigma * id, and h o h = 0. Both identities are class
// invariants enforced at construction; the second is what makes adjunction
// transposes strict chain maps.
struct PantsObject {
    FreeComplex c;
    std::vector<PolyMatrix> h; // h[i]: degree min_deg+i -> min_deg+i-1
    int twist = 0;

    PolyMatrix h_at(int k) const; // zero-shaped outside the stored range
};

PantsObject make_pants_object(FreeComplex c, std::vector<PolyMatrix> h, int twist,
                              const LaurentPoly& sigma);
void validate_pants_object(const PantsObject& x, const LaurentPoly& sigma);
PantsObject empty_pants_object(int num_vars, int twist = 0);

// ---- standard objects ----

// Structure sheaf O in degree 0.
TwistedComplex structure_object(const HypersurfaceSchober& s, int twist = 0);

// Koszul resolution of the skyscraper at p (sigma(p) arbitrary): degrees
// -v..0, rank C(v, j) in degree -j. Carries {p} as its support hint.
FreeComplex koszul_complex(int num_vars, const TorusPoint& p);
TwistedComplex skyscraper(const HypersurfaceSchober& s, const TorusPoint& p, int twist = 0);

// Skyscraper at a point of the divisor (sigma(q) = 0 required), with the
// wedge homotopy h(e_S) = sum_{i not in S} +- e_{S u {i}}; then
// d h + h d = sum (y_i - q_i) = sigma exactly.
PantsObject divisor_skyscraper(const HypersurfaceSchober& s, const TorusPoint& q, int twist = 0);

// ---- the three functors and the monodromy ----

// Forget the homotopy witness.
TwistedComplex pushforward(const PantsObject& x);

// Derived restriction: cone of sigma with the tautological homotopy
// (a, b) -> (b, 0). Twist is preserved.
PantsObject i_star(const HypersurfaceSchober& s, const TwistedComplex& f);

// Right adjoint: the same cone shifted down, slots (x, w) in F^k (+) F^{k-1},
// d(x, w) = (dx, -sigma x - dw), homotopy (x, w) -> (-w, 0). Twist gains one.
PantsObject i_shriek(const HypersurfaceSchober& s, const TwistedComplex& f);

TwistedComplex monodromy(const TwistedComplex& f, int dir); // dir = +1 or -1, twist bookkeeping only

// sigma * id viewed as the canonical map F -> T F (raw matrix; the twist
// labels live on the endpoints).
ChainMap canonical_p_psi(const HypersurfaceSchober& s, const TwistedComplex& f);
// frakm * id: the monodromy comparison on the framed side.
ChainMap frakm_map(const HypersurfaceSchober& s, const TwistedComplex& f);

// ---- adjunction data (all strict chain maps) ----

ChainMap unit_left(const HypersurfaceSchober& s, const TwistedComplex& f);   // F -> S S^l F
ChainMap counit_left(const HypersurfaceSchober& s, const PantsObject& x);    // S^l S X -> X
ChainMap unit_right(const HypersurfaceSchober& s, const PantsObject& x);     // X -> S^r S X
ChainMap counit_right(const HypersurfaceSchober& s, const TwistedComplex& f); // S S^r F -> F

// Transpose across the right adjunction: p: S X -> Y becomes
// X -> i^! Y, a -> (p a, -p h a). Strict; requires h^2 = 0.
ChainMap adjoint_transpose(const HypersurfaceSchober& s, const PantsObject& x,
                           const ChainMap& p);
// Transpose back: c_r o S(p~). Equals the original p on the nose.
ChainMap transpose_back(const HypersurfaceSchober& s, const ChainMap& p_tilde,
                        const TwistedComplex& y);

// Canonical collapse Cone(c_r at F) -> F (as T F): ((x, w), z) -> -w + sigma z.
// Quasi-iso with the strict section z -> ((0, -z), 0).
ChainMap kappa(const HypersurfaceSchober& s, const TwistedComplex& f);
ChainMap kappa_section(const HypersurfaceSchober& s, const TwistedComplex& f);

// Cone in the vanishing category: requires f to commute with the homotopies
// strictly (error otherwise); the cone carries H = diag(-h_src, h_tgt).
PantsObject cone_phi(const HypersurfaceSchober& s, const PantsObject& a, const PantsObject& b,
                     const ChainMap& f, int twist);

// ---- cleanness ----

// A twisted complex is clean when its restriction to the divisor is exact.
bool is_clean(const HypersurfaceSchober& s, const TwistedComplex& f);

struct CleanProbes {
    bool via_i_star = false;  // i^* F exact
    bool via_i_shriek = false; // i^! F exact
    bool via_p_psi = false;   // sigma * id a quasi-iso
    bool agree() const { return via_i_star == via_i_shriek && via_i_shriek == via_p_psi; }
};
CleanProbes clean_probes(const HypersurfaceSchober& s, const TwistedComplex& f);

// ---- spherical functor axioms ----

struct SfSample {
    std::string name;
    TwistedComplex w;
    std::optional<PantsObject> x; // used for the vanishing-side twist axiom
};

std::vector<SfSample> standard_samples(const HypersurfaceSchober& s);

// One line per axiom per sample:
//   SF1: T T^-1 = id literally;
//   SF2: the composite i^! F -> i^!(S S^l F) -> Cone(u_r at i^* F) is a
//        certified quasi-iso (right adjoint versus vanishing twist of the left);
//   SF3: ranks(T_phi X)[k] == ranks(X)[k-2] at every probe point, where
//        T_phi X = Cone(u_r at X)[-1];
//   SF4: (a, b) -> (-a, b) : S^l(T F[-1]) -> S^r F is a strict iso and a
//        certified quasi-iso.
Report check_sf_axioms(const HypersurfaceSchober& s, const std::vector<SfSample>& samples);

} // namespace wallx
