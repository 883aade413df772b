#pragma once

#include "wallx/report.hpp"
#include "wallx/schober.hpp"

#include <memory>
#include <optional>
#include <string>

namespace wallx {

// The schober over the cylinder: the hypersurface data plus the unit clutching
// the two ends. The default clutching is trivial; it is carried for interface
// completeness and never enters the matrix arithmetic.
struct CylinderSchober {
    HypersurfaceSchober sch;
    LaurentPoly m_unit;

    static CylinderSchober make(int n, int k);
};

// A chain map together with a nonzero denominator polynomial: represents
// map/den. Comparisons cross-multiply, so everything stays exact. An optional
// cached section S satisfies (map/den) o S = id and makes later inversions
// strict.
struct ScaledChainMap {
    ChainMap map;
    LaurentPoly den;
    std::shared_ptr<const ScaledChainMap> section;

    const FreeComplex& source() const { return map.source; }
    const FreeComplex& target() const { return map.target; }
};

ScaledChainMap make_scaled(ChainMap m, LaurentPoly den);
ScaledChainMap scaled_of(const ChainMap& m);
ScaledChainMap compose_scaled(const ScaledChainMap& g, const ScaledChainMap& f);
ScaledChainMap scale_scaled(const ScaledChainMap& f, const LaurentPoly& num,
                            const LaurentPoly& den);
bool scaled_equal(const ScaledChainMap& a, const ScaledChainMap& b);
bool scaled_is_quasi_iso(const ScaledChainMap& f, std::string* witness = nullptr);

// map/den == (c_num/c_den) * id for some scalar pair; reports the scalar.
bool scaled_is_multiplier(const ScaledChainMap& f, RationalFunction* scalar_out = nullptr);

// Inversion within the supported class: multipliers invert by swapping, a
// cached section is used when present, otherwise a monomial-ansatz linear
// solve over Q looks for a strict section (basis widened once). Errors when
// all three fail.
ScaledChainMap invert_scaled(const ScaledChainMap& f);

// Attach sec as f's cached section after verifying f o sec = id exactly.
// Returns false (and leaves f alone) if the identity fails.
bool attach_section(ScaledChainMap& f, const ScaledChainMap& sec);

// A local system datum on the smooth locus: a twisted complex with a
// quasi-automorphism.
struct InertiaObject {
    TwistedComplex y;
    ScaledChainMap m; // y.c -> y.c
};

// Validates the automorphism; cleanness of y is required (categorical
// wall-crossing is defined over the smooth locus).
InertiaObject make_inertia_object(const CylinderSchober& cyl, TwistedComplex y,
                                  ScaledChainMap m);

// ---- quintuples ----

// (X, Y2, p, m): X in the vanishing category, p: S X -> Y2, and a
// quasi-isomorphism m: Cone(p) -> M(Y2) trivializing the glued end. Y1, the
// boundary map and the splitting are derived.
struct Quintuple {
    CylinderSchober cyl;
    PantsObject x;
    TwistedComplex y2;
    ChainMap p;       // x.c -> y2.c
    ScaledChainMap m; // Cone(p) -> y2.c
    FreeComplex y1c;  // cached Cone(p); twist label of Y1 equals y2.twist

    TwistedComplex y1() const { return TwistedComplex{y1c, y2.twist}; }
    ChainMap boundary() const;  // Y2 -> Y1, the cone inclusion
    ChainMap inclusion() const; // Y1[-1] -> S X, the first-slot projection
};

Quintuple assemble_quintuple(CylinderSchober cyl, PantsObject x, TwistedComplex y2, ChainMap p,
                             ScaledChainMap m); // computes the cone, no validation
Report validate_quintuple(const Quintuple& q);
Quintuple make_quintuple(CylinderSchober cyl, PantsObject x, TwistedComplex y2, ChainMap p,
                         ScaledChainMap m); // assembles and validates, error on failure

// The mutated side: X#, Y1#, Y2#, the connecting map del#: Y2# -> T(Y1#), and
// m#: M(Y1#) -> Y2#.
struct MutatedQuintuple {
    CylinderSchober cyl;
    PantsObject xs;
    TwistedComplex y1s;
    TwistedComplex y2s;
    ChainMap del_s;       // y2s.c -> y1s.c (target twist y1s.twist + 1)
    ScaledChainMap ms;    // y1s.c -> y2s.c
};

Report validate_mutated_quintuple(const MutatedQuintuple& q);

// ---- constructions ----

// Split quintuple: X = 0, Y1 = Y2 = Y, boundary the identity; m is the stored
// automorphism. Cleanness of y is not required here.
Quintuple chekanov(const CylinderSchober& cyl, const TwistedComplex& y, const ScaledChainMap& m);
Quintuple chekanov(const CylinderSchober& cyl, const InertiaObject& obj);

// Twisted split mutated quintuple: X# = 0, Y1# = T^-1 Y, Y2# = Y, raw
// connecting map the identity; the stored m# is framed to the automorphism.
MutatedQuintuple clifford(const CylinderSchober& cyl, const TwistedComplex& y,
                          const ScaledChainMap& m);
MutatedQuintuple clifford(const CylinderSchober& cyl, const InertiaObject& obj);

// The structure example: X = i^!(O), Y2 = O, p the right counit, m the
// canonical collapse (with its strict section).
Quintuple counit_quintuple(const CylinderSchober& cyl);

// Wall-crossing of sections: transpose p, cone it in the vanishing category,
// swap the Y's, invert m. The connecting map of the result composes with the
// old boundary to sigma * id.
MutatedQuintuple mutate(const Quintuple& q);

// Inverse construction.
Quintuple unmutate(const MutatedQuintuple& q);

// framed(del#) o framed(m#) must be a scalar multiple of the identity;
// returns that scalar as a rational function.
RationalFunction extract_monodromy_factor(const MutatedQuintuple& q);

// Monodromy action on inertia objects: composes the automorphism into
// frakm * m^-1. Requires a multiplier automorphism. Involutive.
InertiaObject k_frakm(const CylinderSchober& cyl, const InertiaObject& obj);

// Witness-search isomorphism test on the constructed class. Returns pass/fail
// plus a witness description.
struct IsoResult {
    bool iso = false;
    std::string witness;
};
IsoResult iso_quintuple(const Quintuple& a, const Quintuple& b);
IsoResult iso_quintuple(const MutatedQuintuple& a, const MutatedQuintuple& b);

// The main comparison: mutate(chekanov(obj)) against clifford(k_frakm(obj)),
// witness search plus scalar extraction on both sides.
Report verify_corollary(const CylinderSchober& cyl, const InertiaObject& obj);

// Framing helpers: a map between twist levels s -> t carries the matrix
// factor unit^{s-t} when compared in the framed category.
ChainMap framed(const CylinderSchober& cyl, const ChainMap& raw, int src_twist, int tgt_twist);
ScaledChainMap framed(const CylinderSchober& cyl, const ScaledChainMap& raw, int src_twist,
                      int tgt_twist);

} // namespace wallx
