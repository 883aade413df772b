#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wallx/homalg.hpp"
#include "wallx/rng.hpp"

#include <string>

using namespace wallx;

namespace {

template <typename F>
std::string thrown(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

PolyMatrix mat1(const LaurentPoly& p) {
    PolyMatrix m(1, 1, p.num_vars());
    m.at(0, 0) = p;
    return m;
}

// the two-term complex R --f--> R in degrees -1, 0 with the point hint
FreeComplex two_term(const LaurentPoly& f, const TorusPoint& hint) {
    return make_complex(f.num_vars(), -1, {1, 1}, {mat1(f)}, {hint});
}

FreeComplex rank_one(int nv) {
    return make_complex(nv, 0, {1}, {});
}

} // namespace

TEST_CASE("complex validation reports the offending degree") {
    LaurentPoly one = LaurentPoly::constant(1, Rational(1));
    PolyMatrix d0(2, 1, 1);
    d0.at(0, 0) = one;
    d0.at(1, 0) = one;
    PolyMatrix d1(1, 2, 1);
    d1.at(0, 0) = one;
    d1.at(0, 1) = one;
    std::string w = thrown([&] { make_complex(1, 0, {1, 2, 1}, {d0, d1}); });
    CHECK(w.find("d^2 != 0 at degree 0") != std::string::npos);

    // fixing the sign makes it a genuine complex
    PolyMatrix d1ok = d1;
    d1ok.at(0, 1) = -one;
    FreeComplex c = make_complex(1, 0, {1, 2, 1}, {d0, d1ok});
    CHECK(c.total_rank() == 4);

    w = thrown([&] { make_complex(1, 0, {1, 1}, {PolyMatrix(2, 1, 1)}); });
    CHECK(w.find("differential at degree 0") != std::string::npos);
}

TEST_CASE("fiber homology of the one-variable Koszul complex") {
    LaurentPoly f = parse_poly("y1 - 2", 1);
    FreeComplex k = two_term(f, TorusPoint({Rational(2)}));

    HomologyRanks at2 = homology_ranks_at(k, TorusPoint({Rational(2)}));
    CHECK(at2.at(-1) == 1); // Tor term at the supported point
    CHECK(at2.at(0) == 1);
    CHECK(at2.at(1) == 0);

    HomologyRanks at5 = homology_ranks_at(k, TorusPoint({Rational(5)}));
    CHECK(at5.all_zero());

    FreeComplex o = rank_one(1);
    HomologyRanks ho = homology_ranks_at(o, TorusPoint({Rational(3)}));
    CHECK(ho.at(0) == 1);
    CHECK_FALSE(ho.all_zero());
}

TEST_CASE("shift translates degrees and flips odd signs") {
    LaurentPoly f = parse_poly("y1 - 2", 1);
    FreeComplex k = two_term(f, TorusPoint({Rational(2)}));

    CHECK(complexes_match(shift(k, 0), k));
    CHECK(complexes_match(shift(shift(k, 1), -1), k));
    CHECK(complexes_match(shift(shift(k, -2), 2), k));

    FreeComplex up = shift(k, 1);
    CHECK(up.min_deg == -2);
    CHECK(up.max_deg() == -1);
    CHECK(up.diff_at(-2) == -mat1(f));

    FreeComplex even = shift(k, 2);
    CHECK(even.diff_at(-3) == mat1(f));

    // fiber homology translates with the degrees
    TorusPoint p({Rational(2)});
    HomologyRanks base = homology_ranks_at(k, p);
    HomologyRanks shifted = homology_ranks_at(up, p);
    CHECK(shifted.at(-2) == base.at(-1));
    CHECK(shifted.at(-1) == base.at(0));
}

TEST_CASE("cones realize the triangle conventions") {
    LaurentPoly f = parse_poly("y1 - 2", 1);
    FreeComplex k = two_term(f, TorusPoint({Rational(2)}));

    CHECK(is_exact(cone(id_map(k))));

    // zero source: the cone is literally the target
    FreeComplex z = zero_complex(1);
    ChainMap from_zero = zero_map(z, k);
    CHECK(complexes_match(cone(from_zero), k));
    CHECK(maps_equal(cone_inclusion(from_zero), id_map(k)));

    // zero target: the cone is the shifted source
    ChainMap to_zero = zero_map(k, z);
    CHECK(complexes_match(cone(to_zero), shift(k, 1)));

    // sigma on O gives the two-term hypersurface resolution
    LaurentPoly sigma = parse_poly("1 + y1", 1);
    FreeComplex o = rank_one(1);
    FreeComplex res = cone(scalar_map(o, sigma));
    CHECK(res.min_deg == -1);
    CHECK(res.ranks == std::vector<int>{1, 1});
    CHECK(res.diff_at(-1) == mat1(sigma));
}

TEST_CASE("the canonical cone maps rotate to zero") {
    LaurentPoly f = parse_poly("y1 - 2", 1);
    FreeComplex k = two_term(f, TorusPoint({Rational(2)}));
    SmallRationalSampler rng(17);
    for (int i = 0; i < 10; ++i) {
        LaurentPoly u = LaurentPoly::monomial(1, {rng.pick(-2, 2)}, rng.nonzero_rational());
        ChainMap g = scalar_map(k, u);
        validate_chain_map(cone_inclusion(g));
        validate_chain_map(cone_projection(g));
        CHECK(compose(cone_projection(g), cone_inclusion(g)).is_zero());
        CHECK(is_exact(cone(g))); // unit multiple of the identity is invertible
    }
}

TEST_CASE("cone_functorial needs a strictly commuting square") {
    FreeComplex o = rank_one(1);
    LaurentPoly s = parse_poly("1 + y1", 1);
    LaurentPoly t = parse_poly("y1 - 2", 1);
    ChainMap fa = scalar_map(o, s);
    ChainMap fb = scalar_map(o, s);
    ChainMap u = scalar_map(o, t);

    ChainMap g = cone_functorial(fa, fb, u, u);
    validate_chain_map(g);
    CHECK(g.comp_at(-1) == mat1(t));
    CHECK(g.comp_at(0) == mat1(t));

    ChainMap v = scalar_map(o, t + LaurentPoly::constant(1, Rational(1)));
    std::string w = thrown([&] { cone_functorial(fa, fb, u, v); });
    CHECK(w.find("square does not commute") != std::string::npos);
}

TEST_CASE("sums and scalar maps behave categorically") {
    LaurentPoly f = parse_poly("y1 - 2", 1);
    FreeComplex k = two_term(f, TorusPoint({Rational(2)}));
    FreeComplex o = rank_one(1);

    FreeComplex sum = direct_sum(k, o);
    CHECK(sum.rank_at(-1) == 1);
    CHECK(sum.rank_at(0) == 2);
    CHECK(sum.total_rank() == 3);

    ChainMap g = scalar_map(k, f);
    CHECK(maps_equal(compose(g, id_map(k)), g));
    CHECK(maps_equal(compose(id_map(k), g), g));
    CHECK(maps_equal(scalar_map(k, LaurentPoly::constant(1, Rational(1))), id_map(k)));
    CHECK(maps_equal(add_maps(g, scale_map(g, LaurentPoly::constant(1, Rational(-1)))),
                     zero_map(k, k)));
    CHECK(thrown([&] { compose(g, scalar_map(o, f)); }).find("endpoints") != std::string::npos);
}

TEST_CASE("chain map validation names the degree that fails") {
    LaurentPoly f = parse_poly("y1 - 2", 1);
    FreeComplex k = two_term(f, TorusPoint({Rational(2)}));
    PolyMatrix a = mat1(parse_poly("1", 1));
    PolyMatrix b = mat1(parse_poly("y1", 1));
    std::string w = thrown([&] { make_chain_map(k, k, {a, b}); });
    CHECK(w.find("does not commute with d at degree -1") != std::string::npos);
    // equal components do commute with this differential
    ChainMap ok = make_chain_map(k, k, {b, b});
    validate_chain_map(ok);
}

TEST_CASE("specialization evaluates differentials pointwise") {
    LaurentPoly f = parse_poly("y1 - 2", 1);
    FreeComplex k = two_term(f, TorusPoint({Rational(2)}));
    auto mats = specialize(k, TorusPoint({Rational(5)}));
    REQUIRE(mats.size() == 1);
    CHECK(mats[0].rows == 1);
    CHECK(mats[0].cols == 1);
    CHECK(mats[0].at(0, 0) == Rational(3));
}

TEST_CASE("quasi-isomorphism decisions carry witnesses") {
    LaurentPoly sigma = parse_poly("1 + y1", 1);

    // supported away from the divisor: sigma acts invertibly
    FreeComplex k2 = two_term(parse_poly("y1 - 2", 1), TorusPoint({Rational(2)}));
    CHECK(is_quasi_iso(scalar_map(k2, sigma)));

    // supported on the divisor: sigma kills the fiber and the witness names it
    FreeComplex kd = two_term(parse_poly("y1 + 1", 1), TorusPoint({Rational(-1)}));
    std::string w;
    CHECK_FALSE(is_quasi_iso(scalar_map(kd, sigma), &w));
    CHECK(w.find("(-1)") != std::string::npos);

    CHECK_FALSE(is_exact(k2, &w));
    CHECK(w.find("homology rank") != std::string::npos);
}

TEST_CASE("probe points are deterministic and include every hint") {
    FreeComplex k = two_term(parse_poly("y1 - 2", 1), TorusPoint({Rational(2)}));
    auto a = probe_points(k);
    auto b = probe_points(k);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    bool has_hint = false;
    for (const auto& p : a)
        if (p == TorusPoint({Rational(2)})) has_hint = true;
    CHECK(has_hint);
    CHECK(a.size() >= divisor_panel(1).size() + 8);
}

TEST_CASE("hints survive cones, shifts and sums") {
    FreeComplex k2 = two_term(parse_poly("y1 - 2", 1), TorusPoint({Rational(2)}));
    FreeComplex k3 = two_term(parse_poly("y1 - 3", 1), TorusPoint({Rational(3)}));
    FreeComplex both = direct_sum(shift(k2, 1), k3);
    auto pts = probe_points(both);
    int hits = 0;
    for (const auto& p : pts)
        if (p == TorusPoint({Rational(2)}) || p == TorusPoint({Rational(3)})) ++hits;
    CHECK(hits == 2);
    FreeComplex cn = cone(zero_map(k2, k3));
    pts = probe_points(cn);
    hits = 0;
    for (const auto& p : pts)
        if (p == TorusPoint({Rational(2)}) || p == TorusPoint({Rational(3)})) ++hits;
    CHECK(hits == 2);
}

TEST_CASE("maps compare over the union of their stored ranges") {
    FreeComplex k = two_term(parse_poly("y1 - 2", 1), TorusPoint({Rational(2)}));
    FreeComplex padded = make_complex(1, -2, {0, 1, 1},
                                      {PolyMatrix(1, 0, 1), mat1(parse_poly("y1 - 2", 1))},
                                      {TorusPoint({Rational(2)})});
    CHECK(complexes_match(k, padded));
    CHECK(maps_equal(id_map(k), id_map(k)));
    CHECK_FALSE(maps_equal(id_map(k), scalar_map(k, parse_poly("y1", 1))));
}
