#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wallx/schober.hpp"

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

} // namespace

TEST_CASE("schober data fixes sigma, the framing unit and the monodromy multiplier") {
    HypersurfaceSchober s2 = HypersurfaceSchober::make(2, 2);
    CHECK(s2.num_vars() == 1);
    CHECK(s2.sigma == parse_poly("1 + y1", 1));
    CHECK(s2.unit == parse_poly("1", 1));
    CHECK(s2.frakm == s2.sigma);

    HypersurfaceSchober s31 = HypersurfaceSchober::make(3, 1);
    CHECK(s31.sigma == parse_poly("1 + y1 + y2", 2));
    CHECK(s31.unit == parse_poly("y1", 2));
    CHECK(s31.frakm == parse_poly("y1^-1 + 1 + y1^-1*y2", 2));
    CHECK(s31.frakm * s31.unit == s31.sigma);
    CHECK(s31.unit_pow(-2) == parse_poly("y1^-2", 2));

    CHECK(thrown([] { HypersurfaceSchober::make(1, 1); }) != "");
    CHECK(thrown([] { HypersurfaceSchober::make(3, 4); }).find("out of range") !=
          std::string::npos);
}

TEST_CASE("koszul skyscrapers have binomial ranks and carry their point") {
    TorusPoint p({Rational(2)});
    FreeComplex k1 = koszul_complex(1, p);
    CHECK(k1.min_deg == -1);
    CHECK(k1.ranks == std::vector<int>{1, 1});
    CHECK(k1.diff_at(-1).at(0, 0) == parse_poly("y1 - 2", 1));
    REQUIRE(k1.support_hints.size() == 1);
    CHECK(k1.support_hints[0] == p);

    TorusPoint q({Rational(1), Rational(-2)});
    FreeComplex k2 = koszul_complex(2, q);
    CHECK(k2.min_deg == -2);
    CHECK(k2.ranks == std::vector<int>{1, 2, 1});
    validate_complex(k2);

    HomologyRanks h = homology_ranks_at(k2, q);
    CHECK(h.at(-2) == 1);
    CHECK(h.at(-1) == 2);
    CHECK(h.at(0) == 1);
    CHECK(homology_ranks_at(k2, TorusPoint({Rational(3), Rational(1)})).all_zero());

    HypersurfaceSchober s = HypersurfaceSchober::make(2, 2);
    CHECK(skyscraper(s, p, 3).twist == 3);
    CHECK(structure_object(s).c.ranks == std::vector<int>{1});
    CHECK(structure_object(s, -1).twist == -1);
}

TEST_CASE("divisor skyscrapers carry the wedge homotopy") {
    HypersurfaceSchober s2 = HypersurfaceSchober::make(2, 2);
    PantsObject d1 = divisor_skyscraper(s2, TorusPoint({Rational(-1)}));
    validate_pants_object(d1, s2.sigma);

    HypersurfaceSchober s3 = HypersurfaceSchober::make(3, 3);
    PantsObject d2 = divisor_skyscraper(s3, TorusPoint({Rational(1), Rational(-2)}), 2);
    validate_pants_object(d2, s3.sigma);
    CHECK(d2.twist == 2);

    std::string w = thrown([&] { divisor_skyscraper(s2, TorusPoint({Rational(2)})); });
    CHECK(w.find("(2) is not on the divisor") != std::string::npos);
}

TEST_CASE("restriction and its right adjoint are the sigma cones") {
    HypersurfaceSchober s = HypersurfaceSchober::make(2, 2);
    TwistedComplex o = structure_object(s);

    PantsObject rest = i_star(s, o);
    validate_pants_object(rest, s.sigma);
    CHECK(rest.c.min_deg == -1);
    CHECK(rest.c.ranks == std::vector<int>{1, 1});
    CHECK(rest.c.diff_at(-1).at(0, 0) == s.sigma);
    CHECK(rest.twist == 0);
    CHECK(complexes_match(pushforward(rest).c, cone(scalar_map(o.c, s.sigma))));

    PantsObject sh = i_shriek(s, o);
    validate_pants_object(sh, s.sigma);
    CHECK(sh.c.min_deg == 0);
    CHECK(sh.c.ranks == std::vector<int>{1, 1});
    CHECK(sh.c.diff_at(0).at(0, 0) == -s.sigma);
    CHECK(sh.twist == 1);

    // restriction of a divisor skyscraper keeps the full binomial fiber
    TorusPoint q1({Rational(-1)});
    PantsObject rd = i_star(s, skyscraper(s, q1));
    HomologyRanks h1 = homology_ranks_at(rd.c, q1);
    CHECK(h1.at(-2) == 1);
    CHECK(h1.at(-1) == 2);
    CHECK(h1.at(0) == 1);

    HypersurfaceSchober s3 = HypersurfaceSchober::make(3, 3);
    TorusPoint q2({Rational(1), Rational(-2)});
    PantsObject rd2 = i_star(s3, skyscraper(s3, q2));
    HomologyRanks h2 = homology_ranks_at(rd2.c, q2);
    CHECK(h2.at(-3) == 1);
    CHECK(h2.at(-2) == 3);
    CHECK(h2.at(-1) == 3);
    CHECK(h2.at(0) == 1);
}

TEST_CASE("monodromy is twist bookkeeping with its canonical comparison maps") {
    HypersurfaceSchober s = HypersurfaceSchober::make(3, 1);
    TwistedComplex f = skyscraper(s, TorusPoint({Rational(2), Rational(3)}));
    CHECK(monodromy(f, 1).twist == 1);
    CHECK(monodromy(monodromy(f, 1), -1) == f);
    CHECK(thrown([&] { monodromy(f, 0); }).find("direction") != std::string::npos);

    CHECK(maps_equal(canonical_p_psi(s, f), scalar_map(f.c, s.sigma)));
    CHECK(maps_equal(frakm_map(s, f), scalar_map(f.c, s.frakm)));
}

TEST_CASE("adjunction triangle identities hold on the nose") {
    HypersurfaceSchober s = HypersurfaceSchober::make(2, 2);
    TorusPoint q({Rational(-1)});

    for (const PantsObject& x : {i_star(s, structure_object(s)), divisor_skyscraper(s, q),
                                 i_shriek(s, skyscraper(s, TorusPoint({Rational(2)})))}) {
        TwistedComplex sx = pushforward(x);
        CHECK(maps_equal(compose(counit_right(s, sx), unit_right(s, x)), id_map(x.c)));
        CHECK(maps_equal(compose(counit_left(s, x), unit_left(s, sx)), id_map(x.c)));
    }
}

TEST_CASE("adjoint transposition is strict and involutive") {
    HypersurfaceSchober s = HypersurfaceSchober::make(2, 2);
    TwistedComplex o = structure_object(s);

    // transposing the counit gives the identity exactly
    PantsObject sh = i_shriek(s, o);
    ChainMap cr = counit_right(s, o);
    CHECK(maps_equal(adjoint_transpose(s, sh, cr), id_map(sh.c)));

    // transpose then transpose back returns any section map unchanged
    PantsObject x = i_star(s, skyscraper(s, TorusPoint({Rational(2)})));
    TwistedComplex y = pushforward(x);
    ChainMap p = scalar_map(x.c, s.sigma);
    ChainMap pt = adjoint_transpose(s, x, p);
    validate_chain_map(pt);
    CHECK(maps_equal(transpose_back(s, pt, y), p));

    ChainMap pt2 = adjoint_transpose(s, sh, cr);
    CHECK(maps_equal(transpose_back(s, pt2, o), cr));
}

TEST_CASE("the canonical collapse is a split quasi-isomorphism") {
    for (int n : {2, 3}) {
        HypersurfaceSchober s = HypersurfaceSchober::make(n, n);
        for (const TwistedComplex& f :
             {structure_object(s), skyscraper(s, n == 2 ? TorusPoint({Rational(2)})
                                                        : TorusPoint({Rational(1), Rational(1)}))}) {
            ChainMap k = kappa(s, f);
            ChainMap sec = kappa_section(s, f);
            validate_chain_map(k);
            validate_chain_map(sec);
            CHECK(maps_equal(compose(k, sec), id_map(f.c)));
            CHECK(is_quasi_iso(k));
        }
    }
}

TEST_CASE("vanishing-side cones demand strict homotopy commutation") {
    HypersurfaceSchober s = HypersurfaceSchober::make(2, 2);
    PantsObject a = i_star(s, skyscraper(s, TorusPoint({Rational(2)})));

    // the cone over a commuting map carries the diagonal homotopy
    PantsObject c = cone_phi(s, a, a, scalar_map(a.c, s.sigma), 0);
    validate_pants_object(c, s.sigma);
    CHECK(c.twist == 0);
    CHECK(c.c.rank_at(-1) == a.c.rank_at(0) + a.c.rank_at(-1));

    // f = d t + t d is a chain map, but this t breaks h-commutation
    LaurentPoly ym2 = parse_poly("y1 - 2", 1);
    PolyMatrix f2(1, 1, 1);
    PolyMatrix f1(2, 2, 1);
    f1.at(1, 0) = s.sigma;
    f1.at(1, 1) = ym2;
    PolyMatrix f0(1, 1, 1);
    f0.at(0, 0) = ym2;
    ChainMap f = make_chain_map(a.c, a.c, {f2, f1, f0});
    std::string w = thrown([&] { cone_phi(s, a, a, f, 0); });
    CHECK(w.find("does not commute with the homotopies") != std::string::npos);
}

TEST_CASE("cleanness probes agree with the divisor membership of the support") {
    HypersurfaceSchober s = HypersurfaceSchober::make(2, 2);

    CleanProbes off = clean_probes(s, skyscraper(s, TorusPoint({Rational(2)})));
    CHECK(off.agree());
    CHECK(off.via_i_star);
    CHECK(is_clean(s, skyscraper(s, TorusPoint({Rational(2)}))));

    CleanProbes on = clean_probes(s, skyscraper(s, TorusPoint({Rational(-1)})));
    CHECK(on.agree());
    CHECK_FALSE(on.via_i_shriek);
    CHECK_FALSE(is_clean(s, skyscraper(s, TorusPoint({Rational(-1)}))));

    HypersurfaceSchober s3 = HypersurfaceSchober::make(3, 2);
    CHECK(is_clean(s3, skyscraper(s3, TorusPoint({Rational(1), Rational(1)}))));
    CHECK_FALSE(is_clean(s3, skyscraper(s3, TorusPoint({Rational(1), Rational(-2)}))));
    CHECK_FALSE(is_clean(s3, structure_object(s3)));
}

TEST_CASE("spherical functor axioms hold on the standard samples") {
    HypersurfaceSchober s2 = HypersurfaceSchober::make(2, 2);
    auto samples2 = standard_samples(s2);
    CHECK(samples2.size() == 6);
    Report r2 = check_sf_axioms(s2, samples2);
    CHECK(r2.lines.size() == 4 * samples2.size());
    for (const auto& l : r2.lines) {
        INFO(l.name, " ", l.witness);
        CHECK(l.pass);
    }

    HypersurfaceSchober s3 = HypersurfaceSchober::make(3, 3);
    auto samples3 = standard_samples(s3);
    CHECK(samples3.size() == 7);
    Report r3 = check_sf_axioms(s3, samples3);
    CHECK(r3.lines.size() == 4 * samples3.size());
    CHECK(r3.all_pass());

    // a non-terminal framing twists the unit but not the axioms
    HypersurfaceSchober s31 = HypersurfaceSchober::make(3, 1);
    CHECK(check_sf_axioms(s31, standard_samples(s31)).all_pass());
}
