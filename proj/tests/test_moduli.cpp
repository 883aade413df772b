#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wallx/moduli.hpp"

#include <string>
#include <vector>

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

Rational sigma_at(const TorusPoint& p) {
    Rational s(1);
    for (const Rational& c : p.coords) s += c;
    return s;
}

} // namespace

TEST_CASE("inertia points print as point-semicolon-scalar") {
    CHECK(make_inertia_point(TorusPoint({Rational(2)}), Rational(1)).to_string() == "(2; 1)");
    CHECK(make_inertia_point(TorusPoint({Rational(1), Rational(1)}), Rational(3, 2)).to_string() ==
          "(1, 1; 3/2)");
    CHECK(make_inertia_point(TorusPoint({Rational(-1, 2)}), Rational(3)).to_string() ==
          "(-1/2; 3)");
    CHECK(thrown([] { make_inertia_point(TorusPoint({Rational(2)}), Rational(0)); })
              .find("must be nonzero") != std::string::npos);
}

TEST_CASE("rank-one objects exist exactly off the pair-of-pants locus") {
    CylinderSchober cyl = CylinderSchober::make(2, 2);
    InertiaObject obj =
        skyscraper_object(cyl, make_inertia_point(TorusPoint({Rational(2)}), Rational(3)));
    CHECK(obj.y.twist == 0);
    RationalFunction rho;
    REQUIRE(scaled_is_multiplier(obj.m, &rho));
    CHECK(rho == RationalFunction::from_poly(LaurentPoly::constant(1, Rational(3))));

    CHECK(thrown([&] {
              skyscraper_object(cyl, make_inertia_point(TorusPoint({Rational(-1)}), Rational(3)));
          }).find("lies on the pair-of-pants locus") != std::string::npos);
    CHECK(thrown([&] {
              skyscraper_object(
                  cyl, make_inertia_point(TorusPoint({Rational(2), Rational(2)}), Rational(3)));
          }).find("wrong number of coordinates") != std::string::npos);
}

TEST_CASE("the point formula rescales the scalar by sigma over the framing unit") {
    InertiaPoint ip = make_inertia_point(TorusPoint({Rational(2)}), Rational(3));

    InertiaPoint out = wallcross_point(ip, 2, 2);
    CHECK(out.point == ip.point);
    CHECK(out.lambda == Rational(1));
    CHECK(out.to_string() == "(2; 1)");

    InertiaPoint out1 = wallcross_point(ip, 2, 1);
    CHECK(out1.lambda == Rational(1, 2));

    InertiaPoint ip3 = make_inertia_point(TorusPoint({Rational(1), Rational(-3)}), Rational(2));
    CHECK(wallcross_point(ip3, 3, 3).lambda == Rational(-1, 2));
    CHECK(wallcross_point(ip3, 3, 2).lambda == Rational(1, 6));

    CHECK(thrown([&] { wallcross_point(ip, 2, 3); }).find("out of range") != std::string::npos);
    CHECK(thrown([&] { wallcross_point(ip3, 2, 2); }).find("wrong number") != std::string::npos);
    CHECK(thrown([&] {
              wallcross_point(make_inertia_point(TorusPoint({Rational(-1)}), Rational(1)), 2, 2);
          }).find("pair-of-pants") != std::string::npos);
}

TEST_CASE("the point formula is an involution wherever it is defined") {
    InertiaPoint pts[] = {
        make_inertia_point(TorusPoint({Rational(2)}), Rational(3)),
        make_inertia_point(TorusPoint({Rational(-1, 3)}), Rational(-2)),
        make_inertia_point(TorusPoint({Rational(1), Rational(1)}), Rational(5, 7)),
        make_inertia_point(TorusPoint({Rational(-2), Rational(3, 4)}), Rational(1)),
    };
    for (const InertiaPoint& ip : pts) {
        int n = ip.point.num_vars() + 1;
        for (int k = 1; k <= n; ++k) {
            InertiaPoint rt = wallcross_point(wallcross_point(ip, n, k), n, k);
            CHECK(rt.point == ip.point);
            CHECK(rt.lambda == ip.lambda);
        }
    }
}

TEST_CASE("the packaged map prints the birational formula componentwise") {
    BirationalMap m2 = wallcross_map(2, 2);
    CHECK(m2.component_lines() ==
          std::vector<std::string>{"y1 -> y1", "y2 -> (1 + y1)/y2"});

    CHECK(wallcross_map(3, 3).component_lines() ==
          std::vector<std::string>{"y1 -> y1", "y2 -> y2", "y3 -> (1 + y1 + y2)/y3"});

    CHECK(wallcross_map(4, 4).component_lines() ==
          std::vector<std::string>{"y1 -> y1", "y2 -> y2", "y3 -> y3",
                                   "y4 -> (1 + y1 + y2 + y3)/y4"});

    BirationalMap m31 = wallcross_map(3, 1);
    CHECK(m31.component_lines()[2] == "y3 -> (1 + y1 + y2)/(y1*y3)");
    CHECK(m31.comps.size() == 3);
    CHECK(m31.comps[0] == RationalFunction::from_poly(LaurentPoly::variable(3, 1)));

    CHECK(thrown([] { wallcross_map(1, 1); }).find("at least two") != std::string::npos);
    CHECK(thrown([] { wallcross_map(3, 0); }).find("out of range") != std::string::npos);
}

TEST_CASE("evaluation guards both ends of the torus") {
    BirationalMap bm = wallcross_map(2, 2);
    CHECK(apply_map(bm, {Rational(2), Rational(3)}) ==
          std::vector<Rational>{Rational(2), Rational(1)});

    CHECK(thrown([&] { apply_map(bm, {Rational(2)}); }).find("expected 2 coordinates") !=
          std::string::npos);
    CHECK(thrown([&] { apply_map(bm, {Rational(0), Rational(3)}); })
              .find("coordinate y1 vanishes: off the torus") != std::string::npos);
    CHECK(thrown([&] { apply_map(bm, {Rational(-1), Rational(3)}); })
              .find("component y2: the image leaves the torus") != std::string::npos);

    BirationalMap custom = bm;
    custom.comps[1] = RationalFunction(LaurentPoly::constant(2, Rational(1)),
                                       parse_poly("1 + y1", 2));
    CHECK(thrown([&] { apply_map(custom, {Rational(-1), Rational(3)}); })
              .find("component y2: denominator vanishes") != std::string::npos);
}

TEST_CASE("the map and the point formula agree at random points") {
    SmallRationalSampler rng(11);
    for (int n : {2, 3}) {
        for (int k = 1; k <= n; ++k) {
            BirationalMap bm = wallcross_map(n, k);
            int done = 0;
            while (done < 10) {
                TorusPoint p = rng.torus_point(n - 1);
                if (sigma_at(p) == 0) continue;
                Rational lam = rng.nonzero_rational();
                InertiaPoint via_point = wallcross_point(make_inertia_point(p, lam), n, k);
                std::vector<Rational> coords = p.coords;
                coords.push_back(lam);
                std::vector<Rational> via_map = apply_map(bm, coords);
                for (int i = 0; i + 1 < n; ++i) CHECK(via_map[i] == p.coords[i]);
                CHECK(via_map.back() == via_point.lambda);
                ++done;
            }
        }
    }
}

TEST_CASE("the categorical pipeline reproduces the birational formula") {
    CylinderSchober c22 = CylinderSchober::make(2, 2);
    InertiaPoint ip = make_inertia_point(TorusPoint({Rational(2)}), Rational(3));
    InertiaPoint crossed = categorical_wallcross(c22, ip);
    CHECK(crossed.point == ip.point);
    CHECK(crossed.lambda == Rational(1));
    CHECK(crossed.lambda == wallcross_point(ip, 2, 2).lambda);

    InertiaPoint back = categorical_wallcross(c22, crossed);
    CHECK(back.lambda == ip.lambda);

    CylinderSchober c33 = CylinderSchober::make(3, 3);
    InertiaPoint ip3 = make_inertia_point(TorusPoint({Rational(1), Rational(1)}), Rational(1));
    CHECK(categorical_wallcross(c33, ip3).lambda == Rational(3));

    CylinderSchober c31 = CylinderSchober::make(3, 1);
    InertiaPoint ip31 = make_inertia_point(TorusPoint({Rational(2), Rational(3)}), Rational(2));
    CHECK(categorical_wallcross(c31, ip31).lambda == wallcross_point(ip31, 3, 1).lambda);

    CHECK(thrown([&] {
              categorical_wallcross(c22,
                                    make_inertia_point(TorusPoint({Rational(-1)}), Rational(1)));
          }).find("pair-of-pants") != std::string::npos);
}

TEST_CASE("the randomized suite is deterministic and currently all green") {
    CompareOutcome a = compare_suite(2, 2, 10, 7);
    CHECK(a.trials == 10);
    CHECK(a.passes == 10);
    CHECK(a.report.lines.size() == 10);
    CHECK(a.report.lines[0].name == "trial-0");
    CHECK(a.report.all_pass());

    CompareOutcome b = compare_suite(2, 2, 10, 7);
    CHECK(b.passes == a.passes);
    for (size_t i = 0; i < a.report.lines.size(); ++i)
        CHECK(a.report.lines[i].witness == b.report.lines[i].witness);

    CHECK(compare_suite(3, 1, 6, 1).passes == 6);
    CHECK(compare_suite(3, 2, 5, 2).passes == 5);
    CHECK(thrown([] { compare_suite(1, 1, 5, 0); }).find("at least two") != std::string::npos);
}
