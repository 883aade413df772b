#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wallx/serialize.hpp"

#include <cstdio>
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

TEST_CASE("complexes and chain maps survive a round trip byte for byte") {
    FreeComplex k = koszul_complex(2, TorusPoint({Rational(1), Rational(-2)}));
    Json j = complex_to_json(k);
    FreeComplex back = complex_from_json(j, "$");
    CHECK(complexes_match(back, k));
    REQUIRE(back.support_hints.size() == 1);
    CHECK(back.support_hints[0] == k.support_hints[0]);
    CHECK(canonical_dump(complex_to_json(back)) == canonical_dump(j));

    HypersurfaceSchober s = HypersurfaceSchober::make(2, 2);
    ChainMap f = kappa(s, skyscraper(s, TorusPoint({Rational(2)})));
    Json jf = chain_map_to_json(f);
    ChainMap fb = chain_map_from_json(jf, "$");
    CHECK(maps_equal(fb, f));
    CHECK(canonical_dump(chain_map_to_json(fb)) == canonical_dump(jf));

    TwistedComplex t{k, -2};
    CHECK(twisted_from_json(twisted_to_json(t), "$") == t);
}

TEST_CASE("parsing rejects inconsistent data with a JSON path witness") {
    // a differential that does not square to zero
    Json bad = Json::object();
    bad["num_vars"] = 1;
    bad["min_deg"] = -2;
    bad["ranks"] = {1, 1, 1};
    bad["differentials"] = Json::array();
    bad["differentials"].push_back(Json::array({Json::array({"y1"})}));
    bad["differentials"].push_back(Json::array({Json::array({"y1"})}));
    CHECK(thrown([&] { complex_from_json(bad, "$"); }).find("d^2 != 0 at degree -2") !=
          std::string::npos);

    Json k = complex_to_json(koszul_complex(1, TorusPoint({Rational(2)})));

    Json wrong = k;
    wrong["differentials"] = Json::array();
    CHECK(thrown([&] { complex_from_json(wrong, "$"); }) ==
          "$.differentials: expected 1 matrices");

    Json neg = k;
    neg["ranks"] = {1, -1};
    CHECK(thrown([&] { complex_from_json(neg, "$"); }) ==
          "$.ranks[1]: expected a nonnegative integer");

    Json garbled = k;
    garbled["differentials"][0][0][0] = "y1 +";
    CHECK(thrown([&] { complex_from_json(garbled, "$"); })
              .find("$.differentials[0][0][0]:") != std::string::npos);

    Json nv = k;
    nv["num_vars"] = 0;
    CHECK(thrown([&] { complex_from_json(nv, "$"); }) == "$.num_vars: must be positive");

    Json missing = k;
    missing.erase("ranks");
    CHECK(thrown([&] { complex_from_json(missing, "$"); }) == "$: missing key 'ranks'");

    HypersurfaceSchober s = HypersurfaceSchober::make(2, 2);
    ChainMap f = id_map(koszul_complex(1, TorusPoint({Rational(2)})));
    Json jf = chain_map_to_json(f);
    jf["components"] = Json::array();
    CHECK(thrown([&] { chain_map_from_json(jf, "$"); }) == "$.components: expected 2 matrices");
}

TEST_CASE("quintuple specs round trip through their canonical dump") {
    QuintupleSpec spec;
    spec.n = 2;
    spec.k = 2;
    spec.construction = "chekanov";
    spec.object.tag = "skyscraper";
    spec.object.point = TorusPoint({Rational(2)});
    spec.twist = 0;
    spec.aut_num = LaurentPoly::constant(1, Rational(3));
    spec.aut_den = LaurentPoly::constant(1, Rational(1));

    std::string dumped = canonical_dump(spec_to_json(spec));
    CHECK(dumped ==
          "{\n"
          "  \"schober\": {\n"
          "    \"n\": 2,\n"
          "    \"framing_index\": 2\n"
          "  },\n"
          "  \"construction\": \"chekanov\",\n"
          "  \"object\": {\n"
          "    \"tag\": \"skyscraper\",\n"
          "    \"point\": [\n"
          "      \"2\"\n"
          "    ]\n"
          "  },\n"
          "  \"twist\": 0,\n"
          "  \"automorphism\": {\n"
          "    \"num\": \"3\",\n"
          "    \"den\": \"1\"\n"
          "  }\n"
          "}\n");

    QuintupleSpec back = spec_from_json(Json::parse(dumped));
    CHECK(canonical_dump(spec_to_json(back)) == dumped);
    CHECK(back.object.point == spec.object.point);

    // the structure example carries no object payload
    Json cj = Json::object();
    cj["schober"] = Json::object({{"n", 3}, {"framing_index", 1}});
    cj["construction"] = "counit";
    QuintupleSpec cu = spec_from_json(cj);
    CHECK(cu.object.tag == "structure-object");
    std::string cdump = canonical_dump(spec_to_json(cu));
    CHECK(canonical_dump(spec_to_json(spec_from_json(Json::parse(cdump)))) == cdump);

    // nested cone-of descriptor
    Json nested = Json::parse(dumped);
    nested["object"] = Json::object(
        {{"tag", "cone-of"},
         {"scalar", "1 + y1"},
         {"of", Json::object({{"tag", "structure-object"}})}});
    QuintupleSpec cone_spec = spec_from_json(nested);
    CHECK(cone_spec.object.of->tag == "structure-object");
    std::string ndump = canonical_dump(spec_to_json(cone_spec));
    CHECK(canonical_dump(spec_to_json(spec_from_json(Json::parse(ndump)))) == ndump);
}

TEST_CASE("spec parsing names the offending path") {
    Json good = Json::object();
    good["schober"] = Json::object({{"n", 2}, {"framing_index", 2}});
    good["construction"] = "chekanov";
    good["object"] = Json::object({{"tag", "skyscraper"}, {"point", Json::array({"2"})}});
    good["automorphism"] = Json::object({{"num", "3"}, {"den", "1"}});
    CHECK(spec_from_json(good).n == 2);

    Json j = good;
    j["schober"]["n"] = 1;
    CHECK(thrown([&] { spec_from_json(j); }) ==
          "$.schober.n: need at least two boundary variables");

    j = good;
    j["schober"]["framing_index"] = 5;
    CHECK(thrown([&] { spec_from_json(j); }) == "$.schober.framing_index: out of range");

    j = good;
    j["construction"] = "widget";
    CHECK(thrown([&] { spec_from_json(j); }) == "$.construction: unknown construction 'widget'");

    j = good;
    j["object"]["tag"] = "widget";
    CHECK(thrown([&] { spec_from_json(j); }) == "$.object.tag: unknown tag 'widget'");

    j = good;
    j["object"]["point"] = Json::array({"2", "3"});
    CHECK(thrown([&] { spec_from_json(j); }) == "$.object.point: expected 1 coordinates");

    j = good;
    j["automorphism"]["den"] = "0";
    CHECK(thrown([&] { spec_from_json(j); }) == "$.automorphism.den: zero denominator");

    j = good;
    j["automorphism"]["num"] = "3 +";
    CHECK(thrown([&] { spec_from_json(j); }).find("$.automorphism: parse error") !=
          std::string::npos);
}

TEST_CASE("descriptors realize the objects they name") {
    CylinderSchober cyl = CylinderSchober::make(2, 2);
    QuintupleSpec spec;
    spec.n = 2;
    spec.k = 2;
    spec.construction = "chekanov";
    spec.aut_num = LaurentPoly::constant(1, Rational(3));
    spec.aut_den = LaurentPoly::constant(1, Rational(1));

    spec.object.tag = "skyscraper";
    spec.object.point = TorusPoint({Rational(2)});
    TwistedComplex y = build_object(cyl, spec);
    CHECK(complexes_match(y.c, koszul_complex(1, spec.object.point)));
    ScaledChainMap m = build_automorphism(y, spec);
    RationalFunction rho;
    REQUIRE(scaled_is_multiplier(m, &rho));
    CHECK(rho == RationalFunction::from_poly(LaurentPoly::constant(1, Rational(3))));

    spec.object.tag = "structure-object";
    CHECK(complexes_match(build_object(cyl, spec).c, structure_object(cyl.sch).c));

    spec.object.tag = "zero";
    CHECK(build_object(cyl, spec).c.is_empty());

    spec.object.tag = "cone-of";
    spec.object.scalar = cyl.sch.sigma;
    spec.object.of = std::make_shared<ObjectSpec>();
    spec.object.of->tag = "structure-object";
    CHECK(complexes_match(build_object(cyl, spec).c,
                          i_star(cyl.sch, structure_object(cyl.sch)).c));

    spec.twist = -2;
    CHECK(build_object(cyl, spec).twist == -2);
}

TEST_CASE("whole quintuples serialize with reloadable pieces") {
    CylinderSchober cyl = CylinderSchober::make(2, 2);
    TwistedComplex y = skyscraper(cyl.sch, TorusPoint({Rational(2)}));
    ScaledChainMap aut = make_scaled(scalar_map(y.c, LaurentPoly::constant(1, Rational(3))),
                                     LaurentPoly::constant(1, Rational(2)));
    Quintuple q = chekanov(cyl, y, aut);

    Json jq = quintuple_to_json(q);
    CHECK(jq["schober"]["n"] == 2);
    CHECK(canonical_dump(Json::parse(canonical_dump(jq))) == canonical_dump(jq));
    CHECK(maps_equal(chain_map_from_json(jq["p"], "$.p"), q.p));
    CHECK(parse_poly(jq["m"]["den"].get<std::string>(), 1) == aut.den);

    MutatedQuintuple mq = mutate(q);
    Json jm = mutated_to_json(mq);
    CHECK(canonical_dump(Json::parse(canonical_dump(jm))) == canonical_dump(jm));
    CHECK(maps_equal(chain_map_from_json(jm["connecting"], "$.connecting"), mq.del_s));
    CHECK(complexes_match(complex_from_json(jm["x_sharp"]["complex"], "$"), mq.xs.c));
    CHECK(jm["y1_sharp"]["twist"] == mq.y1s.twist);
}

TEST_CASE("file helpers error with the path in the message") {
    std::string path = "/tmp/wallx_serialize_probe.json";
    std::remove(path.c_str());
    CHECK(thrown([&] { read_json_file(path); }).find("cannot open") != std::string::npos);

    write_text_file(path, "{\"a\": 1}\n");
    CHECK(read_json_file(path)["a"] == 1);

    write_text_file(path, "{oops");
    CHECK(thrown([&] { read_json_file(path); }).find("cannot parse") != std::string::npos);
    std::remove(path.c_str());
}
