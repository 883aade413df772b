#pragma once

#include "wallx/moduli.hpp"

#include <json.hpp>

#include <memory>
#include <string>

namespace wallx {

using Json = nlohmann::ordered_json;

// Emitters produce canonical key order and canonical polynomial strings, so
// a parse/emit cycle is byte-stable.
Json matrix_to_json(const PolyMatrix& m);
Json complex_to_json(const FreeComplex& c);
Json chain_map_to_json(const ChainMap& f);
Json twisted_to_json(const TwistedComplex& t);
Json pants_to_json(const PantsObject& x);
Json scaled_to_json(const ScaledChainMap& f);
Json quintuple_to_json(const Quintuple& q);
Json mutated_to_json(const MutatedQuintuple& q);

PolyMatrix matrix_from_json(const Json& j, int rows, int cols, int num_vars,
                            const std::string& path);
FreeComplex complex_from_json(const Json& j, const std::string& path);
ChainMap chain_map_from_json(const Json& j, const std::string& path);
TwistedComplex twisted_from_json(const Json& j, const std::string& path);

// Object descriptors form a tagged union over the constructors of the
// supported class: zero, skyscraper, structure-object, cone-of.
struct ObjectSpec {
    std::string tag;
    TorusPoint point{std::vector<Rational>{Rational(1)}}; // skyscraper
    LaurentPoly scalar;                                   // cone-of
    std::shared_ptr<ObjectSpec> of;                       // cone-of
};

struct QuintupleSpec {
    int n = 2;
    int k = 2;
    std::string construction; // chekanov | clifford | counit
    ObjectSpec object;
    int twist = 0;
    LaurentPoly aut_num;
    LaurentPoly aut_den;
};

QuintupleSpec spec_from_json(const Json& j);
Json spec_to_json(const QuintupleSpec& s);

// Realize the described object and automorphism over the given cylinder.
TwistedComplex build_object(const CylinderSchober& cyl, const QuintupleSpec& s);
ScaledChainMap build_automorphism(const TwistedComplex& y, const QuintupleSpec& s);

std::string canonical_dump(const Json& j);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace wallx
