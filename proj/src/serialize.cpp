#include "wallx/serialize.hpp"

#include <fstream>
#include <sstream>

namespace wallx {

namespace {

const Json& need(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw Error(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw Error(path + ": missing key '" + std::string(key) + "'");
    return *it;
}

int need_int(const Json& j, const char* key, const std::string& path) {
    const Json& v = need(j, key, path);
    if (!v.is_number_integer()) throw Error(path + "." + key + ": expected an integer");
    return v.get<int>();
}

std::string need_str(const Json& j, const char* key, const std::string& path) {
    const Json& v = need(j, key, path);
    if (!v.is_string()) throw Error(path + "." + key + ": expected a string");
    return v.get<std::string>();
}

const Json& need_arr(const Json& j, const char* key, const std::string& path) {
    const Json& v = need(j, key, path);
    if (!v.is_array()) throw Error(path + "." + key + ": expected an array");
    return v;
}

} // namespace

Json matrix_to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

PolyMatrix matrix_from_json(const Json& j, int rows, int cols, int num_vars,
                            const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw Error(path + ": expected " + std::to_string(rows) + " rows");
    PolyMatrix m(rows, cols, num_vars);
    for (int r = 0; r < rows; ++r) {
        const Json& row = j[static_cast<size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw Error(path + "[" + std::to_string(r) + "]: expected " + std::to_string(cols) +
                        " entries");
        for (int c = 0; c < cols; ++c) {
            const Json& e = row[static_cast<size_t>(c)];
            if (!e.is_string())
                throw Error(path + "[" + std::to_string(r) + "][" + std::to_string(c) +
                            "]: expected a polynomial string");
            try {
                m.at(r, c) = parse_poly(e.get<std::string>(), num_vars);
            } catch (const Error& err) {
                throw Error(path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]: " +
                            err.what());
            }
        }
    }
    return m;
}

Json complex_to_json(const FreeComplex& c) {
    Json j = Json::object();
    j["num_vars"] = c.num_vars;
    j["min_deg"] = c.min_deg;
    j["ranks"] = c.ranks;
    Json diffs = Json::array();
    for (const auto& d : c.diffs) diffs.push_back(matrix_to_json(d));
    j["differentials"] = std::move(diffs);
    Json hints = Json::array();
    for (const auto& p : c.support_hints) {
        Json pt = Json::array();
        for (const auto& v : p.coords) pt.push_back(rat_to_string(v));
        hints.push_back(std::move(pt));
    }
    j["support_hints"] = std::move(hints);
    return j;
}

FreeComplex complex_from_json(const Json& j, const std::string& path) {
    int nv = need_int(j, "num_vars", path);
    if (nv < 1) throw Error(path + ".num_vars: must be positive");
    int min_deg = need_int(j, "min_deg", path);
    const Json& jr = need_arr(j, "ranks", path);
    std::vector<int> ranks;
    for (size_t i = 0; i < jr.size(); ++i) {
        if (!jr[i].is_number_integer() || jr[i].get<int>() < 0)
            throw Error(path + ".ranks[" + std::to_string(i) + "]: expected a nonnegative integer");
        ranks.push_back(jr[i].get<int>());
    }
    const Json& jd = need_arr(j, "differentials", path);
    size_t want = ranks.empty() ? 0 : ranks.size() - 1;
    if (jd.size() != want)
        throw Error(path + ".differentials: expected " + std::to_string(want) + " matrices");
    std::vector<PolyMatrix> diffs;
    for (size_t i = 0; i < jd.size(); ++i)
        diffs.push_back(matrix_from_json(jd[i], ranks[i + 1], ranks[i], nv,
                                         path + ".differentials[" + std::to_string(i) + "]"));
    std::vector<TorusPoint> hints;
    if (j.contains("support_hints")) {
        const Json& jh = need_arr(j, "support_hints", path);
        for (size_t i = 0; i < jh.size(); ++i) {
            const Json& pt = jh[i];
            std::string hp = path + ".support_hints[" + std::to_string(i) + "]";
            if (!pt.is_array() || static_cast<int>(pt.size()) != nv)
                throw Error(hp + ": expected " + std::to_string(nv) + " coordinates");
            std::vector<Rational> coords;
            for (const auto& v : pt) {
                if (!v.is_string()) throw Error(hp + ": coordinates are rational strings");
                coords.push_back(rat_from_string(v.get<std::string>()));
            }
            hints.push_back(TorusPoint(std::move(coords)));
        }
    }
    return make_complex(nv, min_deg, std::move(ranks), std::move(diffs), std::move(hints));
}

Json chain_map_to_json(const ChainMap& f) {
    Json j = Json::object();
    j["source"] = complex_to_json(f.source);
    j["target"] = complex_to_json(f.target);
    Json comps = Json::array();
    for (const auto& c : f.comps) comps.push_back(matrix_to_json(c));
    j["components"] = std::move(comps);
    return j;
}

ChainMap chain_map_from_json(const Json& j, const std::string& path) {
    FreeComplex src = complex_from_json(need(j, "source", path), path + ".source");
    FreeComplex tgt = complex_from_json(need(j, "target", path), path + ".target");
    const Json& jc = need_arr(j, "components", path);
    if (static_cast<int>(jc.size()) != src.length())
        throw Error(path + ".components: expected " + std::to_string(src.length()) + " matrices");
    std::vector<PolyMatrix> comps;
    for (int i = 0; i < src.length(); ++i) {
        int k = src.min_deg + i;
        comps.push_back(matrix_from_json(jc[static_cast<size_t>(i)], tgt.rank_at(k),
                                         src.rank_at(k), src.num_vars,
                                         path + ".components[" + std::to_string(i) + "]"));
    }
    return make_chain_map(std::move(src), std::move(tgt), std::move(comps));
}

Json twisted_to_json(const TwistedComplex& t) {
    Json j = Json::object();
    j["complex"] = complex_to_json(t.c);
    j["twist"] = t.twist;
    return j;
}

TwistedComplex twisted_from_json(const Json& j, const std::string& path) {
    FreeComplex c = complex_from_json(need(j, "complex", path), path + ".complex");
    int twist = need_int(j, "twist", path);
    return TwistedComplex{std::move(c), twist};
}

Json pants_to_json(const PantsObject& x) {
    Json j = Json::object();
    j["complex"] = complex_to_json(x.c);
    Json h = Json::array();
    for (const auto& m : x.h) h.push_back(matrix_to_json(m));
    j["homotopy"] = std::move(h);
    j["twist"] = x.twist;
    return j;
}

Json scaled_to_json(const ScaledChainMap& f) {
    Json j = Json::object();
    j["map"] = chain_map_to_json(f.map);
    j["den"] = f.den.to_string();
    return j;
}

Json quintuple_to_json(const Quintuple& q) {
    Json j = Json::object();
    j["schober"] = Json::object();
    j["schober"]["n"] = q.cyl.sch.n;
    j["schober"]["framing_index"] = q.cyl.sch.k;
    j["x"] = pants_to_json(q.x);
    j["y2"] = twisted_to_json(q.y2);
    j["p"] = chain_map_to_json(q.p);
    j["m"] = scaled_to_json(q.m);
    return j;
}

Json mutated_to_json(const MutatedQuintuple& q) {
    Json j = Json::object();
    j["schober"] = Json::object();
    j["schober"]["n"] = q.cyl.sch.n;
    j["schober"]["framing_index"] = q.cyl.sch.k;
    j["x_sharp"] = pants_to_json(q.xs);
    j["y1_sharp"] = twisted_to_json(q.y1s);
    j["y2_sharp"] = twisted_to_json(q.y2s);
    j["connecting"] = chain_map_to_json(q.del_s);
    j["trivialization"] = scaled_to_json(q.ms);
    return j;
}

namespace {

ObjectSpec object_from_json(const Json& j, int nv, const std::string& path) {
    ObjectSpec os;
    os.tag = need_str(j, "tag", path);
    if (os.tag == "zero" || os.tag == "structure-object") return os;
    if (os.tag == "skyscraper") {
        const Json& pt = need_arr(j, "point", path);
        if (static_cast<int>(pt.size()) != nv)
            throw Error(path + ".point: expected " + std::to_string(nv) + " coordinates");
        std::vector<Rational> coords;
        for (const auto& v : pt) {
            if (!v.is_string()) throw Error(path + ".point: coordinates are rational strings");
            coords.push_back(rat_from_string(v.get<std::string>()));
        }
        os.point = TorusPoint(std::move(coords));
        return os;
    }
    if (os.tag == "cone-of") {
        try {
            os.scalar = parse_poly(need_str(j, "scalar", path), nv);
        } catch (const Error& e) {
            throw Error(path + ".scalar: " + std::string(e.what()));
        }
        os.of = std::make_shared<ObjectSpec>(
            object_from_json(need(j, "of", path), nv, path + ".of"));
        return os;
    }
    throw Error(path + ".tag: unknown tag '" + os.tag + "'");
}

Json object_to_json(const ObjectSpec& os) {
    Json j = Json::object();
    j["tag"] = os.tag;
    if (os.tag == "skyscraper") {
        Json pt = Json::array();
        for (const auto& v : os.point.coords) pt.push_back(rat_to_string(v));
        j["point"] = std::move(pt);
    } else if (os.tag == "cone-of") {
        j["scalar"] = os.scalar.to_string();
        j["of"] = object_to_json(*os.of);
    }
    return j;
}

FreeComplex realize_object(const HypersurfaceSchober& s, const ObjectSpec& os) {
    if (os.tag == "zero") return zero_complex(s.num_vars());
    if (os.tag == "skyscraper") return koszul_complex(s.num_vars(), os.point);
    if (os.tag == "structure-object") return structure_object(s).c;
    if (os.tag == "cone-of") {
        FreeComplex inner = realize_object(s, *os.of);
        return cone(scalar_map(inner, os.scalar));
    }
    throw Error("unknown tag '" + os.tag + "'");
}

} // namespace

QuintupleSpec spec_from_json(const Json& j) {
    QuintupleSpec s;
    const Json& sch = need(j, "schober", "$");
    s.n = need_int(sch, "n", "$.schober");
    s.k = need_int(sch, "framing_index", "$.schober");
    if (s.n < 2) throw Error("$.schober.n: need at least two boundary variables");
    if (s.k < 1 || s.k > s.n) throw Error("$.schober.framing_index: out of range");
    s.construction = need_str(j, "construction", "$");
    if (s.construction != "chekanov" && s.construction != "clifford" &&
        s.construction != "counit")
        throw Error("$.construction: unknown construction '" + s.construction + "'");
    int nv = s.n - 1;
    s.aut_num = LaurentPoly::constant(nv, Rational(1));
    s.aut_den = LaurentPoly::constant(nv, Rational(1));
    if (s.construction == "counit") {
        s.object.tag = "structure-object";
        return s;
    }
    s.object = object_from_json(need(j, "object", "$"), nv, "$.object");
    s.twist = j.contains("twist") ? need_int(j, "twist", "$") : 0;
    const Json& aut = need(j, "automorphism", "$");
    try {
        s.aut_num = parse_poly(need_str(aut, "num", "$.automorphism"), nv);
        s.aut_den = parse_poly(need_str(aut, "den", "$.automorphism"), nv);
    } catch (const Error& e) {
        throw Error("$.automorphism: " + std::string(e.what()));
    }
    if (s.aut_den.is_zero()) throw Error("$.automorphism.den: zero denominator");
    if (s.aut_num.is_zero()) throw Error("$.automorphism.num: zero automorphism");
    return s;
}

Json spec_to_json(const QuintupleSpec& s) {
    Json j = Json::object();
    j["schober"] = Json::object();
    j["schober"]["n"] = s.n;
    j["schober"]["framing_index"] = s.k;
    j["construction"] = s.construction;
    if (s.construction == "counit") return j;
    j["object"] = object_to_json(s.object);
    j["twist"] = s.twist;
    Json aut = Json::object();
    aut["num"] = s.aut_num.to_string();
    aut["den"] = s.aut_den.to_string();
    j["automorphism"] = std::move(aut);
    return j;
}

TwistedComplex build_object(const CylinderSchober& cyl, const QuintupleSpec& s) {
    return TwistedComplex{realize_object(cyl.sch, s.object), s.twist};
}

ScaledChainMap build_automorphism(const TwistedComplex& y, const QuintupleSpec& s) {
    return make_scaled(scalar_map(y.c, s.aut_num), s.aut_den);
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const std::exception& e) {
        throw Error("cannot parse " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

} // namespace wallx
