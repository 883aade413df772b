#include "wallx/moduli.hpp"

namespace wallx {

std::string InertiaPoint::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < point.coords.size(); ++i) {
        if (i) s += ", ";
        s += rat_to_string(point.coords[i]);
    }
    s += "; " + rat_to_string(lambda) + ")";
    return s;
}

InertiaPoint make_inertia_point(TorusPoint p, Rational lambda) {
    if (lambda == 0) throw Error("monodromy scalar must be nonzero");
    return InertiaPoint{std::move(p), std::move(lambda)};
}

InertiaObject skyscraper_object(const CylinderSchober& cyl, const InertiaPoint& ip) {
    const HypersurfaceSchober& s = cyl.sch;
    if (static_cast<int>(ip.point.coords.size()) != s.num_vars())
        throw Error("point has the wrong number of coordinates");
    if (s.sigma.evaluate(ip.point) == 0)
        throw Error("point " + ip.point.to_string() + " lies on the pair-of-pants locus");
    TwistedComplex y = skyscraper(s, ip.point, 0);
    ScaledChainMap m =
        scaled_of(scalar_map(y.c, LaurentPoly::constant(s.num_vars(), ip.lambda)));
    return make_inertia_object(cyl, std::move(y), std::move(m));
}

InertiaPoint wallcross_point(const InertiaPoint& ip, int n, int k) {
    if (n < 2) throw Error("need at least two boundary variables");
    if (k < 1 || k > n) throw Error("framing index out of range");
    if (static_cast<int>(ip.point.coords.size()) != n - 1)
        throw Error("point has the wrong number of coordinates");
    Rational sigma(1);
    for (const Rational& c : ip.point.coords) sigma += c;
    if (sigma == 0)
        throw Error("point " + ip.point.to_string() + " lies on the pair-of-pants locus");
    Rational u = (k < n) ? ip.point.coords[static_cast<size_t>(k - 1)] : Rational(1);
    Rational lam = sigma / (u * ip.lambda);
    return InertiaPoint{ip.point, lam};
}

std::vector<std::string> BirationalMap::component_lines() const {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        out.push_back("y" + std::to_string(i + 1) + " -> " + comps[static_cast<size_t>(i)].to_string());
    return out;
}

BirationalMap wallcross_map(int n, int k) {
    if (n < 2) throw Error("need at least two boundary variables");
    if (k < 1 || k > n) throw Error("framing index out of range");
    BirationalMap bm;
    bm.n = n;
    bm.k = k;
    for (int i = 1; i < n; ++i)
        bm.comps.push_back(RationalFunction::from_poly(LaurentPoly::variable(n, i)));
    LaurentPoly sigma = LaurentPoly::constant(n, Rational(1));
    for (int i = 1; i < n; ++i) sigma = sigma + LaurentPoly::variable(n, i);
    LaurentPoly den = LaurentPoly::variable(n, n);
    if (k < n) den = den * LaurentPoly::variable(n, k);
    bm.comps.push_back(RationalFunction(sigma, den));
    return bm;
}

std::vector<Rational> apply_map(const BirationalMap& bm, const std::vector<Rational>& coords) {
    if (static_cast<int>(coords.size()) != bm.n)
        throw Error("expected " + std::to_string(bm.n) + " coordinates");
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] == 0)
            throw Error("coordinate y" + std::to_string(i + 1) + " vanishes: off the torus");
    TorusPoint p(coords);
    std::vector<Rational> out;
    for (int i = 0; i < bm.n; ++i) {
        const RationalFunction& rf = bm.comps[static_cast<size_t>(i)];
        Rational dv = rf.den.evaluate(p);
        if (dv == 0)
            throw Error("component y" + std::to_string(i + 1) +
                        ": denominator vanishes at the point");
        Rational v = rf.num.evaluate(p) / dv;
        if (v == 0)
            throw Error("component y" + std::to_string(i + 1) +
                        ": the image leaves the torus");
        out.push_back(v);
    }
    return out;
}

InertiaPoint categorical_wallcross(const CylinderSchober& cyl, const InertiaPoint& ip) {
    InertiaObject obj = skyscraper_object(cyl, ip);
    Report rep = verify_corollary(cyl, obj);
    if (!rep.all_pass()) {
        for (const auto& l : rep.lines)
            if (!l.pass) throw Error("categorical pipeline failed: " + l.name + ": " + l.witness);
    }
    MutatedQuintuple crossed = mutate(chekanov(cyl, obj));
    RationalFunction factor = extract_monodromy_factor(crossed);
    Rational dv = factor.den.evaluate(ip.point);
    if (dv == 0) throw Error("monodromy factor undefined at the point");
    Rational lam = factor.num.evaluate(ip.point) / dv;
    if (lam == 0) throw Error("monodromy factor vanishes at the point");
    return InertiaPoint{ip.point, lam};
}

CompareOutcome compare_suite(int n, int k, int trials, std::uint64_t seed) {
    if (n < 2) throw Error("need at least two boundary variables");
    if (k < 1 || k > n) throw Error("framing index out of range");
    CylinderSchober cyl = CylinderSchober::make(n, k);
    SmallRationalSampler rng(seed);
    CompareOutcome out;
    out.trials = trials;
    for (int t = 0; t < trials; ++t) {
        TorusPoint p = rng.torus_point(n - 1);
        Rational sigma(1);
        for (const Rational& c : p.coords) sigma += c;
        while (sigma == 0) {
            p = rng.torus_point(n - 1);
            sigma = 1;
            for (const Rational& c : p.coords) sigma += c;
        }
        InertiaPoint ip = make_inertia_point(p, rng.nonzero_rational());
        std::string name = "trial-" + std::to_string(t);
        try {
            InertiaPoint birational = wallcross_point(ip, n, k);
            InertiaPoint categorical = categorical_wallcross(cyl, ip);
            bool ok = birational.lambda == categorical.lambda;
            out.report.add(name, ok,
                           ip.to_string() + " -> " + categorical.to_string() +
                               (ok ? "" : ", formula gives " + birational.to_string()));
            if (ok) ++out.passes;
        } catch (const Error& e) {
            out.report.add(name, false, e.what());
        }
    }
    return out;
}

} // namespace wallx
