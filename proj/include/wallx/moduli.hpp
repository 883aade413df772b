#pragma once

#include "wallx/report.hpp"
#include "wallx/rng.hpp"
#include "wallx/sections.hpp"

#include <string>
#include <vector>

namespace wallx {

// A point of the rank-one inertia moduli: a torus point together with a
// nonzero monodromy scalar along the boundary circle.
struct InertiaPoint {
    TorusPoint point;
    Rational lambda;

    std::string to_string() const;
};

InertiaPoint make_inertia_point(TorusPoint p, Rational lambda);

// Skyscraper at the point, twist zero, automorphism lambda * id. Errors when
// the point lies on the pair-of-pants locus (the object would not be clean).
InertiaObject skyscraper_object(const CylinderSchober& cyl, const InertiaPoint& ip);

// The birational wall-crossing formula on the point side, framing index k.
InertiaPoint wallcross_point(const InertiaPoint& ip, int n, int k);

// The same formula packaged as a rational self-map of n-space, coordinates
// y1 .. y(n-1) for the torus point and yn for the monodromy scalar.
struct BirationalMap {
    int n = 0;
    int k = 0;
    std::vector<RationalFunction> comps;

    std::vector<std::string> component_lines() const; // "y1 -> y1" and friends
};

BirationalMap wallcross_map(int n, int k);

// Evaluate the map at a point of n-space; errors name the offending
// component when a denominator vanishes or the image leaves the torus.
std::vector<Rational> apply_map(const BirationalMap& bm, const std::vector<Rational>& coords);

// Run the categorical pipeline at the point: skyscraper, wall-crossing
// mutation, monodromy factor extraction. Errors if any check fails.
InertiaPoint categorical_wallcross(const CylinderSchober& cyl, const InertiaPoint& ip);

struct CompareOutcome {
    int trials = 0;
    int passes = 0;
    Report report;
};

// Randomized agreement suite between the birational formula and the
// categorical pipeline; deterministic for a fixed seed.
CompareOutcome compare_suite(int n, int k, int trials, std::uint64_t seed);

} // namespace wallx
