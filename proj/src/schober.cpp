#include "wallx/schober.hpp"

#include <algorithm>
#include <map>

namespace wallx {

HypersurfaceSchober HypersurfaceSchober::make(int n, int k) {
    if (n < 2) throw Error("need n >= 2");
    if (k < 1 || k > n) throw Error("framing index " + std::to_string(k) + " out of range 1.." +
                                    std::to_string(n));
    HypersurfaceSchober s;
    s.n = n;
    s.k = k;
    int v = n - 1;
    s.sigma = LaurentPoly::constant(v, Rational(1));
    for (int i = 1; i <= v; ++i) s.sigma += LaurentPoly::variable(v, i);
    s.unit = (k < n) ? LaurentPoly::variable(v, k) : LaurentPoly::constant(v, Rational(1));
    s.frakm = s.sigma * s.unit.unit_inverse();
    return s;
}

LaurentPoly HypersurfaceSchober::unit_pow(int e) const { return unit.pow(e); }

PolyMatrix PantsObject::h_at(int k) const {
    int i = k - c.min_deg;
    if (i >= 0 && i < static_cast<int>(h.size())) return h[i];
    return PolyMatrix(c.rank_at(k - 1), c.rank_at(k), c.num_vars);
}

void validate_pants_object(const PantsObject& x, const LaurentPoly& sigma) {
    validate_complex(x.c);
    if (x.h.size() != x.c.ranks.size())
        throw Error("homotopy stores " + std::to_string(x.h.size()) +
                    " components for a complex of length " + std::to_string(x.c.length()));
    for (size_t i = 0; i < x.h.size(); ++i) {
        int k = x.c.min_deg + static_cast<int>(i);
        if (x.h[i].rows != x.c.rank_at(k - 1) || x.h[i].cols != x.c.rank_at(k))
            throw Error("homotopy component at degree " + std::to_string(k) + " has shape " +
                        std::to_string(x.h[i].rows) + "x" + std::to_string(x.h[i].cols) +
                        ", expected " + std::to_string(x.c.rank_at(k - 1)) + "x" +
                        std::to_string(x.c.rank_at(k)));
    }
    int lo = x.c.min_deg - 1, hi = x.c.min_deg + x.c.length() + 1;
    for (int k = lo; k <= hi; ++k) {
        PolyMatrix want = PolyMatrix::scalar(x.c.rank_at(k), sigma);
        PolyMatrix got = x.c.diff_at(k - 1) * x.h_at(k) + x.h_at(k + 1) * x.c.diff_at(k);
        if (!(got == want))
            throw Error("d h + h d != sigma at degree " + std::to_string(k));
        if (!(x.h_at(k - 1) * x.h_at(k)).is_zero())
            throw Error("h o h != 0 at degree " + std::to_string(k));
    }
}

PantsObject make_pants_object(FreeComplex c, std::vector<PolyMatrix> h, int twist,
                              const LaurentPoly& sigma) {
    PantsObject x{std::move(c), std::move(h), twist};
    validate_pants_object(x, sigma);
    return x;
}

PantsObject empty_pants_object(int num_vars, int twist) {
    return PantsObject{zero_complex(num_vars), {}, twist};
}

TwistedComplex structure_object(const HypersurfaceSchober& s, int twist) {
    return TwistedComplex{make_complex(s.num_vars(), 0, {1}, {}), twist};
}

namespace {

// Subsets of {0..v-1} of each size, in lexicographic order, plus the index of
// a given subset. Basis bookkeeping for the Koszul complex.
struct SubsetBasis {
    std::vector<std::vector<std::vector<int>>> by_size; // by_size[j] lists subsets of size j
    std::map<std::vector<int>, int> index;

    explicit SubsetBasis(int v) {
        by_size.resize(v + 1);
        std::vector<int> cur;
        build(v, 0, cur);
        for (auto& level : by_size)
            for (size_t i = 0; i < level.size(); ++i) index[level[i]] = static_cast<int>(i);
    }

    void build(int v, int start, std::vector<int>& cur) {
        by_size[cur.size()].push_back(cur);
        for (int i = start; i < v; ++i) {
            cur.push_back(i);
            build(v, i + 1, cur);
            cur.pop_back();
        }
    }
};

int sign_at(const std::vector<int>& s, int elem) {
    int before = 0;
    for (int x : s)
        if (x < elem) ++before;
    return (before % 2 == 0) ? 1 : -1;
}

} // namespace

FreeComplex koszul_complex(int num_vars, const TorusPoint& p) {
    int v = num_vars;
    if (p.num_vars() != v) throw Error("point dimension mismatch");
    if (v < 1 || v > 12) throw Error("unsupported variable count " + std::to_string(v));
    SubsetBasis basis(v);
    std::vector<int> ranks;
    for (int j = v; j >= 0; --j) ranks.push_back(static_cast<int>(basis.by_size[j].size()));
    std::vector<PolyMatrix> diffs;
    for (int j = v; j >= 1; --j) {
        const auto& src = basis.by_size[j];
        const auto& tgt = basis.by_size[j - 1];
        PolyMatrix d(static_cast<int>(tgt.size()), static_cast<int>(src.size()), v);
        for (size_t col = 0; col < src.size(); ++col) {
            const auto& S = src[col];
            for (size_t t = 0; t < S.size(); ++t) {
                std::vector<int> rest = S;
                rest.erase(rest.begin() + static_cast<long>(t));
                int row = basis.index.at(rest);
                LaurentPoly gen = LaurentPoly::variable(v, S[t] + 1) -
                                  LaurentPoly::constant(v, p.coords[S[t]]);
                int sg = (t % 2 == 0) ? 1 : -1;
                d.at(row, static_cast<int>(col)) += sg > 0 ? gen : -gen;
            }
        }
        diffs.push_back(std::move(d));
    }
    return make_complex(v, -v, std::move(ranks), std::move(diffs), {p});
}

TwistedComplex skyscraper(const HypersurfaceSchober& s, const TorusPoint& p, int twist) {
    return TwistedComplex{koszul_complex(s.num_vars(), p), twist};
}

PantsObject divisor_skyscraper(const HypersurfaceSchober& s, const TorusPoint& q, int twist) {
    if (s.sigma.evaluate(q) != 0)
        throw Error("point " + q.to_string() + " is not on the divisor");
    int v = s.num_vars();
    FreeComplex c = koszul_complex(v, q);
    SubsetBasis basis(v);
    std::vector<PolyMatrix> h;
    for (int i = 0; i < c.length(); ++i) {
        int j = v - i; // subsets of size j live in degree -j = min_deg + i
        const auto& src = basis.by_size[j];
        int rows = (j + 1 <= v) ? static_cast<int>(basis.by_size[j + 1].size()) : 0;
        PolyMatrix m(rows, static_cast<int>(src.size()), v);
        for (size_t col = 0; col < src.size(); ++col) {
            const auto& S = src[col];
            for (int elem = 0; elem < v; ++elem) {
                if (std::find(S.begin(), S.end(), elem) != S.end()) continue;
                std::vector<int> bigger = S;
                bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), elem), elem);
                int row = basis.index.at(bigger);
                m.at(row, static_cast<int>(col)) +=
                    LaurentPoly::constant(v, Rational(sign_at(S, elem)));
            }
        }
        h.push_back(std::move(m));
    }
    return make_pants_object(std::move(c), std::move(h), twist, s.sigma);
}

TwistedComplex pushforward(const PantsObject& x) { return TwistedComplex{x.c, x.twist}; }

PantsObject i_star(const HypersurfaceSchober& s, const TwistedComplex& f) {
    const FreeComplex& F = f.c;
    FreeComplex cn = cone(scalar_map(F, s.sigma));
    std::vector<PolyMatrix> h;
    for (int i = 0; i < cn.length(); ++i) {
        int k = cn.min_deg + i;
        PolyMatrix m(cn.rank_at(k - 1), cn.rank_at(k), F.num_vars);
        m.paste(PolyMatrix::identity(F.rank_at(k), F.num_vars), 0, F.rank_at(k + 1));
        h.push_back(std::move(m));
    }
    return make_pants_object(std::move(cn), std::move(h), f.twist, s.sigma);
}

PantsObject i_shriek(const HypersurfaceSchober& s, const TwistedComplex& f) {
    const FreeComplex& F = f.c;
    FreeComplex cx = shift(cone(scalar_map(F, s.sigma)), -1);
    std::vector<PolyMatrix> h;
    for (int i = 0; i < cx.length(); ++i) {
        int k = cx.min_deg + i;
        // slots (x, w) in F^k (+) F^{k-1}; h(x, w) = (-w, 0)
        PolyMatrix m(cx.rank_at(k - 1), cx.rank_at(k), F.num_vars);
        m.paste(-PolyMatrix::identity(F.rank_at(k - 1), F.num_vars), 0, F.rank_at(k));
        h.push_back(std::move(m));
    }
    return make_pants_object(std::move(cx), std::move(h), f.twist + 1, s.sigma);
}

TwistedComplex monodromy(const TwistedComplex& f, int dir) {
    if (dir != 1 && dir != -1) throw Error("monodromy direction must be +1 or -1");
    return TwistedComplex{f.c, f.twist + dir};
}

ChainMap canonical_p_psi(const HypersurfaceSchober& s, const TwistedComplex& f) {
    return scalar_map(f.c, s.sigma);
}

ChainMap frakm_map(const HypersurfaceSchober& s, const TwistedComplex& f) {
    return scalar_map(f.c, s.frakm);
}

ChainMap unit_left(const HypersurfaceSchober& s, const TwistedComplex& f) {
    return cone_inclusion(scalar_map(f.c, s.sigma));
}

ChainMap counit_left(const HypersurfaceSchober& s, const PantsObject& x) {
    const FreeComplex& X = x.c;
    FreeComplex src = cone(scalar_map(X, s.sigma));
    std::vector<PolyMatrix> comps;
    for (int i = 0; i < src.length(); ++i) {
        int k = src.min_deg + i;
        PolyMatrix m(X.rank_at(k), src.rank_at(k), X.num_vars);
        m.paste(x.h_at(k + 1), 0, 0);
        m.paste(PolyMatrix::identity(X.rank_at(k), X.num_vars), 0, X.rank_at(k + 1));
        comps.push_back(std::move(m));
    }
    return make_chain_map(std::move(src), X, std::move(comps));
}

ChainMap unit_right(const HypersurfaceSchober& s, const PantsObject& x) {
    const FreeComplex& X = x.c;
    FreeComplex tgt = shift(cone(scalar_map(X, s.sigma)), -1);
    std::vector<PolyMatrix> comps;
    for (int i = 0; i < X.length(); ++i) {
        int k = X.min_deg + i;
        PolyMatrix m(tgt.rank_at(k), X.rank_at(k), X.num_vars);
        m.paste(PolyMatrix::identity(X.rank_at(k), X.num_vars), 0, 0);
        m.paste(-x.h_at(k), X.rank_at(k), 0);
        comps.push_back(std::move(m));
    }
    return make_chain_map(X, std::move(tgt), std::move(comps));
}

ChainMap counit_right(const HypersurfaceSchober& s, const TwistedComplex& f) {
    const FreeComplex& F = f.c;
    FreeComplex src = shift(cone(scalar_map(F, s.sigma)), -1);
    std::vector<PolyMatrix> comps;
    for (int i = 0; i < src.length(); ++i) {
        int k = src.min_deg + i;
        PolyMatrix m(F.rank_at(k), src.rank_at(k), F.num_vars);
        m.paste(PolyMatrix::identity(F.rank_at(k), F.num_vars), 0, 0);
        comps.push_back(std::move(m));
    }
    return make_chain_map(std::move(src), F, std::move(comps));
}

ChainMap adjoint_transpose(const HypersurfaceSchober& s, const PantsObject& x,
                           const ChainMap& p) {
    if (!complexes_match(p.source, x.c)) throw Error("transpose source mismatch");
    const FreeComplex& Y = p.target;
    FreeComplex tgt = shift(cone(scalar_map(Y, s.sigma)), -1);
    std::vector<PolyMatrix> comps;
    for (int i = 0; i < x.c.length(); ++i) {
        int k = x.c.min_deg + i;
        PolyMatrix m(tgt.rank_at(k), x.c.rank_at(k), x.c.num_vars);
        m.paste(p.comp_at(k), 0, 0);
        m.paste(-(p.comp_at(k - 1) * x.h_at(k)), Y.rank_at(k), 0);
        comps.push_back(std::move(m));
    }
    return make_chain_map(x.c, std::move(tgt), std::move(comps));
}

ChainMap transpose_back(const HypersurfaceSchober& s, const ChainMap& p_tilde,
                        const TwistedComplex& y) {
    return compose(counit_right(s, y), p_tilde);
}

ChainMap kappa(const HypersurfaceSchober& s, const TwistedComplex& f) {
    const FreeComplex& F = f.c;
    FreeComplex src = cone(counit_right(s, f));
    std::vector<PolyMatrix> comps;
    for (int i = 0; i < src.length(); ++i) {
        int k = src.min_deg + i;
        // slots ((x, w), z) with x in F^{k+1}, w in F^k, z in F^k
        PolyMatrix m(F.rank_at(k), src.rank_at(k), F.num_vars);
        m.paste(-PolyMatrix::identity(F.rank_at(k), F.num_vars), 0, F.rank_at(k + 1));
        m.paste(PolyMatrix::scalar(F.rank_at(k), s.sigma), 0, F.rank_at(k + 1) + F.rank_at(k));
        comps.push_back(std::move(m));
    }
    return make_chain_map(std::move(src), F, std::move(comps));
}

ChainMap kappa_section(const HypersurfaceSchober& s, const TwistedComplex& f) {
    const FreeComplex& F = f.c;
    FreeComplex tgt = cone(counit_right(s, f));
    std::vector<PolyMatrix> comps;
    for (int i = 0; i < F.length(); ++i) {
        int k = F.min_deg + i;
        PolyMatrix m(tgt.rank_at(k), F.rank_at(k), F.num_vars);
        m.paste(-PolyMatrix::identity(F.rank_at(k), F.num_vars), F.rank_at(k + 1), 0);
        comps.push_back(std::move(m));
    }
    return make_chain_map(F, std::move(tgt), std::move(comps));
}

PantsObject cone_phi(const HypersurfaceSchober& s, const PantsObject& a, const PantsObject& b,
                     const ChainMap& f, int twist) {
    if (!complexes_match(f.source, a.c) || !complexes_match(f.target, b.c))
        throw Error("cone endpoints do not match the given objects");
    int lo = std::min(a.c.min_deg, b.c.min_deg) - 2;
    int hi = std::max(a.c.min_deg + a.c.length(), b.c.min_deg + b.c.length()) + 2;
    for (int k = lo; k <= hi; ++k) {
        if (!(b.h_at(k) * f.comp_at(k) == f.comp_at(k - 1) * a.h_at(k)))
            throw Error("map does not commute with the homotopies at degree " +
                        std::to_string(k));
    }
    FreeComplex cn = cone(f);
    std::vector<PolyMatrix> h;
    for (int i = 0; i < cn.length(); ++i) {
        int k = cn.min_deg + i;
        PolyMatrix m(cn.rank_at(k - 1), cn.rank_at(k), cn.num_vars);
        m.paste(-a.h_at(k + 1), 0, 0);
        m.paste(b.h_at(k), a.c.rank_at(k), a.c.rank_at(k + 1));
        h.push_back(std::move(m));
    }
    return make_pants_object(std::move(cn), std::move(h), twist, s.sigma);
}

bool is_clean(const HypersurfaceSchober& s, const TwistedComplex& f) {
    return is_exact(i_star(s, f).c);
}

CleanProbes clean_probes(const HypersurfaceSchober& s, const TwistedComplex& f) {
    CleanProbes r;
    r.via_i_star = is_exact(i_star(s, f).c);
    r.via_i_shriek = is_exact(i_shriek(s, f).c);
    r.via_p_psi = is_quasi_iso(canonical_p_psi(s, f));
    return r;
}

std::vector<SfSample> standard_samples(const HypersurfaceSchober& s) {
    int v = s.num_vars();
    std::vector<SfSample> out;
    out.push_back({"zero", TwistedComplex{zero_complex(v), 0}, std::nullopt});
    out.push_back({"O", structure_object(s), std::nullopt});
    out.push_back({"sky-ones", skyscraper(s, TorusPoint(std::vector<Rational>(v, Rational(1)))),
                   std::nullopt});
    out.push_back({"sky-halves",
                   skyscraper(s, TorusPoint(std::vector<Rational>(v, Rational(1, 2)))),
                   std::nullopt});
    auto panel = divisor_panel(v);
    int taken = 0;
    for (const auto& q : panel) {
        if (taken == 2) break;
        PantsObject x = divisor_skyscraper(s, q);
        out.push_back({"divisor-sky" + std::to_string(taken + 1), pushforward(x), x});
        ++taken;
    }
    PantsObject xo = i_star(s, structure_object(s));
    out.push_back({"restricted-O", pushforward(xo), xo});
    return out;
}

namespace {

// i^! F -> i^!(S S^l F): apply the left unit in both slots.
ChainMap sf2_composite(const HypersurfaceSchober& s, const TwistedComplex& w) {
    const FreeComplex& W = w.c;
    PantsObject xw = i_star(s, w);
    TwistedComplex d = pushforward(xw);
    FreeComplex ihW = i_shriek(s, w).c;
    FreeComplex ihD = shift(cone(scalar_map(d.c, s.sigma)), -1);
    ChainMap ul = unit_left(s, w);
    std::vector<PolyMatrix> comps;
    for (int i = 0; i < ihW.length(); ++i) {
        int k = ihW.min_deg + i;
        PolyMatrix m(ihD.rank_at(k), ihW.rank_at(k), W.num_vars);
        m.paste(ul.comp_at(k), 0, 0);
        m.paste(ul.comp_at(k - 1), d.c.rank_at(k), W.rank_at(k));
        comps.push_back(std::move(m));
    }
    ChainMap alpha = make_chain_map(ihW, ihD, std::move(comps));
    ChainMap ur = unit_right(s, xw);
    return compose(cone_inclusion(ur), alpha);
}

} // namespace

Report check_sf_axioms(const HypersurfaceSchober& s, const std::vector<SfSample>& samples) {
    Report rep;
    for (const auto& sample : samples) {
        const std::string& nm = sample.name;
        // SF1: monodromy is strictly invertible
        try {
            TwistedComplex round = monodromy(monodromy(sample.w, 1), -1);
            rep.add("SF1[" + nm + "]", round == sample.w, "T T^-1 = id");
        } catch (const Error& err) {
            rep.add("SF1[" + nm + "]", false, err.what());
        }
        // SF2: right adjoint agrees with the twisted left adjoint
        try {
            std::string witness;
            bool ok = is_quasi_iso(sf2_composite(s, sample.w), &witness);
            rep.add("SF2[" + nm + "]", ok, ok ? "composite certified" : witness);
        } catch (const Error& err) {
            rep.add("SF2[" + nm + "]", false, err.what());
        }
        // SF3: the vanishing-side twist is the double shift
        try {
            PantsObject x = sample.x ? *sample.x : i_star(s, sample.w);
            ChainMap ur = unit_right(s, x);
            FreeComplex tphi = shift(cone(ur), -1);
            bool ok = true;
            std::string witness = "rank pattern matches [-2] shift";
            for (const auto& q : probe_points(tphi)) {
                HomologyRanks ht = homology_ranks_at(tphi, q);
                HomologyRanks hx = homology_ranks_at(x.c, q);
                int lo = std::min(ht.min_deg, hx.min_deg) - 2;
                int hi = std::max(ht.min_deg + static_cast<int>(ht.ranks.size()),
                                  hx.min_deg + static_cast<int>(hx.ranks.size())) +
                         2;
                for (int k = lo; k <= hi && ok; ++k) {
                    if (ht.at(k) != hx.at(k - 2)) {
                        ok = false;
                        witness = "pattern breaks at " + q.to_string() + " degree " +
                                  std::to_string(k);
                    }
                }
                if (!ok) break;
            }
            rep.add("SF3[" + nm + "]", ok, witness);
        } catch (const Error& err) {
            rep.add("SF3[" + nm + "]", false, err.what());
        }
        // SF4: left adjoint of the shifted twist is the right adjoint
        try {
            const FreeComplex& W = sample.w.c;
            PantsObject psrc = i_star(s, TwistedComplex{shift(W, -1), sample.w.twist});
            PantsObject ptgt = i_shriek(s, sample.w);
            const FreeComplex& src = psrc.c;
            const FreeComplex& tgt = ptgt.c;
            std::vector<PolyMatrix> comps;
            for (int i = 0; i < src.length(); ++i) {
                int k = src.min_deg + i;
                PolyMatrix m(tgt.rank_at(k), src.rank_at(k), W.num_vars);
                m.paste(-PolyMatrix::identity(W.rank_at(k), W.num_vars), 0, 0);
                m.paste(PolyMatrix::identity(W.rank_at(k - 1), W.num_vars), W.rank_at(k),
                        W.rank_at(k));
                comps.push_back(std::move(m));
            }
            ChainMap phi = make_chain_map(src, tgt, comps);
            ChainMap phi_inv{tgt, src, comps};
            bool strict_iso = maps_equal(compose(phi_inv, phi), id_map(src)) &&
                              maps_equal(compose(phi, phi_inv), id_map(tgt));
            bool strict_phi = true;
            for (int k = src.min_deg - 1; k <= src.min_deg + src.length() + 1; ++k)
                if (!(ptgt.h_at(k) * phi.comp_at(k) == phi.comp_at(k - 1) * psrc.h_at(k)))
                    strict_phi = false;
            std::string witness;
            bool ok = strict_iso && strict_phi && is_quasi_iso(phi, &witness);
            std::string detail = ok ? "strict iso, certified"
                                    : (!strict_iso  ? "not a strict iso"
                                       : !strict_phi ? "does not respect the homotopies"
                                                     : witness);
            rep.add("SF4[" + nm + "]", ok, detail);
        } catch (const Error& err) {
            rep.add("SF4[" + nm + "]", false, err.what());
        }
    }
    return rep;
}

} // namespace wallx
