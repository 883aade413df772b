#include "wallx/homalg.hpp"

#include "wallx/rng.hpp"

#include <algorithm>
#include <set>

namespace wallx {

PolyMatrix::PolyMatrix(int r, int c, int nv)
    : rows(r), cols(c), num_vars(nv), e(static_cast<size_t>(r) * c, LaurentPoly(nv)) {
    if (r < 0 || c < 0) throw Error("negative matrix shape");
}

PolyMatrix PolyMatrix::identity(int n, int nv) {
    return scalar(n, LaurentPoly::constant(nv, Rational(1)));
}

PolyMatrix PolyMatrix::scalar(int n, const LaurentPoly& u) {
    PolyMatrix m(n, n, u.num_vars());
    for (int i = 0; i < n; ++i) m.at(i, i) = u;
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols != o.rows || num_vars != o.num_vars) throw Error("matrix shape mismatch in product");
    PolyMatrix r(rows, o.cols, num_vars);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const LaurentPoly& v = at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                const LaurentPoly& w = o.at(k, j);
                if (!w.is_zero()) r.at(i, j) += v * w;
            }
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows != o.rows || cols != o.cols || num_vars != o.num_vars)
        throw Error("matrix shape mismatch in sum");
    PolyMatrix r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows != o.rows || cols != o.cols || num_vars != o.num_vars)
        throw Error("matrix shape mismatch in difference");
    PolyMatrix r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r = *this;
    for (auto& v : r.e) v = -v;
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows == o.rows && cols == o.cols && num_vars == o.num_vars && e == o.e;
}

PolyMatrix PolyMatrix::scaled(const LaurentPoly& u) const {
    PolyMatrix r = *this;
    for (auto& v : r.e) v *= u;
    return r;
}

bool PolyMatrix::is_zero() const {
    for (const auto& v : e)
        if (!v.is_zero()) return false;
    return true;
}

QMatrix PolyMatrix::evaluate(const TorusPoint& p) const {
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = at(i, j).evaluate(p);
    return m;
}

PolyMatrix PolyMatrix::submatrix(int r0, int r1, int c0, int c1) const {
    if (r0 < 0 || r1 > rows || c0 < 0 || c1 > cols || r0 > r1 || c0 > c1)
        throw Error("submatrix range out of bounds");
    PolyMatrix m(r1 - r0, c1 - c0, num_vars);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) m.at(i - r0, j - c0) = at(i, j);
    return m;
}

void PolyMatrix::paste(const PolyMatrix& src, int r0, int c0) {
    if (r0 < 0 || c0 < 0 || r0 + src.rows > rows || c0 + src.cols > cols)
        throw Error("paste out of bounds");
    for (int i = 0; i < src.rows; ++i)
        for (int j = 0; j < src.cols; ++j) at(r0 + i, c0 + j) = src.at(i, j);
}

bool FreeComplex::is_empty() const {
    for (int r : ranks)
        if (r != 0) return false;
    return true;
}

int FreeComplex::rank_at(int k) const {
    int i = k - min_deg;
    if (i < 0 || i >= length()) return 0;
    return ranks[i];
}

PolyMatrix FreeComplex::diff_at(int k) const {
    int i = k - min_deg;
    if (i >= 0 && i < static_cast<int>(diffs.size())) return diffs[i];
    return PolyMatrix(rank_at(k + 1), rank_at(k), num_vars);
}

int FreeComplex::total_rank() const {
    int t = 0;
    for (int r : ranks) t += r;
    return t;
}

void validate_complex(const FreeComplex& c) {
    for (int r : c.ranks)
        if (r < 0) throw Error("negative rank");
    size_t want_diffs = c.ranks.empty() ? 0 : c.ranks.size() - 1;
    if (c.diffs.size() != want_diffs)
        throw Error("expected " + std::to_string(want_diffs) + " differentials, got " +
                    std::to_string(c.diffs.size()));
    for (size_t i = 0; i < c.diffs.size(); ++i) {
        const PolyMatrix& d = c.diffs[i];
        if (d.num_vars != c.num_vars)
            throw Error("differential at degree " + std::to_string(c.min_deg + (int)i) +
                        " lives in the wrong ring");
        if (d.rows != c.ranks[i + 1] || d.cols != c.ranks[i])
            throw Error("differential at degree " + std::to_string(c.min_deg + (int)i) +
                        " has shape " + std::to_string(d.rows) + "x" + std::to_string(d.cols) +
                        ", expected " + std::to_string(c.ranks[i + 1]) + "x" +
                        std::to_string(c.ranks[i]));
    }
    for (size_t i = 0; i + 1 < c.diffs.size(); ++i) {
        if (!(c.diffs[i + 1] * c.diffs[i]).is_zero())
            throw Error("d^2 != 0 at degree " + std::to_string(c.min_deg + (int)i));
    }
    for (const auto& p : c.support_hints)
        if (p.num_vars() != c.num_vars) throw Error("support hint dimension mismatch");
}

namespace {

std::vector<TorusPoint> merge_hints(const std::vector<TorusPoint>& a,
                                    const std::vector<TorusPoint>& b) {
    std::set<TorusPoint> s(a.begin(), a.end());
    s.insert(b.begin(), b.end());
    return {s.begin(), s.end()};
}

void trim(FreeComplex& c) {
    while (!c.ranks.empty() && c.ranks.front() == 0) {
        c.ranks.erase(c.ranks.begin());
        if (!c.diffs.empty()) c.diffs.erase(c.diffs.begin());
        ++c.min_deg;
    }
    while (!c.ranks.empty() && c.ranks.back() == 0) {
        c.ranks.pop_back();
        if (!c.diffs.empty()) c.diffs.pop_back();
    }
    if (c.ranks.empty()) {
        c.min_deg = 0;
        c.diffs.clear();
    }
}

} // namespace

FreeComplex make_complex(int num_vars, int min_deg, std::vector<int> ranks,
                         std::vector<PolyMatrix> diffs, std::vector<TorusPoint> support_hints) {
    FreeComplex c{num_vars, min_deg, std::move(ranks), std::move(diffs),
                  merge_hints(support_hints, {})};
    validate_complex(c);
    return c;
}

FreeComplex zero_complex(int num_vars) { return FreeComplex{num_vars, 0, {}, {}, {}}; }

PolyMatrix ChainMap::comp_at(int k) const {
    int i = k - source.min_deg;
    if (i >= 0 && i < static_cast<int>(comps.size())) return comps[i];
    return PolyMatrix(target.rank_at(k), source.rank_at(k), source.num_vars);
}

bool ChainMap::is_zero() const {
    for (const auto& m : comps)
        if (!m.is_zero()) return false;
    return true;
}

void validate_chain_map(const ChainMap& f) {
    if (f.source.num_vars != f.target.num_vars) throw Error("chain map across rings");
    if (f.comps.size() != f.source.ranks.size())
        throw Error("chain map stores " + std::to_string(f.comps.size()) +
                    " components for a source of length " + std::to_string(f.source.length()));
    for (size_t i = 0; i < f.comps.size(); ++i) {
        int k = f.source.min_deg + static_cast<int>(i);
        if (f.comps[i].rows != f.target.rank_at(k) || f.comps[i].cols != f.source.rank_at(k))
            throw Error("chain map component at degree " + std::to_string(k) + " has shape " +
                        std::to_string(f.comps[i].rows) + "x" + std::to_string(f.comps[i].cols) +
                        ", expected " + std::to_string(f.target.rank_at(k)) + "x" +
                        std::to_string(f.source.rank_at(k)));
        if (f.comps[i].num_vars != f.source.num_vars)
            throw Error("chain map component in the wrong ring");
    }
    int lo = std::min(f.source.min_deg, f.target.min_deg) - 1;
    int hi = std::max(f.source.min_deg + f.source.length(),
                      f.target.min_deg + f.target.length()) +
             1;
    for (int k = lo; k <= hi; ++k) {
        if (!(f.target.diff_at(k) * f.comp_at(k) == f.comp_at(k + 1) * f.source.diff_at(k)))
            throw Error("chain map does not commute with d at degree " + std::to_string(k));
    }
}

ChainMap make_chain_map(FreeComplex source, FreeComplex target, std::vector<PolyMatrix> comps) {
    ChainMap f{std::move(source), std::move(target), std::move(comps)};
    validate_chain_map(f);
    return f;
}

ChainMap id_map(const FreeComplex& c) {
    std::vector<PolyMatrix> comps;
    comps.reserve(c.ranks.size());
    for (int r : c.ranks) comps.push_back(PolyMatrix::identity(r, c.num_vars));
    return ChainMap{c, c, std::move(comps)};
}

ChainMap zero_map(const FreeComplex& source, const FreeComplex& target) {
    std::vector<PolyMatrix> comps;
    comps.reserve(source.ranks.size());
    for (int i = 0; i < source.length(); ++i) {
        int k = source.min_deg + i;
        comps.push_back(PolyMatrix(target.rank_at(k), source.rank_at(k), source.num_vars));
    }
    return ChainMap{source, target, std::move(comps)};
}

ChainMap scalar_map(const FreeComplex& c, const LaurentPoly& u) {
    std::vector<PolyMatrix> comps;
    comps.reserve(c.ranks.size());
    for (int r : c.ranks) comps.push_back(PolyMatrix::scalar(r, u));
    return ChainMap{c, c, std::move(comps)};
}

bool complexes_match(const FreeComplex& a, const FreeComplex& b) {
    if (a.num_vars != b.num_vars) return false;
    if (a.is_empty() && b.is_empty()) return true;
    int lo = std::min(a.min_deg, b.min_deg);
    int hi = std::max(a.min_deg + a.length(), b.min_deg + b.length());
    for (int k = lo; k <= hi; ++k) {
        if (a.rank_at(k) != b.rank_at(k)) return false;
        if (!(a.diff_at(k) == b.diff_at(k))) return false;
    }
    return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!complexes_match(f.target, g.source))
        throw Error("composition endpoints do not match");
    std::vector<PolyMatrix> comps;
    comps.reserve(f.source.ranks.size());
    for (int i = 0; i < f.source.length(); ++i) {
        int k = f.source.min_deg + i;
        comps.push_back(g.comp_at(k) * f.comp_at(k));
    }
    return ChainMap{f.source, g.target, std::move(comps)};
}

ChainMap add_maps(const ChainMap& f, const ChainMap& g) {
    if (!complexes_match(f.source, g.source) || !complexes_match(f.target, g.target))
        throw Error("sum of maps with different endpoints");
    std::vector<PolyMatrix> comps;
    for (int i = 0; i < f.source.length(); ++i) {
        int k = f.source.min_deg + i;
        comps.push_back(f.comp_at(k) + g.comp_at(k));
    }
    return ChainMap{f.source, f.target, std::move(comps)};
}

ChainMap scale_map(const ChainMap& f, const LaurentPoly& u) {
    ChainMap r = f;
    for (auto& m : r.comps) m = m.scaled(u);
    return r;
}

bool maps_equal(const ChainMap& f, const ChainMap& g) {
    if (!complexes_match(f.source, g.source) || !complexes_match(f.target, g.target)) return false;
    int lo = std::min(f.source.min_deg, g.source.min_deg);
    int hi = std::max(f.source.min_deg + f.source.length(),
                      g.source.min_deg + g.source.length());
    for (int k = lo; k <= hi; ++k)
        if (!(f.comp_at(k) == g.comp_at(k))) return false;
    return true;
}

FreeComplex shift(const FreeComplex& c, int j) {
    FreeComplex r = c;
    r.min_deg = c.min_deg - j;
    if (j % 2 != 0)
        for (auto& d : r.diffs) d = -d;
    return r;
}

ChainMap shift_map(const ChainMap& f, int j) {
    return ChainMap{shift(f.source, j), shift(f.target, j), f.comps};
}

FreeComplex cone(const ChainMap& f) {
    const FreeComplex& A = f.source;
    const FreeComplex& B = f.target;
    if (A.is_empty()) {
        FreeComplex r = B;
        r.support_hints = merge_hints(B.support_hints, A.support_hints);
        return r;
    }
    if (B.is_empty()) {
        FreeComplex r = shift(A, 1);
        r.support_hints = merge_hints(A.support_hints, B.support_hints);
        return r;
    }
    int lo = std::min(A.min_deg - 1, B.min_deg);
    int hi = std::max(A.max_deg() - 1, B.max_deg());
    FreeComplex r;
    r.num_vars = A.num_vars;
    r.min_deg = lo;
    for (int k = lo; k <= hi; ++k) r.ranks.push_back(A.rank_at(k + 1) + B.rank_at(k));
    for (int k = lo; k < hi; ++k) {
        PolyMatrix d(A.rank_at(k + 2) + B.rank_at(k + 1), A.rank_at(k + 1) + B.rank_at(k),
                     A.num_vars);
        d.paste(-A.diff_at(k + 1), 0, 0);
        d.paste(f.comp_at(k + 1), A.rank_at(k + 2), 0);
        d.paste(B.diff_at(k), A.rank_at(k + 2), A.rank_at(k + 1));
        r.diffs.push_back(std::move(d));
    }
    r.support_hints = merge_hints(A.support_hints, B.support_hints);
    trim(r);
    return r;
}

ChainMap cone_inclusion(const ChainMap& f) {
    FreeComplex cn = cone(f);
    const FreeComplex& B = f.target;
    std::vector<PolyMatrix> comps;
    for (int i = 0; i < B.length(); ++i) {
        int k = B.min_deg + i;
        PolyMatrix m(cn.rank_at(k), B.rank_at(k), B.num_vars);
        m.paste(PolyMatrix::identity(B.rank_at(k), B.num_vars), f.source.rank_at(k + 1), 0);
        comps.push_back(std::move(m));
    }
    return ChainMap{B, cn, std::move(comps)};
}

ChainMap cone_projection(const ChainMap& f) {
    FreeComplex cn = cone(f);
    FreeComplex tgt = shift(f.source, 1);
    std::vector<PolyMatrix> comps;
    for (int i = 0; i < cn.length(); ++i) {
        int k = cn.min_deg + i;
        PolyMatrix m(tgt.rank_at(k), cn.rank_at(k), cn.num_vars);
        m.paste(PolyMatrix::identity(f.source.rank_at(k + 1), cn.num_vars), 0, 0);
        comps.push_back(std::move(m));
    }
    return ChainMap{cn, tgt, std::move(comps)};
}

ChainMap cone_functorial(const ChainMap& fa, const ChainMap& fb, const ChainMap& u,
                         const ChainMap& v) {
    if (!maps_equal(compose(v, fa), compose(fb, u)))
        throw Error("cone comparison square does not commute");
    FreeComplex ca = cone(fa);
    FreeComplex cb = cone(fb);
    std::vector<PolyMatrix> comps;
    for (int i = 0; i < ca.length(); ++i) {
        int k = ca.min_deg + i;
        PolyMatrix m(cb.rank_at(k), ca.rank_at(k), ca.num_vars);
        m.paste(u.comp_at(k + 1), 0, 0);
        m.paste(v.comp_at(k), fb.source.rank_at(k + 1), fa.source.rank_at(k + 1));
        comps.push_back(std::move(m));
    }
    return ChainMap{ca, cb, std::move(comps)};
}

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
    if (a.num_vars != b.num_vars) throw Error("direct sum across rings");
    if (a.is_empty()) {
        FreeComplex r = b;
        r.support_hints = merge_hints(a.support_hints, b.support_hints);
        return r;
    }
    if (b.is_empty()) {
        FreeComplex r = a;
        r.support_hints = merge_hints(a.support_hints, b.support_hints);
        return r;
    }
    int lo = std::min(a.min_deg, b.min_deg);
    int hi = std::max(a.max_deg(), b.max_deg());
    FreeComplex r;
    r.num_vars = a.num_vars;
    r.min_deg = lo;
    for (int k = lo; k <= hi; ++k) r.ranks.push_back(a.rank_at(k) + b.rank_at(k));
    for (int k = lo; k < hi; ++k) {
        PolyMatrix d(r.rank_at(k + 1), r.rank_at(k), a.num_vars);
        d.paste(a.diff_at(k), 0, 0);
        d.paste(b.diff_at(k), a.rank_at(k + 1), a.rank_at(k));
        r.diffs.push_back(std::move(d));
    }
    r.support_hints = merge_hints(a.support_hints, b.support_hints);
    trim(r);
    return r;
}

std::vector<QMatrix> specialize(const FreeComplex& c, const TorusPoint& p) {
    std::vector<QMatrix> out;
    out.reserve(c.diffs.size());
    for (const auto& d : c.diffs) out.push_back(d.evaluate(p));
    return out;
}

int HomologyRanks::at(int k) const {
    int i = k - min_deg;
    if (i < 0 || i >= static_cast<int>(ranks.size())) return 0;
    return ranks[i];
}

bool HomologyRanks::all_zero() const {
    for (int r : ranks)
        if (r != 0) return false;
    return true;
}

bool HomologyRanks::operator==(const HomologyRanks& o) const {
    int lo = std::min(min_deg, o.min_deg);
    int hi = std::max(min_deg + static_cast<int>(ranks.size()),
                      o.min_deg + static_cast<int>(o.ranks.size()));
    for (int k = lo; k <= hi; ++k)
        if (at(k) != o.at(k)) return false;
    return true;
}

HomologyRanks homology_ranks_at(const FreeComplex& c, const TorusPoint& p) {
    if (p.num_vars() != c.num_vars) throw Error("probe point dimension mismatch");
    HomologyRanks h;
    h.min_deg = c.min_deg;
    if (c.ranks.empty()) return h;
    std::vector<int> dr(c.diffs.size(), 0);
    for (size_t i = 0; i < c.diffs.size(); ++i) dr[i] = rank(c.diffs[i].evaluate(p));
    for (int i = 0; i < c.length(); ++i) {
        int out = i < static_cast<int>(dr.size()) ? dr[i] : 0;
        int in = i > 0 ? dr[i - 1] : 0;
        h.ranks.push_back(c.ranks[i] - out - in);
    }
    return h;
}

std::vector<TorusPoint> divisor_panel(int num_vars) {
    int v = num_vars;
    if (v < 1) throw Error("divisor panel needs at least one variable");
    std::set<TorusPoint> pts;
    for (int j : {0, v - 1, v / 2}) {
        std::vector<Rational> c(v, Rational(1));
        c[j] = Rational(-v);
        pts.insert(TorusPoint(std::move(c)));
    }
    {
        // fractional point: all 1/2 except the last, solved so the divisor
        // equation holds
        std::vector<Rational> c(v, Rational(1, 2));
        c[v - 1] = Rational(-1) - Rational(v - 1, 2);
        pts.insert(TorusPoint(std::move(c)));
    }
    return {pts.begin(), pts.end()};
}

std::vector<TorusPoint> probe_points(const FreeComplex& c) {
    std::set<TorusPoint> pts(c.support_hints.begin(), c.support_hints.end());
    for (auto& p : divisor_panel(c.num_vars)) pts.insert(p);
    SmallRationalSampler sampler(0xC0FFEEULL * 2654435761ULL + static_cast<uint64_t>(c.num_vars));
    for (int i = 0; i < 8; ++i) pts.insert(sampler.torus_point(c.num_vars));
    return {pts.begin(), pts.end()};
}

bool is_exact(const FreeComplex& c, std::string* witness) {
    for (const auto& p : probe_points(c)) {
        HomologyRanks h = homology_ranks_at(c, p);
        if (!h.all_zero()) {
            if (witness) {
                for (size_t i = 0; i < h.ranks.size(); ++i)
                    if (h.ranks[i] != 0) {
                        *witness = "homology rank " + std::to_string(h.ranks[i]) + " at " +
                                   p.to_string() + " in degree " +
                                   std::to_string(h.min_deg + static_cast<int>(i));
                        break;
                    }
            }
            return false;
        }
    }
    return true;
}

bool is_quasi_iso(const ChainMap& f, std::string* witness) {
    return is_exact(cone(f), witness);
}

} // namespace wallx
