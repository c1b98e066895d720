#include "rho/cyclic.hpp"

#include <algorithm>
#include <stdexcept>

#include "rho/errors.hpp"

namespace rho {

Tuple face(const Group& g, int i, const Tuple& c) {
    int n = static_cast<int>(c.size()) - 1;
    if (n < 1) throw std::out_of_range("faces need degree >= 1");
    if (i < 0 || i > n) throw std::out_of_range("face index");
    Tuple out;
    out.reserve(c.size() - 1);
    if (i == n) {
        out.push_back(g.mul(c[n], c[0]));
        for (int k = 1; k < n; ++k) out.push_back(c[k]);
    } else {
        for (int k = 0; k < i; ++k) out.push_back(c[k]);
        out.push_back(g.mul(c[i], c[i + 1]));
        for (int k = i + 2; k <= n; ++k) out.push_back(c[k]);
    }
    return out;
}

Tuple cyclic_t(const Tuple& c) {
    Tuple out;
    out.reserve(c.size());
    out.push_back(c.back());
    for (size_t k = 0; k + 1 < c.size(); ++k) out.push_back(c[k]);
    return out;
}

Elt tuple_product(const Group& g, const Tuple& c) {
    Elt p = g.id();
    for (const auto& x : c) p = g.mul(p, x);
    return p;
}

int tuple_length(const Group& g, const Tuple& c) {
    int l = 0;
    for (const auto& x : c) l += g.length(x);
    return l;
}

bool tuple_degenerate(const Group& g, const Tuple& c) {
    for (size_t k = 1; k < c.size(); ++k)
        if (g.is_id(c[k])) return true;
    return false;
}

void CyclicChain::add(const Group& g, const Tuple& t, const CRat& c) {
    if (c.is_zero() || tuple_degenerate(g, t)) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
        terms.emplace(t, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

CyclicChain hochschild_b(const Group& g, const CyclicChain& c) {
    CyclicChain out;
    out.degree = c.degree - 1;
    out.cls = c.cls;
    for (auto& [t, coef] : c.terms) {
        int n = static_cast<int>(t.size()) - 1;
        if (n == 0) continue;  // b vanishes on degree 0
        for (int i = 0; i <= n; ++i)
            out.add(g, face(g, i, t), (i % 2) ? -coef : coef);
    }
    return out;
}

CyclicChain connes_B(const Group& g, const CyclicChain& c) {
    CyclicChain out;
    out.degree = c.degree + 1;
    out.cls = c.cls;
    for (auto& [t, coef] : c.terms) {
        int n = static_cast<int>(t.size()) - 1;
        Tuple rot = t;
        CRat sign(1);
        CRat tsign((n % 2) ? -1 : 1);  // t carries (-1)^n per rotation
        for (int i = 0; i <= n; ++i) {
            Tuple s;  // extra degeneracy: e up front
            s.reserve(rot.size() + 1);
            s.push_back(g.id());
            for (auto& x : rot) s.push_back(x);
            out.add(g, s, coef * sign);
            rot = cyclic_t(rot);
            sign = sign * tsign;
        }
    }
    return out;
}

namespace {

void enumerate_tuples(const Group& g, int degree, int radius, TupleTrunc mode,
                      const Elt* cls, std::vector<Tuple>& out) {
    bool finite = g.is_finite();
    if (!finite && radius < 0)
        throw std::invalid_argument("infinite group needs a truncation radius");
    std::vector<Elt> ball = finite && radius < 0 ? g.elements() : g.ball(radius);
    std::vector<Elt> nonid;
    for (const auto& x : ball)
        if (!g.is_id(x)) nonid.push_back(x);

    bool budgeted = !finite && mode == TupleTrunc::TotalLength;
    Tuple cur(degree + 1);
    // depth-first over slots in shortlex order; deterministic
    auto rec = [&](auto&& self, int slot, int budget) -> void {
        if (slot == degree + 1) {
            if (cls && !conjugate_in(g, tuple_product(g, cur), *cls)) return;
            out.push_back(cur);
            return;
        }
        const auto& pool = slot == 0 ? ball : nonid;
        for (const auto& x : pool) {
            int l = g.length(x);
            if (budgeted && l > budget) continue;
            cur[slot] = x;
            self(self, slot + 1, budgeted ? budget - l : budget);
        }
    };
    rec(rec, 0, radius);
}

int slice_rank(const SparseMat<CRat>& m) {
    // group-complex differentials have real integer entries; fall back to
    // a Gaussian-rational echelon otherwise
    std::vector<SVec<int>> icols(m.cols.size());
    bool integral = true;
    for (size_t j = 0; j < m.cols.size() && integral; ++j) {
        for (auto& [i, c] : m.cols[j]) {
            if (c.im != 0 || denominator(c.re) != 1 ||
                numerator(c.re) > 1000000 || numerator(c.re) < -1000000) {
                integral = false;
                break;
            }
            icols[j].push_back({i, static_cast<int>(numerator(c.re))});
        }
    }
    if (integral) return rank_int_matrix(m.rows, icols);
    Echelon<CRat> e;
    for (auto& c : m.cols) e.insert(c);
    return e.rank();
}

}  // namespace

TupleBasis::TupleBasis(const Group& g, int degree, int radius, TupleTrunc mode,
                       const Elt* cls) {
    enumerate_tuples(g, degree, radius, mode, cls, basis_);
    for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
}

int TupleBasis::index_of(const Tuple& t) const {
    auto it = index_.find(t);
    return it == index_.end() ? -1 : it->second;
}

SVec<CRat> TupleBasis::coords(const Group& g, const CyclicChain& c) const {
    SVec<CRat> out;
    for (auto& [t, coef] : c.terms) {
        int i = index_of(t);
        if (i < 0) throw TruncationOverflow("chain tuple outside the enumerated basis");
        out.emplace_back(i, coef);
    }
    svec_normalize(out);
    return out;
}

void ChainComplexSlice::validate() const {
    for (size_t k = 2; k < d.size(); ++k) {
        for (const auto& col : d[k].cols) {
            if (!d[k - 1].apply(col).empty())
                throw IdentityFailure(label + ": d.d != 0 at degree " + std::to_string(k));
        }
    }
}

HomologyReport homology(const ChainComplexSlice& s) {
    s.validate();
    HomologyReport rep;
    rep.label = s.label;
    int D = s.top_degree();
    std::vector<int> ranks(D + 2, 0);
    for (int k = 1; k <= D; ++k) ranks[k] = slice_rank(s.d[k]);
    for (int n = 0; n < D; ++n) rep.dims.push_back(s.dims[n] - ranks[n] - ranks[n + 1]);
    return rep;
}

namespace {

struct DegreeBases {
    std::vector<TupleBasis> c;  // degree 0..D
};

DegreeBases chain_bases(const Group& g, const Elt* x, int D, int radius) {
    DegreeBases out;
    for (int n = 0; n <= D; ++n)
        out.c.emplace_back(g, n, radius, TupleTrunc::TotalLength, x);
    return out;
}

SparseMat<CRat> b_matrix(const Group& g, const TupleBasis& from, const TupleBasis& to) {
    SparseMat<CRat> m;
    m.rows = to.dim();
    m.cols.resize(from.dim());
    for (int j = 0; j < from.dim(); ++j) {
        CyclicChain ch;
        ch.degree = static_cast<int>(from.at(j).size()) - 1;
        ch.add(g, from.at(j), CRat(1));
        m.cols[j] = to.coords(g, hochschild_b(g, ch));
    }
    return m;
}

SparseMat<CRat> B_matrix(const Group& g, const TupleBasis& from, const TupleBasis& to) {
    SparseMat<CRat> m;
    m.rows = to.dim();
    m.cols.resize(from.dim());
    for (int j = 0; j < from.dim(); ++j) {
        CyclicChain ch;
        ch.degree = static_cast<int>(from.at(j).size()) - 1;
        ch.add(g, from.at(j), CRat(1));
        m.cols[j] = to.coords(g, connes_B(g, ch));
    }
    return m;
}

}  // namespace

ChainComplexSlice hochschild_slice(const Group& g, const Elt* x, int D, int radius) {
    DegreeBases bases = chain_bases(g, x, D, radius);
    ChainComplexSlice s;
    s.label = "hochschild";
    s.d.resize(D + 1);
    for (int n = 0; n <= D; ++n) {
        s.dims.push_back(bases.c[n].dim());
        if (n >= 1) s.d[n] = b_matrix(g, bases.c[n], bases.c[n - 1]);
    }
    s.validate();
    return s;
}

ChainComplexSlice cyclic_total_slice(const Group& g, const Elt* x, int D, int radius) {
    DegreeBases bases = chain_bases(g, x, D, radius);
    // Tot_k = C_k + C_{k-2} + ...; block i holds degree k - 2i
    auto block_offsets = [&](int k) {
        std::vector<int> off;
        int total = 0;
        for (int d = k; d >= 0; d -= 2) {
            off.push_back(total);
            total += bases.c[d].dim();
        }
        off.push_back(total);  // sentinel: Tot_k dimension
        return off;
    };
    ChainComplexSlice s;
    s.label = "cyclic-total";
    s.d.resize(D + 1);
    for (int k = 0; k <= D; ++k) {
        auto off_k = block_offsets(k);
        s.dims.push_back(off_k.back());
        if (k == 0) continue;
        auto off_prev = block_offsets(k - 1);
        SparseMat<CRat> m;
        m.rows = off_prev.back();
        m.cols.resize(off_k.back());
        int nblocks = static_cast<int>(off_k.size()) - 1;
        for (int i = 0; i < nblocks; ++i) {
            int deg = k - 2 * i;
            const TupleBasis& from = bases.c[deg];
            for (int j = 0; j < from.dim(); ++j) {
                CyclicChain ch;
                ch.degree = deg;
                ch.add(g, from.at(j), CRat(1));
                SVec<CRat>& col = m.cols[off_k[i] + j];
                if (deg >= 1) {
                    // b lands in block i of Tot_{k-1} (degree k-1-2i)
                    for (auto& [r, c] : bases.c[deg - 1].coords(g, hochschild_b(g, ch)))
                        col.emplace_back(off_prev[i] + r, c);
                }
                if (i >= 1) {
                    // B raises degree: block i-1 of Tot_{k-1}
                    for (auto& [r, c] : bases.c[deg + 1].coords(g, connes_B(g, ch)))
                        col.emplace_back(off_prev[i - 1] + r, c);
                }
                svec_normalize(col);
            }
        }
        s.d[k] = std::move(m);
    }
    s.validate();
    return s;
}

ChainComplexSlice bar_slice(const Group& g, int D, int radius) {
    bool finite = g.is_finite();
    if (!finite && radius < 0)
        throw std::invalid_argument("infinite group needs a truncation radius");
    std::vector<Elt> pool;
    for (const auto& x : finite && radius < 0 ? g.elements() : g.ball(radius))
        if (!g.is_id(x)) pool.push_back(x);

    bool budgeted = !finite;
    std::vector<std::vector<Tuple>> basis(D + 1);
    basis[0].push_back({});
    Tuple cur;
    auto rec = [&](auto&& self, int budget) -> void {
        int k = static_cast<int>(cur.size());
        if (k > 0) basis[k].push_back(cur);
        if (k == D) return;
        for (const auto& x : pool) {
            int l = g.length(x);
            if (budgeted && l > budget) continue;
            cur.push_back(x);
            self(self, budgeted ? budget - l : budget);
            cur.pop_back();
        }
    };
    rec(rec, radius);

    std::vector<std::map<Tuple, int>> index(D + 1);
    for (int k = 0; k <= D; ++k)
        for (size_t i = 0; i < basis[k].size(); ++i)
            index[k][basis[k][i]] = static_cast<int>(i);

    ChainComplexSlice s;
    s.label = "bar";
    s.d.resize(D + 1);
    for (int k = 0; k <= D; ++k) s.dims.push_back(static_cast<int>(basis[k].size()));
    for (int k = 1; k <= D; ++k) {
        SparseMat<CRat> m;
        m.rows = s.dims[k - 1];
        m.cols.resize(s.dims[k]);
        for (int j = 0; j < s.dims[k]; ++j) {
            const Tuple& t = basis[k][j];
            SVec<CRat>& col = m.cols[j];
            auto emit = [&](const Tuple& u, int sgn) {
                auto it = index[k - 1].find(u);
                if (it != index[k - 1].end()) col.emplace_back(it->second, CRat(sgn));
            };
            // drop-first, inner merges (skip ones collapsing to e), drop-last
            emit(Tuple(t.begin() + 1, t.end()), 1);
            for (int i = 1; i < k; ++i) {
                Elt merged = g.mul(t[i - 1], t[i]);
                if (g.is_id(merged)) continue;
                Tuple u;
                u.reserve(k - 1);
                for (int a = 0; a < i - 1; ++a) u.push_back(t[a]);
                u.push_back(merged);
                for (int a = i + 1; a < k; ++a) u.push_back(t[a]);
                emit(u, (i % 2) ? -1 : 1);
            }
            emit(Tuple(t.begin(), t.end() - 1), (k % 2) ? -1 : 1);
            svec_normalize(col);
        }
        s.d[k] = std::move(m);
    }
    s.validate();
    return s;
}

namespace {

std::vector<int> homology_dims(const ChainComplexSlice& s, int D) {
    HomologyReport rep = homology(s);
    rep.dims.resize(D + 1, 0);
    return rep.dims;
}

// sweep radii for infinite groups until two consecutive agree
HomologyReport swept(const Group& g, const Elt* x, int D, int r0, int rmax,
                     const std::function<ChainComplexSlice(int)>& build,
                     const std::string& label) {
    HomologyReport rep;
    rep.label = label;
    if (x) rep.cls = *x;
    if (g.is_finite()) {
        rep.dims = homology_dims(build(-1), D);
        rep.radius = -1;
        rep.stabilized = true;
        return rep;
    }
    std::vector<int> prev = homology_dims(build(r0), D);
    for (int r = r0 + 1; r <= rmax; ++r) {
        std::vector<int> cur = homology_dims(build(r), D);
        if (cur == prev) {
            rep.dims = cur;
            rep.radius = r;
            rep.stabilized = true;
            return rep;
        }
        prev = std::move(cur);
    }
    rep.dims = prev;
    rep.radius = rmax;
    rep.stabilized = false;
    return rep;
}

}  // namespace

HomologyReport hochschild_homology(const Group& g, const Elt* x, int D, int r0, int rmax) {
    return swept(g, x, D, r0, rmax,
                 [&](int r) { return hochschild_slice(g, x, D + 1, r); }, "hochschild");
}

HomologyReport cyclic_homology(const Group& g, const Elt* x, int D, int r0, int rmax) {
    return swept(g, x, D, r0, rmax,
                 [&](int r) { return cyclic_total_slice(g, x, D + 1, r); }, "cyclic-total");
}

HomologyReport bar_homology(const Group& g, int D, int r0, int rmax) {
    return swept(g, nullptr, D, r0, rmax, [&](int r) { return bar_slice(g, D + 1, r); },
                 "bar");
}

PeriodicityMap periodicity_S(const Group& g, const Elt* x, int n, int radius) {
    if (n < 2) throw std::invalid_argument("periodicity needs degree >= 2");
    ChainComplexSlice s = cyclic_total_slice(g, x, n + 1, radius);

    // homology class machinery at a fixed degree: boundaries echelon plus
    // tracked representatives
    auto boundary_ech = [&](int k) {
        Echelon<CRat> e;
        if (k + 1 <= s.top_degree())
            for (const auto& col : s.d[k + 1].cols) e.insert(col);
        return e;
    };
    auto class_reps = [&](int k, const Echelon<CRat>& bnd) {
        std::vector<SVec<CRat>> cycles;
        if (k == 0) {
            for (int i = 0; i < s.dims[0]; ++i) cycles.push_back({{i, CRat(1)}});
        } else {
            cycles = kernel_basis(s.d[k]);
        }
        std::vector<SVec<CRat>> reps;
        Echelon<CRat> quot;
        for (auto& z : cycles) {
            SVec<CRat> r = z;
            bnd.reduce_full(r);
            if (quot.insert(r)) reps.push_back(std::move(r));
        }
        return reps;
    };

    Echelon<CRat> bnd_n = boundary_ech(n), bnd_m = boundary_ech(n - 2);
    std::vector<SVec<CRat>> reps_n = class_reps(n, bnd_n);
    std::vector<SVec<CRat>> reps_m = class_reps(n - 2, bnd_m);

    PeriodicityMap out;
    out.from_dim = static_cast<int>(reps_n.size());
    out.to_dim = static_cast<int>(reps_m.size());
    out.matrix.rows = out.to_dim;
    out.matrix.cols.resize(out.from_dim);

    // dropping the top block C_n of Tot_n leaves Tot_{n-2} coordinates;
    // the block size is Tot_n - Tot_{n-2}
    int shift = s.dims[n] - s.dims[n - 2];

    SparseMat<CRat> solve_mat;
    solve_mat.rows = s.dims[n - 2];
    for (auto& r : reps_m) solve_mat.cols.push_back(r);

    for (int j = 0; j < out.from_dim; ++j) {
        SVec<CRat> dropped;
        for (auto& [i, c] : reps_n[j])
            if (i >= shift) dropped.emplace_back(i - shift, c);
        bnd_m.reduce_full(dropped);
        SVec<CRat> coeffs;
        if (!solve(solve_mat, dropped, coeffs))
            throw IdentityFailure("periodicity image escapes the target homology");
        out.matrix.cols[j] = std::move(coeffs);
    }
    Echelon<CRat> e;
    for (auto& c : out.matrix.cols) e.insert(c);
    out.rank = e.rank();
    return out;
}

LocalizedTransfer::LocalizedTransfer(const Group& g, const Elt& x, int search_radius)
    : g_(g), x_(x) {
    std::vector<Elt> pool =
        g.is_finite() ? g.elements() : g.ball(search_radius + g.length(x));
    std::sort(pool.begin(), pool.end(),
              [&](const Elt& a, const Elt& b) { return g.shortlex_less(a, b); });
    for (const auto& y : pool) {
        Elt m = g.conj(g.inv(y), x);  // y m y^{-1} = x <=> m = y^{-1} x y
        if (!anchor_.count(m)) anchor_[m] = y;
    }
}

const Elt& LocalizedTransfer::conjugator_to_x(const Elt& m) const {
    auto it = anchor_.find(m);
    if (it == anchor_.end())
        throw TruncationOverflow("missing conjugator: enlarge the search radius");
    return it->second;
}

std::vector<Elt> LocalizedTransfer::tuple_conjugators(const Tuple& t) const {
    int n = static_cast<int>(t.size()) - 1;
    // y_i conjugates G_i = g_{i+1}..g_n g_0..g_i to x
    std::vector<Elt> prefix(n + 2), suffix(n + 2);
    prefix[0] = g_.id();
    for (int i = 0; i <= n; ++i) prefix[i + 1] = g_.mul(prefix[i], t[i]);
    suffix[n + 1] = g_.id();
    for (int i = n; i >= 0; --i) suffix[i] = g_.mul(t[i], suffix[i + 1]);
    std::vector<Elt> y(n + 1);
    for (int i = 0; i <= n; ++i)
        y[i] = conjugator_to_x(g_.mul(suffix[i + 1], prefix[i + 1]));
    return y;
}

Tuple LocalizedTransfer::rho(const Tuple& t) const {
    int n = static_cast<int>(t.size()) - 1;
    std::vector<Elt> y = tuple_conjugators(t);
    Tuple out(n + 1);
    out[0] = g_.mul(y[n], g_.mul(t[0], g_.inv(y[0])));
    for (int i = 1; i <= n; ++i) out[i] = g_.mul(y[i - 1], g_.mul(t[i], g_.inv(y[i])));
    return out;
}

bool LocalizedTransfer::in_centralizer_tuple(const Tuple& t) const {
    for (const auto& s : t)
        if (g_.mul(s, x_) != g_.mul(x_, s)) return false;
    return true;
}

CyclicChain LocalizedTransfer::rho(const Group& g, const CyclicChain& c) const {
    CyclicChain out;
    out.degree = c.degree;
    out.cls = c.cls;
    for (auto& [t, coef] : c.terms) out.add(g, rho(t), coef);
    return out;
}

CyclicChain LocalizedTransfer::h_term(int j, const Tuple& t) const {
    int n = static_cast<int>(t.size()) - 1;
    if (j < 0 || j > n) throw std::out_of_range("homotopy index");
    std::vector<Elt> y = tuple_conjugators(t);
    Tuple out;
    out.reserve(n + 2);
    out.push_back(g_.mul(t[0], g_.inv(y[0])));
    for (int i = 1; i <= j; ++i)
        out.push_back(g_.mul(y[i - 1], g_.mul(t[i], g_.inv(y[i]))));
    out.push_back(y[j]);
    for (int i = j + 1; i <= n; ++i) out.push_back(t[i]);
    CyclicChain ch;
    ch.degree = n + 1;
    ch.add(g_, out, CRat(1));
    return ch;
}

CyclicChain LocalizedTransfer::homotopy_H(const CyclicChain& c) const {
    CyclicChain out;
    out.degree = c.degree + 1;
    out.cls = c.cls;
    for (auto& [t, coef] : c.terms) {
        int n = static_cast<int>(t.size()) - 1;
        for (int j = 0; j <= n; ++j) {
            CyclicChain h = h_term(j, t);
            CRat sgn((j % 2) ? 1 : -1);  // H = sum (-1)^{j+1} h_j
            for (auto& [u, cu] : h.terms) out.add(g_, u, coef * cu * sgn);
        }
    }
    return out;
}

bool polynomial_growth_bound(const Group& g, int degree, int radius,
                             const std::function<CRat(const Tuple&)>& f, int N,
                             const Rat& C) {
    std::vector<Tuple> tuples;
    enumerate_tuples(g, degree, radius, TupleTrunc::PerSlotBall, nullptr, tuples);
    for (const auto& t : tuples) {
        Rat prod = 1;
        for (const auto& x : t) prod *= g.length(x);
        Rat base = 1 + prod;
        Rat bound = C;
        for (int i = 0; i < N; ++i) bound *= base;
        CRat v = f(t);
        if (v.re * v.re + v.im * v.im > bound * bound) return false;
    }
    return true;
}

namespace {

// order of x, or -1 when infinite
int element_order(const Group& g, const Elt& x) {
    if (g.is_finite()) {
        int k = 1;
        Elt cur = x;
        while (!g.is_id(cur)) {
            cur = g.mul(cur, x);
            ++k;
        }
        return k;
    }
    return g.is_id(x) ? 1 : -1;
}

// Gamma_x / <x> as a finite group for the formula side; throws when the
// quotient has no finite model here
std::unique_ptr<Group> centralizer_quotient(const Group& g, const Elt& x) {
    if (g.is_finite()) {
        Subgroup cent = centralizer_group(g, x);
        return std::move(quotient_by_central_cyclic(g, cent, x).table);
    }
    if (g.kind() == "free-abelian") {
        if (g.id().size() != 1)
            throw std::domain_error("centralizer quotient not finite beyond rank 1");
        return make_cyclic(std::abs(x[0]));
    }
    if (g.kind() == "free") {
        // centralizer is <r>, x = r^k: quotient is Z/k
        Elt v = x;
        Elt u;
        while (v.size() >= 2 && v.front() == -v.back()) {
            u.push_back(v.front());
            v = Elt(v.begin() + 1, v.end() - 1);
        }
        int n = static_cast<int>(v.size());
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            bool ok = true;
            for (int i = d; i < n && ok; ++i) ok = v[i] == v[i - d];
            if (ok) return make_cyclic(n / d);
        }
    }
    throw std::domain_error("centralizer quotient not computable for this kind");
}

std::vector<int> formula_side(const Group& g, const Elt& x, int D, int rmax) {
    int ord = element_order(g, x);
    if (ord == 1 && !g.is_finite()) {
        // Gamma_e / <e> = Gamma itself
        HomologyReport bar = bar_homology(g, D, 1, rmax);
        std::vector<int> out(D + 1, 0);
        for (int n = 0; n <= D; ++n)
            for (int j = 0; n - 2 * j >= 0; ++j) out[n] += bar.dims[n - 2 * j];
        return out;
    }
    auto q = centralizer_quotient(g, x);
    HomologyReport bar = bar_homology(*q, D, 1, rmax);
    std::vector<int> out(D + 1, 0);
    if (ord > 0) {
        for (int n = 0; n <= D; ++n)
            for (int j = 0; n - 2 * j >= 0; ++j) out[n] += bar.dims[n - 2 * j];
    } else {
        out = bar.dims;  // infinite order: no periodicity tower
    }
    return out;
}

}  // namespace

BurgheleaReport burghelea_check(const Group& g, const Elt* x, int D, int rmax) {
    BurgheleaReport rep;
    if (!x) {
        if (!g.is_finite())
            throw std::domain_error("full comparison needs a finite group");
        HomologyReport hc = cyclic_homology(g, nullptr, D);
        rep.direct = hc.dims;
        rep.formula.assign(D + 1, 0);
        for (const auto& cls : conjugacy_classes(g)) {
            std::vector<int> part = formula_side(g, cls.rep, D, rmax);
            for (int n = 0; n <= D; ++n) rep.formula[n] += part[n];
        }
        rep.radius = hc.radius;
        rep.stabilized = hc.stabilized;
    } else {
        HomologyReport hc = cyclic_homology(g, x, D, 1, rmax);
        rep.direct = hc.dims;
        rep.formula = formula_side(g, *x, D, rmax);
        rep.radius = hc.radius;
        rep.stabilized = hc.stabilized;
    }
    rep.match = rep.direct == rep.formula;
    return rep;
}

}  // namespace rho
