#include "rho/chern.hpp"

#include <map>

#include "rho/errors.hpp"

namespace rho {

namespace {

Rat factorial(int k) {
    Rat out(1);
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
}

FormPoly poly_scale(const CRat& s, FormPoly a) {
    for (auto& c : a) c = s * c;
    return a;
}

}  // namespace

CurvatureData curvature(const Group& g, const GRingMatrix& p) {
    if (!p.idempotent)
        throw CertificationError("curvature: needs a certified idempotent");
    CurvatureData out;
    out.p = p.m;
    out.dp = mat_d(g, p.m);
    out.theta = mat_mul(g, out.p, mat_mul(g, out.dp, out.dp));
    return out;
}

NCForm ch_even_form(const Group& g, const GRingMatrix& p, int k) {
    CurvatureData cv = curvature(g, p);
    FormMatrix acc = cv.p;  // Theta^0 is the unit of the corner algebra
    for (int i = 0; i < k; ++i) acc = mat_mul(g, acc, cv.theta);
    return CRat(Rat(1) / factorial(k)) * mat_trace(acc);
}

AbelianizedForm ch_even(FormCalculus& calc, const GRingMatrix& p, int k) {
    return calc.abelianize(ch_even_form(calc.group(), p, k), 2 * k);
}

bool ch_even_closed_certificate(const Group& g, const GRingMatrix& p, int k) {
    CurvatureData cv = curvature(g, p);
    FormMatrix q = mat_sub(mat_identity(g, cv.p.n), cv.p);
    FormMatrix dp2k = mat_identity(g, cv.p.n);
    for (int i = 0; i < 2 * k; ++i) dp2k = mat_mul(g, dp2k, cv.dp);

    FormMatrix thk = cv.p;
    for (int i = 0; i < k; ++i) thk = mat_mul(g, thk, cv.theta);
    if (!(thk == mat_mul(g, cv.p, dp2k))) return false;

    NCForm top = mat_trace(mat_mul(g, cv.dp, dp2k));  // Tr((dp)^{2k+1})
    if (!(dga_differential(g, mat_trace(thk)) == top)) return false;

    // (dp)^{2k+1} = [p dp, q (dp)^{2k}] + [q dp, p (dp)^{2k}]; the trace of
    // the right side is termwise a graded commutator of forms (both degree
    // products even), so matching it certifies commutator membership.
    FormMatrix a = mat_mul(g, cv.p, cv.dp);
    FormMatrix b = mat_mul(g, q, dp2k);
    FormMatrix c = mat_mul(g, q, cv.dp);
    FormMatrix d = mat_mul(g, cv.p, dp2k);
    NCForm comm = mat_trace(mat_mul(g, a, b)) - mat_trace(mat_mul(g, b, a)) +
                  mat_trace(mat_mul(g, c, d)) - mat_trace(mat_mul(g, d, c));
    return top == comm;
}

PolyMat transgression_xi(const Group& g, const MatrixPath& path) {
    PolyMat dp = pm_d(g, path.p);
    PolyMat pdot = pm_derivative(path.p);
    // dt slot of the path curvature; the relative sign carries the dt
    // anticommutation past dp and makes the integrated pairing a homotopy
    // invariant of the loop
    return pm_sub(pm_mul(g, path.p, pm_mul(g, dp, pdot)),
                  pm_mul(g, path.p, pm_mul(g, pdot, dp)));
}

FormPoly transgression(const Group& g, const MatrixPath& path, int k) {
    if (k <= 0) return {};
    PolyMat dp = pm_d(g, path.p);
    PolyMat theta = pm_mul(g, path.p, pm_mul(g, dp, dp));
    PolyMat acc = transgression_xi(g, path);
    for (int i = 0; i < k - 1; ++i) acc = pm_mul(g, acc, theta);
    return poly_scale(CRat(Rat(1) / factorial(k - 1)), pm_trace(acc));
}

FormPoly transgression_symmetrized(const Group& g, const MatrixPath& path, int k) {
    if (k <= 0) return {};
    PolyMat dp = pm_d(g, path.p);
    PolyMat theta = pm_mul(g, path.p, pm_mul(g, dp, dp));
    PolyMat xi = transgression_xi(g, path);
    FormPoly out;
    for (int j = 0; j < k; ++j) {
        PolyMat acc = xi;
        for (int i = 0; i < j; ++i) acc = pm_mul(g, theta, acc);
        for (int i = 0; i < k - 1 - j; ++i) acc = pm_mul(g, acc, theta);
        out = poly_add(out, pm_trace(acc));
    }
    return poly_scale(CRat(Rat(1) / factorial(k)), out);
}

FormPoly ch_even_along(const Group& g, const MatrixPath& path, int k) {
    if (k == 0) return pm_trace(path.p);
    PolyMat dp = pm_d(g, path.p);
    PolyMat theta = pm_mul(g, path.p, pm_mul(g, dp, dp));
    PolyMat acc = theta;
    for (int i = 0; i < k - 1; ++i) acc = pm_mul(g, acc, theta);
    return poly_scale(CRat(Rat(1) / factorial(k)), pm_trace(acc));
}

bool transgression_identity(FormCalculus& calc, const MatrixPath& path, int k) {
    const Group& g = calc.group();
    FormPoly lhs = poly_derivative(ch_even_along(g, path, k));
    FormPoly dtr;
    for (const auto& coeff : transgression(g, path, k))
        dtr.push_back(dga_differential(g, coeff));
    FormPoly sum = poly_add(lhs, dtr);
    for (const auto& coeff : sum)
        if (!calc.abelianize(coeff, 2 * k).is_zero()) return false;
    return true;
}

NCForm odd_direct_form(const Group& g, const GRingMatrix& u, int k) {
    if (!u.invertible)
        throw CertificationError("odd character: needs a certified invertible");
    FormMatrix du = mat_d(g, u.m);
    FormMatrix duinv = mat_d(g, u.inverse);
    FormMatrix acc = mat_mul(g, u.inverse, du);
    FormMatrix blk = mat_mul(g, duinv, du);
    for (int i = 0; i < k; ++i) acc = mat_mul(g, acc, blk);
    return mat_trace(acc);
}

CRat odd_constant(int k) {
    // calibrated against the suspension route on u = g over the rank-1 free
    // abelian group; re-derivable with measure_odd_constant
    static const Rat table[] = {Rat(-1), Rat(-1) / 6};
    if (k < 0 || k >= 2)
        throw std::out_of_range("odd constant calibrated for k <= 1 only");
    return CRat(table[k]);
}

NCForm ch_odd_form(const Group& g, const GRingMatrix& u, int k) {
    return odd_constant(k) * odd_direct_form(g, u, k);
}

AbelianizedForm ch_odd(FormCalculus& calc, const GRingMatrix& u, int k) {
    return calc.abelianize(ch_odd_form(calc.group(), u, k), 2 * k + 1);
}

NCForm suspension_integral(const Group& g, const GRingMatrix& u, int k) {
    MatrixPath loop = suspension_loop(g, u);
    return poly_integrate01(transgression(g, loop, k + 1));
}

CRat measure_odd_constant(const Group& g, const GRingMatrix& u, int k, int radius) {
    int m = 2 * k + 1;
    NCForm s = suspension_integral(g, u, k);
    NCForm dir = odd_direct_form(g, u, k);
    Elt e = g.id();
    NCForm s0 = class_component(g, s, e);
    if (!(class_component(g, dir, e) == dir))
        throw CertificationError("calibration: direct form is not identity-local");
    if (dir.is_zero())
        throw CertificationError("calibration: direct form vanishes");

    // identity-class slice of the degree-m truncation: full slot product e
    // is preserved by both d and commutators
    FormSpace full(g, m, radius);
    std::map<BasisForm, int> index;
    for (int i = 0; i < full.dim(); ++i)
        if (g.is_id(full_product(g, full.at(i))))
            index.emplace(full.at(i), static_cast<int>(index.size()));

    auto coords = [&](const NCForm& a) {
        SVec<CRat> v;
        for (const auto& [bf, c] : a.terms) {
            auto it = index.find(bf);
            if (it == index.end())
                throw CertificationError("calibration: radius too small for the integrand");
            v.emplace_back(it->second, c);
        }
        svec_normalize(v);
        return v;
    };

    // commutator span restricted to the slice; generators whose product
    // leaves the ball are dropped, as in CommutatorSpan
    Echelon<CRat> span;
    for (int da = 0; 2 * da <= m; ++da) {
        int db = m - da;
        FormSpace fa(g, da, radius);
        FormSpace fb(g, db, radius);
        std::map<Elt, std::vector<int>> by_product;
        for (int j = 0; j < fb.dim(); ++j)
            by_product[full_product(g, fb.at(j))].push_back(j);
        CRat sign((da % 2) && (db % 2) ? -1 : 1);
        for (int ia = 0; ia < fa.dim(); ++ia) {
            auto it = by_product.find(g.inv(full_product(g, fa.at(ia))));
            if (it == by_product.end()) continue;
            NCForm alpha;
            alpha.add(fa.at(ia), CRat(1));
            for (int jb : it->second) {
                NCForm beta;
                beta.add(fb.at(jb), CRat(1));
                NCForm comm = dga_product(g, alpha, beta) -
                              sign * dga_product(g, beta, alpha);
                if (comm.is_zero()) continue;
                SVec<CRat> v;
                bool inside = true;
                for (const auto& [bf, c] : comm.terms) {
                    auto hit = index.find(bf);
                    if (hit == index.end()) {
                        inside = false;
                        break;
                    }
                    v.emplace_back(hit->second, c);
                }
                if (!inside) continue;
                svec_normalize(v);
                span.insert(std::move(v));
            }
        }
    }

    auto reduced = [&](const NCForm& a) {
        SVec<CRat> v = coords(a);
        span.reduce_full(v);
        return v;
    };

    SVec<CRat> dcol = reduced(dir);
    if (dcol.empty())
        throw CertificationError("calibration: direct form dies in the quotient");

    // exactness columns: d of the identity-class forms one degree down
    SparseMat<CRat> exact;
    FormSpace down(g, m - 1, radius);
    for (int i = 0; i < down.dim(); ++i) {
        if (!g.is_id(full_product(g, down.at(i)))) continue;
        NCForm w;
        w.add(down.at(i), CRat(1));
        SVec<CRat> col = reduced(dga_differential(g, w));
        if (!col.empty()) exact.cols.push_back(std::move(col));
    }

    SVec<CRat> probe;
    if (solve(exact, dcol, probe))
        throw CertificationError("calibration: constant not pinned at this radius");

    SparseMat<CRat> sys;
    sys.cols.push_back(dcol);
    for (auto& col : exact.cols) sys.cols.push_back(std::move(col));
    SVec<CRat> x;
    if (!solve(sys, reduced(s0), x))
        throw CertificationError("calibration: suspension and direct routes disagree");
    for (const auto& [i, c] : x)
        if (i == 0) return c;
    return CRat(0);
}

NCForm apply_hom(const FormHom& phi, const NCForm& a) {
    NCForm out;
    for (const auto& [bf, c] : a.terms) {
        BasisForm nb;
        nb.g0 = phi.map(bf.g0);
        bool dead = false;
        for (const auto& x : bf.dgs) {
            Elt y = phi.map(x);
            if (phi.dst->is_id(y)) {
                dead = true;
                break;
            }
            nb.dgs.push_back(std::move(y));
        }
        if (!dead) out.add(nb, c);
    }
    return out;
}

FormMatrix apply_hom(const FormHom& phi, const FormMatrix& m) {
    FormMatrix out(m.n);
    for (size_t i = 0; i < m.e.size(); ++i) out.e[i] = apply_hom(phi, m.e[i]);
    return out;
}

RelativeChern relative_ch(const FormHom& phi, const GRingMatrix& p0,
                          const GRingMatrix& p1, const MatrixPath& q, int k) {
    if (!(q.p.eval(Rat(0)) == apply_hom(phi, p0.m)) ||
        !(q.p.eval(Rat(1)) == apply_hom(phi, p1.m)))
        throw CertificationError("relative character: path endpoints do not match");
    RelativeChern out;
    out.even = ch_even_form(*phi.src, p0, k) - ch_even_form(*phi.src, p1, k);
    out.odd = poly_integrate01(transgression(*phi.dst, q, k));
    return out;
}

bool relative_closed(FormCalculus& src_calc, FormCalculus& dst_calc,
                     const FormHom& phi, const RelativeChern& rc, int k) {
    if (!src_calc.closed_mod_commutators(rc.even, 2 * k)) return false;
    return dst_calc.equivalent(apply_hom(phi, rc.even),
                               dga_differential(*phi.dst, rc.odd), 2 * k);
}

bool is_exact_mod_commutators(FormCalculus& calc, const NCForm& a, int degree) {
    AbelianizedForm target = calc.abelianize(a, degree);
    if (target.is_zero()) return true;
    if (degree == 0) return false;
    const Group& g = calc.group();
    FormSpace down(g, degree - 1, calc.radius());
    SparseMat<CRat> m;
    for (int i = 0; i < down.dim(); ++i) {
        NCForm w;
        w.add(down.at(i), CRat(1));
        SVec<CRat> col = calc.abelianize(dga_differential(g, w), degree).coords;
        if (!col.empty()) m.cols.push_back(std::move(col));
    }
    SVec<CRat> x;
    return solve(m, target.coords, x);
}

}  // namespace rho
