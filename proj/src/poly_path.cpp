#include "rho/poly_path.hpp"

#include "rho/errors.hpp"

namespace rho {

FormPoly poly_add(const FormPoly& a, const FormPoly& b) {
    FormPoly out(std::max(a.size(), b.size()));
    for (size_t k = 0; k < out.size(); ++k) {
        if (k < a.size()) out[k] += a[k];
        if (k < b.size()) out[k] += b[k];
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

FormPoly poly_sub(const FormPoly& a, const FormPoly& b) {
    FormPoly out(std::max(a.size(), b.size()));
    for (size_t k = 0; k < out.size(); ++k) {
        if (k < a.size()) out[k] += a[k];
        if (k < b.size()) out[k] -= b[k];
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

FormPoly poly_derivative(const FormPoly& a) {
    FormPoly out;
    for (size_t k = 1; k < a.size(); ++k)
        out.push_back(CRat(Rat(static_cast<long>(k))) * a[k]);
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

NCForm poly_eval(const FormPoly& a, const Rat& t) {
    NCForm out;
    Rat tk(1);
    for (const auto& coeff : a) {
        out += CRat(tk) * coeff;
        tk *= t;
    }
    return out;
}

NCForm poly_integrate01(const FormPoly& a) {
    NCForm out;
    for (size_t k = 0; k < a.size(); ++k)
        out += CRat(Rat(1) / Rat(static_cast<long>(k + 1))) * a[k];
    return out;
}

bool poly_is_zero(const FormPoly& a) {
    for (const auto& coeff : a)
        if (!coeff.is_zero()) return false;
    return true;
}

void PolyMat::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

FormMatrix PolyMat::eval(const Rat& t) const {
    FormMatrix out(n);
    Rat tk(1);
    for (const auto& ck : c) {
        out = mat_add(out, mat_scale(CRat(tk), ck));
        tk *= t;
    }
    return out;
}

bool PolyMat::is_zero() const {
    for (const auto& ck : c)
        if (!ck.is_zero()) return false;
    return true;
}

bool operator==(const PolyMat& a, const PolyMat& b) {
    PolyMat x = a;
    PolyMat y = b;
    x.trim();
    y.trim();
    return x.n == y.n && x.c == y.c;
}

PolyMat pm_add(const PolyMat& a, const PolyMat& b) {
    PolyMat out;
    out.n = a.n;
    out.c.resize(std::max(a.c.size(), b.c.size()), FormMatrix(a.n));
    for (size_t k = 0; k < out.c.size(); ++k) {
        if (k < a.c.size()) out.c[k] = mat_add(out.c[k], a.c[k]);
        if (k < b.c.size()) out.c[k] = mat_add(out.c[k], b.c[k]);
    }
    out.trim();
    return out;
}

PolyMat pm_sub(const PolyMat& a, const PolyMat& b) {
    return pm_add(a, pm_scale(CRat(-1), b));
}

PolyMat pm_mul(const Group& g, const PolyMat& a, const PolyMat& b) {
    PolyMat out;
    out.n = a.n;
    if (a.c.empty() || b.c.empty()) return out;
    out.c.resize(a.c.size() + b.c.size() - 1, FormMatrix(a.n));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = mat_add(out.c[i + j], mat_mul(g, a.c[i], b.c[j]));
    out.trim();
    return out;
}

PolyMat pm_scale(const CRat& s, const PolyMat& a) {
    PolyMat out;
    out.n = a.n;
    for (const auto& ck : a.c) out.c.push_back(mat_scale(s, ck));
    out.trim();
    return out;
}

PolyMat pm_derivative(const PolyMat& a) {
    PolyMat out;
    out.n = a.n;
    for (size_t k = 1; k < a.c.size(); ++k)
        out.c.push_back(mat_scale(CRat(Rat(static_cast<long>(k))), a.c[k]));
    out.trim();
    return out;
}

PolyMat pm_d(const Group& g, const PolyMat& a) {
    PolyMat out;
    out.n = a.n;
    for (const auto& ck : a.c) out.c.push_back(mat_d(g, ck));
    out.trim();
    return out;
}

FormPoly pm_trace(const PolyMat& a) {
    FormPoly out;
    for (const auto& ck : a.c) out.push_back(mat_trace(ck));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

FormMatrix pm_integrate01(const PolyMat& a) {
    FormMatrix out(a.n);
    for (size_t k = 0; k < a.c.size(); ++k)
        out = mat_add(out, mat_scale(CRat(Rat(1) / Rat(static_cast<long>(k + 1))), a.c[k]));
    return out;
}

MatrixPath certify_idempotent_path(const Group& g, PolyMat p) {
    for (const auto& ck : p.c)
        for (const auto& f : ck.e)
            if (!f.is_zero() && !f.homogeneous(0))
                throw CertificationError("idempotent path: entries must be degree 0");
    if (!(pm_mul(g, p, p) == p))
        throw CertificationError("idempotent path: p*p != p");
    return MatrixPath{std::move(p)};
}

namespace {

// I + t * lin with lin strictly block-triangular, so the t -> -t factor is
// the exact inverse.
PolyMat unipotent_factor(const Group& g, int size, const FormMatrix& lin) {
    PolyMat out(mat_identity(g, size));
    out.c.push_back(lin);
    return out;
}

PolyMat product(const Group& g, const std::vector<PolyMat>& factors) {
    PolyMat out = factors.front();
    for (size_t i = 1; i < factors.size(); ++i) out = pm_mul(g, out, factors[i]);
    return out;
}

}  // namespace

MatrixPath suspension_loop(const Group& g, const GRingMatrix& u) {
    if (!u.invertible)
        throw CertificationError("suspension loop: needs a certified invertible");
    int n = u.m.n;
    int N = 2 * n;
    FormMatrix zero(n);
    FormMatrix idn = mat_identity(g, n);
    FormMatrix minus_uinv = mat_scale(CRat(-1), u.inverse);
    FormMatrix minus_idn = mat_scale(CRat(-1), idn);

    PolyMat f1 = unipotent_factor(g, N, mat_block2(zero, u.m, zero, zero));
    PolyMat f2 = unipotent_factor(g, N, mat_block2(zero, zero, minus_uinv, zero));
    PolyMat g1 = unipotent_factor(g, N, mat_block2(zero, minus_idn, zero, zero));
    PolyMat g2 = unipotent_factor(g, N, mat_block2(zero, zero, idn, zero));

    auto flip = [](PolyMat f) {
        f.c[1] = mat_scale(CRat(-1), f.c[1]);
        return f;
    };
    PolyMat v = product(g, {f1, f2, f1, g1, g2, g1});
    PolyMat vinv = product(g, {flip(g1), flip(g2), flip(g1), flip(f1), flip(f2), flip(f1)});

    PolyMat e(mat_block2(idn, zero, zero, zero));
    PolyMat p = pm_mul(g, pm_mul(g, v, e), vinv);

    FormMatrix e0 = e.c[0];
    if (!(p.eval(Rat(0)) == e0) || !(p.eval(Rat(1)) == e0))
        throw CertificationError("suspension loop: endpoints drifted");
    return certify_idempotent_path(g, std::move(p));
}

MatrixPath rotation_swap_path(const Group& g, const GRingMatrix& w) {
    if (!w.invertible)
        throw CertificationError("rotation path: needs a certified invertible");
    int n = w.m.n;
    int N = 2 * n;
    FormMatrix zero(n);
    FormMatrix idn = mat_identity(g, n);
    FormMatrix minus_winv = mat_scale(CRat(-1), w.inverse);

    PolyMat f1 = unipotent_factor(g, N, mat_block2(zero, w.m, zero, zero));
    PolyMat f2 = unipotent_factor(g, N, mat_block2(zero, zero, minus_winv, zero));

    auto flip = [](PolyMat f) {
        f.c[1] = mat_scale(CRat(-1), f.c[1]);
        return f;
    };
    PolyMat uu = product(g, {f1, f2, f1});
    PolyMat uinv = product(g, {flip(f1), flip(f2), flip(f1)});

    PolyMat e(mat_block2(idn, zero, zero, zero));
    PolyMat q = pm_mul(g, pm_mul(g, uu, e), uinv);

    if (!(q.eval(Rat(0)) == e.c[0]) ||
        !(q.eval(Rat(1)) == mat_block2(zero, zero, zero, idn)))
        throw CertificationError("rotation path: endpoints drifted");
    return certify_idempotent_path(g, std::move(q));
}

}  // namespace rho
