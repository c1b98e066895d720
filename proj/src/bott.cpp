#include "rho/bott.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "rho/errors.hpp"

namespace rho {

namespace {

using Cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

double to_d(const Rat& r) { return r.convert_to<double>(); }
Cplx to_c(const CRat& c) { return {to_d(c.re), to_d(c.im)}; }

struct M2 {
    std::array<Cplx, 4> a{};  // row-major 2x2

    static M2 ident() { return {{1.0, 0.0, 0.0, 1.0}}; }
    Cplx tr() const { return a[0] + a[3]; }
    friend M2 operator*(const M2& x, const M2& y) {
        return {{x.a[0] * y.a[0] + x.a[1] * y.a[2], x.a[0] * y.a[1] + x.a[1] * y.a[3],
                 x.a[2] * y.a[0] + x.a[3] * y.a[2], x.a[2] * y.a[1] + x.a[3] * y.a[3]}};
    }
    friend M2 operator+(const M2& x, const M2& y) {
        return {{x.a[0] + y.a[0], x.a[1] + y.a[1], x.a[2] + y.a[2], x.a[3] + y.a[3]}};
    }
    friend M2 operator*(double s, const M2& x) {
        return {{s * x.a[0], s * x.a[1], s * x.a[2], s * x.a[3]}};
    }
};

// Gauss-Legendre nodes and weights on [0, 1].
void gauss_legendre01(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = 0.5 * (1.0 - z);
        x[n - 1 - i] = 0.5 * (1.0 + z);
        w[i] = w[n - 1 - i] = 1.0 / ((1.0 - z * z) * pp * pp);
    }
}

// Bott projector (1 + n.sigma)/2 for the degree-one sphere map
// n(t, s) = (sin(pi t) cos(2 pi s), sin(pi t) sin(2 pi s), cos(pi t)),
// with its two partial derivatives. Entire in (t, s), so Gauss-Legendre
// converges geometrically; exactly idempotent pointwise.
struct BottPoint {
    M2 b, bt, bs;
};

BottPoint bott_at(double t, double s) {
    double c = std::cos(kPi * t), sn = std::sin(kPi * t);
    Cplx w(std::cos(2.0 * kPi * s), std::sin(2.0 * kPi * s));
    Cplx wb = std::conj(w);
    const Cplx i(0.0, 1.0);

    BottPoint out;
    out.b = M2{{Cplx(0.5 * (1.0 + c)), 0.5 * sn * wb, 0.5 * sn * w, Cplx(0.5 * (1.0 - c))}};
    out.bt = M2{{Cplx(-0.5 * kPi * sn), 0.5 * kPi * c * wb, 0.5 * kPi * c * w,
                 Cplx(0.5 * kPi * sn)}};
    out.bs = M2{{Cplx(0.0), -i * kPi * sn * wb, i * kPi * sn * w, Cplx(0.0)}};
    return out;
}

enum Atom { kB = 0, kBt = 1, kBs = 2 };

// One tensor factor of the dt^ds expansion: an exact form matrix times a
// word in {beta, beta_t, beta_s} evaluated per quadrature node.
struct TensorTerm {
    CRat coef;
    FormMatrix form;
    std::vector<int> atoms;
};

using TermList = std::vector<TensorTerm>;

TermList mul(const Group& g, const TermList& a, const TermList& b) {
    TermList out;
    for (const auto& x : a)
        for (const auto& y : b) {
            TensorTerm t;
            t.coef = x.coef * y.coef;
            t.form = mat_mul(g, x.form, y.form);
            t.atoms = x.atoms;
            t.atoms.insert(t.atoms.end(), y.atoms.begin(), y.atoms.end());
            out.push_back(std::move(t));
        }
    return out;
}

TermList pow_mul(const Group& g, const TermList& base, int e, TermList acc) {
    for (int i = 0; i < e; ++i) acc = mul(g, acc, base);
    return acc;
}

// Integrals of tr(word) over the unit square, one quadrature sweep for all
// words at once.
std::map<std::vector<int>, Cplx> integrate_words(const std::vector<std::vector<int>>& words,
                                                 int nodes) {
    std::vector<double> x, w;
    gauss_legendre01(nodes, x, w);
    std::map<std::vector<int>, Cplx> out;
    for (const auto& word : words) out.emplace(word, Cplx(0.0));
    for (int i = 0; i < nodes; ++i) {
        for (int j = 0; j < nodes; ++j) {
            BottPoint pt = bott_at(x[i], x[j]);
            const M2* atom[3] = {&pt.b, &pt.bt, &pt.bs};
            double weight = w[i] * w[j];
            for (auto& [word, acc] : out) {
                M2 prod = M2::ident();
                for (int a : word) prod = prod * (*atom[a]);
                acc += weight * prod.tr();
            }
        }
    }
    return out;
}

long factorial(int k) {
    long out = 1;
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
}

}  // namespace

void NumericForm::add(const BasisForm& bf, const Cplx& c) {
    auto [it, fresh] = terms.emplace(bf, c);
    if (!fresh) it->second += c;
}

bool NumericForm::is_zero(double tol) const {
    for (const auto& [bf, c] : terms)
        if (std::abs(c) > tol) return false;
    return true;
}

NumericForm to_numeric(const NCForm& a) {
    NumericForm out;
    for (const auto& [bf, c] : a.terms) out.add(bf, to_c(c));
    return out;
}

std::complex<double> bott_anchor_raw(int nodes) {
    std::vector<std::vector<int>> words{{kB, kBt, kBs}, {kB, kBs, kBt}};
    auto vals = integrate_words(words, nodes);
    return vals[words[0]] - vals[words[1]];
}

std::complex<double> bott_anchor() {
    // the suspension parametrization traverses the sphere once positively
    return {0.0, 2.0 * kPi};
}

NumericForm bott_double_transgression(const Group& g, const GRingMatrix& p, int k,
                                      int nodes) {
    if (k < 0) throw std::invalid_argument("double transgression: negative degree");
    CurvatureData cv = curvature(g, p);
    FormMatrix pdp = mat_mul(g, cv.p, cv.dp);
    FormMatrix pdpp = mat_mul(g, pdp, cv.p);
    int kk = k + 1;  // power on the tensor side

    TermList theta{{CRat(1), cv.theta, {kB}}};
    TermList xi{{CRat(1), pdpp, {kB, kBt}}, {CRat(-1), pdp, {kB, kBt, kB}}};
    TermList sigma{{CRat(1), pdpp, {kB, kBs}}, {CRat(-1), pdp, {kB, kBs, kB}}};
    TermList psi{{CRat(1), cv.p, {kB, kBt, kBs}}, {CRat(-1), cv.p, {kB, kBs, kBt}}};

    TermList ident{{CRat(1), mat_identity(g, p.m.n), {}}};
    TermList expansion;
    for (int a = 0; a + 1 <= kk; ++a) {
        TermList t = pow_mul(g, theta, a, ident);
        t = mul(g, t, psi);
        t = pow_mul(g, theta, kk - 1 - a, std::move(t));
        expansion.insert(expansion.end(), t.begin(), t.end());
    }
    for (int a = 0; a + 2 <= kk; ++a) {
        for (int b = 0; a + b + 2 <= kk; ++b) {
            int c = kk - 2 - a - b;
            TermList fwd = pow_mul(g, theta, a, ident);
            TermList bwd = fwd;
            fwd = pow_mul(g, theta, c, mul(g, pow_mul(g, theta, b, mul(g, fwd, sigma)), xi));
            bwd = pow_mul(g, theta, c, mul(g, pow_mul(g, theta, b, mul(g, bwd, xi)), sigma));
            for (auto& t : fwd) expansion.push_back(std::move(t));
            for (auto& t : bwd) {
                t.coef = CRat(-1) * t.coef;
                expansion.push_back(std::move(t));
            }
        }
    }

    std::vector<std::vector<int>> words;
    for (const auto& t : expansion) words.push_back(t.atoms);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    auto integrals = integrate_words(words, nodes);

    NumericForm out;
    Cplx norm = 1.0 / (static_cast<double>(factorial(kk)) * bott_anchor());
    for (const auto& t : expansion) {
        Cplx factor = integrals.at(t.atoms) * norm * to_c(t.coef);
        if (std::abs(factor) < 1e-300) continue;
        NCForm trace = mat_trace(t.form);
        for (const auto& [bf, c] : trace.terms) out.add(bf, factor * to_c(c));
    }
    std::erase_if(out.terms, [](const auto& e) { return std::abs(e.second) == 0.0; });
    return out;
}

double commutator_distance(FormCalculus& calc, const NumericForm& a, const NCForm& b,
                           int degree) {
    const CommutatorSpan& span = calc.span(degree);
    const FormSpace& fs = span.space();
    std::vector<Cplx> v(fs.dim(), Cplx(0.0));
    double outside = 0.0;
    for (const auto& [bf, c] : a.terms) {
        int idx = fs.index_of(bf);
        if (idx < 0)
            outside += std::abs(c);
        else
            v[idx] += c;
    }
    for (const auto& [bf, c] : b.terms) {
        int idx = fs.index_of(bf);
        if (idx < 0)
            outside += std::abs(to_c(c));
        else
            v[idx] -= to_c(c);
    }

    // project out the real span of the commutator relations
    std::vector<std::vector<double>> basis;
    for (const auto& [piv, col] : span.echelon().columns()) {
        std::vector<double> e(fs.dim(), 0.0);
        for (const auto& [i, r] : col) e[i] = to_d(r);
        for (const auto& prev : basis) {
            double dot = 0.0;
            for (size_t i = 0; i < e.size(); ++i) dot += e[i] * prev[i];
            for (size_t i = 0; i < e.size(); ++i) e[i] -= dot * prev[i];
        }
        double nrm = 0.0;
        for (double c : e) nrm += c * c;
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) continue;
        for (double& c : e) c /= nrm;
        basis.push_back(std::move(e));
    }
    for (const auto& e : basis) {
        Cplx dot(0.0);
        for (size_t i = 0; i < v.size(); ++i) dot += v[i] * e[i];
        for (size_t i = 0; i < v.size(); ++i) v[i] -= dot * e[i];
    }
    double nrm = 0.0;
    for (const auto& c : v) nrm += std::norm(c);
    return std::sqrt(nrm) + outside;
}

}  // namespace rho
