#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "rho/group.hpp"
#include "rho/nc_form.hpp"

namespace rho {

// Discrete covering F x Gamma: finitely many base points with positive
// rational volume weights, a working radius for the group directions, and a
// cutoff h with sum_gamma h(f, gamma) = 1 exactly per point. The default
// cutoff is the indicator of F itself. Gauge forms
//   N(f) = sum_gamma h(f, gamma) * gamma d(gamma^{-1})
// are precomputed; they drive the connection and its curvature.
class CoveringModel {
  public:
    // indicator cutoff
    CoveringModel(const Group& g, std::vector<Rat> weights, int radius);
    // cutoff[f] maps gamma -> h(f, gamma); rows must sum to 1 exactly and be
    // supported inside ball(radius)
    CoveringModel(const Group& g, std::vector<Rat> weights, int radius,
                  std::vector<std::map<Elt, Rat>> cutoff);

    const Group& group() const { return g_; }
    int size() const { return static_cast<int>(weights_.size()); }
    const Rat& weight(int f) const { return weights_[f]; }
    int radius() const { return radius_; }
    const std::map<Elt, Rat>& cutoff(int f) const { return cutoff_[f]; }
    const NCForm& gauge(int f) const { return gauge_[f]; }

  private:
    void init();

    const Group& g_;
    std::vector<Rat> weights_;
    int radius_;
    std::vector<std::map<Elt, Rat>> cutoff_;
    std::vector<NCForm> gauge_;
};

// Equivariant kernel on the covering, reduced to its fundamental-domain
// matrix: entry (f1, f2) is the form attached to the pair of base points,
// with the translation slot carried by the total product of each basis term.
// A kernel acts on Omega^F by (K xi)(f1) = sum_f2 w_f2 K(f1,f2) xi(f2), so
// composition is the weight-twisted matrix product. The optional grading
// splits F into even/odd points for supertraces.
struct EqKernel {
    int n = 0;
    std::vector<NCForm> e;
    std::vector<int> grading;

    EqKernel() = default;
    explicit EqKernel(int size) : n(size), e(size * size) {}

    NCForm& at(int f1, int f2) { return e[f1 * n + f2]; }
    const NCForm& at(int f1, int f2) const { return e[f1 * n + f2]; }

    bool is_zero() const {
        for (const auto& f : e)
            if (!f.is_zero()) return false;
        return true;
    }
    int max_degree() const {
        int d = 0;
        for (const auto& f : e) d = std::max(d, f.max_degree());
        return d;
    }
    // entrywise form-degree component
    EqKernel component(int d) const;

    friend bool operator==(const EqKernel& a, const EqKernel& b) {
        return a.n == b.n && a.e == b.e && a.grading == b.grading;
    }
};

EqKernel kernel_zero(const CoveringModel& m);
// two-sided convolution unit: (1/w_f) e on the diagonal
EqKernel delta_kernel(const CoveringModel& m);
// translation by x: (1/w_f) x on the diagonal
EqKernel translation_kernel(const CoveringModel& m, const Elt& x);
// multiplication by a function constant on fibers: c_f e at (f, f)
EqKernel multiplication_kernel(const CoveringModel& m, const std::vector<CRat>& c);

EqKernel kernel_add(const EqKernel& a, const EqKernel& b);
EqKernel kernel_sub(const EqKernel& a, const EqKernel& b);
EqKernel kernel_scale(const CRat& c, const EqKernel& a);

// weighted matrix product sum_f w_f a(f1, f) b(f, f2); grading and model
// must agree; throws truncation-overflow when a product term leaves the
// working ball of an infinite group
EqKernel convolve(const CoveringModel& m, const EqKernel& a, const EqKernel& b);

// commutator with the cutoff gauge: dT + N T - (-1)^{deg} T N, taken per
// homogeneous component; raises form degree by one
EqKernel lott_connection(const CoveringModel& m, const EqKernel& t);

// curvature of the connection, as the diagonal kernel acting by left
// multiplication with dN(f) + N(f)^2; lott_connection of it vanishes and
// lott_connection applied twice equals its commutator
EqKernel curvature(const CoveringModel& m);

// weighted diagonal sum; a trace modulo graded commutators
NCForm tr_lott(const CoveringModel& m, const EqKernel& t);
// same with the total-product-trivial terms dropped
NCForm tr_del(const CoveringModel& m, const EqKernel& t);
// grading-signed variant; requires a graded kernel
NCForm str_del(const CoveringModel& m, const EqKernel& t);

// T11 + T12 X + X T21 + X T22 X with X^2 the curvature and any
// kernel-X-kernel sandwich equal to zero
struct XForm {
    EqKernel t11, t12, t21, t22;

    friend bool operator==(const XForm&, const XForm&) = default;
};

XForm xform_zero(const CoveringModel& m);
XForm xform_from_kernel(const CoveringModel& m, const EqKernel& k);
XForm xform_add(const XForm& a, const XForm& b);
XForm xform_sub(const XForm& a, const XForm& b);
XForm xform_mul(const CoveringModel& m, const XForm& a, const XForm& b);
// degree-1 differential with d X = 0 and d T = [nabla, T] + X T + (-1)^{deg} T X;
// squares to zero exactly
XForm xform_d(const CoveringModel& m, const XForm& a);
// tr_del(T11) - (-1)^{deg T22} tr_del(T22 * curvature); chain map onto forms
// modulo commutators
NCForm x_extended_trace(const CoveringModel& m, const XForm& a);

nlohmann::json covering_to_json(const CoveringModel& m);
CoveringModel covering_from_json(const Group& g, const nlohmann::json& j);

// entries carry the translation slot explicitly: each {gamma, f1, f2, form}
// contributes gamma * form to the (f1, f2) entry; export splits every entry
// by total product and normalizes the form to total product e
nlohmann::json kernel_to_json(const CoveringModel& m, const EqKernel& k);
EqKernel kernel_from_json(const CoveringModel& m, const nlohmann::json& j);

}  // namespace rho
