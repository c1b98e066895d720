#pragma once

#include <functional>

#include "rho/abelianize.hpp"
#include "rho/poly_path.hpp"

namespace rho {

// Grassmann connection data of a certified idempotent: dp and the curvature
// p dp dp (degree-2 entries).
struct CurvatureData {
    FormMatrix p;
    FormMatrix dp;
    FormMatrix theta;
};
CurvatureData curvature(const Group& g, const GRingMatrix& p);

// (1/k!) Tr(Theta^k) of degree 2k; k = 0 gives Tr(p).
NCForm ch_even_form(const Group& g, const GRingMatrix& p, int k);
AbelianizedForm ch_even(FormCalculus& calc, const GRingMatrix& p, int k);

// Certifies d Tr(Theta^k) = 0 modulo commutators without echelonizing the
// commutator span: checks Theta^k = p (dp)^{2k}, then the matrix identity
//   (dp)^{2k+1} = [p dp, q (dp)^{2k}] + [q dp, p (dp)^{2k}],  q = 1 - p,
// whose trace exhibits d Tr(Theta^k) as an explicit sum of graded
// commutators.
bool ch_even_closed_certificate(const Group& g, const GRingMatrix& p, int k);

// Xi_t = p dp pdot - p pdot dp, the degree-1 slot of the path curvature.
PolyMat transgression_xi(const Group& g, const MatrixPath& path);

// (1/(k-1)!) Tr(Xi_t Theta_t^{k-1}), polynomial in t with degree-(2k-1)
// coefficients; satisfies d/dt Ch_{2k}(p_t) = -d(result) modulo commutators,
// coefficientwise in t. k = 0 returns the zero polynomial.
FormPoly transgression(const Group& g, const MatrixPath& path, int k);
// (1/k!) sum_j Tr(Theta^j Xi Theta^{k-1-j}); agrees with transgression
// modulo commutators
FormPoly transgression_symmetrized(const Group& g, const MatrixPath& path, int k);

// Ch_{2k} along the path, polynomial in t.
FormPoly ch_even_along(const Group& g, const MatrixPath& path, int k);

// d/dt Ch_{2k}(p_t) + d transgression(p_t, k) = 0 modulo commutators, checked
// per power of t.
bool transgression_identity(FormCalculus& calc, const MatrixPath& path, int k);

// Odd character: c_k Tr(u^{-1} du (d(u^{-1}) du)^k), degree 2k+1. The
// constant c_k is calibrated once against the suspension route (see
// measure_odd_constant) and frozen here.
NCForm ch_odd_form(const Group& g, const GRingMatrix& u, int k);
AbelianizedForm ch_odd(FormCalculus& calc, const GRingMatrix& u, int k);
// the un-normalized integrand Tr(u^{-1} du (d(u^{-1}) du)^k)
NCForm odd_direct_form(const Group& g, const GRingMatrix& u, int k);
// frozen c_k; throws std::out_of_range beyond the calibrated range
CRat odd_constant(int k);

// integral over [0,1] of the transgression of the suspension loop of u at
// even level 2k+2; degree 2k+1
NCForm suspension_integral(const Group& g, const GRingMatrix& u, int k);

// Re-derives c_k from scratch on the given invertible: solves
//   suspension_integral = c * odd_direct_form + d(omega)  mod commutators
// in the identity-class component at the given per-slot radius. Throws
// CertificationError when the system is inconsistent or c is not pinned
// down (direct form exact at this truncation).
CRat measure_odd_constant(const Group& g, const GRingMatrix& u, int k, int radius);

// DGA map induced by a pointwise group map (identity to identity); mapped
// differential slots that land on the identity kill the term.
struct FormHom {
    const Group* src = nullptr;
    const Group* dst = nullptr;
    std::function<Elt(const Elt&)> map;
};
NCForm apply_hom(const FormHom& phi, const NCForm& a);
FormMatrix apply_hom(const FormHom& phi, const FormMatrix& m);

// Relative character in the mapping cone of phi: the even slot lives
// upstairs, the odd slot integrates the transgression of the connecting
// path downstairs.
struct RelativeChern {
    NCForm even;  // Ch_{2k}(p0) - Ch_{2k}(p1)
    NCForm odd;   // int_0^1 transgression(q_t, k) dt
};
RelativeChern relative_ch(const FormHom& phi, const GRingMatrix& p0,
                          const GRingMatrix& p1, const MatrixPath& q, int k);

// Cone closedness: d(even) = 0 mod commutators upstairs and
// phi(even) = d(odd) mod commutators downstairs.
bool relative_closed(FormCalculus& src_calc, FormCalculus& dst_calc,
                     const FormHom& phi, const RelativeChern& rc, int k);

// Does omega exist with d(omega) = a modulo commutators, omega inside the
// calculus truncation. Degree is the degree of a.
bool is_exact_mod_commutators(FormCalculus& calc, const NCForm& a, int degree);

}  // namespace rho
