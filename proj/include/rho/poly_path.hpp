#pragma once

#include <vector>

#include "rho/matrix_forms.hpp"

namespace rho {

// Polynomial in one parameter with NCForm coefficients.
using FormPoly = std::vector<NCForm>;

FormPoly poly_add(const FormPoly& a, const FormPoly& b);
FormPoly poly_sub(const FormPoly& a, const FormPoly& b);
FormPoly poly_derivative(const FormPoly& a);
NCForm poly_eval(const FormPoly& a, const Rat& t);
NCForm poly_integrate01(const FormPoly& a);
bool poly_is_zero(const FormPoly& a);

// Matrix whose entries are polynomial in a parameter t: stored as
// coefficient matrices, c[k] multiplying t^k.
struct PolyMat {
    int n = 0;
    std::vector<FormMatrix> c;

    PolyMat() = default;
    explicit PolyMat(const FormMatrix& constant) : n(constant.n), c{constant} {}

    int tdeg() const { return static_cast<int>(c.size()) - 1; }
    void trim();
    FormMatrix eval(const Rat& t) const;
    bool is_zero() const;
    friend bool operator==(const PolyMat& a, const PolyMat& b);
};

PolyMat pm_add(const PolyMat& a, const PolyMat& b);
PolyMat pm_sub(const PolyMat& a, const PolyMat& b);
PolyMat pm_mul(const Group& g, const PolyMat& a, const PolyMat& b);
PolyMat pm_scale(const CRat& s, const PolyMat& a);
PolyMat pm_derivative(const PolyMat& a);        // d/dt
PolyMat pm_d(const Group& g, const PolyMat& a);  // entrywise form differential
FormPoly pm_trace(const PolyMat& a);
FormMatrix pm_integrate01(const PolyMat& a);

// Idempotent path with the polynomial identity p*p = p verified exactly.
struct MatrixPath {
    PolyMat p;
};
MatrixPath certify_idempotent_path(const Group& g, PolyMat p);

// Loop of idempotents at diag(1,0) winding by the invertible u: conjugation
// of diag(1,0) by the elementary-factor path from 1 to diag(u, u^{-1}).
// Realizes the suspension of [u]; 2n x 2n, polynomial entries.
MatrixPath suspension_loop(const Group& g, const GRingMatrix& u);

// Rotation path diag(1,0) -> diag(0,1) through the w-twisted middle, w a
// certified invertible; 2n x 2n, polynomial entries.
MatrixPath rotation_swap_path(const Group& g, const GRingMatrix& w);

}  // namespace rho
