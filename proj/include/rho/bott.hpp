#pragma once

#include <complex>
#include <map>

#include "rho/abelianize.hpp"
#include "rho/chern.hpp"

namespace rho {

// Form with floating-point coefficients, the output type of quadrature-backed
// computations.
struct NumericForm {
    std::map<BasisForm, std::complex<double>> terms;

    void add(const BasisForm& bf, const std::complex<double>& c);
    bool is_zero(double tol) const;
};
NumericForm to_numeric(const NCForm& a);

// Raw double integral Tr(beta dbeta dbeta) over the unit square, where beta
// is the Bott projector of a degree-one sphere map collapsing the boundary
// of the square to the north pole. Gauss-Legendre with nodes^2 points.
std::complex<double> bott_anchor_raw(int nodes = 96);

// The analytic value of the raw anchor with the measured orientation,
// frozen; every double transgression is normalized by it.
std::complex<double> bott_anchor();

// Integral over the square of the dt^ds slot of Ch_{2k+2}(p (x) beta),
// divided by the frozen anchor. Agrees with Ch_{2k}(p) modulo commutators up
// to quadrature error.
NumericForm bott_double_transgression(const Group& g, const GRingMatrix& p,
                                      int k, int nodes = 96);

// Distance from (a - b) to the real span of the commutator relations in the
// truncated form space of the given degree; a small value certifies equality
// of the abelianized classes up to quadrature error.
double commutator_distance(FormCalculus& calc, const NumericForm& a,
                           const NCForm& b, int degree);

}  // namespace rho
