#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rho/group.hpp"
#include "rho/linalg.hpp"
#include "rho/rational.hpp"

namespace rho {

// Chain tuple (g0, ..., gn); degree n = size - 1. Normalized chains keep
// e out of slots >= 1.
using Tuple = std::vector<Elt>;

Tuple face(const Group& g, int i, const Tuple& c);  // i = n wraps to the front
Tuple cyclic_t(const Tuple& c);                     // (gn, g0, ..., g{n-1})
Elt tuple_product(const Group& g, const Tuple& c);
int tuple_length(const Group& g, const Tuple& c);
bool tuple_degenerate(const Group& g, const Tuple& c);

struct CyclicChain {
    int degree = 0;
    std::map<Tuple, CRat> terms;
    std::optional<Elt> cls;  // conjugacy restriction witness, if any

    bool is_zero() const { return terms.empty(); }
    // degenerate tuples are dropped (normalized complex)
    void add(const Group& g, const Tuple& t, const CRat& c);
    friend bool operator==(const CyclicChain& a, const CyclicChain& b) {
        return a.degree == b.degree && a.terms == b.terms;
    }
};

// b = sum (-1)^i face_i; lowers degree by one
CyclicChain hochschild_b(const Group& g, const CyclicChain& c);
// normalized B = s N with the signed cyclic operator; raises degree by one
CyclicChain connes_B(const Group& g, const CyclicChain& c);

// Basis enumeration for chain spaces. Finite groups enumerate everything
// (radius ignored). For infinite groups, per-slot mode puts every slot in
// ball(R) while total-length mode bounds sum l(gi) <= R; only the latter
// is closed under faces and B, so complexes are always built from it.
enum class TupleTrunc { PerSlotBall, TotalLength };

class TupleBasis {
  public:
    // cls: restrict to tuples whose product is conjugate to *cls
    TupleBasis(const Group& g, int degree, int radius, TupleTrunc mode,
               const Elt* cls);

    int dim() const { return static_cast<int>(basis_.size()); }
    const Tuple& at(int i) const { return basis_[i]; }
    int index_of(const Tuple& t) const;

    SVec<CRat> coords(const Group& g, const CyclicChain& c) const;

  private:
    std::vector<Tuple> basis_;
    std::map<Tuple, int> index_;
};

// Degreewise complex slice with explicit differentials d[k]: C_k -> C_{k-1}.
// Construction verifies d.d = 0 and throws IdentityFailure otherwise.
struct ChainComplexSlice {
    std::string label;
    std::vector<int> dims;                // dim C_k for k = 0..D
    std::vector<SparseMat<CRat>> d;       // d[k], k >= 1; d[0] unused

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
    void validate() const;
};

struct HomologyReport {
    std::string label;
    std::optional<Elt> cls;
    int radius = -1;          // -1 for untruncated (finite) complexes
    std::vector<int> dims;    // H_0..H_D
    bool stabilized = true;
};

// dim H_n = dim C_n - rank d_n - rank d_{n+1}, exact; usable for
// n < top_degree (the top degree lacks incoming boundaries).
HomologyReport homology(const ChainComplexSlice& s);

// Slices over the class of x (nullptr = the whole complex), degrees 0..D.
// radius < 0 requires a finite group.
ChainComplexSlice hochschild_slice(const Group& g, const Elt* x, int D, int radius = -1);
ChainComplexSlice cyclic_total_slice(const Group& g, const Elt* x, int D, int radius = -1);
// normalized bar complex computing H_*(G; C)
ChainComplexSlice bar_slice(const Group& g, int D, int radius = -1);

// Homology tables through degree D. For infinite groups radii sweep
// upward from r0 until two consecutive radii agree (stabilization) or
// rmax is hit; the report carries the final radius and the flag.
HomologyReport hochschild_homology(const Group& g, const Elt* x, int D, int r0 = 1,
                                   int rmax = 8);
HomologyReport cyclic_homology(const Group& g, const Elt* x, int D, int r0 = 1,
                               int rmax = 8);
HomologyReport bar_homology(const Group& g, int D, int r0 = 1, int rmax = 8);

// Matrix of the periodicity map HC_n -> HC_{n-2} on homology classes,
// computed by dropping the top column of the cyclic total complex on
// deterministic cycle representatives.
struct PeriodicityMap {
    int from_dim = 0, to_dim = 0;
    SparseMat<CRat> matrix;
    int rank = 0;
};
PeriodicityMap periodicity_S(const Group& g, const Elt* x, int n, int radius = -1);

// Transfer between Z(Gamma, x) and Z(Gamma_x, x): rho corrects a tuple
// into centralizer slots via the minimal conjugators y_i of its rotated
// products, iota is the inclusion, and the simplicial homotopy H links
// iota.rho to the identity. Centralizer tuples use parent coordinates.
class LocalizedTransfer {
  public:
    // search_radius bounds the conjugator hunt for infinite groups
    LocalizedTransfer(const Group& g, const Elt& x, int search_radius = 6);

    const Elt& x() const { return x_; }
    // y with y m y^{-1} = x, shortlex-minimal; throws on a miss
    const Elt& conjugator_to_x(const Elt& m) const;
    std::vector<Elt> tuple_conjugators(const Tuple& t) const;  // y_0..y_n

    Tuple rho(const Tuple& t) const;
    bool in_centralizer_tuple(const Tuple& t) const;

    CyclicChain rho(const Group& g, const CyclicChain& c) const;
    // H = sum_j (-1)^{j+1} h_j; degree +1, b H + H b = iota.rho - id
    CyclicChain homotopy_H(const CyclicChain& c) const;
    CyclicChain h_term(int j, const Tuple& t) const;

  private:
    const Group& g_;
    Elt x_;
    std::map<Elt, Elt> anchor_;  // class member -> minimal y
};

// |f(g0,...,gn)| <= C (1 + l(g0)...l(gn))^N over every normalized tuple
// with slots in ball(R); exact comparison via |f|^2 <= bound^2.
bool polynomial_growth_bound(const Group& g, int degree, int radius,
                             const std::function<CRat(const Tuple&)>& f, int N,
                             const Rat& C);

struct BurgheleaReport {
    std::vector<int> direct;   // localized cyclic homology, degrees 0..D
    std::vector<int> formula;  // centralizer-quotient side
    bool match = false;
    int radius = -1;
    bool stabilized = true;
};
// x = nullptr compares the full cyclic homology against the sum over all
// conjugacy classes (finite groups only).
BurgheleaReport burghelea_check(const Group& g, const Elt* x, int D, int rmax = 8);

}  // namespace rho
