#pragma once

#include <map>
#include <memory>
#include <vector>

#include "rho/group.hpp"
#include "rho/linalg.hpp"
#include "rho/nc_form.hpp"

namespace rho {

// Degree-n basis forms with every slot inside ball(R): g0 anywhere in the
// ball, differential slots in ball \ {e}. Index order is deterministic
// (shortlex slots, lexicographic tuples).
class FormSpace {
  public:
    FormSpace(const Group& g, int degree, int radius);

    int dim() const { return static_cast<int>(basis_.size()); }
    int degree() const { return degree_; }
    int radius() const { return radius_; }
    const BasisForm& at(int i) const { return basis_[i]; }
    // -1 when outside the truncation
    int index_of(const BasisForm& bf) const;

    // throws TruncationOverflow on out-of-ball terms
    SVec<CRat> coords(const NCForm& a) const;
    NCForm form_of(const SVec<CRat>& v) const;

  private:
    const Group& g_;
    int degree_, radius_;
    std::vector<BasisForm> basis_;
    std::map<BasisForm, int> index_;
};

// Span of the graded commutators [α,β] = αβ − (−1)^{|α||β|}βα over basis
// forms of complementary degrees inside the truncation. Generators have
// integer coefficients, so the echelon lives over the rationals and
// Gaussian-rational vectors reduce componentwise.
class CommutatorSpan {
  public:
    CommutatorSpan(const Group& g, int degree, int radius);

    const FormSpace& space() const { return space_; }
    const Echelon<Rat>& echelon() const { return ech_; }
    int span_dim() const { return ech_.rank(); }
    int quotient_dim() const { return space_.dim() - ech_.rank(); }

    SVec<Rat> reduce_rat(SVec<Rat> v) const {
        ech_.reduce_full(v);
        return v;
    }
    SVec<CRat> reduce(const SVec<CRat>& v) const;
    NCForm reduce_form(const NCForm& a) const;
    bool contains(const NCForm& a) const { return reduce_form(a).is_zero(); }

  private:
    const Group& g_;
    FormSpace space_;
    Echelon<Rat> ech_;
};

// Canonical reduced coordinates in the quotient basis (non-pivot indices of
// the commutator echelon).
struct AbelianizedForm {
    int degree = 0;
    int radius = 0;
    SVec<CRat> coords;

    bool is_zero() const { return coords.empty(); }
    friend bool operator==(const AbelianizedForm&, const AbelianizedForm&) = default;
};

// Per-(group, radius) calculus context; builds and caches commutator spans
// per degree.
class FormCalculus {
  public:
    FormCalculus(const Group& g, int radius) : g_(g), radius_(radius) {}

    const Group& group() const { return g_; }
    int radius() const { return radius_; }
    const CommutatorSpan& span(int degree);

    AbelianizedForm abelianize(const NCForm& a, int degree);
    NCForm representative(const AbelianizedForm& a);

    // a ≡ b modulo commutators at the truncation
    bool equivalent(const NCForm& a, const NCForm& b, int degree);
    // d(a) ≡ 0 modulo commutators in degree deg(a)+1
    bool closed_mod_commutators(const NCForm& a, int degree);

  private:
    const Group& g_;
    int radius_;
    std::map<int, std::unique_ptr<CommutatorSpan>> spans_;
};

}  // namespace rho
