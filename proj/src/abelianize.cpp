#include "rho/abelianize.hpp"

#include "rho/errors.hpp"

namespace rho {

FormSpace::FormSpace(const Group& g, int degree, int radius)
    : g_(g), degree_(degree), radius_(radius) {
    std::vector<Elt> ball = g.ball(radius);
    std::vector<Elt> nonid;
    for (const auto& x : ball)
        if (!g.is_id(x)) nonid.push_back(x);

    if (degree == 0 || !nonid.empty()) {
        BasisForm cur;
        cur.dgs.resize(degree);
        // odometer over (g0, dgs...)
        std::vector<size_t> pos(degree + 1, 0);
        while (true) {
            cur.g0 = ball[pos[0]];
            for (int i = 0; i < degree; ++i) cur.dgs[i] = nonid[pos[i + 1]];
            basis_.push_back(cur);
            int i = degree;
            for (; i >= 0; --i) {
                size_t lim = i == 0 ? ball.size() : nonid.size();
                if (++pos[i] < lim) break;
                pos[i] = 0;
            }
            if (i < 0) break;
        }
    }
    for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
}

int FormSpace::index_of(const BasisForm& bf) const {
    auto it = index_.find(bf);
    return it == index_.end() ? -1 : it->second;
}

SVec<CRat> FormSpace::coords(const NCForm& a) const {
    SVec<CRat> out;
    for (auto& [bf, c] : a.terms) {
        int i = index_of(bf);
        if (i < 0)
            throw TruncationOverflow("form term outside ball(" +
                                     std::to_string(radius_) + ")");
        out.emplace_back(i, c);
    }
    svec_normalize(out);
    return out;
}

NCForm FormSpace::form_of(const SVec<CRat>& v) const {
    NCForm out;
    for (auto& [i, c] : v) out.add(basis_[i], c);
    return out;
}

CommutatorSpan::CommutatorSpan(const Group& g, int degree, int radius)
    : g_(g), space_(g, degree, radius) {
    // generators [α,β], deg α + deg β = degree, deg α <= deg β; for equal
    // degrees the reverse pair is a multiple, but the diagonal still
    // matters in odd degree where [α,α] = 2α²
    for (int da = 0; 2 * da <= degree; ++da) {
        int db = degree - da;
        FormSpace A(g, da, radius);
        FormSpace B(g, db, radius);
        int sign = (da % 2) && (db % 2) ? -1 : 1;  // (-1)^{|α||β|}
        for (int ia = 0; ia < A.dim(); ++ia) {
            NCForm alpha;
            alpha.add(A.at(ia), CRat(1));
            int jb_start = (da == db) ? ia : 0;
            for (int jb = jb_start; jb < B.dim(); ++jb) {
                NCForm beta;
                beta.add(B.at(jb), CRat(1));
                NCForm comm = dga_product(g_, alpha, beta);
                NCForm ba = dga_product(g_, beta, alpha);
                comm -= CRat(sign) * ba;
                if (comm.is_zero()) continue;
                SVec<Rat> v;
                bool in_ball = true;
                for (auto& [bf, c] : comm.terms) {
                    int idx = space_.index_of(bf);
                    if (idx < 0) {
                        in_ball = false;
                        break;
                    }
                    v.emplace_back(idx, c.re);  // generators are real integer
                }
                if (!in_ball) continue;  // certificate outside truncation
                svec_normalize(v);
                ech_.insert(std::move(v));
            }
        }
    }
}

SVec<CRat> CommutatorSpan::reduce(const SVec<CRat>& v) const {
    SVec<Rat> re, im;
    for (auto& [i, c] : v) {
        if (c.re != 0) re.emplace_back(i, c.re);
        if (c.im != 0) im.emplace_back(i, c.im);
    }
    re = reduce_rat(std::move(re));
    im = reduce_rat(std::move(im));
    SVec<CRat> out;
    for (auto& [i, r] : re) out.emplace_back(i, CRat(r));
    for (auto& [i, r] : im) out.emplace_back(i, CRat(Rat(0), r));
    svec_normalize(out);
    return out;
}

NCForm CommutatorSpan::reduce_form(const NCForm& a) const {
    return space_.form_of(reduce(space_.coords(a)));
}

const CommutatorSpan& FormCalculus::span(int degree) {
    auto it = spans_.find(degree);
    if (it == spans_.end())
        it = spans_.emplace(degree, std::make_unique<CommutatorSpan>(g_, degree, radius_))
                 .first;
    return *it->second;
}

AbelianizedForm FormCalculus::abelianize(const NCForm& a, int degree) {
    if (!a.homogeneous(degree))
        throw std::invalid_argument("abelianize: form not homogeneous of the stated degree");
    const CommutatorSpan& s = span(degree);
    AbelianizedForm out;
    out.degree = degree;
    out.radius = radius_;
    out.coords = s.reduce(s.space().coords(a));
    return out;
}

NCForm FormCalculus::representative(const AbelianizedForm& a) {
    return span(a.degree).space().form_of(a.coords);
}

bool FormCalculus::equivalent(const NCForm& a, const NCForm& b, int degree) {
    return abelianize(a - b, degree).is_zero();
}

bool FormCalculus::closed_mod_commutators(const NCForm& a, int degree) {
    NCForm da = dga_differential(g_, a);
    if (da.is_zero()) return true;
    return abelianize(da, degree + 1).is_zero();
}

}  // namespace rho
