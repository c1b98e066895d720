#include "rho/nc_form.hpp"

#include <sstream>

namespace rho {

NCForm scalar_form(const Group& g, const CRat& c) {
    NCForm out;
    out.add({g.id(), {}}, c);
    return out;
}

NCForm group_form(const Group& g, const Elt& x, const CRat& c) {
    NCForm out;
    out.add({x, {}}, c);
    return out;
}

NCForm d_of(const Group& g, const Elt& x, const CRat& c) {
    NCForm out;
    if (!g.is_id(x)) out.add({g.id(), {x}}, c);
    return out;
}

Elt full_product(const Group& g, const BasisForm& bf) {
    Elt p = bf.g0;
    for (const auto& x : bf.dgs) p = g.mul(p, x);
    return p;
}

namespace {

// (... dg) * (h0 dh1 ... dhm) expands by dg*h0 = d(g h0) - g dh0; both
// normalization drops (de = 0) happen here. Recursing on the left factor's
// differential slots realizes the whole product formula without explicit
// sign bookkeeping.
void mul_basis(const Group& g, const BasisForm& a, const BasisForm& b,
               const CRat& coef, NCForm& out) {
    if (a.degree() == 0) {
        BasisForm r{g.mul(a.g0, b.g0), b.dgs};
        out.add(r, coef);
        return;
    }
    BasisForm head = a;
    Elt gk = head.dgs.back();
    head.dgs.pop_back();

    Elt gh = g.mul(gk, b.g0);
    if (!g.is_id(gh)) {
        BasisForm t1{g.id(), {}};
        t1.dgs.reserve(b.dgs.size() + 1);
        t1.dgs.push_back(gh);
        t1.dgs.insert(t1.dgs.end(), b.dgs.begin(), b.dgs.end());
        mul_basis(g, head, t1, coef, out);
    }
    if (!g.is_id(b.g0)) {
        BasisForm t2{gk, {}};
        t2.dgs.reserve(b.dgs.size() + 1);
        t2.dgs.push_back(b.g0);
        t2.dgs.insert(t2.dgs.end(), b.dgs.begin(), b.dgs.end());
        mul_basis(g, head, t2, -coef, out);
    }
}

}  // namespace

NCForm dga_product(const Group& g, const NCForm& a, const NCForm& b) {
    NCForm out;
    for (auto& [bfa, ca] : a.terms)
        for (auto& [bfb, cb] : b.terms) mul_basis(g, bfa, bfb, ca * cb, out);
    return out;
}

NCForm dga_differential(const Group& g, const NCForm& a) {
    NCForm out;
    for (auto& [bf, c] : a.terms) {
        if (g.is_id(bf.g0)) continue;
        BasisForm r{g.id(), {}};
        r.dgs.reserve(bf.dgs.size() + 1);
        r.dgs.push_back(bf.g0);
        r.dgs.insert(r.dgs.end(), bf.dgs.begin(), bf.dgs.end());
        out.add(r, c);
    }
    return out;
}

DelSplit del_split(const Group& g, const NCForm& a) {
    DelSplit out;
    for (auto& [bf, c] : a.terms) {
        if (g.is_id(full_product(g, bf)))
            out.e_part.add(bf, c);
        else
            out.del_part.add(bf, c);
    }
    return out;
}

NCForm class_component(const Group& g, const NCForm& a, const Elt& x) {
    NCForm out;
    for (auto& [bf, c] : a.terms)
        if (conjugate_in(g, x, full_product(g, bf))) out.add(bf, c);
    return out;
}

nlohmann::json form_to_json(const Group& g, const NCForm& a) {
    nlohmann::json out = nlohmann::json::array();
    for (auto& [bf, c] : a.terms) {
        nlohmann::json term;
        term["coef"] = {render_rat(c.re), render_rat(c.im)};
        term["g0"] = g.print(bf.g0);
        nlohmann::json dgs = nlohmann::json::array();
        for (auto& x : bf.dgs) dgs.push_back(g.print(x));
        term["dgs"] = dgs;
        out.push_back(term);
    }
    return out;
}

NCForm form_from_json(const Group& g, const nlohmann::json& j) {
    NCForm out;
    for (const auto& term : j) {
        const auto& coef = term.at("coef");
        CRat c(parse_rat(coef.at(0).get<std::string>()),
               parse_rat(coef.at(1).get<std::string>()));
        BasisForm bf;
        bf.g0 = g.parse(term.at("g0").get<std::string>());
        for (const auto& s : term.at("dgs")) {
            Elt x = g.parse(s.get<std::string>());
            if (g.is_id(x))
                throw std::invalid_argument("identity in a differential slot");
            bf.dgs.push_back(std::move(x));
        }
        out.add(bf, c);
    }
    return out;
}

std::string form_to_string(const Group& g, const NCForm& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [bf, c] : a.terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << render_crat(c) << ")*" << g.print(bf.g0);
        for (auto& x : bf.dgs) os << " d" << g.print(x);
    }
    return os.str();
}

}  // namespace rho
