#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "rho/group.hpp"
#include "rho/rational.hpp"

namespace rho {

// g0 dg1 ... dgk; gi != e for i >= 1, g0 unrestricted.
struct BasisForm {
    Elt g0;
    std::vector<Elt> dgs;

    int degree() const { return static_cast<int>(dgs.size()); }
    friend auto operator<=>(const BasisForm&, const BasisForm&) = default;
};

// Finite Gaussian-rational combination of basis forms. Zero coefficients
// are never stored.
struct NCForm {
    std::map<BasisForm, CRat> terms;

    bool is_zero() const { return terms.empty(); }

    // -1 when mixed or zero
    int degree() const {
        int d = -2;
        for (auto& [bf, c] : terms) {
            if (d == -2)
                d = bf.degree();
            else if (d != bf.degree())
                return -1;
        }
        return d == -2 ? -1 : d;
    }
    bool homogeneous(int d) const {
        for (auto& [bf, c] : terms)
            if (bf.degree() != d) return false;
        return true;
    }
    int max_degree() const {
        int d = 0;
        for (auto& [bf, c] : terms) d = std::max(d, bf.degree());
        return d;
    }
    NCForm component(int d) const {
        NCForm out;
        for (auto& [bf, c] : terms)
            if (bf.degree() == d) out.terms.emplace(bf, c);
        return out;
    }

    void add(const BasisForm& bf, const CRat& c) {
        if (c.is_zero()) return;
        auto it = terms.find(bf);
        if (it == terms.end()) {
            terms.emplace(bf, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    NCForm& operator+=(const NCForm& o) {
        for (auto& [bf, c] : o.terms) add(bf, c);
        return *this;
    }
    NCForm& operator-=(const NCForm& o) {
        for (auto& [bf, c] : o.terms) add(bf, -c);
        return *this;
    }
    friend NCForm operator+(NCForm a, const NCForm& b) { a += b; return a; }
    friend NCForm operator-(NCForm a, const NCForm& b) { a -= b; return a; }
    friend NCForm operator*(const CRat& c, const NCForm& a) {
        NCForm out;
        for (auto& [bf, x] : a.terms) out.add(bf, c * x);
        return out;
    }
    friend bool operator==(const NCForm& a, const NCForm& b) {
        return a.terms == b.terms;
    }
};

NCForm scalar_form(const Group& g, const CRat& c);          // c * e
NCForm group_form(const Group& g, const Elt& x, const CRat& c = CRat(1));  // c * x
NCForm d_of(const Group& g, const Elt& x, const CRat& c = CRat(1));        // c * dx

Elt full_product(const Group& g, const BasisForm& bf);

NCForm dga_product(const Group& g, const NCForm& a, const NCForm& b);
NCForm dga_differential(const Group& g, const NCForm& a);

struct DelSplit {
    NCForm e_part;
    NCForm del_part;
};
DelSplit del_split(const Group& g, const NCForm& a);

// component whose full product is conjugate to x
NCForm class_component(const Group& g, const NCForm& a, const Elt& x);

// [{"coef": ["1/2","0"], "g0": "...", "dgs": ["...", ...]}, ...]
nlohmann::json form_to_json(const Group& g, const NCForm& a);
NCForm form_from_json(const Group& g, const nlohmann::json& j);

std::string form_to_string(const Group& g, const NCForm& a);

}  // namespace rho
