#pragma once

#include <vector>

#include <json.hpp>

#include "rho/group.hpp"
#include "rho/nc_form.hpp"

namespace rho {

// Square matrix with NCForm entries, row-major.
struct FormMatrix {
    int n = 0;
    std::vector<NCForm> e;

    FormMatrix() = default;
    explicit FormMatrix(int size) : n(size), e(size * size) {}

    NCForm& at(int i, int j) { return e[i * n + j]; }
    const NCForm& at(int i, int j) const { return e[i * n + j]; }

    bool is_zero() const {
        for (const auto& f : e)
            if (!f.is_zero()) return false;
        return true;
    }
    friend bool operator==(const FormMatrix& a, const FormMatrix& b) {
        return a.n == b.n && a.e == b.e;
    }
};

FormMatrix mat_identity(const Group& g, int n);
FormMatrix mat_add(const FormMatrix& a, const FormMatrix& b);
FormMatrix mat_sub(const FormMatrix& a, const FormMatrix& b);
FormMatrix mat_mul(const Group& g, const FormMatrix& a, const FormMatrix& b);
FormMatrix mat_scale(const CRat& c, const FormMatrix& a);
FormMatrix mat_d(const Group& g, const FormMatrix& a);  // entrywise differential
NCForm mat_trace(const FormMatrix& a);

// I + w placed at (i, j), i != j
FormMatrix mat_elementary(const Group& g, int n, int i, int j, const NCForm& w);
// block 2x2 arrangement of n x n pieces
FormMatrix mat_block2(const FormMatrix& a, const FormMatrix& b,
                      const FormMatrix& c, const FormMatrix& d);

// Degree-0 matrix over the group ring with an exactly verified witness:
// either p^2 = p or u * inv = inv * u = 1.
struct GRingMatrix {
    FormMatrix m;
    bool idempotent = false;
    bool invertible = false;
    FormMatrix inverse;  // valid when invertible
};

// both throw CertificationError when the witness fails or entries are not
// degree 0
GRingMatrix certify_idempotent(const Group& g, FormMatrix m);
GRingMatrix certify_invertible(const Group& g, FormMatrix m, FormMatrix inverse);

nlohmann::json matrix_to_json(const Group& g, const FormMatrix& m);
FormMatrix matrix_from_json(const Group& g, const nlohmann::json& j);

}  // namespace rho
