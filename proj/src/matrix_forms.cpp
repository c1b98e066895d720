#include "rho/matrix_forms.hpp"

#include "rho/errors.hpp"

namespace rho {

FormMatrix mat_identity(const Group& g, int n) {
    FormMatrix out(n);
    for (int i = 0; i < n; ++i) out.at(i, i) = scalar_form(g, CRat(1));
    return out;
}

FormMatrix mat_add(const FormMatrix& a, const FormMatrix& b) {
    FormMatrix out(a.n);
    for (size_t i = 0; i < a.e.size(); ++i) out.e[i] = a.e[i] + b.e[i];
    return out;
}

FormMatrix mat_sub(const FormMatrix& a, const FormMatrix& b) {
    FormMatrix out(a.n);
    for (size_t i = 0; i < a.e.size(); ++i) out.e[i] = a.e[i] - b.e[i];
    return out;
}

FormMatrix mat_mul(const Group& g, const FormMatrix& a, const FormMatrix& b) {
    FormMatrix out(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            NCForm acc;
            for (int k = 0; k < a.n; ++k)
                acc += dga_product(g, a.at(i, k), b.at(k, j));
            out.at(i, j) = std::move(acc);
        }
    return out;
}

FormMatrix mat_scale(const CRat& c, const FormMatrix& a) {
    FormMatrix out(a.n);
    for (size_t i = 0; i < a.e.size(); ++i) out.e[i] = c * a.e[i];
    return out;
}

FormMatrix mat_d(const Group& g, const FormMatrix& a) {
    FormMatrix out(a.n);
    for (size_t i = 0; i < a.e.size(); ++i) out.e[i] = dga_differential(g, a.e[i]);
    return out;
}

NCForm mat_trace(const FormMatrix& a) {
    NCForm out;
    for (int i = 0; i < a.n; ++i) out += a.at(i, i);
    return out;
}

FormMatrix mat_elementary(const Group& g, int n, int i, int j, const NCForm& w) {
    FormMatrix out = mat_identity(g, n);
    out.at(i, j) += w;
    return out;
}

FormMatrix mat_block2(const FormMatrix& a, const FormMatrix& b,
                      const FormMatrix& c, const FormMatrix& d) {
    int n = a.n;
    FormMatrix out(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out.at(i, j) = a.at(i, j);
            out.at(i, j + n) = b.at(i, j);
            out.at(i + n, j) = c.at(i, j);
            out.at(i + n, j + n) = d.at(i, j);
        }
    return out;
}

namespace {

void require_degree_zero(const FormMatrix& m, const char* what) {
    for (const auto& f : m.e)
        if (!f.is_zero() && !f.homogeneous(0))
            throw CertificationError(std::string(what) + ": entries must be degree 0");
}

}  // namespace

GRingMatrix certify_idempotent(const Group& g, FormMatrix m) {
    require_degree_zero(m, "idempotent");
    if (!(mat_mul(g, m, m) == m))
        throw CertificationError("idempotent: p*p != p");
    GRingMatrix out;
    out.m = std::move(m);
    out.idempotent = true;
    return out;
}

GRingMatrix certify_invertible(const Group& g, FormMatrix m, FormMatrix inverse) {
    require_degree_zero(m, "invertible");
    require_degree_zero(inverse, "inverse");
    FormMatrix id = mat_identity(g, m.n);
    if (!(mat_mul(g, m, inverse) == id) || !(mat_mul(g, inverse, m) == id))
        throw CertificationError("invertible: u*inv != 1");
    GRingMatrix out;
    out.m = std::move(m);
    out.invertible = true;
    out.inverse = std::move(inverse);
    return out;
}

nlohmann::json matrix_to_json(const Group& g, const FormMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(form_to_json(g, m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"size", m.n}, {"entries", std::move(rows)}};
}

FormMatrix matrix_from_json(const Group& g, const nlohmann::json& j) {
    int n = j.at("size").get<int>();
    const auto& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("matrix rows do not match size");
    FormMatrix out(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("matrix row length mismatch");
        for (int jj = 0; jj < n; ++jj) out.at(i, jj) = form_from_json(g, rows[i][jj]);
    }
    return out;
}

}  // namespace rho
