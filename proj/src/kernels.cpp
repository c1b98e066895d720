#include "rho/kernels.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "rho/errors.hpp"

namespace rho {

namespace {

void check_radius(const CoveringModel& m, const EqKernel& k, const char* what) {
    const Group& g = m.group();
    if (g.is_finite()) return;
    for (const auto& form : k.e)
        for (const auto& [bf, c] : form.terms) {
            bool bad = g.length(bf.g0) > m.radius();
            for (const auto& x : bf.dgs) bad = bad || g.length(x) > m.radius();
            if (bad)
                throw TruncationOverflow(std::string(what) + ": kernel term outside ball(" +
                                         std::to_string(m.radius()) + ")");
        }
}

void require_size(const CoveringModel& m, const EqKernel& k, const char* what) {
    if (k.n != m.size())
        throw std::invalid_argument(std::string(what) +
                                    ": kernel size does not match the covering");
}

std::vector<int> merge_grading(const EqKernel& a, const EqKernel& b, const char* what) {
    if (!a.grading.empty() && !b.grading.empty() && a.grading != b.grading)
        throw std::invalid_argument(std::string(what) + ": gradings differ");
    return a.grading.empty() ? b.grading : a.grading;
}

// (-1)^{deg} per homogeneous component
NCForm sign_by_degree(const NCForm& a) {
    NCForm out;
    for (const auto& [bf, c] : a.terms) out.add(bf, bf.degree() % 2 ? -c : c);
    return out;
}

EqKernel signed_kernel(const EqKernel& k) {
    EqKernel out(k.n);
    out.grading = k.grading;
    for (size_t i = 0; i < k.e.size(); ++i) out.e[i] = sign_by_degree(k.e[i]);
    return out;
}

}  // namespace

CoveringModel::CoveringModel(const Group& g, std::vector<Rat> weights, int radius)
    : g_(g), weights_(std::move(weights)), radius_(radius) {
    cutoff_.assign(weights_.size(), {{g.id(), Rat(1)}});
    init();
}

CoveringModel::CoveringModel(const Group& g, std::vector<Rat> weights, int radius,
                             std::vector<std::map<Elt, Rat>> cutoff)
    : g_(g), weights_(std::move(weights)), radius_(radius), cutoff_(std::move(cutoff)) {
    init();
}

void CoveringModel::init() {
    if (weights_.empty()) throw std::invalid_argument("covering: empty fundamental domain");
    for (const auto& w : weights_)
        if (w <= 0) throw std::invalid_argument("covering: weights must be positive");
    if (radius_ < 0) throw std::invalid_argument("covering: negative radius");
    if (cutoff_.size() != weights_.size())
        throw std::invalid_argument("covering: one cutoff row per point required");

    gauge_.resize(weights_.size());
    for (size_t f = 0; f < cutoff_.size(); ++f) {
        Rat total(0);
        NCForm n;
        for (auto it = cutoff_[f].begin(); it != cutoff_[f].end();) {
            if (it->second == 0) {
                it = cutoff_[f].erase(it);
                continue;
            }
            if (!g_.is_finite() && g_.length(it->first) > radius_)
                throw TruncationOverflow("covering: cutoff supported outside ball(" +
                                         std::to_string(radius_) + ")");
            total += it->second;
            n += dga_product(g_, group_form(g_, it->first, CRat(it->second)),
                             d_of(g_, g_.inv(it->first)));
            ++it;
        }
        if (total != 1)
            throw std::invalid_argument("covering: cutoff row " + std::to_string(f) +
                                        " sums to " + render_rat(total) + ", not 1");
        gauge_[f] = std::move(n);
    }
}

EqKernel EqKernel::component(int d) const {
    EqKernel out(n);
    out.grading = grading;
    for (size_t i = 0; i < e.size(); ++i) out.e[i] = e[i].component(d);
    return out;
}

EqKernel kernel_zero(const CoveringModel& m) { return EqKernel(m.size()); }

EqKernel delta_kernel(const CoveringModel& m) {
    EqKernel out(m.size());
    for (int f = 0; f < m.size(); ++f)
        out.at(f, f) = scalar_form(m.group(), CRat(Rat(1) / m.weight(f)));
    return out;
}

EqKernel translation_kernel(const CoveringModel& m, const Elt& x) {
    EqKernel out(m.size());
    for (int f = 0; f < m.size(); ++f)
        out.at(f, f) = group_form(m.group(), x, CRat(Rat(1) / m.weight(f)));
    return out;
}

EqKernel multiplication_kernel(const CoveringModel& m, const std::vector<CRat>& c) {
    if (static_cast<int>(c.size()) != m.size())
        throw std::invalid_argument("multiplication kernel: one value per point required");
    EqKernel out(m.size());
    for (int f = 0; f < m.size(); ++f)
        out.at(f, f) = scalar_form(m.group(), c[f] * CRat(Rat(1) / m.weight(f)));
    return out;
}

EqKernel kernel_add(const EqKernel& a, const EqKernel& b) {
    if (a.n != b.n) throw std::invalid_argument("kernel sizes differ");
    EqKernel out(a.n);
    out.grading = merge_grading(a, b, "kernel_add");
    for (size_t i = 0; i < a.e.size(); ++i) out.e[i] = a.e[i] + b.e[i];
    return out;
}

EqKernel kernel_sub(const EqKernel& a, const EqKernel& b) {
    if (a.n != b.n) throw std::invalid_argument("kernel sizes differ");
    EqKernel out(a.n);
    out.grading = merge_grading(a, b, "kernel_sub");
    for (size_t i = 0; i < a.e.size(); ++i) out.e[i] = a.e[i] - b.e[i];
    return out;
}

EqKernel kernel_scale(const CRat& c, const EqKernel& a) {
    EqKernel out(a.n);
    out.grading = a.grading;
    for (size_t i = 0; i < a.e.size(); ++i) out.e[i] = c * a.e[i];
    return out;
}

EqKernel convolve(const CoveringModel& m, const EqKernel& a, const EqKernel& b) {
    require_size(m, a, "convolve");
    require_size(m, b, "convolve");
    EqKernel out(m.size());
    out.grading = merge_grading(a, b, "convolve");
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) {
            NCForm acc;
            for (int k = 0; k < m.size(); ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                acc += CRat(m.weight(k)) * dga_product(m.group(), a.at(i, k), b.at(k, j));
            }
            out.at(i, j) = std::move(acc);
        }
    check_radius(m, out, "convolve");
    return out;
}

EqKernel lott_connection(const CoveringModel& m, const EqKernel& t) {
    require_size(m, t, "lott_connection");
    const Group& g = m.group();
    EqKernel out(m.size());
    out.grading = t.grading;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) {
            const NCForm& a = t.at(i, j);
            if (a.is_zero()) continue;
            NCForm r = dga_differential(g, a);
            r += dga_product(g, m.gauge(i), a);
            r -= dga_product(g, sign_by_degree(a), m.gauge(j));
            out.at(i, j) = std::move(r);
        }
    check_radius(m, out, "lott_connection");
    return out;
}

EqKernel curvature(const CoveringModel& m) {
    const Group& g = m.group();
    EqKernel out(m.size());
    for (int f = 0; f < m.size(); ++f) {
        NCForm th = dga_differential(g, m.gauge(f));
        th += dga_product(g, m.gauge(f), m.gauge(f));
        out.at(f, f) = CRat(Rat(1) / m.weight(f)) * th;
    }
    return out;
}

NCForm tr_lott(const CoveringModel& m, const EqKernel& t) {
    require_size(m, t, "tr_lott");
    NCForm out;
    for (int f = 0; f < m.size(); ++f) out += CRat(m.weight(f)) * t.at(f, f);
    return out;
}

NCForm tr_del(const CoveringModel& m, const EqKernel& t) {
    return del_split(m.group(), tr_lott(m, t)).del_part;
}

NCForm str_del(const CoveringModel& m, const EqKernel& t) {
    require_size(m, t, "str_del");
    if (static_cast<int>(t.grading.size()) != m.size())
        throw std::invalid_argument("str_del: kernel is not graded");
    NCForm out;
    for (int f = 0; f < m.size(); ++f)
        out += CRat(t.grading[f] ? -m.weight(f) : m.weight(f)) * t.at(f, f);
    return del_split(m.group(), out).del_part;
}

XForm xform_zero(const CoveringModel& m) {
    EqKernel z = kernel_zero(m);
    return XForm{z, z, z, z};
}

XForm xform_from_kernel(const CoveringModel& m, const EqKernel& k) {
    XForm out = xform_zero(m);
    out.t11 = k;
    return out;
}

XForm xform_add(const XForm& a, const XForm& b) {
    return XForm{kernel_add(a.t11, b.t11), kernel_add(a.t12, b.t12),
                 kernel_add(a.t21, b.t21), kernel_add(a.t22, b.t22)};
}

XForm xform_sub(const XForm& a, const XForm& b) {
    return XForm{kernel_sub(a.t11, b.t11), kernel_sub(a.t12, b.t12),
                 kernel_sub(a.t21, b.t21), kernel_sub(a.t22, b.t22)};
}

// the sandwich rule kills every cross term with an inner X, so only the
// squared-X contractions survive next to the plain matrix part
XForm xform_mul(const CoveringModel& m, const XForm& a, const XForm& b) {
    EqKernel th = curvature(m);
    EqKernel bth = convolve(m, a.t12, th);
    EqKernel dth = convolve(m, a.t22, th);
    XForm out;
    out.t11 = kernel_add(convolve(m, a.t11, b.t11), convolve(m, bth, b.t21));
    out.t12 = kernel_add(convolve(m, a.t11, b.t12), convolve(m, bth, b.t22));
    out.t21 = kernel_add(convolve(m, a.t21, b.t11), convolve(m, dth, b.t21));
    out.t22 = kernel_add(convolve(m, a.t21, b.t12), convolve(m, dth, b.t22));
    return out;
}

XForm xform_d(const CoveringModel& m, const XForm& x) {
    EqKernel th = curvature(m);
    EqKernel sa = signed_kernel(x.t11);
    EqKernel sc = signed_kernel(x.t21);
    XForm out;
    out.t11 = kernel_add(lott_connection(m, x.t11),
                         kernel_sub(convolve(m, signed_kernel(x.t12), th),
                                    convolve(m, th, x.t21)));
    out.t12 = kernel_sub(kernel_add(sa, lott_connection(m, x.t12)),
                         convolve(m, th, x.t22));
    out.t21 = kernel_sub(x.t11, kernel_add(lott_connection(m, x.t21),
                                           convolve(m, signed_kernel(x.t22), th)));
    out.t22 = kernel_sub(x.t12, kernel_add(sc, lott_connection(m, x.t22)));
    return out;
}

NCForm x_extended_trace(const CoveringModel& m, const XForm& x) {
    NCForm out = tr_del(m, x.t11);
    out -= tr_del(m, convolve(m, signed_kernel(x.t22), curvature(m)));
    return out;
}

nlohmann::json covering_to_json(const CoveringModel& m) {
    const Group& g = m.group();
    nlohmann::json j;
    j["F_size"] = m.size();
    nlohmann::json w = nlohmann::json::array();
    for (int f = 0; f < m.size(); ++f) w.push_back(render_rat(m.weight(f)));
    j["weights"] = w;
    j["radius"] = m.radius();

    bool indicator = true;
    for (int f = 0; f < m.size(); ++f) {
        const auto& row = m.cutoff(f);
        indicator = indicator && row.size() == 1 && g.is_id(row.begin()->first);
    }
    if (!indicator) {
        nlohmann::json rows = nlohmann::json::array();
        for (int f = 0; f < m.size(); ++f) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& [x, v] : m.cutoff(f))
                row.push_back({{"gamma", g.print(x)}, {"value", render_rat(v)}});
            rows.push_back(row);
        }
        j["cutoff"] = rows;
    }
    return j;
}

CoveringModel covering_from_json(const Group& g, const nlohmann::json& j) {
    int n = j.at("F_size").get<int>();
    std::vector<Rat> weights;
    for (const auto& w : j.at("weights")) weights.push_back(parse_rat(w.get<std::string>()));
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("covering literal: F_size does not match weights");
    int radius = j.at("radius").get<int>();
    if (!j.contains("cutoff")) return CoveringModel(g, std::move(weights), radius);

    std::vector<std::map<Elt, Rat>> cutoff;
    for (const auto& row : j.at("cutoff")) {
        std::map<Elt, Rat> r;
        for (const auto& item : row)
            r[g.parse(item.at("gamma").get<std::string>())] +=
                parse_rat(item.at("value").get<std::string>());
        cutoff.push_back(std::move(r));
    }
    return CoveringModel(g, std::move(weights), radius, std::move(cutoff));
}

nlohmann::json kernel_to_json(const CoveringModel& m, const EqKernel& k) {
    const Group& g = m.group();
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < k.n; ++i)
        for (int j = 0; j < k.n; ++j) {
            const NCForm& a = k.at(i, j);
            if (a.is_zero()) continue;
            std::vector<std::pair<Elt, NCForm>> slots;
            for (const auto& [bf, c] : a.terms) {
                Elt tp = full_product(g, bf);
                auto it = std::find_if(slots.begin(), slots.end(),
                                       [&](const auto& s) { return s.first == tp; });
                if (it == slots.end()) it = slots.insert(slots.end(), {tp, NCForm{}});
                it->second.add(bf, c);
            }
            std::sort(slots.begin(), slots.end(), [&](const auto& s1, const auto& s2) {
                return g.shortlex_less(s1.first, s2.first);
            });
            for (const auto& [gamma, form] : slots) {
                NCForm reduced = dga_product(g, group_form(g, g.inv(gamma)), form);
                entries.push_back({{"gamma", g.print(gamma)},
                                   {"f1", i},
                                   {"f2", j},
                                   {"form", form_to_json(g, reduced)}});
            }
        }
    nlohmann::json out;
    out["entries"] = entries;
    out["grading"] = k.grading;
    return out;
}

EqKernel kernel_from_json(const CoveringModel& m, const nlohmann::json& j) {
    const Group& g = m.group();
    EqKernel out(m.size());
    for (const auto& entry : j.at("entries")) {
        int f1 = entry.at("f1").get<int>();
        int f2 = entry.at("f2").get<int>();
        if (f1 < 0 || f1 >= m.size() || f2 < 0 || f2 >= m.size())
            throw std::invalid_argument("kernel literal: point index out of range");
        Elt gamma = g.parse(entry.at("gamma").get<std::string>());
        NCForm form = form_from_json(g, entry.at("form"));
        out.at(f1, f2) += dga_product(g, group_form(g, gamma), form);
    }
    if (j.contains("grading") && !j.at("grading").empty()) {
        out.grading = j.at("grading").get<std::vector<int>>();
        if (static_cast<int>(out.grading.size()) != m.size())
            throw std::invalid_argument("kernel literal: grading size mismatch");
        for (int v : out.grading)
            if (v != 0 && v != 1)
                throw std::invalid_argument("kernel literal: grading entries must be 0 or 1");
    }
    check_radius(m, out, "kernel literal");
    return out;
}

}  // namespace rho
