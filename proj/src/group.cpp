#include "rho/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace rho {

bool Group::shortlex_less(const Elt& a, const Elt& b) const {
    int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return a < b;
}

bool EltOrder::operator()(const Elt& a, const Elt& b) const {
    return g->shortlex_less(a, b);
}

namespace {

void sort_shortlex(const Group& g, std::vector<Elt>& v) {
    std::sort(v.begin(), v.end(),
              [&](const Elt& a, const Elt& b) { return g.shortlex_less(a, b); });
}

int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

class CyclicGroup : public Group {
  public:
    explicit CyclicGroup(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
    }
    std::string kind() const override { return "cyclic"; }
    bool is_finite() const override { return true; }
    Elt id() const override { return {0}; }
    Elt mul(const Elt& a, const Elt& b) const override { return {mod(a[0] + b[0], n_)}; }
    Elt inv(const Elt& a) const override { return {mod(-a[0], n_)}; }
    int length(const Elt& a) const override { return std::min(a[0], n_ - a[0]); }
    std::vector<Elt> ball(int R) const override {
        std::vector<Elt> out;
        for (int a = 0; a < n_; ++a)
            if (length({a}) <= R) out.push_back({a});
        sort_shortlex(*this, out);
        return out;
    }
    std::string print(const Elt& a) const override { return std::to_string(a[0]); }
    Elt parse(const std::string& s) const override {
        return {mod(std::stoi(s), n_)};
    }

  private:
    int n_;
};

class DihedralGroup : public Group {
  public:
    explicit DihedralGroup(int n) : n_(n) {
        if (n < 2) throw std::invalid_argument("dihedral: n must be >= 2");
    }
    std::string kind() const override { return "dihedral"; }
    bool is_finite() const override { return true; }
    Elt id() const override { return {0, 0}; }
    Elt mul(const Elt& a, const Elt& b) const override {
        // r^a1 s^b1 r^a2 s^b2 = r^{a1 + (-1)^{b1} a2} s^{b1+b2}
        int ra = mod(a[0] + (a[1] ? -b[0] : b[0]), n_);
        return {ra, a[1] ^ b[1]};
    }
    Elt inv(const Elt& a) const override {
        return a[1] ? a : Elt{mod(-a[0], n_), 0};
    }
    int length(const Elt& a) const override {
        return std::min(a[0], n_ - a[0]) + a[1];
    }
    std::vector<Elt> ball(int R) const override {
        std::vector<Elt> out;
        for (int b = 0; b <= 1; ++b)
            for (int a = 0; a < n_; ++a)
                if (length({a, b}) <= R) out.push_back({a, b});
        sort_shortlex(*this, out);
        return out;
    }
    std::string print(const Elt& a) const override {
        if (a[0] == 0 && a[1] == 0) return "e";
        std::string out;
        if (a[0] == 1)
            out = "r";
        else if (a[0] > 1)
            out = "r^" + std::to_string(a[0]);
        if (a[1]) out += out.empty() ? "s" : " s";
        return out;
    }
    Elt parse(const std::string& s) const override {
        std::string t;
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') t += c;
        if (t == "e") return id();
        size_t i = 0;
        int a = 0, b = 0;
        if (i < t.size() && t[i] == 'r') {
            ++i;
            if (i < t.size() && t[i] == '^') {
                ++i;
                size_t j = i;
                if (j < t.size() && (t[j] == '-' || t[j] == '+')) ++j;
                while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
                a = std::stoi(t.substr(i, j - i));
                i = j;
            } else {
                a = 1;
            }
        }
        if (i < t.size() && t[i] == 's') {
            b = 1;
            ++i;
        }
        if (i != t.size()) throw std::invalid_argument("bad dihedral element: " + s);
        return {mod(a, n_), b};
    }

  private:
    int n_;
};

class FreeAbelianGroup : public Group {
  public:
    explicit FreeAbelianGroup(int rank) : rank_(rank) {
        if (rank < 1) throw std::invalid_argument("free-abelian: rank must be >= 1");
    }
    std::string kind() const override { return "free-abelian"; }
    bool is_finite() const override { return false; }
    Elt id() const override { return Elt(rank_, 0); }
    Elt mul(const Elt& a, const Elt& b) const override {
        Elt out(rank_);
        for (int i = 0; i < rank_; ++i) out[i] = a[i] + b[i];
        return out;
    }
    Elt inv(const Elt& a) const override {
        Elt out(rank_);
        for (int i = 0; i < rank_; ++i) out[i] = -a[i];
        return out;
    }
    int length(const Elt& a) const override {
        int l = 0;
        for (int x : a) l += std::abs(x);
        return l;
    }
    std::vector<Elt> ball(int R) const override {
        std::vector<Elt> out;
        Elt cur(rank_, 0);
        rec(out, cur, 0, R);
        sort_shortlex(*this, out);
        return out;
    }
    std::string print(const Elt& a) const override {
        std::string out = "[";
        for (int i = 0; i < rank_; ++i) {
            if (i) out += ",";
            out += std::to_string(a[i]);
        }
        return out + "]";
    }
    Elt parse(const std::string& s) const override {
        std::string t;
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) throw std::invalid_argument("empty element");
        if (t[0] != '[') {
            if (rank_ != 1) throw std::invalid_argument("bad element: " + s);
            return {std::stoi(t)};
        }
        if (t.back() != ']') throw std::invalid_argument("bad element: " + s);
        Elt out;
        std::string body = t.substr(1, t.size() - 2);
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t c = body.find(',', pos);
            if (c == std::string::npos) c = body.size();
            out.push_back(std::stoi(body.substr(pos, c - pos)));
            pos = c + 1;
        }
        if (static_cast<int>(out.size()) != rank_)
            throw std::invalid_argument("element rank mismatch: " + s);
        return out;
    }

  private:
    void rec(std::vector<Elt>& out, Elt& cur, int i, int budget) const {
        if (i == rank_) {
            out.push_back(cur);
            return;
        }
        for (int x = -budget; x <= budget; ++x) {
            cur[i] = x;
            rec(out, cur, i + 1, budget - std::abs(x));
        }
        cur[i] = 0;
    }
    int rank_;
};

class FreeGroup : public Group {
  public:
    explicit FreeGroup(int rank) : rank_(rank) {
        if (rank < 1 || rank > 26)
            throw std::invalid_argument("free: rank must be in 1..26");
    }
    std::string kind() const override { return "free"; }
    bool is_finite() const override { return false; }
    Elt id() const override { return {}; }
    Elt mul(const Elt& a, const Elt& b) const override {
        Elt out = a;
        for (int x : b) {
            if (!out.empty() && out.back() == -x)
                out.pop_back();
            else
                out.push_back(x);
        }
        return out;
    }
    Elt inv(const Elt& a) const override {
        Elt out;
        for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(-*it);
        return out;
    }
    int length(const Elt& a) const override { return static_cast<int>(a.size()); }
    std::vector<Elt> ball(int R) const override {
        std::vector<Elt> out{{}};
        size_t lo = 0;
        for (int l = 1; l <= R; ++l) {
            size_t hi = out.size();
            for (size_t i = lo; i < hi; ++i) {
                for (int x = -rank_; x <= rank_; ++x) {
                    if (x == 0) continue;
                    if (!out[i].empty() && out[i].back() == -x) continue;
                    Elt w = out[i];
                    w.push_back(x);
                    out.push_back(std::move(w));
                }
            }
            lo = hi;
        }
        sort_shortlex(*this, out);
        return out;
    }
    std::string print(const Elt& a) const override {
        if (a.empty()) return "e";
        std::string out;
        for (int x : a)
            out += x > 0 ? static_cast<char>('a' + x - 1)
                         : static_cast<char>('A' - x - 1);
        return out;
    }
    Elt parse(const std::string& s) const override {
        std::string t;
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t == "e" || t.empty()) return {};
        Elt raw;
        for (char c : t) {
            int x;
            if (c >= 'a' && c < 'a' + rank_)
                x = c - 'a' + 1;
            else if (c >= 'A' && c < 'A' + rank_)
                x = -(c - 'A' + 1);
            else
                throw std::invalid_argument("bad free-group letter in: " + s);
            raw.push_back(x);
        }
        return mul({}, raw);  // reduces
    }

  private:
    int rank_;
};

class TableGroup : public Group {
  public:
    explicit TableGroup(std::vector<std::vector<int>> t) : t_(std::move(t)) {
        int n = static_cast<int>(t_.size());
        if (n == 0) throw std::invalid_argument("finite-table: empty table");
        for (auto& row : t_)
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("finite-table: not square");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (t_[i][j] < 0 || t_[i][j] >= n)
                    throw std::invalid_argument("finite-table: entry out of range");
        for (int i = 0; i < n; ++i)
            if (t_[0][i] != i || t_[i][0] != i)
                throw std::invalid_argument("finite-table: row/col 0 must be the identity");
        // Latin square + associativity + inverses, exhaustively
        for (int i = 0; i < n; ++i) {
            std::vector<bool> seen_r(n, false), seen_c(n, false);
            for (int j = 0; j < n; ++j) {
                if (seen_r[t_[i][j]] || seen_c[t_[j][i]])
                    throw std::invalid_argument("finite-table: not a Latin square");
                seen_r[t_[i][j]] = seen_c[t_[j][i]] = true;
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (t_[t_[i][j]][k] != t_[i][t_[j][k]])
                        throw std::invalid_argument("finite-table: not associative");
        inv_.assign(n, -1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (t_[i][j] == 0) inv_[i] = j;
        for (int i = 0; i < n; ++i)
            if (inv_[i] < 0) throw std::invalid_argument("finite-table: missing inverse");
    }
    std::string kind() const override { return "finite-table"; }
    bool is_finite() const override { return true; }
    Elt id() const override { return {0}; }
    Elt mul(const Elt& a, const Elt& b) const override { return {t_[a[0]][b[0]]}; }
    Elt inv(const Elt& a) const override { return {inv_[a[0]]}; }
    int length(const Elt& a) const override { return a[0] == 0 ? 0 : 1; }
    std::vector<Elt> ball(int R) const override {
        std::vector<Elt> out{{0}};
        if (R >= 1)
            for (int i = 1; i < static_cast<int>(t_.size()); ++i) out.push_back({i});
        return out;
    }
    std::string print(const Elt& a) const override { return std::to_string(a[0]); }
    Elt parse(const std::string& s) const override {
        int i = std::stoi(s);
        if (i < 0 || i >= static_cast<int>(t_.size()))
            throw std::invalid_argument("table index out of range: " + s);
        return {i};
    }

  private:
    std::vector<std::vector<int>> t_;
    std::vector<int> inv_;
};

int full_radius(const Group& g) {
    if (g.kind() == "finite-table") return 1;
    if (g.kind() == "cyclic" || g.kind() == "dihedral") {
        // max length is n/2 (+1 for the reflection)
        int R = 1;
        while (static_cast<int>(g.ball(R).size()) > static_cast<int>(g.ball(R - 1).size()))
            ++R;
        return R;
    }
    throw std::domain_error("elements() on an infinite group");
}

}  // namespace

std::vector<Elt> Group::elements() const {
    if (!is_finite()) throw std::domain_error("elements() on an infinite group");
    return ball(full_radius(*this));
}

std::unique_ptr<Group> make_cyclic(int n) { return std::make_unique<CyclicGroup>(n); }
std::unique_ptr<Group> make_dihedral(int n) { return std::make_unique<DihedralGroup>(n); }
std::unique_ptr<Group> make_free_abelian(int rank) {
    return std::make_unique<FreeAbelianGroup>(rank);
}
std::unique_ptr<Group> make_free(int rank) { return std::make_unique<FreeGroup>(rank); }
std::unique_ptr<Group> make_table_group(const std::vector<std::vector<int>>& table) {
    return std::make_unique<TableGroup>(table);
}

std::unique_ptr<Group> make_symmetric3() {
    // permutations of {0,1,2} in lexicographic order of one-line notation;
    // index 0 = identity; product = left-then-right composition (a*b)(x) = a(b(x))
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::array<int, 3>& q) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == q) return static_cast<int>(i);
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> q;
            for (int x = 0; x < 3; ++x) q[x] = perms[i][perms[j][x]];
            t[i][j] = index_of(q);
        }
    return make_table_group(t);
}

ConjClass conjugacy_class(const Group& g, const Elt& x, int R) {
    ConjClass out;
    std::vector<Elt> conjugators;
    if (g.is_finite()) {
        conjugators = g.elements();
        out.complete = true;
    } else if (g.kind() == "free-abelian") {
        out.rep = x;
        out.members = {x};
        out.conjugator[x] = g.id();
        out.complete = true;
        return out;
    } else {
        conjugators = g.ball(R + g.length(x));
        out.complete = g.is_id(x);
    }
    sort_shortlex(g, conjugators);
    std::set<Elt> seen;
    for (const auto& c : conjugators) {
        Elt m = g.conj(c, x);
        if (!g.is_finite() && g.length(m) > R) continue;
        if (seen.insert(m).second) out.members.push_back(m);
    }
    sort_shortlex(g, out.members);
    out.rep = out.members.front();
    for (const auto& c : conjugators) {
        Elt m = g.conj(c, out.rep);
        if (seen.count(m) && !out.conjugator.count(m)) out.conjugator[m] = c;
    }
    // rep may sit far from x in an infinite group; certify stragglers by
    // composing through x
    if (out.conjugator.size() < out.members.size()) {
        Elt to_x;
        for (const auto& c : conjugators)
            if (g.conj(c, out.rep) == x) { to_x = c; break; }
        for (const auto& c : conjugators) {
            Elt m = g.conj(g.mul(c, to_x), out.rep);
            if (seen.count(m) && !out.conjugator.count(m))
                out.conjugator[m] = g.mul(c, to_x);
        }
    }
    return out;
}

namespace {

// forward declared below with the free-group helpers
void cyclic_reduce(const Group& g, const Elt& x, Elt& u, Elt& v);

}  // namespace

bool conjugate_in(const Group& g, const Elt& a, const Elt& b) {
    if (g.is_finite()) {
        for (const auto& c : g.elements())
            if (g.conj(c, a) == b) return true;
        return false;
    }
    if (g.kind() == "free-abelian") return a == b;
    // free: cyclic reductions agree up to rotation
    Elt u, va, vb;
    cyclic_reduce(g, a, u, va);
    cyclic_reduce(g, b, u, vb);
    if (va.size() != vb.size()) return false;
    if (va.empty()) return true;
    for (size_t r = 0; r < va.size(); ++r) {
        bool ok = true;
        for (size_t i = 0; i < va.size() && ok; ++i)
            ok = va[(i + r) % va.size()] == vb[i];
        if (ok) return true;
    }
    return false;
}

std::vector<ConjClass> conjugacy_classes(const Group& g) {
    std::vector<ConjClass> out;
    std::set<Elt> covered;
    for (const auto& x : g.elements()) {
        if (covered.count(x)) continue;
        ConjClass c = conjugacy_class(g, x, 0);
        for (const auto& m : c.members) covered.insert(m);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [&](const ConjClass& a, const ConjClass& b) {
        return g.shortlex_less(a.rep, b.rep);
    });
    return out;
}

namespace {

// x = u v u^{-1} with v cyclically reduced (free groups)
void cyclic_reduce(const Group& g, const Elt& x, Elt& u, Elt& v) {
    v = x;
    u = {};
    while (v.size() >= 2 && v.front() == -v.back()) {
        u.push_back(v.front());
        v = Elt(v.begin() + 1, v.end() - 1);
    }
}

// minimal period prefix of a word
Elt primitive_root_word(const Elt& v) {
    int n = static_cast<int>(v.size());
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (int i = d; i < n && ok; ++i) ok = v[i] == v[i - d];
        if (ok) return Elt(v.begin(), v.begin() + d);
    }
    return v;
}

}  // namespace

std::vector<Elt> centralizer_ball(const Group& g, const Elt& x, int R) {
    std::vector<Elt> out;
    if (g.is_finite()) {
        for (const auto& c : g.elements())
            if (g.mul(c, x) == g.mul(x, c) && g.length(c) <= R) out.push_back(c);
    } else if (g.kind() == "free-abelian" || g.is_id(x)) {
        out = g.ball(R);
    } else {
        // centralizer of x != e in a free group: the cyclic group on
        // u r0 u^{-1}, r0 the primitive root of the cyclic reduction
        Elt u, v;
        cyclic_reduce(g, x, u, v);
        Elt r0 = primitive_root_word(v);
        Elt gen = g.mul(g.mul(u, r0), g.inv(u));
        Elt cur = g.id();
        out.push_back(cur);
        int bound = R + 2 * static_cast<int>(u.size()) + 2;
        for (int j = 1; j <= bound; ++j) {
            cur = g.mul(cur, gen);
            if (g.length(cur) <= R) out.push_back(cur);
            if (g.length(g.inv(cur)) <= R) out.push_back(g.inv(cur));
        }
    }
    sort_shortlex(g, out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    sort_shortlex(g, out);
    return out;
}

Subgroup centralizer_group(const Group& g, const Elt& x) {
    if (!g.is_finite()) throw std::domain_error("centralizer_group: finite kinds only");
    std::vector<Elt> elems;
    for (const auto& c : g.elements())
        if (g.mul(c, x) == g.mul(x, c)) elems.push_back(c);
    sort_shortlex(g, elems);
    std::map<Elt, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = index.at(g.mul(elems[i], elems[j]));
    Subgroup out;
    out.table = make_table_group(t);
    out.embedding = std::move(elems);
    return out;
}

Subgroup quotient_by_central_cyclic(const Group& parent, const Subgroup& sub, const Elt& x) {
    // powers of x inside the subgroup
    std::set<Elt> pow;
    Elt cur = parent.id();
    do {
        pow.insert(cur);
        cur = parent.mul(cur, x);
    } while (!parent.is_id(cur));
    for (const auto& p : pow) {
        bool found = false;
        for (const auto& m : sub.embedding) found |= (m == p);
        if (!found) throw std::invalid_argument("quotient: <x> not inside subgroup");
    }
    // cosets m<x>
    std::map<Elt, int> coset_of;  // member -> coset id
    std::vector<Elt> reps;
    for (const auto& m : sub.embedding) {
        if (coset_of.count(m)) continue;
        int id = static_cast<int>(reps.size());
        Elt rep = m;
        for (const auto& p : pow) {
            Elt mm = parent.mul(m, p);
            if (parent.shortlex_less(mm, rep)) rep = mm;
            coset_of[mm] = id;
        }
        reps.push_back(rep);
    }
    // identity coset must be index 0: reorder so rep e comes first
    std::vector<int> order(reps.size());
    for (size_t i = 0; i < reps.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return parent.shortlex_less(reps[a], reps[b]);
    });
    std::vector<int> newid(reps.size());
    std::vector<Elt> reps2(reps.size());
    for (size_t i = 0; i < order.size(); ++i) {
        newid[order[i]] = static_cast<int>(i);
        reps2[i] = reps[order[i]];
    }
    for (auto& [m, id] : coset_of) id = newid[id];
    int n = static_cast<int>(reps2.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = coset_of.at(parent.mul(reps2[i], reps2[j]));
    Subgroup out;
    out.table = make_table_group(t);
    out.embedding = std::move(reps2);
    return out;
}

}  // namespace rho
