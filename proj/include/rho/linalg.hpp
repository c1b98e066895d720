#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rho/rational.hpp"

namespace rho {

inline bool is_zero_scalar(const Rat& r) { return r == 0; }
inline bool is_zero_scalar(const CRat& c) { return c.is_zero(); }

// Sparse vector: index-sorted, no explicit zeros.
template <class K>
using SVec = std::vector<std::pair<int, K>>;

template <class K>
void svec_normalize(SVec<K>& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SVec<K> out;
    out.reserve(v.size());
    for (auto& [i, c] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.emplace_back(i, std::move(c));
    }
    std::erase_if(out, [](const auto& e) { return is_zero_scalar(e.second); });
    v = std::move(out);
}

// v += c * w, both sorted; result sorted, zero-free.
template <class K>
void svec_axpy(SVec<K>& v, const K& c, const SVec<K>& w) {
    SVec<K> out;
    out.reserve(v.size() + w.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(std::move(v[i++]));
        } else if (i == v.size() || w[j].first < v[i].first) {
            K val = c * w[j].second;
            if (!is_zero_scalar(val)) out.emplace_back(w[j].first, std::move(val));
            ++j;
        } else {
            K val = v[i].second + c * w[j].second;
            if (!is_zero_scalar(val)) out.emplace_back(v[i].first, std::move(val));
            ++i, ++j;
        }
    }
    v = std::move(out);
}

template <class K>
void svec_scale(SVec<K>& v, const K& c) {
    if (is_zero_scalar(c)) {
        v.clear();
        return;
    }
    for (auto& [i, x] : v) x *= c;
}

// Incremental column echelon, triangular by pivot = largest index of the
// stored column ("low"). Columns are normalized to pivot coefficient 1.
template <class K>
class Echelon {
  public:
    // Reduce v at its low repeatedly (rank-style reduction).
    void reduce_low(SVec<K>& v) const {
        while (!v.empty()) {
            int low = v.back().first;
            auto it = cols_.find(low);
            if (it == cols_.end()) return;
            K c = -v.back().second;
            svec_axpy(v, c, it->second);
        }
    }

    // Eliminate every pivot position present in v (canonical residual).
    void reduce_full(SVec<K>& v) const {
        // entries only move to smaller indices, one backward sweep suffices
        while (true) {
            int hit = -1;
            for (auto it = v.rbegin(); it != v.rend(); ++it) {
                if (cols_.count(it->first)) {
                    hit = it->first;
                    break;
                }
            }
            if (hit < 0) return;
            K c;
            for (auto& [i, x] : v)
                if (i == hit) c = -x;
            svec_axpy(v, c, cols_.at(hit));
        }
    }

    // Returns true if v enlarged the span.
    bool insert(SVec<K> v) {
        reduce_low(v);
        if (v.empty()) return false;
        K inv = K(1) / v.back().second;
        svec_scale(v, inv);
        int piv = v.back().first;
        cols_.emplace(piv, std::move(v));
        return true;
    }

    bool contains(SVec<K> v) const {
        reduce_low(v);
        return v.empty();
    }

    int rank() const { return static_cast<int>(cols_.size()); }
    bool has_pivot(int i) const { return cols_.count(i) != 0; }
    const std::map<int, SVec<K>>& columns() const { return cols_; }

  private:
    std::map<int, SVec<K>> cols_;
};

// Column-major sparse matrix over an exact field.
template <class K>
struct SparseMat {
    int rows = 0;
    std::vector<SVec<K>> cols;

    int ncols() const { return static_cast<int>(cols.size()); }

    SVec<K> apply(const SVec<K>& x) const {
        SVec<K> out;
        for (auto& [j, c] : x) svec_axpy(out, c, cols.at(j));
        return out;
    }
};

template <class K>
int rank(const SparseMat<K>& m) {
    Echelon<K> e;
    for (auto& c : m.cols) e.insert(c);
    return e.rank();
}

// Kernel basis via augmented reduction: track the combination that
// produced each residual; zero residual -> kernel element.
template <class K>
std::vector<SVec<K>> kernel_basis(const SparseMat<K>& m) {
    Echelon<K> main;
    std::map<int, SVec<K>> tails;  // pivot -> combination for that column
    std::vector<SVec<K>> out;
    for (int j = 0; j < m.ncols(); ++j) {
        SVec<K> v = m.cols[j];
        SVec<K> tail{{j, K(1)}};
        while (!v.empty() && main.has_pivot(v.back().first)) {
            int low = v.back().first;
            K c = -v.back().second;
            svec_axpy(v, c, main.columns().at(low));
            svec_axpy(tail, c, tails.at(low));
        }
        if (v.empty()) {
            out.push_back(std::move(tail));
        } else {
            K inv = K(1) / v.back().second;
            svec_scale(v, inv);
            svec_scale(tail, inv);
            int piv = v.back().first;
            tails.emplace(piv, std::move(tail));
            main.insert(std::move(v));
        }
    }
    return out;
}

// Solve m x = b; returns false if inconsistent.
template <class K>
bool solve(const SparseMat<K>& m, SVec<K> b, SVec<K>& x) {
    Echelon<K> main;
    std::map<int, SVec<K>> tails;
    for (int j = 0; j < m.ncols(); ++j) {
        SVec<K> v = m.cols[j];
        SVec<K> tail{{j, K(1)}};
        while (!v.empty() && main.has_pivot(v.back().first)) {
            int low = v.back().first;
            K c = -v.back().second;
            svec_axpy(v, c, main.columns().at(low));
            svec_axpy(tail, c, tails.at(low));
        }
        if (!v.empty()) {
            K inv = K(1) / v.back().second;
            svec_scale(v, inv);
            svec_scale(tail, inv);
            tails.emplace(v.back().first, tail);
            main.insert(std::move(v));
        }
    }
    SVec<K> comb;
    while (!b.empty() && main.has_pivot(b.back().first)) {
        int low = b.back().first;
        K c = -b.back().second;
        svec_axpy(b, c, main.columns().at(low));
        svec_axpy(comb, c, tails.at(low));
    }
    if (!b.empty()) return false;
    svec_scale(comb, K(-1));
    x = std::move(comb);
    return true;
}

// int64 fraction fast path for integer homology boundary ranks; throws
// FracOverflow so callers can retry with Rat.
struct FracOverflow : std::overflow_error {
    FracOverflow() : std::overflow_error("Frac64 overflow") {}
};

struct Frac64 {
    int64_t n = 0, d = 1;  // canonical: gcd 1, d > 0

    Frac64() = default;
    Frac64(int v) : n(v) {}
    Frac64(int64_t num, int64_t den) : n(num), d(den) { canon(); }

    void canon() {
        if (d == 0) throw std::domain_error("Frac64 zero denominator");
        if (d < 0) { n = -n; d = -d; }
        int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
    }

    friend Frac64 operator*(const Frac64& a, const Frac64& b) {
        Frac64 x(a.n, b.d), y(b.n, a.d);  // cross-reduce first
        Frac64 r;
        if (__builtin_mul_overflow(x.n, y.n, &r.n)) throw FracOverflow();
        if (__builtin_mul_overflow(x.d, y.d, &r.d)) throw FracOverflow();
        return r;
    }
    friend Frac64 operator/(const Frac64& a, const Frac64& b) {
        if (b.n == 0) throw std::domain_error("Frac64 division by zero");
        return a * Frac64(b.d, b.n);
    }
    friend Frac64 operator+(const Frac64& a, const Frac64& b) {
        int64_t g = std::gcd(a.d, b.d);
        int64_t ad = a.d / g, bd = b.d / g;
        int64_t t1, t2, num, den;
        if (__builtin_mul_overflow(a.n, bd, &t1)) throw FracOverflow();
        if (__builtin_mul_overflow(b.n, ad, &t2)) throw FracOverflow();
        if (__builtin_add_overflow(t1, t2, &num)) throw FracOverflow();
        if (__builtin_mul_overflow(a.d, bd, &den)) throw FracOverflow();
        return Frac64(num, den);
    }
    Frac64 operator-() const { Frac64 r; r.n = -n; r.d = d; return r; }
    friend Frac64 operator-(const Frac64& a, const Frac64& b) { return a + (-b); }
    Frac64& operator+=(const Frac64& o) { *this = *this + o; return *this; }
    Frac64& operator*=(const Frac64& o) { *this = *this * o; return *this; }
    friend bool operator==(const Frac64& a, const Frac64& b) {
        return a.n == b.n && a.d == b.d;
    }
};

inline bool is_zero_scalar(const Frac64& f) { return f.n == 0; }

// Rank of an integer-entry sparse matrix: Frac64 first, Rat on overflow.
int rank_int_matrix(int rows, const std::vector<SVec<int>>& cols);

}  // namespace rho
