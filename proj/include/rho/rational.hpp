#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace rho {

using Rat = boost::multiprecision::mpq_rational;

// Gaussian rational a + b*i. std::complex requires a floating point type,
// so we roll our own.
struct CRat {
    Rat re{0};
    Rat im{0};

    CRat() = default;
    CRat(int v) : re(v) {}
    CRat(long v) : re(v) {}
    CRat(const Rat& r) : re(r) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    CRat conj() const { return {re, -im}; }

    CRat operator-() const { return {-re, -im}; }
    CRat& operator+=(const CRat& o) { re += o.re; im += o.im; return *this; }
    CRat& operator-=(const CRat& o) { re -= o.re; im -= o.im; return *this; }

    friend CRat operator+(CRat a, const CRat& b) { a += b; return a; }
    friend CRat operator-(CRat a, const CRat& b) { a -= b; return a; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CRat operator/(const CRat& a, const CRat& b) {
        Rat n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("CRat division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    CRat& operator*=(const CRat& o) { *this = *this * o; return *this; }
    CRat& operator/=(const CRat& o) { *this = *this / o; return *this; }

    friend bool operator==(const CRat& a, const CRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
    friend bool operator<(const CRat& a, const CRat& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

inline CRat crat_i() { return {Rat(0), Rat(1)}; }

double to_double(const Rat& r);
double to_double_re(const CRat& c);

// "p/q" or "p"; sign on the numerator.
Rat parse_rat(const std::string& s);
std::string render_rat(const Rat& r);

// "a/b+c/d i", "a/b", "c/d i", "0"; used by all JSON and CSV payloads.
CRat parse_crat(const std::string& s);
std::string render_crat(const CRat& c);

}  // namespace rho
