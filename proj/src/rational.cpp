#include "rho/rational.hpp"

#include <cctype>

namespace rho {

double to_double(const Rat& r) { return r.convert_to<double>(); }
double to_double_re(const CRat& c) { return to_double(c.re); }

namespace {

size_t skip_ws(const std::string& s, size_t i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i;
}

// parses [+-]?digits(/digits)? starting at i, advances i
Rat parse_rat_at(const std::string& s, size_t& i) {
    i = skip_ws(s, i);
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    size_t d0 = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == d0) throw std::invalid_argument("bad rational: " + s);
    Rat r(s.substr(d0, i - d0).c_str());
    if (i < s.size() && s[i] == '/') {
        ++i;
        size_t dd = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == dd) throw std::invalid_argument("bad rational: " + s);
        Rat den(s.substr(dd, i - dd).c_str());
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
        r /= den;  // division canonicalizes
    }
    return neg ? Rat(-r) : r;
}

}  // namespace

Rat parse_rat(const std::string& s) {
    size_t i = 0;
    Rat r = parse_rat_at(s, i);
    i = skip_ws(s, i);
    if (i != s.size()) throw std::invalid_argument("trailing junk in rational: " + s);
    return r;
}

std::string render_rat(const Rat& r) {
    std::string n = numerator(r).str();
    if (denominator(r) == 1) return n;
    return n + "/" + denominator(r).str();
}

CRat parse_crat(const std::string& s) {
    // forms: "a", "a+b i", "a-b i", "b i", "-b i"; rationals as p/q
    size_t i = 0;
    Rat first = parse_rat_at(s, i);
    i = skip_ws(s, i);
    if (i == s.size()) return CRat(first);
    if (s[i] == 'i') {
        ++i;
        i = skip_ws(s, i);
        if (i != s.size()) throw std::invalid_argument("trailing junk in number: " + s);
        return CRat(Rat(0), first);
    }
    if (s[i] != '+' && s[i] != '-')
        throw std::invalid_argument("bad number: " + s);
    Rat second = parse_rat_at(s, i);  // consumes the sign
    i = skip_ws(s, i);
    if (i == s.size() || s[i] != 'i')
        throw std::invalid_argument("expected i in number: " + s);
    ++i;
    i = skip_ws(s, i);
    if (i != s.size()) throw std::invalid_argument("trailing junk in number: " + s);
    return CRat(first, second);
}

std::string render_crat(const CRat& c) {
    if (c.is_zero()) return "0";
    if (c.im == 0) return render_rat(c.re);
    std::string im_part = render_rat(abs(c.im)) + " i";
    if (c.re == 0) return (c.im < 0 ? "-" : "") + im_part;
    return render_rat(c.re) + (c.im < 0 ? "-" : "+") + im_part;
}

}  // namespace rho
