#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace urep {

using Int = mpz_class;
using Rat = mpq_class;

// GMP has no long long constructors; 64-bit long covers the desk-scale range.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

inline std::vector<Rat> to_rat_vec(const std::vector<long long>& v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (long long x : v) out.push_back(to_rat(x));
    return out;
}

/// Parses "p", "-p", or "p/q" (q > 0 after canonicalization).
Rat rat_from_string(const std::string& s);

/// Prints as "p" or "p/q" in lowest terms.
std::string rat_to_string(const Rat& r);

/// Gaussian rational: re + im*i with exact rational parts.
struct GRat {
    Rat re;
    Rat im;

    GRat() : re(0), im(0) {}
    GRat(int v) : re(v), im(0) {}
    GRat(long v) : re(v), im(0) {}
    GRat(Rat r) : re(std::move(r)), im(0) {}
    GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GRat conj() const { return {re, Rat(-im)}; }

    GRat& operator+=(const GRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GRat& operator-=(const GRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GRat& operator*=(const GRat& o) {
        Rat nre = re * o.re - im * o.im;
        Rat nim = re * o.im + im * o.re;
        re = nre;
        im = nim;
        return *this;
    }

    friend GRat operator+(GRat a, const GRat& b) { return a += b; }
    friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
    friend GRat operator*(GRat a, const GRat& b) { return a *= b; }
    friend GRat operator-(const GRat& a) { return {Rat(-a.re), Rat(-a.im)}; }
    friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }
};

GRat operator/(const GRat& a, const Rat& d);

/// Parses "p/q", "p/q+r/s i", "p/q-r/s i" (whitespace tolerated, "i" suffix on
/// the imaginary part). A bare "r/s i" is also accepted.
GRat grat_from_string(const std::string& s);

std::string grat_to_string(const GRat& g);

}  // namespace urep
