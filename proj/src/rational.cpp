#include "urep/rational.hpp"

#include <algorithm>
#include <cctype>

namespace urep {

Rat rat_from_string(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

GRat operator/(const GRat& a, const Rat& d) {
    if (d == 0) throw std::invalid_argument("division by zero");
    Rat re = a.re / d;
    Rat im = a.im / d;
    return {re, im};
}

GRat grat_from_string(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty scalar literal");

    // Split into real and imaginary chunks at a '+' or '-' that is not the
    // leading sign and not part of a denominator.
    bool has_imag = t.back() == 'i' || t.back() == 'I';
    if (!has_imag) return GRat(rat_from_string(t));

    t.pop_back();  // drop 'i'
    if (t.empty() || t == "+") return GRat(Rat(0), Rat(1));
    if (t == "-") return GRat(Rat(0), Rat(-1));

    size_t split = std::string::npos;
    for (size_t i = 1; i < t.size(); ++i) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '/' && t[i - 1] != '+' && t[i - 1] != '-')
            split = i;  // keep the last sign: imaginary part follows it
    }
    if (split == std::string::npos) return GRat(Rat(0), rat_from_string(t));
    std::string re_part = t.substr(0, split);
    std::string im_part = t.substr(split);
    if (im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    return GRat(rat_from_string(re_part), rat_from_string(im_part));
}

std::string grat_to_string(const GRat& g) {
    if (g.is_real()) return rat_to_string(g.re);
    std::string s;
    if (g.re != 0) s = rat_to_string(g.re);
    std::string im = rat_to_string(g.im);
    if (!s.empty() && im[0] != '-') s += '+';
    return s + im + "i";
}

}  // namespace urep
