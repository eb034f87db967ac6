#include "urep/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace urep {

MPoly MPoly::constant(size_t nvars, Rat c) {
    MPoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(size_t nvars, size_t i, int power) {
    MPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[i] = power;
    p.add_term(e, Rat(1));
    return p;
}

void MPoly::add_term(const std::vector<int>& expo, const Rat& c) {
    if (c == 0) return;
    if (expo.size() != nvars_) throw std::invalid_argument("MPoly: exponent arity mismatch");
    auto [it, inserted] = terms_.try_emplace(expo, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("MPoly: arity mismatch");
    MPoly out(a.nvars_);
    for (const auto& [e1, c1] : a.terms_)
        for (const auto& [e2, c2] : b.terms_) {
            std::vector<int> e(e1);
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

void MPoly::scale(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& [e, v] : terms_) v *= c;
}

MPoly MPoly::derivative(size_t var) const {
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<int> d(e);
        --d[var];
        out.add_term(d, c * e[var]);
    }
    return out;
}

MPoly MPoly::shifted(size_t var, long long shift) const {
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        // (x+shift)^k expanded by binomials
        for (int j = e[var]; j >= 0; --j) {
            // coefficient of x^j: C(k, j) shift^{k-j}
            std::vector<int> d(e);
            d[var] = j;
            Int choose;
            mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(e[var]),
                         static_cast<unsigned long>(j));
            Int sp = 1;
            for (int t = 0; t < e[var] - j; ++t) sp *= to_int(shift);
            out.add_term(d, c * Rat(choose * sp));
        }
    }
    return out;
}

Rat MPoly::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("MPoly: evaluation arity mismatch");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

MPoly MPoly::partial_evaluate(size_t var, const Rat& value) const {
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int k = 0; k < e[var]; ++k) t *= value;
        std::vector<int> d(e);
        d[var] = 0;
        out.add_term(d, t);
    }
    return out;
}

MPoly MPoly::divide_by_linear_difference(size_t i, size_t j) const {
    // Long division by (x_i - x_j), exact by construction of the callers.
    MPoly rem = *this;
    MPoly quot(nvars_);
    while (!rem.terms_.empty()) {
        // pick a term with maximal exponent of x_i
        auto best = rem.terms_.begin();
        for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it)
            if (it->first[i] > best->first[i]) best = it;
        if (best->first[i] == 0) throw std::logic_error("division by (x_i - x_j): nonzero remainder");
        std::vector<int> q(best->first);
        --q[i];
        Rat c = best->second;
        quot.add_term(q, c);
        // subtract c * x^q * (x_i - x_j)
        std::vector<int> t1(q);
        ++t1[i];
        std::vector<int> t2(q);
        ++t2[j];
        rem.add_term(t1, Rat(-c));
        rem.add_term(t2, c);
    }
    return quot;
}

bool MPoly::is_symmetric() const {
    for (size_t i = 0; i + 1 < nvars_; ++i) {
        for (const auto& [e, c] : terms_) {
            std::vector<int> s(e);
            std::swap(s[i], s[i + 1]);
            auto it = terms_.find(s);
            if (it == terms_.end() || it->second != c) return false;
        }
    }
    return true;
}

int MPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

MPoly vandermonde_poly(size_t nvars) {
    MPoly v = MPoly::constant(nvars, Rat(1));
    for (size_t i = 0; i < nvars; ++i)
        for (size_t j = i + 1; j < nvars; ++j)
            v = v * (MPoly::variable(nvars, i) - MPoly::variable(nvars, j));
    return v;
}

MPoly divide_by_vandermonde(const MPoly& p) {
    MPoly q = p;
    for (size_t i = 0; i < p.nvars(); ++i)
        for (size_t j = i + 1; j < p.nvars(); ++j) q = q.divide_by_linear_difference(i, j);
    return q;
}

MPoly elementary_symmetric(size_t nvars, size_t k) {
    MPoly out(nvars);
    if (k > nvars) return out;
    std::vector<size_t> pick;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (pick.size() == k) {
            std::vector<int> e(nvars, 0);
            for (size_t i : pick) e[i] = 1;
            out.add_term(e, Rat(1));
            return;
        }
        for (size_t i = start; i < nvars; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

MPoly monomial_symmetric(size_t nvars, const std::vector<int>& kappa) {
    std::vector<int> e(kappa);
    e.resize(nvars, 0);
    std::sort(e.begin(), e.end());
    MPoly out(nvars);
    do {
        out.add_term(e, Rat(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

std::map<std::vector<int>, Rat> decompose_in_elementary(const MPoly& f) {
    const size_t m = f.nvars();
    std::map<std::vector<int>, Rat> out;
    MPoly rem = f;
    std::vector<MPoly> e(m + 1);
    for (size_t k = 0; k <= m; ++k) e[k] = elementary_symmetric(m, k);
    while (!rem.is_zero()) {
        // leading term in lex order; for symmetric rem its exponent is a partition
        auto lead = rem.terms().rbegin();
        std::vector<int> lam(lead->first);
        Rat c = lead->second;
        for (size_t i = 0; i + 1 < lam.size(); ++i)
            if (lam[i] < lam[i + 1]) throw std::invalid_argument("decompose_in_elementary: not symmetric");
        // e-exponents: lam_i - lam_{i+1} copies of e_i
        std::vector<int> expo(m, 0);
        MPoly prod = MPoly::constant(m, Rat(1));
        for (size_t i = 0; i < m; ++i) {
            int next = (i + 1 < m) ? lam[i + 1] : 0;
            int mult = lam[i] - next;
            expo[i] = mult;
            for (int t = 0; t < mult; ++t) prod = prod * e[i + 1];
        }
        prod.scale(c);
        rem -= prod;
        out[expo] += c;
        if (out[expo] == 0) out.erase(expo);
    }
    return out;
}

}  // namespace urep
