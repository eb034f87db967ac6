#include "urep/ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace urep {

RingElement RingElement::unit(Basis b) {
    RingElement e(b);
    e.add_term(Signature(), GRat(1));
    return e;
}

RingElement RingElement::monomial(Basis b, Signature s, GRat c) {
    RingElement e(b);
    e.add_term(s, c);
    return e;
}

void RingElement::add_term(const Signature& s, const GRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GRat RingElement::coefficient(const Signature& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? GRat(0) : it->second;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    if (basis_ != o.basis_) throw std::invalid_argument("adding elements in different bases");
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    if (basis_ != o.basis_) throw std::invalid_argument("subtracting elements in different bases");
    for (const auto& [s, c] : o.terms_) add_term(s, -c);
    return *this;
}

void RingElement::scale(const GRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return;
    }
    for (auto& [s, v] : terms_) v *= c;
}

std::string sig_to_string(const Signature& s) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < s.length(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    os << ']';
    return os.str();
}

std::string RingElement::first_difference(const RingElement& a, const RingElement& b) {
    std::map<Signature, GRat> diff;
    for (const auto& [s, c] : a.terms_) diff[s] = c;
    for (const auto& [s, c] : b.terms_) {
        auto it = diff.find(s);
        if (it == diff.end())
            diff[s] = -c;
        else {
            it->second -= c;
            if (it->second.is_zero()) diff.erase(it);
        }
    }
    for (auto it = diff.begin(); it != diff.end();) {
        if (it->second.is_zero())
            it = diff.erase(it);
        else
            ++it;
    }
    if (diff.empty()) return {};
    const auto& [s, c] = *diff.begin();
    std::ostringstream os;
    os << sig_to_string(s) << ": lhs-rhs = " << grat_to_string(c);
    return os.str();
}

namespace {

// Shift all parts by d so they become partitions; trailing zeros implied.
std::vector<long long> shifted(const Signature& s, long long d) {
    std::vector<long long> p(s.parts());
    for (long long& x : p) x += d;
    return p;
}

// Semistandard fillings of `shape` with exactly content[v-1] entries equal to v.
Int count_ssyt(const std::vector<long long>& shape, const std::vector<long long>& content) {
    const size_t rows = shape.size();
    const size_t vals = content.size();
    std::vector<long long> remaining(content);
    std::vector<std::vector<int>> t(rows);
    for (size_t r = 0; r < rows; ++r) t[r].assign(static_cast<size_t>(std::max<long long>(shape[r], 0)), 0);

    Int count = 0;
    std::function<void(size_t, size_t)> fill = [&](size_t r, size_t c) {
        while (r < rows && c >= t[r].size()) {
            ++r;
            c = 0;
        }
        if (r == rows) {
            ++count;
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0 && c < t[r - 1].size()) lo = std::max(lo, t[r - 1][c] + 1);
        lo = std::max<int>(lo, static_cast<int>(r) + 1);
        for (int v = lo; v <= static_cast<int>(vals); ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            t[r][c] = v;
            fill(r, c + 1);
            ++remaining[v - 1];
        }
    };
    fill(0, 0);
    return count;
}

// Littlewood-Richardson fillings of the skew shape outer/inner with content nu:
// semistandard rows/columns and a lattice reverse reading word.
Int count_lr(const std::vector<long long>& outer, const std::vector<long long>& inner,
             const std::vector<long long>& content) {
    const size_t rows = outer.size();
    for (size_t r = 0; r < rows; ++r) {
        long long in = r < inner.size() ? inner[r] : 0;
        if (in > outer[r]) return 0;
    }
    const size_t vals = content.size();
    std::vector<long long> counts(vals, 0);
    std::vector<std::vector<int>> t(rows);
    for (size_t r = 0; r < rows; ++r) t[r].assign(static_cast<size_t>(outer[r]), 0);

    Int total = 0;
    // Cells visited in reverse-reading order: each row right-to-left, rows top-down.
    std::function<void(size_t, long long)> fill = [&](size_t r, long long c) {
        while (r < rows) {
            long long in = r < inner.size() ? inner[r] : 0;
            if (c >= in) break;
            ++r;
            if (r < rows) c = outer[r] - 1;
        }
        if (r == rows) {
            ++total;
            return;
        }
        int hi = static_cast<int>(vals);
        if (c + 1 < outer[r]) hi = std::min(hi, t[r][static_cast<size_t>(c) + 1]);  // row weakly increasing
        int lo = 1;
        if (r > 0 && c >= (r - 1 < inner.size() ? inner[r - 1] : 0) && c < outer[r - 1])
            lo = std::max(lo, t[r - 1][static_cast<size_t>(c)] + 1);  // column strict
        for (int v = lo; v <= hi; ++v) {
            if (counts[v - 1] + 1 > content[v - 1]) continue;
            if (v > 1 && counts[v - 1] + 1 > counts[v - 2]) continue;  // lattice word
            ++counts[v - 1];
            t[r][static_cast<size_t>(c)] = v;
            fill(r, c - 1);
            --counts[v - 1];
        }
    };
    if (rows == 0) return 1;
    fill(0, outer[0] - 1);
    return total;
}

}  // namespace

Int kostka_number(const Signature& lambda, const Signature& mu) {
    if (lambda.length() != mu.length()) throw std::invalid_argument("kostka_number: unequal lengths");
    if (lambda.empty()) return 1;
    if (lambda.sum() != mu.sum()) return 0;
    if (!dominance_leq(mu, lambda)) return 0;
    long long d = std::max<long long>(0, -std::min(lambda.min_part(), mu.min_part()));
    return count_ssyt(shifted(lambda, d), shifted(mu, d));
}

Int lr_coefficient(const Signature& lambda, const Signature& mu, const Signature& nu) {
    if (lambda.length() != mu.length() + nu.length())
        throw std::invalid_argument("lr_coefficient: length(lambda) must be length(mu)+length(nu)");
    if (lambda.sum() != mu.sum() + nu.sum()) return 0;
    if (lambda.empty()) return 1;
    long long minp = lambda.min_part();
    if (!mu.empty()) minp = std::min(minp, mu.min_part());
    if (!nu.empty()) minp = std::min(minp, nu.min_part());
    long long d = std::max<long long>(0, -minp);

    std::vector<long long> lam = shifted(lambda, d);
    std::vector<long long> m1 = mu.empty() ? std::vector<long long>{} : shifted(mu, d);
    std::vector<long long> n1 = nu.empty() ? std::vector<long long>{} : shifted(nu, d);
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    while (!m1.empty() && m1.back() == 0) m1.pop_back();
    while (!n1.empty() && n1.back() == 0) n1.pop_back();
    if (m1.empty()) return (lam == n1) ? 1 : 0;
    if (n1.empty()) return (lam == m1) ? 1 : 0;
    return count_lr(lam, m1, n1);
}

RingElement sigma_to_phi(const Signature& lambda) {
    const size_t n = lambda.length();
    RingElement out(Basis::phi);
    if (n == 0) {
        out.add_term(Signature(), GRat(1));
        return out;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // sign via inversion count
        int inv = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        std::vector<long long> idx(n);
        for (size_t i = 0; i < n; ++i) idx[i] = lambda[i] - static_cast<long long>(i) + perm[i];
        std::sort(idx.begin(), idx.end(), std::greater<>());
        out.add_term(Signature(std::move(idx)), GRat(Rat(inv % 2 == 0 ? 1 : -1)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

RingElement phi_to_sigma_window(const RingElement& e, const Window& w) {
    if (e.basis() != Basis::phi) throw std::invalid_argument("phi_to_sigma_window: element must be in phi basis");
    for (const auto& [s, c] : e.terms())
        if (!w.contains(s)) throw std::domain_error("phi_to_sigma_window: monomial support outside window");

    RingElement out(Basis::sigma);
    // group keys by (length, coordinate sum); classes do not interact
    std::map<std::pair<size_t, long long>, std::vector<std::pair<Signature, GRat>>> groups;
    for (const auto& [s, c] : e.terms()) groups[{s.length(), s.sum()}].push_back({s, c});

    for (const auto& [key, terms] : groups) {
        const auto [len, sum] = key;
        if (len == 0) {
            out.add_term(Signature(), terms.front().second);
            continue;
        }
        for (const Signature& lam : signatures_in_window(len, w.lo, w.hi)) {
            if (lam.sum() != sum) continue;
            GRat b(0);
            for (const auto& [mu, c] : terms) {
                Int k = kostka_number(lam, mu);
                if (k != 0) b += c * GRat(Rat(k));
            }
            out.add_term(lam, b);
        }
    }
    return out;
}

RingElement multiply(const RingElement& a, const RingElement& b) {
    if (a.basis() != b.basis()) throw std::invalid_argument("multiply: mixed bases (convert first)");
    RingElement out(a.basis());
    if (a.basis() == Basis::phi) {
        for (const auto& [s1, c1] : a.terms())
            for (const auto& [s2, c2] : b.terms()) {
                std::vector<long long> merged;
                merged.reserve(s1.length() + s2.length());
                merged.insert(merged.end(), s1.parts().begin(), s1.parts().end());
                merged.insert(merged.end(), s2.parts().begin(), s2.parts().end());
                std::sort(merged.begin(), merged.end(), std::greater<>());
                out.add_term(Signature(std::move(merged)), c1 * c2);
            }
        return out;
    }
    // sigma basis: only scalar factors give finite products
    auto is_scalar = [](const RingElement& e) {
        for (const auto& [s, c] : e.terms())
            if (!s.empty()) return false;
        return true;
    };
    if (is_scalar(a) || is_scalar(b)) {
        const RingElement& scalar = is_scalar(a) ? a : b;
        const RingElement& other = is_scalar(a) ? b : a;
        RingElement scaled = other;
        scaled.scale(scalar.coefficient(Signature()));
        return scaled;
    }
    throw std::invalid_argument(
        "multiply: a sigma-basis product is an infinite series; use multiply_sigma_window");
}

RingElement multiply_sigma_window(const RingElement& a, const RingElement& b, const Window& w) {
    if (a.basis() != Basis::sigma || b.basis() != Basis::sigma)
        throw std::invalid_argument("multiply_sigma_window: sigma basis required");
    RingElement out(Basis::sigma);
    for (const auto& [mu, c1] : a.terms())
        for (const auto& [nu, c2] : b.terms()) {
            GRat c = c1 * c2;
            if (mu.empty() || nu.empty()) {
                Signature lam = mu.empty() ? nu : mu;
                if (w.contains(lam)) out.add_term(lam, c);
                continue;
            }
            long long target = mu.sum() + nu.sum();
            for (const Signature& lam : signatures_in_window(mu.length() + nu.length(), w.lo, w.hi)) {
                if (lam.sum() != target) continue;
                Int coef = lr_coefficient(lam, mu, nu);
                if (coef != 0) out.add_term(lam, c * GRat(Rat(coef)));
            }
        }
    return out;
}

RingElement phi_times_sigma(const Signature& mu, const Window& w) {
    RingElement out(Basis::sigma);
    for (const Signature& lam : interlacing_above(mu, w.lo, w.hi)) out.add_term(lam, GRat(1));
    return out;
}

RingElement truncate(const RingElement& e, const Window& w) {
    // In the phi basis this is literal monomial truncation. In the sigma basis
    // the quotient map sends sigma_lambda with lambda outside the window to 0
    // and is the identity on the rest, so the same key filter applies.
    RingElement out(e.basis());
    for (const auto& [s, c] : e.terms())
        if (w.contains(s)) out.add_term(s, c);
    return out;
}

Rat norm(const RingElement& e) {
    if (e.basis() != Basis::sigma) throw std::invalid_argument("norm: element must be in sigma basis");
    std::map<size_t, Rat> per_degree;
    for (const auto& [s, c] : e.terms()) {
        if (!c.is_real()) throw std::invalid_argument("norm: requires real rational coefficients");
        Rat a = abs(c.re);
        Rat ratio = a / Rat(weyl_dimension(s));
        auto [it, inserted] = per_degree.try_emplace(s.length(), ratio);
        if (!inserted && ratio > it->second) it->second = ratio;
    }
    Rat total = 0;
    for (const auto& [deg, v] : per_degree) total += v;
    return total;
}

nlohmann::json ring_element_to_json(const RingElement& e) {
    nlohmann::json j;
    j["basis"] = e.basis() == Basis::phi ? "phi" : "sigma";
    j["terms"] = nlohmann::json::array();
    for (const auto& [s, c] : e.terms()) {
        nlohmann::json t;
        t["sig"] = s.parts();
        t["num"] = c.re.get_num().get_str();
        t["den"] = c.re.get_den().get_str();
        if (!c.is_real()) {
            t["inum"] = c.im.get_num().get_str();
            t["iden"] = c.im.get_den().get_str();
        }
        j["terms"].push_back(std::move(t));
    }
    return j;
}

RingElement ring_element_from_json(const nlohmann::json& j) {
    std::string b = j.at("basis").get<std::string>();
    if (b != "phi" && b != "sigma") throw std::invalid_argument("bad basis tag: " + b);
    RingElement e(b == "phi" ? Basis::phi : Basis::sigma);
    for (const auto& t : j.at("terms")) {
        Signature s(t.at("sig").get<std::vector<long long>>());
        Rat re(Int(t.at("num").get<std::string>()), Int(t.at("den").get<std::string>()));
        re.canonicalize();
        Rat im(0);
        if (t.contains("inum")) {
            im = Rat(Int(t.at("inum").get<std::string>()), Int(t.at("iden").get<std::string>()));
            im.canonicalize();
        }
        e.add_term(s, GRat(re, im));
    }
    return e;
}

}  // namespace urep
