#include "urep/orthopoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace urep {

Rat Poly1::evaluate(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly1 Poly1::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return Poly1(std::move(d));
}

Poly1 Poly1::shifted(long long shift) const {
    Poly1 out;
    Poly1 lin({to_rat(shift), Rat(1)});  // x + shift
    Poly1 pow = Poly1::constant(Rat(1));
    for (size_t k = 0; k < c_.size(); ++k) {
        Poly1 t = pow;
        t.scale(c_[k]);
        out += t;
        pow = pow * lin;
    }
    return out;
}

MPoly Poly1::as_mpoly(size_t nvars, size_t var) const {
    MPoly out(nvars);
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        std::vector<int> e(nvars, 0);
        e[var] = static_cast<int>(k);
        out.add_term(e, c_[k]);
    }
    return out;
}

Poly1& Poly1::operator+=(const Poly1& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly1(std::move(out));
}

void Poly1::scale(const Rat& v) {
    if (v == 0) {
        c_.clear();
        return;
    }
    for (Rat& x : c_) x *= v;
}

std::string Poly1::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Rat a = c_[k];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Rat mag = abs(a);
        if (mag != 1 || k == 0) os << rat_to_string(mag);
        if (k >= 1) {
            os << var;
            if (k >= 2) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Rat pochhammer(const Rat& x, long long p) {
    Rat acc = 1;
    for (long long t = 0; t < p; ++t) acc *= x + to_rat(t);
    return acc;
}

Poly1 hahn_poly(long long n, const HahnJacobiParams& p) {
    p.validate();
    if (n < 0 || n > p.M) throw std::domain_error("hahn_poly: family terminates at n = M");
    Poly1 out;
    Poly1 falling = Poly1::constant(Rat(1));  // (-y)_q = prod (-y+t)
    for (long long q = 0; q <= n; ++q) {
        Rat coef = pochhammer(to_rat(-n), q) * pochhammer(p.a + p.b + to_rat(n + 1), q);
        coef /= pochhammer(p.b + 1, q) * pochhammer(to_rat(-p.M), q) * pochhammer(Rat(1), q);
        Poly1 t = falling;
        t.scale(coef);
        out += t;
        falling = falling * Poly1({to_rat(q), Rat(-1)});  // multiply by (-y + q)
    }
    return out;
}

Poly1 jacobi_poly(long long n, const Rat& a, const Rat& b) {
    if (n < 0) throw std::domain_error("jacobi_poly: degree must be nonnegative");
    std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
    for (long long q = 0; q <= n; ++q) {
        Rat coef = pochhammer(to_rat(-n), q) * pochhammer(a + b + to_rat(n + 1), q);
        coef /= pochhammer(b + 1, q) * pochhammer(Rat(1), q);
        c[static_cast<size_t>(q)] = coef;
    }
    return Poly1(std::move(c));
}

Poly1 apply_hahn_operator(const HahnJacobiParams& p, const Poly1& f) {
    Poly1 fwd = f.shifted(1) - f;
    Poly1 bwd = f.shifted(-1) - f;
    Poly1 cf = Poly1({p.b + 1, Rat(1)}) * Poly1({to_rat(p.M), Rat(-1)});        // (y+b+1)(M-y)
    Poly1 cb = Poly1({Rat(0), Rat(1)}) * Poly1({to_rat(p.M) + p.a + 1, Rat(-1)});  // y(M+a+1-y)
    return cf * fwd + cb * bwd;
}

Poly1 apply_jacobi_operator(const Rat& a, const Rat& b, const Poly1& f) {
    Poly1 t1 = Poly1({Rat(0), Rat(1)}) * Poly1({Rat(1), Rat(-1)});  // t(1-t)
    Poly1 t2({b + 1, -(a + b + 2)});                                // b+1-(a+b+2)t
    return t1 * f.derivative().derivative() + t2 * f.derivative();
}

Rat conjugation_constant(const Rat& a, const Rat& b, size_t m) {
    Rat acc = 0;
    for (size_t n = 0; n < m; ++n) acc += Rat(static_cast<long>(n)) * (Rat(static_cast<long>(n)) + a + b + 1);
    return acc;
}

Rat multivariate_eigenvalue(const Rat& a, const Rat& b, const Signature& nu, size_t m) {
    auto c = [&](long long n) -> Rat { return to_rat(-n) * (to_rat(n) + a + b + 1); };
    Rat acc = 0;
    for (size_t i = 0; i < m; ++i) {
        long long part = i < nu.length() ? nu[i] : 0;
        long long mi = static_cast<long long>(m) - static_cast<long long>(i) - 1;
        acc += c(part + mi) - c(mi);
    }
    return acc;
}

namespace {
Poly1 family_poly(Family which, const HahnJacobiParams& p, long long n) {
    return which == Family::hahn ? hahn_poly(n, p) : jacobi_poly(n, p.a, p.b);
}

MPoly det_of_columns(const std::vector<Poly1>& cols, size_t m) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    MPoly det(m);
    do {
        int inv = 0;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) ++inv;
        MPoly prod = MPoly::constant(m, Rat(inv % 2 == 0 ? 1 : -1));
        for (size_t i = 0; i < m; ++i) prod = prod * cols[perm[i]].as_mpoly(m, i);
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}
}  // namespace

MPoly multivariate_poly(Family which, const HahnJacobiParams& p, const Signature& nu, size_t m) {
    if (nu.length() > m) throw std::invalid_argument("multivariate_poly: nu has more than m parts");
    if (!nu.empty() && nu.min_part() < 0)
        throw std::invalid_argument("multivariate_poly: nu must be a partition");
    std::vector<Poly1> cols(m);
    for (size_t j = 0; j < m; ++j) {
        long long part = j < nu.length() ? nu[j] : 0;
        long long n = part + static_cast<long long>(m) - static_cast<long long>(j) - 1;
        if (which == Family::hahn && n > p.M) throw std::domain_error("multivariate_poly: degree exceeds M");
        cols[j] = family_poly(which, p, n);
    }
    return divide_by_vandermonde(det_of_columns(cols, m));
}

MPoly apply_multivariate_operator(Family which, const HahnJacobiParams& p, size_t m,
                                  const MPoly& f) {
    if (f.nvars() != m) throw std::invalid_argument("apply_multivariate_operator: arity mismatch");
    if (!f.is_symmetric()) throw std::invalid_argument("apply_multivariate_operator: f must be symmetric");
    MPoly g = f * vandermonde_poly(m);
    MPoly h(m);
    for (size_t i = 0; i < m; ++i) {
        if (which == Family::jacobi) {
            MPoly ti = MPoly::variable(m, i);
            MPoly one = MPoly::constant(m, Rat(1));
            MPoly coef2 = ti * (one - ti);
            MPoly lin = MPoly::constant(m, p.b + 1) - ti * MPoly::constant(m, p.a + p.b + 2);
            h += coef2 * g.derivative(i).derivative(i) + lin * g.derivative(i);
        } else {
            MPoly yi = MPoly::variable(m, i);
            MPoly cf = (yi + MPoly::constant(m, p.b + 1)) * (MPoly::constant(m, to_rat(p.M)) - yi);
            MPoly cb = yi * (MPoly::constant(m, to_rat(p.M) + p.a + 1) - yi);
            h += cf * (g.shifted(i, 1) - g) + cb * (g.shifted(i, -1) - g);
        }
    }
    MPoly out = divide_by_vandermonde(h);
    MPoly cf = f;
    cf.scale(conjugation_constant(p.a, p.b, m));
    return out + cf;
}

std::vector<MPoly> phi_t_polys(size_t m) {
    // coefficients of u^0..u^m in prod_i (t_i + (1-t_i) u)
    std::vector<MPoly> coeffs{MPoly::constant(m, Rat(1))};
    for (size_t i = 0; i < m; ++i) {
        MPoly ti = MPoly::variable(m, i);
        MPoly oneminus = MPoly::constant(m, Rat(1)) - ti;
        std::vector<MPoly> next(coeffs.size() + 1, MPoly(m));
        for (size_t d = 0; d < coeffs.size(); ++d) {
            next[d] += coeffs[d] * ti;
            next[d + 1] += coeffs[d] * oneminus;
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

MPoly sym_from_phi_element(const RingElement& e, size_t m, long long l) {
    if (e.basis() != Basis::phi) throw std::invalid_argument("sym_from_phi_element: phi basis required");
    std::vector<MPoly> P = phi_t_polys(m);
    MPoly out(m);
    for (const auto& [s, c] : e.terms()) {
        if (!c.is_real()) throw std::invalid_argument("sym_from_phi_element: real coefficients required");
        MPoly prod = MPoly::constant(m, c.re);
        for (size_t i = 0; i < s.length(); ++i) {
            long long idx = s[i] + l;
            if (idx < 0 || idx > static_cast<long long>(m)) {
                prod = MPoly(m);  // phi vanishes identically outside the window
                break;
            }
            prod = prod * P[static_cast<size_t>(idx)];
        }
        out += prod;
    }
    return out;
}

namespace {

// Solve the linear dictionary between the window generators and the
// elementary symmetric polynomials: P_n = sum_j C[n][j] e_j, then invert.
std::vector<std::vector<Rat>> elementary_from_phi_matrix(size_t m) {
    std::vector<MPoly> P = phi_t_polys(m);
    size_t n = m + 1;
    std::vector<std::vector<Rat>> C(n, std::vector<Rat>(n, Rat(0)));
    for (size_t r = 0; r < n; ++r) {
        for (const auto& [expo, c] : decompose_in_elementary(P[r])) {
            int total = 0;
            size_t which = 0;
            for (size_t j = 0; j < expo.size(); ++j) {
                total += expo[j];
                if (expo[j] == 1) which = j + 1;
            }
            if (total == 0)
                C[r][0] = c;
            else if (total == 1)
                C[r][which] = c;
            else
                throw std::logic_error("window generators must be linear in the e-basis");
        }
    }
    // invert by Gauss-Jordan
    std::vector<std::vector<Rat>> A(C);
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("window generator matrix is singular");
        std::swap(A[piv], A[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = A[col][col];
        for (size_t j = 0; j < n; ++j) {
            A[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (size_t j = 0; j < n; ++j) {
                A[r][j] -= f * A[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    // C maps e -> P as P_r = sum_j C[r][j] e_j; the inverse gives
    // e_j = sum_n inv[j][n] P_n.
    return inv;
}

}  // namespace

RingElement lift_to_phi(const MPoly& f, size_t m, long long k, long long l) {
    if (k + l != static_cast<long long>(m) || k < 0 || l < 0)
        throw std::invalid_argument("lift_to_phi: need k+l = m with k,l >= 0");
    if (!f.is_symmetric()) throw std::invalid_argument("lift_to_phi: f must be symmetric");
    std::vector<std::vector<Rat>> einv = elementary_from_phi_matrix(m);  // e_j = sum_n einv[j][n] P_n

    // e_j (j>=1) as phi-linear elements; phi_n = P_{n+l}
    std::vector<RingElement> e_as_phi;
    for (size_t j = 0; j <= m; ++j) {
        RingElement lin(Basis::phi);
        for (size_t n = 0; n <= m; ++n)
            lin.add_term(Signature({static_cast<long long>(n) - l}), GRat(einv[j][n]));
        e_as_phi.push_back(std::move(lin));
    }

    RingElement out(Basis::phi);
    for (const auto& [expo, c] : decompose_in_elementary(f)) {
        RingElement prod = RingElement::unit(Basis::phi);
        for (size_t j = 0; j < expo.size(); ++j)
            for (int t = 0; t < expo[j]; ++t) prod = multiply(prod, e_as_phi[j + 1]);
        prod.scale(GRat(c));
        out += prod;
    }
    return out;
}

MPoly quotient_rate_operator(size_t m, const Rat& a, const Rat& b, const MPoly& f) {
    if (f.nvars() != m) throw std::invalid_argument("quotient_rate_operator: arity mismatch");
    ParameterQuadruple p{GRat(Rat(static_cast<long>(m))), GRat(Rat(static_cast<long>(m)) + a),
                         GRat(Rat(0)), GRat(b)};
    Window w(0, static_cast<long long>(m));
    RingElement psi = lift_to_phi(f, m, static_cast<long long>(m), 0);

    // split by degree, convert, act, map back
    std::map<size_t, RingElement> by_degree;
    for (const auto& [s, c] : psi.terms()) {
        auto [it, ins] = by_degree.try_emplace(s.length(), RingElement(Basis::phi));
        it->second.add_term(s, c);
    }
    std::vector<MPoly> P = phi_t_polys(m);
    auto sigma_hat_poly = [&](const Signature& lam) -> MPoly {
        const size_t n = lam.length();
        if (n == 0) return MPoly::constant(m, Rat(1));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        MPoly det(m);
        do {
            int inv = 0;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (perm[i] > perm[j]) ++inv;
            MPoly prod = MPoly::constant(m, Rat(inv % 2 == 0 ? 1 : -1));
            bool dead = false;
            for (size_t i = 0; i < n && !dead; ++i) {
                long long idx = lam[i] - static_cast<long long>(i) + perm[i];
                if (idx < 0 || idx > static_cast<long long>(m))
                    dead = true;
                else
                    prod = prod * P[static_cast<size_t>(idx)];
            }
            if (!dead) det += prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return det;
    };

    MPoly out(m);
    for (auto& [deg, comp] : by_degree) {
        RingElement sig = phi_to_sigma_window(comp, w);
        // keys outside the window die in the quotient (their sigma-hat vanishes)
        RingElement acted = truncate(apply_A(p, sig), w);
        for (const auto& [lam, c] : acted.terms()) {
            if (!c.is_real()) throw std::logic_error("rate operator produced non-real coefficient");
            MPoly t = sigma_hat_poly(lam);
            t.scale(c.re);
            out += t;
        }
    }
    return out;
}

bool verify_theorem_main_quotient(size_t m, const Rat& a, const Rat& b, const MPoly& f) {
    HahnJacobiParams p{a, b, 0};
    MPoly lhs = quotient_rate_operator(m, a, b, f);
    MPoly rhs = apply_multivariate_operator(Family::jacobi, p, m, f);
    return lhs == rhs;
}

bool verify_degenerate_reduction(long long k, long long l, const Rat& a, const Rat& b,
                                 const MPoly& f) {
    const size_t m = static_cast<size_t>(k + l);
    ParameterQuadruple p{GRat(to_rat(k)), GRat(to_rat(k) + a), GRat(to_rat(l)), GRat(to_rat(l) + b)};
    Window w(-l, k);
    RingElement psi = lift_to_phi(f, m, k, l);
    RingElement dpsi = apply_D_windowed(p, psi, w);
    MPoly lhs = sym_from_phi_element(dpsi, m, l);
    HahnJacobiParams hp{a, b, 0};
    MPoly rhs = apply_multivariate_operator(Family::jacobi, hp, m, f);
    return lhs == rhs;
}

namespace {

// f[t_r..t_s] with repeated nodes allowed (nodes sorted so equal values are
// adjacent); the confluent entries use derivatives.
Rat divided_difference(const Poly1& f, const std::vector<Rat>& nodes) {
    const size_t n = nodes.size();
    std::vector<std::vector<Rat>> dd(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Poly1> derivs{f};
    for (size_t d = 1; d < n; ++d) derivs.push_back(derivs.back().derivative());
    std::vector<Rat> fact{Rat(1)};
    for (size_t d = 1; d <= n; ++d) fact.push_back(fact.back() * Rat(static_cast<long>(d)));
    for (size_t r = 0; r < n; ++r) dd[r][r] = f.evaluate(nodes[r]);
    for (size_t len = 1; len < n; ++len)
        for (size_t r = 0; r + len < n; ++r) {
            size_t s = r + len;
            if (nodes[r] == nodes[s])
                dd[r][s] = derivs[len].evaluate(nodes[r]) / fact[len];
            else
                dd[r][s] = (dd[r + 1][s] - dd[r][s - 1]) / (nodes[s] - nodes[r]);
        }
    return dd[0][n - 1];
}

std::vector<Poly1> link_columns(size_t m, size_t N, const Signature& lambda, Rat& const_factor) {
    const long long M = static_cast<long long>(N + m - 1);
    RectangleComplement rc =
        complement_in_rectangle(lambda, static_cast<long long>(m), static_cast<long long>(N));
    std::vector<Poly1> cols;
    for (long long kj : rc.K.values) {
        Int choose;
        mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(M), static_cast<unsigned long>(kj));
        // C(M,k) x^k (1-x)^{M-k}
        Poly1 f = Poly1::constant(Rat(choose));
        for (long long t = 0; t < kj; ++t) f = f * Poly1::x();
        Poly1 oneminus({Rat(1), Rat(-1)});
        for (long long t = 0; t < M - kj; ++t) f = f * oneminus;
        cols.push_back(f);
    }
    Rat cst = 1;
    Int mfact = 1;
    for (long long t = 1; t <= M; ++t) mfact *= to_int(t);
    for (size_t i = 1; i <= m; ++i) {
        Int num = 1;
        for (long long t = 1; t <= M - static_cast<long long>(i) + 1; ++t) num *= to_int(t);
        Rat r(num, mfact);
        r.canonicalize();
        cst *= r;
    }
    const_factor = cst * Rat(vandermonde_int(rc.K.values));
    return cols;
}

}  // namespace

Rat hahn_link_row(const std::vector<Rat>& t, size_t N, const Signature& lambda) {
    const size_t m = t.size();
    if (m == 0) throw std::invalid_argument("hahn_link_row: need at least one coordinate");
    Rat const_factor;
    std::vector<Poly1> cols = link_columns(m, N, lambda, const_factor);

    std::vector<Rat> nodes(t);
    std::sort(nodes.begin(), nodes.end(), std::greater<>());
    // det[f_j(t_i)]/V(t) = (-1)^{m(m-1)/2} det of the prefix divided differences
    std::vector<std::vector<Rat>> D(m, std::vector<Rat>(m, Rat(0)));
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < m; ++i)
            D[i][j] = divided_difference(cols[j], std::vector<Rat>(nodes.begin(), nodes.begin() + i + 1));
    // Gaussian elimination determinant
    Rat det = 1;
    for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        while (piv < m && D[piv][col] == 0) ++piv;
        if (piv == m) return Rat(0);
        if (piv != col) {
            std::swap(D[piv], D[col]);
            det = -det;
        }
        det *= D[col][col];
        for (size_t r = col + 1; r < m; ++r) {
            Rat f = D[r][col] / D[col][col];
            for (size_t j = col; j < m; ++j) D[r][j] -= f * D[col][j];
        }
    }
    if ((m * (m - 1) / 2) % 2 == 1) det = -det;
    return const_factor * det;
}

MPoly hahn_link_poly(size_t m, size_t N, const Signature& lambda) {
    Rat const_factor;
    std::vector<Poly1> cols = link_columns(m, N, lambda, const_factor);
    MPoly det = det_of_columns(cols, m);
    MPoly out = divide_by_vandermonde(det);
    out.scale(const_factor);
    return out;
}

}  // namespace urep
