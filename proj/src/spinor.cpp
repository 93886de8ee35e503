#include "sympclif/spinor.hpp"

#include <cmath>
#include <stdexcept>

namespace sympclif {

Spinor Spinor::unit(int n, Scalar c) {
    Spinor s(n);
    if (!c.is_zero()) s.terms[SMono(3 * n, 0)] = std::move(c);
    return s;
}

Spinor Spinor::monomial(int n, const SMono& m, Scalar c) {
    if (static_cast<int>(m.size()) != 3 * n)
        throw std::invalid_argument("Spinor::monomial: bad exponent vector");
    Spinor s(n);
    if (!c.is_zero()) s.terms[m] = std::move(c);
    return s;
}

Spinor Spinor::variable(Gen g, int j, int n) {
    if (g != Gen::X && g != Gen::Y && g != Gen::Q)
        throw std::invalid_argument("Spinor::variable: not a multiplication generator");
    if (j < 1 || j > n) throw std::invalid_argument("Spinor::variable: index out of range");
    SMono m(3 * n, 0);
    m[gen_slot(g, j, n)] = 1;
    return monomial(n, m);
}

void Spinor::add_term(const SMono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

Spinor Spinor::operator+(const Spinor& o) const {
    if (n != o.n) throw std::invalid_argument("Spinor: dimension mismatch");
    Spinor r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

Spinor Spinor::operator-(const Spinor& o) const {
    if (n != o.n) throw std::invalid_argument("Spinor: dimension mismatch");
    Spinor r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, -c);
    return r;
}

Spinor Spinor::operator-() const {
    Spinor r(n);
    for (const auto& [m, c] : terms) r.terms[m] = -c;
    return r;
}

Spinor Spinor::operator*(const Scalar& c) const {
    Spinor r(n);
    if (c.is_zero()) return r;
    for (const auto& [m, s] : terms) r.add_term(m, s * c);
    return r;
}

namespace {

Spinor mul_var(const Spinor& s, int slot, Exp amount) {
    Spinor r(s.n);
    for (const auto& [m, c] : s.terms) {
        SMono mm = m;
        mm[slot] += amount;
        r.terms[mm] = c;
    }
    return r;
}

Spinor deriv_var(const Spinor& s, int slot) {
    Spinor r(s.n);
    for (const auto& [m, c] : s.terms) {
        if (!m[slot]) continue;
        SMono mm = m;
        mm[slot] -= 1;
        r.add_term(mm, c * Scalar::of(static_cast<long>(m[slot])));
    }
    return r;
}

}  // namespace

Spinor apply(const WeylElement& op, const Spinor& s) {
    if (op.n != s.n) throw std::invalid_argument("apply: dimension mismatch");
    const int n = s.n;
    Spinor out(n);
    for (const auto& [mono, coef] : op.terms) {
        Spinor cur = s;
        // all derivative generators act first (they commute among themselves)
        for (int j = 0; j < n; ++j)
            for (Exp e = 0; e < mono[3 * n + j]; ++e) cur = deriv_var(cur, j);
        for (int j = 0; j < n; ++j)
            for (Exp e = 0; e < mono[4 * n + j]; ++e) cur = deriv_var(cur, n + j);
        for (int j = 0; j < n; ++j)
            for (Exp e = 0; e < mono[5 * n + j]; ++e)
                cur = deriv_var(cur, 2 * n + j) - mul_var(cur, 2 * n + j, 1);
        for (int j = 0; j < 3 * n; ++j)
            if (mono[j]) cur = mul_var(cur, j, mono[j]);
        for (const auto& [m, c] : cur.terms) out.add_term(m, c * coef);
    }
    return out;
}

Spinor hermite_unnorm(int k) {
    if (k < 0) throw std::invalid_argument("hermite_unnorm: negative index");
    WeylElement raise = WeylElement::generator(Gen::Q, 1, 1) - WeylElement::generator(Gen::Dq, 1, 1);
    Spinor s = Spinor::unit(1);
    for (int i = 0; i < k; ++i) s = apply(raise, s);
    return s;
}

int base_degree(const SMono& m, int n) {
    int d = 0;
    for (int j = 0; j < 2 * n; ++j) d += static_cast<int>(m[j]);
    return d;
}

std::map<int, Spinor> grade(const Spinor& s) {
    std::map<int, Spinor> out;
    for (const auto& [m, c] : s.terms) {
        int h = base_degree(m, s.n);
        auto it = out.find(h);
        if (it == out.end()) it = out.emplace(h, Spinor(s.n)).first;
        it->second.add_term(m, c);
    }
    return out;
}

bool base_homogeneous(const Spinor& s, int& deg) {
    deg = 0;
    bool first = true;
    for (const auto& [m, c] : s.terms) {
        int h = base_degree(m, s.n);
        if (first) {
            deg = h;
            first = false;
        } else if (h != deg) {
            return false;
        }
    }
    return true;
}

Spinor poly_mul(const Spinor& a, const Spinor& b) {
    if (a.n != b.n) throw std::invalid_argument("poly_mul: dimension mismatch");
    Spinor r(a.n);
    for (const auto& [m1, c1] : a.terms)
        for (const auto& [m2, c2] : b.terms) {
            SMono m = m1;
            for (size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
            r.add_term(m, c1 * c2);
        }
    return r;
}

Spinor poly_pow(const Spinor& a, int k) {
    Spinor r = Spinor::unit(a.n);
    for (int i = 0; i < k; ++i) r = poly_mul(r, a);
    return r;
}

Spinor poly_derivative(const Spinor& a, Gen g, int j) {
    return deriv_var(a, gen_slot(g, j, a.n));
}

std::string Spinor::str() const {
    if (terms.empty()) return "0";
    static const char* name[3] = {"x", "y", "q"};
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) out += " + ";
        first = false;
        std::string factors;
        for (int g = 0; g < 3; ++g)
            for (int j = 0; j < n; ++j) {
                Exp e = m[g * n + j];
                if (!e) continue;
                factors += "*";
                factors += name[g];
                if (n > 1) factors += std::to_string(j + 1);
                if (e > 1) factors += "^" + std::to_string(e);
            }
        if (factors.empty()) {
            out += c.str();
        } else if (c == Scalar::one()) {
            out += factors.substr(1);
        } else {
            std::string cs = c.str();
            out += (c.terms().size() > 1 ? "(" + cs + ")" : cs) + factors;
        }
    }
    return out;
}

std::map<SMono, std::complex<double>> to_float(const Spinor& s, std::complex<double> alpha_value) {
    std::map<SMono, std::complex<double>> out;
    for (const auto& [m, c] : s.terms) out[m] = c.to_float(alpha_value);
    return out;
}

double float_distance(const Spinor& a, const Spinor& b, double scale_a, double scale_b) {
    auto fa = to_float(a);
    auto fb = to_float(b);
    double worst = 0.0;
    auto upd = [&](const SMono& m) {
        std::complex<double> va{0, 0}, vb{0, 0};
        if (auto it = fa.find(m); it != fa.end()) va = it->second / scale_a;
        if (auto it = fb.find(m); it != fb.end()) vb = it->second / scale_b;
        worst = std::max(worst, std::abs(va - vb));
    };
    for (const auto& [m, c] : fa) upd(m);
    for (const auto& [m, c] : fb) upd(m);
    return worst;
}

}  // namespace sympclif
