#include "sympclif/weyl.hpp"

#include <stdexcept>

namespace sympclif {

WeylElement WeylElement::unit(int n, Scalar c) {
    WeylElement w(n);
    if (!c.is_zero()) w.terms[Mono(6 * n, 0)] = std::move(c);
    return w;
}

WeylElement WeylElement::generator(Gen g, int j, int n, Exp power, Scalar c) {
    if (j < 1 || j > n) throw std::invalid_argument("WeylElement::generator: index out of range");
    WeylElement w(n);
    Mono m(6 * n, 0);
    m[gen_slot(g, j, n)] = power;
    if (!c.is_zero()) w.terms[m] = std::move(c);
    return w;
}

int WeylElement::order() const {
    int best = 0;
    for (const auto& [m, c] : terms) {
        int d = 0;
        for (Exp e : m) d += static_cast<int>(e);
        if (d > best) best = d;
    }
    return best;
}

void WeylElement::add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
    if (n != o.n) throw std::invalid_argument("WeylElement: dimension mismatch");
    WeylElement r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    if (n != o.n) throw std::invalid_argument("WeylElement: dimension mismatch");
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
    if (n != o.n) throw std::invalid_argument("WeylElement: dimension mismatch");
    WeylElement r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, -c);
    return r;
}

WeylElement WeylElement::operator-() const {
    WeylElement r(n);
    for (const auto& [m, c] : terms) r.terms[m] = -c;
    return r;
}

WeylElement WeylElement::operator*(const Scalar& c) const {
    WeylElement r(n);
    if (c.is_zero()) return r;
    for (const auto& [m, s] : terms) r.add_term(m, s * c);
    return r;
}

namespace {

// d^a u^b = sum_k C(a,k) C(b,k) k! u^(b-k) d^(a-k), per variable.
mpz_class cross_factor(Exp a, Exp b, Exp k) {
    mpz_class f1, f2, f3;
    mpz_bin_uiui(f1.get_mpz_t(), a, k);
    mpz_bin_uiui(f2.get_mpz_t(), b, k);
    mpz_fac_ui(f3.get_mpz_t(), k);
    return f1 * f2 * f3;
}

}  // namespace

WeylElement WeylElement::operator*(const WeylElement& o) const {
    if (n != o.n) throw std::invalid_argument("weyl_mul: dimension mismatch");
    WeylElement out(n);
    const int vars = 3 * n;
    std::vector<int> active;
    Mono m(6 * n, 0);
    for (const auto& [m1, c1] : terms) {
        for (const auto& [m2, c2] : o.terms) {
            // variables where a derivative of m1 meets a multiplication of m2
            active.clear();
            for (int v = 0; v < vars; ++v)
                if (m1[vars + v] > 0 && m2[v] > 0) active.push_back(v);
            for (int i = 0; i < 6 * n; ++i) m[i] = m1[i] + m2[i];
            Scalar base = c1 * c2;
            if (active.empty()) {
                out.add_term(m, base);
                continue;
            }
            // odometer over contraction orders k_v = 0..min(d1_v, p2_v)
            std::vector<Exp> kv(active.size(), 0);
            std::vector<Exp> kmax(active.size());
            for (size_t i = 0; i < active.size(); ++i)
                kmax[i] = std::min(m1[vars + active[i]], m2[active[i]]);
            while (true) {
                mpz_class f = 1;
                for (size_t i = 0; i < active.size(); ++i)
                    f *= cross_factor(m1[vars + active[i]], m2[active[i]], kv[i]);
                Mono mm = m;
                for (size_t i = 0; i < active.size(); ++i) {
                    mm[active[i]] -= kv[i];
                    mm[vars + active[i]] -= kv[i];
                }
                out.add_term(mm, base * Scalar::of_rat(Rat(f)));
                size_t pos = 0;
                while (pos < kv.size() && kv[pos] == kmax[pos]) { kv[pos] = 0; ++pos; }
                if (pos == kv.size()) break;
                ++kv[pos];
            }
        }
    }
    return out;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

WeylElement weyl_pow(const WeylElement& a, int k) {
    if (k < 0) throw std::invalid_argument("weyl_pow: negative exponent");
    WeylElement r = WeylElement::unit(a.n);
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

namespace {

const char* kGenName[6] = {"x", "y", "q", "dx", "dy", "dq"};

}  // namespace

std::string WeylElement::str() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) out += " + ";
        first = false;
        std::string factors;
        for (int g = 0; g < 6; ++g) {
            for (int j = 0; j < n; ++j) {
                Exp e = m[g * n + j];
                if (!e) continue;
                factors += "*";
                factors += kGenName[g];
                if (n > 1) factors += std::to_string(j + 1);
                if (e > 1) factors += "^" + std::to_string(e);
            }
        }
        if (factors.empty()) {
            out += c.str();
        } else if (c == Scalar::one()) {
            out += factors.substr(1);
        } else {
            std::string cs = c.str();
            bool needs_paren = c.terms().size() > 1;
            out += (needs_paren ? "(" + cs + ")" : cs) + factors;
        }
    }
    return out;
}

}  // namespace sympclif
