#include "sympclif/bases.hpp"

#include <cmath>
#include <stdexcept>

#include "sympclif/linalg.hpp"
#include "sympclif/oplib.hpp"

namespace sympclif {

mpz_class double_factorial(long m) {
    mpz_class r = 1;
    while (m > 1) {
        r *= m;
        m -= 2;
    }
    return r;
}

double RescaleFactor::value() const {
    return std::pow(2.0, 0.5 * log2_twice) * std::pow(M_PI, 0.25 * pi4);
}

std::string RescaleFactor::str() const {
    std::string s = "2^(" + std::to_string(log2_twice) + "/2)";
    if (pi4) s += " * pi^(" + std::to_string(pi4) + "/4)";
    return s;
}

namespace {

mpz_class binom(long a, long b) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return r;
}

}  // namespace

Spinor basis_real(Parity parity, int h, int k) {
    if (h < 0) throw std::invalid_argument("basis_real: h must be nonnegative");
    if (parity == Parity::Odd && k < h)
        throw std::invalid_argument("basis_real: odd family needs k >= h");
    if (parity == Parity::Even && k < 0)
        throw std::invalid_argument("basis_real: even family needs k >= 0");
    Spinor x = Spinor::variable(Gen::X, 1, 1);
    Spinor y = Spinor::variable(Gen::Y, 1, 1);
    Spinor q = Spinor::variable(Gen::Q, 1, 1);
    Spinor x_plus_iy = x + y * Scalar::i();
    Spinor iy = y * Scalar::i();
    Spinor out(1);
    for (int p = 0; p <= h; ++p) {
        Rat coeff;
        int qe;
        if (parity == Parity::Odd) {
            coeff = Rat(double_factorial(2 * k + 1)) / Rat(double_factorial(2 * k - 2 * p + 1));
            coeff.canonicalize();
            qe = 2 * k + 1 - 2 * p;
        } else {
            // falling product (2k)(2k-2)...(2k-2p+2); vanishes once p exceeds k
            mpz_class prod = 1;
            for (int t = 0; t < p; ++t) prod *= 2 * (k - t);
            if (prod == 0) continue;
            coeff = Rat(prod);
            qe = 2 * k - 2 * p;
        }
        if (p % 2) coeff = -coeff;
        coeff *= binom(h, p);
        Spinor term = poly_mul(poly_pow(x_plus_iy, h - p), poly_pow(iy, p));
        term = poly_mul(term, poly_pow(q, qe));
        out = out + term * Scalar::of_rat(coeff);
    }
    return out;
}

Spinor basis_complex_rescaled(Parity parity, int h, int k) {
    if (h < 0) throw std::invalid_argument("basis_complex_rescaled: h must be nonnegative");
    if (parity == Parity::Odd && k < 0)
        throw std::invalid_argument("basis_complex_rescaled: odd family needs k >= 0");
    if (parity == Parity::Even && k < -h)
        throw std::invalid_argument("basis_complex_rescaled: even family needs k >= -h");
    Spinor x = Spinor::variable(Gen::X, 1, 1);
    Spinor y = Spinor::variable(Gen::Y, 1, 1);
    Spinor z = x + y * Scalar::i();
    Spinor zbar = x - y * Scalar::i();
    Spinor out(1);
    int p0 = std::max(0, -k);
    for (int p = p0; p <= h; ++p) {
        long m = parity == Parity::Odd ? 2 * k + 2 * p + 1 : 2 * k + 2 * p;
        Rat coeff = Rat(binom(h, p)) / Rat(double_factorial(m) * (mpz_class(1) << p));
        coeff.canonicalize();
        Spinor term = poly_mul(poly_pow(zbar, h - p), poly_pow(z, p));
        term = poly_mul(term, hermite_unnorm(static_cast<int>(m)));
        out = out + term * Scalar::of_rat(coeff);
    }
    return out;
}

RescaleFactor rescale_complex(Parity parity, int k) {
    RescaleFactor f;
    f.pi4 = 1;
    f.log2_twice = parity == Parity::Odd ? 2L * k + 1 : 2L * k;
    return f;
}

Spinor basis_sE(int h, int l) {
    if (l < 0) throw std::invalid_argument("basis_sE: l must be nonnegative");
    Spinor out(1);
    for (int j = 0; j <= l; ++j) {
        Rat c(1, mpz_class(1) << (h + j));
        c.canonicalize();
        out = out + basis_complex_rescaled(Parity::Even, h, j) * Scalar::of_rat(c);
    }
    return out;
}

RescaleFactor rescale_sE() {
    RescaleFactor f;
    f.pi4 = 1;
    return f;
}

namespace {

std::vector<SMono> window_monomials(int h, int Q, int n) {
    // base degree exactly h over x_1..y_n, fiber degree <= Q over q_1..q_n
    std::vector<SMono> out;
    std::vector<Exp> base(2 * n, 0), fiber(n, 0);
    // enumerate compositions of h into 2n parts
    std::vector<SMono> bases_list;
    SMono cur(2 * n, 0);
    auto rec_base = [&](auto&& self, int pos, int rem) -> void {
        if (pos == 2 * n - 1) {
            cur[pos] = rem;
            bases_list.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec_base(rec_base, 0, h);
    std::vector<SMono> fibers_list;
    SMono curf(n, 0);
    auto rec_fib = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            for (int v = 0; v <= rem; ++v) {
                curf[pos] = v;
                fibers_list.push_back(curf);
            }
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            curf[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec_fib(rec_fib, 0, Q);
    for (const auto& b : bases_list)
        for (const auto& f : fibers_list) {
            SMono m = b;
            m.insert(m.end(), f.begin(), f.end());
            out.push_back(m);
        }
    return out;
}

}  // namespace

std::vector<Spinor> monogenics_by_nullspace(int h, int Q, int n) {
    if (Q < 0 || h < 0 || n < 1) throw std::invalid_argument("monogenics_by_nullspace: bad arguments");
    WeylElement D = build(OpKind::Ds, n);
    std::vector<SMono> cols = window_monomials(h, Q, n);
    SparseMatrix mat;
    mat.ncols = static_cast<int>(cols.size());
    std::map<SMono, int> row_of;
    for (int ci = 0; ci < mat.ncols; ++ci) {
        Spinor img = apply(D, Spinor::monomial(n, cols[ci]));
        for (const auto& [m, c] : img.terms) {
            // keep every image coordinate, including the q-degree Q+1 boundary:
            // a candidate leaking past the window is rejected here rather than
            // reported as a spurious kernel element
            auto it = row_of.find(m);
            int r;
            if (it == row_of.end()) {
                r = static_cast<int>(row_of.size());
                row_of.emplace(m, r);
            } else {
                r = it->second;
            }
            if (!c.is_constant()) throw std::logic_error("monogenics_by_nullspace: non-constant coefficient");
            mat.add_entry(r, ci, c.constant());
        }
    }
    std::vector<Spinor> out;
    for (const auto& vec : nullspace(std::move(mat))) {
        Spinor s(n);
        for (int ci = 0; ci < static_cast<int>(vec.size()); ++ci)
            if (!vec[ci].is_zero()) s.add_term(cols[ci], Scalar::of_gauss(vec[ci]));
        // exact certificate; cannot fail with the untruncated image matrix
        if (!apply(D, s).is_zero())
            throw std::logic_error("monogenics_by_nullspace: certificate failed");
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace sympclif
