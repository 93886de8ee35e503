#include "sympclif/oplib.hpp"

#include <stdexcept>

namespace sympclif {

namespace {

WeylElement gen(Gen g, int j, int n, Scalar c = Scalar::one()) {
    return WeylElement::generator(g, j, n, 1, std::move(c));
}

WeylElement gen2(Gen g, int j, int n) { return WeylElement::generator(g, j, n, 2); }

WeylElement ds(int n) {
    WeylElement r(n);
    for (int j = 1; j <= n; ++j) {
        r += gen(Gen::Q, j, n) * gen(Gen::Dy, j, n) * Scalar::i();
        r += -(gen(Gen::Dx, j, n) * gen(Gen::Dq, j, n));
    }
    return r;
}

WeylElement xs(int n) {
    WeylElement r(n);
    for (int j = 1; j <= n; ++j) {
        r += gen(Gen::Y, j, n) * gen(Gen::Dq, j, n);
        r += gen(Gen::X, j, n) * gen(Gen::Q, j, n) * Scalar::i();
    }
    return r;
}

WeylElement euler(int n) {
    WeylElement r(n);
    for (int j = 1; j <= n; ++j) {
        r += gen(Gen::X, j, n) * gen(Gen::Dx, j, n);
        r += gen(Gen::Y, j, n) * gen(Gen::Dy, j, n);
    }
    return r;
}

WeylElement x_jk(int j, int k, int n) {
    WeylElement r = -(gen(Gen::X, j, n) * gen(Gen::Dx, k, n));
    r += gen(Gen::Y, k, n) * gen(Gen::Dy, j, n);
    r += gen(Gen::Q, k, n) * gen(Gen::Dq, j, n);
    if (j == k) r += WeylElement::unit(n, Scalar::of(1, 2));
    return r;
}

WeylElement y_jk(int j, int k, int n) {
    if (j == k)
        return -(gen(Gen::X, j, n) * gen(Gen::Dy, j, n)) + gen2(Gen::Dq, j, n) * Scalar::of_gauss(GaussRat::i_times(-1, 2));
    WeylElement r = gen(Gen::X, k, n) * gen(Gen::Dy, j, n);
    r += gen(Gen::X, j, n) * gen(Gen::Dy, k, n);
    r += gen(Gen::Dq, j, n) * gen(Gen::Dq, k, n) * Scalar::i();
    return r;
}

WeylElement z_jk(int j, int k, int n) {
    if (j == k)
        return -(gen(Gen::Y, j, n) * gen(Gen::Dx, j, n)) + gen2(Gen::Q, j, n) * Scalar::of_gauss(GaussRat::i_times(-1, 2));
    WeylElement r = gen(Gen::Y, k, n) * gen(Gen::Dx, j, n);
    r += gen(Gen::Y, j, n) * gen(Gen::Dx, k, n);
    r += gen(Gen::Q, j, n) * gen(Gen::Q, k, n) * Scalar::i();
    return r;
}

WeylElement z_real(int l, int n) {
    if (l < 1 || l > 2 * n) throw std::invalid_argument("build: Z index out of range");
    WeylElement X = xs(n);
    WeylElement En = euler(n) + WeylElement::unit(n, Scalar::of(n));
    WeylElement twoE = euler(n) * Scalar::of(2) + WeylElement::unit(n, Scalar::of(2 * n - 1));
    if (l <= n) {
        int j = l;
        WeylElement r = weyl_pow(X, 2) * gen(Gen::Dx, j, n);
        r += -(gen(Gen::Y, j, n) * En * twoE * Scalar::i());
        r += -(X * gen(Gen::Q, j, n) * twoE * Scalar::i());
        return r;
    }
    int j = l - n;
    WeylElement r = weyl_pow(X, 2) * gen(Gen::Dy, j, n);
    r += gen(Gen::X, j, n) * En * twoE * Scalar::i();
    r += -(X * gen(Gen::Dq, j, n) * twoE);
    return r;
}

WeylElement dz(int n) { return (gen(Gen::Dx, 1, n) - gen(Gen::Dy, 1, n) * Scalar::i()) * Scalar::of(1, 2); }
WeylElement dzbar(int n) { return (gen(Gen::Dx, 1, n) + gen(Gen::Dy, 1, n) * Scalar::i()) * Scalar::of(1, 2); }
WeylElement zmul(int n) { return gen(Gen::X, 1, n) + gen(Gen::Y, 1, n) * Scalar::i(); }
WeylElement zbarmul(int n) { return gen(Gen::X, 1, n) - gen(Gen::Y, 1, n) * Scalar::i(); }

void require_n1(OpKind kind, int n) {
    if (n != 1)
        throw std::invalid_argument("build: " + op_spelling(OpName(kind)) + " requires n = 1");
}

}  // namespace

WeylElement euler_shifted(int n) { return euler(n) + WeylElement::unit(n, Scalar::of(n)); }

WeylElement build(const OpName& name, int n) {
    if (n < 1) throw std::invalid_argument("build: n must be positive");
    auto check_idx = [&](int j) {
        if (j < 1 || j > n) throw std::invalid_argument("build: index out of range");
    };
    switch (name.kind) {
        case OpKind::Ds: return ds(n);
        case OpKind::Xs: return xs(n);
        case OpKind::E: return euler(n);
        case OpKind::Xjk: check_idx(name.j); check_idx(name.k); return x_jk(name.j, name.k, n);
        case OpKind::Yjk: check_idx(name.j); check_idx(name.k); return y_jk(name.j, name.k, n);
        case OpKind::Zjk: check_idx(name.j); check_idx(name.k); return z_jk(name.j, name.k, n);
        case OpKind::Xtilde:
            require_n1(name.kind, n);
            return -(gen(Gen::Y, 1, n) * gen(Gen::Dx, 1, n)) +
                   gen2(Gen::Q, 1, n) * Scalar::of_gauss(GaussRat::i_times(-1, 2));
        case OpKind::Ytilde:
            require_n1(name.kind, n);
            return -(gen(Gen::X, 1, n) * gen(Gen::Dy, 1, n)) +
                   gen2(Gen::Dq, 1, n) * Scalar::of_gauss(GaussRat::i_times(-1, 2));
        case OpKind::Htilde:
            require_n1(name.kind, n);
            return -(gen(Gen::X, 1, n) * gen(Gen::Dx, 1, n)) + gen(Gen::Y, 1, n) * gen(Gen::Dy, 1, n) +
                   gen(Gen::Q, 1, n) * gen(Gen::Dq, 1, n) + WeylElement::unit(n, Scalar::of(1, 2));
        case OpKind::Ht: {
            require_n1(name.kind, n);
            return zbarmul(n) * dzbar(n) - zmul(n) * dz(n) +
                   (gen2(Gen::Q, 1, n) - gen2(Gen::Dq, 1, n)) * Scalar::of(1, 2);
        }
        case OpKind::Xt: {
            require_n1(name.kind, n);
            WeylElement a = gen(Gen::Q, 1, n) - gen(Gen::Dq, 1, n);
            return zbarmul(n) * dz(n) * Scalar::i() + a * a * (Scalar::i() * Scalar::of(1, 4));
        }
        case OpKind::Yt: {
            require_n1(name.kind, n);
            WeylElement a = gen(Gen::Q, 1, n) + gen(Gen::Dq, 1, n);
            return -(zmul(n) * dzbar(n) * Scalar::i()) + a * a * (Scalar::i() * Scalar::of(1, 4));
        }
        case OpKind::Zreal: return z_real(name.j, n);
        case OpKind::Z1: {
            require_n1(name.kind, n);
            WeylElement Ep1 = euler(n) + WeylElement::unit(n);
            WeylElement twoE = euler(n) * Scalar::of(2) + WeylElement::unit(n);
            return weyl_pow(xs(n), 2) * dz(n) * Scalar::of(2) + zbarmul(n) * Ep1 * twoE +
                   xs(n) * (gen(Gen::Dq, 1, n) - gen(Gen::Q, 1, n)) * twoE * Scalar::i();
        }
        case OpKind::Z2: {
            require_n1(name.kind, n);
            WeylElement Ep1 = euler(n) + WeylElement::unit(n);
            WeylElement twoE = euler(n) * Scalar::of(2) + WeylElement::unit(n);
            return weyl_pow(xs(n), 2) * dzbar(n) * Scalar::of(2) - zmul(n) * Ep1 * twoE -
                   xs(n) * (gen(Gen::Dq, 1, n) + gen(Gen::Q, 1, n)) * twoE * Scalar::i();
        }
        case OpKind::Dx: check_idx(name.j); return gen(Gen::Dx, name.j, n);
        case OpKind::Dy: check_idx(name.j); return gen(Gen::Dy, name.j, n);
        case OpKind::Dz: require_n1(name.kind, n); return dz(n);
        case OpKind::Dzbar: require_n1(name.kind, n); return dzbar(n);
    }
    throw std::logic_error("build: unhandled kind");
}

std::string op_spelling(const OpName& name) {
    switch (name.kind) {
        case OpKind::Ds: return "Ds";
        case OpKind::Xs: return "Xs";
        case OpKind::E: return "E";
        case OpKind::Xjk: return "X(" + std::to_string(name.j) + "," + std::to_string(name.k) + ")";
        case OpKind::Yjk: return "Y(" + std::to_string(name.j) + "," + std::to_string(name.k) + ")";
        case OpKind::Zjk: return "Z(" + std::to_string(name.j) + "," + std::to_string(name.k) + ")";
        case OpKind::Xtilde: return "Xtilde";
        case OpKind::Ytilde: return "Ytilde";
        case OpKind::Htilde: return "Htilde";
        case OpKind::Ht: return "Ht";
        case OpKind::Xt: return "Xt";
        case OpKind::Yt: return "Yt";
        case OpKind::Zreal: return "Z(" + std::to_string(name.j) + ")";
        case OpKind::Z1: return "Z1";
        case OpKind::Z2: return "Z2";
        case OpKind::Dx: return "Dx(" + std::to_string(name.j) + ")";
        case OpKind::Dy: return "Dy(" + std::to_string(name.j) + ")";
        case OpKind::Dz: return "Dz";
        case OpKind::Dzbar: return "Dzbar";
    }
    return "?";
}

std::optional<OpKind> op_kind_from_word(const std::string& word) {
    if (word == "Ds") return OpKind::Ds;
    if (word == "Xs") return OpKind::Xs;
    if (word == "E") return OpKind::E;
    if (word == "Xtilde") return OpKind::Xtilde;
    if (word == "Ytilde") return OpKind::Ytilde;
    if (word == "Htilde") return OpKind::Htilde;
    if (word == "Ht") return OpKind::Ht;
    if (word == "Xt") return OpKind::Xt;
    if (word == "Yt") return OpKind::Yt;
    if (word == "Z1") return OpKind::Z1;
    if (word == "Z2") return OpKind::Z2;
    if (word == "Dz") return OpKind::Dz;
    if (word == "Dzbar") return OpKind::Dzbar;
    return std::nullopt;
}

WeylElement projector_P(int h, int n) {
    if (h + n < 1) throw std::invalid_argument("projector_P: need h + n >= 1");
    Scalar c = Scalar::of_gauss(GaussRat::of(1) / GaussRat::i_times(h + n));
    Scalar d = Scalar::of(-1, static_cast<long>(h + n) * (2 * h + 2 * n - 1));
    WeylElement X = build(OpKind::Xs, n), D = build(OpKind::Ds, n);
    return WeylElement::unit(n) + X * D * c + weyl_pow(X, 2) * weyl_pow(D, 2) * d;
}

std::vector<Scalar> proj_sm_coeffs(int k, int n) {
    // Ds Xs^l m = -i (l/2)(2g + 2n + l - 1) Xs^(l-1) m on a monogenic of base
    // degree g; forcing sum_j a_j Xs^j Ds^j to kill Xs^l m_{k-l} for l = 1..k
    // gives a triangular system in the a_j.
    auto cfac = [&](int l, int g) {
        return GaussRat::i_times(-l, 2) * GaussRat::of(2 * g + 2 * n + l - 1);
    };
    std::vector<GaussRat> a{GaussRat::of(1)};
    for (int l = 1; l <= k; ++l) {
        GaussRat acc;
        for (int j = 0; j < l; ++j) {
            GaussRat prod = GaussRat::of(1);
            for (int r = 0; r < j; ++r) prod = prod * cfac(l - r, k - l);
            acc += a[j] * prod;
        }
        GaussRat lead = GaussRat::of(1);
        for (int r = 0; r < l; ++r) lead = lead * cfac(l - r, k - l);
        if (lead.is_zero()) throw std::runtime_error("proj_sm_coeffs: singular system");
        a.push_back(-acc / lead);
    }
    std::vector<Scalar> out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(Scalar::of_gauss(c));
    return out;
}

Spinor clifford_mul(int j, const Spinor& s) {
    const int n = s.n;
    if (j < 1 || j > 2 * n) throw std::invalid_argument("clifford_mul: index out of range");
    if (j <= n) return apply(WeylElement::generator(Gen::Q, j, n, 1, Scalar::i()), s);
    return apply(WeylElement::generator(Gen::Dq, j - n, n), s);
}

RatMatrix sp_matrix(const OpName& name, int n) {
    RatMatrix m(2 * n, std::vector<Rat>(2 * n, Rat(0)));
    auto E = [&](int r, int c, long v) { m[r - 1][c - 1] += v; };
    int j = name.j, k = name.k;
    switch (name.kind) {
        case OpKind::Xjk:
            E(j, k, 1);
            E(n + k, n + j, -1);
            break;
        case OpKind::Yjk:
            if (j == k) {
                E(j, n + j, 1);
            } else {
                E(j, n + k, 1);
                E(k, n + j, 1);
            }
            break;
        case OpKind::Zjk:
            if (j == k) {
                E(n + j, j, 1);
            } else {
                E(n + j, k, 1);
                E(n + k, j, 1);
            }
            break;
        default:
            throw std::invalid_argument("sp_matrix: not a metaplectic generator");
    }
    return m;
}

std::vector<OpName> sp_generators(int n) {
    std::vector<OpName> out;
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) out.emplace_back(OpKind::Xjk, j, k);
    for (int j = 1; j <= n; ++j)
        for (int k = j; k <= n; ++k) {
            out.emplace_back(OpKind::Yjk, j, k);
            out.emplace_back(OpKind::Zjk, j, k);
        }
    return out;
}

WeylElement sp_op_twisted(const OpName& name, int n) {
    WeylElement op = build(name, n);
    bool mixed = (name.kind == OpKind::Yjk || name.kind == OpKind::Zjk) && name.j != name.k;
    return mixed ? -op : op;
}

RatMatrix mat_commutator(const RatMatrix& a, const RatMatrix& b) {
    size_t m = a.size();
    RatMatrix r(m, std::vector<Rat>(m, Rat(0)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            Rat acc(0);
            for (size_t t = 0; t < m; ++t) acc += a[i][t] * b[t][j] - b[i][t] * a[t][j];
            r[i][j] = acc;
        }
    return r;
}

std::vector<Rat> mat_expand(const RatMatrix& m, const std::vector<OpName>& basis, int n) {
    // Gaussian elimination on the (entries x basis) system.
    size_t dim = 2 * static_cast<size_t>(n);
    size_t nrows = dim * dim, ncols = basis.size();
    std::vector<std::vector<Rat>> A(nrows, std::vector<Rat>(ncols + 1, Rat(0)));
    for (size_t bi = 0; bi < ncols; ++bi) {
        RatMatrix bm = sp_matrix(basis[bi], n);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) A[i * dim + j][bi] = bm[i][j];
    }
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) A[i * dim + j][ncols] = m[i][j];
    std::vector<int> piv;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < nrows; ++c) {
        size_t p = r;
        while (p < nrows && A[p][c] == 0) ++p;
        if (p == nrows) continue;
        std::swap(A[r], A[p]);
        Rat pv = A[r][c];
        for (auto& v : A[r]) v /= pv;
        for (size_t rr = 0; rr < nrows; ++rr) {
            if (rr == r || A[rr][c] == 0) continue;
            Rat f = A[rr][c];
            for (size_t cc = 0; cc <= ncols; ++cc) A[rr][cc] -= f * A[r][cc];
        }
        piv.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<Rat> sol(ncols, Rat(0));
    for (size_t i = 0; i < piv.size(); ++i) sol[piv[i]] = A[i][ncols];
    for (size_t rr = r; rr < nrows; ++rr)
        if (A[rr][ncols] != 0) throw std::runtime_error("mat_expand: inconsistent system");
    return sol;
}

}  // namespace sympclif
