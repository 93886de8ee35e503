#include "sympclif/symmetry.hpp"

#include <map>
#include <stdexcept>

#include "sympclif/linalg.hpp"
#include "sympclif/oplib.hpp"

namespace sympclif {

namespace {

struct AnsatzColumn {
    int gen_index;  // 0: dx, 1: dy, 2: dq, 3: identity
    SMono mono;     // coefficient monomial (x,y,q)
};

std::vector<SMono> monomials_up_to(int d) {
    std::vector<SMono> out;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b)
            for (int c = 0; a + b + c <= d; ++c) out.push_back(SMono{Exp(a), Exp(b), Exp(c)});
    return out;
}

WeylElement column_element(const AnsatzColumn& col) {
    Mono m(6, 0);
    m[0] = col.mono[0];
    m[1] = col.mono[1];
    m[2] = col.mono[2];
    if (col.gen_index == 0) m[3] = 1;
    if (col.gen_index == 1) m[4] = 1;
    if (col.gen_index == 2) m[5] = 1;
    WeylElement w(1);
    w.terms[m] = Scalar::one();
    return w;
}

GaussRat constant_of(const Scalar& s) {
    if (!s.is_constant()) throw std::logic_error("symmetry: non-constant scalar");
    return s.constant();
}

}  // namespace

SymmetryBasis solve_symmetries(int d) {
    if (d < 0) throw std::invalid_argument("solve_symmetries: negative degree bound");
    const WeylElement D = build(OpKind::Ds, 1);
    std::vector<AnsatzColumn> cols;
    for (int g = 0; g < 4; ++g)
        for (const auto& m : monomials_up_to(d)) cols.push_back({g, m});
    const int n_a = static_cast<int>(cols.size());
    for (int g = 0; g < 4; ++g)
        for (const auto& m : monomials_up_to(d + 2)) cols.push_back({g, m});
    const int n_total = static_cast<int>(cols.size());

    SparseMatrix mat;
    mat.ncols = n_total;
    std::map<Mono, int> row_of;
    for (int ci = 0; ci < n_total; ++ci) {
        WeylElement w = column_element(cols[ci]);
        WeylElement contrib = ci < n_a ? D * w : -(w * D);
        for (const auto& [m, c] : contrib.terms) {
            auto it = row_of.find(m);
            int r;
            if (it == row_of.end()) {
                r = static_cast<int>(row_of.size());
                row_of.emplace(m, r);
            } else {
                r = it->second;
            }
            mat.add_entry(r, ci, constant_of(c));
        }
    }

    // Deterministic basis: RREF over the full solution vectors; since B is
    // determined by A, every pivot lands in an A-column.
    std::vector<std::vector<GaussRat>> sols = nullspace(std::move(mat));
    SparseMatrix sol_rows;
    sol_rows.ncols = n_total;
    for (const auto& v : sols) {
        std::map<int, GaussRat> row;
        for (int c = 0; c < n_total; ++c)
            if (!v[c].is_zero()) row.emplace(c, v[c]);
        sol_rows.rows.push_back(std::move(row));
    }
    rref(sol_rows);

    SymmetryBasis out;
    out.degree = d;
    for (const auto& row : sol_rows.rows) {
        SymmetryPair pair;
        pair.A = WeylElement(1);
        pair.B = WeylElement(1);
        for (const auto& [c, v] : row) {
            WeylElement w = column_element(cols[c]) * Scalar::of_gauss(v);
            if (c < n_a)
                pair.A += w;
            else
                pair.B += w;
        }
        out.ops.push_back(std::move(pair));
    }
    return out;
}

bool StructuralReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

StructuralReport structural_constraints_check() {
    StructuralReport rep;
    SymmetryBasis basis = solve_symmetries(3);
    rep.entries.push_back({"ansatz degree 3 solution space has dimension 7",
                           basis.ops.size() == 7});
    int idx = 0;
    for (const auto& pair : basis.ops) {
        bool f0_ok = true, f1_ok = true, f2_ok = true, f3_ok = true;
        for (const auto& [m, c] : pair.A.terms) {
            Exp ex = m[0], ey = m[1], eq = m[2];
            bool dx = m[3], dy = m[4], dq = m[5];
            if (dx) f0_ok = f0_ok && eq == 0;                    // F0 = F0(x,y)
            if (dy) f1_ok = f1_ok && eq == 0 && ex == 0;         // F1 = F1(y)
            if (dq) f2_ok = f2_ok && eq == 1 && ex == 0;         // F2 = F2'(y) q
            if (!dx && !dy && !dq)                               // F3
                f3_ok = f3_ok && ((eq == 2 && ex <= 1 && ey == 0) || (eq == 0 && ex == 0));
        }
        std::string tag = "basis vector " + std::to_string(idx++);
        rep.entries.push_back({tag + ": F0 independent of q", f0_ok});
        rep.entries.push_back({tag + ": F1 depends only on y", f1_ok});
        rep.entries.push_back({tag + ": F2 linear homogeneous in q", f2_ok});
        rep.entries.push_back({tag + ": F3 = (linear in x) q^2 part + f(y)", f3_ok});
    }
    // D_s A = B D_s certified for every pair
    const WeylElement D = build(OpKind::Ds, 1);
    bool certified = true;
    for (const auto& pair : basis.ops)
        certified = certified && (D * pair.A == pair.B * D);
    rep.entries.push_back({"each basis vector certifies Ds A = B Ds", certified});
    return rep;
}

std::vector<WeylElement> theorem_symmetry_list() {
    const int n = 1;
    WeylElement Ht = build(OpKind::Htilde, n);
    WeylElement Xt = build(OpKind::Xtilde, n);
    WeylElement E = build(OpKind::E, n);
    WeylElement y = WeylElement::generator(Gen::Y, 1, n);
    WeylElement x = WeylElement::generator(Gen::X, 1, n);
    WeylElement alpha_op = y * Ht - x * Xt * Scalar::of(2) + y * E + y * Scalar::of(3, 2);
    return {
        WeylElement::generator(Gen::Dx, 1, n),
        WeylElement::generator(Gen::Dy, 1, n),
        Ht,
        Xt,
        E,
        alpha_op,
        WeylElement::unit(n),
    };
}

namespace {

std::vector<std::vector<GaussRat>> weyl_coeff_rows(const std::vector<WeylElement>& elems) {
    std::map<Mono, int> col_of;
    for (const auto& w : elems)
        for (const auto& [m, c] : w.terms)
            col_of.emplace(m, 0);
    int idx = 0;
    for (auto& [m, c] : col_of) c = idx++;
    std::vector<std::vector<GaussRat>> rows;
    for (const auto& w : elems) {
        std::vector<GaussRat> row(col_of.size());
        for (const auto& [m, c] : w.terms) row[col_of[m]] = constant_of(c);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

bool weyl_same_span(const std::vector<WeylElement>& a, const std::vector<WeylElement>& b) {
    std::vector<WeylElement> all = a;
    all.insert(all.end(), b.begin(), b.end());
    auto rows = weyl_coeff_rows(all);
    std::vector<std::vector<GaussRat>> ra(rows.begin(), rows.begin() + a.size());
    std::vector<std::vector<GaussRat>> rb(rows.begin() + a.size(), rows.end());
    return same_span(ra, rb);
}

bool weyl_in_span(const std::vector<WeylElement>& span, const WeylElement& v) {
    std::vector<WeylElement> all = span;
    all.push_back(v);
    auto rows = weyl_coeff_rows(all);
    std::vector<GaussRat> last = rows.back();
    rows.pop_back();
    return in_span(rows, last);
}

}  // namespace sympclif
