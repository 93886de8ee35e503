#pragma once

#include <string>
#include <vector>

#include "sympclif/weyl.hpp"

namespace sympclif {

// One solution of Ds A = B Ds: A is first order with polynomial coefficients,
// B the certified cofactor recovered from the same nullspace vector.
struct SymmetryPair {
    WeylElement A{1};
    WeylElement B{1};
};

struct SymmetryBasis {
    int degree = 0;                // coefficient-degree bound of the ansatz
    std::vector<SymmetryPair> ops; // deterministic (RREF-normalized) basis
};

// Solves Ds A = B Ds over the ansatz A = F0 dx + F1 dy + F2 dq + F3 with
// deg F_i <= d and B first order with coefficient degree <= d + 2, by exact
// nullspace computation; returns the basis of A-projections with certified B.
SymmetryBasis solve_symmetries(int d);

struct StructuralReport {
    struct Entry {
        std::string what;
        bool pass = false;
    };
    std::vector<Entry> entries;
    bool all_pass() const;
};

// Shape facts from the classification: for every basis vector of
// solve_symmetries(3), F0 has no q, F1 depends only on y, F2 = F2'(y) q,
// F3 = (linear in x) q^2-part + function of y.
StructuralReport structural_constraints_check();

// The first-order symmetry algebra of the classification theorem: dx, dy,
// Htilde, Xtilde, E, y Htilde - 2x Xtilde + y E + (3/2) y, and the identity.
std::vector<WeylElement> theorem_symmetry_list();

// Coefficient-vector span helpers on Weyl elements.
bool weyl_same_span(const std::vector<WeylElement>& a, const std::vector<WeylElement>& b);
bool weyl_in_span(const std::vector<WeylElement>& span, const WeylElement& v);

}  // namespace sympclif
