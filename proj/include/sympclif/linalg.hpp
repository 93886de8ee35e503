#pragma once

#include <map>
#include <vector>

#include "sympclif/scalar.hpp"

namespace sympclif {

// Sparse exact linear algebra over Q(i). Rows are ordered column->value maps.
struct SparseMatrix {
    int ncols = 0;
    std::vector<std::map<int, GaussRat>> rows;

    void add_row(std::map<int, GaussRat> r) { rows.push_back(std::move(r)); }
    void add_entry(int row, int col, const GaussRat& v);
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(SparseMatrix& m);

int rank(SparseMatrix m);

// Basis of the right nullspace, one dense vector per free column, in free-column
// order with the free coordinate set to 1 (deterministic output).
std::vector<std::vector<GaussRat>> nullspace(SparseMatrix m);

// Span tests on row vectors.
bool same_span(const std::vector<std::vector<GaussRat>>& a,
               const std::vector<std::vector<GaussRat>>& b);
bool in_span(const std::vector<std::vector<GaussRat>>& span_rows,
             const std::vector<GaussRat>& v);

}  // namespace sympclif
