#include "sympclif/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympclif {

void SparseMatrix::add_entry(int row, int col, const GaussRat& v) {
    if (v.is_zero()) return;
    if (row >= static_cast<int>(rows.size())) rows.resize(row + 1);
    auto& r = rows[row];
    auto it = r.find(col);
    if (it == r.end()) {
        r.emplace(col, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) r.erase(it);
}

namespace {

// dst -= f * src
void axpy(std::map<int, GaussRat>& dst, const GaussRat& f, const std::map<int, GaussRat>& src) {
    for (const auto& [c, v] : src) {
        auto it = dst.find(c);
        if (it == dst.end()) {
            dst.emplace(c, -(f * v));
        } else {
            it->second -= f * v;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

}  // namespace

std::vector<int> rref(SparseMatrix& m) {
    std::vector<int> pivots;
    size_t r = 0;
    for (int c = 0; c < m.ncols && r < m.rows.size(); ++c) {
        // pick the sparsest row with a nonzero in column c (limits fill-in)
        size_t best = m.rows.size();
        for (size_t i = r; i < m.rows.size(); ++i) {
            auto it = m.rows[i].find(c);
            if (it != m.rows[i].end() && !it->second.is_zero()) {
                if (best == m.rows.size() || m.rows[i].size() < m.rows[best].size()) best = i;
            }
        }
        if (best == m.rows.size()) continue;
        std::swap(m.rows[r], m.rows[best]);
        GaussRat pv = m.rows[r][c];
        if (!(pv == GaussRat::of(1))) {
            for (auto& [cc, v] : m.rows[r]) v = v / pv;
        }
        for (size_t i = 0; i < m.rows.size(); ++i) {
            if (i == r) continue;
            auto it = m.rows[i].find(c);
            if (it == m.rows[i].end()) continue;
            GaussRat f = it->second;
            axpy(m.rows[i], f, m.rows[r]);
        }
        pivots.push_back(c);
        ++r;
    }
    m.rows.erase(std::remove_if(m.rows.begin() + r, m.rows.end(),
                                [](const auto& row) { return row.empty(); }),
                 m.rows.end());
    return pivots;
}

int rank(SparseMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<GaussRat>> nullspace(SparseMatrix m) {
    std::vector<int> piv = rref(m);
    std::vector<bool> is_piv(m.ncols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<GaussRat>> basis;
    for (int f = 0; f < m.ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<GaussRat> v(m.ncols);
        v[f] = GaussRat::of(1);
        for (size_t i = 0; i < piv.size(); ++i) {
            auto it = m.rows[i].find(f);
            if (it != m.rows[i].end()) v[piv[i]] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

SparseMatrix from_rows(const std::vector<std::vector<GaussRat>>& rows, int ncols) {
    SparseMatrix m;
    m.ncols = ncols;
    for (const auto& r : rows) {
        std::map<int, GaussRat> row;
        for (int c = 0; c < static_cast<int>(r.size()); ++c)
            if (!r[c].is_zero()) row.emplace(c, r[c]);
        m.rows.push_back(std::move(row));
    }
    return m;
}

}  // namespace

bool same_span(const std::vector<std::vector<GaussRat>>& a,
               const std::vector<std::vector<GaussRat>>& b) {
    int ncols = 0;
    for (const auto& r : a) ncols = std::max(ncols, static_cast<int>(r.size()));
    for (const auto& r : b) ncols = std::max(ncols, static_cast<int>(r.size()));
    int ra = rank(from_rows(a, ncols));
    int rb = rank(from_rows(b, ncols));
    if (ra != rb) return false;
    std::vector<std::vector<GaussRat>> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank(from_rows(both, ncols)) == ra;
}

bool in_span(const std::vector<std::vector<GaussRat>>& span_rows, const std::vector<GaussRat>& v) {
    int ncols = static_cast<int>(v.size());
    for (const auto& r : span_rows) ncols = std::max(ncols, static_cast<int>(r.size()));
    int r0 = rank(from_rows(span_rows, ncols));
    std::vector<std::vector<GaussRat>> both = span_rows;
    both.push_back(v);
    return rank(from_rows(both, ncols)) == r0;
}

}  // namespace sympclif
