#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mck/rational.hpp"

namespace mck {

// Sparse vector over Q, indexed by column. No stored zeros.
using SparseVec = std::map<int, Rat>;

SparseVec sv_add(const SparseVec& a, const SparseVec& b);
SparseVec sv_scale(const SparseVec& a, const Rat& c);
SparseVec sv_axpy(const SparseVec& a, const Rat& c, const SparseVec& b);  // a + c*b
bool sv_is_zero(const SparseVec& a);

// Sparse matrix over Q, row-major. Invariant: no stored zero entries.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), row_data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& at(int r, int c) const;
    void set(int r, int c, const Rat& v);
    void add_to(int r, int c, const Rat& v);
    const SparseVec& row(int r) const { return row_data_[r]; }

    void append_row(const SparseVec& v);
    Mat transpose() const;

    SparseVec apply(const SparseVec& x) const;                 // m * x
    std::vector<Rat> apply_dense(const std::vector<Rat>& x) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseVec> row_data_;
};

struct RrefResult {
    Mat reduced;
    std::vector<int> pivots;  // pivot column per pivot row, increasing
    int rank = 0;
};

// Unique reduced row echelon form. Forward elimination works on integer-scaled
// rows, back substitution normalizes pivots to 1.
RrefResult rref(const Mat& m);

// Deterministic basis of the null space, one vector per free column in
// increasing column order.
std::vector<SparseVec> kernel_basis(const Mat& m);

struct Cokernel {
    // Coordinates of target space representing coker(m): the non-pivot rows of
    // the column space echelon. basis[i] is the representative e_{coords[i]}.
    std::vector<int> coords;
    std::vector<SparseVec> basis;
    // Echelon rows of im(m), keyed by leading coordinate, used by project().
    std::map<int, SparseVec> image_echelon;

    int dim() const { return static_cast<int>(coords.size()); }
    // Reduces v modulo im(m) and reads off coker coordinates. Kills im(m).
    std::vector<Rat> project(const SparseVec& v) const;
};

Cokernel cokernel_with_projection(const Mat& m);

// Incremental row span with reduction; rows kept in echelon form.
class RowSpan {
public:
    // Returns true if v was independent of the current span.
    bool insert(SparseVec v);
    // Residue of v modulo the span (zero iff v is contained).
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return sv_is_zero(reduce(v)); }
    int dim() const { return static_cast<int>(rows_.size()); }
    bool same_span(const RowSpan& other) const;
    const std::map<int, SparseVec>& rows() const { return rows_; }

private:
    std::map<int, SparseVec> rows_;  // leading index -> normalized row
};

}  // namespace mck
