#include "mck/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace mck {

SparseVec sv_add(const SparseVec& a, const SparseVec& b) { return sv_axpy(a, Rat(1), b); }

SparseVec sv_scale(const SparseVec& a, const Rat& c) {
    SparseVec r;
    if (c == 0) return r;
    for (const auto& [i, v] : a) r[i] = v * c;
    return r;
}

SparseVec sv_axpy(const SparseVec& a, const Rat& c, const SparseVec& b) {
    SparseVec r = a;
    if (c == 0) return r;
    for (const auto& [i, v] : b) {
        Rat nv = (r.count(i) ? r[i] : Rat(0)) + c * v;
        if (nv == 0)
            r.erase(i);
        else
            r[i] = nv;
    }
    return r;
}

bool sv_is_zero(const SparseVec& a) { return a.empty(); }

const Rat& Mat::at(int r, int c) const {
    static const Rat zero(0);
    auto it = row_data_[r].find(c);
    return it == row_data_[r].end() ? zero : it->second;
}

void Mat::set(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("Mat::set");
    if (v == 0)
        row_data_[r].erase(c);
    else
        row_data_[r][c] = v;
}

void Mat::add_to(int r, int c, const Rat& v) { set(r, c, at(r, c) + v); }

void Mat::append_row(const SparseVec& v) {
    if (!v.empty() && v.rbegin()->first >= cols_) throw std::out_of_range("Mat::append_row");
    row_data_.push_back(v);
    ++rows_;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : row_data_[r]) t.row_data_[c][r] = v;
    return t;
}

SparseVec Mat::apply(const SparseVec& x) const {
    SparseVec y;
    for (int r = 0; r < rows_; ++r) {
        Rat s(0);
        const SparseVec& row = row_data_[r];
        const SparseVec& small = row.size() < x.size() ? row : x;
        const SparseVec& big = row.size() < x.size() ? x : row;
        for (const auto& [c, v] : small) {
            auto it = big.find(c);
            if (it != big.end()) s += v * it->second;
        }
        if (s != 0) y[r] = s;
    }
    return y;
}

std::vector<Rat> Mat::apply_dense(const std::vector<Rat>& x) const {
    std::vector<Rat> y(rows_, Rat(0));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : row_data_[r]) y[r] += v * x[c];
    return y;
}

namespace {

// Scales a row to integer entries in lowest terms with positive leading entry.
SparseVec integer_normalize(SparseVec v) {
    if (v.empty()) return v;
    Int den_lcm(1), num_gcd(0);
    for (const auto& [i, q] : v) {
        den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(q));
        num_gcd = boost::multiprecision::gcd(num_gcd, rat_num(q));
    }
    Rat scale(den_lcm, num_gcd == 0 ? Int(1) : num_gcd);
    if (v.begin()->second < 0) scale = -scale;
    return sv_scale(v, scale);
}

}  // namespace

RrefResult rref(const Mat& m) {
    std::vector<SparseVec> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) rows.push_back(integer_normalize(m.row(r)));

    // Forward elimination: for each column in order, pick the first live row
    // whose leading index is that column.
    std::vector<SparseVec> echelon;
    std::vector<int> pivots;
    for (int c = 0; c < m.cols(); ++c) {
        int pivot_row = -1;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (!rows[r].empty() && rows[r].begin()->first == c) {
                pivot_row = static_cast<int>(r);
                break;
            }
        }
        if (pivot_row < 0) continue;
        SparseVec p = rows[pivot_row];
        rows.erase(rows.begin() + pivot_row);
        const Rat& pv = p.begin()->second;
        for (auto& row : rows) {
            auto it = row.find(c);
            if (it == row.end()) continue;
            row = integer_normalize(sv_axpy(row, -it->second / pv, p));
        }
        echelon.push_back(p);
        pivots.push_back(c);
    }

    // Back substitution: clear above pivots and normalize pivot entries to 1.
    for (int i = static_cast<int>(echelon.size()) - 1; i >= 0; --i) {
        echelon[i] = sv_scale(echelon[i], Rat(1) / echelon[i].begin()->second);
        for (int j = 0; j < i; ++j) {
            auto it = echelon[j].find(pivots[i]);
            if (it != echelon[j].end()) echelon[j] = sv_axpy(echelon[j], -it->second, echelon[i]);
        }
    }

    RrefResult res;
    Mat red(m.rows(), m.cols());
    int r = 0;
    for (const auto& row : echelon) {
        for (const auto& [c, v] : row) red.set(r, c, v);
        ++r;
    }
    res.reduced = red;
    res.pivots = pivots;
    res.rank = static_cast<int>(pivots.size());
    return res;
}

std::vector<SparseVec> kernel_basis(const Mat& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    std::vector<int> pivot_row_of(m.cols(), -1);
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        is_pivot[rr.pivots[i]] = true;
        pivot_row_of[rr.pivots[i]] = static_cast<int>(i);
    }
    std::vector<SparseVec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        SparseVec v;
        v[c] = 1;
        for (size_t i = 0; i < rr.pivots.size(); ++i) {
            const Rat& coeff = rr.reduced.at(static_cast<int>(i), c);
            if (coeff != 0) v[rr.pivots[i]] = -coeff;
        }
        basis.push_back(v);
    }
    return basis;
}

std::vector<Rat> Cokernel::project(const SparseVec& v) const {
    SparseVec res = v;
    while (!res.empty()) {
        auto it = image_echelon.find(res.begin()->first);
        if (it == image_echelon.end()) break;
        res = sv_axpy(res, -res.begin()->second / it->second.begin()->second, it->second);
    }
    // res is now supported outside pivot coordinates... except that reduction
    // only clears leading entries; finish by sweeping remaining pivot coords.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [i, q] : res) {
            auto it = image_echelon.find(i);
            if (it != image_echelon.end()) {
                res = sv_axpy(res, -q / it->second.begin()->second, it->second);
                changed = true;
                break;
            }
        }
    }
    std::vector<Rat> out(coords.size(), Rat(0));
    for (size_t i = 0; i < coords.size(); ++i) {
        auto it = res.find(coords[i]);
        if (it != res.end()) out[i] = it->second;
    }
    return out;
}

Cokernel cokernel_with_projection(const Mat& m) {
    // Echelonize the column space of m inside the target space.
    RowSpan span;
    Mat t = m.transpose();
    for (int r = 0; r < t.rows(); ++r) span.insert(t.row(r));

    Cokernel ck;
    ck.image_echelon = span.rows();
    std::vector<bool> is_pivot(m.rows(), false);
    for (const auto& [lead, row] : ck.image_echelon) is_pivot[lead] = true;
    for (int i = 0; i < m.rows(); ++i) {
        if (is_pivot[i]) continue;
        ck.coords.push_back(i);
        SparseVec e;
        e[i] = 1;
        ck.basis.push_back(e);
    }
    return ck;
}

bool RowSpan::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    v = integer_normalize(std::move(v));
    // Fully reduce existing rows against the new one to keep echelon reduced.
    int lead = v.begin()->first;
    for (auto& [l, row] : rows_) {
        auto it = row.find(lead);
        if (it != row.end()) row = sv_axpy(row, -it->second / v.begin()->second, v);
    }
    rows_[lead] = std::move(v);
    return true;
}

SparseVec RowSpan::reduce(SparseVec v) const {
    while (!v.empty()) {
        auto it = rows_.find(v.begin()->first);
        if (it == rows_.end()) break;
        v = sv_axpy(v, -v.begin()->second / it->second.begin()->second, it->second);
    }
    // Leading coordinate is now outside the span's pivots; interior
    // coordinates may still hit pivots of later rows.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [i, q] : v) {
            auto it = rows_.find(i);
            if (it != rows_.end()) {
                v = sv_axpy(v, -q / it->second.begin()->second, it->second);
                changed = true;
                break;
            }
        }
    }
    return v;
}

bool RowSpan::same_span(const RowSpan& other) const {
    if (dim() != other.dim()) return false;
    for (const auto& [l, row] : rows_)
        if (!other.contains(row)) return false;
    return true;
}

}  // namespace mck
