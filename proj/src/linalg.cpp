#include "skewlab/linalg.hpp"

#include <algorithm>

#include "skewlab/error.hpp"

namespace skewlab {

FMatrix::FMatrix(std::shared_ptr<const GaloisField> field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

FMatrix FMatrix::identity(std::shared_ptr<const GaloisField> field, std::size_t n) {
    FMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FElem{1};
    return m;
}

FMatrix FMatrix::from_columns(std::shared_ptr<const GaloisField> field, std::size_t rows,
                              const std::vector<FVector>& columns) {
    FMatrix m(std::move(field), rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    return m;
}

FMatrix FMatrix::operator*(const FMatrix& rhs) const {
    FMatrix out(field_, rows_, rhs.cols_);
    const auto& F = *field_;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const FElem a = (*this)(i, k);
            if (a.v == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) = F.add(out(i, j), F.mul(a, rhs(k, j)));
        }
    return out;
}

FMatrix FMatrix::operator+(const FMatrix& rhs) const {
    FMatrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], rhs.data_[i]);
    return out;
}

FVector FMatrix::operator*(const FVector& v) const {
    FVector out(rows_);
    const auto& F = *field_;
    for (std::size_t i = 0; i < rows_; ++i) {
        FElem acc{};
        for (std::size_t k = 0; k < cols_; ++k) acc = F.add(acc, F.mul((*this)(i, k), v[k]));
        out[i] = acc;
    }
    return out;
}

FMatrix FMatrix::scaled(FElem s) const {
    FMatrix out = *this;
    for (auto& x : out.data_) x = field_->mul(x, s);
    return out;
}

bool FMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](FElem x) { return x.v == 0; });
}

std::vector<std::size_t> row_reduce(FMatrix& m) {
    const auto& F = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).v == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        const FElem inv = F.inv(m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = F.mul(m(row, c), inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).v == 0) continue;
            const FElem factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) = F.sub(m(r, c), F.mul(factor, m(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(FMatrix m) { return row_reduce(m).size(); }

std::vector<FVector> kernel(const FMatrix& m) {
    FMatrix r = m;
    const auto pivots = row_reduce(r);
    const auto& F = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<FVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        FVector v(m.cols());
        v[free] = FElem{1};
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(r(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<FVector> solve(const FMatrix& m, const FVector& b) {
    FMatrix aug(m.field_ptr(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    FVector x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    return x;
}

SpanBuilder::SpanBuilder(std::shared_ptr<const GaloisField> field, std::size_t dim)
    : field_(std::move(field)), dim_(dim) {}

FVector SpanBuilder::reduce(FVector v, FVector* coeffs) const {
    const auto& F = *field_;
    if (coeffs) coeffs->assign(original_.size(), FElem{});
    for (std::size_t i = 0; i < echelon_.size(); ++i) {
        const FElem c = v[pivots_[i]];
        if (c.v == 0) continue;
        for (std::size_t k = 0; k < dim_; ++k) v[k] = F.sub(v[k], F.mul(c, echelon_[i][k]));
        if (coeffs)
            for (std::size_t j = 0; j < combo_[i].size(); ++j)
                (*coeffs)[j] = F.add((*coeffs)[j], F.mul(c, combo_[i][j]));
    }
    return v;
}

bool SpanBuilder::contains(const FVector& v) const {
    const auto r = reduce(v, nullptr);
    return std::all_of(r.begin(), r.end(), [](FElem x) { return x.v == 0; });
}

std::optional<FVector> SpanBuilder::coordinates(const FVector& v) const {
    FVector coeffs;
    const auto r = reduce(v, &coeffs);
    if (!std::all_of(r.begin(), r.end(), [](FElem x) { return x.v == 0; })) return std::nullopt;
    return coeffs;
}

bool SpanBuilder::insert(const FVector& v) {
    if (v.size() != dim_) fail(ErrorCode::DegreeMismatch, "vector length does not match span dimension");
    const auto& F = *field_;
    FVector coeffs;
    FVector r = reduce(v, &coeffs);
    std::size_t lead = 0;
    while (lead < dim_ && r[lead].v == 0) ++lead;
    if (lead == dim_) return false;
    const FElem inv = F.inv(r[lead]);
    for (auto& x : r) x = F.mul(x, inv);
    // r_unscaled = v - sum coeffs_j * original_j
    FVector combo(original_.size() + 1);
    for (std::size_t j = 0; j < original_.size(); ++j) combo[j] = F.neg(F.mul(coeffs[j], inv));
    combo.back() = inv;
    for (auto& c : combo_) c.push_back(FElem{});
    echelon_.push_back(std::move(r));
    combo_.push_back(std::move(combo));
    pivots_.push_back(lead);
    original_.push_back(v);
    return true;
}

}  // namespace skewlab
