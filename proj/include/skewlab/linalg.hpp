#ifndef SKEWLAB_LINALG_HPP
#define SKEWLAB_LINALG_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "skewlab/galois_field.hpp"

namespace skewlab {

using FVector = std::vector<FElem>;

/// Dense matrix over F, row-major.
class FMatrix {
   public:
    FMatrix(std::shared_ptr<const GaloisField> field, std::size_t rows, std::size_t cols);
    static FMatrix identity(std::shared_ptr<const GaloisField> field, std::size_t n);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static FMatrix from_columns(std::shared_ptr<const GaloisField> field, std::size_t rows,
                                const std::vector<FVector>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    const GaloisField& field() const noexcept { return *field_; }
    const std::shared_ptr<const GaloisField>& field_ptr() const noexcept { return field_; }

    FElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    FElem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    FMatrix operator*(const FMatrix& rhs) const;
    FMatrix operator+(const FMatrix& rhs) const;
    FVector operator*(const FVector& v) const;
    FMatrix scaled(FElem s) const;
    bool is_zero() const noexcept;
    friend bool operator==(const FMatrix& a, const FMatrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    std::shared_ptr<const GaloisField> field_;
    std::size_t rows_, cols_;
    std::vector<FElem> data_;
};

/// Reduced row echelon form; returns pivot column per nonzero row.
std::vector<std::size_t> row_reduce(FMatrix& m);
std::size_t rank(FMatrix m);
/// Basis of {x : m x = 0}.
std::vector<FVector> kernel(const FMatrix& m);
/// Some x with m x = b, if one exists.
std::optional<FVector> solve(const FMatrix& m, const FVector& b);

/// Incrementally maintained span of vectors in F^dim, kept in echelon form.
class SpanBuilder {
   public:
    SpanBuilder(std::shared_ptr<const GaloisField> field, std::size_t dim);
    /// Adds v; returns false if v was already in the span.
    bool insert(const FVector& v);
    bool contains(const FVector& v) const;
    /// Coefficients of v with respect to the inserted (independent) vectors, in insertion order.
    std::optional<FVector> coordinates(const FVector& v) const;
    std::size_t size() const noexcept { return original_.size(); }
    const std::vector<FVector>& vectors() const noexcept { return original_; }

   private:
    FVector reduce(FVector v, FVector* coeffs) const;

    std::shared_ptr<const GaloisField> field_;
    std::size_t dim_;
    std::vector<FVector> echelon_;   // echelon_[i] has leading 1 at pivots_[i]
    std::vector<FVector> combo_;     // echelon_[i] = sum combo_[i][j] * original_[j]
    std::vector<std::size_t> pivots_;
    std::vector<FVector> original_;
};

}  // namespace skewlab

#endif
