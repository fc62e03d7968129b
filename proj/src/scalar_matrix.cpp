#include "grlpa/scalar_matrix.hpp"

namespace grlpa {

ScalarMatrix::ScalarMatrix(int rows, int cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), data_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

ScalarMatrix ScalarMatrix::identity(int n, const Field& f) {
    ScalarMatrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
    ScalarMatrix r(rows_, cols_, field_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
    ScalarMatrix r(rows_, cols_, field_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw StructuralError("matrix dimension mismatch");
    ScalarMatrix r(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

std::vector<int> ScalarMatrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int i = row; i < rows_; ++i)
            if (!at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(row, j));
        Scalar inv = at(row, col).inverse();
        for (int j = col; j < cols_; ++j) at(row, j) = at(row, j) * inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            Scalar factor = at(i, col);
            for (int j = col; j < cols_; ++j) at(i, j) = at(i, j) - factor * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int ScalarMatrix::rank() const {
    ScalarMatrix copy = *this;
    return static_cast<int>(copy.rref().size());
}

std::vector<std::vector<Scalar>> ScalarMatrix::kernel_basis() const {
    ScalarMatrix r = *this;
    std::vector<int> pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(field_));
        v[free] = Scalar::one(field_);
        for (size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -r.at(static_cast<int>(pr), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<int> ScalarMatrix::independent_columns() const {
    ScalarMatrix copy = *this;
    return copy.rref();
}

std::optional<std::vector<Scalar>> ScalarMatrix::solve(const std::vector<Scalar>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw StructuralError("solve: size mismatch");
    ScalarMatrix aug(rows_, cols_ + 1, field_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    for (int c : pivots)
        if (c == cols_) return std::nullopt;
    std::vector<Scalar> x(cols_, Scalar::zero(field_));
    for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug.at(static_cast<int>(pr), cols_);
    return x;
}

std::optional<ScalarMatrix> ScalarMatrix::inverse() const {
    if (rows_ != cols_) throw StructuralError("inverse: not square");
    ScalarMatrix aug(rows_, 2 * cols_, field_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar::one(field_);
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_) return std::nullopt;
    for (int i = 0; i < rows_; ++i)
        if (pivots[i] != i) return std::nullopt;
    ScalarMatrix inv(rows_, cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

} // namespace grlpa
