#pragma once

#include <optional>
#include <vector>

#include "grlpa/scalar.hpp"

namespace grlpa {

/// Dense matrix over an exact field, for internal linear algebra
/// (row reduction, solving, kernels, inverses). Row-major.
class ScalarMatrix {
public:
    ScalarMatrix(int rows, int cols, const Field& f);
    static ScalarMatrix identity(int n, const Field& f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(int i, int j) const { return data_[i * cols_ + j]; }
    Scalar& at(int i, int j) { return data_[i * cols_ + j]; }

    ScalarMatrix operator+(const ScalarMatrix& o) const;
    ScalarMatrix operator-(const ScalarMatrix& o) const;
    ScalarMatrix operator*(const ScalarMatrix& o) const;
    bool operator==(const ScalarMatrix& o) const;

    bool is_zero() const;

    /// Reduced row echelon form; returns pivot column per pivot row.
    std::vector<int> rref();

    int rank() const;
    /// Basis of the null space (as column vectors).
    std::vector<std::vector<Scalar>> kernel_basis() const;
    /// Indices of a maximal set of linearly independent columns.
    std::vector<int> independent_columns() const;
    /// Solves A x = b; empty optional when inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
    /// Inverse of a square matrix; empty optional when singular.
    std::optional<ScalarMatrix> inverse() const;

private:
    int rows_, cols_;
    Field field_;
    std::vector<Scalar> data_;
};

} // namespace grlpa
