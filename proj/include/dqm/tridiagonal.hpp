#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace dqm {

/// Which index the rows and columns of an operator run over.
enum class BasisLabel { grid_x, degree_n };

/// Three-diagonal operator. lower[i] is entry (i+1, i), upper[i] is (i, i+1).
class TridiagonalOperator {
public:
    TridiagonalOperator(std::vector<double> lower, std::vector<double> diag,
                        std::vector<double> upper, BasisLabel basis);

    static TridiagonalOperator zero(std::size_t dim, BasisLabel basis);
    static TridiagonalOperator identity(std::size_t dim, BasisLabel basis);

    [[nodiscard]] std::size_t dim() const noexcept { return diag_.size(); }
    [[nodiscard]] BasisLabel basis() const noexcept { return basis_; }
    [[nodiscard]] const std::vector<double>& lower() const noexcept { return lower_; }
    [[nodiscard]] const std::vector<double>& diag() const noexcept { return diag_; }
    [[nodiscard]] const std::vector<double>& upper() const noexcept { return upper_; }

    /// Entry (row, col); zero off the three diagonals.
    [[nodiscard]] double at(std::size_t row, std::size_t col) const;

    /// y = T v. Entries of v past dim() are ignored; missing ones count as zero.
    [[nodiscard]] std::vector<double> apply(std::span<const double> v) const;

    [[nodiscard]] TridiagonalOperator transpose() const;
    [[nodiscard]] TridiagonalOperator scaled(double factor) const;
    [[nodiscard]] Eigen::MatrixXd to_dense() const;

    friend TridiagonalOperator operator+(const TridiagonalOperator& a, const TridiagonalOperator& b);
    friend TridiagonalOperator operator-(const TridiagonalOperator& a, const TridiagonalOperator& b);

private:
    std::vector<double> lower_;
    std::vector<double> diag_;
    std::vector<double> upper_;
    BasisLabel basis_;
};

/// Diagonal of the product a*b without forming it; O(dim).
std::vector<double> product_diagonal(const TridiagonalOperator& a, const TridiagonalOperator& b);

/// Dense product a*b (pentadiagonal in general).
Eigen::MatrixXd compose(const TridiagonalOperator& a, const TridiagonalOperator& b);

/// Multiply by a diagonal matrix on the left: diag(d) * t.
TridiagonalOperator left_diagonal(std::span<const double> d, const TridiagonalOperator& t);

}  // namespace dqm
