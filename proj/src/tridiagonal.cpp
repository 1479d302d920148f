#include "dqm/tridiagonal.hpp"

#include <algorithm>
#include <stdexcept>

namespace dqm {

TridiagonalOperator::TridiagonalOperator(std::vector<double> lower, std::vector<double> diag,
                                         std::vector<double> upper, BasisLabel basis)
    : lower_(std::move(lower)), diag_(std::move(diag)), upper_(std::move(upper)), basis_(basis)
{
    if (diag_.empty())
        throw std::invalid_argument("TridiagonalOperator: dimension must be positive");
    if (lower_.size() + 1 != diag_.size() || upper_.size() + 1 != diag_.size())
        throw std::invalid_argument("TridiagonalOperator: off-diagonals must have length dim-1");
}

TridiagonalOperator TridiagonalOperator::zero(std::size_t dim, BasisLabel basis)
{
    if (dim == 0)
        throw std::invalid_argument("TridiagonalOperator: dimension must be positive");
    return {std::vector<double>(dim - 1, 0.0), std::vector<double>(dim, 0.0),
            std::vector<double>(dim - 1, 0.0), basis};
}

TridiagonalOperator TridiagonalOperator::identity(std::size_t dim, BasisLabel basis)
{
    if (dim == 0)
        throw std::invalid_argument("TridiagonalOperator: dimension must be positive");
    return {std::vector<double>(dim - 1, 0.0), std::vector<double>(dim, 1.0),
            std::vector<double>(dim - 1, 0.0), basis};
}

double TridiagonalOperator::at(std::size_t row, std::size_t col) const
{
    if (row >= dim() || col >= dim())
        throw std::out_of_range("TridiagonalOperator::at: index outside operator");
    if (row == col)
        return diag_[row];
    if (row == col + 1)
        return lower_[col];
    if (col == row + 1)
        return upper_[row];
    return 0.0;
}

std::vector<double> TridiagonalOperator::apply(std::span<const double> v) const
{
    const std::size_t n = dim();
    auto get = [&](std::size_t i) { return i < v.size() ? v[i] : 0.0; };
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = diag_[i] * get(i);
        if (i > 0)
            acc += lower_[i - 1] * get(i - 1);
        if (i + 1 < n)
            acc += upper_[i] * get(i + 1);
        out[i] = acc;
    }
    return out;
}

TridiagonalOperator TridiagonalOperator::transpose() const
{
    return {upper_, diag_, lower_, basis_};
}

TridiagonalOperator TridiagonalOperator::scaled(double factor) const
{
    TridiagonalOperator out = *this;
    for (double& v : out.lower_) v *= factor;
    for (double& v : out.diag_) v *= factor;
    for (double& v : out.upper_) v *= factor;
    return out;
}

Eigen::MatrixXd TridiagonalOperator::to_dense() const
{
    const auto n = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = diag_[static_cast<std::size_t>(i)];
        if (i + 1 < n) {
            m(i + 1, i) = lower_[static_cast<std::size_t>(i)];
            m(i, i + 1) = upper_[static_cast<std::size_t>(i)];
        }
    }
    return m;
}

namespace {

TridiagonalOperator combine(const TridiagonalOperator& a, const TridiagonalOperator& b, double sign)
{
    if (a.dim() != b.dim() || a.basis() != b.basis())
        throw std::invalid_argument("TridiagonalOperator: operands must share dimension and basis");
    auto mix = [sign](const std::vector<double>& x, const std::vector<double>& y) {
        std::vector<double> out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            out[i] = x[i] + sign * y[i];
        return out;
    };
    return {mix(a.lower(), b.lower()), mix(a.diag(), b.diag()), mix(a.upper(), b.upper()),
            a.basis()};
}

}  // namespace

TridiagonalOperator operator+(const TridiagonalOperator& a, const TridiagonalOperator& b)
{
    return combine(a, b, 1.0);
}

TridiagonalOperator operator-(const TridiagonalOperator& a, const TridiagonalOperator& b)
{
    return combine(a, b, -1.0);
}

std::vector<double> product_diagonal(const TridiagonalOperator& a, const TridiagonalOperator& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("product_diagonal: dimension mismatch");
    const std::size_t n = a.dim();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = a.diag()[i] * b.diag()[i];
        if (i > 0)
            acc += a.lower()[i - 1] * b.upper()[i - 1];
        if (i + 1 < n)
            acc += a.upper()[i] * b.lower()[i];
        out[i] = acc;
    }
    return out;
}

Eigen::MatrixXd compose(const TridiagonalOperator& a, const TridiagonalOperator& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("compose: dimension mismatch");
    const auto n = static_cast<Eigen::Index>(a.dim());
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    // (ab)(i, j) = sum over k in {i-1, i, i+1} of a(i, k) b(k, j), |i - j| <= 2.
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = std::max<Eigen::Index>(0, i - 1); k <= std::min(n - 1, i + 1); ++k) {
            const double aik = a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
            for (Eigen::Index j = std::max<Eigen::Index>(0, k - 1); j <= std::min(n - 1, k + 1); ++j)
                out(i, j) += aik * b.at(static_cast<std::size_t>(k), static_cast<std::size_t>(j));
        }
    }
    return out;
}

TridiagonalOperator left_diagonal(std::span<const double> d, const TridiagonalOperator& t)
{
    if (d.size() != t.dim())
        throw std::invalid_argument("left_diagonal: dimension mismatch");
    std::vector<double> lower = t.lower();
    std::vector<double> diag = t.diag();
    std::vector<double> upper = t.upper();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        diag[i] *= d[i];
        if (i + 1 < diag.size()) {
            upper[i] *= d[i];
            lower[i] *= d[i + 1];
        }
    }
    return {std::move(lower), std::move(diag), std::move(upper), t.basis()};
}

}  // namespace dqm
