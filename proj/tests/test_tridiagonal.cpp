#include "dqm/tridiagonal.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace dqm;

namespace {

TridiagonalOperator sample(double shift = 0.0)
{
    return {{1.0, 2.0, 3.0}, {4.0 + shift, 5.0, 6.0, 7.0}, {-1.0, -2.0, -3.0}, BasisLabel::grid_x};
}

}  // namespace

TEST_CASE("construction validates band lengths")
{
    CHECK_THROWS_AS(TridiagonalOperator({1.0}, {1.0, 2.0, 3.0}, {1.0, 2.0}, BasisLabel::grid_x),
                    std::invalid_argument);
    CHECK_THROWS(TridiagonalOperator::zero(0, BasisLabel::grid_x));
    CHECK_THROWS(TridiagonalOperator::identity(0, BasisLabel::degree_n));
}

TEST_CASE("entries, dense form and apply agree")
{
    const auto t = sample();
    CHECK(t.dim() == 4);
    CHECK(t.at(1, 0) == 1.0);
    CHECK(t.at(0, 1) == -1.0);
    CHECK(t.at(0, 2) == 0.0);
    const Eigen::MatrixXd d = t.to_dense();
    const std::vector<double> v{1.0, -2.0, 0.5, 3.0};
    const auto y = t.apply(v);
    const Eigen::VectorXd ref = d * Eigen::Map<const Eigen::VectorXd>(v.data(), 4);
    for (int i = 0; i < 4; ++i)
        CHECK(y[static_cast<std::size_t>(i)] == doctest::Approx(ref(i)));
}

TEST_CASE("transpose, scaling and sums")
{
    const auto t = sample();
    CHECK(t.transpose().to_dense() == t.to_dense().transpose());
    CHECK(t.scaled(2.0).to_dense() == 2.0 * t.to_dense());
    CHECK((t + sample(1.0)).to_dense() == t.to_dense() + sample(1.0).to_dense());
    CHECK((t - t).to_dense() == Eigen::MatrixXd::Zero(4, 4));
    CHECK(TridiagonalOperator::identity(4, BasisLabel::grid_x).to_dense() == Eigen::MatrixXd::Identity(4, 4));
}

TEST_CASE("products")
{
    const auto a = sample();
    const auto b = sample(2.5).transpose();
    const Eigen::MatrixXd ref = a.to_dense() * b.to_dense();
    CHECK((compose(a, b) - ref).cwiseAbs().maxCoeff() == 0.0);
    const auto diag = product_diagonal(a, b);
    for (int i = 0; i < 4; ++i)
        CHECK(diag[static_cast<std::size_t>(i)] == doctest::Approx(ref(i, i)));
    const std::vector<double> d{2.0, -1.0, 0.5, 3.0};
    const Eigen::MatrixXd left = Eigen::Map<const Eigen::VectorXd>(d.data(), 4).asDiagonal() * a.to_dense();
    CHECK(left_diagonal(d, a).to_dense() == left);
}

TEST_CASE("dimension mismatches are rejected")
{
    const auto a = sample();
    const auto z = TridiagonalOperator::zero(3, BasisLabel::grid_x);
    CHECK_THROWS_AS(compose(a, z), std::invalid_argument);
    CHECK_THROWS_AS(left_diagonal(std::vector<double>{1.0}, a), std::invalid_argument);
}
