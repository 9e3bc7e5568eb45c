#pragma once

#include <cstdint>
#include <vector>

namespace bajinv {

// Dense polynomial in q with exact nonnegative integer coefficients,
// index = exponent. Trailing zeros are normalized away so equality is
// structural; the zero polynomial has empty support. All arithmetic is
// overflow-checked and throws std::overflow_error rather than wrapping.
class QPolynomial {
public:
    QPolynomial() = default;  // zero
    explicit QPolynomial(std::vector<std::uint64_t> coeffs);

    static QPolynomial one() { return QPolynomial({1}); }
    static QPolynomial monomial(int exponent);

    bool is_zero() const noexcept { return coeffs_.empty(); }

    // Degree of the zero polynomial is -1.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    std::uint64_t coeff(int exponent) const noexcept;

    const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }

    // Scalar multiple m*p, checked.
    QPolynomial scaled(std::uint64_t m) const;

    friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

    bool operator==(const QPolynomial&) const = default;

private:
    void normalize();
    std::vector<std::uint64_t> coeffs_;
};

// sum_{r=0}^{count-1} q^(step*r): degree step*(count-1), all coefficients 0 or 1.
QPolynomial geometric(int step, int count);

// prod_{i=1}^{n-1} geometric(n-i, i). Empty product (n = 1) is the constant 1.
// Degree sum (i-1)(n-i); coefficient sum (n-1)!; palindromic.
QPolynomial rhs_product(int n);

std::uint64_t eval_at_one(const QPolynomial& p);

bool is_palindromic(const QPolynomial& p);

}  // namespace bajinv
