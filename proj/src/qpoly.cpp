#include "bajinv/qpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "bajinv/checked.hpp"

namespace bajinv {

QPolynomial::QPolynomial(std::vector<std::uint64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
    normalize();
}

void QPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::monomial(int exponent) {
    if (exponent < 0)
        throw std::invalid_argument("monomial exponent must be nonnegative");
    std::vector<std::uint64_t> c(static_cast<std::size_t>(exponent) + 1, 0);
    c.back() = 1;
    return QPolynomial(std::move(c));
}

std::uint64_t QPolynomial::coeff(int exponent) const noexcept {
    if (exponent < 0 || exponent > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent)];
}

QPolynomial QPolynomial::scaled(std::uint64_t m) const {
    std::vector<std::uint64_t> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = checked_mul(coeffs_[i], m);
    return QPolynomial(std::move(c));
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    std::vector<std::uint64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] = checked_add(c[i], b.coeffs_[i]);
    return QPolynomial(std::move(c));
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::uint64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return QPolynomial(std::move(c));
}

QPolynomial geometric(int step, int count) {
    if (step < 1) throw std::invalid_argument("geometric step must be >= 1");
    if (count < 1) throw std::invalid_argument("geometric count must be >= 1");
    std::vector<std::uint64_t> c(
        static_cast<std::size_t>(step) * static_cast<std::size_t>(count - 1) + 1, 0);
    for (int r = 0; r < count; ++r)
        c[static_cast<std::size_t>(step) * static_cast<std::size_t>(r)] = 1;
    return QPolynomial(std::move(c));
}

QPolynomial rhs_product(int n) {
    if (n < 1) throw std::invalid_argument("rhs_product needs n >= 1");
    QPolynomial acc = QPolynomial::one();
    for (int i = 1; i <= n - 1; ++i) acc = acc * geometric(n - i, i);
    return acc;
}

std::uint64_t eval_at_one(const QPolynomial& p) {
    std::uint64_t total = 0;
    for (std::uint64_t c : p.coeffs()) total = checked_add(total, c);
    return total;
}

bool is_palindromic(const QPolynomial& p) {
    const auto& c = p.coeffs();
    return std::equal(c.begin(), c.end(), c.rbegin());
}

}  // namespace bajinv
