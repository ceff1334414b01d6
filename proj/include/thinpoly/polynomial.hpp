// Dense univariate polynomials with exact integer coefficients.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thinpoly {

// coeffs[i] is the coefficient of t^i; the top entry is nonzero unless the
// polynomial is zero (empty vector).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);
    static IntPolynomial constant(std::int64_t c);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coeff(int i) const;
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    std::int64_t evaluate(std::int64_t t) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    // Multiplication by t^k.
    IntPolynomial shifted(int k) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    // Ascending powers with explicit "t^k", e.g. "1 + 3t + t^2".
    std::string to_string() const;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

}  // namespace thinpoly
