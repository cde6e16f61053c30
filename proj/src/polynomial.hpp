#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace arrdeform {

/// Univariate polynomial in t with exact integer coefficients.
/// Characteristic polynomials land here; degree equals the ambient
/// dimension of the arrangement they describe.
class IntPoly {
public:
    IntPoly() = default;  // zero polynomial
    static IntPoly constant(mpz_class c);
    static IntPoly monomial(mpz_class c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    mpz_class coeff(std::size_t power) const;  // coefficient of t^power, 0 beyond degree

    IntPoly operator+(const IntPoly& other) const;
    IntPoly operator-(const IntPoly& other) const;
    IntPoly operator*(const IntPoly& other) const;
    IntPoly pow(std::size_t e) const;

    mpz_class operator()(const mpz_class& t) const;

    bool operator==(const IntPoly& other) const { return coeffs_ == other.coeffs_; }

    /// Coefficients of t^degree .. t^0.
    std::vector<mpz_class> coeffs_descending() const;

    /// a_k = (-1)^k [t^{degree-k}], k = 0..count-1 (the alternating-sign view).
    std::vector<mpz_class> alternating_coeffs(std::size_t count) const;

    std::string pretty() const;                    // "t^2 - 3t + 2"
    static IntPoly parse(std::string_view text);   // inverse of pretty; InputError

private:
    void trim();
    std::vector<mpz_class> coeffs_;  // ascending powers, no trailing zeros
};

}  // namespace arrdeform
