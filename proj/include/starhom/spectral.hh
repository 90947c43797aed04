/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STARHOM_GUARD_SPECTRAL_HH
#define STARHOM_GUARD_SPECTRAL_HH 1

#include <starhom/graph.hh>

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace starhom
{
    using BigInt = boost::multiprecision::cpp_int;

    /**
     * Integer polynomial, coefficients in ascending degree, no trailing zeros.
     */
    class IntPolynomial
    {
        private:
            std::vector<BigInt> _coeffs;

            auto trim() -> void;

        public:
            IntPolynomial() = default;
            explicit IntPolynomial(std::vector<BigInt> ascending);

            // (x - root)^power
            static auto linear_power(long root, int power) -> IntPolynomial;

            auto is_zero() const -> bool { return _coeffs.empty(); }

            // -1 for the zero polynomial
            auto degree() const -> int { return int(_coeffs.size()) - 1; }
            auto coefficient(int i) const -> BigInt;
            auto coefficients() const -> const std::vector<BigInt> & { return _coeffs; }

            auto evaluate(const BigInt & x) const -> BigInt;

            auto operator* (const IntPolynomial &) const -> IntPolynomial;
            auto operator== (const IntPolynomial &) const -> bool = default;

            // space-separated ascending coefficients
            auto to_string() const -> std::string;
    };

    auto char_poly(const Graph &) -> IntPolynomial;

    // (x - 2p)(x - p + 2)^{p+1}(x + 2)^{(p-1)(p+2)/2}
    auto line_complete_charpoly(int p) -> IntPolynomial;

    // exact quotient of f by a monic d, if the remainder vanishes
    auto poly_divides(const IntPolynomial & d, const IntPolynomial & f) -> std::optional<IntPolynomial>;

    auto eigen_multiplicity(const IntPolynomial & f, long lambda) -> int;
    auto eigen_multiplicity_lower(const Graph &, long lambda) -> int;
}

#endif
