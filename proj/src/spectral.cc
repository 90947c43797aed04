/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <starhom/spectral.hh>

#include <algorithm>

using std::optional;
using std::vector;

namespace starhom
{
    IntPolynomial::IntPolynomial(vector<BigInt> ascending) :
        _coeffs(std::move(ascending))
    {
        trim();
    }

    auto IntPolynomial::trim() -> void
    {
        while (! _coeffs.empty() && _coeffs.back() == 0)
            _coeffs.pop_back();
    }

    auto IntPolynomial::linear_power(long root, int power) -> IntPolynomial
    {
        IntPolynomial result({ BigInt(1) });
        IntPolynomial factor({ BigInt(-root), BigInt(1) });
        for (int i = 0 ; i < power ; ++i)
            result = result * factor;
        return result;
    }

    auto IntPolynomial::coefficient(int i) const -> BigInt
    {
        if (i < 0 || i >= int(_coeffs.size()))
            return 0;
        return _coeffs[i];
    }

    auto IntPolynomial::evaluate(const BigInt & x) const -> BigInt
    {
        BigInt r = 0;
        for (auto it = _coeffs.rbegin() ; it != _coeffs.rend() ; ++it)
            r = r * x + *it;
        return r;
    }

    auto IntPolynomial::operator* (const IntPolynomial & other) const -> IntPolynomial
    {
        if (is_zero() || other.is_zero())
            return IntPolynomial{};
        vector<BigInt> c(_coeffs.size() + other._coeffs.size() - 1, 0);
        for (std::size_t i = 0 ; i < _coeffs.size() ; ++i)
            for (std::size_t j = 0 ; j < other._coeffs.size() ; ++j)
                c[i + j] += _coeffs[i] * other._coeffs[j];
        return IntPolynomial(c);
    }

    auto IntPolynomial::to_string() const -> std::string
    {
        if (is_zero())
            return "0";
        std::string s;
        for (std::size_t i = 0 ; i < _coeffs.size() ; ++i) {
            if (i)
                s += ' ';
            s += _coeffs[i].str();
        }
        return s;
    }

    auto char_poly(const Graph & g) -> IntPolynomial
    {
        int n = g.size();
        if (n == 0)
            return IntPolynomial({ BigInt(1) });

        auto a = [&] (int i, int j) -> long { return g.has_edge(i, j) ? 1 : 0; };

        // descending coefficients of det(xI - A) for the trailing principal block
        vector<BigInt> c{ BigInt(1), BigInt(-a(n - 1, n - 1)) };
        for (int r = n - 2 ; r >= 0 ; --r) {
            int s = n - 1 - r;

            // t = 1, -a_rr, -R C, -R M C, ..., -R M^{s-1} C
            vector<BigInt> t{ BigInt(1), BigInt(-a(r, r)) };
            vector<BigInt> col(s);
            for (int i = 0 ; i < s ; ++i)
                col[i] = a(r + 1 + i, r);
            for (int step = 0 ; step < s ; ++step) {
                BigInt rc = 0;
                for (int i = 0 ; i < s ; ++i)
                    if (a(r, r + 1 + i))
                        rc += col[i];
                t.push_back(-rc);
                if (step + 1 < s) {
                    vector<BigInt> next(s, 0);
                    for (int i = 0 ; i < s ; ++i)
                        for (auto w : g.neighbours(r + 1 + i))
                            if (w > r)
                                next[i] += col[w - r - 1];
                    col = std::move(next);
                }
            }

            vector<BigInt> nc(s + 2, 0);
            for (int i = 0 ; i < s + 2 ; ++i)
                for (int j = 0 ; j <= std::min(i, s) ; ++j)
                    nc[i] += t[i - j] * c[j];
            c = std::move(nc);
        }

        std::reverse(c.begin(), c.end());
        return IntPolynomial(c);
    }

    auto line_complete_charpoly(int p) -> IntPolynomial
    {
        if (p < 2)
            throw Error(ErrorKind::invalid_parameter, "closed form needs p >= 2");
        return IntPolynomial::linear_power(2 * p, 1)
            * IntPolynomial::linear_power(p - 2, p + 1)
            * IntPolynomial::linear_power(-2, (p - 1) * (p + 2) / 2);
    }

    auto poly_divides(const IntPolynomial & d, const IntPolynomial & f) -> optional<IntPolynomial>
    {
        if (d.is_zero())
            throw Error(ErrorKind::invalid_parameter, "division by the zero polynomial");
        if (f.is_zero())
            return IntPolynomial{};
        if (f.degree() < d.degree())
            return std::nullopt;

        auto rem = f.coefficients();
        auto & dc = d.coefficients();
        int dd = d.degree();
        auto lead = dc.back();
        vector<BigInt> q(f.degree() - dd + 1, 0);
        for (int i = f.degree() ; i >= dd ; --i) {
            if (rem[i] == 0)
                continue;
            if (rem[i] % lead != 0)
                return std::nullopt;
            BigInt m = rem[i] / lead;
            q[i - dd] = m;
            for (int j = 0 ; j <= dd ; ++j)
                rem[i - dd + j] -= m * dc[j];
        }
        for (int i = 0 ; i < dd ; ++i)
            if (rem[i] != 0)
                return std::nullopt;
        return IntPolynomial(q);
    }

    auto eigen_multiplicity(const IntPolynomial & f, long lambda) -> int
    {
        if (f.is_zero())
            throw Error(ErrorKind::invalid_parameter, "every value is a root of the zero polynomial");
        auto factor = IntPolynomial::linear_power(lambda, 1);
        int m = 0;
        auto current = f;
        while (auto q = poly_divides(factor, current)) {
            ++m;
            current = *q;
        }
        return m;
    }

    auto eigen_multiplicity_lower(const Graph & g, long lambda) -> int
    {
        return eigen_multiplicity(char_poly(g), lambda);
    }
}
