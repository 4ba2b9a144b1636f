#ifndef DCONSEC_ASYMPTOTICS_HPP
#define DCONSEC_ASYMPTOTICS_HPP

#include <string>
#include <utility>
#include <vector>

#include "dconsec/int_types.hpp"

namespace dconsec {

// Coefficients c_j of a bracket B(n) = sum_j c_j n^-j, the factor multiplying
// e^-2 in the expansions of a_{n,d}/n!.
struct SeriesExpansion {
    std::vector<Rational> coeffs;

    // Exact value of the bracket truncated at n^-order. order must index a
    // stored coefficient and n must be >= 1.
    Rational bracket(int n, int order) const;

    int max_order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Fifth-order expansions for the circular case and for d = 1.
const SeriesExpansion& series_d0();
const SeriesExpansion& series_d1();

// First-order bracket 1 + 4(d-1)/n shared by every d.
SeriesExpansion series_first_order(int d);

// Truncated bracket of the d_tag series, d_tag in {0, 1}, order in 0..5.
Rational series_bracket(int d_tag, int n, int order);

// Enclosure lo <= e^2 <= hi with hi - lo <= 10^-digits, from the exact
// Taylor partial sum of exp(2) plus a geometric tail bound.
std::pair<Rational, Rational> e_squared_enclosure(int digits);

/* A decimal float value = mantissa * 10^exponent carrying a rigorous
 * absolute error bound (in the same 10^exponent scale). Sums, differences
 * and products are exact on mantissas, so the bound only ever grows by
 * propagation; rounding happens once, when a rational is converted in, and
 * is absorbed into the bound.
 */
class HighPrecisionReal {
public:
    HighPrecisionReal() = default;  // exact zero

    static HighPrecisionReal exact(long long value);

    // Truncate q to `digits` fractional decimal digits. `radius` is a prior
    // uncertainty around q (e.g. a series tail) folded into the bound along
    // with the truncation error.
    static HighPrecisionReal from_rational(const Rational& q, int digits,
                                           const Rational& radius = Rational(0));

    HighPrecisionReal operator+(const HighPrecisionReal& other) const;
    HighPrecisionReal operator-(const HighPrecisionReal& other) const;
    HighPrecisionReal operator*(const HighPrecisionReal& other) const;
    HighPrecisionReal abs() const;

    Rational value() const;        // center, exact
    Rational error_bound() const;  // absolute, exact
    Rational lower() const { return value() - error_bound(); }
    Rational upper() const { return value() + error_bound(); }

    // Whole enclosure of *this below the whole enclosure of other.
    bool certainly_less(const HighPrecisionReal& other) const { return upper() < other.lower(); }

    // Decimal rendering of the center, rounded to the given number of
    // significant digits.
    std::string to_string(int significant_digits) const;

private:
    HighPrecisionReal(Int mantissa, int exponent, Int error)
        : mantissa_(std::move(mantissa)), exponent_(exponent), error_(std::move(error))
    {
    }

    static void align(HighPrecisionReal& a, HighPrecisionReal& b);

    Int mantissa_ = 0;
    int exponent_ = 0;
    Int error_ = 0;
};

// Working precision (decimal digits) used by the observable quantities below.
inline constexpr int kDefaultDigits = 30;

// e^2 with error bound <= 10^-digits.
HighPrecisionReal e_squared(int digits = kDefaultDigits);

// (a_{n,d} / n!) * e^2.
HighPrecisionReal exact_ratio_scaled(int n, int d, int digits = kDefaultDigits);

// e_n = n * (exact_ratio_scaled(n, d) - 1); approaches 4(d-1) as n grows.
HighPrecisionReal empirical_first_order(int n, int d, int digits = kDefaultDigits);

struct ConvergenceRow {
    int n = 0;
    HighPrecisionReal e_n;
    HighPrecisionReal distance;  // |e_n - 4(d-1)|
};

// Rows in increasing n.
std::vector<ConvergenceRow> convergence_report(int d, std::vector<int> n_list,
                                               int digits = kDefaultDigits);

}  // namespace dconsec

#endif
