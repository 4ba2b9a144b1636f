#include "dconsec/asymptotics.hpp"

#include <algorithm>
#include <stdexcept>

#include "dconsec/counts.hpp"

namespace dconsec {

namespace {

Int pow10(int k)
{
    Int p = 1;
    for (int i = 0; i < k; ++i)
        p *= 10;
    return p;
}

// ceil(|q| scaled to the 10^exponent grid)
Int ceil_ulps(const Rational& q, int exponent)
{
    Rational scaled = boost::multiprecision::abs(q) * pow10(-exponent);
    Int whole = numerator(scaled) / denominator(scaled);
    if (whole * denominator(scaled) != numerator(scaled))
        ++whole;
    return whole;
}

}  // namespace

Rational SeriesExpansion::bracket(int n, int order) const
{
    if (n < 1)
        throw std::domain_error("series bracket: n must be >= 1");
    if (order < 0 || order > max_order())
        throw std::domain_error("series bracket: no coefficient stored for that order");
    Rational sum = 0;
    Int n_pow = 1;
    for (int j = 0; j <= order; ++j) {
        sum += coeffs[static_cast<size_t>(j)] / Rational(n_pow);
        n_pow *= n;
    }
    return sum;
}

const SeriesExpansion& series_d0()
{
    static const SeriesExpansion series{{Rational(1), Rational(-4), Rational(0), Rational(20, 3),
                                         Rational(58, 3), Rational(736, 15)}};
    return series;
}

const SeriesExpansion& series_d1()
{
    static const SeriesExpansion series{{Rational(1), Rational(0), Rational(-2), Rational(-10, 3),
                                         Rational(-6), Rational(-154, 15)}};
    return series;
}

SeriesExpansion series_first_order(int d)
{
    if (d < 0)
        throw std::domain_error("series_first_order: d must be >= 0");
    return SeriesExpansion{{Rational(1), Rational(4 * (d - 1))}};
}

Rational series_bracket(int d_tag, int n, int order)
{
    if (d_tag != 0 && d_tag != 1)
        throw std::domain_error("series_bracket: only the d = 0 and d = 1 expansions are stored");
    return (d_tag == 0 ? series_d0() : series_d1()).bracket(n, order);
}

std::pair<Rational, Rational> e_squared_enclosure(int digits)
{
    if (digits < 1 || digits > 10000)
        throw std::domain_error("e_squared_enclosure: digits out of range");
    const Rational target(Int(1), pow10(digits));
    Rational sum = 0;
    Rational term = 1;  // 2^k / k!
    for (int k = 0;; ++k) {
        sum += term;
        term = term * 2 / (k + 1);
        if (k >= 1) {
            // tail sum_{j>k} 2^j/j! <= term_{k+1} / (1 - 2/(k+2))
            const Rational tail = term * Rational(k + 2, k);
            if (tail <= target)
                return {sum, sum + tail};
        }
    }
}

HighPrecisionReal HighPrecisionReal::exact(long long value)
{
    return HighPrecisionReal(Int(value), 0, Int(0));
}

HighPrecisionReal HighPrecisionReal::from_rational(const Rational& q, int digits,
                                                   const Rational& radius)
{
    if (digits < 0)
        throw std::domain_error("HighPrecisionReal: negative precision");
    if (radius < 0)
        throw std::domain_error("HighPrecisionReal: negative radius");
    const int exponent = -digits;
    const Int scale = pow10(digits);
    // truncation toward zero, at most one ulp off
    const Int mantissa = numerator(q) * scale / denominator(q);
    Int error = radius == 0 ? Int(0) : ceil_ulps(radius, exponent);
    if (Rational(mantissa, scale) != q)
        ++error;
    return HighPrecisionReal(mantissa, exponent, error);
}

void HighPrecisionReal::align(HighPrecisionReal& a, HighPrecisionReal& b)
{
    // rescaling to the smaller exponent is exact
    if (a.exponent_ == b.exponent_)
        return;
    HighPrecisionReal& high = (a.exponent_ > b.exponent_) ? a : b;
    const int target = std::min(a.exponent_, b.exponent_);
    const Int scale = pow10(high.exponent_ - target);
    high.mantissa_ *= scale;
    high.error_ *= scale;
    high.exponent_ = target;
}

HighPrecisionReal HighPrecisionReal::operator+(const HighPrecisionReal& other) const
{
    HighPrecisionReal a = *this;
    HighPrecisionReal b = other;
    align(a, b);
    return HighPrecisionReal(a.mantissa_ + b.mantissa_, a.exponent_, a.error_ + b.error_);
}

HighPrecisionReal HighPrecisionReal::operator-(const HighPrecisionReal& other) const
{
    HighPrecisionReal a = *this;
    HighPrecisionReal b = other;
    align(a, b);
    return HighPrecisionReal(a.mantissa_ - b.mantissa_, a.exponent_, a.error_ + b.error_);
}

HighPrecisionReal HighPrecisionReal::operator*(const HighPrecisionReal& other) const
{
    // |xy - ab| <= |a| eb + |b| ea + ea eb for x in a +- ea, y in b +- eb
    const Int abs_a = boost::multiprecision::abs(mantissa_);
    const Int abs_b = boost::multiprecision::abs(other.mantissa_);
    Int error = abs_a * other.error_ + abs_b * error_ + error_ * other.error_;
    return HighPrecisionReal(mantissa_ * other.mantissa_, exponent_ + other.exponent_, error);
}

HighPrecisionReal HighPrecisionReal::abs() const
{
    return HighPrecisionReal(boost::multiprecision::abs(mantissa_), exponent_, error_);
}

Rational HighPrecisionReal::value() const
{
    if (exponent_ >= 0)
        return Rational(mantissa_ * pow10(exponent_));
    return Rational(mantissa_, pow10(-exponent_));
}

Rational HighPrecisionReal::error_bound() const
{
    if (exponent_ >= 0)
        return Rational(error_ * pow10(exponent_));
    return Rational(error_, pow10(-exponent_));
}

std::string HighPrecisionReal::to_string(int significant_digits) const
{
    if (significant_digits < 1)
        throw std::domain_error("to_string: need at least one significant digit");
    if (mantissa_ == 0)
        return "0";

    const bool negative = mantissa_ < 0;
    std::string digits = Int(boost::multiprecision::abs(mantissa_)).str();
    int point = static_cast<int>(digits.size()) + exponent_;  // digits before the decimal point

    if (static_cast<int>(digits.size()) > significant_digits) {
        // round half-up at the cut
        const bool round_up = digits[static_cast<size_t>(significant_digits)] >= '5';
        digits.resize(static_cast<size_t>(significant_digits));
        if (round_up) {
            int i = significant_digits - 1;
            for (; i >= 0; --i) {
                if (digits[static_cast<size_t>(i)] != '9') {
                    ++digits[static_cast<size_t>(i)];
                    break;
                }
                digits[static_cast<size_t>(i)] = '0';
            }
            if (i < 0) {
                digits.insert(digits.begin(), '1');
                digits.pop_back();
                ++point;
            }
        }
    }

    std::string out;
    if (negative)
        out += '-';
    if (point <= 0) {
        out += "0.";
        out.append(static_cast<size_t>(-point), '0');
        out += digits;
    } else if (point >= static_cast<int>(digits.size())) {
        out += digits;
        out.append(static_cast<size_t>(point) - digits.size(), '0');
    } else {
        out.append(digits, 0, static_cast<size_t>(point));
        out += '.';
        out.append(digits, static_cast<size_t>(point), std::string::npos);
    }
    return out;
}

HighPrecisionReal e_squared(int digits)
{
    const auto [lo, hi] = e_squared_enclosure(digits);
    return HighPrecisionReal::from_rational(lo, digits + 2, hi - lo);
}

HighPrecisionReal exact_ratio_scaled(int n, int d, int digits)
{
    const Rational ratio(count_exact(n, d), factorial(n));
    const auto [lo, hi] = e_squared_enclosure(digits + 5);
    return HighPrecisionReal::from_rational(ratio * lo, digits + 5, ratio * (hi - lo));
}

HighPrecisionReal empirical_first_order(int n, int d, int digits)
{
    const HighPrecisionReal scaled = exact_ratio_scaled(n, d, digits);
    return (scaled - HighPrecisionReal::exact(1)) * HighPrecisionReal::exact(n);
}

std::vector<ConvergenceRow> convergence_report(int d, std::vector<int> n_list, int digits)
{
    std::sort(n_list.begin(), n_list.end());
    const HighPrecisionReal target = HighPrecisionReal::exact(4 * (static_cast<long long>(d) - 1));
    std::vector<ConvergenceRow> rows;
    rows.reserve(n_list.size());
    for (int n : n_list) {
        ConvergenceRow row;
        row.n = n;
        row.e_n = empirical_first_order(n, d, digits);
        row.distance = (row.e_n - target).abs();
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace dconsec
