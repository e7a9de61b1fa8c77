#include "symsax/alphabet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "symsax/error.hpp"

namespace symsax {

namespace {

// Acklam's rational approximation, used only as the starting point.
double initial_quantile(double p) {
    constexpr std::array<double, 6> a{-3.969683028665376e+01, 2.209460984245205e+02,
                                      -2.759285104469687e+02, 1.383577518672690e+02,
                                      -3.066479806614716e+01, 2.506628277459239e+00};
    constexpr std::array<double, 5> b{-5.447609879822406e+01, 1.615858368580409e+02,
                                      -1.556989798598866e+02, 6.680131188771972e+01,
                                      -1.328068155288572e+01};
    constexpr std::array<double, 6> c{-7.784894002430293e-03, -3.223964580411365e-01,
                                      -2.400758277161838e+00, -2.549732539343734e+00,
                                      4.374664141464968e+00,  2.938163982698783e+00};
    constexpr std::array<double, 4> d{7.784695709041462e-03, 3.224671290700398e-01,
                                      2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw InvalidParameter("inverse_normal_cdf: probability must lie in (0, 1), got " +
                               std::to_string(p));
    }
    if (p == 0.5) return 0.0;
    const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);
    double x = initial_quantile(p);
    for (int iter = 0; iter < 3; ++iter) {
        const double e = normal_cdf(x) - p;
        const double u = e * sqrt_2pi * std::exp(0.5 * x * x);
        x -= u / (1.0 + 0.5 * x * u);
    }
    return x;
}

void check_alphabet_size(int alphabet_size) {
    if (alphabet_size < kMinAlphabetSize) {
        throw InvalidParameter("alphabet size " + std::to_string(alphabet_size) +
                               " is below the minimum of " + std::to_string(kMinAlphabetSize));
    }
    if (alphabet_size > kMaxAlphabetSize) {
        throw InvalidParameter("alphabet size " + std::to_string(alphabet_size) +
                               " exceeds the maximum of " + std::to_string(kMaxAlphabetSize));
    }
}

std::vector<double> compute_breakpoints(int alphabet_size) {
    check_alphabet_size(alphabet_size);
    const int count = alphabet_size - 1;
    std::vector<double> beta(static_cast<std::size_t>(count), 0.0);
    // Lower half from the quantile function, upper half mirrored so the
    // table is exactly antisymmetric.
    for (int k = 1; 2 * k < alphabet_size; ++k) {
        const double q = inverse_normal_cdf(static_cast<double>(k) / alphabet_size);
        beta[static_cast<std::size_t>(k - 1)] = q;
        beta[static_cast<std::size_t>(count - k)] = -q;
    }
    return beta;
}

LookupMatrix::LookupMatrix(int size, std::vector<double> cells)
    : size_(size), cells_(std::move(cells)) {
    if (cells_.size() != static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_)) {
        throw InvalidInput("lookup matrix cell count does not match its size");
    }
}

LookupMatrix build_lookup_table(std::span<const double> breakpoints) {
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i - 1] < breakpoints[i])) {
            throw InvalidInput("breakpoints must be strictly increasing (violated at index " +
                               std::to_string(i) + ")");
        }
    }
    for (double b : breakpoints) {
        if (!std::isfinite(b)) throw InvalidInput("breakpoints must be finite");
    }
    const int a = static_cast<int>(breakpoints.size()) + 1;
    std::vector<double> cells(static_cast<std::size_t>(a * a), 0.0);
    for (int r = 1; r <= a; ++r) {
        for (int c = 1; c <= a; ++c) {
            if (std::abs(r - c) <= 1) continue;
            const int hi = std::max(r, c);
            const int lo = std::min(r, c);
            // 1-based beta_{hi-1} - beta_{lo}
            cells[static_cast<std::size_t>((r - 1) * a + (c - 1))] =
                breakpoints[static_cast<std::size_t>(hi - 2)] -
                breakpoints[static_cast<std::size_t>(lo - 1)];
        }
    }
    return LookupMatrix(a, std::move(cells));
}

BreakpointTable::BreakpointTable(int alphabet_size)
    : alphabet_size_(alphabet_size),
      breakpoints_(compute_breakpoints(alphabet_size)),
      lookup_(build_lookup_table(breakpoints_)) {
    squared_.reserve(lookup_.cells().size());
    for (double v : lookup_.cells()) squared_.push_back(v * v);
}

const BreakpointTable& table_for(int alphabet_size) {
    check_alphabet_size(alphabet_size);
    static std::array<std::unique_ptr<const BreakpointTable>, kMaxAlphabetSize + 1> tables;
    static std::array<std::once_flag, kMaxAlphabetSize + 1> flags;
    const auto slot = static_cast<std::size_t>(alphabet_size);
    std::call_once(flags[slot], [&] {
        tables[slot] = std::make_unique<const BreakpointTable>(alphabet_size);
    });
    return *tables[slot];
}

Symbol symbol_for_value(double v, const BreakpointTable& table) {
    if (!std::isfinite(v)) {
        throw InvalidInput("symbol_for_value: value must be finite");
    }
    const auto beta = table.breakpoints();
    const auto above = std::upper_bound(beta.begin(), beta.end(), v);
    return static_cast<Symbol>(std::distance(beta.begin(), above) + 1);
}

char symbol_letter(Symbol s) {
    if (s < 1 || s > kMaxAlphabetSize) {
        throw InvalidInput("symbol index " + std::to_string(s) + " has no letter");
    }
    return static_cast<char>('a' + (s - 1));
}

Symbol symbol_from_letter(char c) {
    if (c < 'a' || c > 'z') {
        throw InvalidInput(std::string("'") + c + "' is not a symbol letter");
    }
    return static_cast<Symbol>(c - 'a' + 1);
}

}  // namespace symsax
