#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace symsax {

// Symbols are 1-based indices; 1 renders as 'a'.
using Symbol = std::uint8_t;

inline constexpr int kMinAlphabetSize = 2;
inline constexpr int kMaxAlphabetSize = 26;

// Standard normal CDF.
double normal_cdf(double x);

// Quantile function of N(0,1) for p in (0,1). Rational initial guess refined
// with Halley steps against normal_cdf; absolute error well below 1e-12 over
// the range used for breakpoints.
double inverse_normal_cdf(double p);

// Square matrix of pairwise symbol distances, 1-based indexing.
class LookupMatrix {
public:
    LookupMatrix() = default;
    LookupMatrix(int size, std::vector<double> cells);

    int size() const noexcept { return size_; }
    double operator()(int row, int col) const noexcept {
        return cells_[static_cast<std::size_t>((row - 1) * size_ + (col - 1))];
    }
    std::span<const double> cells() const noexcept { return cells_; }

private:
    int size_ = 0;
    std::vector<double> cells_;
};

// The a-1 equiprobable N(0,1) breakpoints for alphabet size a.
std::vector<double> compute_breakpoints(int alphabet_size);

// lookup(r,c) = 0 for |r-c| <= 1, otherwise beta_{max(r,c)-1} - beta_{min(r,c)}.
LookupMatrix build_lookup_table(std::span<const double> breakpoints);

class BreakpointTable {
public:
    explicit BreakpointTable(int alphabet_size);

    int alphabet_size() const noexcept { return alphabet_size_; }
    std::span<const double> breakpoints() const noexcept { return breakpoints_; }
    const LookupMatrix& lookup() const noexcept { return lookup_; }

    // lookup(r,c)^2, flattened row-major with 0-based indices; the hot path
    // of the distance kernel reads this directly.
    std::span<const double> squared_lookup() const noexcept { return squared_; }

private:
    int alphabet_size_;
    std::vector<double> breakpoints_;
    LookupMatrix lookup_;
    std::vector<double> squared_;
};

// Shared immutable table for each alphabet size, built once on first use.
const BreakpointTable& table_for(int alphabet_size);

// Returns k with beta_{k-1} <= v < beta_k; a value equal to a breakpoint
// lands in the upper bin.
Symbol symbol_for_value(double v, const BreakpointTable& table);

char symbol_letter(Symbol s);
Symbol symbol_from_letter(char c);

void check_alphabet_size(int alphabet_size);

}  // namespace symsax
