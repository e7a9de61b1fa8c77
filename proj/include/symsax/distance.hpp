#pragma once

#include <cstddef>
#include <span>

#include "symsax/alphabet.hpp"
#include "symsax/representation.hpp"

namespace symsax {

// Everything the lookup-table distance needs besides the two words: the
// table, and the n/m compensation factor.
class SymbolicDistanceContext {
public:
    SymbolicDistanceContext(const BreakpointTable& table, std::size_t source_length,
                            std::size_t word_length);

    const BreakpointTable& table() const noexcept { return *table_; }
    std::size_t source_length() const noexcept { return source_length_; }
    std::size_t word_length() const noexcept { return word_length_; }
    double compensation() const noexcept { return compensation_; }

    // Throws IncompatibleWords naming the first mismatched field.
    void check(const SymbolicWord& word) const;

private:
    const BreakpointTable* table_;
    std::size_t source_length_;
    std::size_t word_length_;
    double compensation_;  // n / m in floating point
};

// sqrt(n/m * sum_i lookup(s_i, t_i)^2). Serves classic-SAX and E-SAX words alike.
double symbolic_dist(const SymbolicWord& s, const SymbolicWord& t,
                     const SymbolicDistanceContext& ctx);

// Unscaled sum of squared lookup entries; no validation. Monotone in
// symbolic_dist for a fixed context, which is all nearest-neighbour search needs.
double symbolic_sum_squares(std::span<const Symbol> s, std::span<const Symbol> t,
                            const BreakpointTable& table) noexcept;

double euclidean(const TimeSeries& s, const TimeSeries& t);
double squared_euclidean(std::span<const double> s, std::span<const double> t) noexcept;

}  // namespace symsax
