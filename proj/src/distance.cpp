#include "symsax/distance.hpp"

#include <cmath>
#include <string>

#include "symsax/error.hpp"

namespace symsax {

SymbolicDistanceContext::SymbolicDistanceContext(const BreakpointTable& table,
                                                 std::size_t source_length,
                                                 std::size_t word_length)
    : table_(&table), source_length_(source_length), word_length_(word_length) {
    if (word_length_ < 1) throw InvalidParameter("word length must be at least 1");
    if (word_length_ > source_length_) {
        throw InvalidParameter("word length " + std::to_string(word_length_) +
                               " exceeds source length " + std::to_string(source_length_));
    }
    compensation_ = static_cast<double>(source_length_) / static_cast<double>(word_length_);
}

void SymbolicDistanceContext::check(const SymbolicWord& word) const {
    if (word.size() != word_length_) {
        throw IncompatibleWords("word_length", "word length " + std::to_string(word.size()) +
                                                   " does not match context word length " +
                                                   std::to_string(word_length_));
    }
    if (word.alphabet_size() != table_->alphabet_size()) {
        throw IncompatibleWords("alphabet_size",
                                "word alphabet size " + std::to_string(word.alphabet_size()) +
                                    " does not match table alphabet size " +
                                    std::to_string(table_->alphabet_size()));
    }
    if (word.source_length() != source_length_) {
        throw IncompatibleWords("source_length",
                                "word source length " + std::to_string(word.source_length()) +
                                    " does not match context source length " +
                                    std::to_string(source_length_));
    }
}

double symbolic_sum_squares(std::span<const Symbol> s, std::span<const Symbol> t,
                            const BreakpointTable& table) noexcept {
    const auto sq = table.squared_lookup();
    const std::size_t a = static_cast<std::size_t>(table.alphabet_size());
    double sum = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        sum += sq[(s[i] - 1u) * a + (t[i] - 1u)];
    }
    return sum;
}

double symbolic_dist(const SymbolicWord& s, const SymbolicWord& t,
                     const SymbolicDistanceContext& ctx) {
    if (s.size() != t.size()) {
        throw IncompatibleWords("word_length", "words have different lengths (" +
                                                   std::to_string(s.size()) + " vs " +
                                                   std::to_string(t.size()) + ")");
    }
    if (s.alphabet_size() != t.alphabet_size()) {
        throw IncompatibleWords("alphabet_size", "words use different alphabet sizes (" +
                                                     std::to_string(s.alphabet_size()) + " vs " +
                                                     std::to_string(t.alphabet_size()) + ")");
    }
    if (s.source_length() != t.source_length()) {
        throw IncompatibleWords("source_length", "words come from series of different lengths (" +
                                                     std::to_string(s.source_length()) + " vs " +
                                                     std::to_string(t.source_length()) + ")");
    }
    ctx.check(s);
    return std::sqrt(ctx.compensation() * symbolic_sum_squares(s.symbols(), t.symbols(), ctx.table()));
}

double squared_euclidean(std::span<const double> s, std::span<const double> t) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double d = s[i] - t[i];
        sum += d * d;
    }
    return sum;
}

double euclidean(const TimeSeries& s, const TimeSeries& t) {
    if (s.size() != t.size()) {
        throw IncompatibleSeries("cannot compare series of lengths " + std::to_string(s.size()) +
                                 " and " + std::to_string(t.size()));
    }
    return std::sqrt(squared_euclidean(s.values(), t.values()));
}

}  // namespace symsax
