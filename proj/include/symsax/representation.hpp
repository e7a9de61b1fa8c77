#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symsax/alphabet.hpp"

namespace symsax {

// Ordered, finite, nonempty sequence of observations.
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    std::vector<double> values_;
};

// Half-open index range [begin, end).
struct Segment {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
    friend bool operator==(const Segment&, const Segment&) = default;
};

// Partition of [0, n) into m contiguous, nonempty ranges whose sizes differ by
// at most one. Segment i covers [floor(i*n/m), floor((i+1)*n/m)).
struct SegmentLayout {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Segment> bounds;
};

struct ExtremeSummary {
    double low = 0.0;
    double high = 0.0;
    double midpoint = 0.0;  // (low + high) / 2
};

class SymbolicWord {
public:
    SymbolicWord(std::vector<Symbol> symbols, int alphabet_size, std::size_t source_length);

    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    int alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t source_length() const noexcept { return source_length_; }

    // Letter rendering, 'a' for symbol 1.
    std::string to_string() const;
    static SymbolicWord from_string(std::string_view letters, int alphabet_size,
                                    std::size_t source_length);

    friend bool operator==(const SymbolicWord&, const SymbolicWord&) = default;

private:
    std::vector<Symbol> symbols_;
    int alphabet_size_;
    std::size_t source_length_;
};

enum class Method { ClassicSax, ExtremeSax, RawEuclidean };

std::string_view method_name(Method method);
Method parse_method(std::string_view name);

struct NormalizedSeries {
    TimeSeries series;
    bool degenerate = false;  // input was constant; series is all zeros
};

// Zero mean, unit population standard deviation. Series with std < 1e-12 map
// to all zeros and are flagged degenerate.
NormalizedSeries z_normalize(const TimeSeries& series);

SegmentLayout segment_layout(std::size_t n, std::size_t m);

std::vector<double> paa_transform(const TimeSeries& series, const SegmentLayout& layout);
std::vector<ExtremeSummary> extreme_midpoints(const TimeSeries& series,
                                              const SegmentLayout& layout);

SymbolicWord classic_sax_transform(const TimeSeries& series, std::size_t m,
                                   const BreakpointTable& table, bool normalize = true);
SymbolicWord esax_transform(const TimeSeries& series, std::size_t m,
                            const BreakpointTable& table, bool normalize = true);

// Per-segment coefficients ahead of discretization: PAA means for classic-SAX,
// extreme midpoints for E-SAX. Only the two symbolic methods are accepted.
std::vector<double> segment_coefficients(Method method, const TimeSeries& series,
                                         std::size_t m, bool normalize);

SymbolicWord discretize(std::span<const double> coefficients, const BreakpointTable& table,
                        std::size_t source_length);

SymbolicWord symbolic_transform(Method method, const TimeSeries& series, std::size_t m,
                                const BreakpointTable& table, bool normalize = true);

}  // namespace symsax
