#include "symsax/representation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symsax/error.hpp"

namespace symsax {

namespace {

constexpr double kDegenerateStd = 1e-12;

void check_layout(const TimeSeries& series, const SegmentLayout& layout) {
    if (layout.n != series.size()) {
        throw InvalidInput("segment layout covers " + std::to_string(layout.n) +
                           " points but the series has " + std::to_string(series.size()));
    }
}

}  // namespace

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw InvalidInput("time series must contain at least one value");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw InvalidInput("time series value at index " + std::to_string(i) +
                               " is not finite");
        }
    }
}

SymbolicWord::SymbolicWord(std::vector<Symbol> symbols, int alphabet_size,
                           std::size_t source_length)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size), source_length_(source_length) {
    check_alphabet_size(alphabet_size_);
    if (symbols_.empty()) throw InvalidInput("symbolic word must have at least one symbol");
    if (source_length_ < symbols_.size()) {
        throw InvalidInput("symbolic word is longer than its source series");
    }
    for (Symbol s : symbols_) {
        if (s < 1 || s > alphabet_size_) {
            throw InvalidInput("symbol " + std::to_string(s) + " outside alphabet of size " +
                               std::to_string(alphabet_size_));
        }
    }
}

std::string SymbolicWord::to_string() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(symbol_letter(s));
    return out;
}

SymbolicWord SymbolicWord::from_string(std::string_view letters, int alphabet_size,
                                       std::size_t source_length) {
    std::vector<Symbol> symbols;
    symbols.reserve(letters.size());
    for (char c : letters) symbols.push_back(symbol_from_letter(c));
    return SymbolicWord(std::move(symbols), alphabet_size, source_length);
}

std::string_view method_name(Method method) {
    switch (method) {
        case Method::ClassicSax: return "classic-sax";
        case Method::ExtremeSax: return "e-sax";
        case Method::RawEuclidean: return "raw-euclidean";
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    if (name == "classic-sax" || name == "sax") return Method::ClassicSax;
    if (name == "e-sax" || name == "esax") return Method::ExtremeSax;
    if (name == "raw-euclidean" || name == "euclidean") return Method::RawEuclidean;
    throw InvalidParameter("unknown method '" + std::string(name) +
                           "' (expected classic-sax, e-sax or raw-euclidean)");
}

NormalizedSeries z_normalize(const TimeSeries& series) {
    const auto values = series.values();
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / n);

    std::vector<double> out(values.size(), 0.0);
    if (sd < kDegenerateStd) return {TimeSeries(std::move(out)), true};
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - mean) / sd;
    return {TimeSeries(std::move(out)), false};
}

SegmentLayout segment_layout(std::size_t n, std::size_t m) {
    if (m < 1) throw InvalidParameter("word length must be at least 1");
    if (m > n) {
        throw InvalidParameter("word length " + std::to_string(m) +
                               " exceeds series length " + std::to_string(n));
    }
    SegmentLayout layout{n, m, {}};
    layout.bounds.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        layout.bounds.push_back({i * n / m, (i + 1) * n / m});
    }
    return layout;
}

std::vector<double> paa_transform(const TimeSeries& series, const SegmentLayout& layout) {
    check_layout(series, layout);
    const auto values = series.values();
    std::vector<double> out;
    out.reserve(layout.m);
    for (const Segment& seg : layout.bounds) {
        double sum = 0.0;
        for (std::size_t i = seg.begin; i < seg.end; ++i) sum += values[i];
        out.push_back(sum / static_cast<double>(seg.size()));
    }
    return out;
}

std::vector<ExtremeSummary> extreme_midpoints(const TimeSeries& series,
                                              const SegmentLayout& layout) {
    check_layout(series, layout);
    const auto values = series.values();
    std::vector<ExtremeSummary> out;
    out.reserve(layout.m);
    for (const Segment& seg : layout.bounds) {
        const auto [lo, hi] = std::minmax_element(values.begin() + static_cast<std::ptrdiff_t>(seg.begin),
                                                  values.begin() + static_cast<std::ptrdiff_t>(seg.end));
        out.push_back({*lo, *hi, (*lo + *hi) / 2.0});
    }
    return out;
}

std::vector<double> segment_coefficients(Method method, const TimeSeries& series,
                                         std::size_t m, bool normalize) {
    const SegmentLayout layout = segment_layout(series.size(), m);
    const TimeSeries source = normalize ? z_normalize(series).series : series;
    switch (method) {
        case Method::ClassicSax:
            return paa_transform(source, layout);
        case Method::ExtremeSax: {
            std::vector<double> mids;
            mids.reserve(m);
            for (const auto& e : extreme_midpoints(source, layout)) mids.push_back(e.midpoint);
            return mids;
        }
        case Method::RawEuclidean:
            break;
    }
    throw InvalidParameter("raw-euclidean has no symbolic representation");
}

SymbolicWord discretize(std::span<const double> coefficients, const BreakpointTable& table,
                        std::size_t source_length) {
    std::vector<Symbol> symbols;
    symbols.reserve(coefficients.size());
    for (double v : coefficients) symbols.push_back(symbol_for_value(v, table));
    return SymbolicWord(std::move(symbols), table.alphabet_size(), source_length);
}

SymbolicWord symbolic_transform(Method method, const TimeSeries& series, std::size_t m,
                                const BreakpointTable& table, bool normalize) {
    return discretize(segment_coefficients(method, series, m, normalize), table, series.size());
}

SymbolicWord classic_sax_transform(const TimeSeries& series, std::size_t m,
                                   const BreakpointTable& table, bool normalize) {
    return symbolic_transform(Method::ClassicSax, series, m, table, normalize);
}

SymbolicWord esax_transform(const TimeSeries& series, std::size_t m,
                            const BreakpointTable& table, bool normalize) {
    return symbolic_transform(Method::ExtremeSax, series, m, table, normalize);
}

}  // namespace symsax
