#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symsax/distance.hpp"
#include "symsax/representation.hpp"

namespace symsax {

struct LabeledSeries {
    std::string label;  // opaque class token
    TimeSeries series;
};

struct LabeledDataset {
    std::string name;
    std::vector<LabeledSeries> instances;

    std::size_t size() const noexcept { return instances.size(); }
    // Length shared by every series; throws InvalidInput if lengths differ or
    // the dataset is empty.
    std::size_t series_length() const;
    std::vector<std::string> distinct_labels() const;  // sorted
};

struct LabeledWord {
    std::string label;
    SymbolicWord word;
};

enum class TrainErrorMode {
    LeaveOneOut,     // each train instance classified against the others
    Resubstitution,  // each train instance classified against the full set, itself included
};

std::string_view train_error_mode_name(TrainErrorMode mode);
TrainErrorMode parse_train_error_mode(std::string_view name);

std::vector<int> default_alphabet_grid();  // 3..20 inclusive

// max(1, floor(n / 8))
std::size_t default_word_length(std::size_t series_length);

struct ExperimentParams {
    Method method = Method::ExtremeSax;
    std::size_t word_length = 0;  // 0 selects default_word_length
    int alphabet_size = 4;        // used by loocv_error; evaluate selects from the grid
    bool normalize = true;
    std::vector<int> alphabet_grid = default_alphabet_grid();
    TrainErrorMode train_error = TrainErrorMode::LeaveOneOut;
    unsigned jobs = 1;  // worker threads for per-query work; results do not depend on it

    std::size_t resolved_word_length(std::size_t series_length) const;
};

struct EvalResult {
    std::string dataset;
    Method method = Method::ExtremeSax;
    std::size_t word_length = 0;
    int chosen_alphabet = 0;  // 0 for raw-euclidean
    double train_error = 0.0;
    double test_error = 0.0;
    std::size_t misclassified = 0;
    std::size_t total = 0;

    friend bool operator==(const EvalResult&, const EvalResult&) = default;
};

struct AlphabetChoice {
    int alphabet_size = 0;
    double train_error = 0.0;
};

struct Tally {
    std::size_t wins_classic = 0;
    std::size_t wins_esax = 0;
    std::size_t ties = 0;

    friend bool operator==(const Tally&, const Tally&) = default;
};

// Distances closer than this (relative, floored at 1 in absolute terms) are
// ties, resolved in favour of the earliest candidate. Keeps the tie rule
// stable against last-bit differences in summation order.
inline constexpr double kTieTolerance = 1e-9;

// True when `candidate` beats the current best under the tie rule above.
inline bool strictly_closer(double candidate, double best) noexcept {
    return candidate < best - kTieTolerance * (best > 1.0 ? best : 1.0);
}

std::string nn1_classify(const SymbolicWord& query, std::span<const LabeledWord> train,
                         const SymbolicDistanceContext& ctx);

// Leave-one-out 1NN error of params.method at params.alphabet_size.
double loocv_error(const LabeledDataset& dataset, const ExperimentParams& params);

// Train-split error for every grid value at fixed word length; the smallest
// alphabet size among those with minimum error wins.
AlphabetChoice select_alphabet_size(const LabeledDataset& train, const ExperimentParams& params);

EvalResult evaluate(const LabeledDataset& train, const LabeledDataset& test,
                    const ExperimentParams& params);

// Pairs are (classic-SAX result, E-SAX result) for the same dataset.
Tally compare_methods(std::span<const std::pair<EvalResult, EvalResult>> results);

}  // namespace symsax
