#include "symsax/classification.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "symsax/error.hpp"
#include "symsax/parallel.hpp"

namespace symsax {

namespace {

// Per-instance representation at a fixed method / word length, before the
// alphabet is chosen. For raw-euclidean, holds the (optionally normalized)
// series itself.
struct EncodedSplit {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> coefficients;
    std::size_t source_length = 0;
};

EncodedSplit encode(const LabeledDataset& data, Method method, std::size_t m, bool normalize,
                    unsigned jobs) {
    EncodedSplit out;
    out.source_length = data.series_length();
    out.labels.reserve(data.size());
    for (const auto& inst : data.instances) out.labels.push_back(inst.label);
    out.coefficients.resize(data.size());
    parallel_for(data.size(), jobs, [&](std::size_t i) {
        const TimeSeries& s = data.instances[i].series;
        if (method == Method::RawEuclidean) {
            const TimeSeries src = normalize ? z_normalize(s).series : s;
            out.coefficients[i].assign(src.values().begin(), src.values().end());
        } else {
            out.coefficients[i] = segment_coefficients(method, s, m, normalize);
        }
    });
    return out;
}

std::vector<SymbolicWord> words_at(const EncodedSplit& split, const BreakpointTable& table) {
    std::vector<SymbolicWord> words;
    words.reserve(split.coefficients.size());
    for (const auto& c : split.coefficients) words.push_back(discretize(c, table, split.source_length));
    return words;
}

constexpr std::size_t kNoSkip = std::numeric_limits<std::size_t>::max();

// Index of the nearest candidate, earliest index on ties. `skip` excludes one
// candidate (the query itself under leave-one-out).
template <typename DistanceFn>
std::size_t nearest(std::size_t candidates, std::size_t skip, DistanceFn&& dist) {
    std::size_t best_index = kNoSkip;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < candidates; ++j) {
        if (j == skip) continue;
        const double d = dist(j);
        if (best_index == kNoSkip || strictly_closer(d, best)) {
            best = d;
            best_index = j;
        }
    }
    return best_index;
}

// Misclassification count for each query of `queries` against `reference`.
// When the two are the same split, `leave_one_out` skips the query's own slot.
std::size_t count_errors(const EncodedSplit& queries, const EncodedSplit& reference,
                         const BreakpointTable* table, bool leave_one_out, unsigned jobs) {
    std::vector<unsigned char> wrong(queries.labels.size(), 0);
    if (table != nullptr) {
        const auto query_words = words_at(queries, *table);
        const auto ref_words = leave_one_out ? query_words : words_at(reference, *table);
        parallel_for(query_words.size(), jobs, [&](std::size_t i) {
            const auto q = query_words[i].symbols();
            const std::size_t j = nearest(ref_words.size(), leave_one_out ? i : kNoSkip,
                                          [&](std::size_t k) {
                                              return symbolic_sum_squares(q, ref_words[k].symbols(), *table);
                                          });
            wrong[i] = reference.labels[j] != queries.labels[i];
        });
    } else {
        parallel_for(queries.labels.size(), jobs, [&](std::size_t i) {
            const auto& q = queries.coefficients[i];
            const std::size_t j = nearest(reference.coefficients.size(),
                                          leave_one_out ? i : kNoSkip, [&](std::size_t k) {
                                              return squared_euclidean(q, reference.coefficients[k]);
                                          });
            wrong[i] = reference.labels[j] != queries.labels[i];
        });
    }
    std::size_t errors = 0;
    for (unsigned char w : wrong) errors += w;
    return errors;
}

std::size_t train_errors(const EncodedSplit& train, const BreakpointTable* table,
                         TrainErrorMode mode, unsigned jobs) {
    if (mode == TrainErrorMode::LeaveOneOut) return count_errors(train, train, table, true, jobs);
    return count_errors(train, train, table, false, jobs);
}

void check_grid(const std::vector<int>& grid) {
    if (grid.empty()) throw InvalidParameter("alphabet grid must not be empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        check_alphabet_size(grid[i]);
        if (i > 0 && grid[i] <= grid[i - 1]) {
            throw InvalidParameter("alphabet grid must be strictly increasing");
        }
    }
}

void require_instances(const LabeledDataset& data, std::size_t minimum, const char* what) {
    if (data.size() < minimum) {
        throw InvalidInput(std::string(what) + " needs at least " + std::to_string(minimum) +
                           " instance(s), dataset '" + data.name + "' has " +
                           std::to_string(data.size()));
    }
}

}  // namespace

std::size_t LabeledDataset::series_length() const {
    if (instances.empty()) throw InvalidInput("dataset '" + name + "' is empty");
    const std::size_t n = instances.front().series.size();
    for (std::size_t i = 1; i < instances.size(); ++i) {
        if (instances[i].series.size() != n) {
            throw InvalidInput("dataset '" + name + "': instance " + std::to_string(i) +
                               " has length " + std::to_string(instances[i].series.size()) +
                               ", expected " + std::to_string(n));
        }
    }
    return n;
}

std::vector<std::string> LabeledDataset::distinct_labels() const {
    std::set<std::string> labels;
    for (const auto& inst : instances) labels.insert(inst.label);
    return {labels.begin(), labels.end()};
}

std::string_view train_error_mode_name(TrainErrorMode mode) {
    return mode == TrainErrorMode::LeaveOneOut ? "loocv" : "resubstitution";
}

TrainErrorMode parse_train_error_mode(std::string_view name) {
    if (name == "loocv") return TrainErrorMode::LeaveOneOut;
    if (name == "resubstitution") return TrainErrorMode::Resubstitution;
    throw InvalidParameter("unknown train error mode '" + std::string(name) +
                           "' (expected loocv or resubstitution)");
}

std::vector<int> default_alphabet_grid() {
    std::vector<int> grid;
    for (int a = 3; a <= 20; ++a) grid.push_back(a);
    return grid;
}

std::size_t default_word_length(std::size_t series_length) {
    return std::max<std::size_t>(1, series_length / 8);
}

std::size_t ExperimentParams::resolved_word_length(std::size_t series_length) const {
    return word_length == 0 ? default_word_length(series_length) : word_length;
}

std::string nn1_classify(const SymbolicWord& query, std::span<const LabeledWord> train,
                         const SymbolicDistanceContext& ctx) {
    if (train.empty()) throw InvalidInput("nn1_classify: training set is empty");
    ctx.check(query);
    for (const auto& t : train) ctx.check(t.word);
    const std::size_t j = nearest(train.size(), kNoSkip, [&](std::size_t k) {
        return symbolic_sum_squares(query.symbols(), train[k].word.symbols(), ctx.table());
    });
    return train[j].label;
}

double loocv_error(const LabeledDataset& dataset, const ExperimentParams& params) {
    require_instances(dataset, 2, "leave-one-out evaluation");
    const std::size_t n = dataset.series_length();
    const std::size_t m = params.resolved_word_length(n);
    const BreakpointTable* table = nullptr;
    if (params.method != Method::RawEuclidean) {
        table = &table_for(params.alphabet_size);
        segment_layout(n, m);  // validates m up front
    }
    const EncodedSplit split = encode(dataset, params.method, m, params.normalize, params.jobs);
    return static_cast<double>(count_errors(split, split, table, true, params.jobs)) /
           static_cast<double>(dataset.size());
}

AlphabetChoice select_alphabet_size(const LabeledDataset& train, const ExperimentParams& params) {
    check_grid(params.alphabet_grid);
    if (params.method == Method::RawEuclidean) {
        throw InvalidParameter("raw-euclidean has no alphabet to select");
    }
    require_instances(train, params.train_error == TrainErrorMode::LeaveOneOut ? 2 : 1,
                      "alphabet selection");
    const std::size_t n = train.series_length();
    const std::size_t m = params.resolved_word_length(n);
    segment_layout(n, m);
    const EncodedSplit split = encode(train, params.method, m, params.normalize, params.jobs);

    AlphabetChoice best{0, 0.0};
    std::size_t best_errors = std::numeric_limits<std::size_t>::max();
    for (int a : params.alphabet_grid) {
        const std::size_t errors = train_errors(split, &table_for(a), params.train_error, params.jobs);
        if (errors < best_errors) {
            best_errors = errors;
            best.alphabet_size = a;
        }
    }
    best.train_error = static_cast<double>(best_errors) / static_cast<double>(train.size());
    return best;
}

EvalResult evaluate(const LabeledDataset& train, const LabeledDataset& test,
                    const ExperimentParams& params) {
    require_instances(train, 1, "evaluation (train split)");
    require_instances(test, 1, "evaluation (test split)");
    const std::size_t n = train.series_length();
    if (test.series_length() != n) {
        throw InvalidInput("train series have length " + std::to_string(n) +
                           " but test series have length " + std::to_string(test.series_length()));
    }
    const std::size_t m = params.resolved_word_length(n);

    EvalResult result;
    result.dataset = train.name;
    result.method = params.method;
    result.total = test.size();

    const BreakpointTable* table = nullptr;
    if (params.method == Method::RawEuclidean) {
        result.word_length = n;
        const EncodedSplit tr = encode(train, params.method, n, params.normalize, params.jobs);
        result.train_error =
            train.size() < 2 && params.train_error == TrainErrorMode::LeaveOneOut
                ? 0.0
                : static_cast<double>(train_errors(tr, nullptr, params.train_error, params.jobs)) /
                      static_cast<double>(train.size());
        const EncodedSplit te = encode(test, params.method, n, params.normalize, params.jobs);
        result.misclassified = count_errors(te, tr, nullptr, false, params.jobs);
    } else {
        result.word_length = m;
        if (params.alphabet_grid.size() == 1 && train.size() < 2 &&
            params.train_error == TrainErrorMode::LeaveOneOut) {
            // A single-instance train split has no leave-one-out error, but a
            // one-value grid needs no selection either.
            check_grid(params.alphabet_grid);
            result.chosen_alphabet = params.alphabet_grid.front();
        } else {
            const AlphabetChoice choice = select_alphabet_size(train, params);
            result.chosen_alphabet = choice.alphabet_size;
            result.train_error = choice.train_error;
        }
        table = &table_for(result.chosen_alphabet);
        const EncodedSplit tr = encode(train, params.method, m, params.normalize, params.jobs);
        const EncodedSplit te = encode(test, params.method, m, params.normalize, params.jobs);
        result.misclassified = count_errors(te, tr, table, false, params.jobs);
    }
    result.test_error =
        static_cast<double>(result.misclassified) / static_cast<double>(result.total);
    return result;
}

Tally compare_methods(std::span<const std::pair<EvalResult, EvalResult>> results) {
    Tally tally;
    for (const auto& [classic, esax] : results) {
        if (classic.dataset != esax.dataset) {
            throw InvalidInput("cannot compare results for different datasets ('" +
                               classic.dataset + "' vs '" + esax.dataset + "')");
        }
        if (classic.method != Method::ClassicSax || esax.method != Method::ExtremeSax) {
            throw InvalidInput("dataset '" + classic.dataset +
                               "': expected a (classic-sax, e-sax) result pair");
        }
        if (classic.test_error < esax.test_error) {
            ++tally.wins_classic;
        } else if (esax.test_error < classic.test_error) {
            ++tally.wins_esax;
        } else {
            ++tally.ties;
        }
    }
    return tally;
}

}  // namespace symsax
