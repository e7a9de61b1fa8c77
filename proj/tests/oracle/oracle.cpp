#include "oracle.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "symsax/error.hpp"

namespace symsax::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTie = 1e-9;

double density(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi); }

// Upper tail Q(x) for x > 0 by the classic continued fraction, evaluated
// bottom-up with a fixed depth.
double upper_tail(double x) {
    double frac = x;
    for (int k = 200; k >= 1; --k) frac = x + k / frac;
    return density(x) / frac;
}

std::size_t source_length(const LabeledDataset& d) { return d.instances.front().series.size(); }

std::vector<double> as_vector(const TimeSeries& s) { return {s.values().begin(), s.values().end()}; }

std::size_t argmin_lowest_index(const std::vector<double>& row, std::size_t skip) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (j == skip) continue;
        if (best == std::numeric_limits<std::size_t>::max()) {
            best = j;
            continue;
        }
        const double scale = row[best] > 1.0 ? row[best] : 1.0;
        if (row[j] < row[best] - kTie * scale) best = j;
    }
    return best;
}

}  // namespace

double normal_cdf(double x) {
    if (x > 3.0) return 1.0 - upper_tail(x);
    if (x < -3.0) return upper_tail(-x);
    // Phi(x) = 1/2 + phi(x) * sum_k x^(2k+1) / (1*3*...*(2k+1))
    double term = x;
    double sum = x;
    for (int k = 1; k < 200; ++k) {
        term *= x * x / (2.0 * k + 1.0);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return 0.5 + density(x) * sum;
}

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) throw InvalidParameter("oracle: p must lie in (0, 1)");
    double lo = -40.0;
    double hi = 40.0;
    // Runs to machine resolution, far below the 1e-10 width the checks need.
    for (int iter = 0; iter < 400; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (normal_cdf(mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> breakpoints(int alphabet_size) {
    std::vector<double> out;
    for (int k = 1; k < alphabet_size; ++k) {
        out.push_back(inverse_normal_cdf(static_cast<double>(k) / alphabet_size));
    }
    return out;
}

namespace {

// Bisection is slow enough to dominate brute-force loops, so each alphabet
// size is solved once.
const std::vector<double>& solved_breakpoints(int alphabet_size) {
    static std::map<int, std::vector<double>> cache;
    static std::mutex lock;
    const std::lock_guard guard(lock);
    auto it = cache.find(alphabet_size);
    if (it == cache.end()) it = cache.emplace(alphabet_size, breakpoints(alphabet_size)).first;
    return it->second;
}

}  // namespace

double symbol_distance(int r, int c, int alphabet_size) {
    if (std::abs(r - c) <= 1) return 0.0;
    const auto& beta = solved_breakpoints(alphabet_size);
    const int hi = r > c ? r : c;
    const int lo = r > c ? c : r;
    return beta[static_cast<std::size_t>(hi - 2)] - beta[static_cast<std::size_t>(lo - 1)];
}

int symbol_for(double v, int alphabet_size) {
    int symbol = 1;
    for (double b : solved_breakpoints(alphabet_size)) {
        if (v >= b) ++symbol;
    }
    return symbol;
}

std::vector<double> z_normalize(const std::vector<double>& values) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    std::vector<double> out(values.size(), 0.0);
    if (std::sqrt(var) < 1e-12) return out;
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - mean) / std::sqrt(var);
    return out;
}

std::vector<int> word(const std::vector<double>& values, Method method, std::size_t m,
                      int alphabet_size, bool normalize) {
    const std::vector<double> x = normalize ? z_normalize(values) : values;
    const std::size_t n = x.size();
    std::vector<int> symbols;
    for (std::size_t seg = 0; seg < m; ++seg) {
        double sum = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        std::size_t count = 0;
        for (std::size_t j = 0; j < n; ++j) {
            // j belongs to segment seg iff floor(seg*n/m) <= j < floor((seg+1)*n/m)
            if (j < seg * n / m || j >= (seg + 1) * n / m) continue;
            sum += x[j];
            lo = x[j] < lo ? x[j] : lo;
            hi = x[j] > hi ? x[j] : hi;
            ++count;
        }
        const double coefficient = method == Method::ClassicSax ? sum / static_cast<double>(count)
                                                                : (lo + hi) / 2.0;
        symbols.push_back(symbol_for(coefficient, alphabet_size));
    }
    return symbols;
}

double word_distance(const std::vector<int>& s, const std::vector<int>& t, std::size_t n,
                     int alphabet_size) {
    double sum = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double d = symbol_distance(s[i], t[i], alphabet_size);
        sum += d * d;
    }
    return std::sqrt(static_cast<double>(n) / static_cast<double>(s.size()) * sum);
}

double distance(const std::vector<double>& s, const std::vector<double>& t,
                const ExperimentParams& params, std::size_t m) {
    if (params.method == Method::RawEuclidean) {
        const auto a = params.normalize ? z_normalize(s) : s;
        const auto b = params.normalize ? z_normalize(t) : t;
        double sum = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
        return std::sqrt(sum);
    }
    return word_distance(word(s, params.method, m, params.alphabet_size, params.normalize),
                         word(t, params.method, m, params.alphabet_size, params.normalize),
                         s.size(), params.alphabet_size);
}

std::string nn1(std::size_t query_index, const LabeledDataset& dataset,
                const ExperimentParams& params) {
    const std::size_t n = source_length(dataset);
    const std::size_t m = params.word_length == 0 ? (n / 8 > 0 ? n / 8 : 1) : params.word_length;
    // Full matrix, even though only one row is needed.
    std::vector<std::vector<double>> matrix(dataset.size(), std::vector<double>(dataset.size()));
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        for (std::size_t j = 0; j < dataset.size(); ++j) {
            matrix[i][j] = distance(as_vector(dataset.instances[i].series),
                                    as_vector(dataset.instances[j].series), params, m);
        }
    }
    const std::size_t best = argmin_lowest_index(matrix[query_index], query_index);
    return dataset.instances[best].label;
}

std::string nn1_against(const TimeSeries& query, const LabeledDataset& train,
                        const ExperimentParams& params) {
    const std::size_t n = source_length(train);
    const std::size_t m = params.word_length == 0 ? (n / 8 > 0 ? n / 8 : 1) : params.word_length;
    std::vector<double> row;
    for (const auto& inst : train.instances) {
        row.push_back(distance(as_vector(query), as_vector(inst.series), params, m));
    }
    return train.instances[argmin_lowest_index(row, std::numeric_limits<std::size_t>::max())].label;
}

double loocv_error(const LabeledDataset& dataset, const ExperimentParams& params) {
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        if (nn1(i, dataset, params) != dataset.instances[i].label) ++wrong;
    }
    return static_cast<double>(wrong) / static_cast<double>(dataset.size());
}

AlphabetChoice select_alphabet_size(const LabeledDataset& train, const ExperimentParams& params) {
    AlphabetChoice best{0, 2.0};
    for (int a : params.alphabet_grid) {
        ExperimentParams p = params;
        p.alphabet_size = a;
        const double e = oracle::loocv_error(train, p);
        if (e < best.train_error) best = {a, e};
    }
    return best;
}

EvalResult evaluate(const LabeledDataset& train, const LabeledDataset& test,
                    const ExperimentParams& params) {
    EvalResult r;
    r.dataset = train.name;
    r.method = params.method;
    const std::size_t n = source_length(train);
    r.word_length = params.method == Method::RawEuclidean
                        ? n
                        : (params.word_length == 0 ? (n / 8 > 0 ? n / 8 : 1) : params.word_length);
    ExperimentParams p = params;
    if (params.method == Method::RawEuclidean) {
        r.train_error = oracle::loocv_error(train, p);
    } else {
        const auto choice = oracle::select_alphabet_size(train, params);
        r.chosen_alphabet = choice.alphabet_size;
        r.train_error = choice.train_error;
        p.alphabet_size = choice.alphabet_size;
    }
    for (const auto& inst : test.instances) {
        if (nn1_against(inst.series, train, p) != inst.label) ++r.misclassified;
    }
    r.total = test.size();
    r.test_error = static_cast<double>(r.misclassified) / static_cast<double>(r.total);
    return r;
}

}  // namespace symsax::oracle
