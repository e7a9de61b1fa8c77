#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "symsax/classification.hpp"

namespace symsax {

// How the word length m is derived from a dataset's series length n.
class WordLengthPolicy {
public:
    // max(1, floor(n / divisor))
    static WordLengthPolicy fraction(std::size_t divisor);
    // min(m, n) is NOT applied: a fixed m longer than the series is an error.
    static WordLengthPolicy fixed(std::size_t m);
    static WordLengthPolicy standard() { return fraction(8); }

    // Accepts "n/<k>", "<m>" or "default".
    static WordLengthPolicy parse(std::string_view text);

    std::size_t resolve(std::size_t series_length) const;
    std::string to_string() const;

    friend bool operator==(const WordLengthPolicy&, const WordLengthPolicy&) = default;

private:
    bool is_fraction_ = true;
    std::size_t value_ = 8;
};

// "3..20", "3,4,8" or mixtures such as "3..5,8". Result is sorted and unique.
std::vector<int> parse_alphabet_grid(std::string_view text);
std::string format_alphabet_grid(const std::vector<int>& grid);

inline constexpr std::string_view kAllRegistry = "all-registry";

struct BenchmarkConfig {
    std::vector<std::string> datasets;  // may contain "all-registry"
    std::vector<Method> methods{Method::ClassicSax, Method::ExtremeSax};
    WordLengthPolicy word_length = WordLengthPolicy::standard();
    std::vector<int> alphabet_grid = default_alphabet_grid();
    bool normalize = true;
    TrainErrorMode train_error = TrainErrorMode::LeaveOneOut;
    unsigned jobs = 1;
    std::filesystem::path data_root;

    // Throws InvalidParameter when no dataset or no method is given, or the
    // grid is invalid.
    void validate() const;
    std::vector<std::string> expanded_datasets() const;

    static BenchmarkConfig from_json(const nlohmann::json& doc);
    nlohmann::ordered_json to_json() const;
};

struct ReportRow {
    std::string dataset;
    std::optional<double> classic_error;
    std::optional<double> esax_error;
    std::string winner;                 // classic-SAX, E-SAX, tie, "-" or failed
    std::vector<EvalResult> results;    // one per configured method
    std::optional<std::string> failure;
    std::vector<std::string> warnings;
};

struct EvalReport {
    BenchmarkConfig config;
    std::vector<ReportRow> rows;
    Tally tally;
    double elapsed_seconds = 0.0;

    bool all_succeeded() const;
};

// Runs every (dataset, method) unit and assembles the comparison. Dataset
// failures are recorded on their row and do not stop the run.
EvalReport run_benchmark(const BenchmarkConfig& config);

// Recomputes winners and the tally from finished rows.
void finalize_report(EvalReport& report);

enum class ReportFormat { Json, Csv, Text };
ReportFormat parse_report_format(std::string_view name);

// JSON keys are emitted in a fixed order; `include_runtime` = false drops the
// timing block so two runs can be compared byte for byte.
std::string emit_report(const EvalReport& report, ReportFormat format,
                        bool include_runtime = true);
void write_report(const EvalReport& report, ReportFormat format,
                  const std::filesystem::path& path);

nlohmann::ordered_json report_to_json(const EvalReport& report, bool include_runtime = true);
EvalReport report_from_json(const nlohmann::json& doc);
// Reads the CSV shape back; EvalResults and config are not recoverable from it.
EvalReport report_from_csv(std::string_view text);

// Three decimals, halves rounded away from zero.
std::string format_error3(double error);

std::string tally_line(const Tally& tally);

}  // namespace symsax
