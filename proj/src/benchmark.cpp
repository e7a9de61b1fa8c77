#include "symsax/benchmark.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "symsax/error.hpp"
#include "symsax/ingest.hpp"
#include "symsax/parallel.hpp"

namespace symsax {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::size_t parse_count(std::string_view text, std::string_view what) {
    text = trim(text);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw InvalidParameter("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    for (std::size_t start = 0;;) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

const EvalResult* find_result(const ReportRow& row, Method method) {
    for (const auto& r : row.results) {
        if (r.method == method) return &r;
    }
    return nullptr;
}

nlohmann::ordered_json result_to_json(const EvalResult& r) {
    nlohmann::ordered_json j;
    j["method"] = method_name(r.method);
    j["word_length"] = r.word_length;
    j["chosen_alphabet"] = r.chosen_alphabet;
    j["train_error"] = r.train_error;
    j["test_error"] = r.test_error;
    j["misclassified"] = r.misclassified;
    j["total"] = r.total;
    return j;
}

EvalResult result_from_json(const nlohmann::json& j, const std::string& dataset) {
    EvalResult r;
    r.dataset = dataset;
    r.method = parse_method(j.at("method").get<std::string>());
    r.word_length = j.at("word_length").get<std::size_t>();
    r.chosen_alphabet = j.at("chosen_alphabet").get<int>();
    r.train_error = j.at("train_error").get<double>();
    r.test_error = j.at("test_error").get<double>();
    r.misclassified = j.at("misclassified").get<std::size_t>();
    r.total = j.at("total").get<std::size_t>();
    return r;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

}  // namespace

WordLengthPolicy WordLengthPolicy::fraction(std::size_t divisor) {
    if (divisor == 0) throw InvalidParameter("word length divisor must be positive");
    WordLengthPolicy p;
    p.is_fraction_ = true;
    p.value_ = divisor;
    return p;
}

WordLengthPolicy WordLengthPolicy::fixed(std::size_t m) {
    if (m == 0) throw InvalidParameter("word length must be at least 1");
    WordLengthPolicy p;
    p.is_fraction_ = false;
    p.value_ = m;
    return p;
}

WordLengthPolicy WordLengthPolicy::parse(std::string_view text) {
    text = trim(text);
    if (text == "default") return standard();
    if (text.starts_with("n/")) return fraction(parse_count(text.substr(2), "word length divisor"));
    return fixed(parse_count(text, "word length"));
}

std::size_t WordLengthPolicy::resolve(std::size_t series_length) const {
    if (is_fraction_) return std::max<std::size_t>(1, series_length / value_);
    return value_;
}

std::string WordLengthPolicy::to_string() const {
    return is_fraction_ ? "n/" + std::to_string(value_) : std::to_string(value_);
}

std::vector<int> parse_alphabet_grid(std::string_view text) {
    std::set<int> values;
    for (auto part : split(text, ',')) {
        part = trim(part);
        if (part.empty()) continue;
        if (const auto dots = part.find(".."); dots != std::string_view::npos) {
            const auto lo = parse_count(part.substr(0, dots), "alphabet grid bound");
            const auto hi = parse_count(part.substr(dots + 2), "alphabet grid bound");
            if (lo > hi) throw InvalidParameter("empty alphabet range '" + std::string(part) + "'");
            for (auto a = lo; a <= hi; ++a) values.insert(static_cast<int>(a));
        } else {
            values.insert(static_cast<int>(parse_count(part, "alphabet size")));
        }
    }
    if (values.empty()) throw InvalidParameter("alphabet grid must not be empty");
    std::vector<int> grid(values.begin(), values.end());
    for (int a : grid) check_alphabet_size(a);
    return grid;
}

std::string format_alphabet_grid(const std::vector<int>& grid) {
    std::string out;
    for (std::size_t i = 0; i < grid.size();) {
        std::size_t j = i;
        while (j + 1 < grid.size() && grid[j + 1] == grid[j] + 1) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(grid[i]);
        if (j > i) out += ".." + std::to_string(grid[j]);
        i = j + 1;
    }
    return out;
}

void BenchmarkConfig::validate() const {
    if (datasets.empty()) throw InvalidParameter("benchmark needs at least one dataset");
    if (methods.empty()) throw InvalidParameter("benchmark needs at least one method");
    if (alphabet_grid.empty()) throw InvalidParameter("alphabet grid must not be empty");
    for (std::size_t i = 0; i < alphabet_grid.size(); ++i) {
        check_alphabet_size(alphabet_grid[i]);
        if (i > 0 && alphabet_grid[i] <= alphabet_grid[i - 1]) {
            throw InvalidParameter("alphabet grid must be strictly increasing");
        }
    }
}

std::vector<std::string> BenchmarkConfig::expanded_datasets() const {
    std::vector<std::string> out;
    for (const auto& name : datasets) {
        if (name == kAllRegistry) {
            for (const auto& meta : dataset_registry()) out.emplace_back(meta.name);
        } else {
            out.push_back(name);
        }
    }
    return out;
}

BenchmarkConfig BenchmarkConfig::from_json(const nlohmann::json& doc) {
    BenchmarkConfig cfg;
    try {
        if (doc.contains("datasets")) {
            const auto& ds = doc.at("datasets");
            if (ds.is_string()) {
                cfg.datasets = {ds.get<std::string>()};
            } else {
                cfg.datasets = ds.get<std::vector<std::string>>();
            }
        }
        if (doc.contains("methods")) {
            cfg.methods.clear();
            for (const auto& m : doc.at("methods")) cfg.methods.push_back(parse_method(m.get<std::string>()));
        }
        if (doc.contains("word_length")) {
            const auto& wl = doc.at("word_length");
            cfg.word_length = wl.is_number_unsigned() ? WordLengthPolicy::fixed(wl.get<std::size_t>())
                                                      : WordLengthPolicy::parse(wl.get<std::string>());
        }
        if (doc.contains("alphabet_grid")) {
            const auto& g = doc.at("alphabet_grid");
            if (g.is_string()) {
                cfg.alphabet_grid = parse_alphabet_grid(g.get<std::string>());
            } else {
                cfg.alphabet_grid = g.get<std::vector<int>>();
            }
        }
        if (doc.contains("normalize")) cfg.normalize = doc.at("normalize").get<bool>();
        if (doc.contains("train_error")) {
            cfg.train_error = parse_train_error_mode(doc.at("train_error").get<std::string>());
        }
        if (doc.contains("jobs")) cfg.jobs = doc.at("jobs").get<unsigned>();
        if (doc.contains("data_root")) cfg.data_root = doc.at("data_root").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid benchmark config: ") + e.what());
    }
    return cfg;
}

nlohmann::ordered_json BenchmarkConfig::to_json() const {
    nlohmann::ordered_json j;
    j["datasets"] = datasets;
    auto& ms = j["methods"] = nlohmann::ordered_json::array();
    for (Method m : methods) ms.push_back(method_name(m));
    j["word_length"] = word_length.to_string();
    j["alphabet_grid"] = alphabet_grid;
    j["normalize"] = normalize;
    j["train_error"] = train_error_mode_name(train_error);
    return j;
}

bool EvalReport::all_succeeded() const {
    return std::none_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.failure.has_value(); });
}

void finalize_report(EvalReport& report) {
    std::vector<std::pair<EvalResult, EvalResult>> pairs;
    for (auto& row : report.rows) {
        if (row.failure) {
            row.winner = "failed";
            row.classic_error.reset();
            row.esax_error.reset();
            continue;
        }
        const EvalResult* classic = find_result(row, Method::ClassicSax);
        const EvalResult* esax = find_result(row, Method::ExtremeSax);
        if (classic) row.classic_error = classic->test_error;
        if (esax) row.esax_error = esax->test_error;
        if (classic && esax) {
            pairs.emplace_back(*classic, *esax);
            const Tally one = compare_methods(std::span(&pairs.back(), 1));
            row.winner = one.wins_classic ? "classic-SAX" : one.wins_esax ? "E-SAX" : "tie";
        } else {
            row.winner = "-";
        }
    }
    report.tally = compare_methods(pairs);
}

EvalReport run_benchmark(const BenchmarkConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    const auto names = config.expanded_datasets();

    EvalReport report;
    report.config = config;
    report.rows.resize(names.size());

    std::vector<std::optional<DatasetPair>> data(names.size());
    parallel_for(names.size(), config.jobs, [&](std::size_t i) {
        auto& row = report.rows[i];
        row.dataset = names[i];
        try {
            data[i] = load_pair(names[i], config.data_root);
            row.dataset = data[i]->train.name;
            row.warnings = data[i]->warnings;
        } catch (const std::exception& e) {
            row.failure = e.what();
        }
    });

    const std::size_t method_count = config.methods.size();
    std::vector<std::optional<EvalResult>> results(names.size() * method_count);
    std::vector<std::optional<std::string>> unit_errors(results.size());
    parallel_for(results.size(), config.jobs, [&](std::size_t unit) {
        const std::size_t d = unit / method_count;
        if (!data[d]) return;
        try {
            ExperimentParams params;
            params.method = config.methods[unit % method_count];
            params.word_length = config.word_length.resolve(data[d]->train.series_length());
            params.normalize = config.normalize;
            params.alphabet_grid = config.alphabet_grid;
            params.train_error = config.train_error;
            params.jobs = 1;
            results[unit] = evaluate(data[d]->train, data[d]->test, params);
        } catch (const std::exception& e) {
            unit_errors[unit] = e.what();
        }
    });

    for (std::size_t d = 0; d < names.size(); ++d) {
        auto& row = report.rows[d];
        if (row.failure) continue;
        for (std::size_t k = 0; k < method_count; ++k) {
            const std::size_t unit = d * method_count + k;
            if (unit_errors[unit]) {
                row.failure = std::string(method_name(config.methods[k])) + ": " + *unit_errors[unit];
                break;
            }
            row.results.push_back(*results[unit]);
        }
        if (row.failure) row.results.clear();
    }
    finalize_report(report);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

ReportFormat parse_report_format(std::string_view name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "text") return ReportFormat::Text;
    throw InvalidParameter("unknown report format '" + std::string(name) +
                           "' (expected json, csv or text)");
}

std::string format_error3(double error) {
    const double rounded = std::round(error * 1000.0) / 1000.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", rounded == 0.0 ? 0.0 : rounded);
    return buf;
}

std::string tally_line(const Tally& tally) {
    return "classic-SAX: " + std::to_string(tally.wins_classic) +
           "  E-SAX: " + std::to_string(tally.wins_esax) +
           "  ties: " + std::to_string(tally.ties);
}

nlohmann::ordered_json report_to_json(const EvalReport& report, bool include_runtime) {
    nlohmann::ordered_json j;
    j["config"] = report.config.to_json();
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["dataset"] = row.dataset;
        r["status"] = row.failure ? "failed" : "ok";
        r["classic_sax_error"] = row.classic_error ? nlohmann::ordered_json(*row.classic_error) : nullptr;
        r["e_sax_error"] = row.esax_error ? nlohmann::ordered_json(*row.esax_error) : nullptr;
        r["winner"] = row.winner;
        auto& res = r["results"] = nlohmann::ordered_json::array();
        for (const auto& e : row.results) res.push_back(result_to_json(e));
        r["warnings"] = row.warnings;
        if (row.failure) r["error"] = *row.failure;
        rows.push_back(std::move(r));
    }
    j["tally"] = {{"classic_sax", report.tally.wins_classic},
                  {"e_sax", report.tally.wins_esax},
                  {"ties", report.tally.ties}};
    if (include_runtime) {
        j["runtime"] = {{"elapsed_seconds", report.elapsed_seconds},
                        {"jobs", report.config.jobs}};
    }
    return j;
}

EvalReport report_from_json(const nlohmann::json& doc) {
    EvalReport report;
    try {
        if (doc.contains("config")) report.config = BenchmarkConfig::from_json(doc.at("config"));
        for (const auto& r : doc.at("rows")) {
            ReportRow row;
            row.dataset = r.at("dataset").get<std::string>();
            if (r.value("status", "ok") == "failed") {
                row.failure = r.value("error", std::string("failed"));
            }
            for (const auto& e : r.value("results", nlohmann::json::array())) {
                row.results.push_back(result_from_json(e, row.dataset));
            }
            row.warnings = r.value("warnings", std::vector<std::string>{});
            report.rows.push_back(std::move(row));
        }
        if (doc.contains("runtime")) {
            report.elapsed_seconds = doc.at("runtime").value("elapsed_seconds", 0.0);
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid report document: ") + e.what());
    }
    finalize_report(report);
    return report;
}

EvalReport report_from_csv(std::string_view text) {
    EvalReport report;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        const std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != "dataset,classic_sax_error,e_sax_error,winner") {
                throw FormatError("unexpected report CSV header", line_no);
            }
            header_seen = true;
            continue;
        }
        // Dataset names may contain spaces but not commas.
        const auto fields = split(line, ',');
        if (fields.size() != 4) throw FormatError("report CSV row must have 4 fields", line_no);
        ReportRow row;
        row.dataset = std::string(fields[0]);
        row.winner = std::string(fields[3]);
        auto read = [&](std::string_view f, std::size_t col) -> std::optional<double> {
            if (f.empty()) return std::nullopt;
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc() || ptr != f.data() + f.size()) {
                throw FormatError("report CSV: '" + std::string(f) + "' is not a number", line_no, col);
            }
            return v;
        };
        row.classic_error = read(fields[1], 2);
        row.esax_error = read(fields[2], 3);
        if (row.winner == "failed") row.failure = "failed";
        report.rows.push_back(std::move(row));
    }
    if (!header_seen) throw FormatError("report CSV is empty");
    for (const auto& row : report.rows) {
        if (row.winner == "classic-SAX") ++report.tally.wins_classic;
        else if (row.winner == "E-SAX") ++report.tally.wins_esax;
        else if (row.winner == "tie") ++report.tally.ties;
    }
    return report;
}

std::string emit_report(const EvalReport& report, ReportFormat format, bool include_runtime) {
    switch (format) {
        case ReportFormat::Json:
            return report_to_json(report, include_runtime).dump(2) + "\n";
        case ReportFormat::Csv: {
            std::string out = "dataset,classic_sax_error,e_sax_error,winner\n";
            for (const auto& row : report.rows) {
                out += row.dataset + ',';
                if (row.classic_error) out += format_error3(*row.classic_error);
                out += ',';
                if (row.esax_error) out += format_error3(*row.esax_error);
                out += ',' + row.winner + '\n';
            }
            return out;
        }
        case ReportFormat::Text: {
            std::size_t width = std::string_view("Dataset").size();
            for (const auto& row : report.rows) width = std::max(width, row.dataset.size());
            width += 2;
            auto cell = [](const std::optional<double>& e, bool best) {
                if (!e) return std::string("-");
                return format_error3(*e) + (best ? "*" : "");
            };
            std::string out = pad("Dataset", width) + pad("classic-SAX", 14) + "E-SAX\n";
            for (const auto& row : report.rows) {
                const bool tie = row.winner == "tie";
                out += pad(row.dataset, width);
                if (row.failure) {
                    out += "failed: " + *row.failure + "\n";
                    continue;
                }
                out += pad(cell(row.classic_error, tie || row.winner == "classic-SAX"), 14);
                out += cell(row.esax_error, tie || row.winner == "E-SAX") + "\n";
            }
            out += tally_line(report.tally) + "\n";
            return out;
        }
    }
    return {};
}

void write_report(const EvalReport& report, ReportFormat format, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << emit_report(report, format);
    if (!out) throw IoError("error while writing '" + path.string() + "'");
}

}  // namespace symsax
