// Command-line front end: transform, dist, classify, benchmark, report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symsax/alphabet.hpp"
#include "symsax/benchmark.hpp"
#include "symsax/classification.hpp"
#include "symsax/distance.hpp"
#include "symsax/error.hpp"
#include "symsax/ingest.hpp"
#include "symsax/representation.hpp"

namespace {

using namespace symsax;

struct SharedOptions {
    std::string method = "e-sax";
    std::string word_length = "default";
    std::string alphabet_grid = "3..20";
    int alphabet_size = 4;
    std::optional<std::string> single_grid;  // --alphabet-grid on transform/dist
    bool no_normalize = false;
    std::string format = "text";
    std::string output;
    std::optional<std::string> data_root;
    unsigned jobs = 1;
    std::string train_error = "loocv";
};

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw IoError("cannot open '" + output + "' for writing");
    out << text;
    if (!out) throw IoError("error while writing '" + output + "'");
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// transform and dist encode with one alphabet; a one-value grid is accepted too.
int resolve_alphabet(const SharedOptions& opt) {
    if (!opt.single_grid) return opt.alphabet_size;
    const auto grid = parse_alphabet_grid(*opt.single_grid);
    if (grid.size() != 1) {
        throw InvalidParameter("--alphabet-grid must name a single size here, got '" + *opt.single_grid + "'");
    }
    return grid.front();
}

int run_transform(const SharedOptions& opt, const std::string& input, bool labeled) {
    const Method method = parse_method(opt.method);
    if (method == Method::RawEuclidean) throw InvalidParameter("transform needs a symbolic method");
    const BreakpointTable& table = table_for(resolve_alphabet(opt));
    const bool normalize = !opt.no_normalize;
    const bool json = opt.format == "json";

    auto encode = [&](const TimeSeries& s) {
        return symbolic_transform(method, s, WordLengthPolicy::parse(opt.word_length).resolve(s.size()),
                                  table, normalize);
    };
    auto word_json = [](const SymbolicWord& w) {
        nlohmann::ordered_json j;
        j["symbols"] = std::vector<int>(w.symbols().begin(), w.symbols().end());
        j["alphabet_size"] = w.alphabet_size();
        j["source_length"] = w.source_length();
        return j;
    };

    std::string out;
    if (labeled) {
        const LabeledDataset data = parse_ucr_file(input);
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& inst : data.instances) {
            const SymbolicWord w = encode(inst.series);
            if (json) {
                auto j = word_json(w);
                j["label"] = inst.label;
                rows.push_back(std::move(j));
            } else {
                out += inst.label + '\t' + w.to_string() + '\n';
            }
        }
        if (json) out = rows.dump(2) + "\n";
    } else {
        const SymbolicWord w = encode(parse_series_file(input));
        out = json ? word_json(w).dump(2) + "\n" : w.to_string() + "\n";
    }
    emit(out, opt.output);
    return 0;
}

int run_dist(const SharedOptions& opt, const std::string& first, const std::string& second) {
    const Method method = parse_method(opt.method);
    const TimeSeries s = parse_series_file(first);
    const TimeSeries t = parse_series_file(second);
    double d = 0.0;
    if (method == Method::RawEuclidean) {
        d = opt.no_normalize ? euclidean(s, t)
                             : euclidean(z_normalize(s).series, z_normalize(t).series);
    } else {
        if (s.size() != t.size()) {
            throw IncompatibleSeries("series lengths differ (" + std::to_string(s.size()) + " vs " +
                                     std::to_string(t.size()) + ")");
        }
        const BreakpointTable& table = table_for(resolve_alphabet(opt));
        const std::size_t m = WordLengthPolicy::parse(opt.word_length).resolve(s.size());
        const SymbolicDistanceContext ctx(table, s.size(), m);
        d = symbolic_dist(symbolic_transform(method, s, m, table, !opt.no_normalize),
                          symbolic_transform(method, t, m, table, !opt.no_normalize), ctx);
    }
    emit(format_real(d) + "\n", opt.output);
    return 0;
}

int run_classify(const SharedOptions& opt, std::string train_path, std::string test_path,
                 const std::string& dataset) {
    LabeledDataset train, test;
    if (!dataset.empty()) {
        const auto root = resolve_data_root(opt.data_root);
        if (!root) throw InvalidParameter("--dataset needs --data-root or SYMSAX_DATA_ROOT");
        DatasetPair pair = load_pair(dataset, *root);
        for (const auto& w : pair.warnings) std::cerr << "warning: " << w << '\n';
        train = std::move(pair.train);
        test = std::move(pair.test);
    } else {
        if (train_path.empty() || test_path.empty()) {
            throw InvalidParameter("classify needs --train and --test, or --dataset");
        }
        train = parse_ucr_file(train_path);
        test = parse_ucr_file(test_path);
        test.name = train.name;
    }

    ExperimentParams params;
    params.method = parse_method(opt.method);
    params.word_length = WordLengthPolicy::parse(opt.word_length).resolve(train.series_length());
    params.alphabet_grid = parse_alphabet_grid(opt.alphabet_grid);
    params.normalize = !opt.no_normalize;
    params.train_error = parse_train_error_mode(opt.train_error);
    params.jobs = opt.jobs;
    const EvalResult r = evaluate(train, test, params);

    nlohmann::ordered_json j;
    j["dataset"] = r.dataset;
    j["method"] = method_name(r.method);
    j["word_length"] = r.word_length;
    j["chosen_alphabet"] = r.chosen_alphabet;
    j["train_error"] = r.train_error;
    j["test_error"] = r.test_error;
    j["misclassified"] = r.misclassified;
    j["total"] = r.total;

    std::string line = r.dataset + " " + std::string(method_name(r.method)) +
                       ": test error " + format_error3(r.test_error) + " (" +
                       std::to_string(r.misclassified) + "/" + std::to_string(r.total) +
                       "), alphabet " + std::to_string(r.chosen_alphabet) + ", word length " +
                       std::to_string(r.word_length) + ", train error " +
                       format_error3(r.train_error) + "\n";
    if (opt.output.empty()) {
        std::cout << j.dump(2) << '\n' << line;
    } else {
        emit(j.dump(2) + "\n", opt.output);
        std::cout << line;
    }
    return 0;
}

int run_benchmark_cmd(const SharedOptions& opt, const CLI::App& cmd, const std::string& config_path,
                      const std::vector<std::string>& datasets, const std::vector<std::string>& methods) {
    BenchmarkConfig cfg;
    if (!config_path.empty()) {
        try {
            cfg = BenchmarkConfig::from_json(nlohmann::json::parse(read_text(config_path)));
        } catch (const nlohmann::json::parse_error& e) {
            throw FormatError(config_path + ": " + e.what());
        }
    }
    // Explicit flags override the config document.
    if (!datasets.empty()) cfg.datasets = datasets;
    if (!methods.empty()) {
        cfg.methods.clear();
        for (const auto& m : methods) cfg.methods.push_back(parse_method(m));
    }
    if (cmd.count("--word-length")) cfg.word_length = WordLengthPolicy::parse(opt.word_length);
    if (cmd.count("--alphabet-grid")) cfg.alphabet_grid = parse_alphabet_grid(opt.alphabet_grid);
    if (cmd.count("--no-normalize")) cfg.normalize = false;
    if (cmd.count("--jobs")) cfg.jobs = opt.jobs;
    if (cmd.count("--train-error")) cfg.train_error = parse_train_error_mode(opt.train_error);
    if (cmd.count("--data-root") || cfg.data_root.empty()) {
        const auto root = resolve_data_root(opt.data_root);
        if (!root) throw InvalidParameter("benchmark needs --data-root, SYMSAX_DATA_ROOT or data_root in the config");
        cfg.data_root = *root;
    }

    const EvalReport report = run_benchmark(cfg);
    emit(emit_report(report, parse_report_format(opt.format)), opt.output);
    for (const auto& row : report.rows) {
        for (const auto& w : row.warnings) std::cerr << "warning: " << w << '\n';
        if (row.failure) std::cerr << "error: " << row.dataset << ": " << *row.failure << '\n';
    }
    return report.all_succeeded() ? 0 : 1;
}

int run_report(const SharedOptions& opt, const std::string& input) {
    const std::string text = read_text(input);
    EvalReport report;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            report = report_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::parse_error& e) {
            throw FormatError(input + ": " + e.what());
        }
    } else {
        report = report_from_csv(text);
    }
    emit(emit_report(report, parse_report_format(opt.format)), opt.output);
    return report.all_succeeded() ? 0 : 1;
}

void add_common(CLI::App* cmd, SharedOptions& opt) {
    cmd->add_option("--method", opt.method, "classic-sax, e-sax or raw-euclidean");
    cmd->add_option("-w,--word-length", opt.word_length, "segment count: <m>, n/<k> or default (n/8)");
    cmd->add_flag("--no-normalize", opt.no_normalize, "skip z-normalization");
    cmd->add_option("-o,--output", opt.output, "write the result to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classic-SAX and Extreme-SAX symbolic time series toolkit"};
    app.require_subcommand(1);
    SharedOptions opt;

    std::string input, second, train_path, test_path, dataset, config_path;
    bool labeled = false;
    std::vector<std::string> datasets, methods;

    auto* transform = app.add_subcommand("transform", "convert a series (or a UCR file) to a symbolic word");
    add_common(transform, opt);
    transform->add_option("input", input, "series file, or UCR dataset file with --labeled")->required();
    transform->add_option("-a,--alphabet-size", opt.alphabet_size, "alphabet size (2..26)");
    transform->add_option("--alphabet-grid", opt.single_grid, "same as --alphabet-size; one value only");
    transform->add_flag("--labeled", labeled, "input is a UCR dataset file; one word per row");
    transform->add_option("--format", opt.format, "text or json");

    auto* dist = app.add_subcommand("dist", "distance between two series files");
    add_common(dist, opt);
    dist->add_option("first", input, "first series file")->required();
    dist->add_option("second", second, "second series file")->required();
    dist->add_option("-a,--alphabet-size", opt.alphabet_size, "alphabet size (2..26)");
    dist->add_option("--alphabet-grid", opt.single_grid, "same as --alphabet-size; one value only");

    auto* classify = app.add_subcommand("classify", "1NN train/test evaluation of one dataset");
    add_common(classify, opt);
    classify->add_option("--train", train_path, "train split file");
    classify->add_option("--test", test_path, "test split file");
    classify->add_option("--dataset", dataset, "dataset name under the data root");
    classify->add_option("--data-root", opt.data_root, "archive directory (default: $SYMSAX_DATA_ROOT)");
    classify->add_option("--alphabet-grid", opt.alphabet_grid, "alphabet sizes searched on train, e.g. 3..20");
    classify->add_option("--train-error", opt.train_error, "loocv or resubstitution");
    classify->add_option("--jobs", opt.jobs, "worker threads");

    auto* bench = app.add_subcommand("benchmark", "run both methods over many datasets");
    add_common(bench, opt);
    bench->add_option("--config", config_path, "JSON benchmark config");
    bench->add_option("--datasets", datasets, "dataset names, or all-registry")->delimiter(',');
    bench->add_option("--methods", methods, "methods to run")->delimiter(',');
    bench->add_option("--data-root", opt.data_root, "archive directory (default: $SYMSAX_DATA_ROOT)");
    bench->add_option("--alphabet-grid", opt.alphabet_grid, "alphabet sizes searched on train");
    bench->add_option("--train-error", opt.train_error, "loocv or resubstitution");
    bench->add_option("--jobs", opt.jobs, "worker threads");
    bench->add_option("--format", opt.format, "json, csv or text");

    auto* report = app.add_subcommand("report", "re-render a saved JSON or CSV report");
    report->add_option("input", input, "report file")->required();
    report->add_option("--format", opt.format, "json, csv or text");
    report->add_option("-o,--output", opt.output, "write to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*transform) return run_transform(opt, input, labeled);
        if (*dist) return run_dist(opt, input, second);
        if (*classify) return run_classify(opt, train_path, test_path, dataset);
        if (*bench) return run_benchmark_cmd(opt, *bench, config_path, datasets, methods);
        if (*report) return run_report(opt, input);
    } catch (const symsax::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
