#include "symsax/ingest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "symsax/error.hpp"

namespace symsax {

namespace {

constexpr std::array<DatasetMeta, 45> kRegistry{{
    {"synthetic control", "Simulated", 300, 300, 6, 60, "SyntheticControl"},
    {"Gun_Point", "Motion", 50, 150, 2, 150, "GunPoint"},
    {"CBF", "Simulated", 30, 900, 3, 128},
    {"FaceAll", "Image", 560, 1690, 14, 131},
    {"OSULeaf", "Image", 200, 242, 6, 427},
    {"SwedishLeaf", "Image", 500, 625, 15, 128},
    {"Trace", "Sensor", 100, 100, 4, 275},
    {"FaceFour", "Image", 24, 88, 4, 350},
    {"Lighting2", "Sensor", 60, 61, 2, 637, "Lightning2"},
    {"Lighting7", "Sensor", 70, 73, 7, 319, "Lightning7"},
    {"ECG200", "ECG", 100, 100, 2, 96},
    {"Adiac", "Image", 390, 391, 37, 176},
    {"Yoga", "Image", 300, 3000, 2, 426},
    {"Fish", "Image", 175, 175, 7, 463},
    {"Plane", "Sensor", 105, 105, 7, 144},
    {"Car", "Sensor", 60, 60, 4, 577},
    {"Beef", "Spectro", 30, 30, 5, 470},
    {"Coffee", "Spectro", 28, 28, 2, 286},
    {"OliveOil", "Spectro", 30, 30, 4, 570},
    {"CinCECGTorso", "Sensor", 40, 1380, 4, 1639},
    {"ChlorineConcentration", "Sensor", 467, 3840, 3, 166},
    {"DiatomSizeReduction", "Image", 16, 306, 4, 345},
    {"ECGFiveDays", "ECG", 23, 861, 2, 136},
    {"FacesUCR", "Image", 200, 2050, 14, 131},
    {"Haptics", "Motion", 155, 308, 5, 1092},
    {"InlineSkate", "Motion", 100, 550, 7, 1882},
    {"ItalyPowerDemand", "Sensor", 67, 1029, 2, 24},
    {"MedicalImages", "Image", 381, 760, 10, 99},
    {"MoteStrain", "Sensor", 20, 1252, 2, 84},
    {"SonyAIBORobotSurface1", "Sensor", 20, 601, 2, 70},
    {"SonyAIBORobotSurface2", "Sensor", 27, 953, 2, 65},
    {"Symbols", "Image", 25, 995, 6, 398},
    {"TwoLeadECG", "ECG", 23, 1139, 2, 82},
    {"InsectWingbeatSound", "Sensor", 220, 1980, 11, 256},
    {"ArrowHead", "Image", 36, 175, 3, 251},
    {"BeetleFly", "Image", 20, 20, 2, 512},
    {"BirdChicken", "Image", 20, 20, 2, 512},
    {"Herring", "Image", 64, 64, 2, 512},
    {"ProximalPhalanxTW", "Image", 400, 205, 6, 80},
    {"ToeSegmentation1", "Motion", 40, 228, 2, 277},
    {"ToeSegmentation2", "Motion", 36, 130, 2, 343},
    {"DistalPhalanxOutlineAgeGroup", "Image", 400, 139, 3, 80},
    {"DistalPhalanxOutlineCorrect", "Image", 600, 276, 2, 80},
    {"DistalPhalanxTW", "Image", 400, 139, 6, 80},
    {"WordsSynonyms", "Image", 267, 638, 25, 270, "WordSynonyms"},
}};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view token) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) return std::nullopt;
    return value;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
    return buf.str();
}

std::optional<std::filesystem::path> probe(const std::filesystem::path& dir, const std::string& stem,
                                           std::vector<std::string>& probed) {
    for (const char* ext : {"", ".tsv", ".txt", ".csv"}) {
        auto candidate = dir / (stem + ext);
        probed.push_back(candidate.string());
        std::error_code ec;
        if (std::filesystem::is_regular_file(candidate, ec)) return candidate;
    }
    return std::nullopt;
}

}  // namespace

std::span<const DatasetMeta> dataset_registry() { return kRegistry; }

std::optional<DatasetMeta> find_dataset(std::string_view name) {
    for (const auto& meta : kRegistry) {
        if (meta.name == name || (!meta.archive_alias.empty() && meta.archive_alias == name)) {
            return meta;
        }
    }
    return std::nullopt;
}

LabeledDataset parse_ucr_text(std::string_view text, std::string name) {
    LabeledDataset dataset{std::move(name), {}};
    std::optional<char> separator;
    std::size_t expected_values = 0;
    std::size_t first_line = 0;
    std::size_t line_no = 0;

    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;

        if (!separator) separator = line.find(',') != std::string_view::npos ? ',' : '\t';

        std::vector<std::string_view> fields;
        for (std::size_t start = 0;;) {
            const auto pos = line.find(*separator, start);
            fields.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
            if (pos == std::string_view::npos) break;
            start = pos + 1;
        }
        if (fields.size() < 2) {
            throw FormatError("line " + std::to_string(line_no) + " has a label but no values",
                              line_no);
        }
        if (first_line == 0) {
            first_line = line_no;
            expected_values = fields.size() - 1;
        } else if (fields.size() - 1 != expected_values) {
            throw FormatError("line " + std::to_string(line_no) + " has " +
                                  std::to_string(fields.size() - 1) + " values, expected " +
                                  std::to_string(expected_values) + " (as on line " +
                                  std::to_string(first_line) + ")",
                              line_no);
        }
        if (fields[0].empty()) {
            throw FormatError("line " + std::to_string(line_no) + " has an empty label", line_no, 1);
        }
        std::vector<double> values;
        values.reserve(fields.size() - 1);
        for (std::size_t col = 1; col < fields.size(); ++col) {
            const auto v = parse_number(fields[col]);
            if (!v || !std::isfinite(*v)) {
                throw FormatError("line " + std::to_string(line_no) + ", column " +
                                      std::to_string(col + 1) + ": '" + std::string(fields[col]) +
                                      "' is not a finite number",
                                  line_no, col + 1);
            }
            values.push_back(*v);
        }
        dataset.instances.push_back({std::string(fields[0]), TimeSeries(std::move(values))});
    }
    if (dataset.instances.empty()) {
        throw FormatError("dataset '" + dataset.name + "' contains no data lines");
    }
    return dataset;
}

LabeledDataset parse_ucr_file(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    try {
        return parse_ucr_text(text, path.stem().string());
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what(), e.line(), e.column());
    }
}

std::string format_ucr_text(const LabeledDataset& dataset, Separator separator) {
    const char sep = separator == Separator::Comma ? ',' : '\t';
    std::string out;
    for (const auto& inst : dataset.instances) {
        out += inst.label;
        for (double v : inst.series.values()) {
            out += sep;
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

void write_ucr_file(const LabeledDataset& dataset, const std::filesystem::path& path,
                    Separator separator) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << format_ucr_text(dataset, separator);
    if (!out) throw IoError("error while writing '" + path.string() + "'");
}

std::vector<std::string> validate_against_registry(const DatasetMeta& meta,
                                                   const LabeledDataset& train,
                                                   const LabeledDataset& test) {
    std::vector<std::string> warnings;
    const std::string prefix = std::string(meta.name) + ": ";
    auto check = [&](const char* what, std::size_t actual, std::size_t expected) {
        if (actual != expected) {
            warnings.push_back(prefix + what + " is " + std::to_string(actual) +
                               ", registry says " + std::to_string(expected));
        }
    };
    check("train size", train.size(), meta.train_size);
    check("test size", test.size(), meta.test_size);
    check("train series length", train.series_length(), meta.series_length);
    check("test series length", test.series_length(), meta.series_length);
    auto labels = train.distinct_labels();
    for (const auto& l : test.distinct_labels()) labels.push_back(l);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    check("class count", labels.size(), meta.class_count);
    return warnings;
}

DatasetPair load_pair(std::string_view name, const std::filesystem::path& root) {
    const auto meta = find_dataset(name);
    std::vector<std::string> stems{std::string(name)};
    auto add_stem = [&](std::string s) {
        if (std::find(stems.begin(), stems.end(), s) == stems.end()) stems.push_back(std::move(s));
    };
    std::string underscored(name);
    std::replace(underscored.begin(), underscored.end(), ' ', '_');
    add_stem(underscored);
    if (meta) {
        add_stem(std::string(meta->name));
        if (!meta->archive_alias.empty()) add_stem(std::string(meta->archive_alias));
    }

    std::vector<std::string> probed;
    for (const auto& stem : stems) {
        const auto dir = root / stem;
        const auto train_path = probe(dir, stem + "_TRAIN", probed);
        if (!train_path) continue;
        const auto test_path = probe(dir, stem + "_TEST", probed);
        if (!test_path) continue;

        DatasetPair pair{parse_ucr_file(*train_path), parse_ucr_file(*test_path), meta, {}};
        const std::string display = meta ? std::string(meta->name) : std::string(name);
        pair.train.name = display;
        pair.test.name = display;
        if (meta) pair.warnings = validate_against_registry(*meta, pair.train, pair.test);
        return pair;
    }
    std::string message = "dataset '" + std::string(name) + "' not found; probed:";
    for (const auto& p : probed) message += "\n  " + p;
    throw NotFound(message);
}

std::optional<std::filesystem::path> resolve_data_root(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return std::filesystem::path(*flag);
    if (const char* env = std::getenv("SYMSAX_DATA_ROOT"); env != nullptr && *env != '\0') {
        return std::filesystem::path(env);
    }
    return std::nullopt;
}

TimeSeries parse_series_file(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    std::vector<double> values;
    std::size_t line_no = 1;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        const std::string_view token = trim(std::string_view(text).substr(start, end - start));
        if (!token.empty()) {
            const auto v = parse_number(token);
            if (!v || !std::isfinite(*v)) {
                throw FormatError(path.string() + ": line " + std::to_string(line_no) + ": '" +
                                      std::string(token) + "' is not a finite number",
                                  line_no);
            }
            values.push_back(*v);
        }
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == ',' || c == '\t' || c == ' ' || c == '\n' || c == '\r') {
            flush(i);
            start = i + 1;
            if (c == '\n') ++line_no;
        }
    }
    flush(text.size());
    if (values.empty()) throw FormatError(path.string() + ": no values found");
    return TimeSeries(std::move(values));
}

}  // namespace symsax
