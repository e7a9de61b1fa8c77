#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symsax/classification.hpp"

namespace symsax {

// One row of the built-in dataset registry.
struct DatasetMeta {
    std::string_view name;
    std::string_view type_tag;  // Simulated, Motion, Image, Sensor, ECG, Spectro
    std::size_t train_size;
    std::size_t test_size;
    std::size_t class_count;
    std::size_t series_length;
    // Directory/file stem used by later archive releases, empty when unchanged.
    std::string_view archive_alias = {};
};

// The 45 benchmark datasets, in their published order.
std::span<const DatasetMeta> dataset_registry();
std::optional<DatasetMeta> find_dataset(std::string_view name);

enum class Separator { Comma, Tab };

// One instance per nonempty line: the label token, then the values. The
// separator is taken from the first data line (comma if it has one, else tab).
LabeledDataset parse_ucr_file(const std::filesystem::path& path);
LabeledDataset parse_ucr_text(std::string_view text, std::string name);

// Values printed with round-trip precision.
void write_ucr_file(const LabeledDataset& dataset, const std::filesystem::path& path,
                    Separator separator = Separator::Tab);
std::string format_ucr_text(const LabeledDataset& dataset, Separator separator = Separator::Tab);

struct DatasetPair {
    LabeledDataset train;
    LabeledDataset test;
    std::optional<DatasetMeta> meta;    // registry entry, when the name is known
    std::vector<std::string> warnings;  // registry mismatches
};

// Loads <root>/<dir>/<dir>_TRAIN[.tsv|.txt|.csv] and the matching _TEST file.
// <dir> is tried as given, with spaces as underscores, and under the registry
// alias. Throws NotFound listing every probed path.
DatasetPair load_pair(std::string_view name, const std::filesystem::path& root);

// Registry checks for an already loaded pair; one message per mismatch.
std::vector<std::string> validate_against_registry(const DatasetMeta& meta,
                                                   const LabeledDataset& train,
                                                   const LabeledDataset& test);

// Data root from an explicit flag value, else SYMSAX_DATA_ROOT, else empty.
std::optional<std::filesystem::path> resolve_data_root(const std::optional<std::string>& flag);

// A single unlabeled series: numbers separated by commas, tabs, spaces or newlines.
TimeSeries parse_series_file(const std::filesystem::path& path);

}  // namespace symsax
