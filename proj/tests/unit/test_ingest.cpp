#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "symsax/error.hpp"
#include "symsax/ingest.hpp"

namespace symsax {
namespace {

namespace fs = std::filesystem;

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("symsax_test_" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }

    fs::path write(const std::string& name, const std::string& text) const {
        const auto p = path_ / name;
        fs::create_directories(p.parent_path());
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }

private:
    fs::path path_;
};

const fs::path kData = SYMSAX_TEST_DATA_DIR;

TEST(ParseUcr, CommaLine) {
    TempDir dir;
    const auto d = parse_ucr_file(dir.write("x.csv", "1,0.5,0.7\n"));
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.instances[0].label, "1");
    EXPECT_EQ(d.instances[0].series, TimeSeries({0.5, 0.7}));
    EXPECT_EQ(d.name, "x");
}

TEST(ParseUcr, TabVariantIsIdentical) {
    TempDir dir;
    const auto comma = parse_ucr_file(dir.write("a", "1,0.5,0.7\n2,1e-3,-4\n"));
    const auto tab = parse_ucr_file(dir.write("b", "1\t0.5\t0.7\r\n\n2\t1e-3\t-4\n"));
    ASSERT_EQ(tab.size(), comma.size());
    for (std::size_t i = 0; i < tab.size(); ++i) {
        EXPECT_EQ(tab.instances[i].label, comma.instances[i].label);
        EXPECT_EQ(tab.instances[i].series, comma.instances[i].series);
    }
}

TEST(ParseUcr, RaggedRowsNameTheLine) {
    TempDir dir;
    try {
        parse_ucr_file(dir.write("r", "1,0.5,0.7\n2,0.1\n"));
        FAIL();
    } catch (const FormatError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(ParseUcr, NonNumericValueNamesLineAndColumn) {
    TempDir dir;
    try {
        parse_ucr_file(dir.write("n", "1,0.5,0.7\n2,0.1,abc\n"));
        FAIL();
    } catch (const FormatError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 3u);
    }
    EXPECT_THROW(parse_ucr_file(dir.write("nan", "1,NaN,0.7\n")), FormatError);
    EXPECT_THROW(parse_ucr_file(dir.write("inf", "1,inf,0.7\n")), FormatError);
    EXPECT_THROW(parse_ucr_file(dir.write("lonely", "1\n")), FormatError);
}

TEST(ParseUcr, EmptyAndMissingFiles) {
    TempDir dir;
    EXPECT_THROW(parse_ucr_file(dir.write("empty", "")), FormatError);
    EXPECT_THROW(parse_ucr_file(dir.write("blank", "\n  \n")), FormatError);
    EXPECT_THROW(parse_ucr_file(dir.path() / "does-not-exist"), IoError);
}

TEST(ParseUcr, RoundTripsAtFullPrecision) {
    std::mt19937_64 rng(61);
    std::normal_distribution<double> normal(0.0, 100.0);
    TempDir dir;
    for (int trial = 0; trial < 20; ++trial) {
        LabeledDataset d{"rt", {}};
        for (int i = 0; i < 5 + trial; ++i) {
            std::vector<double> v(3 + trial);
            for (auto& x : v) x = normal(rng) * std::pow(10.0, trial % 7 - 3);
            d.instances.push_back({std::to_string(i % 3), TimeSeries(v)});
        }
        for (Separator sep : {Separator::Comma, Separator::Tab}) {
            const auto path = dir.path() / "rt.txt";
            write_ucr_file(d, path, sep);
            const auto back = parse_ucr_file(path);
            ASSERT_EQ(back.size(), d.size());
            for (std::size_t i = 0; i < d.size(); ++i) {
                EXPECT_EQ(back.instances[i].label, d.instances[i].label);
                EXPECT_EQ(back.instances[i].series, d.instances[i].series);
            }
            EXPECT_EQ(format_ucr_text(back, sep), format_ucr_text(d, sep));
        }
    }
}

TEST(Registry, HasAllPublishedRows) {
    const auto reg = dataset_registry();
    EXPECT_EQ(reg.size(), 45u);
    const auto sc = find_dataset("synthetic control");
    ASSERT_TRUE(sc);
    EXPECT_EQ(sc->train_size, 300u);
    EXPECT_EQ(sc->test_size, 300u);
    EXPECT_EQ(sc->class_count, 6u);
    EXPECT_EQ(sc->series_length, 60u);
    const auto adiac = find_dataset("Adiac");
    ASSERT_TRUE(adiac);
    EXPECT_EQ(adiac->train_size, 390u);
    EXPECT_EQ(adiac->test_size, 391u);
    EXPECT_EQ(adiac->class_count, 37u);
    EXPECT_EQ(adiac->series_length, 176u);
    const auto skate = find_dataset("InlineSkate");
    ASSERT_TRUE(skate);
    EXPECT_EQ(skate->series_length, 1882u);
    EXPECT_EQ(find_dataset("GunPoint")->name, "Gun_Point");
    EXPECT_FALSE(find_dataset("NotADataset"));
    for (const auto& row : reg) {
        EXPECT_GT(row.train_size, 0u);
        EXPECT_GT(row.test_size, 0u);
        EXPECT_GT(row.class_count, 0u);
        EXPECT_GE(row.series_length, 2u);
    }
}

TEST(LoadPair, CoffeeMatchesRegistry) {
    const auto pair = load_pair("Coffee", kData);
    EXPECT_EQ(pair.train.size(), 28u);
    EXPECT_EQ(pair.test.size(), 28u);
    EXPECT_EQ(pair.train.distinct_labels().size(), 2u);
    EXPECT_EQ(pair.train.series_length(), 286u);
    EXPECT_TRUE(pair.warnings.empty());
    ASSERT_TRUE(pair.meta);
}

TEST(LoadPair, ItalyPowerDemandIsShortest) {
    const auto pair = load_pair("ItalyPowerDemand", kData);
    EXPECT_EQ(pair.train.series_length(), 24u);
    EXPECT_TRUE(pair.warnings.empty());
}

TEST(LoadPair, ResolvesLaterArchiveNames) {
    const auto pair = load_pair("Gun_Point", kData);
    EXPECT_EQ(pair.train.name, "Gun_Point");
    EXPECT_EQ(pair.test.size(), 150u);
    EXPECT_TRUE(pair.warnings.empty());
}

TEST(LoadPair, UnknownNameLoadsWithoutValidation) {
    TempDir dir;
    dir.write("Mine/Mine_TRAIN.csv", "a,1,2\nb,2,1\n");
    dir.write("Mine/Mine_TEST.csv", "a,1,3\n");
    const auto pair = load_pair("Mine", dir.path());
    EXPECT_FALSE(pair.meta);
    EXPECT_TRUE(pair.warnings.empty());
    EXPECT_EQ(pair.train.size(), 2u);
}

TEST(LoadPair, RegistryMismatchWarns) {
    TempDir dir;
    dir.write("Coffee/Coffee_TRAIN", "0,1,2\n1,2,1\n");
    dir.write("Coffee/Coffee_TEST", "0,1,3\n");
    const auto pair = load_pair("Coffee", dir.path());
    EXPECT_FALSE(pair.warnings.empty());
}

TEST(LoadPair, MissingFilesListProbedPaths) {
    TempDir dir;
    try {
        load_pair("Beef", dir.path());
        FAIL();
    } catch (const NotFound& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("Beef_TRAIN.tsv"), std::string::npos);
        EXPECT_NE(msg.find("Beef_TRAIN.csv"), std::string::npos);
    }
}

TEST(DataRoot, FlagBeatsEnvironment) {
    ::setenv("SYMSAX_DATA_ROOT", "/from/env", 1);
    EXPECT_EQ(resolve_data_root(std::string("/from/flag")), fs::path("/from/flag"));
    EXPECT_EQ(resolve_data_root(std::nullopt), fs::path("/from/env"));
    ::unsetenv("SYMSAX_DATA_ROOT");
    EXPECT_FALSE(resolve_data_root(std::nullopt));
}

TEST(SeriesFile, AcceptsMixedSeparators) {
    TempDir dir;
    EXPECT_EQ(parse_series_file(dir.write("s", "1, 2\t3\n4 5\n")), TimeSeries({1, 2, 3, 4, 5}));
    EXPECT_THROW(parse_series_file(dir.write("bad", "1 x 3")), FormatError);
    EXPECT_THROW(parse_series_file(dir.write("none", "\n")), FormatError);
}

}  // namespace
}  // namespace symsax
