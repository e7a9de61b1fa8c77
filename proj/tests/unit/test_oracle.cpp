#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "symsax/alphabet.hpp"
#include "symsax/error.hpp"

namespace symsax {
namespace {

TEST(Oracle, InverseNormal) {
    EXPECT_NEAR(oracle::inverse_normal_cdf(0.5), 0.0, 1e-12);
    EXPECT_NEAR(oracle::inverse_normal_cdf(0.75), 0.6745, 1e-4);
    for (double p : {1e-6, 0.01, 0.2, 0.37, 0.49}) {
        EXPECT_NEAR(oracle::inverse_normal_cdf(p), -oracle::inverse_normal_cdf(1.0 - p), 1e-9);
        EXPECT_NEAR(oracle::normal_cdf(oracle::inverse_normal_cdf(p)), p, 1e-12);
    }
    EXPECT_THROW(oracle::inverse_normal_cdf(0.0), InvalidParameter);
    EXPECT_THROW(oracle::inverse_normal_cdf(1.0), InvalidParameter);
    EXPECT_THROW(oracle::inverse_normal_cdf(-0.1), InvalidParameter);
}

TEST(Oracle, CdfAgreesWithErfc) {
    for (double x = -8.0; x <= 8.0; x += 0.125) {
        EXPECT_NEAR(oracle::normal_cdf(x), 0.5 * std::erfc(-x / std::sqrt(2.0)), 1e-13) << x;
    }
}

TEST(Oracle, SymbolDistanceClosedForm) {
    EXPECT_EQ(oracle::symbol_distance(2, 3, 4), 0.0);
    EXPECT_NEAR(oracle::symbol_distance(1, 4, 4), 1.348979500392163, 1e-12);
    EXPECT_NEAR(oracle::symbol_distance(1, 3, 3), 0.861454598590914, 1e-12);
}

LabeledDataset random_dataset(std::uint64_t seed, std::size_t count, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    LabeledDataset d{"random", {}};
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<double> v(n);
        for (auto& x : v) x = normal(rng);
        d.instances.push_back({std::to_string(i % 3), TimeSeries(v)});
    }
    return d;
}

TEST(Oracle, NearestNeighbourMatchesLibrary) {
    const auto d = random_dataset(7, 20, 24);
    for (Method method : {Method::ClassicSax, Method::ExtremeSax}) {
        ExperimentParams params;
        params.method = method;
        params.word_length = 6;
        params.alphabet_size = 5;
        const auto& table = table_for(5);
        const SymbolicDistanceContext ctx(table, 24, 6);
        std::vector<LabeledWord> words;
        for (const auto& inst : d.instances) {
            words.push_back({inst.label, symbolic_transform(method, inst.series, 6, table)});
        }
        for (std::size_t q = 0; q < d.size(); ++q) {
            std::vector<LabeledWord> others;
            for (std::size_t j = 0; j < d.size(); ++j) {
                if (j != q) others.push_back(words[j]);
            }
            EXPECT_EQ(nn1_classify(words[q].word, others, ctx), oracle::nn1(q, d, params)) << q;
        }
        EXPECT_DOUBLE_EQ(oracle::loocv_error(d, params), loocv_error(d, params));
    }
}

TEST(Oracle, TwoInstancesReturnTheOther) {
    LabeledDataset d{"pair", {{"x", TimeSeries({0.0, 1.0, 2.0, 3.0})}, {"y", TimeSeries({3.0, 2.0, 1.0, 0.0})}}};
    ExperimentParams params;
    params.word_length = 2;
    EXPECT_EQ(oracle::nn1(0, d, params), "y");
    EXPECT_EQ(oracle::nn1(1, d, params), "x");
}

TEST(Oracle, EqualDistancesPickFirst) {
    LabeledDataset train{"flat", {}};
    for (const char* label : {"first", "second", "third"}) {
        train.instances.push_back({label, TimeSeries({1.0, 2.0, 3.0, 4.0})});
    }
    ExperimentParams params;
    params.word_length = 2;
    EXPECT_EQ(oracle::nn1_against(TimeSeries({4.0, 3.0, 2.0, 1.0}), train, params), "first");
    EXPECT_EQ(oracle::nn1(1, train, params), "first");
    EXPECT_EQ(oracle::nn1(0, train, params), "second");
}

}  // namespace
}  // namespace symsax
