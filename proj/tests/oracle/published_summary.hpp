#pragma once

// Published dataset summary rows (name, type, train, test, classes, length),
// transcribed independently of the library registry.

#include <array>
#include <cstddef>
#include <string_view>

namespace symsax::published {

struct SummaryRow {
    std::string_view dataset;
    std::string_view type;
    std::size_t train;
    std::size_t test;
    std::size_t classes;
    std::size_t length;
};

inline constexpr std::array<SummaryRow, 45> kDatasetSummary{{
    {"synthetic control", "Simulated", 300, 300, 6, 60},
    {"Gun_Point", "Motion", 50, 150, 2, 150},
    {"CBF", "Simulated", 30, 900, 3, 128},
    {"FaceAll", "Image", 560, 1690, 14, 131},
    {"OSULeaf", "Image", 200, 242, 6, 427},
    {"SwedishLeaf", "Image", 500, 625, 15, 128},
    {"Trace", "Sensor", 100, 100, 4, 275},
    {"FaceFour", "Image", 24, 88, 4, 350},
    {"Lighting2", "Sensor", 60, 61, 2, 637},
    {"Lighting7", "Sensor", 70, 73, 7, 319},
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
    {"WordsSynonyms", "Image", 267, 638, 25, 270},
}};

}  // namespace symsax::published
