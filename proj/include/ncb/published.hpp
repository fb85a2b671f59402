#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <span>
#include <string>

namespace ncb {

// Reference results reported for the original study's evaluation, used by
// the comparison command as static rows (flagged source=published).
// Small networks carry modularity only; the large SNAP networks carry
// community counts, modularity, and wall-clock seconds.

struct published_small {
    const char* algorithm;
    double modularity;
    bool has_band;        // LPA rows carry a min/max band over 5 runs
    double band_lo, band_hi;
};

struct published_large {
    const char* algorithm;
    int communities;
    double modularity;
    double seconds;
};

enum class dataset_id { karate, dolphins, football, condmat, twitter, brightkite };

inline constexpr published_small kPublishedKarate[] = {
    {"CNM", 0.381, false, 0, 0},
    {"LPA", 0.345, true, 0.132, 0.402},
    {"Infomap", 0.402, false, 0, 0},
    {"FastUnfolding", 0.419, false, 0, 0},
    {"NCB", 0.378, false, 0, 0},
};

inline constexpr published_small kPublishedFootball[] = {
    {"CNM", 0.550, false, 0, 0},
    {"LPA", 0.581, true, 0.563, 0.602},
    {"Infomap", 0.600, false, 0, 0},
    {"FastUnfolding", 0.605, false, 0, 0},
    {"NCB", 0.585, false, 0, 0},
};

inline constexpr published_small kPublishedDolphins[] = {
    {"CNM", 0.495, false, 0, 0},
    {"LPA", 0.458, true, 0.373, 0.502},
    {"Infomap", 0.528, false, 0, 0},
    {"FastUnfolding", 0.519, false, 0, 0},
    {"NCB", 0.510, false, 0, 0},
};

inline constexpr published_large kPublishedCondmat[] = {
    {"CNM", 1910, 0.679, 250.7},
    {"LPA", 3590, 0.662, 72.40},
    {"Infomap", 3233, 0.674, 639.766},
    {"FastUnfolding", 1667, 0.722, 45.39},
    {"NCB", 2267, 0.681, 56.19},
};

inline constexpr published_large kPublishedTwitter[] = {
    {"CNM", 168, 0.869, 68.15},
    {"LPA", 648, 0.794, 49.74},
    {"Infomap", 607, 0.825, 51.663},
    {"FastUnfolding", 136, 0.896, 18.79},
    {"NCB", 366, 0.826, 23.64},
};

inline constexpr published_large kPublishedBrightkite[] = {
    {"CNM", 1034, 0.603, 358.88},
    {"LPA", 1569, 0.455, 151.63},
    {"Infomap", 4829, 0.581, 869.767},
    {"FastUnfolding", 951, 0.664, 127.60},
    {"NCB", 1260, 0.611, 161.30},
};

inline std::span<const published_small> published_small_rows(dataset_id d) {
    switch (d) {
        case dataset_id::karate: return kPublishedKarate;
        case dataset_id::football: return kPublishedFootball;
        case dataset_id::dolphins: return kPublishedDolphins;
        default: return {};
    }
}

inline std::span<const published_large> published_large_rows(dataset_id d) {
    switch (d) {
        case dataset_id::condmat: return kPublishedCondmat;
        case dataset_id::twitter: return kPublishedTwitter;
        case dataset_id::brightkite: return kPublishedBrightkite;
        default: return {};
    }
}

// Recognizes a dataset from an input filename stem (case-insensitive
// substring), e.g. "data/karate.gml" → karate. Unrecognized names simply
// get no published rows.
inline std::optional<dataset_id> dataset_from_path(const std::string& path) {
    std::string lower;
    lower.reserve(path.size());
    for (char c : path) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    auto has = [&](const char* s) { return lower.find(s) != std::string::npos; };
    if (has("karate")) return dataset_id::karate;
    if (has("dolphin")) return dataset_id::dolphins;
    if (has("football")) return dataset_id::football;
    if (has("cond")) return dataset_id::condmat;
    if (has("twitter")) return dataset_id::twitter;
    if (has("brightkite")) return dataset_id::brightkite;
    return std::nullopt;
}

}  // namespace ncb
