#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "invstat/inverse_stats.hpp"
#include "invstat/market_data.hpp"
#include "invstat/rng.hpp"

namespace invstat {

// Tiling of [0, source_len) into T-day blocks after an initial offset.
// Interior blocks have length exactly T; at most the leading and trailing
// blocks are shorter. Blocks cover every day exactly once.
struct WindowPartition {
    int T = 1;
    int offset = 0;
    std::size_t source_len = 0;
    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [start, end)
};

WindowPartition partition(std::size_t len, int T, int offset);

// Reorders the partition's blocks by an unbiased Fisher-Yates permutation,
// preserving within-block order. Returns the new series; sigma_cache is not
// propagated (volatility is permutation-invariant, tests recompute it).
ReturnSeries shuffle_blocks(const WindowPartition& p, const ReturnSeries& r, RngStream& stream);

struct SweepParams {
    std::vector<int> T_list = kDefaultTGrid;
    std::vector<double> k_list = kDefaultKGrid;  // positive magnitudes; both signs run per cell
    int n_p = 1000;
    int tau_max = 1000;
    int smooth_window = 3;
    std::uint64_t master_seed = 0;
    int workers = 0;      // <= 0: hardware concurrency
    double sigma = 0.0;   // 0: computed from the input returns
    bool keep_histograms = true;

    static const std::vector<int> kDefaultTGrid;
    static const std::vector<double> kDefaultKGrid;
};

// Per-sign statistics of one (T, |rho|) cell.
struct SignStats {
    double tau_star = 0.0;        // mode of the summed histogram
    double dispersion = 0.0;      // sample std of per-permutation modes
    double censored_frac = 0.0;
    std::vector<std::uint64_t> histogram;  // summed over permutations (optional)
    std::vector<int> per_perm_modes;
};

struct SweepCell {
    int T = 0;
    double k = 0.0;        // level magnitude in sigma units
    double rho_abs = 0.0;  // k * sigma
    int n_p = 0;
    SignStats plus;
    SignStats minus;
};

struct SweepResult {
    std::vector<SweepCell> cells;
    double sigma = 0.0;
    int n_p = 0;
    int tau_max = 0;
    int smooth_window = 0;
    std::uint64_t master_seed = 0;
    std::string rng_algorithm;

    const SweepCell& cell(int T, double k) const;  // throws DataError when absent
};

// Permutation-averaged first-passage sweep over the (T, k) grid. For every
// (T, k, sign, permutation) a fresh offset is drawn, blocks are shuffled, the
// index is rebuilt and its FPT histogram accumulated. tau* is the mode of the
// summed histogram; per-permutation modes provide the dispersion. The RNG
// stream key is (T, sign, k-index, permutation), so the result is identical
// for any worker count.
SweepResult sweep(const ReturnSeries& r, const SweepParams& params);

}  // namespace invstat
