#include "invstat/shuffler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "invstat/errors.hpp"
#include "invstat/parallel.hpp"

namespace invstat {

const std::vector<int> SweepParams::kDefaultTGrid = {1,  2,  3,  5,   7,   10,  15,  20,  25,  30,
                                                     40, 50, 75, 100, 150, 200, 300, 500, 700, 1000};
const std::vector<double> SweepParams::kDefaultKGrid = {3.0, 4.0, 5.0, 6.0, 7.0};

WindowPartition partition(std::size_t len, int T, int offset) {
    if (len == 0) throw DataError("partition: empty series");
    if (T < 1) throw DataError("partition: window length must be >= 1");
    if (offset < 0 || offset >= T) {
        throw DataError("partition: offset must lie in [0, T), got " + std::to_string(offset));
    }
    WindowPartition p;
    p.T = T;
    p.offset = offset;
    p.source_len = len;
    std::size_t start = 0;
    const std::size_t off = std::min<std::size_t>(static_cast<std::size_t>(offset), len);
    if (off > 0) {
        p.blocks.emplace_back(0, off);
        start = off;
    }
    while (start < len) {
        const std::size_t end = std::min(start + static_cast<std::size_t>(T), len);
        p.blocks.emplace_back(start, end);
        start = end;
    }
    return p;
}

ReturnSeries shuffle_blocks(const WindowPartition& p, const ReturnSeries& r, RngStream& stream) {
    if (p.source_len != r.size()) {
        throw DataError("shuffle_blocks: partition built for length " +
                        std::to_string(p.source_len) + ", series has " + std::to_string(r.size()));
    }
    std::vector<std::size_t> order(p.blocks.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i) {
        const std::size_t j = stream.next_below(i);
        std::swap(order[i - 1], order[j]);
    }
    ReturnSeries out;
    out.r.reserve(r.size());
    for (std::size_t b : order) {
        const auto [lo, hi] = p.blocks[b];
        out.r.insert(out.r.end(), r.r.begin() + static_cast<std::ptrdiff_t>(lo),
                     r.r.begin() + static_cast<std::ptrdiff_t>(hi));
    }
    return out;
}

namespace {

// Offsets are drawn uniformly on [0, offset_limit]; the upper end is clamped
// so the partition always contains at least one full window, which also makes
// T == len reproduce the unshuffled series exactly.
std::size_t offset_limit(std::size_t len, int T) {
    const std::size_t t = static_cast<std::size_t>(T);
    if (len <= t) return 0;
    return std::min<std::size_t>(t - 1, len - t);
}

struct SignAccumulator {
    std::vector<std::uint64_t> counts;
    std::uint64_t total_starts = 0;
    std::uint64_t censored = 0;

    void merge(const SignAccumulator& other) {
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
        total_starts += other.total_starts;
        censored += other.censored;
    }
};

double sample_std(const std::vector<int>& values) {
    const std::size_t n = values.size();
    if (n < 2) return 0.0;
    double mean = 0.0;
    for (int v : values) mean += static_cast<double>(v);
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (int v : values) {
        const double d = static_cast<double>(v) - mean;
        ss += d * d;
    }
    return std::sqrt(ss / static_cast<double>(n - 1));
}

void validate_params(const ReturnSeries& r, const SweepParams& params) {
    if (r.size() < 2) throw DataError("sweep: need at least 2 returns");
    if (params.n_p < 1) throw DataError("sweep: n_p must be >= 1");
    if (params.tau_max < 1) throw DataError("sweep: tau_max must be >= 1");
    if (params.smooth_window < 1 || params.smooth_window % 2 == 0) {
        throw DataError("sweep: smooth_window must be odd and >= 1");
    }
    if (params.T_list.empty()) throw DataError("sweep: empty T grid");
    if (params.k_list.empty()) throw DataError("sweep: empty k grid");
    std::set<int> t_seen;
    for (int T : params.T_list) {
        if (T < 1) throw DataError("sweep: window length must be >= 1, got " + std::to_string(T));
        if (!t_seen.insert(T).second) {
            throw DataError("sweep: duplicate window length " + std::to_string(T));
        }
    }
    std::set<double> k_seen;
    for (double k : params.k_list) {
        if (!(k > 0.0)) throw DataError("sweep: level magnitudes must be > 0");
        if (!k_seen.insert(k).second) throw DataError("sweep: duplicate level magnitude");
    }
}

}  // namespace

const SweepCell& SweepResult::cell(int T, double k) const {
    for (const SweepCell& c : cells) {
        if (c.T == T && c.k == k) return c;
    }
    throw DataError("sweep: no cell for T=" + std::to_string(T) + ", k=" + std::to_string(k));
}

SweepResult sweep(const ReturnSeries& r, const SweepParams& params) {
    validate_params(r, params);
    const double sigma = params.sigma > 0.0 ? params.sigma : volatility(r);
    if (!(sigma > 0.0)) throw DataError("sweep: volatility of input series is zero");

    const std::size_t n_t = params.T_list.size();
    const std::size_t n_k = params.k_list.size();
    const std::size_t n_cells = n_t * n_k;
    const std::size_t n_slots = n_cells * 2;  // slot = cell * 2 + sign01
    const std::size_t n_perm = static_cast<std::size_t>(params.n_p);
    const std::size_t n_tasks = n_slots * n_perm;
    const std::size_t hist_len = static_cast<std::size_t>(params.tau_max) + 1;

    const int workers = resolve_workers(params.workers);
    std::vector<std::vector<SignAccumulator>> local(static_cast<std::size_t>(workers));
    for (auto& per_worker : local) {
        per_worker.resize(n_slots);
        for (auto& acc : per_worker) acc.counts.assign(hist_len, 0);
    }
    std::vector<int> modes(n_tasks, 0);

    parallel_for(n_tasks, workers, [&](std::size_t task, int worker) {
        const std::size_t slot = task / n_perm;
        const std::size_t perm = task % n_perm;
        const std::size_t cell_idx = slot / 2;
        const std::uint64_t sign01 = slot % 2;  // 0: +k, 1: -k
        const std::size_t t_idx = cell_idx / n_k;
        const std::size_t k_idx = cell_idx % n_k;
        const int T = params.T_list[t_idx];
        const double k = params.k_list[k_idx];

        RngStream stream(params.master_seed,
                         {static_cast<std::uint64_t>(StreamPurpose::sweep),
                          static_cast<std::uint64_t>(T), sign01, k_idx, perm});
        const std::size_t limit = offset_limit(r.size(), T);
        const std::size_t offset = stream.next_below(limit + 1);
        const WindowPartition part = partition(r.size(), T, static_cast<int>(offset));
        const ReturnSeries shuffled = shuffle_blocks(part, r, stream);
        const LogSeries path = rebuild_index(shuffled, 0.0);

        const ReturnLevel level(sign01 == 0 ? k : -k, sigma);
        const FptDistribution d = fpt_distribution(path, level, params.tau_max);
        modes[task] = mode_tau(d, params.smooth_window);

        SignAccumulator& acc = local[static_cast<std::size_t>(worker)][slot];
        for (std::size_t i = 0; i < hist_len; ++i) acc.counts[i] += d.counts[i];
        acc.total_starts += d.total_starts;
        acc.censored += d.censored;
    });

    // Integer merges in fixed worker order: identical totals for any pool size.
    std::vector<SignAccumulator> summed(n_slots);
    for (auto& acc : summed) acc.counts.assign(hist_len, 0);
    for (const auto& per_worker : local) {
        for (std::size_t slot = 0; slot < n_slots; ++slot) summed[slot].merge(per_worker[slot]);
    }

    SweepResult out;
    out.sigma = sigma;
    out.n_p = params.n_p;
    out.tau_max = params.tau_max;
    out.smooth_window = params.smooth_window;
    out.master_seed = params.master_seed;
    out.rng_algorithm = RngStream::kAlgorithm;
    out.cells.resize(n_cells);
    for (std::size_t cell_idx = 0; cell_idx < n_cells; ++cell_idx) {
        SweepCell& cell = out.cells[cell_idx];
        cell.T = params.T_list[cell_idx / n_k];
        cell.k = params.k_list[cell_idx % n_k];
        cell.rho_abs = cell.k * sigma;
        cell.n_p = params.n_p;
        for (std::size_t sign01 = 0; sign01 < 2; ++sign01) {
            const std::size_t slot = cell_idx * 2 + sign01;
            SignStats& stats = sign01 == 0 ? cell.plus : cell.minus;
            SignAccumulator& acc = summed[slot];
            stats.tau_star = mode_tau(std::span<const std::uint64_t>(acc.counts),
                                      params.smooth_window);
            stats.censored_frac =
                static_cast<double>(acc.censored) / static_cast<double>(acc.total_starts);
            stats.per_perm_modes.assign(modes.begin() + static_cast<std::ptrdiff_t>(slot * n_perm),
                                        modes.begin() +
                                            static_cast<std::ptrdiff_t>((slot + 1) * n_perm));
            stats.dispersion = sample_std(stats.per_perm_modes);
            if (params.keep_histograms) stats.histogram = std::move(acc.counts);
        }
    }
    return out;
}

}  // namespace invstat
