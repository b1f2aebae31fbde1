#pragma once

// Batch layer behind the CLI: configuration enumeration, eligibility tables,
// the criterion-vs-certifier cross check and convolution power tables.

#include "orbconv/config.hpp"
#include "orbconv/density.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbconv {

enum class Format { CSV, JSON, Markdown };

std::string_view to_string(Format f);
Format parse_format(std::string_view name);

/// All nonzero configuration classes of rank p, normalized, in table order:
/// plain [s] classes (more parts first, then lexicographic), then [s]^- classes
/// (RealD only; more parts first, then shorter final block, then lexicographic),
/// then [s;u] for u = 1, ..., p-1.
std::vector<Configuration> enumerate_configs(int p, Space space);

enum class Marker { Check, Cross, S1, S2, S3, S4 };

std::string_view to_string(Marker m);
Marker parse_marker(std::string_view s);

/// Reduction case tag S1..S4 of an eligible pair (RealD, p >= 4), if any.
std::optional<Marker> reduction_case(const Configuration& x, const Configuration& y);

struct TableDocument {
    int p = 0;
    Space space = Space::RealD;
    std::vector<Configuration> configs;
    /// cells[i][j] is set for j >= i only.
    std::vector<std::vector<std::optional<Marker>>> cells;
    Format format = Format::Markdown;

    std::vector<std::string> labels() const;
};

/// Upper-triangular marker table over the u = 0 configurations. The regular
/// class is left out when its whole row is eligible.
TableDocument eligibility_table(int p, Space space, Format format = Format::Markdown);

std::string render(const TableDocument& doc);

/// Marker matrix read back from CSV or JSON output of render().
struct MarkerGrid {
    std::vector<std::string> labels;
    std::vector<std::vector<std::optional<Marker>>> cells;

    friend bool operator==(const MarkerGrid&, const MarkerGrid&) = default;
};

MarkerGrid parse_table(std::string_view text, Format format);
MarkerGrid grid_of(const TableDocument& doc);

struct PairReport {
    Configuration x_config;
    Configuration y_config;
    EligibilityVerdict eligibility;
    CertResult cert;
    bool agree = false;
};

struct CrossCheckReport {
    int p = 0;
    Space space = Space::RealD;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<PairReport> pairs;

    bool all_agree() const;
};

/// Seeded RNG for task `index` of a sweep.
Rng task_rng(std::uint64_t seed, std::uint64_t index);

/// Runs `fn(i)` for i in [0, n) on up to `threads` workers (0: hardware concurrency).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, unsigned threads = 0);

/// Every unordered pair (including x = y) of enumerated configurations,
/// instantiated with integer representatives and certified.
CrossCheckReport cross_check(int p, Space space, int trials, std::uint64_t seed, CertMode mode = CertMode::Float,
                             unsigned threads = 0);

std::string render(const CrossCheckReport& report, Format format);

struct PowerRow {
    Configuration config;
    std::vector<CertResult> results;  // results[i] is for l = i + 2
    std::optional<int> minimal_l;
};

struct PowerReport {
    int p = 0;
    Space space = Space::RealD;
    int l_max = 0;
    std::vector<PowerRow> rows;
};

/// Smallest l <= l_max for which the l-fold power certifies dense, per configuration.
PowerReport power_table(int p, Space space, int l_max, int trials, std::uint64_t seed,
                        std::vector<Configuration> configs = {}, unsigned threads = 0);

std::string render(const PowerReport& report, Format format);

}  // namespace orbconv
