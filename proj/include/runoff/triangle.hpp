// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "runoff/errors.hpp"

namespace runoff {

enum class TriangleKind { incremental, cumulative };

std::string_view kind_name(TriangleKind kind);

// Index of a cell in the unobserved lower-right half: accident year i in
// 2..n, development year j in n-i+1..n-1. Accident years are 1-based,
// development years 0-based, matching the CSV headers.
struct FutureCellIndex {
    std::size_t accident_year;
    std::size_t dev_year;

    auto operator<=>(const FutureCellIndex&) const = default;
};

// Run-off triangle: an n x n grid of claim amounts of which exactly the
// upper-left half (dev year j <= n - i for accident year i) is observed.
// Values are immutable after construction.
//
// Cumulative triangles must be strictly positive in every observed cell
// because the development-factor ratios divide by the previous column.
// Monotonicity along a row is deliberately not enforced.
class Triangle {
public:
    struct Options {
        bool allow_negative_increments = false;
    };

    // `rows` holds the observed cells only: row for accident year i has
    // n - i + 1 entries (dev years 0..n-i).
    Triangle(TriangleKind kind, std::vector<std::vector<double>> rows,
             Options options = {}, std::optional<long> origin_year = std::nullopt,
             std::string unit = {});

    std::size_t size() const noexcept { return n_; }
    TriangleKind kind() const noexcept { return kind_; }
    std::optional<long> origin_year() const noexcept { return origin_year_; }
    const std::string& unit() const noexcept { return unit_; }

    // Accident year label for row i (origin year offset when present).
    long year_label(std::size_t accident_year) const;

    std::size_t row_length(std::size_t accident_year) const;
    bool is_observed(std::size_t accident_year, std::size_t dev_year) const noexcept;

    // Observed cell (accident year 1..n, dev year 0..n-i).
    double at(std::size_t accident_year, std::size_t dev_year) const;

    // The unobserved indexes, ordered by accident year then dev year.
    std::vector<FutureCellIndex> future_cells() const;

    Triangle with_unit(std::string unit) const;

    friend bool operator==(const Triangle& a, const Triangle& b);

private:
    TriangleKind kind_;
    std::size_t n_;
    std::vector<double> cells_;  // rows packed back to back
    std::vector<std::size_t> row_offset_;
    std::optional<long> origin_year_;
    std::string unit_;
};

/// Running row sums; observed mask unchanged.
Triangle cumulate(const Triangle& t);

/// Adjacent row differences, inverse of cumulate. The result may carry
/// negative increments (cumulative rows are allowed to decrease).
Triangle decumulate(const Triangle& t);

struct CsvOptions {
    bool allow_negative_increments = false;
};

/// Parse the triangle CSV dialect:
///   accident_year,dev_0,...,dev_{n-1}
/// with one row per accident year, future cells left empty. Strictly
/// validates the shape; all failures throw validation_error naming the
/// line or cell.
Triangle parse_csv(std::string_view text, TriangleKind declared_kind,
                   CsvOptions options = {});

/// Emit the same dialect; observed cells only, LF line endings, shortest
/// round-trip number formatting.
std::string emit_csv(const Triangle& t);

/// Emit the full square with predicted values in the future cells. The
/// prediction keys must cover exactly the future triangle.
std::string emit_csv(const Triangle& t,
                     const std::map<FutureCellIndex, double>& predictions);

/// "sha256:<hex>" digest of the canonical CSV emission. Stable across
/// runs for identical triangle content.
std::string content_fingerprint(const Triangle& t);

}  // namespace runoff
