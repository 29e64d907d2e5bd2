#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hammit/bitstring.hpp"

namespace hammit {

/// Map of observed bit-strings to their (possibly fractional) counts.
/// `total_shots` is fixed at ingestion; the sum of counts must equal it
/// within 1e-9 relative tolerance at all times. Keys are the packed bit
/// words; all keys share the histogram width.
class OutcomeHistogram {
public:
    OutcomeHistogram() = default;

    /// Engine-side constructor for real-valued counts. Validates widths,
    /// non-negativity and mass conservation against `total_shots`.
    static OutcomeHistogram from_real_counts(int width,
                                             std::map<std::uint64_t, double> counts,
                                             double total_shots);

    int width() const { return width_; }
    double total_shots() const { return total_shots_; }
    const std::map<std::uint64_t, double>& counts() const { return counts_; }

    double count_of(const BitString& bs) const;
    double probability_of(const BitString& bs) const;

    /// Number of distinct stored bit-strings.
    std::size_t support_size() const { return counts_.size(); }

private:
    int width_ = 1;
    double total_shots_ = 0.0;
    std::map<std::uint64_t, double> counts_;
};

/// Ingests (bit-string literal, count) pairs. Duplicate keys are summed;
/// total_shots becomes the sum of all counts. Counts must be positive
/// integers: fractional counts exist only inside the mitigation engine.
OutcomeHistogram histogram_from_counts(
    const std::vector<std::pair<std::string, double>>& pairs, int width);

} // namespace hammit
