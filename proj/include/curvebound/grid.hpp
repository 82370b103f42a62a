#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace curvebound {

/// Sampled density of a k-fold convolution measure on a slice (one
/// coordinate) or a rectangle (two coordinates). Serializes to CSV with a
/// header row and 17-significant-digit values.
struct DensityGrid {
    std::string description;
    int fold_count = 3;
    std::vector<std::string> column_names;   ///< coordinate column(s) then "value"
    std::vector<std::vector<double>> rows;   ///< each row: coords..., value

    void write_csv(std::ostream& os) const;
};

}  // namespace curvebound
