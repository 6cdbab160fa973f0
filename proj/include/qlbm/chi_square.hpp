#pragma once

#include <cstdint>
#include <vector>

namespace qlbm {

// Two-sample chi-square homogeneity test over per-site counts. Degenerate
// when the counts are too small for the asymptotic distribution; p_value is
// NaN in that case.
struct TwoSampleChiSquare {
    double statistic = 0.0;
    std::size_t dof = 0;
    double p_value = 0.0;
    bool degenerate = false;
};

TwoSampleChiSquare two_sample_chi_square(const std::vector<std::uint64_t>& a,
                                         const std::vector<std::uint64_t>& b);

} // namespace qlbm
