#include "qlbm/chi_square.hpp"

#include <cmath>
#include <limits>

#include <boost/math/special_functions/gamma.hpp>

#include "qlbm/errors.hpp"

namespace qlbm {

TwoSampleChiSquare two_sample_chi_square(const std::vector<std::uint64_t>& a,
                                         const std::vector<std::uint64_t>& b) {
    if (a.size() != b.size()) throw DomainError("chi-square inputs differ in length");
    double ta = 0.0, tb = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        ta += static_cast<double>(a[k]);
        tb += static_cast<double>(b[k]);
    }

    TwoSampleChiSquare res;
    if (ta == 0.0 || tb == 0.0) {
        res.degenerate = true;
        res.p_value = std::numeric_limits<double>::quiet_NaN();
        return res;
    }

    const double ka = std::sqrt(tb / ta);
    const double kb = std::sqrt(ta / tb);
    std::size_t used = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double n = static_cast<double>(a[k]) + static_cast<double>(b[k]);
        if (n == 0.0) continue;
        ++used;
        const double d = ka * static_cast<double>(a[k]) - kb * static_cast<double>(b[k]);
        res.statistic += d * d / n;
    }
    res.dof = used > 1 ? used - 1 : 0;

    // asymptotic test needs a few expected counts per occupied cell
    const double per_cell = 5.0 * static_cast<double>(used);
    if (res.dof < 1 || ta < per_cell || tb < per_cell) {
        res.degenerate = true;
        res.p_value = std::numeric_limits<double>::quiet_NaN();
        return res;
    }
    res.p_value =
        boost::math::gamma_q(0.5 * static_cast<double>(res.dof), 0.5 * res.statistic);
    return res;
}

} // namespace qlbm
