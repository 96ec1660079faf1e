// mpfr_sici.hpp: Arbitrary-precision Maclaurin series for Si and Ci (test oracle)

#pragma once

#include <utility>

namespace qbm::oracle {

// Returns {Si(x), Ci(x)} for x > 0, summing the series with enough bits to
// absorb the e^x growth of intermediate terms, rounded once to double.
std::pair<double, double> mpfr_sici(double x);

}  // namespace qbm::oracle
