#include "mpfr_sici.hpp"

#include <cmath>
#include <stdexcept>

#include <mpfr.h>

namespace qbm::oracle {

std::pair<double, double> mpfr_sici(double x) {
    if (!(x > 0.0)) throw std::domain_error("mpfr_sici: x must be > 0");
    // Largest term is about e^x; keep 128 guard bits beyond that.
    const auto prec = static_cast<mpfr_prec_t>(1.4427 * x + 200.0);
    mpfr_t X, term, si, cinsum, tmp, eps;
    mpfr_inits2(prec, X, term, si, cinsum, tmp, eps, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(X, x, MPFR_RNDN);

    // term_k = (-1)^k x^k / k!, accumulated from k = 1.
    mpfr_set(term, X, MPFR_RNDN);  // k = 1
    mpfr_set(si, X, MPFR_RNDN);
    mpfr_set_zero(cinsum, 1);
    mpfr_set_ui_2exp(eps, 1, -static_cast<long>(prec), MPFR_RNDN);
    for (unsigned long k = 2;; ++k) {
        mpfr_mul(term, term, X, MPFR_RNDN);
        mpfr_div_ui(term, term, k, MPFR_RNDN);
        // x^k / k!, sign applied below.
        mpfr_div_ui(tmp, term, k, MPFR_RNDN);
        if (k % 2 == 0) {
            // Ci series: (-1)^{k/2} x^k / (k k!)
            if ((k / 2) % 2 == 1) mpfr_neg(tmp, tmp, MPFR_RNDN);
            mpfr_add(cinsum, cinsum, tmp, MPFR_RNDN);
        } else {
            // Si series: (-1)^{(k-1)/2} x^k / (k k!)
            if (((k - 1) / 2) % 2 == 1) mpfr_neg(tmp, tmp, MPFR_RNDN);
            mpfr_add(si, si, tmp, MPFR_RNDN);
        }
        if (static_cast<double>(k) > x && mpfr_cmp_d(term, 0.0) != 0) {
            mpfr_abs(tmp, term, MPFR_RNDN);
            if (mpfr_cmp(tmp, eps) < 0) break;
        }
    }
    // Ci = gamma + ln x + cinsum
    mpfr_const_euler(tmp, MPFR_RNDN);
    mpfr_add(cinsum, cinsum, tmp, MPFR_RNDN);
    mpfr_log(tmp, X, MPFR_RNDN);
    mpfr_add(cinsum, cinsum, tmp, MPFR_RNDN);
    const double s = mpfr_get_d(si, MPFR_RNDN);
    const double c = mpfr_get_d(cinsum, MPFR_RNDN);
    mpfr_clears(X, term, si, cinsum, tmp, eps, static_cast<mpfr_ptr>(nullptr));
    return {s, c};
}

}  // namespace qbm::oracle
