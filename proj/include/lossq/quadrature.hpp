#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lossq {

// Raised when the adaptive engine cannot reach the requested absolute
// tolerance within its subdivision budget; carries the tolerance that
// was actually achieved.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(double requested, double achieved)
        : std::runtime_error(message(requested, achieved)),
          requested_tolerance(requested),
          achieved_tolerance(achieved) {}

    double requested_tolerance;
    double achieved_tolerance;

  private:
    static std::string message(double requested, double achieved) {
        std::ostringstream os;
        os << "quadrature did not converge: requested abs tolerance " << requested
           << ", achieved " << achieved;
        return os.str();
    }
};

namespace detail {

template <typename F>
struct SimpsonState {
    const F& f;
    std::uint64_t budget;   // remaining interval splits
    double error_sum;       // accumulated |error| of terminal intervals
    bool starved;           // ran out of budget or depth before local tolerance
};

template <typename F>
double adaptive_simpson_rec(SimpsonState<F>& st, double a, double b, double fa, double fm,
                            double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.f(lm);
    const double frm = st.f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double err = (left + right - whole) / 15.0;
    if (std::abs(err) <= tol || depth >= 60 || st.budget == 0) {
        st.error_sum += std::abs(err);
        if (std::abs(err) > tol) st.starved = true;
        return left + right + err;
    }
    st.budget -= 1;
    return adaptive_simpson_rec(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adaptive_simpson_rec(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace detail

// Adaptive Simpson integration of f over [a,b] to an absolute tolerance.
// One engine backs every integral in the library so transforms, pmfs and
// crossing parameters stay mutually consistent. Throws QuadratureError
// when the subdivision budget (default 2^20 splits) runs out before the
// tolerance is met.
template <typename F>
double integrate(const F& f, double a, double b, double abs_tolerance = 1e-10,
                 std::uint64_t max_subdivisions = (1ULL << 20)) {
    if (!(a < b)) return 0.0;
    detail::SimpsonState<F> st{f, max_subdivisions, 0.0, false};
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double value =
        detail::adaptive_simpson_rec(st, a, b, fa, fm, fb, whole, abs_tolerance, 0);
    if (st.starved && st.error_sum > abs_tolerance)
        throw QuadratureError(abs_tolerance, st.error_sum);
    return value;
}

}  // namespace lossq
