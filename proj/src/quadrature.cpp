#include "nuclab/quadrature.hpp"

#include "nuclab/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <sstream>

namespace nuclab {

namespace {
// 2^16 leaf intervals * 15 nodes stays just under 1e6 evaluations.
constexpr unsigned kMaxDepth = 16;
} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol)
{
    using boost::math::quadrature::gauss_kronrod;

    QuadratureResult r;
    if (std::isfinite(a) && std::isfinite(b)) {
        // Boost reports per-interval error estimates without the interval's
        // Jacobian, so short finite ranges are mapped onto [-1, 1] first.
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        auto g = [&f, mid, half](double t) { return half * f(mid + half * t); };
        r.value = gauss_kronrod<double, 15>::integrate(g, -1.0, 1.0, kMaxDepth, rel_tol, &r.error, &r.l1);
        r.l1 = std::abs(r.l1);
    } else {
        r.value = gauss_kronrod<double, 15>::integrate(f, a, b, kMaxDepth, rel_tol, &r.error, &r.l1);
    }

    if (!std::isfinite(r.value) || !std::isfinite(r.error)) {
        std::ostringstream msg;
        msg << "integrate_adaptive: non-finite result on [" << a << ", " << b << "]";
        throw NumericError(msg.str());
    }
    // Boost stops either at tolerance or at max depth; only the former is acceptable.
    if (r.error > rel_tol * r.l1 && r.error > 0.0) {
        std::ostringstream msg;
        msg.precision(6);
        msg << "integrate_adaptive: no convergence on [" << a << ", " << b << "]: value=" << r.value
            << " error=" << r.error << " l1=" << r.l1 << " requested rel_tol=" << rel_tol;
        throw NumericError(msg.str());
    }
    return r;
}

} // namespace nuclab
