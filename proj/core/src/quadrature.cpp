#include "shrinklab/quadrature.hpp"

#include <cmath>

namespace shrinklab {

namespace {

// 8-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr double kNodes[8] = {
    -0.9602898564975362, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975362,
};
constexpr double kWeights[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763,
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        double part = 0.0;
        for (int k = 0; k < 8; ++k) part += kWeights[k] * f(mid + 0.5 * h * kNodes[k]);
        sum += 0.5 * h * part;
    }
    return sum;
}

double integrate_gaussian_tail(const std::function<double(double)>& f, double a, double scale) {
    // exp(-t^2/scale) < 1e-18 once (t^2 - a^2)/scale > 41.5
    const double cutoff = std::sqrt(std::max(a * a, 0.0) + 41.5 * scale);
    const int panels = static_cast<int>(std::ceil((cutoff - a) * 8.0)) + 8;
    return integrate(f, a, cutoff, panels);
}

}  // namespace shrinklab
