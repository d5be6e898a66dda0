#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <type_traits>
#include <vector>

namespace monobump::quad {

struct Options {
    double relTol = 1e-10;
    double absTol = 1e-12;
    std::size_t maxEvals = std::size_t{1} << 20;
    /// Interior seed points; the interval endpoints are always implied.
    std::vector<double> breakpoints{};
    /// Uniform seed panels used when no breakpoints are given.
    int initialPanels = 8;
};

template <class T>
struct Result {
    T value{};
    double err = 0.0;
    std::size_t evals = 0;
    bool converged = false;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1].
inline constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
inline constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

inline double absval(double x) { return std::fabs(x); }
inline double absval(const std::complex<double>& z) { return std::abs(z); }

template <class T>
struct Panel {
    double a = 0.0, b = 0.0;
    T value{};
    double err = 0.0;
};

// One Kronrod pass over [a, b]; the error estimate follows the classic
// rescaled |K15 - G7| sharpening.
template <class F, class T>
Panel<T> gk15(F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);

    const T fc = f(mid);
    T resg = kWg[3] * fc;
    T resk = kWgk[7] * fc;
    double resabs = kWgk[7] * absval(fc);
    T fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = hl * kXgk[j];
        fv1[j] = f(mid - dx);
        fv2[j] = f(mid + dx);
        const T sum = fv1[j] + fv2[j];
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (absval(fv1[j]) + absval(fv2[j]));
        if (j % 2 == 1) resg += kWg[(j - 1) / 2] * sum;
    }
    const T reskh = resk * 0.5;
    double resasc = kWgk[7] * absval(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (absval(fv1[j] - reskh) + absval(fv2[j] - reskh));

    Panel<T> p;
    p.a = a;
    p.b = b;
    p.value = resk * hl;
    resabs *= std::fabs(hl);
    resasc *= std::fabs(hl);
    double err = absval(resk - resg) * std::fabs(hl);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double epmach = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * epmach))
        err = std::max(epmach * 50.0 * resabs, err);
    p.err = err;
    return p;
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of a real- or complex-valued
/// callable over [a, b]. Refines the worst panel until the summed error
/// estimate meets max(absTol, relTol*|value|) or the budget runs out.
template <class F>
auto integrate(F&& f, double a, double b, const Options& opt = {}) {
    using T = std::decay_t<decltype(f(a))>;
    using detail::Panel;

    Result<T> out;
    if (a == b) {
        out.converged = true;
        return out;
    }

    std::vector<double> pts;
    pts.push_back(a);
    if (opt.breakpoints.empty()) {
        const int n = std::max(1, opt.initialPanels);
        for (int i = 1; i < n; ++i) pts.push_back(a + (b - a) * i / n);
    } else {
        for (double x : opt.breakpoints)
            if (x > std::min(a, b) && x < std::max(a, b)) pts.push_back(x);
    }
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (a > b) std::reverse(pts.begin(), pts.end());

    std::vector<Panel<T>> heap;
    heap.reserve(pts.size() + 64);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        heap.push_back(detail::gk15<F, T>(f, pts[i], pts[i + 1]));
        out.evals += 15;
    }
    auto cmp = [](const Panel<T>& lhs, const Panel<T>& rhs) {
        if (lhs.err != rhs.err) return lhs.err < rhs.err;
        return lhs.a > rhs.a;  // deterministic tie break
    };
    std::make_heap(heap.begin(), heap.end(), cmp);

    std::vector<Panel<T>> frozen;  // panels too narrow to split further
    const double widthFloor =
        8.0 * std::numeric_limits<double>::epsilon() *
        std::max({std::fabs(a), std::fabs(b), 1.0});

    auto totals = [&] {
        T v{};
        double e = 0.0;
        for (const auto& p : heap) {
            v += p.value;
            e += p.err;
        }
        for (const auto& p : frozen) {
            v += p.value;
            e += p.err;
        }
        return std::pair<T, double>(v, e);
    };

    auto [value, errSum] = totals();
    while (!heap.empty()) {
        const double tol =
            std::max(opt.absTol, opt.relTol * detail::absval(value));
        if (errSum <= tol || out.evals + 30 > opt.maxEvals) break;
        std::pop_heap(heap.begin(), heap.end(), cmp);
        Panel<T> worst = heap.back();
        heap.pop_back();
        if (std::fabs(worst.b - worst.a) < widthFloor) {
            frozen.push_back(worst);
            if (heap.empty() || heap.front().err * heap.size() <= tol) break;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Panel<T> left = detail::gk15<F, T>(f, worst.a, mid);
        Panel<T> right = detail::gk15<F, T>(f, mid, worst.b);
        out.evals += 30;
        value += left.value + right.value - worst.value;
        errSum += left.err + right.err - worst.err;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), cmp);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), cmp);
    }

    // Deterministic final reduction in coordinate order.
    for (const auto& p : frozen) heap.push_back(p);
    std::sort(heap.begin(), heap.end(),
              [](const Panel<T>& lhs, const Panel<T>& rhs) { return lhs.a < rhs.a; });
    out.value = T{};
    out.err = 0.0;
    for (const auto& p : heap) {
        out.value += p.value;
        out.err += p.err;
    }
    out.converged =
        out.err <= std::max(opt.absTol, opt.relTol * detail::absval(out.value));
    return out;
}

}  // namespace monobump::quad
