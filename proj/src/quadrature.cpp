#include "bjorling/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace bjorling {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK dqk15).
// Kronrod nodes; the embedded Gauss rule uses the odd-indexed ones.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526, 0.949107912342758524526189684048,
    0.864864423359769072789712788641, 0.741531185599394439863864773281,
    0.586087235467691130294144838259, 0.405845151377397166906606412077,
    0.207784955007898467600689403773, 0.000000000000000000000000000000};
constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058, 0.063092092629978553290700663189,
    0.104790010322250183839876322541, 0.140653259715525918745189590510,
    0.169004726639267902826583426598, 0.190350578064785409913256402421,
    0.204432940075298892414161999234, 0.209482141084727828012999174891};
constexpr double kGaussW[4] = {
    0.129484966168869693270611432679, 0.279705391489276667901467771423,
    0.381830050505118944950369775488, 0.417959183673469387755102040816};

struct PanelResult {
    Complex kronrod;
    double error;
};

// One 15-point panel of the line integral f(p + t d) d over t in [t0, t1].
PanelResult panel(const std::function<Complex(Complex)>& f, Complex p,
                  Complex d, double t0, double t1) {
    const double half = 0.5 * (t1 - t0);
    const double mid = 0.5 * (t0 + t1);
    Complex gauss{0.0, 0.0};
    Complex kron{0.0, 0.0};
    for (int i = 0; i < 8; ++i) {
        if (kNodes[i] == 0.0) {
            const Complex fm = f(p + mid * d);
            kron += kKronrodW[i] * fm;
            gauss += kGaussW[3] * fm;
            continue;
        }
        const Complex fl = f(p + (mid - half * kNodes[i]) * d);
        const Complex fr = f(p + (mid + half * kNodes[i]) * d);
        kron += kKronrodW[i] * (fl + fr);
        if (i % 2 == 1) gauss += kGaussW[i / 2] * (fl + fr);
    }
    gauss *= half;
    kron *= half;
    return {kron * d, std::abs(kron - gauss) * std::abs(d)};
}

struct Panel {
    double t0, t1;
    Complex value;
    double error;
};

// Globally adaptive refinement: split the worst panel until the total
// error estimate meets the budget.  Handles integrable singularities and
// the jump discontinuities of principal-branch integrands (panels close
// in on the jump until its contribution is below tolerance).
Complex adapt(const std::function<Complex(Complex)>& f, Complex p, Complex d,
              double tol) {
    constexpr int kMaxPanels = 4000;
    const auto worse = [](const Panel& a, const Panel& b) {
        return a.error < b.error;
    };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(
        worse);
    const PanelResult first = panel(f, p, d, 0.0, 1.0);
    queue.push({0.0, 1.0, first.kronrod, first.error});
    double total_error = first.error;
    int panels = 1;
    while (total_error > tol && panels < kMaxPanels) {
        const Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.t0 + worst.t1);
        if (mid <= worst.t0 || mid >= worst.t1) {
            // Interval is at floating-point resolution; give up on it.
            queue.push({worst.t0, worst.t1, worst.value, 0.0});
            total_error -= worst.error;
            continue;
        }
        const PanelResult left = panel(f, p, d, worst.t0, mid);
        const PanelResult right = panel(f, p, d, mid, worst.t1);
        total_error += left.error + right.error - worst.error;
        queue.push({worst.t0, mid, left.kronrod, left.error});
        queue.push({mid, worst.t1, right.kronrod, right.error});
        ++panels;
    }
    if (total_error > tol) {
        throw QuadratureError("adaptive quadrature: tolerance unreachable");
    }
    // Sum in parameter order for reproducible rounding.
    std::vector<Panel> ordered;
    ordered.reserve(static_cast<std::size_t>(panels) + 1);
    while (!queue.empty()) {
        ordered.push_back(queue.top());
        queue.pop();
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const Panel& a, const Panel& b) { return a.t0 < b.t0; });
    Complex sum{0.0, 0.0};
    for (const Panel& pn : ordered) sum += pn.value;
    return sum;
}

} // namespace

Complex integrate_segment(const std::function<Complex(Complex)>& f, Complex p,
                          Complex q, double tol) {
    const Complex d = q - p;
    if (d == Complex{0.0, 0.0}) return {0.0, 0.0};
    return adapt(f, p, d, tol);
}

Complex integrate_polyline(const std::function<Complex(Complex)>& f,
                           std::span<const Complex> points, double tol) {
    if (points.size() < 2) {
        throw DomainError("integrate_polyline: need at least two points");
    }
    Complex sum{0.0, 0.0};
    const double seg_tol = tol / static_cast<double>(points.size() - 1);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        sum += integrate_segment(f, points[i], points[i + 1], seg_tol);
    }
    return sum;
}

double integrate_real(const std::function<double(double)>& f, double a,
                      double b, double tol) {
    const Complex v = integrate_segment(
        [&f](Complex z) { return Complex(f(z.real())); }, Complex(a),
        Complex(b), tol);
    return v.real();
}

double segment_distance(Complex w, Complex p, Complex q) {
    const Complex d = q - p;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(w - p);
    double t = ((w.real() - p.real()) * d.real() +
                (w.imag() - p.imag()) * d.imag()) /
               len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(w - (p + t * d));
}

} // namespace bjorling
