#include "efd/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

namespace efd {

bool MeanFieldState::monotone() const {
    double prev = 1.0;
    for (double t : tails) {
        if (t > prev || t < 0.0) return false;
        prev = t;
    }
    return true;
}

double MeanFieldState::sup_distance(const MeanFieldState& other) const {
    size_t n = std::max(tails.size(), other.tails.size());
    double dist = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double a = i < tails.size() ? tails[i] : 0.0;
        double b = i < other.tails.size() ? other.tails[i] : 0.0;
        dist = std::max(dist, std::abs(a - b));
    }
    return dist;
}

double supermarket_tail(double rho, uint32_t d, uint32_t k) {
    if (!(rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("supermarket_tail: rho must lie in (0,1)");
    if (d == 0) throw std::invalid_argument("supermarket_tail: d must be >= 1");
    double exponent = d == 1 ? static_cast<double>(k)
                             : (std::pow(static_cast<double>(d), static_cast<double>(k)) - 1.0) /
                                   (static_cast<double>(d) - 1.0);
    return std::pow(rho, exponent);
}

void drift_step_inplace(MeanFieldState& state, uint32_t d, double dt) {
    // all components use the pre-step profile; prev_pow carries T_{k-1}^d
    double prev_pow = 1.0;  // T_0^d
    for (double& t : state.tails) {
        double t_pow = std::pow(t, static_cast<double>(d));
        t += dt * (prev_pow - t_pow);
        prev_pow = t_pow;
    }
}

MeanFieldState drift_step(const MeanFieldState& state, uint32_t d, double dt) {
    MeanFieldState next = state;
    drift_step_inplace(next, d, dt);
    return next;
}

void refresh_shift_inplace(MeanFieldState& state) {
    if (state.tails.empty()) return;
    std::copy(state.tails.begin() + 1, state.tails.end(), state.tails.begin());
    state.tails.back() = 0.0;
}

MeanFieldState refresh_shift(const MeanFieldState& state) {
    MeanFieldState next = state;
    refresh_shift_inplace(next);
    return next;
}

CycleResult cycle_to_fixed_point(uint32_t d, double r, uint32_t kmax, double dt, double tol,
                                 uint32_t max_cycles) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("cycle_to_fixed_point: r must lie in (0,1)");
    if (d == 0) throw std::invalid_argument("cycle_to_fixed_point: d must be >= 1");
    if (kmax == 0) throw std::invalid_argument("cycle_to_fixed_point: kmax must be >= 1");
    if (!(dt > 0.0)) throw std::invalid_argument("cycle_to_fixed_point: dt must be positive");

    MeanFieldState state = MeanFieldState::zeros(kmax);
    MeanFieldState previous_pre_refresh = MeanFieldState::zeros(kmax);
    bool have_previous = false;

    for (uint32_t cycle = 1; cycle <= max_cycles; ++cycle) {
        double elapsed = 0.0;
        while (state.tail(1) < r) {
            double rate_1 = 1.0 - std::pow(state.tail(1), static_cast<double>(d));
            double next_t1 = state.tail(1) + dt * rate_1;
            if (next_t1 >= r) {
                // the Euler substep is linear in its length: solve for the
                // length that lands T_1 exactly on r
                double partial = (r - state.tail(1)) / rate_1;
                drift_step_inplace(state, d, partial);
                state.tails[0] = r;  // clamp roundoff
                elapsed += partial;
                break;
            }
            drift_step_inplace(state, d, dt);
            elapsed += dt;
        }

        if (have_previous && state.sup_distance(previous_pre_refresh) < tol)
            return {state, elapsed, cycle};

        previous_pre_refresh = state;
        have_previous = true;
        refresh_shift_inplace(state);
    }
    throw ConvergenceError(
        "cycle_to_fixed_point: no fixed point within " + std::to_string(max_cycles) +
            " cycles (last sup distance " +
            std::to_string(state.sup_distance(previous_pre_refresh)) + ")",
        previous_pre_refresh, state);
}

double false_positive_bound(const MeanFieldState& wbar, uint32_t c) {
    if (c + 1 > wbar.kmax())
        throw std::invalid_argument("false_positive_bound: C + 1 exceeds the truncation depth");
    return wbar.tail(c + 1);
}

double detection_tail(const MeanFieldState& wbar, uint32_t c) {
    if (c > wbar.kmax())
        throw std::invalid_argument("detection_tail: C exceeds the truncation depth");
    return wbar.tail(c);
}

void write_meanfield_csv(const CycleResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "k,tail\n";
    out.precision(17);
    for (uint32_t k = 1; k <= result.wbar.kmax(); ++k)
        out << k << ',' << result.wbar.tail(k) << '\n';
    out << "period," << result.period << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace efd
