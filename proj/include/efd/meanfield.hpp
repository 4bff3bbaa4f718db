#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace efd {

// Limiting tail profile of the counter values: tails[k-1] holds T_k, the
// fraction of counters with value >= k, for k = 1..kmax; T_0 == 1 is
// implicit. Valid states are nonincreasing and confined to [0,1].
struct MeanFieldState {
    std::vector<double> tails;

    uint32_t kmax() const { return static_cast<uint32_t>(tails.size()); }

    // T_k with the implicit boundary values: T_0 = 1, T_{k > kmax} = 0.
    double tail(uint32_t k) const {
        if (k == 0) return 1.0;
        return k <= tails.size() ? tails[k - 1] : 0.0;
    }

    static MeanFieldState zeros(uint32_t kmax) { return {std::vector<double>(kmax, 0.0)}; }

    bool monotone() const;
    double sup_distance(const MeanFieldState& other) const;
};

// Classical d-choice fixed point rho^((d^k - 1)/(d - 1)); rho^k for d = 1.
// Throws std::invalid_argument unless 0 < rho < 1.
double supermarket_tail(double rho, uint32_t d, uint32_t k);

// One forward Euler step of the d-choice increment drift
//   dT_k/dt = T_{k-1}^d - T_k^d,
// time measured in arriving size-1 mice per counter. All components advance
// simultaneously from the input state.
void drift_step_inplace(MeanFieldState& state, uint32_t d, double dt);
MeanFieldState drift_step(const MeanFieldState& state, uint32_t d, double dt);

// Effect of the refreshment decrement on the tails: T_k <- T_{k+1}.
void refresh_shift_inplace(MeanFieldState& state);
MeanFieldState refresh_shift(const MeanFieldState& state);

struct CycleResult {
    MeanFieldState wbar;  // pre-refresh fixed profile
    double period = 0.0;  // mice per counter between the last two refreshes
    uint32_t cycles = 0;
};

// Raised when consecutive pre-refresh profiles keep moving after max_cycles;
// carries both for inspection.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(std::string message, MeanFieldState previous, MeanFieldState last)
        : std::runtime_error(std::move(message)),
          previous_state(std::move(previous)),
          last_state(std::move(last)) {}
    MeanFieldState previous_state;
    MeanFieldState last_state;
};

// Integrates refresh cycles from the empty profile: drift until T_1 reaches
// r (the final partial step solves the linear Euler substep exactly, so the
// recorded profile has T_1 = r up to roundoff), record the pre-refresh
// profile, shift, repeat until consecutive pre-refresh profiles agree within
// tol in sup norm.
CycleResult cycle_to_fixed_point(uint32_t d, double r, uint32_t kmax = 30, double dt = 1e-3,
                                 double tol = 1e-8, uint32_t max_cycles = 10000);

// The mice false-positive bound: probability a counter exceeds C just
// before a refreshment, i.e. T_{C+1} of wbar.
// Throws std::invalid_argument if C + 1 > kmax.
double false_positive_bound(const MeanFieldState& wbar, uint32_t c);

// The companion >=C tail, T_C of wbar: declaration fires at "reaches C", so
// both tails are of interest.
double detection_tail(const MeanFieldState& wbar, uint32_t c);

// wbar as CSV, "k,tail" rows for k = 1..kmax plus a "period,<value>" footer.
void write_meanfield_csv(const CycleResult& result, const std::string& path);

}  // namespace efd
