#pragma once

#include <string>

namespace pedflow {

// Scalar model constants. The defaults form a complete runnable set; scenario
// files and CLI flags override selectively.
struct ModelParams {
    double v_max = 2.0;       // free walking speed, m/s
    double rho_max = 10.0;    // jam density, ped/m^2
    double relax_time = 1e-3; // velocity relaxation time T, s
    double c_r = 50.0;        // pedestrian repulsion strength
    double l_r = 2.0;         // pedestrian repulsion length scale, m
    double c_r_obs = 50.0;    // crowd-on-obstacle repulsion strength
    double l_r_obs = 1.0;     // crowd-on-obstacle length scale, m
    double infectivity = 0.04;    // peak pairwise transmission coefficient i_o
    double nu = 0.0;              // recovery rate, 1/s
    double theta = 0.0;           // incubation rate, 1/s
    double v_max_obs = 3.0;       // obstacle speed limit, m/s
    double relax_time_obs = 1e-3; // obstacle relaxation time, s
    double dt = 1e-3;             // time step, s
    double t_end = 40.0;          // simulated duration, s
    bool contact_time = true;     // relative-velocity kernel active
    double wall_cost = 1e5;       // travel-cost value pinned on wall/obstacle boundary points
    double v_min = 0.05;          // speed floor keeping travel costs finite, m/s
    int eikonal_every = 10;       // re-solve cadence, steps
    double exposure_threshold = 0.05; // alpha_E level at which a pedestrian counts as exposed
    bool obstacle_penalty = true;     // short-range push-back from obstacle faces
    double penalty_strength = -1.0;   // < 0: use c_r
    double penalty_range = 0.5;       // m

    double resolved_penalty_strength() const {
        return penalty_strength < 0.0 ? c_r : penalty_strength;
    }

    // Upper range of the pedestrian repulsion sum; tail beyond is negligible.
    double repulsion_cutoff() const { return 5.0 * l_r; }
    double obstacle_repulsion_cutoff(double max_half_extent) const {
        return 5.0 * l_r_obs + max_half_extent;
    }

    // Throws ValidationError naming the offending field.
    void validate() const;
};

// Fixed range of the transmission kernel; the spatial factor at this distance
// is exp(-2.5^4) ~ 1e-17, far below accumulation tolerances.
inline constexpr double kContagionRange = 2.5;

// Speed law shared by pedestrians and obstacles, clamped away from zero so
// travel costs stay finite at jam density.
inline double density_speed(double rho, double v_free, double rho_max, double v_min) {
    double v = v_free * (1.0 - rho / rho_max);
    return v > v_min ? v : v_min;
}

}  // namespace pedflow
