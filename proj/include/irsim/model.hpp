#pragma once

#include <cstdint>
#include <vector>

namespace irsim {

/// Converts a power level in dBm to linear watts.
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Power-law pathloss d^(-beta). Throws std::domain_error for d <= 0 or beta <= 0.
double pathloss(double distance_m, double beta);

/// Uniform power allocation: every entry 1/sqrt(K), squared entries summing to one.
std::vector<double> uniform_power_allocation(int num_users);

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

double distance(const Vec2& a, const Vec2& b);

/// Static description of the downlink: an M-antenna source serving K
/// single-antenna users through an N-element reflecting surface.
/// All powers are linear watts; construction-time conversion from dBm is the
/// caller's job (see dbm_to_watts / config loading).
struct SystemConfig {
    int num_antennas = 1;        // M
    int num_elements = 1;        // N
    int num_users = 1;           // K
    double pathloss_exponent = 2.0;
    double tx_power_w = 1.0;     // P
    std::vector<double> noise_power_w;   // per-user sigma_k^2, size K
    std::vector<double> power_alloc;     // lambda_k, size K, sum of squares == 1
    double reflect_coeff = 1.0;  // surface amplitude response

    /// Per-symbol power factor applied to signal and interference terms.
    double power_scale() const { return tx_power_w / static_cast<double>(num_users); }

    /// Throws std::domain_error when any invariant is violated.
    void validate() const;

    static SystemConfig make(int m, int n, int k, double beta, double tx_power_w,
                             double noise_power_w);
};

struct Geometry {
    Vec2 source;
    Vec2 irs;
    std::vector<Vec2> users;
};

/// Large-scale gains for one surface position: the common source->surface
/// gain and the per-user surface->user gains.
struct LinkGains {
    double alpha_sr = 1.0;
    std::vector<double> alpha_ru;   // size K
};

/// Derives d^(-beta) link gains from coordinates. Throws std::domain_error on
/// coincident points (zero-length links).
LinkGains link_gains(const Geometry& geometry, const SystemConfig& config);

/// Draws user positions uniformly over an axis-aligned square (side `side`,
/// centered at `center`). The draw depends only on (seed, num_users).
std::vector<Vec2> draw_users_square(int num_users, double side, Vec2 center,
                                    std::uint64_t seed);

}  // namespace irsim
