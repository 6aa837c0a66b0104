#pragma once

#include <complex>
#include <vector>

#include "irsim/model.hpp"
#include "irsim/rng.hpp"

namespace irsim {

enum class PhasePolicy {
    kUniformRandom,  // theta_n ~ U[-pi, pi] per realization (default)
    kAllZero,        // identity phase matrix; useful for tests
};

/// One fading draw. g_sr is N x M row-major (row n = the n-th element's view
/// of the M source antennas); h_ru holds K surface->user vectors of length N;
/// g_eff holds the K effective 1 x M channels.
struct ChannelRealization {
    int num_antennas = 0;
    int num_elements = 0;
    int num_users = 0;
    std::vector<std::complex<double>> g_sr;    // N*M
    std::vector<std::vector<std::complex<double>>> h_ru;  // K x N
    std::vector<double> theta;                 // N
    std::vector<std::vector<std::complex<double>>> g_eff; // K x M
};

/// Draws a realization: g_sr entries CN(0, alpha_sr), h_ru[k] entries
/// CN(0, alpha_ru[k]), phases per policy, and the effective channels
/// g_k = sum_n conj(h_k[n]) * reflect * e^{j theta_n} * g_sr[n,:].
ChannelRealization sample_channel(const SystemConfig& config, const LinkGains& gains,
                                  Rng& rng, PhasePolicy policy);

/// Recomputes the effective channels from the stored draws (independent
/// summation order from the sampling path; used to cross-check realizations).
std::vector<std::vector<std::complex<double>>> effective_channels(
    const ChannelRealization& realization, double reflect_coeff);

struct SinrSample {
    double x = 0.0;      // desired-signal power, (P/K)-scaled
    double y = 0.0;      // interference + noise
    double gamma = 0.0;  // x / y
};

/// Exact per-user SINR for one realization under conjugate (match-to-channel)
/// precoding: x = (P/K) lambda_k^2 ||g_k||^4,
/// y = (P/K) sum_{j != k} lambda_j^2 |g_k g_j^H|^2 + sigma_k^2.
SinrSample sinr_sample(const ChannelRealization& realization, const SystemConfig& config,
                       int user);

/// Reusable buffers for the hot sampling loop. sample_into() performs the same
/// draws as sample_channel without allocation.
class ChannelWorkspace {
  public:
    void resize(const SystemConfig& config);
    void sample_into(const SystemConfig& config, const LinkGains& gains, Rng& rng,
                     PhasePolicy policy);

    /// ||g_k||^2 for one user.
    double norm_sq(int user) const;
    /// g_k g_j^H inner product.
    std::complex<double> cross(int user_k, int user_j) const;
    /// gamma for every user in one pass; gamma_out must hold K entries.
    void sinr_all_users(const SystemConfig& config, double* gamma_out) const;

    const std::vector<std::complex<double>>& effective(int user) const {
        return g_eff_[user];
    }

  private:
    int m_ = 0, n_ = 0, k_ = 0;
    std::vector<std::complex<double>> g_sr_;
    std::vector<std::complex<double>> h_;      // K*N packed
    std::vector<double> theta_;
    std::vector<std::vector<std::complex<double>>> g_eff_;

    friend ChannelRealization sample_channel(const SystemConfig&, const LinkGains&,
                                             Rng&, PhasePolicy);
};

}  // namespace irsim
