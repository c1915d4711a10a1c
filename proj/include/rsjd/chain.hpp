#pragma once

#include <cstdint>
#include <vector>

#include "rsjd/rng.hpp"

namespace rsjd {

// Continuous-time finite-state Markov chain with intensity matrix
// lambda[i][j]: rows sum to zero, off-diagonal entries strictly positive for
// N > 1. States are indexed 0..N-1.
class RegimeChain {
  public:
    RegimeChain(std::vector<std::vector<double>> intensity, int initial_state);
    RegimeChain(std::vector<std::vector<double>> intensity,
                std::vector<double> initial_distribution);

    int n_regimes() const { return n_; }
    double rate(int from, int to) const { return intensity_[from][to]; }
    double exit_rate(int state) const { return -intensity_[state][state]; }
    const std::vector<std::vector<double>>& intensity() const { return intensity_; }
    const std::vector<double>& initial_distribution() const { return initial_; }

    int sample_initial(RngEngine& rng) const;

  private:
    void validate() const;

    int n_;
    std::vector<std::vector<double>> intensity_;
    std::vector<double> initial_;
};

// One realized trajectory of the chain on [0, horizon]. Epochs are the genuine
// transition times; states[n] is the state entered at epochs[n]. A transition
// exactly at a query time t belongs to the past of t: state_at(t) is the
// post-jump state, state_before(t) the pre-jump one.
struct ChainPath {
    RegimeChain chain;
    double horizon = 0.0;
    int initial_state = 0;
    std::vector<double> epochs;
    std::vector<int> states;

    int state_at(double t) const;
    int state_before(double t) const;
    // Lebesgue time spent in each state on [0, min(t, horizon)].
    std::vector<double> occupation(double t) const;
};

ChainPath simulate_chain(const RegimeChain& chain, double horizon, RngEngine& rng);
ChainPath simulate_chain(const RegimeChain& chain, double horizon, std::uint64_t seed);

// lambda_j(t) = lambda_{ij} for i = J(t-) when i != j, 0 on the own state.
double transition_rate_into(const ChainPath& path, int j, double t);

struct CountingValue {
    double count = 0.0;        // Phi_j(t)
    double compensator = 0.0;  // phi_j(t), exact piecewise-linear integral
    double compensated() const { return count - compensator; }
};

CountingValue counting_and_compensator(const ChainPath& path, int j, double t);

// E int_0^T 1{J(s)=e_i} ds by uniformization of exp(t*Lambda); entries sum to
// the horizon. Poisson tail truncated below 1e-14.
std::vector<double> occupation_expectation(const RegimeChain& chain, double horizon);
std::vector<double> occupation_expectation(const RegimeChain& chain,
                                           const std::vector<double>& initial_distribution,
                                           double horizon);

}  // namespace rsjd
