#include "rsjd/chain.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "rsjd/errors.hpp"

namespace rsjd {

namespace {

std::vector<double> one_hot(int n, int state) {
    if (state < 0 || state >= n) throw SpecError("chain.initial_state: out of range");
    std::vector<double> d(n, 0.0);
    d[state] = 1.0;
    return d;
}

}  // namespace

RegimeChain::RegimeChain(std::vector<std::vector<double>> intensity, int initial_state)
    : n_(static_cast<int>(intensity.size())),
      intensity_(std::move(intensity)),
      initial_(one_hot(n_, initial_state)) {
    validate();
}

RegimeChain::RegimeChain(std::vector<std::vector<double>> intensity,
                         std::vector<double> initial_distribution)
    : n_(static_cast<int>(intensity.size())),
      intensity_(std::move(intensity)),
      initial_(std::move(initial_distribution)) {
    validate();
}

void RegimeChain::validate() const {
    if (n_ < 1) throw SpecError("chain.intensity: empty matrix");
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(intensity_[i].size()) != n_)
            throw SpecError("chain.intensity: matrix must be square");
        double row_sum = 0.0;
        for (int j = 0; j < n_; ++j) {
            const double v = intensity_[i][j];
            if (!std::isfinite(v)) throw SpecError("chain.intensity: nonfinite entry");
            row_sum += v;
            if (i == j) {
                if (n_ > 1 && v >= 0.0)
                    throw SpecError("chain.intensity: diagonal entries must be negative");
                if (n_ == 1 && std::abs(v) > 1e-12)
                    throw SpecError("chain.intensity: single-state chain requires zero rate");
            } else if (v <= 0.0) {
                throw SpecError("chain.intensity: off-diagonal entries must be positive");
            }
        }
        if (std::abs(row_sum) > 1e-12)
            throw SpecError("chain.intensity: row sums must vanish");
    }
    if (static_cast<int>(initial_.size()) != n_)
        throw SpecError("chain.initial_distribution: wrong length");
    double total = 0.0;
    for (double p : initial_) {
        if (p < 0.0) throw SpecError("chain.initial_distribution: negative entry");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw SpecError("chain.initial_distribution: entries must sum to 1");
}

int RegimeChain::sample_initial(RngEngine& rng) const {
    return static_cast<int>(categorical_draw(rng, initial_));
}

int ChainPath::state_at(double t) const {
    // Post-jump convention: an epoch at exactly t counts.
    int s = initial_state;
    for (std::size_t n = 0; n < epochs.size() && epochs[n] <= t; ++n) s = states[n];
    return s;
}

int ChainPath::state_before(double t) const {
    int s = initial_state;
    for (std::size_t n = 0; n < epochs.size() && epochs[n] < t; ++n) s = states[n];
    return s;
}

std::vector<double> ChainPath::occupation(double t) const {
    std::vector<double> occ(chain.n_regimes(), 0.0);
    const double end = std::min(t, horizon);
    double seg_start = 0.0;
    int s = initial_state;
    for (std::size_t n = 0; n < epochs.size() && epochs[n] <= end; ++n) {
        occ[s] += epochs[n] - seg_start;
        seg_start = epochs[n];
        s = states[n];
    }
    if (end > seg_start) occ[s] += end - seg_start;
    return occ;
}

ChainPath simulate_chain(const RegimeChain& chain, double horizon, RngEngine& rng) {
    if (!(horizon > 0.0)) throw std::invalid_argument("simulate_chain: horizon must be positive");
    ChainPath path{chain, horizon, chain.sample_initial(rng), {}, {}};
    int state = path.initial_state;
    double t = 0.0;
    const int n = chain.n_regimes();
    std::vector<double> next_probs(n);
    while (true) {
        const double rate = chain.exit_rate(state);
        if (rate <= 0.0) break;  // single-state chain
        t += exponential_draw(rng, rate);
        if (t > horizon) break;
        for (int j = 0; j < n; ++j)
            next_probs[j] = j == state ? 0.0 : chain.rate(state, j) / rate;
        state = static_cast<int>(categorical_draw(rng, next_probs));
        path.epochs.push_back(t);
        path.states.push_back(state);
    }
    return path;
}

ChainPath simulate_chain(const RegimeChain& chain, double horizon, std::uint64_t seed) {
    RngEngine rng = path_rng(seed);
    return simulate_chain(chain, horizon, rng);
}

double transition_rate_into(const ChainPath& path, int j, double t) {
    if (j < 0 || j >= path.chain.n_regimes())
        throw std::invalid_argument("transition_rate_into: state out of range");
    if (t < 0.0 || t > path.horizon)
        throw std::invalid_argument("transition_rate_into: time outside [0, horizon]");
    const int i = path.state_before(t);
    return i == j ? 0.0 : path.chain.rate(i, j);
}

CountingValue counting_and_compensator(const ChainPath& path, int j, double t) {
    if (j < 0 || j >= path.chain.n_regimes())
        throw std::invalid_argument("counting_and_compensator: state out of range");
    if (t < 0.0 || t > path.horizon)
        throw std::invalid_argument("counting_and_compensator: time outside [0, horizon]");
    CountingValue out;
    for (std::size_t n = 0; n < path.epochs.size() && path.epochs[n] <= t; ++n)
        if (path.states[n] == j) out.count += 1.0;
    const std::vector<double> occ = path.occupation(t);
    for (int i = 0; i < path.chain.n_regimes(); ++i)
        if (i != j) out.compensator += occ[i] * path.chain.rate(i, j);
    return out;
}

std::vector<double> occupation_expectation(const RegimeChain& chain,
                                           const std::vector<double>& initial_distribution,
                                           double horizon) {
    if (!(horizon > 0.0))
        throw std::invalid_argument("occupation_expectation: horizon must be positive");
    const int n = chain.n_regimes();
    if (static_cast<int>(initial_distribution.size()) != n)
        throw std::invalid_argument("occupation_expectation: distribution length mismatch");

    double q = 0.0;
    for (int i = 0; i < n; ++i) q = std::max(q, chain.exit_rate(i));
    if (q <= 0.0) {
        std::vector<double> occ(n);
        for (int i = 0; i < n; ++i) occ[i] = initial_distribution[i] * horizon;
        return occ;
    }

    // P_hat = I + Lambda/q is a stochastic matrix. Expected occupation equals
    // sum_m w_m * p0^T P_hat^m with w_m = P(Poisson(qT) > m) / q; the weights
    // telescope so the entries sum to the horizon up to the truncated tail.
    std::vector<std::vector<double>> p_hat(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            p_hat[i][j] = (i == j ? 1.0 : 0.0) + chain.rate(i, j) / q;

    std::vector<double> v = initial_distribution;  // p0^T P_hat^m
    std::vector<double> next(n);
    std::vector<double> occ(n, 0.0);
    const double qt = q * horizon;
    double log_pmf = -qt;  // log Poisson(qT) pmf at m
    double cdf = std::exp(log_pmf);
    for (int m = 0;; ++m) {
        const double tail = 1.0 - cdf;
        if (tail < 1e-14 && m > qt) break;
        const double w = tail / q;
        for (int i = 0; i < n; ++i) occ[i] += w * v[i];
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int i = 0; i < n; ++i) acc += v[i] * p_hat[i][j];
            next[j] = acc;
        }
        v.swap(next);
        log_pmf += std::log(qt) - std::log1p(static_cast<double>(m));
        cdf += std::exp(log_pmf);
        if (m > 100000) throw std::runtime_error("occupation_expectation: series did not converge");
    }
    return occ;
}

std::vector<double> occupation_expectation(const RegimeChain& chain, double horizon) {
    return occupation_expectation(chain, chain.initial_distribution(), horizon);
}

}  // namespace rsjd
