#pragma once

#include <array>
#include <span>

#include "darkmm/market.hpp"

namespace darkmm {

struct AgentParams {
    double gamma = 0.01;  // market maker risk aversion

    void validate() const;
};

struct ExchangeParams {
    double eta = 0.02;          // exchange risk aversion
    double c_lit = 0.05;        // per-unit fee, lit pool
    double c_dark = 0.01;       // per-unit fee, dark pool
    double reservation = -1.0;  // reservation utility of the market maker (< 0)
    double z_bar = 1.0;         // bound on the per-trade incentives

    double fee(Pool p) const { return p == Pool::Lit ? c_lit : c_dark; }

    /// Smallest initial contract level honouring the reservation utility.
    double y0(const AgentParams& ap) const { return -std::log(-reservation) / ap.gamma; }

    void validate() const;
};

/// Per-trade transfers for the four (side, pool) books plus the diffusion
/// loading z_s. Trade incentives live in [-z_bar, z_bar].
struct Incentives {
    double z_al = 0.0;
    double z_bl = 0.0;
    double z_ad = 0.0;
    double z_bd = 0.0;
    double z_s = 0.0;

    double at(Side s, Pool p) const {
        if (p == Pool::Lit) return s == Side::Ask ? z_al : z_bl;
        return s == Side::Ask ? z_ad : z_bd;
    }
    double& at(Side s, Pool p) {
        if (p == Pool::Lit) return s == Side::Ask ? z_al : z_bl;
        return s == Side::Ask ? z_ad : z_bd;
    }

    Incentives mirrored() const { return {z_bl, z_al, z_bd, z_ad, -z_s}; }

    bool operator==(const Incentives&) const = default;
};

/// Certainty-equivalent gain of one fill: spread capture plus the inventory
/// cross term minus the impact give-up. Lit fills always earn the half tick;
/// dark fills earn it only in the latency class.
double fill_gain(Side side, Pool pool, Latency k, double volume, double q,
                 const MarketParams& mp);

/// Expected utility increment of one fill given transfer z, marginalised over
/// the latency draw for dark fills. The degenerate empty-lit-book convention
/// makes the dark value vanish.
double e_term(Side side, Pool pool, double z, const Quotes& quotes, double q,
              const AgentParams& ap, const MarketParams& mp);

/// Precomputed pieces of the agent Hamiltonian at fixed (quotes, q):
/// h(z) = (weight_sum - sum_s exp(-gamma z_s) * fill_factor[s]) / gamma.
/// Component order is (ask_lit, bid_lit, ask_dark, bid_dark) throughout.
struct HamiltonianTerms {
    double weight_sum = 0.0;
    std::array<double, 4> fill_factor{};
};

HamiltonianTerms hamiltonian_terms(const Quotes& quotes, double q, const AgentParams& ap,
                                   const MarketParams& mp);

/// Combine precomputed terms with u[s] = exp(-gamma * z_s).
double combine_hamiltonian(const HamiltonianTerms& t, const std::array<double, 4>& u,
                           const AgentParams& ap);

/// Utility flow rate of the market maker quoting `quotes` under transfers
/// `inc` at inventory q. Sides blocked by the risk limit contribute nothing.
double agent_hamiltonian(const Quotes& quotes, const Incentives& inc, double q,
                         const AgentParams& ap, const MarketParams& mp);

/// Analytic gradient of agent_hamiltonian in the posted volumes,
/// order (ask_lit, bid_lit, ask_dark, bid_dark). At an empty lit book the
/// imbalance is not differentiable; the floor-intensity branch is returned.
std::array<double, 4> agent_hamiltonian_grad(const Quotes& quotes, const Incentives& inc,
                                             double q, const AgentParams& ap,
                                             const MarketParams& mp);

/// Optimal diffusion loading of the contract, -gamma/(gamma+eta) * q.
double zs_star(double q, const AgentParams& ap, const ExchangeParams& ep);

/// One time slice of the reduced exchange value function on the integer
/// inventory grid {-q_bar, ..., q_bar}. Off-grid queries are linearly
/// interpolated and clamped to the grid ends.
class ValueSliceView {
  public:
    ValueSliceView(std::span<const double> values, int q_bar);

    double at(double q) const;
    double at_grid(int q) const { return values_[static_cast<std::size_t>(q + q_bar_)]; }
    int q_bar() const { return q_bar_; }

    bool all_negative() const;

  private:
    std::span<const double> values_;
    int q_bar_;
};

/// Flow term of the reduced exchange HJB: diffusion risk penalty plus the
/// fee/transfer-adjusted jump terms under the agent's best response.
/// Requires a strictly negative value slice.
double exchange_integrand(const Incentives& inc, double q, const Quotes& best_quotes,
                          const ValueSliceView& v_slice, const AgentParams& ap,
                          const ExchangeParams& ep, const MarketParams& mp);

}  // namespace darkmm
