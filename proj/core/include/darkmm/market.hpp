#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace darkmm {

enum class Side { Ask, Bid };
enum class Pool { Lit, Dark };
enum class Latency { Lat, NonLat };

/// +1 for ask fills (inventory down, price up), -1 for bid fills.
constexpr double side_sign(Side s) { return s == Side::Ask ? 1.0 : -1.0; }

/// 1 when the dark execution suffers latency (price moves half a tick in the
/// market maker's favour), 0 when executed at mid.
constexpr double latency_indicator(Latency k) { return k == Latency::Lat ? 1.0 : 0.0; }

constexpr Side opposite(Side s) { return s == Side::Ask ? Side::Bid : Side::Ask; }

/// Venue and dynamics constants. Field names match the config keys.
struct MarketParams {
    double sigma = 0.1;        // mid-price volatility
    double tick = 0.1;         // full tick; quotes sit at mid +- tick/2
    double a_lit = 5e3;        // base order-flow intensity, lit pool
    double a_dark = 3e3;       // base order-flow intensity, dark pool
    double theta_lit = 0.15;   // imbalance sensitivity, lit pool
    double theta_dark = 0.15;  // imbalance sensitivity, dark pool
    double gamma_lit = 1e-4;   // market impact per unit volume, lit
    double gamma_dark = 5e-5;  // market impact per unit volume, dark
    double eps = 1e-6;         // floor intensity when the lit book is empty
    int q_bar = 300;           // inventory risk limit
    double s0 = 100.0;         // initial efficient price

    double half_tick() const { return 0.5 * tick; }
    double base_intensity(Pool p) const { return p == Pool::Lit ? a_lit : a_dark; }
    double theta(Pool p) const { return p == Pool::Lit ? theta_lit : theta_dark; }
    double impact(Pool p) const { return p == Pool::Lit ? gamma_lit : gamma_dark; }

    void validate() const;
};

/// Posted volumes on the four (side, pool) books. Real-valued: the solvers
/// work with the continuous relaxation, integer grids live in the oracle.
struct Quotes {
    double ask_lit = 0.0;
    double bid_lit = 0.0;
    double ask_dark = 0.0;
    double bid_dark = 0.0;

    double& at(Side s, Pool p) {
        if (p == Pool::Lit) return s == Side::Ask ? ask_lit : bid_lit;
        return s == Side::Ask ? ask_dark : bid_dark;
    }
    double at(Side s, Pool p) const {
        if (p == Pool::Lit) return s == Side::Ask ? ask_lit : bid_lit;
        return s == Side::Ask ? ask_dark : bid_dark;
    }
    double side_total(Side s) const {
        return s == Side::Ask ? ask_lit + ask_dark : bid_lit + bid_dark;
    }

    /// Swap ask and bid on both pools.
    Quotes mirrored() const { return {bid_lit, ask_lit, bid_dark, ask_dark}; }

    bool operator==(const Quotes&) const = default;
};

/// Ask/bid imbalance of the lit book, (0, 0) when the lit book is empty.
std::pair<double, double> imbalance(const Quotes& q);

/// Imbalance component steering the arrival flow for (side, pool):
/// ask-lit and bid-dark read the ask imbalance, the other two the bid one.
double psi(Side side, Pool pool, const Quotes& q);

/// Market order arrival rate for (side, pool) given the posted lit volumes.
/// Falls back to the floor intensity eps when the lit book is empty.
double intensity(Side side, Pool pool, const Quotes& q, const MarketParams& p);

/// Signed permanent mid-price displacement caused by a fill.
double impact_increment(Side side, Pool pool, double filled_volume, const MarketParams& p);

/// Probability that a dark fill on `side` executes at mid (no latency).
double latency_prob(Side side, const Quotes& q);

/// Dark-pool execution weight: probability that a fill on `side` lands in
/// latency class `k`, as a function of the lit imbalance.
double dark_weight(Side side, Latency k, const Quotes& q);

/// True when fills on `side` are still allowed at inventory `q` (the risk
/// limit blocks ask fills at -q_bar and bid fills at +q_bar).
inline bool side_open(Side side, double q, int q_bar) {
    return side_sign(side) * q > -static_cast<double>(q_bar);
}

/// Largest per-side total volume the market maker may post at inventory `q`
/// without a single fill being able to push |Q| past the risk limit.
inline double side_headroom(Side side, double q, int q_bar) {
    const double qb = static_cast<double>(q_bar);
    const double room = side == Side::Ask ? qb + q : qb - q;
    return std::max(0.0, std::min(2.0 * qb, room));
}

/// Admissibility of posted volumes at inventory `q`: nonnegative components
/// and per-side totals within the inventory headroom.
bool admissible(const Quotes& quotes, double q, int q_bar);

}  // namespace darkmm
