#include "darkmm/market.hpp"

namespace darkmm {

void MarketParams::validate() const {
    auto positive = [](double x, const char* name) {
        if (!(x > 0.0)) throw std::invalid_argument(std::string(name) + " must be > 0");
    };
    positive(sigma, "market.sigma");
    positive(tick, "market.tick");
    positive(a_lit, "market.a_lit");
    positive(a_dark, "market.a_dark");
    positive(theta_lit, "market.theta_lit");
    positive(theta_dark, "market.theta_dark");
    positive(eps, "market.eps");
    positive(s0, "market.s0");
    if (gamma_lit < 0.0 || gamma_dark < 0.0)
        throw std::invalid_argument("market impact coefficients must be >= 0");
    if (gamma_lit < gamma_dark)
        throw std::invalid_argument("market.gamma_lit must be >= market.gamma_dark");
    if (q_bar < 1) throw std::invalid_argument("market.q_bar must be >= 1");
    if (eps >= std::min(a_lit, a_dark))
        throw std::invalid_argument("market.eps must be below the base intensities");
}

std::pair<double, double> imbalance(const Quotes& q) {
    const double total = q.ask_lit + q.bid_lit;
    if (total <= 0.0) return {0.0, 0.0};
    return {q.ask_lit / total, q.bid_lit / total};
}

double psi(Side side, Pool pool, const Quotes& q) {
    const auto [ia, ib] = imbalance(q);
    const bool ask_component =
        (side == Side::Ask && pool == Pool::Lit) || (side == Side::Bid && pool == Pool::Dark);
    return ask_component ? ia : ib;
}

double intensity(Side side, Pool pool, const Quotes& q, const MarketParams& p) {
    if (q.ask_lit <= 0.0 && q.bid_lit <= 0.0) return p.eps;
    return p.base_intensity(pool) * std::exp(-p.theta(pool) / p.sigma * psi(side, pool, q));
}

double impact_increment(Side side, Pool pool, double filled_volume, const MarketParams& p) {
    return side_sign(side) * p.impact(pool) * filled_volume;
}

double latency_prob(Side side, const Quotes& q) {
    const auto [ia, ib] = imbalance(q);
    return side == Side::Ask ? ia : ib;
}

double dark_weight(Side side, Latency k, const Quotes& q) {
    const auto [ia, ib] = imbalance(q);
    const bool bid_component =
        (side == Side::Ask && k == Latency::Lat) || (side == Side::Bid && k == Latency::NonLat);
    return bid_component ? ib : ia;
}

bool admissible(const Quotes& quotes, double q, int q_bar) {
    if (quotes.ask_lit < 0.0 || quotes.bid_lit < 0.0 || quotes.ask_dark < 0.0 ||
        quotes.bid_dark < 0.0)
        return false;
    return quotes.side_total(Side::Ask) <= side_headroom(Side::Ask, q, q_bar) &&
           quotes.side_total(Side::Bid) <= side_headroom(Side::Bid, q, q_bar);
}

}  // namespace darkmm
