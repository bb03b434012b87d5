#include "qvp/lorentz.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qvp {

namespace {

void validate_boost(const Boost& boost, const char* what) {
    if (!(boost.light_speed > 0.0) || !std::isfinite(boost.light_speed)) {
        throw std::invalid_argument(std::string(what) + ": light speed must be positive");
    }
    if (!std::isfinite(boost.velocity) ||
        std::abs(boost.velocity) >= boost.light_speed) {
        std::ostringstream msg;
        msg << what << ": |v| = " << std::abs(boost.velocity)
            << " must be below c = " << boost.light_speed;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

Interval boost_interval(const Interval& interval, const Boost& boost) {
    validate_boost(boost, "boost_interval");
    if (!std::isfinite(interval.dx) || !std::isfinite(interval.dt)) {
        throw std::invalid_argument("boost_interval: interval must be finite");
    }
    const double v = boost.velocity;
    const double c = boost.light_speed;
    const double gamma = 1.0 / std::sqrt(1.0 - (v / c) * (v / c));
    return Interval{gamma * (interval.dx - v * interval.dt),
                    gamma * (interval.dt - v * interval.dx / (c * c))};
}

Boost compose_boosts(const Boost& b1, const Boost& b2) {
    validate_boost(b1, "compose_boosts");
    validate_boost(b2, "compose_boosts");
    if (b1.light_speed != b2.light_speed) {
        throw std::invalid_argument("compose_boosts: boosts use different light speeds");
    }
    const double c2 = b1.light_speed * b1.light_speed;
    const double v = (b1.velocity + b2.velocity) / (1.0 + b1.velocity * b2.velocity / c2);
    return Boost{v, b1.light_speed};
}

double interval_invariant(const Interval& interval, double light_speed) {
    return light_speed * light_speed * interval.dt * interval.dt -
           interval.dx * interval.dx;
}

}  // namespace qvp
