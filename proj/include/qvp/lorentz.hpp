#pragma once

namespace qvp {

/// Spatial and temporal separation of two events along one axis.
struct Interval {
    double dx;
    double dt;
};

/// Frame moving at constant velocity along the axis; |velocity| must
/// stay below light_speed.
struct Boost {
    double velocity;
    double light_speed = 1.0;
};

/// Interval as seen from the boosted frame:
///   dx' = gamma (dx - v dt),  dt' = gamma (dt - v dx / c^2),
/// gamma = (1 - v^2/c^2)^{-1/2}. Preserves c^2 dt^2 - dx^2.
Interval boost_interval(const Interval& interval, const Boost& boost);

/// Relativistic velocity addition: v = (v1 + v2) / (1 + v1 v2 / c^2).
/// Applying the composed boost equals applying b1 then b2.
Boost compose_boosts(const Boost& b1, const Boost& b2);

/// c^2 dt^2 - dx^2, the boost invariant.
double interval_invariant(const Interval& interval, double light_speed);

}  // namespace qvp
