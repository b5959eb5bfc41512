#include "uamsim/kinematics.hpp"

#include "uamsim/separation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uam
{

namespace
{
constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kCoincidentNm = 1e-12;
constexpr double kAltitudeSnapFt = 1e-9;
// Vertical arrival tolerance slack over one tick of 500 ft/min (8.3333 ft).
constexpr double kVerticalArrivalSlackFt = 1e-4;

KinematicLimits limits_for(const Vehicle &v, const KinematicLimits &limits)
{
    KinematicLimits out = limits;
    out.max_climb = std::min(limits.max_climb, v.rate_of_climb);
    out.max_descent = std::min(limits.max_descent, v.rate_of_descent);
    return out;
}
} // namespace

void KinematicLimits::validate() const
{
    if (!(max_turn_rate > 0.0 && max_climb > 0.0 && max_descent > 0.0 && accel > 0.0 &&
          decel > 0.0 && kt_to_nm_per_s > 0.0))
    {
        throw std::invalid_argument("kinematic limits must be strictly positive");
    }
    if (spiral_radius_nm && !(*spiral_radius_nm > 0.0))
    {
        throw std::invalid_argument("spiral radius must be strictly positive");
    }
}

double distance_per_tick(double speed_kts, const KinematicLimits &limits)
{
    if (!(speed_kts >= kMinSpeedKts && speed_kts <= kMaxSpeedKts))
    {
        throw std::invalid_argument("speed " + std::to_string(speed_kts) +
                                    " kts outside the 130-170 kts envelope");
    }
    return speed_kts * limits.kt_to_nm_per_s;
}

void apply_movement_based_on_heading(Vehicle &v, double distance_nm)
{
    const double factor_x = std::cos(v.hdg * kDegToRad);
    const double factor_y = std::sin(v.hdg * kDegToRad);
    v.x += factor_x * distance_nm;
    v.y += factor_y * distance_nm;
}

double normalize_heading(double deg) noexcept
{
    double h = std::fmod(deg, 360.0);
    if (h < 0.0)
    {
        h += 360.0;
    }
    // fmod of a tiny negative value can round up to exactly 360.
    return h >= 360.0 ? 0.0 : h;
}

double heading_difference(double from, double to) noexcept
{
    return normalize_heading(to - from + 180.0) - 180.0;
}

double calc_angle_to_position(Point from, Point to)
{
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    if (std::abs(dx) <= kCoincidentNm && std::abs(dy) <= kCoincidentNm)
    {
        throw std::invalid_argument("heading undefined between coincident points");
    }
    return normalize_heading(std::atan2(dy, dx) / kDegToRad);
}

double adjust_heading(double current, double desired, double max_turn)
{
    const double diff = heading_difference(current, desired);
    if (std::abs(diff) <= max_turn)
    {
        return normalize_heading(desired);
    }
    return normalize_heading(current + std::copysign(max_turn, diff));
}

double adjust_speed(double current, double commanded, const KinematicLimits &limits)
{
    const double diff = commanded - current;
    if (diff > 0.0)
    {
        return diff <= limits.accel ? commanded : current + limits.accel;
    }
    if (diff < 0.0)
    {
        return -diff <= limits.decel ? commanded : current - limits.decel;
    }
    return current;
}

double adjust_altitude(double current, double target, const KinematicLimits &limits)
{
    const double diff = target - current;
    if (diff > 0.0)
    {
        const double step = limits.climb_per_tick();
        return diff <= step + kAltitudeSnapFt ? target : current + step;
    }
    if (diff < 0.0)
    {
        const double step = limits.descent_per_tick();
        return -diff <= step + kAltitudeSnapFt ? target : current - step;
    }
    return current;
}

bool waypoint_reached(Vehicle &v, const Waypoint &wp, const KinematicLimits &limits)
{
    const double horizontal_tol = distance_per_tick(v.speed, limits) + kCoincidentNm;
    const double vertical_tol =
        std::max(limits.climb_per_tick(), limits.descent_per_tick()) + kVerticalArrivalSlackFt;
    if (euclidean_distance(v.position(), wp.position()) > horizontal_tol ||
        std::abs(v.z - wp.z) > vertical_tol)
    {
        return false;
    }
    v.x = wp.x;
    v.y = wp.y;
    v.z = wp.z;
    return true;
}

void follow(Vehicle &v, const KinematicLimits &limits)
{
    if (v.objective_list.empty())
    {
        throw std::logic_error("vehicle " + std::to_string(v.id) + " has no objective to follow");
    }
    const KinematicLimits lim = limits_for(v, limits);
    const Waypoint wp = v.objective_list.front();

    if (euclidean_distance(v.position(), wp.position()) <= kCoincidentNm)
    {
        // Directly above/below the waypoint: only the vertical axis moves.
        v.z = adjust_altitude(v.z, wp.z, lim);
    }
    else
    {
        const double desired = calc_angle_to_position(v.position(), wp.position());
        v.hdg = adjust_heading(v.hdg, desired, lim.max_turn_rate);
        v.speed = adjust_speed(v.speed, wp.s, lim);
        v.z = adjust_altitude(v.z, wp.z, lim);
        apply_movement_based_on_heading(v, distance_per_tick(v.speed, lim));
    }

    if (waypoint_reached(v, wp, lim))
    {
        v.objective_list.pop_front();
    }
}

double takeoff_fix_altitude(const Vehicle &v, const WorldBounds &world)
{
    const Point origin = v.origin();
    Point next = v.destination();
    if (!v.objective_list.empty())
    {
        next = v.objective_list.front().position();
    }
    double first_leg_hdg = v.hdg;
    if (euclidean_distance(origin, next) > kCoincidentNm)
    {
        first_leg_hdg = calc_angle_to_position(origin, next);
    }
    else if (euclidean_distance(origin, v.destination()) > kCoincidentNm)
    {
        first_leg_hdg = calc_angle_to_position(origin, v.destination());
    }
    return lowest_flight_level_for_heading(normalize_heading(first_leg_hdg), world);
}

void begin_takeoff(Vehicle &v, const WorldBounds &world, std::optional<double> forced_level)
{
    if (v.phase != FlightPhase::Scheduled)
    {
        throw std::logic_error("vehicle " + std::to_string(v.id) + " already entered");
    }
    v.takeoff_fix_z = forced_level.value_or(takeoff_fix_altitude(v, world));
    v.x = v.origin_x;
    v.y = v.origin_y;
    v.z = world.skyport_altitude;
    v.phase = FlightPhase::TakeoffClimb;
}

double spiral_radius(const Vehicle &v, const KinematicLimits &limits)
{
    if (limits.spiral_radius_nm)
    {
        return *limits.spiral_radius_nm;
    }
    return distance_per_tick(v.speed, limits) / (limits.max_turn_rate * kDegToRad);
}

namespace
{
void enter_spiral(Vehicle &v)
{
    v.phase = FlightPhase::LandingSpiral;
    // Counter-clockwise circle: the current heading is the tangent at the
    // entry angle.
    v.spiral_angle = normalize_heading(v.hdg - 90.0);
}

void spiral_tick(Vehicle &v, const KinematicLimits &lim)
{
    const double radius = spiral_radius(v, lim);
    v.spiral_angle = normalize_heading(v.spiral_angle + lim.max_turn_rate);
    v.hdg = normalize_heading(v.spiral_angle + 90.0);
    v.x = v.target_x + radius * std::cos(v.spiral_angle * kDegToRad);
    v.y = v.target_y + radius * std::sin(v.spiral_angle * kDegToRad);
    v.z = adjust_altitude(v.z, v.target_z, lim);
    if (v.z <= v.target_z + kAltitudeSnapFt)
    {
        v.x = v.target_x;
        v.y = v.target_y;
        v.z = v.target_z;
        v.delivered = true;
        v.phase = FlightPhase::Delivered;
    }
}
} // namespace

void step_phase(Vehicle &v, [[maybe_unused]] const WorldBounds &world,
                const KinematicLimits &limits)
{
    const KinematicLimits lim = limits_for(v, limits);
    switch (v.phase)
    {
    case FlightPhase::Scheduled:
    case FlightPhase::External:
        throw std::logic_error("vehicle " + std::to_string(v.id) + " has not entered the airspace");
    case FlightPhase::Delivered:
        return;
    case FlightPhase::TakeoffClimb:
        v.x = v.origin_x;
        v.y = v.origin_y;
        v.z = adjust_altitude(v.z, v.takeoff_fix_z, lim);
        if (v.z == v.takeoff_fix_z)
        {
            v.phase = FlightPhase::Cruise;
        }
        return;
    case FlightPhase::Cruise:
        follow(v, lim);
        if (v.objective_list.empty())
        {
            enter_spiral(v);
        }
        return;
    case FlightPhase::LandingSpiral:
        spiral_tick(v, lim);
        return;
    }
}

} // namespace uam
