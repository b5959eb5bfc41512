#pragma once

#include "uamsim/types.hpp"

#include <optional>

namespace uam
{

/// Performance envelope applied every tick (one tick is one second).
struct KinematicLimits
{
    double max_turn_rate = 7.2;   ///< deg/s
    double max_climb = 500.0;     ///< ft/min
    double max_descent = 500.0;   ///< ft/min
    double accel = 1.0;           ///< kt/s
    double decel = 2.0;           ///< kt/s
    double kt_to_nm_per_s = 0.000278;

    /// Landing circle radius. Unset means the minimum turn radius at the
    /// vehicle's current speed.
    std::optional<double> spiral_radius_nm;

    /// Throws std::invalid_argument unless every limit is strictly positive.
    void validate() const;

    double climb_per_tick() const noexcept { return max_climb / 60.0; }
    double descent_per_tick() const noexcept { return max_descent / 60.0; }
};

/// Distance flown in one tick. Throws std::invalid_argument outside 130..170 kts.
double distance_per_tick(double speed_kts, const KinematicLimits &limits = {});

/// Translates the vehicle `distance_nm` along its current heading.
void apply_movement_based_on_heading(Vehicle &v, double distance_nm);

/// Heading from `from` towards `to`, in [0, 360).
/// Throws std::invalid_argument for coincident points.
double calc_angle_to_position(Point from, Point to);

/// Wraps any angle into [0, 360).
double normalize_heading(double deg) noexcept;

/// Signed shortest-arc difference `to - from`, in [-180, 180).
double heading_difference(double from, double to) noexcept;

/// Turns `current` towards `desired` along the shorter arc by at most `max_turn`.
double adjust_heading(double current, double desired, double max_turn);

double adjust_speed(double current, double commanded, const KinematicLimits &limits = {});

double adjust_altitude(double current, double target, const KinematicLimits &limits = {});

/// Arrival test with one tick of tolerance on each axis. On arrival the
/// vehicle is snapped onto the waypoint.
bool waypoint_reached(Vehicle &v, const Waypoint &wp, const KinematicLimits &limits = {});

/// One cruise tick towards the front of the objective list; pops the
/// waypoint on arrival. Throws std::logic_error on an empty list.
void follow(Vehicle &v, const KinematicLimits &limits = {});

/// Take-off fix altitude: the lowest level permitted for the first leg's heading.
double takeoff_fix_altitude(const Vehicle &v, const WorldBounds &world = {});

/// Scheduled -> TakeoffClimb. `forced_level` overrides the take-off fix altitude.
void begin_takeoff(Vehicle &v, const WorldBounds &world = {},
                   std::optional<double> forced_level = std::nullopt);

double spiral_radius(const Vehicle &v, const KinematicLimits &limits = {});

/// Advances an entered vehicle by one tick through the
/// take-off climb / cruise / landing spiral phase machine. Delivered
/// vehicles are left untouched. Throws std::logic_error for a vehicle that
/// has not entered the airspace.
void step_phase(Vehicle &v, const WorldBounds &world = {}, const KinematicLimits &limits = {});

} // namespace uam
