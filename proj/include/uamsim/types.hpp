#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

// Unit conventions used throughout: x/y in nautical miles, z in feet AGL,
// speed in knots, heading in degrees (0 = +x axis, counter-clockwise).
namespace uam
{

using VehicleId = std::int64_t;
using Tick = std::int64_t;

inline constexpr double kVerticalSeparationFt = 200.0;
inline constexpr double kPilotedSeparationNm = 0.25;
inline constexpr double kUncrewedSeparationNm = 0.5;
inline constexpr double kDefaultCruiseSpeedKts = 150.0;
inline constexpr double kMinSpeedKts = 130.0;
inline constexpr double kMaxSpeedKts = 170.0;
inline constexpr double kDefaultVerticalRateFtMin = 500.0;

enum class VehicleType
{
    Piloted,
    RemotelyPiloted,
    SelfPiloted,
};

/// Minimum horizontal separation a vehicle of this kind demands (NM).
double horizontal_separation_nm(VehicleType kind) noexcept;

/// Interchange names: "piloted", "rpas", "uas".
std::string_view to_string(VehicleType kind) noexcept;
std::optional<VehicleType> parse_vehicle_type(std::string_view name) noexcept;

struct Point
{
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point &, const Point &) = default;
};

/// One 4D trajectory element: horizontal position, altitude and the speed
/// commanded while intercepting it.
struct Waypoint
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double s = kDefaultCruiseSpeedKts;

    Point position() const noexcept { return {x, y}; }

    friend bool operator==(const Waypoint &, const Waypoint &) = default;
};

struct WorldBounds
{
    double x_min = 0.0;
    double x_max = 30.0;
    double y_min = 0.0;
    double y_max = 30.0;
    std::vector<double> flight_levels{1000.0, 1200.0, 1400.0, 1600.0};
    double skyport_altitude = 100.0;

    /// Throws std::invalid_argument when the bounds are degenerate or the
    /// flight levels are unsorted or closer than the vertical separation.
    void validate() const;

    bool contains(Point p, double margin = 0.0) const noexcept;
    bool is_flight_level(double z) const noexcept;
    double min_altitude() const noexcept { return skyport_altitude; }
    double max_altitude() const noexcept;
};

/// External is never a vehicle state; it tags overlay rows in the movement log.
enum class FlightPhase
{
    Scheduled,
    TakeoffClimb,
    Cruise,
    LandingSpiral,
    Delivered,
    External,
};

std::string_view to_string(FlightPhase phase) noexcept;
std::optional<FlightPhase> parse_flight_phase(std::string_view name) noexcept;

struct Vehicle
{
    VehicleId id = 0;
    VehicleType kind = VehicleType::Piloted;

    double x = 0.0;
    double y = 0.0;
    double z = 100.0;

    // Origin skyport; the take-off climb holds this position.
    double origin_x = 0.0;
    double origin_y = 0.0;

    double target_x = 0.0;
    double target_y = 0.0;
    double target_z = 100.0;

    double hdg = 0.0;
    double speed = kDefaultCruiseSpeedKts;
    double rate_of_climb = kDefaultVerticalRateFtMin;
    double rate_of_descent = kDefaultVerticalRateFtMin;
    double hsep = kPilotedSeparationNm;
    double vsep = kVerticalSeparationFt;

    Tick timestamp = 0;
    std::deque<Waypoint> objective_list;
    bool delivered = false;
    std::set<VehicleId> conflict_list;

    FlightPhase phase = FlightPhase::Scheduled;
    double takeoff_fix_z = 0.0;
    double spiral_angle = 0.0;

    /// Entered the airspace and not yet delivered.
    bool is_active() const noexcept
    {
        return phase == FlightPhase::TakeoffClimb || phase == FlightPhase::Cruise ||
               phase == FlightPhase::LandingSpiral;
    }

    Point position() const noexcept { return {x, y}; }
    Point origin() const noexcept { return {origin_x, origin_y}; }
    Point destination() const noexcept { return {target_x, target_y}; }
};

/// A Scheduled vehicle sitting on its origin skyport, heading straight for
/// its destination, with separation derived from its kind.
Vehicle make_vehicle(VehicleId id, VehicleType kind, Point origin, Point destination,
                     Tick timestamp = 0, double skyport_altitude = 100.0);

} // namespace uam
