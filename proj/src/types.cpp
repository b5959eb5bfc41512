#include "uamsim/types.hpp"

#include "uamsim/kinematics.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace uam
{

double horizontal_separation_nm(VehicleType kind) noexcept
{
    switch (kind)
    {
    case VehicleType::Piloted:
        return kPilotedSeparationNm;
    case VehicleType::RemotelyPiloted:
    case VehicleType::SelfPiloted:
        return kUncrewedSeparationNm;
    }
    return kUncrewedSeparationNm;
}

namespace
{
constexpr std::array<std::pair<VehicleType, std::string_view>, 3> kTypeNames{{
    {VehicleType::Piloted, "piloted"},
    {VehicleType::RemotelyPiloted, "rpas"},
    {VehicleType::SelfPiloted, "uas"},
}};

constexpr std::array<std::pair<FlightPhase, std::string_view>, 6> kPhaseNames{{
    {FlightPhase::Scheduled, "scheduled"},
    {FlightPhase::TakeoffClimb, "takeoff_climb"},
    {FlightPhase::Cruise, "cruise"},
    {FlightPhase::LandingSpiral, "landing_spiral"},
    {FlightPhase::Delivered, "delivered"},
    {FlightPhase::External, "external"},
}};
} // namespace

std::string_view to_string(VehicleType kind) noexcept
{
    for (const auto &[k, name] : kTypeNames)
    {
        if (k == kind)
        {
            return name;
        }
    }
    return "unknown";
}

std::optional<VehicleType> parse_vehicle_type(std::string_view name) noexcept
{
    for (const auto &[k, n] : kTypeNames)
    {
        if (n == name)
        {
            return k;
        }
    }
    return std::nullopt;
}

std::string_view to_string(FlightPhase phase) noexcept
{
    for (const auto &[p, name] : kPhaseNames)
    {
        if (p == phase)
        {
            return name;
        }
    }
    return "unknown";
}

std::optional<FlightPhase> parse_flight_phase(std::string_view name) noexcept
{
    for (const auto &[p, n] : kPhaseNames)
    {
        if (n == name)
        {
            return p;
        }
    }
    return std::nullopt;
}

void WorldBounds::validate() const
{
    if (!(x_min < x_max) || !(y_min < y_max))
    {
        throw std::invalid_argument("world bounds: min must be below max on both axes");
    }
    if (flight_levels.empty())
    {
        throw std::invalid_argument("world bounds: no flight levels");
    }
    for (std::size_t i = 1; i < flight_levels.size(); ++i)
    {
        if (flight_levels[i] - flight_levels[i - 1] < kVerticalSeparationFt)
        {
            throw std::invalid_argument(
                "world bounds: flight levels must ascend with gaps of at least the vertical separation");
        }
    }
    if (skyport_altitude >= flight_levels.front())
    {
        throw std::invalid_argument("world bounds: skyport must sit below the lowest flight level");
    }
}

bool WorldBounds::contains(Point p, double margin) const noexcept
{
    return p.x >= x_min - margin && p.x <= x_max + margin && p.y >= y_min - margin &&
           p.y <= y_max + margin;
}

bool WorldBounds::is_flight_level(double z) const noexcept
{
    return std::find(flight_levels.begin(), flight_levels.end(), z) != flight_levels.end();
}

double WorldBounds::max_altitude() const noexcept
{
    return flight_levels.empty() ? skyport_altitude : flight_levels.back();
}

Vehicle make_vehicle(VehicleId id, VehicleType kind, Point origin, Point destination,
                     Tick timestamp, double skyport_altitude)
{
    Vehicle v;
    v.id = id;
    v.kind = kind;
    v.hsep = horizontal_separation_nm(kind);
    v.vsep = kVerticalSeparationFt;
    v.x = v.origin_x = origin.x;
    v.y = v.origin_y = origin.y;
    v.z = skyport_altitude;
    v.target_x = destination.x;
    v.target_y = destination.y;
    v.target_z = skyport_altitude;
    v.hdg = origin == destination ? 0.0 : calc_angle_to_position(origin, destination);
    v.timestamp = timestamp;
    return v;
}

} // namespace uam
