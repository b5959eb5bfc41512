#include "uamsim/experiments.hpp"

namespace uam
{

std::optional<Experiment> parse_experiment(std::string_view name) noexcept
{
    if (name == "1")
    {
        return Experiment::ParallelTracks;
    }
    if (name == "2")
    {
        return Experiment::Crossing;
    }
    if (name == "2-fixed")
    {
        return Experiment::CrossingDetour;
    }
    return std::nullopt;
}

Airspace parallel_tracks_fleet(SimulationOptions options)
{
    Airspace airspace({}, std::move(options));
    airspace.add_vehicle(make_vehicle(1, VehicleType::RemotelyPiloted, {10, 5}, {20, 5}));
    airspace.add_vehicle(make_vehicle(2, VehicleType::SelfPiloted, {10, 15}, {20, 15}));
    airspace.add_vehicle(make_vehicle(3, VehicleType::Piloted, {10, 25}, {20, 25}));
    airspace.add_vehicle(make_vehicle(4, VehicleType::Piloted, {20, 10}, {10, 10}));
    airspace.add_vehicle(make_vehicle(5, VehicleType::Piloted, {20, 20}, {10, 20}));
    return airspace;
}

Airspace crossing_fleet(SimulationOptions options)
{
    Airspace airspace({}, std::move(options));
    airspace.add_vehicle(make_vehicle(1, VehicleType::RemotelyPiloted, {4, 4}, {2, 2}));
    airspace.add_vehicle(make_vehicle(2, VehicleType::SelfPiloted, {4, 2}, {2, 4}));
    return airspace;
}

Airspace crossing_detour_fleet(SimulationOptions options)
{
    Airspace airspace = crossing_fleet(std::move(options));
    airspace.set_trajectory(1, {{4, 2, 1200, kDefaultCruiseSpeedKts}});
    return airspace;
}

Airspace demo_airspace(Experiment experiment, SimulationOptions options)
{
    switch (experiment)
    {
    case Experiment::ParallelTracks:
        return parallel_tracks_fleet(std::move(options));
    case Experiment::Crossing: {
        Airspace airspace = crossing_fleet(std::move(options));
        airspace.force_shared_level(1000.0);
        return airspace;
    }
    case Experiment::CrossingDetour:
        return crossing_detour_fleet(std::move(options));
    }
    return parallel_tracks_fleet(std::move(options));
}

} // namespace uam
