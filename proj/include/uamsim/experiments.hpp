#pragma once

#include "uamsim/airspace.hpp"

#include <optional>
#include <string_view>

namespace uam
{

/// Built-in reference scenarios.
enum class Experiment
{
    ParallelTracks, ///< five direct 10 NM flights on parallel tracks ("1")
    Crossing,       ///< two direct flights crossing at (3, 3) on one shared level ("2")
    CrossingDetour, ///< the crossing with a detour point (4, 2, 1200) on vehicle 1 ("2-fixed")
};

std::optional<Experiment> parse_experiment(std::string_view name) noexcept;

/// Five vehicles flying direct: three eastbound at y = 5, 15, 25 and two
/// westbound at y = 10, 20, all between x = 10 and x = 20.
Airspace parallel_tracks_fleet(SimulationOptions options = {});

/// Two vehicles flying direct (4,4) -> (2,2) and (4,2) -> (2,4). Each sits on
/// the lowest level of its own heading, 200 ft apart.
Airspace crossing_fleet(SimulationOptions options = {});

/// crossing_fleet with vehicle 1 routed through (4, 2, 1200).
Airspace crossing_detour_fleet(SimulationOptions options = {});

/// The airspace the `demo` command runs. The plain crossing is pinned to a
/// shared 1000 ft level so that the two direct flights meet.
Airspace demo_airspace(Experiment experiment, SimulationOptions options = {});

} // namespace uam
