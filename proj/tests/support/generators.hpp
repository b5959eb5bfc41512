#pragma once

#include "uamsim/airspace.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace uam::testing
{

/// Random fleet packed into a small box so that conflicts are common.
/// Legs are at least 2 NM long so that every waypoint lies outside the
/// turning circle of a vehicle arriving from the previous one.
inline Airspace random_scenario(std::uint64_t seed, SimulationOptions options = {})
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> fleet_size(2, 10);
    std::uniform_int_distribution<int> type_pick(0, 2);
    std::uniform_int_distribution<int> level_pick(0, 3);
    std::uniform_int_distribution<int> extra_points(0, 2);
    std::uniform_int_distribution<int> start_tick(0, 90);
    std::uniform_real_distribution<double> box_origin(0.0, 22.0);
    std::uniform_real_distribution<double> in_box(0.0, 8.0);
    std::uniform_real_distribution<double> speed(130.0, 170.0);

    const WorldBounds world;
    Airspace airspace(world, options);
    const double bx = box_origin(rng);
    const double by = box_origin(rng);
    const auto random_point = [&] { return Point{bx + in_box(rng), by + in_box(rng)}; };
    const auto far_point = [&](Point from) {
        Point p = random_point();
        while (std::hypot(p.x - from.x, p.y - from.y) < 2.0)
        {
            p = random_point();
        }
        return p;
    };

    const int n = fleet_size(rng);
    for (int i = 1; i <= n; ++i)
    {
        const Point origin = random_point();
        std::vector<Waypoint> route;
        Point cursor = origin;
        const int extras = extra_points(rng);
        for (int k = 0; k < extras; ++k)
        {
            const Point p = far_point(cursor);
            route.push_back({p.x, p.y, world.flight_levels[level_pick(rng)], speed(rng)});
            cursor = p;
        }
        const Point destination = far_point(cursor);
        route.push_back({destination.x, destination.y, world.flight_levels[level_pick(rng)],
                         speed(rng)});

        Vehicle v = make_vehicle(i, static_cast<VehicleType>(type_pick(rng)), origin, destination,
                                 start_tick(rng));
        v.objective_list.assign(route.begin(), route.end());
        airspace.add_vehicle(std::move(v));
    }
    return airspace;
}

} // namespace uam::testing
