#pragma once

// Test-only reference implementations. Nothing here calls into the
// separation or kinematics code it is used to check.

#include "uamsim/airspace.hpp"

#include <cmath>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace uam::testing
{

inline double oracle_hsep(VehicleType kind)
{
    return kind == VehicleType::Piloted ? 0.25 : 0.5;
}

/// Brute-force loss-of-separation test straight from the rule: horizontal
/// gap below the larger requirement while the vertical gap is below 200 ft.
inline bool oracle_conflict(double ax, double ay, double az, VehicleType ak, double bx, double by,
                            double bz, VehicleType bk)
{
    const double dx = ax - bx;
    const double dy = ay - by;
    const double horizontal = std::sqrt(dx * dx + dy * dy);
    const double required = std::max(oracle_hsep(ak), oracle_hsep(bk));
    return std::fabs(az - bz) < 200.0 && horizontal < required;
}

using PairSet = std::set<std::pair<VehicleId, VehicleId>>;

/// Re-derives every conflicting pair per tick from a movement log alone.
inline std::map<Tick, PairSet> oracle_conflicts_from_log(const std::vector<MovementRecord> &log)
{
    std::map<Tick, std::vector<const MovementRecord *>> by_tick;
    for (const MovementRecord &r : log)
    {
        if (r.phase == FlightPhase::External || r.delivered)
        {
            continue;
        }
        by_tick[r.tick].push_back(&r);
    }
    std::map<Tick, PairSet> out;
    for (const auto &[tick, rows] : by_tick)
    {
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            for (std::size_t j = i + 1; j < rows.size(); ++j)
            {
                const MovementRecord &a = *rows[i];
                const MovementRecord &b = *rows[j];
                if (oracle_conflict(a.x, a.y, a.z, a.kind, b.x, b.y, b.z, b.kind))
                {
                    out[tick].insert(std::minmax(a.id, b.id));
                }
            }
        }
    }
    return out;
}

inline std::map<Tick, PairSet> engine_conflicts(const std::vector<TickConflicts> &trace)
{
    std::map<Tick, PairSet> out;
    for (const TickConflicts &tc : trace)
    {
        out[tc.tick].insert(tc.pairs.begin(), tc.pairs.end());
    }
    return out;
}

/// Ticks needed to change altitude by `delta_ft` at 500 ft/min.
inline long vertical_ticks(double delta_ft)
{
    return static_cast<long>(std::ceil(std::fabs(delta_ft) / (500.0 / 60.0) - 1e-9));
}

} // namespace uam::testing
