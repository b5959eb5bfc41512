#pragma once

#include "uamsim/types.hpp"

#include <optional>
#include <set>
#include <span>
#include <vector>

namespace uam
{

double euclidean_distance(Point a, Point b) noexcept;

/// Horizontal distance minus the more restrictive of the two horizontal
/// separations. Negative inside the joint separation disc.
/// Throws std::invalid_argument when both arguments carry the same id.
double separation_adjusted_distance(const Vehicle &a, const Vehicle &b);

/// Loss of separation: horizontally closer than max(hsep) while vertically
/// closer than max(vsep). Both inequalities are strict.
bool in_conflict(const Vehicle &a, const Vehicle &b);

/// Ids of every other active vehicle in conflict with `subject`. The result
/// is also merged into subject.conflict_list, which accumulates over a run.
std::set<VehicleId> check_conflicts_for(Vehicle &subject, std::span<const Vehicle> all);

/// Horizontal distance to the nearest other active vehicle, if any.
std::optional<double> closest_aircraft_distance(const Vehicle &subject,
                                                std::span<const Vehicle> all);

/// Active vehicles within `radius` NM (inclusive) of `center`.
/// Throws std::invalid_argument for a negative radius.
std::vector<const Vehicle *> vehicles_in_region(std::span<const Vehicle> all, Point center,
                                                double radius);

/// Cruise levels available on a heading: the odd levels below 180 degrees,
/// the even levels from 180 upwards. Throws for headings outside [0, 360).
std::vector<double> flight_levels_for_heading(double hdg, const WorldBounds &world = {});

double lowest_flight_level_for_heading(double hdg, const WorldBounds &world = {});

} // namespace uam
