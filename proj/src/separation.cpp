#include "uamsim/separation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace uam
{

double euclidean_distance(Point a, Point b) noexcept
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

namespace
{
void require_distinct(const Vehicle &a, const Vehicle &b)
{
    if (a.id == b.id)
    {
        throw std::invalid_argument("vehicle " + std::to_string(a.id) + " compared with itself");
    }
}
} // namespace

double separation_adjusted_distance(const Vehicle &a, const Vehicle &b)
{
    require_distinct(a, b);
    return euclidean_distance(a.position(), b.position()) - std::max(a.hsep, b.hsep);
}

bool in_conflict(const Vehicle &a, const Vehicle &b)
{
    require_distinct(a, b);
    const bool vertical_loss = std::abs(a.z - b.z) < std::max(a.vsep, b.vsep);
    if (!vertical_loss)
    {
        return false;
    }
    return euclidean_distance(a.position(), b.position()) < std::max(a.hsep, b.hsep);
}

std::set<VehicleId> check_conflicts_for(Vehicle &subject, std::span<const Vehicle> all)
{
    std::set<VehicleId> found;
    for (const Vehicle &other : all)
    {
        if (other.id == subject.id || !other.is_active())
        {
            continue;
        }
        if (in_conflict(subject, other))
        {
            found.insert(other.id);
        }
    }
    subject.conflict_list.insert(found.begin(), found.end());
    return found;
}

std::optional<double> closest_aircraft_distance(const Vehicle &subject,
                                                std::span<const Vehicle> all)
{
    std::optional<double> best;
    for (const Vehicle &other : all)
    {
        if (other.id == subject.id || !other.is_active())
        {
            continue;
        }
        const double d = euclidean_distance(subject.position(), other.position());
        if (!best || d < *best)
        {
            best = d;
        }
    }
    return best;
}

std::vector<const Vehicle *> vehicles_in_region(std::span<const Vehicle> all, Point center,
                                                double radius)
{
    if (!(radius >= 0.0))
    {
        throw std::invalid_argument("region radius must be non-negative");
    }
    std::vector<const Vehicle *> out;
    for (const Vehicle &v : all)
    {
        if (v.is_active() && euclidean_distance(v.position(), center) <= radius)
        {
            out.push_back(&v);
        }
    }
    return out;
}

std::vector<double> flight_levels_for_heading(double hdg, const WorldBounds &world)
{
    if (!(hdg >= 0.0 && hdg < 360.0))
    {
        throw std::invalid_argument("heading " + std::to_string(hdg) + " outside [0, 360)");
    }
    // Odd levels sit at even indices of the ascending list (1000, 1400, ...).
    const std::size_t first = hdg < 180.0 ? 0 : 1;
    std::vector<double> levels;
    for (std::size_t i = first; i < world.flight_levels.size(); i += 2)
    {
        levels.push_back(world.flight_levels[i]);
    }
    return levels;
}

double lowest_flight_level_for_heading(double hdg, const WorldBounds &world)
{
    const auto levels = flight_levels_for_heading(hdg, world);
    if (levels.empty())
    {
        throw std::invalid_argument("no flight level available for heading");
    }
    return levels.front();
}

} // namespace uam
