#include "uamsim/airspace.hpp"

#include "uamsim/separation.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace uam
{

MovementRecord make_record(const Vehicle &v, Tick tick)
{
    return MovementRecord{tick, v.id, v.kind, v.x, v.y, v.z, v.hdg, v.speed, v.phase, v.delivered};
}

std::string_view to_string(HaltReason reason) noexcept
{
    switch (reason)
    {
    case HaltReason::AllDelivered:
        return "all_delivered";
    case HaltReason::Conflict:
        return "conflict";
    case HaltReason::MaxTicks:
        return "max_ticks";
    }
    return "unknown";
}

Airspace::Airspace(WorldBounds bounds, SimulationOptions options)
    : bounds_(std::move(bounds)), options_(std::move(options))
{
    bounds_.validate();
    options_.limits.validate();
    if (options_.max_ticks < 0)
    {
        throw std::invalid_argument("max_ticks must be non-negative");
    }
}

namespace
{
template <typename It> It find_by_id(It first, It last, VehicleId id)
{
    auto it = std::lower_bound(first, last, id,
                               [](const Vehicle &v, VehicleId key) { return v.id < key; });
    return (it != last && it->id == id) ? it : last;
}
} // namespace

bool Airspace::contains(VehicleId id) const noexcept
{
    return find_by_id(vehicles_.begin(), vehicles_.end(), id) != vehicles_.end();
}

const Vehicle &Airspace::vehicle(VehicleId id) const
{
    auto it = find_by_id(vehicles_.begin(), vehicles_.end(), id);
    if (it == vehicles_.end())
    {
        throw std::out_of_range("unknown vehicle id " + std::to_string(id));
    }
    return *it;
}

Vehicle &Airspace::mutable_vehicle(VehicleId id)
{
    return const_cast<Vehicle &>(std::as_const(*this).vehicle(id));
}

void Airspace::validate_waypoint(const Vehicle &v, const Waypoint &wp) const
{
    const std::string who = "vehicle " + std::to_string(v.id) + ": ";
    if (!bounds_.contains(wp.position()))
    {
        throw std::invalid_argument(who + "waypoint (" + std::to_string(wp.x) + ", " +
                                    std::to_string(wp.y) + ") outside world bounds");
    }
    if (!(wp.z >= bounds_.min_altitude() && wp.z <= bounds_.max_altitude()))
    {
        throw std::invalid_argument(who + "waypoint altitude " + std::to_string(wp.z) +
                                    " ft outside the operating band");
    }
    if (!(wp.s >= kMinSpeedKts && wp.s <= kMaxSpeedKts))
    {
        throw std::invalid_argument(who + "waypoint speed " + std::to_string(wp.s) +
                                    " kts outside 130-170 kts");
    }
}

void Airspace::append_landing_fix(Vehicle &v) const
{
    if (v.objective_list.empty())
    {
        double level = 0.0;
        if (shared_level_)
        {
            level = *shared_level_;
        }
        else if (v.origin() == v.destination())
        {
            level = lowest_flight_level_for_heading(v.hdg, bounds_);
        }
        else
        {
            level = lowest_flight_level_for_heading(
                calc_angle_to_position(v.origin(), v.destination()), bounds_);
        }
        v.objective_list.push_back({v.target_x, v.target_y, level, kDefaultCruiseSpeedKts});
        return;
    }
    const Waypoint &last = v.objective_list.back();
    if (last.position() != v.destination())
    {
        v.objective_list.push_back({v.target_x, v.target_y, last.z, last.s});
    }
}

void Airspace::add_vehicle(Vehicle v)
{
    if (contains(v.id))
    {
        throw std::invalid_argument("duplicate vehicle id " + std::to_string(v.id));
    }
    const std::string who = "vehicle " + std::to_string(v.id) + ": ";
    if (!bounds_.contains(v.origin()))
    {
        throw std::invalid_argument(who + "origin outside world bounds");
    }
    if (!bounds_.contains(v.destination()))
    {
        throw std::invalid_argument(who + "destination outside world bounds");
    }
    if (v.timestamp < 0)
    {
        throw std::invalid_argument(who + "negative timestamp");
    }
    for (const Waypoint &wp : v.objective_list)
    {
        validate_waypoint(v, wp);
    }
    v.phase = FlightPhase::Scheduled;
    v.delivered = false;
    v.conflict_list.clear();
    v.hsep = horizontal_separation_nm(v.kind);
    if (shared_level_)
    {
        for (Waypoint &wp : v.objective_list)
        {
            wp.z = *shared_level_;
        }
    }
    append_landing_fix(v);

    auto pos = std::lower_bound(vehicles_.begin(), vehicles_.end(), v.id,
                                [](const Vehicle &lhs, VehicleId key) { return lhs.id < key; });
    vehicles_.insert(pos, std::move(v));
}

void Airspace::set_trajectory(VehicleId id, std::vector<Waypoint> waypoints)
{
    Vehicle &v = mutable_vehicle(id);
    if (v.phase != FlightPhase::Scheduled)
    {
        throw std::logic_error("vehicle " + std::to_string(id) +
                               " already entered; its trajectory is frozen");
    }
    if (waypoints.empty())
    {
        throw std::invalid_argument("vehicle " + std::to_string(id) + ": empty trajectory");
    }
    for (const Waypoint &wp : waypoints)
    {
        validate_waypoint(v, wp);
    }
    if (shared_level_)
    {
        for (Waypoint &wp : waypoints)
        {
            wp.z = *shared_level_;
        }
    }
    v.objective_list.assign(waypoints.begin(), waypoints.end());
    append_landing_fix(v);
}

void Airspace::add_objective_point(VehicleId id, Waypoint wp)
{
    const Vehicle &v = vehicle(id);
    std::vector<Waypoint> list(v.objective_list.begin(), v.objective_list.end());
    // The landing fix stays last.
    if (!list.empty() && list.back().position() == v.destination())
    {
        list.insert(list.end() - 1, wp);
    }
    else
    {
        list.push_back(wp);
    }
    set_trajectory(id, std::move(list));
}

void Airspace::force_shared_level(double level)
{
    if (!bounds_.is_flight_level(level))
    {
        throw std::invalid_argument(std::to_string(level) + " ft is not a flight level");
    }
    shared_level_ = level;
    for (Vehicle &v : vehicles_)
    {
        if (v.phase != FlightPhase::Scheduled)
        {
            continue;
        }
        for (Waypoint &wp : v.objective_list)
        {
            wp.z = level;
        }
    }
}

std::vector<VehicleId> Airspace::check_schedule()
{
    std::vector<VehicleId> activated;
    for (Vehicle &v : vehicles_)
    {
        if (v.phase == FlightPhase::Scheduled && v.timestamp <= tick_)
        {
            begin_takeoff(v, bounds_, shared_level_);
            activated.push_back(v.id);
        }
    }
    return activated;
}

void Airspace::advance_vehicles()
{
    std::vector<Vehicle *> active;
    for (Vehicle &v : vehicles_)
    {
        if (v.is_active())
        {
            active.push_back(&v);
        }
    }

    const auto step_range = [this, &active](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
        {
            step_phase(*active[i], bounds_, options_.limits);
        }
    };

    unsigned workers = options_.worker_threads != 0 ? options_.worker_threads
                                                    : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, active.size()));
    if (options_.policy == StepPolicy::Sequential || workers <= 1)
    {
        step_range(0, active.size());
        return;
    }

    // Vehicles only read and write their own state while moving, so chunks
    // are independent and the result matches sequential stepping bit for bit.
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (active.size() + workers - 1) / workers;
        for (std::size_t begin = 0; begin < active.size(); begin += chunk)
        {
            const std::size_t end = std::min(active.size(), begin + chunk);
            pool.emplace_back([&, begin, end] {
                try
                {
                    step_range(begin, end);
                }
                catch (...)
                {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                    {
                        failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure)
    {
        std::rethrow_exception(failure);
    }
}

std::vector<std::pair<VehicleId, VehicleId>> Airspace::detect_conflicts()
{
    std::vector<std::pair<VehicleId, VehicleId>> pairs;
    for (Vehicle &v : vehicles_)
    {
        if (!v.is_active())
        {
            continue;
        }
        for (VehicleId other : check_conflicts_for(v, vehicles_))
        {
            if (v.id < other)
            {
                pairs.emplace_back(v.id, other);
            }
        }
    }
    return pairs;
}

void Airspace::step()
{
    check_schedule();

    std::vector<VehicleId> stepping;
    for (const Vehicle &v : vehicles_)
    {
        if (v.is_active())
        {
            stepping.push_back(v.id);
        }
    }

    advance_vehicles();
    auto pairs = detect_conflicts();
    ++tick_;

    for (VehicleId id : stepping)
    {
        const Vehicle &v = vehicle(id);
        log_.push_back(make_record(v, tick_));
        if (v.delivered && !deliveries_.contains(id))
        {
            deliveries_.emplace(id, tick_);
        }
    }
    if (!pairs.empty())
    {
        trace_.push_back({tick_, std::move(pairs)});
    }
}

bool Airspace::all_delivered() const noexcept
{
    return std::all_of(vehicles_.begin(), vehicles_.end(),
                       [](const Vehicle &v) { return v.delivered; });
}

std::size_t Airspace::count_in_phase(FlightPhase phase) const noexcept
{
    return static_cast<std::size_t>(std::count_if(
        vehicles_.begin(), vehicles_.end(), [phase](const Vehicle &v) { return v.phase == phase; }));
}

SimulationReport Airspace::simulate()
{
    if (vehicles_.empty())
    {
        throw std::logic_error("cannot simulate an empty fleet");
    }

    SimulationReport report;
    std::set<std::pair<VehicleId, VehicleId>> seen;
    for (const TickConflicts &tc : trace_)
    {
        for (const auto &p : tc.pairs)
        {
            if (seen.insert(p).second)
            {
                report.conflicts.push_back({p.first, p.second, tc.tick});
            }
        }
    }

    report.halt_reason = HaltReason::AllDelivered;
    while (!all_delivered())
    {
        if (tick_ >= options_.max_ticks)
        {
            report.halt_reason = HaltReason::MaxTicks;
            break;
        }
        step();
        if (!trace_.empty() && trace_.back().tick == tick_)
        {
            for (const auto &p : trace_.back().pairs)
            {
                if (seen.insert(p).second)
                {
                    report.conflicts.push_back({p.first, p.second, tick_});
                }
            }
            if (options_.halt_on_conflict)
            {
                report.halt_reason = HaltReason::Conflict;
                break;
            }
        }
    }

    report.safe = report.conflicts.empty();
    report.total_ticks = tick_;
    report.delivery_ticks = deliveries_;
    for (const Vehicle &v : vehicles_)
    {
        if (!v.delivered)
        {
            report.undelivered.insert(v.id);
        }
    }
    return report;
}

void Airspace::log_external_vehicle(const Vehicle &v)
{
    MovementRecord r = make_record(v, tick_);
    r.phase = FlightPhase::External;
    log_.push_back(r);
}

} // namespace uam
