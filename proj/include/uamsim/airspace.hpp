#pragma once

#include "uamsim/kinematics.hpp"
#include "uamsim/types.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace uam
{

/// One row of the movement history: the state of one vehicle at the end of a tick.
struct MovementRecord
{
    Tick tick = 0;
    VehicleId id = 0;
    VehicleType kind = VehicleType::Piloted;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double hdg = 0.0;
    double speed = 0.0;
    FlightPhase phase = FlightPhase::Scheduled;
    bool delivered = false;

    friend bool operator==(const MovementRecord &, const MovementRecord &) = default;
};

MovementRecord make_record(const Vehicle &v, Tick tick);

struct ConflictEvent
{
    VehicleId a = 0; ///< always the smaller id
    VehicleId b = 0;
    Tick tick = 0;

    friend bool operator==(const ConflictEvent &, const ConflictEvent &) = default;
    friend auto operator<=>(const ConflictEvent &, const ConflictEvent &) = default;
};

enum class HaltReason
{
    AllDelivered,
    Conflict,
    MaxTicks,
};

std::string_view to_string(HaltReason reason) noexcept;

/// Outcome of a run. An unsafe run carries safe = false and total_ticks set
/// to the tick at which it halted; an unbounded duration is
/// represented by the flag, not by the number.
struct SimulationReport
{
    bool safe = true;
    Tick total_ticks = 0;
    HaltReason halt_reason = HaltReason::AllDelivered;
    std::vector<ConflictEvent> conflicts;
    std::map<VehicleId, Tick> delivery_ticks;
    std::set<VehicleId> undelivered;
};

enum class StepPolicy
{
    Sequential,
    Parallel,
};

struct SimulationOptions
{
    Tick max_ticks = 36000;
    /// Stop at the end of the first tick with a conflict. Turning this off
    /// keeps flying so that every conflicting tick is traced.
    bool halt_on_conflict = true;
    StepPolicy policy = StepPolicy::Sequential;
    unsigned worker_threads = 0; ///< 0 picks hardware concurrency
    KinematicLimits limits{};
};

/// Conflicting pairs found at the end of one tick.
struct TickConflicts
{
    Tick tick = 0;
    std::vector<std::pair<VehicleId, VehicleId>> pairs; ///< sorted, first < second
};

/// The airspace manager: owns the fleet, the tick clock and the movement log.
class Airspace
{
public:
    explicit Airspace(WorldBounds bounds = {}, SimulationOptions options = {});

    /// Registers a Scheduled vehicle. Throws std::invalid_argument on a
    /// duplicate id or an origin/destination/waypoint outside the world.
    void add_vehicle(Vehicle v);

    /// Replaces the trajectory of a vehicle that has not entered yet and
    /// appends the landing fix above its destination when missing.
    void set_trajectory(VehicleId id, std::vector<Waypoint> waypoints);

    /// Appends one waypoint before the landing fix.
    void add_objective_point(VehicleId id, Waypoint wp);

    /// Pins every trajectory waypoint and every take-off fix to `level`.
    /// Throws std::invalid_argument unless `level` is a flight level.
    void force_shared_level(double level);
    std::optional<double> shared_level() const noexcept { return shared_level_; }

    /// Activates Scheduled vehicles whose timestamp has come.
    std::vector<VehicleId> check_schedule();

    /// Advances the world by one tick.
    void step();

    /// Runs `step` until every vehicle is delivered, a conflict is detected
    /// or max_ticks elapse. Throws std::logic_error on an empty fleet.
    SimulationReport simulate();

    /// Appends a record for a vehicle outside the fleet at the current tick.
    void log_external_vehicle(const Vehicle &v);

    std::span<const Vehicle> vehicles() const noexcept { return vehicles_; }
    const Vehicle &vehicle(VehicleId id) const;
    bool contains(VehicleId id) const noexcept;
    std::size_t size() const noexcept { return vehicles_.size(); }

    Tick tick() const noexcept { return tick_; }
    const WorldBounds &bounds() const noexcept { return bounds_; }
    const SimulationOptions &options() const noexcept { return options_; }
    SimulationOptions &options() noexcept { return options_; }

    const std::vector<MovementRecord> &movement_log() const noexcept { return log_; }
    const std::vector<TickConflicts> &conflict_trace() const noexcept { return trace_; }
    const std::map<VehicleId, Tick> &delivery_ticks() const noexcept { return deliveries_; }

    bool all_delivered() const noexcept;
    std::size_t count_in_phase(FlightPhase phase) const noexcept;

private:
    Vehicle &mutable_vehicle(VehicleId id);
    void validate_waypoint(const Vehicle &v, const Waypoint &wp) const;
    void append_landing_fix(Vehicle &v) const;
    void advance_vehicles();
    std::vector<std::pair<VehicleId, VehicleId>> detect_conflicts();

    WorldBounds bounds_;
    SimulationOptions options_;
    std::vector<Vehicle> vehicles_; // ascending id
    Tick tick_ = 0;
    std::vector<MovementRecord> log_;
    std::vector<TickConflicts> trace_;
    std::map<VehicleId, Tick> deliveries_;
    std::optional<double> shared_level_;
};

} // namespace uam
