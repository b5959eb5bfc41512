#pragma once

#include "uamsim/airspace.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uam
{

/// Scenario validation failure. Carries the offending entry index and field
/// name when the problem is local to one vehicle entry.
class ScenarioError : public std::runtime_error
{
public:
    ScenarioError(std::optional<std::size_t> entry, std::string field, const std::string &detail);

    const std::optional<std::size_t> &entry() const noexcept { return entry_; }
    const std::string &field() const noexcept { return field_; }

private:
    std::optional<std::size_t> entry_;
    std::string field_;
};

/// Unreadable or unwritable file.
class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Scenario document: a JSON array of vehicle entries with the keys
/// eVTOLid, initial_position, final_position, hdg, eVTOL_type, objectiveList
/// and timestamp, always written in that order.
std::string dump_scenario(const Airspace &airspace);
void save_scenario(const Airspace &airspace, const std::filesystem::path &path);

/// Builds an airspace from a scenario document. Entries without an
/// objectiveList fly direct at the lowest level allowed by their heading.
Airspace parse_scenario(std::string_view text, WorldBounds bounds = {},
                        SimulationOptions options = {});
Airspace load_scenario(const std::filesystem::path &path, WorldBounds bounds = {},
                       SimulationOptions options = {});

inline constexpr std::string_view kMovementLogHeader =
    "tick,id,type,x_nm,y_nm,z_ft,hdg_deg,speed_kts,phase,delivered";

/// CSV text, rows ordered by (tick, id); reals printed with six decimals.
std::string format_movement_log(std::span<const MovementRecord> log);
void write_movement_log(std::span<const MovementRecord> log, const std::filesystem::path &path);

/// Inverse of format_movement_log (to six-decimal precision).
/// Throws ScenarioError with the 1-based line number as entry on malformed rows.
std::vector<MovementRecord> parse_movement_log(std::string_view text);
std::vector<MovementRecord> read_movement_log(const std::filesystem::path &path);

/// Flat report document: safe, total_ticks, halt_reason, delivery_ticks,
/// conflicts.
std::string format_report(const SimulationReport &report);
void write_report(const SimulationReport &report, const std::filesystem::path &path);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

} // namespace uam
