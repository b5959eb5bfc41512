#include "uamsim/scenario_io.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace uam
{

using nlohmann::json;
using nlohmann::ordered_json;

namespace
{
std::string describe(const std::optional<std::size_t> &entry, const std::string &field,
                     const std::string &detail)
{
    std::string msg;
    if (entry)
    {
        msg += "entry " + std::to_string(*entry);
    }
    if (!field.empty())
    {
        msg += (msg.empty() ? "field '" : ", field '") + field + "'";
    }
    if (!msg.empty())
    {
        msg += ": ";
    }
    return msg + detail;
}
} // namespace

ScenarioError::ScenarioError(std::optional<std::size_t> entry, std::string field,
                             const std::string &detail)
    : std::runtime_error(describe(entry, field, detail)), entry_(entry), field_(std::move(field))
{
}

std::string read_text_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
    {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
    {
        throw IoError("failed writing " + path.string());
    }
}

// ---------------------------------------------------------------------------
// Scenario JSON

std::string dump_scenario(const Airspace &airspace)
{
    ordered_json doc = ordered_json::array();
    for (const Vehicle &v : airspace.vehicles())
    {
        ordered_json entry;
        entry["eVTOLid"] = v.id;
        entry["initial_position"] = {v.origin_x, v.origin_y};
        entry["final_position"] = {v.target_x, v.target_y};
        entry["hdg"] = v.hdg;
        entry["eVTOL_type"] = std::string(to_string(v.kind));
        ordered_json objectives = ordered_json::array();
        for (const Waypoint &wp : v.objective_list)
        {
            objectives.push_back({wp.x, wp.y, wp.z, wp.s});
        }
        entry["objectiveList"] = std::move(objectives);
        entry["timestamp"] = v.timestamp;
        doc.push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

void save_scenario(const Airspace &airspace, const std::filesystem::path &path)
{
    write_text_file(path, dump_scenario(airspace));
}

namespace
{
class EntryReader
{
public:
    EntryReader(const json &entry, std::size_t index, const WorldBounds &bounds)
        : entry_(entry), index_(index), bounds_(bounds)
    {
    }

    [[noreturn]] void fail(const std::string &field, const std::string &detail) const
    {
        throw ScenarioError(index_, field, detail);
    }

    const json *find(const char *field) const
    {
        auto it = entry_.find(field);
        return it == entry_.end() ? nullptr : &*it;
    }

    const json &require(const char *field) const
    {
        const json *value = find(field);
        if (value == nullptr)
        {
            fail(field, "missing");
        }
        return *value;
    }

    double number(const json &value, const std::string &field) const
    {
        if (!value.is_number())
        {
            fail(field, "expected a number");
        }
        const double d = value.get<double>();
        if (!std::isfinite(d))
        {
            fail(field, "not finite");
        }
        return d;
    }

    std::int64_t integer(const json &value, const std::string &field) const
    {
        if (!value.is_number_integer())
        {
            fail(field, "expected an integer");
        }
        return value.get<std::int64_t>();
    }

    Point position(const char *field) const
    {
        const json &value = require(field);
        if (!value.is_array() || value.size() != 2)
        {
            fail(field, "expected [x, y]");
        }
        Point p{number(value[0], field), number(value[1], field)};
        if (!bounds_.contains(p))
        {
            fail(field, "position outside world bounds");
        }
        return p;
    }

    Waypoint waypoint(const json &value, std::size_t k) const
    {
        const std::string field = "objectiveList[" + std::to_string(k) + "]";
        if (!value.is_array() || (value.size() != 3 && value.size() != 4))
        {
            fail(field, "expected [x, y, z] or [x, y, z, s]");
        }
        Waypoint wp;
        wp.x = number(value[0], field);
        wp.y = number(value[1], field);
        wp.z = number(value[2], field);
        wp.s = value.size() == 4 ? number(value[3], field) : kDefaultCruiseSpeedKts;
        if (!bounds_.contains(wp.position()))
        {
            fail(field, "waypoint outside world bounds");
        }
        if (wp.z != bounds_.skyport_altitude && !bounds_.is_flight_level(wp.z))
        {
            fail(field, "altitude " + std::to_string(wp.z) +
                            " ft is neither a flight level nor the skyport altitude");
        }
        if (!(wp.s >= kMinSpeedKts && wp.s <= kMaxSpeedKts))
        {
            fail(field, "speed outside 130-170 kts");
        }
        return wp;
    }

    Vehicle read() const
    {
        if (!entry_.is_object())
        {
            fail("", "entry is not an object");
        }
        const VehicleId id = integer(require("eVTOLid"), "eVTOLid");

        const json &type_value = require("eVTOL_type");
        if (!type_value.is_string())
        {
            fail("eVTOL_type", "expected a string");
        }
        const auto kind = parse_vehicle_type(type_value.get<std::string>());
        if (!kind)
        {
            fail("eVTOL_type", "unknown type '" + type_value.get<std::string>() +
                                   "' (expected piloted, rpas or uas)");
        }

        const Point origin = position("initial_position");
        const Point destination = position("final_position");

        Tick timestamp = 0;
        if (const json *ts = find("timestamp"))
        {
            timestamp = integer(*ts, "timestamp");
            if (timestamp < 0)
            {
                fail("timestamp", "negative");
            }
        }

        Vehicle v = make_vehicle(id, *kind, origin, destination, timestamp,
                                 bounds_.skyport_altitude);

        if (const json *objectives = find("objectiveList"))
        {
            if (!objectives->is_array())
            {
                fail("objectiveList", "expected an array");
            }
            for (std::size_t k = 0; k < objectives->size(); ++k)
            {
                v.objective_list.push_back(waypoint((*objectives)[k], k));
            }
        }

        if (const json *hdg = find("hdg"))
        {
            v.hdg = number(*hdg, "hdg");
            if (!(v.hdg >= 0.0 && v.hdg < 360.0))
            {
                fail("hdg", "outside [0, 360)");
            }
        }
        else if (!v.objective_list.empty() && v.objective_list.front().position() != origin)
        {
            v.hdg = calc_angle_to_position(origin, v.objective_list.front().position());
        }
        return v;
    }

private:
    const json &entry_;
    std::size_t index_;
    const WorldBounds &bounds_;
};
} // namespace

Airspace parse_scenario(std::string_view text, WorldBounds bounds, SimulationOptions options)
{
    json doc;
    try
    {
        doc = json::parse(text.begin(), text.end());
    }
    catch (const json::parse_error &e)
    {
        throw ScenarioError(std::nullopt, "", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_array())
    {
        throw ScenarioError(std::nullopt, "", "scenario must be a JSON array of vehicle entries");
    }

    Airspace airspace(bounds, std::move(options));
    for (std::size_t i = 0; i < doc.size(); ++i)
    {
        EntryReader reader(doc[i], i, airspace.bounds());
        Vehicle v = reader.read();
        if (airspace.contains(v.id))
        {
            reader.fail("eVTOLid", "duplicate id " + std::to_string(v.id));
        }
        try
        {
            airspace.add_vehicle(std::move(v));
        }
        catch (const std::invalid_argument &e)
        {
            reader.fail("", e.what());
        }
    }
    return airspace;
}

Airspace load_scenario(const std::filesystem::path &path, WorldBounds bounds,
                       SimulationOptions options)
{
    return parse_scenario(read_text_file(path), std::move(bounds), std::move(options));
}

// ---------------------------------------------------------------------------
// Movement log CSV

std::string format_movement_log(std::span<const MovementRecord> log)
{
    std::vector<const MovementRecord *> rows;
    rows.reserve(log.size());
    for (const MovementRecord &r : log)
    {
        rows.push_back(&r);
    }
    std::stable_sort(rows.begin(), rows.end(), [](const MovementRecord *a, const MovementRecord *b) {
        return a->tick != b->tick ? a->tick < b->tick : a->id < b->id;
    });

    std::string out(kMovementLogHeader);
    out += '\n';
    char line[256];
    for (const MovementRecord *r : rows)
    {
        const std::string_view type = to_string(r->kind);
        const std::string_view phase = to_string(r->phase);
        const int n = std::snprintf(line, sizeof line, "%lld,%lld,%.*s,%.6f,%.6f,%.6f,%.6f,%.6f,%.*s,%d\n",
                                    static_cast<long long>(r->tick), static_cast<long long>(r->id),
                                    static_cast<int>(type.size()), type.data(), r->x, r->y, r->z,
                                    r->hdg, r->speed, static_cast<int>(phase.size()), phase.data(),
                                    r->delivered ? 1 : 0);
        out.append(line, static_cast<std::size_t>(n));
    }
    return out;
}

void write_movement_log(std::span<const MovementRecord> log, const std::filesystem::path &path)
{
    write_text_file(path, format_movement_log(log));
}

namespace
{
template <typename T> T parse_field(std::string_view s, std::size_t line, const char *field)
{
    T value{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
    {
        throw ScenarioError(line, field, "cannot parse '" + std::string(s) + "'");
    }
    return value;
}
} // namespace

std::vector<MovementRecord> parse_movement_log(std::string_view text)
{
    std::vector<MovementRecord> out;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (!text.empty())
    {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r')
        {
            line.remove_suffix(1);
        }
        if (!header_seen)
        {
            if (line != kMovementLogHeader)
            {
                throw ScenarioError(line_no, "header", "unexpected movement log header");
            }
            header_seen = true;
            continue;
        }
        if (line.empty())
        {
            continue;
        }

        std::vector<std::string_view> cells;
        std::size_t start = 0;
        while (true)
        {
            const std::size_t comma = line.find(',', start);
            cells.push_back(line.substr(start, comma - start));
            if (comma == std::string_view::npos)
            {
                break;
            }
            start = comma + 1;
        }
        if (cells.size() != 10)
        {
            throw ScenarioError(line_no, "row", "expected 10 columns");
        }

        MovementRecord r;
        r.tick = parse_field<Tick>(cells[0], line_no, "tick");
        r.id = parse_field<VehicleId>(cells[1], line_no, "id");
        const auto kind = parse_vehicle_type(cells[2]);
        if (!kind)
        {
            throw ScenarioError(line_no, "type", "unknown vehicle type");
        }
        r.kind = *kind;
        r.x = parse_field<double>(cells[3], line_no, "x_nm");
        r.y = parse_field<double>(cells[4], line_no, "y_nm");
        r.z = parse_field<double>(cells[5], line_no, "z_ft");
        r.hdg = parse_field<double>(cells[6], line_no, "hdg_deg");
        r.speed = parse_field<double>(cells[7], line_no, "speed_kts");
        const auto phase = parse_flight_phase(cells[8]);
        if (!phase)
        {
            throw ScenarioError(line_no, "phase", "unknown phase");
        }
        r.phase = *phase;
        const int delivered = parse_field<int>(cells[9], line_no, "delivered");
        if (delivered != 0 && delivered != 1)
        {
            throw ScenarioError(line_no, "delivered", "expected 0 or 1");
        }
        r.delivered = delivered == 1;
        out.push_back(r);
    }
    if (!header_seen)
    {
        throw ScenarioError(std::nullopt, "header", "empty movement log");
    }
    return out;
}

std::vector<MovementRecord> read_movement_log(const std::filesystem::path &path)
{
    return parse_movement_log(read_text_file(path));
}

// ---------------------------------------------------------------------------
// Report JSON

std::string format_report(const SimulationReport &report)
{
    ordered_json doc;
    doc["safe"] = report.safe;
    doc["total_ticks"] = report.total_ticks;
    doc["halt_reason"] = std::string(to_string(report.halt_reason));
    ordered_json deliveries = ordered_json::object();
    for (const auto &[id, tick] : report.delivery_ticks)
    {
        deliveries[std::to_string(id)] = tick;
    }
    doc["delivery_ticks"] = std::move(deliveries);
    ordered_json conflicts = ordered_json::array();
    for (const ConflictEvent &c : report.conflicts)
    {
        conflicts.push_back({{"a", c.a}, {"b", c.b}, {"tick", c.tick}});
    }
    doc["conflicts"] = std::move(conflicts);
    return doc.dump(2) + "\n";
}

void write_report(const SimulationReport &report, const std::filesystem::path &path)
{
    write_text_file(path, format_report(report));
}

} // namespace uam
