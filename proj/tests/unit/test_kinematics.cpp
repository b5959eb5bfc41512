#include "doctest.h"

#include "support/oracles.hpp"
#include "uamsim/kinematics.hpp"
#include "uamsim/separation.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace uam;

namespace
{
Vehicle cruising(Point p, double z, double hdg, std::vector<Waypoint> route)
{
    Vehicle v = make_vehicle(1, VehicleType::Piloted, p, route.back().position());
    v.z = z;
    v.hdg = hdg;
    v.phase = FlightPhase::Cruise;
    v.objective_list.assign(route.begin(), route.end());
    return v;
}

int ticks_in_phase(Vehicle &v, FlightPhase phase)
{
    int n = 0;
    while (v.phase == phase)
    {
        step_phase(v);
        ++n;
        REQUIRE(n < 100000);
    }
    return n;
}
} // namespace

TEST_CASE("distance per tick")
{
    CHECK(distance_per_tick(150) == doctest::Approx(0.0417).epsilon(1e-12));
    CHECK(distance_per_tick(130) == doctest::Approx(130 * 0.000278).epsilon(1e-12));
    CHECK(distance_per_tick(130) == doctest::Approx(0.03614).epsilon(1e-12));
    CHECK(distance_per_tick(170) == doctest::Approx(0.04726).epsilon(1e-12));
    CHECK_THROWS_AS(distance_per_tick(129.9), std::invalid_argument);
    CHECK_THROWS_AS(distance_per_tick(171), std::invalid_argument);
}

TEST_CASE("movement along the heading")
{
    Vehicle v = make_vehicle(1, VehicleType::Piloted, {10, 10}, {20, 10});
    v.hdg = 0;
    apply_movement_based_on_heading(v, 0.0417);
    CHECK(v.x == doctest::Approx(10.0417));
    CHECK(v.y == 10.0);

    v = make_vehicle(1, VehicleType::Piloted, {10, 10}, {20, 10});
    v.hdg = 90;
    apply_movement_based_on_heading(v, 0.0417);
    CHECK(v.x == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(v.y == doctest::Approx(10.0417));

    v = make_vehicle(1, VehicleType::Piloted, {10, 10}, {20, 10});
    v.hdg = 45;
    apply_movement_based_on_heading(v, 0.0417);
    const double leg = 0.0417 * std::sqrt(0.5);
    CHECK(v.x - 10 == doctest::Approx(leg).epsilon(1e-12));
    CHECK(v.y - 10 == doctest::Approx(leg).epsilon(1e-12));
    CHECK(leg == doctest::Approx(0.029487).epsilon(1e-5));
}

TEST_CASE("angle to position")
{
    CHECK(calc_angle_to_position({0, 0}, {1, 1}) == doctest::Approx(45));
    CHECK(calc_angle_to_position({0, 0}, {-1, 0}) == doctest::Approx(180));
    CHECK(calc_angle_to_position({4, 4}, {2, 2}) == doctest::Approx(225));
    CHECK(calc_angle_to_position({4, 2}, {2, 4}) == doctest::Approx(135));
    CHECK(calc_angle_to_position({0, 0}, {0, -1}) == doctest::Approx(270));
    CHECK_THROWS_AS(calc_angle_to_position({1, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("heading adjustment is rate limited along the shorter arc")
{
    CHECK(adjust_heading(0, 10, 7.2) == doctest::Approx(7.2));
    CHECK(adjust_heading(0, 5, 7.2) == 5);
    CHECK(adjust_heading(10, 350, 7.2) == doctest::Approx(2.8));
    CHECK(adjust_heading(2, 350, 7.2) == doctest::Approx(354.8));
    CHECK(adjust_heading(355, 5, 7.2) == doctest::Approx(2.2));
    CHECK(adjust_heading(90, 0, 7.2) == doctest::Approx(82.8));
}

TEST_CASE("speed adjustment")
{
    CHECK(adjust_speed(150, 150) == 150);
    CHECK(adjust_speed(150, 160) == 151);
    CHECK(adjust_speed(170, 150) == 168);
    CHECK(adjust_speed(150, 150.5) == 150.5);
    CHECK(adjust_speed(150, 149) == 149);
}

TEST_CASE("altitude adjustment")
{
    CHECK(adjust_altitude(1000, 1000) == 1000);
    CHECK(adjust_altitude(1000, 1200) == doctest::Approx(1000 + 500.0 / 60.0).epsilon(1e-12));
    CHECK(adjust_altitude(1000, 1200) == doctest::Approx(1008.3333).epsilon(1e-7));
    CHECK(adjust_altitude(1003, 1000) == 1000);
    CHECK(adjust_altitude(1200, 1000) == doctest::Approx(1200 - 500.0 / 60.0));
}

TEST_CASE("waypoint arrival")
{
    const Waypoint wp{20, 5, 1000, 150};
    Vehicle v = cruising({19.98, 5}, 1000, 0, {wp});
    CHECK(waypoint_reached(v, wp));
    CHECK(v.x == 20);
    CHECK(v.y == 5);

    v = cruising({19.9, 5}, 1000, 0, {wp});
    CHECK_FALSE(waypoint_reached(v, wp));
    CHECK(v.x == 19.9);

    v = cruising({20, 5}, 900, 0, {wp});
    CHECK_FALSE(waypoint_reached(v, wp));
}

TEST_CASE("follow")
{
    SUBCASE("straight line")
    {
        Vehicle v = cruising({10, 5}, 1000, 0, {{20, 5, 1000, 150}});
        follow(v);
        CHECK(v.x == doctest::Approx(10.0417).epsilon(1e-12));
        CHECK(v.y == 5);
        CHECK(v.hdg == 0);
        CHECK(v.objective_list.size() == 1);
    }
    SUBCASE("turn is clamped")
    {
        Vehicle v = cruising({10, 5}, 1000, 90, {{20, 5, 1000, 150}});
        follow(v);
        CHECK(v.hdg == doctest::Approx(82.8));
    }
    SUBCASE("half a tick from the final waypoint")
    {
        Vehicle v = cruising({20 - 0.0417 * 1.5, 5}, 1000, 0, {{20, 5, 1000, 150}});
        follow(v);
        CHECK(v.objective_list.empty());
        CHECK(v.x == 20);
        CHECK(v.y == 5);
    }
    SUBCASE("empty objective list is a bug")
    {
        Vehicle v = cruising({10, 5}, 1000, 0, {{20, 5, 1000, 150}});
        v.objective_list.clear();
        CHECK_THROWS_AS(follow(v), std::logic_error);
    }
    SUBCASE("waypoint straight above")
    {
        Vehicle v = cruising({10, 5}, 1000, 0, {{10, 5, 1200, 150}, {20, 5, 1200, 150}});
        int ticks = 0;
        while (v.objective_list.size() == 2)
        {
            follow(v);
            CHECK(v.x == 10);
            ++ticks;
        }
        // Arrival allows one tick of vertical slack, so the fix may be
        // captured one tick before the climb would complete.
        CHECK(ticks >= testing::vertical_ticks(200) - 1);
        CHECK(ticks <= testing::vertical_ticks(200));
    }
}

TEST_CASE("take-off climb duration")
{
    SUBCASE("eastbound first leg climbs to 1000 ft")
    {
        Vehicle v = make_vehicle(1, VehicleType::Piloted, {10, 5}, {20, 5});
        v.objective_list.push_back({20, 5, 1000, 150});
        begin_takeoff(v);
        CHECK(v.takeoff_fix_z == 1000);
        const int climb = ticks_in_phase(v, FlightPhase::TakeoffClimb);
        CHECK(climb == testing::vertical_ticks(1000 - 100));
        CHECK(climb == 108);
        CHECK(v.x == 10);
        CHECK(v.y == 5);
    }
    SUBCASE("south-west first leg climbs to 1200 ft")
    {
        Vehicle v = make_vehicle(1, VehicleType::Piloted, {4, 4}, {2, 2});
        v.objective_list.push_back({2, 2, 1200, 150});
        begin_takeoff(v);
        CHECK(v.takeoff_fix_z == 1200);
        CHECK(ticks_in_phase(v, FlightPhase::TakeoffClimb) == 132);
    }
    SUBCASE("forced level")
    {
        Vehicle v = make_vehicle(1, VehicleType::Piloted, {4, 4}, {2, 2});
        v.objective_list.push_back({2, 2, 1000, 150});
        begin_takeoff(v, {}, 1000.0);
        CHECK(v.takeoff_fix_z == 1000);
    }
    SUBCASE("stepping a scheduled vehicle is a bug")
    {
        Vehicle v = make_vehicle(1, VehicleType::Piloted, {4, 4}, {2, 2});
        CHECK_THROWS_AS(step_phase(v), std::logic_error);
    }
}

TEST_CASE("landing spiral")
{
    Vehicle v = cruising({20 - 0.0417 * 0.5, 5}, 1000, 0, {{20, 5, 1000, 150}});
    step_phase(v);
    REQUIRE(v.phase == FlightPhase::LandingSpiral);

    const double radius = 0.0417 / (7.2 * std::numbers::pi / 180.0);
    CHECK(spiral_radius(v) == doctest::Approx(radius).epsilon(1e-12));
    CHECK(radius == doctest::Approx(0.332).epsilon(1e-3));

    int ticks = 0;
    double last_hdg = v.hdg;
    while (v.phase == FlightPhase::LandingSpiral)
    {
        step_phase(v);
        ++ticks;
        if (v.phase == FlightPhase::LandingSpiral)
        {
            CHECK(euclidean_distance(v.position(), {20, 5}) == doctest::Approx(radius).epsilon(1e-9));
            CHECK(heading_difference(last_hdg, v.hdg) == doctest::Approx(7.2));
        }
        last_hdg = v.hdg;
    }
    CHECK(ticks == testing::vertical_ticks(1000 - 100));
    CHECK(v.delivered);
    CHECK(v.x == 20);
    CHECK(v.y == 5);
    CHECK(v.z == 100);

    // Delivered is absorbing.
    const Vehicle before = v;
    for (int i = 0; i < 10; ++i)
    {
        step_phase(v);
    }
    CHECK(v.x == before.x);
    CHECK(v.y == before.y);
    CHECK(v.z == before.z);
    CHECK(v.phase == FlightPhase::Delivered);
}

TEST_CASE("straight legs take ceil(L / 0.0417) ticks")
{
    for (double length : {0.5, 1.0, 2.5, 7.3, 10.0, 14.142})
    {
        Vehicle v = cruising({5, 5}, 1000, 0, {{5 + length, 5, 1000, 150}});
        int ticks = 0;
        while (!v.objective_list.empty())
        {
            follow(v);
            ++ticks;
        }
        const auto expected = static_cast<int>(std::ceil(length / 0.0417));
        CHECK(std::abs(ticks - expected) <= 1);
    }
}

TEST_CASE("turning circle matches the continuous radius within 1%")
{
    for (double speed : {130.0, 150.0, 170.0})
    {
        Vehicle v = cruising({15, 15}, 1000, 30, {{29, 29, 1000, speed}});
        v.speed = speed;
        std::vector<Point> points;
        for (int i = 0; i < 50; ++i) // 50 ticks of 7.2 degrees: one revolution
        {
            v.hdg = adjust_heading(v.hdg, v.hdg + 90.0, 7.2);
            apply_movement_based_on_heading(v, distance_per_tick(speed));
            points.push_back(v.position());
        }
        Point center{};
        for (const Point &p : points)
        {
            center.x += p.x / points.size();
            center.y += p.y / points.size();
        }
        const double continuous = distance_per_tick(speed) / (7.2 * std::numbers::pi / 180.0);
        for (const Point &p : points)
        {
            CHECK(std::abs(euclidean_distance(p, center) - continuous) <= 0.01 * continuous);
        }
    }
}

TEST_CASE("heading adjustment never overshoots")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(0.0, 360.0);
    for (int i = 0; i < 2000; ++i)
    {
        double current = angle(rng);
        const double desired = angle(rng);
        double remaining = heading_difference(current, desired);
        for (int k = 0; k < 30 && remaining != 0.0; ++k)
        {
            current = adjust_heading(current, desired, 7.2);
            const double next = heading_difference(current, desired);
            // Exactly opposite headings may resolve either way; otherwise the
            // sign of the remaining arc is preserved until it reaches zero.
            if (std::abs(remaining) < 180.0 - 7.2)
            {
                REQUIRE((next == 0.0 || std::signbit(next) == std::signbit(remaining)));
            }
            REQUIRE(std::abs(next) <= std::abs(remaining) + 1e-9);
            remaining = next;
        }
        CHECK(remaining == doctest::Approx(0.0).epsilon(1e-9));
    }
}
