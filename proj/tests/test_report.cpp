#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "dfib/constants.hpp"
#include "dfib/errors.hpp"
#include "dfib/report.hpp"
#include "dfib/sequences.hpp"

using namespace dfib;

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

ShiftTable handmade_table() {
    ShiftTable t;
    t.parity = Parity::odd;
    t.positions = {1, 3};
    t.gammas = {2.0, 0.5};
    t.fibonacci_values = {1, 2};
    t.shifts = {{-0.17634047352154235, 1.25}, {kNan, 2.0}};
    t.status = {{CellStatus::ok, CellStatus::ok}, {CellStatus::pole, CellStatus::ok}};
    return t;
}

SampleSeries handmade_series() {
    SampleSeries s;
    s.function = "fo";
    s.parameters = "parity=odd gamma=2";
    s.points = {{0.0, 0.8944271909999159, CellStatus::ok},
                {0.5, kNan, CellStatus::singular},
                {1.0, 1.0, CellStatus::ok}};
    return s;
}

InvariantReport handmade_invariant() {
    InvariantReport r;
    r.grid = {0.0, 0.5};
    r.values = {1.0, kNan};
    r.valid = {true, false};
    r.mean = 1.0;
    r.max_abs_deviation = 0.0;
    r.closed_form = 1.0;
    return r;
}

}  // namespace

TEST_CASE("status labels are stable") {
    CHECK(std::string(to_string(CellStatus::ok)) == "ok");
    CHECK(std::string(to_string(CellStatus::pole)) == "pole");
    CHECK(std::string(to_string(CellStatus::singular)) == "singular");
}

TEST_CASE("shift-table CSV bytes are pinned down") {
    const std::string expected =
        "position,fibonacci,shift_gamma_2,shift_gamma_0.5,status\n"
        "1,1,-0.176340,1.250000,ok\n"
        "3,2,,2.000000,pole\n";
    CHECK(to_csv(handmade_table()) == expected);
}

TEST_CASE("series and invariant CSV bytes are pinned down") {
    const std::string series_expected =
        "x,value,status\n"
        "0.000000,0.894427,ok\n"
        "0.500000,,singular\n"
        "1.000000,1.000000,ok\n";
    CHECK(to_csv(handmade_series()) == series_expected);

    const std::string invariant_expected =
        "x,value,status\n"
        "0.000000,1.000000,ok\n"
        "0.500000,,singular\n"
        "# mean=1.000000\n"
        "# max_abs_deviation=0.000000\n"
        "# closed_form=1.000000\n";
    CHECK(to_csv(handmade_invariant()) == invariant_expected);
}

TEST_CASE("parsing recovers the table and re-serializes byte-identically") {
    const std::string text = to_csv(handmade_table());
    const ShiftTable parsed = parse_shift_table_csv(text);
    CHECK(parsed.parity == Parity::odd);
    CHECK(parsed.positions == std::vector<int>{1, 3});
    CHECK(parsed.gammas == std::vector<double>{2.0, 0.5});
    CHECK(parsed.fibonacci_values == std::vector<std::uint64_t>{1, 2});
    CHECK(parsed.shifts[0][0] == -0.176340);
    CHECK(std::isnan(parsed.shifts[1][0]));
    CHECK(parsed.status[1][0] == CellStatus::pole);
    CHECK(parsed.status[1][1] == CellStatus::ok);
    CHECK(to_csv(parsed) == text);
}

TEST_CASE("round trips hold for generated tables of both parities") {
    for (Parity p : {Parity::even, Parity::odd}) {
        const ShiftTable t = shift_table(p, {2.0, 3.0, 4.0}, 5);
        const std::string text = to_csv(t);
        const ShiftTable parsed = parse_shift_table_csv(text);
        CHECK(to_csv(parsed) == text);
        CHECK(parsed.parity == p);
        REQUIRE(parsed.shifts.size() == t.shifts.size());
        for (std::size_t r = 0; r < t.shifts.size(); ++r) {
            for (std::size_t c = 0; c < t.gammas.size(); ++c) {
                // Values survive up to the fixed six-decimal rendering.
                CHECK(std::abs(parsed.shifts[r][c] - t.shifts[r][c]) <= 5e-7);
            }
        }
    }
}

TEST_CASE("malformed payloads raise typed errors") {
    CHECK_THROWS_AS(parse_shift_table_csv(""), DomainError);
    CHECK_THROWS_AS(parse_shift_table_csv("a,b,c,d\n"), DomainError);
    CHECK_THROWS_AS(parse_shift_table_csv("position,fibonacci,offset_2,status\n"),
                    DomainError);
    const std::string header = "position,fibonacci,shift_gamma_2,status\n";
    CHECK_THROWS_AS(parse_shift_table_csv(header + "1,1,ok\n"), LengthMismatch);
    CHECK_THROWS_AS(parse_shift_table_csv(header + "1,1,0.5,0.6,ok\n"), LengthMismatch);
    CHECK_THROWS_AS(parse_shift_table_csv(header + "x,1,0.5,ok\n"), DomainError);
    CHECK_THROWS_AS(parse_shift_table_csv(header + "1,1,0.5,fine\n"), DomainError);
    CHECK_THROWS_AS(parse_shift_table_csv(header + "1,1,0.5x,ok\n"), DomainError);
}

TEST_CASE("JSON payloads parse back with sorted keys and null gaps") {
    const nlohmann::json jt = nlohmann::json::parse(to_json(handmade_table()));
    CHECK(jt["parity"] == "odd");
    CHECK(jt["positions"] == nlohmann::json({1, 3}));
    CHECK(jt["gammas"][1] == 0.5);
    CHECK(jt["fibonacci"][1] == 2);
    CHECK(jt["shifts"][0][0] == -0.17634047352154235);  // full precision survives
    CHECK(jt["shifts"][1][0].is_null());
    CHECK(jt["status"][1][0] == "pole");

    const nlohmann::json js = nlohmann::json::parse(to_json(handmade_series()));
    CHECK(js["function"] == "fo");
    CHECK(js["parameters"] == "parity=odd gamma=2");
    CHECK(js["points"].size() == 3);
    CHECK(js["points"][0]["value"] == 0.8944271909999159);
    CHECK(js["points"][1]["value"].is_null());
    CHECK(js["points"][1]["status"] == "singular");

    const nlohmann::json ji = nlohmann::json::parse(to_json(handmade_invariant()));
    CHECK(ji.size() == 5);
    CHECK(ji.contains("closed_form"));
    CHECK(ji.contains("grid"));
    CHECK(ji.contains("max_abs_deviation"));
    CHECK(ji.contains("mean"));
    CHECK(ji.contains("values"));
    CHECK(ji["values"][0] == 1.0);
    CHECK(ji["values"][1].is_null());

    // Serialization is newline-terminated text.
    CHECK(to_json(handmade_table()).back() == '\n');
    CHECK(to_csv(handmade_series()).back() == '\n');
}
