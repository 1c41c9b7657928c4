#pragma once

#include <string>
#include <vector>

#include "dfib/ermakov.hpp"
#include "dfib/sequences.hpp"

namespace dfib {

enum class OutputFormat { csv, json };

const char* to_string(CellStatus s);

// One sampled function over a grid, tagged with the generating function
// and its parameters so emitted files are self-describing.
struct SamplePoint {
    double x = 0.0;
    double value = 0.0;
    CellStatus status = CellStatus::ok;
};

struct SampleSeries {
    std::string function;        // fc, fe, fo, A, B, F, G, potential, pinney, v_deformed
    std::string parameters;      // "parity=odd gamma=2 ..." or empty
    std::vector<SamplePoint> points;
};

// CSV: header row, %.6f values, LF endings, trailing status column.
// Pole/singular rows keep an empty value field.
std::string to_csv(const ShiftTable& t);
std::string to_csv(const SampleSeries& s);
std::string to_csv(const InvariantReport& r);

// JSON: full double precision (shortest round-trip form), keys sorted.
std::string to_json(const ShiftTable& t);
std::string to_json(const SampleSeries& s);
std::string to_json(const InvariantReport& r);

// Parses to_csv(ShiftTable) output; LengthMismatch / DomainError on a
// malformed payload. Re-serializing the result is byte-identical.
ShiftTable parse_shift_table_csv(const std::string& text);

}  // namespace dfib
