#include "dfib/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace dfib {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string compact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

// Rows carry one status column; the first non-ok cell decides it.
CellStatus row_status(const std::vector<CellStatus>& cells) {
    for (CellStatus s : cells) {
        if (s != CellStatus::ok) {
            return s;
        }
    }
    return CellStatus::ok;
}

CellStatus status_from_string(const std::string& s) {
    if (s == "ok") return CellStatus::ok;
    if (s == "pole") return CellStatus::pole;
    if (s == "singular") return CellStatus::singular;
    throw DomainError("unknown status label: " + s);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, sep)) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') {
        throw DomainError("malformed numeric field: " + s);
    }
    return v;
}

nlohmann::json json_value(double v) {
    if (std::isnan(v)) {
        return nullptr;
    }
    return v;
}

}  // namespace

const char* to_string(CellStatus s) {
    switch (s) {
        case CellStatus::ok: return "ok";
        case CellStatus::pole: return "pole";
        case CellStatus::singular: return "singular";
    }
    return "ok";
}

std::string to_csv(const ShiftTable& t) {
    std::string out = "position,fibonacci";
    for (double g : t.gammas) {
        out += ",shift_gamma_" + compact(g);
    }
    out += ",status\n";
    for (std::size_t row = 0; row < t.positions.size(); ++row) {
        out += std::to_string(t.positions[row]);
        out += ',' + std::to_string(t.fibonacci_values[row]);
        for (std::size_t col = 0; col < t.gammas.size(); ++col) {
            out += ',';
            if (t.status[row][col] == CellStatus::ok) {
                out += fixed6(t.shifts[row][col]);
            }
        }
        out += ',';
        out += to_string(row_status(t.status[row]));
        out += '\n';
    }
    return out;
}

std::string to_csv(const SampleSeries& s) {
    std::string out = "x,value,status\n";
    for (const SamplePoint& p : s.points) {
        out += fixed6(p.x);
        out += ',';
        if (p.status == CellStatus::ok) {
            out += fixed6(p.value);
        }
        out += ',';
        out += to_string(p.status);
        out += '\n';
    }
    return out;
}

std::string to_csv(const InvariantReport& r) {
    std::string out = "x,value,status\n";
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
        out += fixed6(r.grid[i]);
        out += ',';
        if (r.valid[i]) {
            out += fixed6(r.values[i]);
            out += ",ok\n";
        } else {
            out += ",singular\n";
        }
    }
    out += "# mean=" + fixed6(r.mean) + '\n';
    out += "# max_abs_deviation=" + fixed6(r.max_abs_deviation) + '\n';
    out += "# closed_form=" + fixed6(r.closed_form) + '\n';
    return out;
}

std::string to_json(const ShiftTable& t) {
    nlohmann::json j;
    j["parity"] = to_string(t.parity);
    j["positions"] = t.positions;
    j["gammas"] = t.gammas;
    j["fibonacci"] = t.fibonacci_values;
    auto& shifts = j["shifts"] = nlohmann::json::array();
    auto& status = j["status"] = nlohmann::json::array();
    for (std::size_t row = 0; row < t.shifts.size(); ++row) {
        nlohmann::json vals = nlohmann::json::array();
        nlohmann::json stats = nlohmann::json::array();
        for (std::size_t col = 0; col < t.shifts[row].size(); ++col) {
            vals.push_back(json_value(t.shifts[row][col]));
            stats.push_back(to_string(t.status[row][col]));
        }
        shifts.push_back(std::move(vals));
        status.push_back(std::move(stats));
    }
    return j.dump(2) + "\n";
}

std::string to_json(const SampleSeries& s) {
    nlohmann::json j;
    j["function"] = s.function;
    j["parameters"] = s.parameters;
    auto& points = j["points"] = nlohmann::json::array();
    for (const SamplePoint& p : s.points) {
        nlohmann::json row;
        row["x"] = p.x;
        row["value"] = json_value(p.value);
        row["status"] = to_string(p.status);
        points.push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

std::string to_json(const InvariantReport& r) {
    nlohmann::json j;
    j["grid"] = r.grid;
    auto& values = j["values"] = nlohmann::json::array();
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        values.push_back(r.valid[i] ? json_value(r.values[i]) : nlohmann::json(nullptr));
    }
    j["mean"] = r.mean;
    j["max_abs_deviation"] = r.max_abs_deviation;
    j["closed_form"] = r.closed_form;
    return j.dump(2) + "\n";
}

ShiftTable parse_shift_table_csv(const std::string& text) {
    std::istringstream stream(text);
    std::string line;
    if (!std::getline(stream, line)) {
        throw DomainError("empty shift-table payload");
    }
    const auto header = split(line, ',');
    if (header.size() < 4 || header[0] != "position" || header[1] != "fibonacci"
        || header.back() != "status") {
        throw DomainError("unrecognized shift-table header");
    }
    ShiftTable table;
    const std::size_t ncols = header.size() - 3;
    const std::string prefix = "shift_gamma_";
    for (std::size_t c = 0; c < ncols; ++c) {
        const std::string& name = header[2 + c];
        if (name.rfind(prefix, 0) != 0) {
            throw DomainError("unrecognized shift column: " + name);
        }
        table.gammas.push_back(parse_double(name.substr(prefix.size())));
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    while (std::getline(stream, line)) {
        if (line.empty()) {
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != header.size()) {
            throw LengthMismatch("shift-table row width does not match header");
        }
        table.positions.push_back(static_cast<int>(parse_double(fields[0])));
        table.fibonacci_values.push_back(
            static_cast<std::uint64_t>(parse_double(fields[1])));
        const CellStatus rs = status_from_string(fields.back());
        std::vector<double> shifts;
        std::vector<CellStatus> status;
        for (std::size_t c = 0; c < ncols; ++c) {
            const std::string& cell = fields[2 + c];
            if (cell.empty()) {
                shifts.push_back(nan);
                status.push_back(rs == CellStatus::ok ? CellStatus::pole : rs);
            } else {
                shifts.push_back(parse_double(cell));
                status.push_back(CellStatus::ok);
            }
        }
        table.shifts.push_back(std::move(shifts));
        table.status.push_back(std::move(status));
    }
    // Parity is not encoded in the CSV; infer it from the first position.
    table.parity = (!table.positions.empty() && table.positions[0] % 2 == 0)
                       ? Parity::even
                       : Parity::odd;
    return table;
}

}  // namespace dfib
