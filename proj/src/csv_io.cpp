#include "kerrcoupler/csv_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace kerrcoupler {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_echo(std::ostream& os, const ConfigEcho& echo) {
    for (const auto& [key, value] : echo) {
        os << "# " << key << '=' << value << '\n';
    }
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const ConfigEcho& echo, double time_factor) {
    write_echo(os, echo);
    os << kTrajectoryHeader << '\n';
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const auto& r = traj.records[i];
        os << format_double(traj.times[i] * time_factor) << ',' << format_double(r.concurrence) << ','
           << format_double(r.fid_b1) << ',' << format_double(r.fid_b2) << ',' << format_double(r.fid_b3) << ','
           << format_double(r.trace) << ',' << format_double(r.purity) << ',' << format_double(r.mean_na) << ','
           << format_double(r.mean_nb) << '\n';
    }
}

namespace {

double parse_field(const std::string& text, std::size_t line) {
    if (text.empty()) {
        throw CsvError("empty numeric field on line " + std::to_string(line), line);
    }
    const char* begin = text.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (end != begin + text.size() || errno == ERANGE) {
        throw CsvError("malformed number '" + text + "' on line " + std::to_string(line), line);
    }
    return v;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

}  // namespace

TrajectoryTable read_trajectory_csv(std::istream& is) {
    TrajectoryTable table;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            const auto eq = line.find('=');
            if (eq != std::string::npos) {
                std::string key = line.substr(1, eq - 1);
                key.erase(0, key.find_first_not_of(' '));
                table.echo[key] = line.substr(eq + 1);
            }
            continue;
        }
        if (!header_seen) {
            if (line != kTrajectoryHeader) {
                throw CsvError("unexpected trajectory header on line " + std::to_string(line_no), line_no);
            }
            header_seen = true;
            continue;
        }
        const auto fields = split(line);
        if (fields.size() != 9) {
            throw CsvError("expected 9 fields on line " + std::to_string(line_no) + ", found " +
                               std::to_string(fields.size()),
                           line_no);
        }
        const double t = parse_field(fields[0], line_no);
        if (!table.trajectory.times.empty() && !(t > table.trajectory.times.back())) {
            throw CsvError("time not strictly increasing on line " + std::to_string(line_no), line_no);
        }
        ObservableRecord r;
        r.concurrence = parse_field(fields[1], line_no);
        r.fid_b1 = parse_field(fields[2], line_no);
        r.fid_b2 = parse_field(fields[3], line_no);
        r.fid_b3 = parse_field(fields[4], line_no);
        r.trace = parse_field(fields[5], line_no);
        r.purity = parse_field(fields[6], line_no);
        r.mean_na = parse_field(fields[7], line_no);
        r.mean_nb = parse_field(fields[8], line_no);
        table.trajectory.times.push_back(t);
        table.trajectory.records.push_back(r);
    }
    if (!header_seen) {
        throw CsvError("missing trajectory header", line_no);
    }
    if (table.trajectory.empty()) {
        throw CsvError("trajectory file contains no samples", line_no);
    }
    return table;
}

void write_event_csv(std::ostream& os, const std::vector<DeathInterval>& intervals,
                     const std::vector<BirthEvent>& births, const ConfigEcho& echo) {
    write_echo(os, echo);
    os << kEventHeader << '\n';
    for (std::size_t k = 0; k < intervals.size(); ++k) {
        const auto& iv = intervals[k];
        os << format_double(iv.t_start) << ',' << format_double(iv.t_end) << ',' << format_double(iv.duration())
           << ',';
        for (const auto& b : births) {
            if (b.interval_index == k) {
                os << format_double(b.time);
                break;
            }
        }
        os << '\n';
    }
}

}  // namespace kerrcoupler
