#include "gaze_log.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "text_util.hpp"

namespace fgcxr {

namespace {

constexpr const char* kHeader = "x,y,t_start,t_end";

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

long parse_int_field(const std::string& s, int line_no, const char* name) {
    std::string t = trim(s);
    long value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw_data("NonNumericField",
                   "line " + std::to_string(line_no) + ": field '" + std::string(name) +
                       "' is not an integer: '" + s + "'");
    return value;
}

double parse_real_field(const std::string& s, int line_no, const char* name) {
    std::string t = trim(s);
    if (t.empty())
        throw_data("NonNumericField",
                   "line " + std::to_string(line_no) + ": field '" + std::string(name) + "' is empty");
    char* end = nullptr;
    double value = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        throw_data("NonNumericField",
                   "line " + std::to_string(line_no) + ": field '" + std::string(name) +
                       "' is not a number: '" + s + "'");
    return value;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

} // namespace

GazeSequence parse_gaze_log(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw_data("MalformedRow", "line 1: missing header '" + std::string(kHeader) + "'");
    if (strip_cr(line) != kHeader)
        throw_data("MalformedRow",
                   "line 1: expected header '" + std::string(kHeader) + "', got '" + line + "'");

    GazeSequence gaze;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (trim(line).empty()) continue;
        auto fields = split_csv_row(line);
        if (fields.size() != 4)
            throw_data("MalformedRow", "line " + std::to_string(line_no) + ": expected 4 fields, got " +
                                           std::to_string(fields.size()));
        Fixation f;
        long x = parse_int_field(fields[0], line_no, "x");
        long y = parse_int_field(fields[1], line_no, "y");
        if (x < 0 || y < 0)
            throw_data("MalformedRow",
                       "line " + std::to_string(line_no) + ": negative coordinate");
        f.x = static_cast<int>(x);
        f.y = static_cast<int>(y);
        f.t_start = parse_real_field(fields[2], line_no, "t_start");
        f.t_end = parse_real_field(fields[3], line_no, "t_end");
        if (f.t_start < 0.0)
            throw_data("MalformedRow",
                       "line " + std::to_string(line_no) + ": negative t_start");
        if (f.t_end < f.t_start)
            throw_data("DurationNegative",
                       "line " + std::to_string(line_no) + ": t_end < t_start");
        gaze.fixations.push_back(f);
    }
    return gaze;
}

GazeSequence parse_gaze_log_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_data("UnreadableFile", "cannot open gaze log '" + path + "'");
    try {
        return parse_gaze_log(in);
    } catch (const Error& e) {
        throw Error(e.kind(), e.code(), std::string("in '") + path + "': " + e.what());
    }
}

void write_gaze_log(std::ostream& out, const GazeSequence& gaze) {
    out << kHeader << "\n";
    for (const auto& f : gaze.fixations) {
        out << f.x << ',' << f.y << ',' << format_double(f.t_start) << ','
            << format_double(f.t_end) << '\n';
    }
}

void write_gaze_log_file(const std::string& path, const GazeSequence& gaze) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_data("UnwritableFile", "cannot create gaze log '" + path + "'");
    write_gaze_log(out, gaze);
}

} // namespace fgcxr
