#pragma once

#include <iosfwd>
#include <string>

#include "types.hpp"

namespace fgcxr {

// Gaze log CSV. Header must be exactly `x,y,t_start,t_end`; one fixation
// per data row, kept in file order.
GazeSequence parse_gaze_log(std::istream& in);
GazeSequence parse_gaze_log_file(const std::string& path);

void write_gaze_log(std::ostream& out, const GazeSequence& gaze);
void write_gaze_log_file(const std::string& path, const GazeSequence& gaze);

} // namespace fgcxr
