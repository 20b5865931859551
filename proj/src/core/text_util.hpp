#pragma once

#include <string>
#include <vector>

namespace fgcxr {

// Canonical text normalization shared by routing, NLG metrics, and the
// finding labeler: lowercase ASCII, punctuation mapped to space.
std::string normalize_text(const std::string& s);

// normalize_text + whitespace split. This is the toolkit's tokenization
// contract for every n-gram metric.
std::vector<std::string> tokenize(const std::string& s);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

std::string trim(const std::string& s);

std::string to_lower(const std::string& s);

// Shortest decimal form that round-trips the exact double (via
// std::to_chars). All text output of reals goes through this so that
// reruns are byte-identical.
std::string format_double(double value);

} // namespace fgcxr
