#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "types.hpp"

namespace fgcxr {

// One conjunction of lowercase whole words; a rule fires if any of its
// clauses has every word present in the sentence.
struct KeywordClause {
    std::vector<std::string> words;

    bool operator==(const KeywordClause&) const = default;
};

struct KeywordRule {
    RegionId region = RegionId::Heart;
    std::vector<KeywordClause> clauses;

    bool operator==(const KeywordRule&) const = default;
};

// `Containment`: a sentence fires every region whose rule matches (used
// for the gaze cutoff). `MostSpecific`: zoned matches suppress the parent
// lung so report text is not duplicated (default for report assembly).
enum class RoutingMode { Containment, MostSpecific };

RoutingMode routing_mode_from_name(const std::string& name);
const std::string& routing_mode_name(RoutingMode m);

class RoutingTable {
public:
    // The built-in anatomical keyword table.
    static const RoutingTable& builtin();

    // Override table from JSON: {"heart": [["cardiomegaly"], ...], ...}.
    static RoutingTable from_json_file(const std::string& path);

    explicit RoutingTable(std::vector<KeywordRule> rules);

    std::set<RegionId> route(const std::string& sentence,
                             RoutingMode mode = RoutingMode::Containment) const;

    // True if any clause of `region`'s rule matches the sentence.
    bool matches(const std::string& sentence, RegionId region) const;

    const std::vector<KeywordRule>& rules() const { return rules_; }

private:
    std::vector<KeywordRule> rules_;
};

// Splits on `.`, `!`, `?` followed by whitespace or end of input.
// Segments are trimmed and empty ones dropped.
std::vector<std::string> segment_sentences(const std::string& raw);

// Same split with timings attached positionally; the timing count must
// equal the segment count.
std::vector<TimedSentence> segment_sentences(const std::string& raw,
                                             const std::vector<std::pair<double, double>>& timings);

// Template report for a region with no dictated sentence. Findings marked
// present are joined alphabetically with " and ".
RegionReport fill_missing(RegionId region, const FindingLabels& labels);

// Exactly seven reports in RegionId order: dictated sentences routed under
// `mode`, the rest filled from templates.
std::vector<RegionReport> assemble_region_reports(const std::vector<TimedSentence>& transcript,
                                                  const FindingLabels& labels,
                                                  const RoutingTable& table,
                                                  RoutingMode mode = RoutingMode::MostSpecific);

} // namespace fgcxr
