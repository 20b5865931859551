#include "router.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "errors.hpp"
#include "text_util.hpp"

namespace fgcxr {

namespace {

std::vector<KeywordRule> builtin_rules() {
    auto clause = [](std::vector<std::string> words) { return KeywordClause{std::move(words)}; };
    return {
        {RegionId::Heart,
         {clause({"cardiomegaly"}), clause({"enlarged", "chest"}), clause({"heart"}),
          clause({"cardiac"}), clause({"mediastinum"})}},
        {RegionId::LeftLung, {clause({"left"})}},
        {RegionId::RightLung, {clause({"right"})}},
        {RegionId::UpperLeftLung,
         {clause({"upper", "left"}), clause({"apex", "left"}), clause({"mid", "left"}),
          clause({"apical", "left"}), clause({"top", "left"})}},
        {RegionId::UpperRightLung,
         {clause({"upper", "right"}), clause({"apex", "right"}), clause({"mid", "right"}),
          clause({"apical", "right"}), clause({"top", "right"})}},
        {RegionId::LowerLeftLung,
         {clause({"lower", "left"}), clause({"base", "left"}), clause({"bottom", "left"})}},
        {RegionId::LowerRightLung,
         {clause({"lower", "right"}), clause({"base", "right"}), clause({"bottom", "right"})}},
    };
}

bool clause_fires(const KeywordClause& clause,
                  const std::unordered_set<std::string>& words) {
    return std::all_of(clause.words.begin(), clause.words.end(),
                       [&](const std::string& w) { return words.contains(w); });
}

// Zoned lung regions are more specific than their parent lung.
std::optional<RegionId> parent_of(RegionId r) {
    switch (r) {
        case RegionId::UpperLeftLung:
        case RegionId::LowerLeftLung:
            return RegionId::LeftLung;
        case RegionId::UpperRightLung:
        case RegionId::LowerRightLung:
            return RegionId::RightLung;
        default:
            return std::nullopt;
    }
}

} // namespace

RoutingMode routing_mode_from_name(const std::string& name) {
    if (name == "containment") return RoutingMode::Containment;
    if (name == "most_specific") return RoutingMode::MostSpecific;
    throw_config("BadRoutingMode", "no routing mode named '" + name + "'");
}

const std::string& routing_mode_name(RoutingMode m) {
    static const std::string containment = "containment";
    static const std::string most_specific = "most_specific";
    return m == RoutingMode::Containment ? containment : most_specific;
}

RoutingTable::RoutingTable(std::vector<KeywordRule> rules) : rules_(std::move(rules)) {
    for (const auto& rule : rules_) {
        if (rule.clauses.empty())
            throw_config("BadRuleTable",
                         "region '" + region_key(rule.region) + "' has no clauses");
        for (const auto& clause : rule.clauses) {
            if (clause.words.empty())
                throw_config("BadRuleTable",
                             "region '" + region_key(rule.region) + "' has an empty clause");
            for (const auto& w : clause.words) {
                if (w != to_lower(trim(w)) || w.empty())
                    throw_config("BadRuleTable", "keyword '" + w + "' must be lowercase");
            }
        }
    }
}

const RoutingTable& RoutingTable::builtin() {
    static const RoutingTable table(builtin_rules());
    return table;
}

RoutingTable RoutingTable::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_config("UnreadableFile", "cannot open keyword rules '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw_config("BadRuleTable", std::string("keyword rules: ") + ex.what());
    }
    std::vector<KeywordRule> rules;
    for (RegionId r : kAllRegions) {
        if (!j.contains(region_key(r)))
            throw_config("BadRuleTable", "keyword rules missing region '" + region_key(r) + "'");
        KeywordRule rule{r, {}};
        for (const auto& clause : j.at(region_key(r))) {
            KeywordClause kc;
            for (const auto& w : clause) kc.words.push_back(w.get<std::string>());
            rule.clauses.push_back(std::move(kc));
        }
        rules.push_back(std::move(rule));
    }
    return RoutingTable(std::move(rules));
}

std::set<RegionId> RoutingTable::route(const std::string& sentence, RoutingMode mode) const {
    auto tokens = tokenize(sentence);
    std::unordered_set<std::string> words(tokens.begin(), tokens.end());

    std::set<RegionId> fired;
    for (const auto& rule : rules_) {
        for (const auto& clause : rule.clauses) {
            if (clause_fires(clause, words)) {
                fired.insert(rule.region);
                break;
            }
        }
    }
    if (mode == RoutingMode::MostSpecific) {
        std::set<RegionId> pruned = fired;
        for (RegionId r : fired) {
            if (auto parent = parent_of(r)) pruned.erase(*parent);
        }
        return pruned;
    }
    return fired;
}

bool RoutingTable::matches(const std::string& sentence, RegionId region) const {
    return route(sentence, RoutingMode::Containment).contains(region);
}

std::vector<std::string> segment_sentences(const std::string& raw) {
    std::vector<std::string> out;
    std::string cur;
    for (size_t i = 0; i < raw.size(); ++i) {
        char c = raw[i];
        if (c == '.' || c == '!' || c == '?') {
            bool at_end = i + 1 >= raw.size();
            bool before_space = !at_end && std::isspace(static_cast<unsigned char>(raw[i + 1]));
            if (at_end || before_space) {
                std::string seg = trim(cur);
                if (!seg.empty()) out.push_back(seg);
                cur.clear();
                continue;
            }
        }
        cur.push_back(c);
    }
    std::string seg = trim(cur);
    if (!seg.empty()) out.push_back(seg);
    return out;
}

std::vector<TimedSentence> segment_sentences(
    const std::string& raw, const std::vector<std::pair<double, double>>& timings) {
    auto segments = segment_sentences(raw);
    if (segments.size() != timings.size())
        throw_data("TimingMismatch", "got " + std::to_string(timings.size()) + " timings for " +
                                         std::to_string(segments.size()) + " sentences");
    std::vector<TimedSentence> out;
    out.reserve(segments.size());
    for (size_t i = 0; i < segments.size(); ++i)
        out.push_back({segments[i], timings[i].first, timings[i].second});
    return out;
}

RegionReport fill_missing(RegionId region, const FindingLabels& labels) {
    std::vector<std::string> present;
    for (const auto& [name, value] : labels) {
        if (value == LabelValue::Present) present.push_back(name);
    }
    std::sort(present.begin(), present.end());

    RegionReport report;
    report.region = region;
    if (present.empty()) {
        report.text = "the " + region_phrase(region) + " is possibly normal";
        report.source = ReportSource::TemplateNormal;
    } else {
        report.text = "the patient is possibly suffering from " + join(present, " and ") +
                      " in the " + region_phrase(region);
        report.source = ReportSource::TemplateFinding;
    }
    return report;
}

std::vector<RegionReport> assemble_region_reports(const std::vector<TimedSentence>& transcript,
                                                  const FindingLabels& labels,
                                                  const RoutingTable& table, RoutingMode mode) {
    std::vector<RegionReport> out;
    out.reserve(kRegionCount);
    for (RegionId region : kAllRegions) {
        RegionReport report;
        report.region = region;
        std::vector<std::string> sentences;
        for (size_t i = 0; i < transcript.size(); ++i) {
            if (table.route(transcript[i].text, mode).contains(region)) {
                sentences.push_back(transcript[i].text);
                report.matched_sentences.push_back(static_cast<int>(i));
            }
        }
        if (sentences.empty()) {
            out.push_back(fill_missing(region, labels));
        } else {
            report.text = join(sentences, ". ");
            report.source = ReportSource::Dictated;
            out.push_back(std::move(report));
        }
    }
    return out;
}

} // namespace fgcxr
