#pragma once

#include <map>
#include <string>
#include <vector>

namespace fgcxr {

// Keyword-clause labeler standing in for a full NLP pipeline. A finding
// is positive iff any of its clauses fully matches a sentence and no
// negation cue appears earlier in that sentence.
struct FindingRule {
    std::string name;
    std::vector<std::vector<std::string>> clauses; // each inner list: all words required
};

struct LabelerRules {
    std::string version;
    std::vector<FindingRule> findings;
    std::vector<std::string> negation_cues; // may be multi-word phrases

    // The 14 CheXpert-style categories with keyword defaults.
    static const LabelerRules& builtin();
    static LabelerRules from_json_file(const std::string& path);
    void to_json_file(const std::string& path) const;

    std::vector<std::string> finding_names() const;
};

// 1 = present, 0 = absent, keyed exactly by the rule set's finding names.
using FindingVector = std::map<std::string, int>;

FindingVector label_findings(const std::string& report, const LabelerRules& rules);

struct CeScores {
    double p_micro = 0.0, r_micro = 0.0, f1_micro = 0.0;
    double p_macro = 0.0, r_macro = 0.0, f1_macro = 0.0;
    double p_example = 0.0, r_example = 0.0, f1_example = 0.0;
};

// Micro: TP/FP/FN pooled over every (sample, finding) cell. Macro:
// per-finding P/R/F1 averaged over findings, 0-convention for 0/0.
// Example-based: per-sample scores averaged over samples; a sample with
// empty ground truth and empty prediction scores 1.
CeScores ce_scores(const std::vector<FindingVector>& pred, const std::vector<FindingVector>& gt);

} // namespace fgcxr
