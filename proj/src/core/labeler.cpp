#include "labeler.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "errors.hpp"
#include "router.hpp"
#include "text_util.hpp"

using ordered_json = nlohmann::ordered_json;

namespace fgcxr {

namespace {

LabelerRules make_builtin() {
    LabelerRules r;
    r.version = "builtin-1";
    r.negation_cues = {"no", "without", "free of", "resolved", "clear of"};
    auto add = [&](std::string name, std::vector<std::vector<std::string>> clauses) {
        r.findings.push_back({std::move(name), std::move(clauses)});
    };
    add("atelectasis", {{"atelectasis"}, {"atelectatic"}, {"collapse"}});
    add("cardiomegaly", {{"cardiomegaly"}, {"heart", "enlarged"}, {"cardiac", "enlargement"}});
    add("consolidation", {{"consolidation"}, {"consolidations"}});
    add("edema", {{"edema"}, {"vascular", "congestion"}});
    add("enlarged_cardiomediastinum",
        {{"mediastinum", "enlarged"}, {"mediastinal", "widening"}, {"cardiomediastinal", "enlargement"}});
    add("fracture", {{"fracture"}, {"fractures"}});
    add("lung_lesion", {{"lesion"}, {"nodule"}, {"mass"}});
    add("lung_opacity", {{"opacity"}, {"opacities"}, {"opacification"}});
    add("no_finding", {{"normal"}, {"unremarkable"}});
    add("pleural_effusion", {{"effusion"}, {"effusions"}});
    add("pleural_other", {{"pleural", "thickening"}, {"pleural", "scarring"}, {"fibrothorax"}});
    add("pneumonia", {{"pneumonia"}, {"infection"}, {"infectious", "process"}});
    add("pneumothorax", {{"pneumothorax"}, {"pneumothoraces"}});
    add("support_devices", {{"tube"}, {"catheter"}, {"pacemaker"}, {"pacer"}, {"wires"}});
    return r;
}

// Earliest token index at which every word of the clause has appeared,
// i.e. the index of the latest first-occurrence among clause words.
// Returns -1 when the clause does not match.
int clause_match_position(const std::vector<std::string>& tokens,
                          const std::vector<std::string>& clause) {
    int position = -1;
    for (const auto& word : clause) {
        auto it = std::find(tokens.begin(), tokens.end(), word);
        if (it == tokens.end()) return -1;
        position = std::max(position, static_cast<int>(it - tokens.begin()));
    }
    return position;
}

// Token index of the first occurrence of a (possibly multi-word) cue.
int cue_position(const std::vector<std::string>& tokens,
                 const std::vector<std::string>& cue_words) {
    if (cue_words.empty() || tokens.size() < cue_words.size()) return -1;
    for (size_t i = 0; i + cue_words.size() <= tokens.size(); ++i) {
        bool all = true;
        for (size_t j = 0; j < cue_words.size(); ++j) {
            if (tokens[i + j] != cue_words[j]) {
                all = false;
                break;
            }
        }
        if (all) return static_cast<int>(i);
    }
    return -1;
}

} // namespace

const LabelerRules& LabelerRules::builtin() {
    static const LabelerRules rules = make_builtin();
    return rules;
}

LabelerRules LabelerRules::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_config("UnreadableFile", "cannot open labeler rules '" + path + "'");
    ordered_json j;
    try {
        in >> j;
    } catch (const ordered_json::exception& ex) {
        throw_config("BadRuleTable", std::string("labeler rules: ") + ex.what());
    }
    LabelerRules r;
    r.version = j.value("version", std::string("unversioned"));
    if (j.contains("negation_cues"))
        for (const auto& c : j.at("negation_cues")) r.negation_cues.push_back(c.get<std::string>());
    else
        r.negation_cues = builtin().negation_cues;
    if (!j.contains("findings") || j.at("findings").empty())
        throw_config("BadRuleTable", "labeler rules define no findings");
    for (auto it = j.at("findings").begin(); it != j.at("findings").end(); ++it) {
        FindingRule rule;
        rule.name = it.key();
        for (const auto& clause : it.value()) {
            std::vector<std::string> words;
            for (const auto& w : clause) words.push_back(to_lower(w.get<std::string>()));
            if (words.empty()) throw_config("BadRuleTable", "empty clause for '" + rule.name + "'");
            rule.clauses.push_back(std::move(words));
        }
        if (rule.clauses.empty())
            throw_config("BadRuleTable", "finding '" + rule.name + "' has no clauses");
        r.findings.push_back(std::move(rule));
    }
    return r;
}

void LabelerRules::to_json_file(const std::string& path) const {
    ordered_json j;
    j["version"] = version;
    j["negation_cues"] = negation_cues;
    ordered_json findings_json = ordered_json::object();
    for (const auto& rule : findings) findings_json[rule.name] = rule.clauses;
    j["findings"] = findings_json;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_data("UnwritableFile", "cannot create rules file '" + path + "'");
    out << j.dump(2) << "\n";
}

std::vector<std::string> LabelerRules::finding_names() const {
    std::vector<std::string> names;
    names.reserve(findings.size());
    for (const auto& f : findings) names.push_back(f.name);
    return names;
}

FindingVector label_findings(const std::string& report, const LabelerRules& rules) {
    if (rules.findings.empty()) throw_config("BadRuleTable", "labeler rule set is empty");

    std::vector<std::vector<std::string>> cue_tokens;
    cue_tokens.reserve(rules.negation_cues.size());
    for (const auto& cue : rules.negation_cues) cue_tokens.push_back(tokenize(cue));

    FindingVector out;
    for (const auto& rule : rules.findings) out[rule.name] = 0;

    for (const std::string& sentence : segment_sentences(report)) {
        auto tokens = tokenize(sentence);
        int first_cue = std::numeric_limits<int>::max();
        bool any_cue = false;
        for (const auto& cue : cue_tokens) {
            int pos = cue_position(tokens, cue);
            if (pos >= 0) {
                first_cue = std::min(first_cue, pos);
                any_cue = true;
            }
        }
        for (const auto& rule : rules.findings) {
            if (out[rule.name] == 1) continue;
            for (const auto& clause : rule.clauses) {
                int pos = clause_match_position(tokens, clause);
                if (pos < 0) continue;
                if (any_cue && first_cue < pos) continue; // negated mention
                out[rule.name] = 1;
                break;
            }
        }
    }
    return out;
}

namespace {

double safe_div(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

double f1_of(double p, double r) { return (p + r) == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

} // namespace

CeScores ce_scores(const std::vector<FindingVector>& pred, const std::vector<FindingVector>& gt) {
    if (pred.size() != gt.size())
        throw_data("LengthMismatch", "prediction and ground-truth sample counts differ");
    if (pred.empty()) throw_data("EmptyCorpus", "CE corpus is empty");

    const auto& categories = gt.front();
    for (size_t i = 0; i < pred.size(); ++i) {
        auto same_keys = [&](const FindingVector& v) {
            if (v.size() != categories.size()) return false;
            auto a = v.begin();
            auto b = categories.begin();
            for (; a != v.end(); ++a, ++b)
                if (a->first != b->first) return false;
            return true;
        };
        if (!same_keys(pred[i]) || !same_keys(gt[i]))
            throw_data("CategoryMismatch", "finding vectors use different category sets");
    }

    CeScores s;

    // Micro: pool cells.
    long long tp = 0, fp = 0, fn = 0;
    for (size_t i = 0; i < pred.size(); ++i) {
        auto p = pred[i].begin();
        auto g = gt[i].begin();
        for (; p != pred[i].end(); ++p, ++g) {
            tp += (p->second == 1 && g->second == 1);
            fp += (p->second == 1 && g->second == 0);
            fn += (p->second == 0 && g->second == 1);
        }
    }
    s.p_micro = safe_div(static_cast<double>(tp), static_cast<double>(tp + fp));
    s.r_micro = safe_div(static_cast<double>(tp), static_cast<double>(tp + fn));
    s.f1_micro = f1_of(s.p_micro, s.r_micro);

    // Macro: per finding.
    double pm = 0, rm = 0, fm = 0;
    for (const auto& [name, _] : categories) {
        long long ftp = 0, ffp = 0, ffn = 0;
        for (size_t i = 0; i < pred.size(); ++i) {
            int pv = pred[i].at(name);
            int gv = gt[i].at(name);
            ftp += (pv == 1 && gv == 1);
            ffp += (pv == 1 && gv == 0);
            ffn += (pv == 0 && gv == 1);
        }
        double p = safe_div(static_cast<double>(ftp), static_cast<double>(ftp + ffp));
        double r = safe_div(static_cast<double>(ftp), static_cast<double>(ftp + ffn));
        pm += p;
        rm += r;
        fm += f1_of(p, r);
    }
    double n_findings = static_cast<double>(categories.size());
    s.p_macro = pm / n_findings;
    s.r_macro = rm / n_findings;
    s.f1_macro = fm / n_findings;

    // Example-based: per sample.
    double pe = 0, re = 0, fe = 0;
    for (size_t i = 0; i < pred.size(); ++i) {
        long long stp = 0, spos_pred = 0, spos_gt = 0;
        auto p = pred[i].begin();
        auto g = gt[i].begin();
        for (; p != pred[i].end(); ++p, ++g) {
            stp += (p->second == 1 && g->second == 1);
            spos_pred += (p->second == 1);
            spos_gt += (g->second == 1);
        }
        if (spos_pred == 0 && spos_gt == 0) {
            pe += 1.0;
            re += 1.0;
            fe += 1.0;
            continue;
        }
        double p_s = safe_div(static_cast<double>(stp), static_cast<double>(spos_pred));
        double r_s = safe_div(static_cast<double>(stp), static_cast<double>(spos_gt));
        pe += p_s;
        re += r_s;
        fe += f1_of(p_s, r_s);
    }
    double n_samples = static_cast<double>(pred.size());
    s.p_example = pe / n_samples;
    s.r_example = re / n_samples;
    s.f1_example = fe / n_samples;
    return s;
}

} // namespace fgcxr
