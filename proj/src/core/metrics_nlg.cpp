#include "metrics_nlg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "errors.hpp"
#include "text_util.hpp"

namespace fgcxr {

namespace {

using Tokens = std::vector<std::string>;
using NgramCounts = std::map<std::vector<std::string>, long long>;

void check_corpus(const std::vector<std::string>& candidates,
                  const std::vector<std::string>& references) {
    if (candidates.empty()) throw_data("EmptyCorpus", "metric corpus is empty");
    if (candidates.size() != references.size())
        throw_data("LengthMismatch", "candidate and reference corpora differ in size");
}

NgramCounts ngram_counts(const Tokens& tokens, int n) {
    NgramCounts counts;
    if (static_cast<int>(tokens.size()) < n) return counts;
    for (size_t i = 0; i + n <= tokens.size(); ++i) {
        std::vector<std::string> gram(tokens.begin() + static_cast<long>(i),
                                      tokens.begin() + static_cast<long>(i + n));
        ++counts[gram];
    }
    return counts;
}

long long lcs_length(const Tokens& a, const Tokens& b) {
    if (a.empty() || b.empty()) return 0;
    std::vector<long long> prev(b.size() + 1, 0);
    std::vector<long long> cur(b.size() + 1, 0);
    for (size_t i = 1; i <= a.size(); ++i) {
        for (size_t j = 1; j <= b.size(); ++j) {
            if (a[i - 1] == b[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

} // namespace

double bleu(const std::vector<std::string>& candidates,
            const std::vector<std::string>& references, int n) {
    check_corpus(candidates, references);
    if (n < 1 || n > 4) throw_config("BadOrder", "BLEU order must be 1..4");

    std::vector<Tokens> cand(candidates.size()), ref(references.size());
    for (size_t i = 0; i < candidates.size(); ++i) {
        cand[i] = tokenize(candidates[i]);
        ref[i] = tokenize(references[i]);
    }

    long long c_len = 0;
    long long r_len = 0;
    for (size_t i = 0; i < cand.size(); ++i) {
        c_len += static_cast<long long>(cand[i].size());
        r_len += static_cast<long long>(ref[i].size());
    }
    if (c_len == 0) return 0.0;

    double log_prec_sum = 0.0;
    for (int order = 1; order <= n; ++order) {
        long long matched = 0;
        long long total = 0;
        for (size_t i = 0; i < cand.size(); ++i) {
            NgramCounts cc = ngram_counts(cand[i], order);
            NgramCounts rc = ngram_counts(ref[i], order);
            for (const auto& [gram, count] : cc) {
                total += count;
                auto it = rc.find(gram);
                if (it != rc.end()) matched += std::min(count, it->second);
            }
        }
        if (total == 0 || matched == 0) return 0.0;
        log_prec_sum += std::log(static_cast<double>(matched) / static_cast<double>(total));
    }

    double bp = std::exp(std::min(0.0, 1.0 - static_cast<double>(r_len) / static_cast<double>(c_len)));
    return bp * std::exp(log_prec_sum / n);
}

double rouge_l(const std::vector<std::string>& candidates,
               const std::vector<std::string>& references) {
    check_corpus(candidates, references);
    constexpr double kBeta2 = 1.2 * 1.2;

    double total = 0.0;
    for (size_t i = 0; i < candidates.size(); ++i) {
        Tokens c = tokenize(candidates[i]);
        Tokens r = tokenize(references[i]);
        if (c.empty() || r.empty()) continue; // pair scores 0
        long long lcs = lcs_length(c, r);
        if (lcs == 0) continue;
        double p = static_cast<double>(lcs) / static_cast<double>(c.size());
        double rec = static_cast<double>(lcs) / static_cast<double>(r.size());
        total += (1.0 + kBeta2) * p * rec / (rec + kBeta2 * p);
    }
    return total / static_cast<double>(candidates.size());
}

double cider(const std::vector<std::string>& candidates,
             const std::vector<std::string>& references) {
    check_corpus(candidates, references);
    constexpr int kMaxOrder = 4;
    constexpr double kLengthSigma = 6.0;

    const size_t n_docs = candidates.size();
    std::vector<Tokens> cand(n_docs), ref(n_docs);
    for (size_t i = 0; i < n_docs; ++i) {
        cand[i] = tokenize(candidates[i]);
        ref[i] = tokenize(references[i]);
    }

    double corpus_total = 0.0;
    for (int order = 1; order <= kMaxOrder; ++order) {
        // Document frequencies over the reference corpus.
        NgramCounts df;
        std::vector<NgramCounts> ref_counts(n_docs);
        for (size_t i = 0; i < n_docs; ++i) {
            ref_counts[i] = ngram_counts(ref[i], order);
            for (const auto& [gram, _] : ref_counts[i]) ++df[gram];
        }
        auto idf = [&](const std::vector<std::string>& gram) {
            auto it = df.find(gram);
            long long d = it == df.end() ? 0 : it->second;
            return std::log(static_cast<double>(n_docs) / static_cast<double>(std::max<long long>(d, 1)));
        };

        for (size_t i = 0; i < n_docs; ++i) {
            NgramCounts cc = ngram_counts(cand[i], order);
            const NgramCounts& rc = ref_counts[i];
            if (cc.empty() || rc.empty()) continue; // this order scores 0

            double dot = 0.0;
            double c_norm2 = 0.0;
            double r_norm2 = 0.0;
            for (const auto& [gram, count] : cc) {
                double w = static_cast<double>(count) * idf(gram);
                c_norm2 += w * w;
                auto it = rc.find(gram);
                if (it != rc.end()) {
                    double rw = static_cast<double>(it->second) * idf(gram);
                    dot += std::min(w, rw) * rw; // clipped candidate term
                }
            }
            for (const auto& [gram, count] : rc) {
                double w = static_cast<double>(count) * idf(gram);
                r_norm2 += w * w;
            }
            if (c_norm2 == 0.0 || r_norm2 == 0.0) continue;

            double delta = static_cast<double>(cand[i].size()) - static_cast<double>(ref[i].size());
            double penalty = std::exp(-(delta * delta) / (2.0 * kLengthSigma * kLengthSigma));
            corpus_total += penalty * dot / (std::sqrt(c_norm2) * std::sqrt(r_norm2));
        }
    }

    return 10.0 * corpus_total / (kMaxOrder * static_cast<double>(n_docs));
}

DiversityScores diversity(const std::vector<std::string>& candidates) {
    if (candidates.empty()) throw_data("EmptyCorpus", "diversity corpus is empty");
    DiversityScores out;

    NgramCounts pooled;
    long long total_bigrams = 0;
    for (const auto& text : candidates) {
        Tokens toks = tokenize(text);
        for (const auto& [gram, count] : ngram_counts(toks, 2)) {
            pooled[gram] += count;
            total_bigrams += count;
        }
    }
    out.div2 = total_bigrams == 0
                   ? 0.0
                   : static_cast<double>(pooled.size()) / static_cast<double>(total_bigrams);

    // R@4: per report, the fraction of 4-gram instances whose type repeats
    // within that report; reports shorter than 4 tokens are skipped.
    double rep_total = 0.0;
    long long rep_reports = 0;
    for (const auto& text : candidates) {
        Tokens toks = tokenize(text);
        NgramCounts counts = ngram_counts(toks, 4);
        long long instances = 0;
        long long repeated = 0;
        for (const auto& [gram, count] : counts) {
            instances += count;
            if (count >= 2) repeated += count;
        }
        if (instances == 0) continue;
        rep_total += static_cast<double>(repeated) / static_cast<double>(instances);
        ++rep_reports;
    }
    out.rep4 = rep_reports == 0 ? 0.0 : rep_total / static_cast<double>(rep_reports);
    return out;
}

NlgScores nlg_scores(const std::vector<std::string>& candidates,
                     const std::vector<std::string>& references) {
    NlgScores s;
    s.bleu1 = bleu(candidates, references, 1);
    s.bleu2 = bleu(candidates, references, 2);
    s.bleu3 = bleu(candidates, references, 3);
    s.bleu4 = bleu(candidates, references, 4);
    s.rouge_l = rouge_l(candidates, references);
    s.cider = cider(candidates, references);
    auto d = diversity(candidates);
    s.div2 = d.div2;
    s.rep4 = d.rep4;
    return s;
}

} // namespace fgcxr
