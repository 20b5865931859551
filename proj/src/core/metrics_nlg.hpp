#pragma once

#include <string>
#include <vector>

#include "types.hpp"

namespace fgcxr {

struct NlgScores {
    double bleu1 = 0.0;
    double bleu2 = 0.0;
    double bleu3 = 0.0;
    double bleu4 = 0.0;
    double rouge_l = 0.0;
    double cider = 0.0;
    double div2 = 0.0;
    double rep4 = 0.0;
};

// Corpus-level BLEU-n: geometric mean of clipped modified n-gram
// precisions for orders 1..n, times the brevity penalty
// exp(min(0, 1 - r/c)). Pooled counts; no smoothing. A zero precision at
// any order (including "no candidate n-grams at all") yields 0.
double bleu(const std::vector<std::string>& candidates,
            const std::vector<std::string>& references, int n);

// Mean per-pair LCS F-measure with beta^2 = 1.2^2.
double rouge_l(const std::vector<std::string>& candidates,
               const std::vector<std::string>& references);

// CIDEr-D with a single reference per candidate: per order n in 1..4,
// TF-IDF n-gram vectors (raw counts x log(N/max(df,1)), df over the
// reference corpus), clipped cosine sum_g min(c_g, r_g) * r_g / (|c||r|),
// Gaussian length penalty exp(-(|c|-|r|)^2 / (2*6^2)) on token lengths.
// Averaged over orders, scaled by 10, averaged over the corpus. An order
// where either side has no n-grams scores 0 for that order.
double cider(const std::vector<std::string>& candidates,
             const std::vector<std::string>& references);

struct DiversityScores {
    double div2 = 0.0; // distinct bigrams / total bigrams, corpus-pooled
    double rep4 = 0.0; // mean within-report fraction of repeated 4-grams
};

DiversityScores diversity(const std::vector<std::string>& candidates);

NlgScores nlg_scores(const std::vector<std::string>& candidates,
                     const std::vector<std::string>& references);

} // namespace fgcxr
