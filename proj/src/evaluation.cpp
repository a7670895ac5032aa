#include "vclust/evaluation.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace vclust {

std::string EfficiencyScore::ratio() const {
    return std::to_string(matched) + "/" + std::to_string(total);
}

namespace {

// Maximum-weight perfect assignment on a square weight matrix (Hungarian
// algorithm with potentials, run on negated weights as a min-cost problem).
long long max_assignment(const std::vector<std::vector<long long>>& weight) {
    const std::size_t n = weight.size();
    const long long inf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> match(n + 1, 0);  // match[col 1..n] = row
    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<long long> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        std::vector<std::size_t> way(n + 1, 0);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            long long delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const long long cur = -weight[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    long long total = 0;
    for (std::size_t j = 1; j <= n; ++j) total += weight[match[j] - 1][j - 1];
    return total;
}

}  // namespace

EfficiencyScore match_partitions(const Partition& candidate, const Partition& reference) {
    if (candidate.labels.size() != reference.labels.size()) {
        throw std::invalid_argument("match_partitions: order mismatch");
    }
    const std::size_t n = candidate.labels.size();
    // Pad the smaller side with empty clusters so the table is square.
    const std::size_t k = std::max(candidate.cluster_count, reference.cluster_count);
    std::vector<std::vector<long long>> table(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < n; ++i) {
        ++table[candidate.labels[i]][reference.labels[i]];
    }
    EfficiencyScore score;
    score.matched = static_cast<std::size_t>(max_assignment(table));
    score.total = n;
    return score;
}

EfficiencyStatistics summarize(const std::vector<EfficiencyScore>& scores) {
    if (scores.empty()) {
        throw std::invalid_argument("summarize: empty score list");
    }
    const std::size_t n = scores.front().total;
    for (const auto& s : scores) {
        if (s.total != n) {
            throw std::invalid_argument("summarize: mixed denominators");
        }
    }
    EfficiencyStatistics st;
    double sum = 0.0;
    for (const auto& s : scores) sum += s.percent();
    st.average_percent = sum / static_cast<double>(scores.size());

    std::vector<std::size_t> ms;
    ms.reserve(scores.size());
    for (const auto& s : scores) ms.push_back(s.matched);
    std::sort(ms.begin(), ms.end());
    st.median = {ms[(ms.size() - 1) / 2], n};  // lower middle on even counts
    st.minimum = {ms.front(), n};
    st.maximum = {ms.back(), n};

    std::map<std::size_t, std::size_t> freq;
    for (std::size_t m : ms) ++freq[m];
    std::size_t best_count = 0, best_m = 0;
    for (const auto& [m, count] : freq) {  // ascending m: ties keep the smallest
        if (count > best_count) {
            best_count = count;
            best_m = m;
        }
    }
    st.mode = {best_m, n};
    return st;
}

std::vector<Bucket> bucket_distribution(const std::vector<EfficiencyScore>& scores,
                                        BucketScheme scheme) {
    std::vector<Bucket> buckets;
    if (scheme == BucketScheme::exact_levels) {
        const std::size_t n = scores.empty() ? 0 : scores.front().total;
        buckets.resize(4);
        buckets[0].label = std::to_string(n) + "/" + std::to_string(n);
        buckets[1].label = std::to_string(n - 1) + "/" + std::to_string(n);
        buckets[2].label = std::to_string(n - 2) + "/" + std::to_string(n);
        buckets[3].label = "<=" + std::to_string(n - 3) + "/" + std::to_string(n);
        for (const auto& s : scores) {
            const std::size_t gap = s.total - s.matched;
            ++buckets[std::min<std::size_t>(gap, 3)].count;
        }
    } else {
        buckets.resize(4);
        buckets[0].label = "(90%,100%]";
        buckets[1].label = "(80%,90%]";
        buckets[2].label = "(70%,80%]";
        buckets[3].label = "<=70%";
        for (const auto& s : scores) {
            const double p = s.percent();
            if (p > 90.0) ++buckets[0].count;
            else if (p > 80.0) ++buckets[1].count;
            else if (p > 70.0) ++buckets[2].count;
            else ++buckets[3].count;
        }
    }
    for (auto& b : buckets) {
        b.percent_of_scores =
            scores.empty() ? 0.0 : 100.0 * static_cast<double>(b.count) / static_cast<double>(scores.size());
    }
    return buckets;
}

EfficiencyReport make_report(std::string variant_code, std::vector<EfficiencyScore> scores,
                             BucketScheme scheme) {
    EfficiencyReport report;
    report.variant_code = std::move(variant_code);
    report.statistics = summarize(scores);
    report.distribution = bucket_distribution(scores, scheme);
    report.scores = std::move(scores);
    return report;
}

}  // namespace vclust
