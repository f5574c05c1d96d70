#include "coldrec/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "coldrec/errors.hpp"
#include "coldrec/parallel.hpp"

namespace coldrec {

RankedList rank_games(std::span<const double> scores, std::span<const int> exclude) {
  RankedList out;
  out.excluded.assign(exclude.begin(), exclude.end());
  std::sort(out.excluded.begin(), out.excluded.end());
  out.order.reserve(scores.size());
  for (int j = 0; j < static_cast<int>(scores.size()); ++j) {
    if (!std::binary_search(out.excluded.begin(), out.excluded.end(), j)) out.order.push_back(j);
  }
  std::stable_sort(out.order.begin(), out.order.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  out.scores.reserve(out.order.size());
  for (int j : out.order) out.scores.push_back(scores[j]);
  return out;
}

double precision_at_k(const RankedList& ranked, std::span<const int> liked_sorted, int k) {
  if (k < 1) throw data_error("precision_at_k: k must be >= 1");
  int hits = 0;
  const int depth = std::min<int>(k, static_cast<int>(ranked.order.size()));
  for (int j = 0; j < depth; ++j) {
    if (std::binary_search(liked_sorted.begin(), liked_sorted.end(), ranked.order[j])) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(k);
}

double ndcg_at_k(const RankedList& ranked, std::span<const int> liked_sorted, int k) {
  if (k < 1) throw data_error("ndcg_at_k: k must be >= 1");
  if (liked_sorted.empty()) return 0.0;
  double dcg = 0.0;
  const int depth = std::min<int>(k, static_cast<int>(ranked.order.size()));
  for (int j = 0; j < depth; ++j) {
    if (std::binary_search(liked_sorted.begin(), liked_sorted.end(), ranked.order[j]))
      dcg += 1.0 / std::log2(static_cast<double>(j) + 2.0);
  }
  double idcg = 0.0;
  const int ideal = std::min<int>(static_cast<int>(liked_sorted.size()), k);
  for (int j = 1; j <= ideal; ++j) idcg += 1.0 / std::log2(static_cast<double>(j) + 1.0);
  return dcg / idcg;
}

nlohmann::json MetricReport::to_json() const {
  nlohmann::json j;
  j["precision_at_20"] = precision_at_20;
  j["ndcg_at_m"] = ndcg_at_m;
  j["counted_players"] = counted_players;
  j["skipped_players"] = skipped_players;
  nlohmann::json players = nlohmann::json::array();
  for (const auto& p : per_player) {
    players.push_back({{"player_id", p.player_id},
                       {"precision", p.precision},
                       {"ndcg", p.ndcg},
                       {"counted", p.counted}});
  }
  j["per_player"] = std::move(players);
  return j;
}

MetricReport evaluate_player_set(const std::function<std::vector<double>(std::size_t)>& score_for,
                                 std::span<const PlayerCase> cases, int k_prec) {
  MetricReport report;
  report.per_player.resize(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const PlayerCase& pc = cases[i];
    PlayerMetrics& pm = report.per_player[i];
    pm.player_id = pc.player_id;
    if (pc.validation.empty()) return;
    const std::vector<double> scores = score_for(i);
    const RankedList ranked = rank_games(scores, pc.exclude);
    if (ranked.order.empty()) return;
    pm.precision = precision_at_k(ranked, pc.validation, k_prec);
    pm.ndcg = ndcg_at_k(ranked, pc.validation, static_cast<int>(ranked.order.size()));
    pm.counted = true;
  });
  for (const auto& pm : report.per_player) {
    if (pm.counted) {
      report.precision_at_20 += pm.precision;
      report.ndcg_at_m += pm.ndcg;
      ++report.counted_players;
    } else {
      ++report.skipped_players;
    }
  }
  if (report.skipped_players > 0)
    std::fprintf(stderr, "coldrec: %d players skipped (no validation likes or no candidates)\n",
                 report.skipped_players);
  if (report.counted_players > 0) {
    report.precision_at_20 /= report.counted_players;
    report.ndcg_at_m /= report.counted_players;
  }
  return report;
}

}  // namespace coldrec
