#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace coldrec {

// Games ordered best first by descending score; ties broken by ascending
// game index; excluded games removed before ranking.
struct RankedList {
  std::vector<int> order;       // game indices, best first
  std::vector<double> scores;   // aligned with order
  std::vector<int> excluded;    // sorted
};

RankedList rank_games(std::span<const double> scores, std::span<const int> exclude);

// Fraction of the top-k list that is liked; the denominator is always k.
double precision_at_k(const RankedList& ranked, std::span<const int> liked_sorted, int k);

// Discounted cumulative gain of liked games within the top k, normalized by
// the ideal ranking's gain.
double ndcg_at_k(const RankedList& ranked, std::span<const int> liked_sorted, int k);

struct PlayerCase {
  std::string player_id;
  std::vector<int> validation;  // liked game indices on the evaluation axis, sorted
  std::vector<int> exclude;     // training likes to drop from the candidate list, sorted
};

struct PlayerMetrics {
  std::string player_id;
  double precision = 0.0;
  double ndcg = 0.0;
  bool counted = false;  // false: empty validation set or empty candidate set
};

struct MetricReport {
  double precision_at_20 = 0.0;  // macro average over counted players
  double ndcg_at_m = 0.0;        // nDCG over the full candidate list
  int counted_players = 0;
  int skipped_players = 0;
  std::vector<PlayerMetrics> per_player;

  nlohmann::json to_json() const;
};

// Ranks every player's scores over the evaluation axis and macro-averages
// both metrics. `score_for(i)` returns the full score vector of cases[i].
// nDCG is cut at the full candidate list length; precision at k_prec.
MetricReport evaluate_player_set(const std::function<std::vector<double>(std::size_t)>& score_for,
                                 std::span<const PlayerCase> cases, int k_prec = 20);

}  // namespace coldrec
