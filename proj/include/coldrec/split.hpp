#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coldrec/data.hpp"

namespace coldrec {

enum class ModelKind { random, mvn, knn, svd, tags, questions, tags_x_questions };

const char* model_kind_name(ModelKind kind);
ModelKind model_kind_from_name(const std::string& name);

// Evaluation settings each model kind can generalize to:
//   1 known players x known games, 2 new games, 3 new players, 4 both new.
std::set<int> capability_matrix(ModelKind kind);

struct SplitConfig {
  double test_game_fraction = 0.25;
  double test_player_fraction = 0.25;
  double setting1_player_fraction = 0.20;
  std::size_t seed_likes_per_player = 3;
  std::uint64_t rng_seed = 0;
};

using IdPair = std::pair<std::string, std::string>;  // (player_id, game_id)

struct SplitBundle {
  // Training players x training games, with Setting-1 players' non-seed
  // likes removed.
  GameLikeMatrix train_likes;
  std::vector<IdPair> validation_s1;  // setting-1 players' held-out train-game likes
  std::vector<IdPair> validation_s2;  // training players x test games
  std::vector<IdPair> validation_s3;  // test players x training games
  std::vector<IdPair> validation_s4;  // test players x test games
  std::vector<std::string> train_player_ids, test_player_ids;
  std::vector<std::string> train_game_ids, test_game_ids;
  std::uint64_t rng_seed = 0;

  const std::vector<IdPair>& validation(int setting) const;
};

// Count used when a fraction of an axis is sampled: floor(total * fraction).
std::size_t count_for_fraction(std::size_t total, double fraction);

SplitBundle four_way_split(const Dataset& dataset, const SplitConfig& config);

// Writes train_likes.csv, validation_s1..4.csv and manifest.json into dir.
void save_split(const SplitBundle& bundle, const std::string& dir);
SplitBundle load_split(const std::string& dir);

// True when no validation pair of any setting is visible in train_likes and
// the axis partitions are disjoint. Used by tests and debug builds.
bool verify_no_leakage(const SplitBundle& bundle);

}  // namespace coldrec
