#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coldrec/matrix.hpp"

namespace coldrec {

// Complete binary player-by-game interaction matrix. IDs are opaque strings;
// both axes are sorted lexicographically so every downstream computation is
// deterministic regardless of input row order.
struct GameLikeMatrix {
  Matrix values;  // n x m, entries 0/1
  std::vector<std::string> player_ids;
  std::vector<std::string> game_ids;

  std::size_t n() const { return player_ids.size(); }
  std::size_t m() const { return game_ids.size(); }
  std::size_t like_count() const;
  double density() const;
  std::optional<std::size_t> player_index(std::string_view id) const;
  std::optional<std::size_t> game_index(std::string_view id) const;

  bool operator==(const GameLikeMatrix&) const = default;
};

// Binary game-by-tag indicator matrix, rows aligned with a like matrix's
// game axis once combined into a Dataset.
struct GameFeatureMatrix {
  Matrix values;  // m x r
  std::vector<std::string> game_ids;
  std::vector<std::string> tag_names;

  std::size_t m() const { return game_ids.size(); }
  std::size_t r() const { return tag_names.size(); }

  bool operator==(const GameFeatureMatrix&) const = default;
};

// Player-by-question answer matrix on the centered scale -2..2; unanswered
// cells are 0 (neutral).
struct PlayerFeatureMatrix {
  Matrix values;  // n x s
  std::vector<std::string> player_ids;
  std::vector<std::string> question_ids;

  std::size_t n() const { return player_ids.size(); }
  std::size_t s() const { return question_ids.size(); }

  bool operator==(const PlayerFeatureMatrix&) const = default;
};

struct Dataset {
  GameLikeMatrix likes;
  GameFeatureMatrix tags;      // rows aligned with likes.game_ids
  PlayerFeatureMatrix questions;  // rows aligned with likes.player_ids

  // Games that carry no tag at all; surfaced in benchmark reports.
  std::size_t zero_tag_games() const;
};

// --- CSV ingestion --------------------------------------------------------
// All loaders canonicalize axis order (lexicographic IDs) and collapse
// duplicate rows. Malformed rows raise data_error with the line number.

GameLikeMatrix load_likes(const std::string& path);
GameFeatureMatrix load_game_tags(const std::string& path);
PlayerFeatureMatrix load_player_questions(const std::string& path);

void save_likes(const GameLikeMatrix& likes, const std::string& path);
void save_game_tags(const GameFeatureMatrix& tags, const std::string& path);
void save_player_questions(const PlayerFeatureMatrix& questions, const std::string& path);

// Reindexes features onto an axis. Strict mode rejects feature rows whose id
// is unknown to the axis; permissive mode drops them (with a diagnostic on
// stderr) which is what split workflows need. Ids absent from the feature
// matrix get all-zero rows either way.
GameFeatureMatrix align_tags(const GameFeatureMatrix& tags,
                             const std::vector<std::string>& game_ids, bool drop_unknown = false);
PlayerFeatureMatrix align_questions(const PlayerFeatureMatrix& questions,
                                    const std::vector<std::string>& player_ids,
                                    bool drop_unknown = false);

// Combines the three matrices into an aligned Dataset (strict alignment).
Dataset make_dataset(GameLikeMatrix likes, const GameFeatureMatrix& tags,
                     const PlayerFeatureMatrix& questions);

}  // namespace coldrec
