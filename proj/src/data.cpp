#include "coldrec/data.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "coldrec/errors.hpp"
#include "coldrec/kernels/kernels.hpp"
#include "io_util.hpp"

namespace coldrec {

namespace {

std::optional<std::size_t> index_of(const std::vector<std::string>& sorted_ids,
                                    std::string_view id) {
  auto it = std::lower_bound(sorted_ids.begin(), sorted_ids.end(), id);
  if (it == sorted_ids.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - sorted_ids.begin());
}

std::vector<std::string> sorted_unique(std::set<std::string>&& ids) {
  return {ids.begin(), ids.end()};
}

void expect_header(CsvReader& reader, std::string_view expected) {
  std::string line;
  if (!reader.next_line(line)) reader.fail("empty file");
  if (line != expected) reader.fail("expected header '" + std::string(expected) + "'");
}

std::vector<std::string_view> read_fields(CsvReader& reader, const std::string& line,
                                          std::size_t count) {
  auto fields = split_csv_line(line);
  if (fields.size() != count)
    reader.fail("expected " + std::to_string(count) + " fields, got " +
                std::to_string(fields.size()));
  for (const auto& f : fields)
    if (f.empty()) reader.fail("empty field");
  return fields;
}

int parse_int(CsvReader& reader, std::string_view raw) {
  int value = 0;
  auto res = std::from_chars(raw.data(), raw.data() + raw.size(), value);
  if (res.ec != std::errc{} || res.ptr != raw.data() + raw.size())
    reader.fail("not an integer: '" + std::string(raw) + "'");
  return value;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error(path + ": cannot open for writing");
  out << content;
  if (!out) throw data_error(path + ": write failed");
}

}  // namespace

std::size_t GameLikeMatrix::like_count() const {
  return static_cast<std::size_t>(kernels::sum(values.data().data(), values.data().size()));
}

double GameLikeMatrix::density() const {
  if (n() == 0 || m() == 0) return 0.0;
  return static_cast<double>(like_count()) / (static_cast<double>(n()) * static_cast<double>(m()));
}

std::optional<std::size_t> GameLikeMatrix::player_index(std::string_view id) const {
  return index_of(player_ids, id);
}

std::optional<std::size_t> GameLikeMatrix::game_index(std::string_view id) const {
  return index_of(game_ids, id);
}

std::size_t Dataset::zero_tag_games() const {
  std::size_t count = 0;
  for (std::size_t g = 0; g < tags.m(); ++g) {
    if (kernels::sum(tags.values.row(g), tags.r()) == 0.0) ++count;
  }
  return count;
}

GameLikeMatrix load_likes(const std::string& path) {
  CsvReader reader(path);
  expect_header(reader, "player_id,game_id");

  std::set<std::pair<std::string, std::string>> pairs;
  std::set<std::string> players, games;
  std::string line;
  while (reader.next_line(line)) {
    if (line.empty()) continue;
    auto fields = read_fields(reader, line, 2);
    players.emplace(fields[0]);
    games.emplace(fields[1]);
    pairs.emplace(std::string(fields[0]), std::string(fields[1]));
  }
  if (pairs.empty()) throw data_error(path + ": no likes");

  GameLikeMatrix out;
  out.player_ids = sorted_unique(std::move(players));
  out.game_ids = sorted_unique(std::move(games));
  out.values = Matrix(out.n(), out.m());
  for (const auto& [p, g] : pairs) {
    out.values(*index_of(out.player_ids, p), *index_of(out.game_ids, g)) = 1.0;
  }
  return out;
}

GameFeatureMatrix load_game_tags(const std::string& path) {
  CsvReader reader(path);
  expect_header(reader, "game_id,tag");

  std::set<std::pair<std::string, std::string>> pairs;
  std::set<std::string> games, tags;
  std::string line;
  while (reader.next_line(line)) {
    if (line.empty()) continue;
    auto fields = read_fields(reader, line, 2);
    games.emplace(fields[0]);
    tags.emplace(fields[1]);
    pairs.emplace(std::string(fields[0]), std::string(fields[1]));
  }
  if (tags.empty()) throw data_error(path + ": no tags");

  GameFeatureMatrix out;
  out.game_ids = sorted_unique(std::move(games));
  out.tag_names = sorted_unique(std::move(tags));
  out.values = Matrix(out.m(), out.r());
  for (const auto& [g, t] : pairs) {
    out.values(*index_of(out.game_ids, g), *index_of(out.tag_names, t)) = 1.0;
  }
  return out;
}

PlayerFeatureMatrix load_player_questions(const std::string& path) {
  CsvReader reader(path);
  expect_header(reader, "player_id,question_id,answer");

  struct Answer {
    int value;
    int line;
  };
  std::map<std::pair<std::string, std::string>, Answer> answers;
  std::set<std::string> players, questions;
  bool saw_centered = false;  // any value <= 0 pins the -2..2 scale
  std::string line;
  while (reader.next_line(line)) {
    if (line.empty()) continue;
    auto fields = read_fields(reader, line, 3);
    const int value = parse_int(reader, fields[2]);
    if (value < -2 || value > 5)
      reader.fail("answer " + std::to_string(value) + " outside both accepted scales");
    if (value <= 0) saw_centered = true;
    players.emplace(fields[0]);
    questions.emplace(fields[1]);
    auto key = std::make_pair(std::string(fields[0]), std::string(fields[1]));
    auto [it, inserted] = answers.insert({key, {value, reader.line_number()}});
    if (!inserted && it->second.value != value)
      reader.fail("conflicting duplicate answer for (" + key.first + "," + key.second + ")");
  }
  if (questions.empty()) throw data_error(path + ": no questions");

  // A file on the 1-5 scale is shifted by -3 so 0 means neutral. Mixed
  // evidence (a value <= 0 next to a value > 2) is a scale conflict.
  if (saw_centered) {
    for (const auto& [key, ans] : answers) {
      if (ans.value > 2)
        throw data_error(path + ":" + std::to_string(ans.line) + ": answer " +
                         std::to_string(ans.value) + " conflicts with -2..2 scale values");
    }
  }
  const int shift = saw_centered ? 0 : -3;

  PlayerFeatureMatrix out;
  out.player_ids = sorted_unique(std::move(players));
  out.question_ids = sorted_unique(std::move(questions));
  out.values = Matrix(out.n(), out.s());
  for (const auto& [key, ans] : answers) {
    out.values(*index_of(out.player_ids, key.first), *index_of(out.question_ids, key.second)) =
        static_cast<double>(ans.value + shift);
  }
  return out;
}

void save_likes(const GameLikeMatrix& likes, const std::string& path) {
  std::string buf = "player_id,game_id\n";
  for (std::size_t i = 0; i < likes.n(); ++i) {
    for (std::size_t j = 0; j < likes.m(); ++j) {
      if (likes.values(i, j) != 0.0) {
        buf += likes.player_ids[i];
        buf += ',';
        buf += likes.game_ids[j];
        buf += '\n';
      }
    }
  }
  write_file(path, buf);
}

void save_game_tags(const GameFeatureMatrix& tags, const std::string& path) {
  std::string buf = "game_id,tag\n";
  for (std::size_t g = 0; g < tags.m(); ++g) {
    for (std::size_t t = 0; t < tags.r(); ++t) {
      if (tags.values(g, t) != 0.0) {
        buf += tags.game_ids[g];
        buf += ',';
        buf += tags.tag_names[t];
        buf += '\n';
      }
    }
  }
  write_file(path, buf);
}

void save_player_questions(const PlayerFeatureMatrix& questions, const std::string& path) {
  // Written on the 1-5 scale so reloading is unambiguous; every cell is
  // emitted, which keeps the axes exact through a round trip.
  std::string buf = "player_id,question_id,answer\n";
  for (std::size_t i = 0; i < questions.n(); ++i) {
    for (std::size_t q = 0; q < questions.s(); ++q) {
      buf += questions.player_ids[i];
      buf += ',';
      buf += questions.question_ids[q];
      buf += ',';
      buf += std::to_string(static_cast<int>(questions.values(i, q)) + 3);
      buf += '\n';
    }
  }
  write_file(path, buf);
}

GameFeatureMatrix align_tags(const GameFeatureMatrix& tags,
                             const std::vector<std::string>& game_ids, bool drop_unknown) {
  GameFeatureMatrix out;
  out.game_ids = game_ids;
  out.tag_names = tags.tag_names;
  out.values = Matrix(game_ids.size(), tags.r());
  std::size_t dropped = 0;
  std::vector<bool> used(tags.m(), false);
  for (std::size_t i = 0; i < game_ids.size(); ++i) {
    if (auto src = index_of(tags.game_ids, game_ids[i])) {
      used[*src] = true;
      for (std::size_t t = 0; t < tags.r(); ++t) out.values(i, t) = tags.values(*src, t);
    }
  }
  for (std::size_t g = 0; g < tags.m(); ++g) {
    if (!used[g]) {
      if (!drop_unknown)
        throw data_error("tag alignment: unknown game_id '" + tags.game_ids[g] + "'");
      ++dropped;
    }
  }
  if (dropped > 0)
    std::fprintf(stderr, "coldrec: dropped tags for %zu games absent from the like axis\n",
                 dropped);
  return out;
}

PlayerFeatureMatrix align_questions(const PlayerFeatureMatrix& questions,
                                    const std::vector<std::string>& player_ids,
                                    bool drop_unknown) {
  PlayerFeatureMatrix out;
  out.player_ids = player_ids;
  out.question_ids = questions.question_ids;
  out.values = Matrix(player_ids.size(), questions.s());
  std::size_t dropped = 0;
  std::vector<bool> used(questions.n(), false);
  for (std::size_t i = 0; i < player_ids.size(); ++i) {
    if (auto src = index_of(questions.player_ids, player_ids[i])) {
      used[*src] = true;
      for (std::size_t q = 0; q < questions.s(); ++q) out.values(i, q) = questions.values(*src, q);
    }
  }
  for (std::size_t p = 0; p < questions.n(); ++p) {
    if (!used[p]) {
      if (!drop_unknown)
        throw data_error("question alignment: unknown player_id '" + questions.player_ids[p] +
                         "'");
      ++dropped;
    }
  }
  if (dropped > 0)
    std::fprintf(stderr, "coldrec: dropped answers for %zu players absent from the like axis\n",
                 dropped);
  return out;
}

Dataset make_dataset(GameLikeMatrix likes, const GameFeatureMatrix& tags,
                     const PlayerFeatureMatrix& questions) {
  Dataset ds;
  ds.tags = align_tags(tags, likes.game_ids);
  ds.questions = align_questions(questions, likes.player_ids);
  ds.likes = std::move(likes);
  return ds;
}

}  // namespace coldrec
