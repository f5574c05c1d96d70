#include "coldrec/split.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "coldrec/errors.hpp"
#include "coldrec/rng.hpp"

namespace coldrec {

namespace {

using nlohmann::json;

std::vector<std::string> pick(const std::vector<std::string>& ids,
                              const std::vector<std::size_t>& indices) {
  std::vector<std::string> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(ids[i]);
  return out;
}

std::vector<std::string> drop(const std::vector<std::string>& ids,
                              const std::vector<std::size_t>& indices) {
  std::vector<std::string> out;
  out.reserve(ids.size() - indices.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (next < indices.size() && indices[next] == i) {
      ++next;
    } else {
      out.push_back(ids[i]);
    }
  }
  return out;
}

void save_pairs(const std::vector<IdPair>& pairs, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error(path + ": cannot open for writing");
  out << "player_id,game_id\n";
  for (const auto& [p, g] : pairs) out << p << ',' << g << '\n';
}

std::vector<IdPair> load_pairs(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error(path + ": cannot open file");
  std::string line;
  if (!std::getline(in, line)) throw data_error(path + ": empty file");
  std::vector<IdPair> pairs;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw data_error(path + ": malformed row '" + line + "'");
    pairs.emplace_back(line.substr(0, comma), line.substr(comma + 1));
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

const char* model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::random: return "random";
    case ModelKind::mvn: return "mvn";
    case ModelKind::knn: return "knn";
    case ModelKind::svd: return "svd";
    case ModelKind::tags: return "tags";
    case ModelKind::questions: return "questions";
    case ModelKind::tags_x_questions: return "tags_x_questions";
  }
  return "?";
}

ModelKind model_kind_from_name(const std::string& name) {
  for (ModelKind k : {ModelKind::random, ModelKind::mvn, ModelKind::knn, ModelKind::svd,
                      ModelKind::tags, ModelKind::questions, ModelKind::tags_x_questions}) {
    if (name == model_kind_name(k)) return k;
  }
  throw data_error("unknown model kind '" + name + "'");
}

std::set<int> capability_matrix(ModelKind kind) {
  switch (kind) {
    case ModelKind::random: return {1, 2, 3, 4};
    case ModelKind::mvn:
    case ModelKind::knn:
    case ModelKind::svd: return {1};
    case ModelKind::tags: return {1, 2};
    case ModelKind::questions: return {1, 3};
    case ModelKind::tags_x_questions: return {1, 2, 3, 4};
  }
  throw data_error("unknown model kind");
}

const std::vector<IdPair>& SplitBundle::validation(int setting) const {
  switch (setting) {
    case 1: return validation_s1;
    case 2: return validation_s2;
    case 3: return validation_s3;
    case 4: return validation_s4;
  }
  throw data_error("setting must be 1..4");
}

std::size_t count_for_fraction(std::size_t total, double fraction) {
  return static_cast<std::size_t>(std::floor(static_cast<double>(total) * fraction));
}

SplitBundle four_way_split(const Dataset& dataset, const SplitConfig& config) {
  const GameLikeMatrix& likes = dataset.likes;
  const std::size_t n = likes.n();
  const std::size_t m = likes.m();
  if (n < 4 || m < 4) throw data_error("four_way_split: dataset must be at least 4x4");
  for (double f : {config.test_game_fraction, config.test_player_fraction,
                   config.setting1_player_fraction}) {
    if (!(f > 0.0 && f < 1.0)) throw data_error("four_way_split: fractions must lie in (0,1)");
  }

  const std::size_t test_games = count_for_fraction(m, config.test_game_fraction);
  const std::size_t test_players = count_for_fraction(n, config.test_player_fraction);
  if (test_games == 0 || test_players == 0)
    throw data_error("four_way_split: test fraction rounds to zero items");

  SplitBundle out;
  out.rng_seed = config.rng_seed;

  Rng game_rng(derive_seed(config.rng_seed, "test-games"));
  const auto test_game_idx = game_rng.sample(m, test_games);
  out.test_game_ids = pick(likes.game_ids, test_game_idx);
  out.train_game_ids = drop(likes.game_ids, test_game_idx);

  Rng player_rng(derive_seed(config.rng_seed, "test-players"));
  const auto test_player_idx = player_rng.sample(n, test_players);
  out.test_player_ids = pick(likes.player_ids, test_player_idx);
  out.train_player_ids = drop(likes.player_ids, test_player_idx);

  std::vector<bool> is_test_game(m, false);
  for (std::size_t j : test_game_idx) is_test_game[j] = true;
  std::vector<bool> is_test_player(n, false);
  for (std::size_t i : test_player_idx) is_test_player[i] = true;

  // Original indices of the training axes, in canonical (sorted-id) order.
  std::vector<std::size_t> train_players, train_games;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_test_player[i]) train_players.push_back(i);
  for (std::size_t j = 0; j < m; ++j)
    if (!is_test_game[j]) train_games.push_back(j);

  out.train_likes.player_ids = out.train_player_ids;
  out.train_likes.game_ids = out.train_game_ids;
  out.train_likes.values = Matrix(train_players.size(), train_games.size());
  for (std::size_t a = 0; a < train_players.size(); ++a)
    for (std::size_t b = 0; b < train_games.size(); ++b)
      out.train_likes.values(a, b) = likes.values(train_players[a], train_games[b]);

  // Setting-1 sample: training players with strictly more than
  // seed_likes_per_player likes on training games.
  std::vector<std::size_t> eligible;  // positions in the train axes
  for (std::size_t a = 0; a < train_players.size(); ++a) {
    std::size_t count = 0;
    for (std::size_t b = 0; b < train_games.size(); ++b)
      if (out.train_likes.values(a, b) != 0.0) ++count;
    if (count > config.seed_likes_per_player) eligible.push_back(a);
  }
  if (eligible.empty())
    throw data_error("four_way_split: no training player has more than " +
                     std::to_string(config.seed_likes_per_player) + " likes on training games");

  std::size_t wanted = count_for_fraction(train_players.size(), config.setting1_player_fraction);
  if (wanted == 0) throw data_error("four_way_split: setting-1 fraction rounds to zero players");
  if (wanted > eligible.size()) {
    std::fprintf(stderr,
                 "coldrec: only %zu of %zu requested setting-1 players are eligible; using all\n",
                 eligible.size(), wanted);
    wanted = eligible.size();
  }

  Rng s1_rng(derive_seed(config.rng_seed, "setting1"));
  const auto chosen_pos = s1_rng.sample(eligible.size(), wanted);

  for (std::size_t cp : chosen_pos) {
    const std::size_t a = eligible[cp];
    std::vector<std::size_t> liked;
    for (std::size_t b = 0; b < train_games.size(); ++b)
      if (out.train_likes.values(a, b) != 0.0) liked.push_back(b);
    s1_rng.shuffle(liked);
    // First seed_likes_per_player stay in train; the rest are validation.
    for (std::size_t t = config.seed_likes_per_player; t < liked.size(); ++t) {
      out.train_likes.values(a, liked[t]) = 0.0;
      out.validation_s1.emplace_back(out.train_player_ids[a], out.train_game_ids[liked[t]]);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (likes.values(i, j) == 0.0) continue;
      if (!is_test_player[i] && is_test_game[j])
        out.validation_s2.emplace_back(likes.player_ids[i], likes.game_ids[j]);
      else if (is_test_player[i] && !is_test_game[j])
        out.validation_s3.emplace_back(likes.player_ids[i], likes.game_ids[j]);
      else if (is_test_player[i] && is_test_game[j])
        out.validation_s4.emplace_back(likes.player_ids[i], likes.game_ids[j]);
    }
  }

  std::sort(out.validation_s1.begin(), out.validation_s1.end());
  std::sort(out.validation_s2.begin(), out.validation_s2.end());
  std::sort(out.validation_s3.begin(), out.validation_s3.end());
  std::sort(out.validation_s4.begin(), out.validation_s4.end());
  return out;
}

void save_split(const SplitBundle& bundle, const std::string& dir) {
  std::filesystem::create_directories(dir);
  save_likes(bundle.train_likes, dir + "/train_likes.csv");
  save_pairs(bundle.validation_s1, dir + "/validation_s1.csv");
  save_pairs(bundle.validation_s2, dir + "/validation_s2.csv");
  save_pairs(bundle.validation_s3, dir + "/validation_s3.csv");
  save_pairs(bundle.validation_s4, dir + "/validation_s4.csv");

  json manifest;
  manifest["format"] = "coldrec-split";
  manifest["version"] = 1;
  manifest["rng_seed"] = bundle.rng_seed;
  manifest["train_player_ids"] = bundle.train_player_ids;
  manifest["test_player_ids"] = bundle.test_player_ids;
  manifest["train_game_ids"] = bundle.train_game_ids;
  manifest["test_game_ids"] = bundle.test_game_ids;
  std::ofstream out(dir + "/manifest.json", std::ios::binary);
  if (!out) throw data_error(dir + "/manifest.json: cannot open for writing");
  out << manifest.dump(2) << '\n';
}

SplitBundle load_split(const std::string& dir) {
  std::ifstream in(dir + "/manifest.json", std::ios::binary);
  if (!in) throw data_error(dir + "/manifest.json: cannot open file");
  json manifest;
  try {
    in >> manifest;
  } catch (const json::exception& e) {
    throw data_error(dir + "/manifest.json: " + e.what());
  }
  if (manifest.value("format", "") != "coldrec-split" || manifest.value("version", 0) != 1)
    throw data_error(dir + "/manifest.json: not a coldrec-split v1 manifest");

  SplitBundle bundle;
  bundle.rng_seed = manifest.at("rng_seed").get<std::uint64_t>();
  bundle.train_player_ids = manifest.at("train_player_ids").get<std::vector<std::string>>();
  bundle.test_player_ids = manifest.at("test_player_ids").get<std::vector<std::string>>();
  bundle.train_game_ids = manifest.at("train_game_ids").get<std::vector<std::string>>();
  bundle.test_game_ids = manifest.at("test_game_ids").get<std::vector<std::string>>();

  // The train matrix keeps the manifest's full axes; players or games with
  // zero remaining likes would otherwise drop out of the CSV.
  GameLikeMatrix loaded = load_likes(dir + "/train_likes.csv");
  bundle.train_likes.player_ids = bundle.train_player_ids;
  bundle.train_likes.game_ids = bundle.train_game_ids;
  bundle.train_likes.values = Matrix(bundle.train_player_ids.size(), bundle.train_game_ids.size());
  for (std::size_t i = 0; i < loaded.n(); ++i) {
    for (std::size_t j = 0; j < loaded.m(); ++j) {
      if (loaded.values(i, j) == 0.0) continue;
      auto pi = std::lower_bound(bundle.train_player_ids.begin(), bundle.train_player_ids.end(),
                                 loaded.player_ids[i]);
      auto gi = std::lower_bound(bundle.train_game_ids.begin(), bundle.train_game_ids.end(),
                                 loaded.game_ids[j]);
      if (pi == bundle.train_player_ids.end() || *pi != loaded.player_ids[i] ||
          gi == bundle.train_game_ids.end() || *gi != loaded.game_ids[j])
        throw data_error(dir + ": train_likes.csv contains ids absent from the manifest");
      bundle.train_likes.values(pi - bundle.train_player_ids.begin(),
                                gi - bundle.train_game_ids.begin()) = 1.0;
    }
  }

  bundle.validation_s1 = load_pairs(dir + "/validation_s1.csv");
  bundle.validation_s2 = load_pairs(dir + "/validation_s2.csv");
  bundle.validation_s3 = load_pairs(dir + "/validation_s3.csv");
  bundle.validation_s4 = load_pairs(dir + "/validation_s4.csv");
  return bundle;
}

bool verify_no_leakage(const SplitBundle& bundle) {
  auto sorted = [](std::vector<std::string> ids) {
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  const auto train_p = sorted(bundle.train_player_ids);
  const auto test_p = sorted(bundle.test_player_ids);
  const auto train_g = sorted(bundle.train_game_ids);
  const auto test_g = sorted(bundle.test_game_ids);
  auto contains = [](const std::vector<std::string>& ids, const std::string& id) {
    return std::binary_search(ids.begin(), ids.end(), id);
  };
  for (const auto& id : test_p)
    if (contains(train_p, id)) return false;
  for (const auto& id : test_g)
    if (contains(train_g, id)) return false;

  // Setting 1 pairs live on the train axes and must be absent from the
  // train matrix; settings 2-4 must touch at least one test axis.
  for (const auto& [p, g] : bundle.validation_s1) {
    auto pi = bundle.train_likes.player_index(p);
    auto gi = bundle.train_likes.game_index(g);
    if (!pi || !gi) return false;
    if (bundle.train_likes.values(*pi, *gi) != 0.0) return false;
  }
  for (const auto& [p, g] : bundle.validation_s2)
    if (!contains(train_p, p) || !contains(test_g, g)) return false;
  for (const auto& [p, g] : bundle.validation_s3)
    if (!contains(test_p, p) || !contains(train_g, g)) return false;
  for (const auto& [p, g] : bundle.validation_s4)
    if (!contains(test_p, p) || !contains(test_g, g)) return false;
  return true;
}

}  // namespace coldrec
