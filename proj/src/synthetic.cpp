#include "coldrec/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coldrec/errors.hpp"
#include "coldrec/kernels/kernels.hpp"
#include "coldrec/linalg.hpp"
#include "coldrec/rng.hpp"
#include "io_util.hpp"

namespace coldrec {

namespace {

constexpr double kTagDensity = 0.3;
// Planted scores are rescaled to this standard deviation before squashing;
// large enough that the logistic covers a wide probability range.
constexpr double kSignalScale = 3.0;

std::vector<std::string> numbered_ids(char prefix, std::size_t count) {
  int width = 1;
  for (std::size_t v = count > 0 ? count - 1 : 0; v >= 10; v /= 10) ++width;
  std::vector<std::string> ids(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string digits = std::to_string(i);
    ids[i] = prefix + std::string(width - static_cast<int>(digits.size()), '0') + digits;
  }
  return ids;
}

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

void validate(const SyntheticConfig& c) {
  if (c.n < 1 || c.m < 1 || c.r < 1 || c.s < 1)
    throw data_error("generate_synthetic: all dimensions must be >= 1");
  if (!(c.density > 0.0 && c.density < 1.0))
    throw data_error("generate_synthetic: density must lie in (0,1)");
  if (c.interaction_rank < 1) throw data_error("generate_synthetic: interaction_rank must be >= 1");
  if (!(c.noise >= 0.0 && c.noise < 0.5))
    throw data_error("generate_synthetic: noise must lie in [0, 0.5)");
}

}  // namespace

Dataset generate_synthetic(const SyntheticConfig& config) {
  validate(config);
  const std::size_t n = config.n, m = config.m, r = config.r, s = config.s;

  Dataset ds;
  ds.likes.player_ids = numbered_ids('p', n);
  ds.likes.game_ids = numbered_ids('g', m);
  ds.tags.game_ids = ds.likes.game_ids;
  ds.tags.tag_names = numbered_ids('t', r);
  ds.questions.player_ids = ds.likes.player_ids;
  ds.questions.question_ids = numbered_ids('q', s);

  Rng tag_rng(derive_seed(config.rng_seed, "tags"));
  ds.tags.values = Matrix(m, r);
  for (double& v : ds.tags.values.data()) v = tag_rng.next_unit() < kTagDensity ? 1.0 : 0.0;

  Rng question_rng(derive_seed(config.rng_seed, "questions"));
  ds.questions.values = Matrix(n, s);
  for (double& v : ds.questions.values.data())
    v = static_cast<double>(question_rng.next_int(-2, 2));

  // Planted interaction: sum of `interaction_rank` outer products.
  Rng interaction_rng(derive_seed(config.rng_seed, "interaction"));
  Matrix planted(r, s);
  for (std::size_t l = 0; l < config.interaction_rank; ++l) {
    std::vector<double> u(r), v(s);
    for (double& x : u) x = interaction_rng.next_gaussian();
    for (double& x : v) x = interaction_rng.next_gaussian();
    for (std::size_t a = 0; a < r; ++a) kernels::axpy(u[a], v.data(), planted.row(a), s);
  }

  // scores(i,j) = x_tags(j)^T A* x_questions(i), rescaled to a fixed spread.
  Matrix game_profile = matmul(ds.tags.values, planted);  // m x s
  Matrix scores = matmul_nt(ds.questions.values, game_profile);  // n x m
  const std::size_t cells = n * m;
  const double mean = kernels::sum(scores.data().data(), cells) / static_cast<double>(cells);
  double var = 0.0;
  for (double v : scores.data()) var += (v - mean) * (v - mean);
  var /= static_cast<double>(cells);
  if (var > 0.0) {
    const double scale = kSignalScale / std::sqrt(var);
    for (double& v : scores.data()) v = (v - mean) * scale;
  }

  // Calibrate the logistic intercept so the expected like fraction hits the
  // target density.
  double lo = -60.0, hi = 60.0;
  double intercept = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    intercept = 0.5 * (lo + hi);
    double p_mean = 0.0;
    for (double v : scores.data()) p_mean += logistic(v + intercept);
    p_mean /= static_cast<double>(cells);
    if (std::abs(p_mean - config.density) < 1e-12) break;
    if (p_mean < config.density)
      lo = intercept;
    else
      hi = intercept;
  }

  Matrix probs(n, m);
  for (std::size_t i = 0; i < cells; ++i)
    probs.data()[i] = logistic(scores.data()[i] + intercept);

  Rng like_rng(derive_seed(config.rng_seed, "likes"));
  ds.likes.values = Matrix(n, m);
  for (std::size_t i = 0; i < cells; ++i)
    ds.likes.values.data()[i] = like_rng.next_unit() < probs.data()[i] ? 1.0 : 0.0;

  const double realized = ds.likes.density();
  if (realized < 0.8 * config.density || realized > 1.2 * config.density) {
    throw numeric_error("generate_synthetic: calibration failed, achieved density " +
                        format_double(realized) + " for target " +
                        format_double(config.density));
  }

  if (config.noise > 0.0) {
    Rng noise_rng(derive_seed(config.rng_seed, "noise"));
    for (double& v : ds.likes.values.data()) {
      if (noise_rng.next_unit() < config.noise) v = 1.0 - v;
    }
  }

  // Every player and game must appear in the pair-format CSV, so empty rows
  // and columns get their most probable cell forced on.
  for (std::size_t i = 0; i < n; ++i) {
    if (kernels::sum(ds.likes.values.row(i), m) == 0.0) {
      std::size_t best = 0;
      for (std::size_t j = 1; j < m; ++j)
        if (probs(i, j) > probs(i, best)) best = j;
      ds.likes.values(i, best) = 1.0;
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) col += ds.likes.values(i, j);
    if (col == 0.0) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (probs(i, j) > probs(best, j)) best = i;
      ds.likes.values(best, j) = 1.0;
    }
  }

  return ds;
}

}  // namespace coldrec
