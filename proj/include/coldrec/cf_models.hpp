#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coldrec/data.hpp"
#include "coldrec/linalg.hpp"

namespace coldrec {

// --- multivariate normal conditional-expectation model --------------------

struct MvnModel {
  Moments moments;
  bool use_correlation = false;
  // Ridge added to the conditioned block, as a fraction of max(diag sigma).
  double jitter_scale = 1e-6;
  std::vector<std::string> game_ids;

  double effective_jitter() const;
};

// Stores the sample moments of R. The correlation variant substitutes the
// correlation matrix for sigma and zeroes the mean, which removes popularity
// from the predictions.
MvnModel mvn_fit(const GameLikeMatrix& likes, bool use_correlation = false,
                 double jitter_scale = 1e-6);

// Conditional expectation of all game scores given that the games in
// `liked` are known to be 1. Empty conditioning returns mu. Scores for the
// conditioned games are returned too; ranking excludes them downstream.
std::vector<double> mvn_predict(const MvnModel& model, std::span<const std::size_t> liked);

// --- item-item k nearest neighbours ----------------------------------------

enum class Similarity { cosine, phi };

struct KnnModel {
  Matrix s;  // m x m, symmetric
  Similarity kind = Similarity::cosine;
  std::size_t k = 0;  // neighborhood size, m by default
  std::vector<std::string> game_ids;
  // Per game: the k most similar games (ties to the lower index); only
  // filled when k < m, the full neighborhood needs no selection.
  std::vector<std::vector<int>> neighbors;
};

// Pairwise column similarities. Zero-norm (cosine) or zero-variance (phi)
// games are similar only to themselves. k = 0 means the maximum
// neighborhood k = m.
KnnModel knn_similarity(const GameLikeMatrix& likes, Similarity kind, std::size_t k = 0);

// Unnormalized similarity-weighted sum over the k nearest neighbours of
// each game.
std::vector<double> knn_predict(const KnnModel& model, std::span<const double> liked_row);

// --- regularized matrix factorization via alternating least squares -------

struct AlsOptions {
  int max_iters = 100;
  double rel_tol = 1e-4;  // stop when the objective's relative change drops below
  std::uint64_t rng_seed = 0;
  double init_scale = 0.1;
};

struct SvdModel {
  Matrix p;  // n x k latent player factors
  Matrix g;  // m x k latent game factors
  double lambda = 0.0;
  std::size_t k = 0;
  std::vector<std::string> player_ids, game_ids;
  // Penalized squared-error objective after initialization and after every
  // half-step; non-increasing by construction.
  std::vector<double> objective_trace;
};

// Alternating exact ridge updates of P and G. lambda = 0 is plain
// unregularized factorization and fails on singular Gram matrices.
SvdModel svd_fit_als(const GameLikeMatrix& likes, std::size_t k, double lambda,
                     const AlsOptions& opts = {});

double svd_predict(const SvdModel& model, std::size_t player, std::size_t game);

// Score row for one player over all games: G * P_i.
std::vector<double> svd_score_row(const SvdModel& model, std::size_t player);

}  // namespace coldrec
