#pragma once

// Exact-uniform generation of 3-noncrossing partitions and of 2-regular
// 3-noncrossing partitions.
//
// Both samplers walk a Markov chain over shapes whose transition weights are
// exact completion counts, so the probability of a complete walk telescopes
// to 1 / (number of walks). Plain partitions are sampled one half-step at a
// time against the omega table. 2-regular partitions are sampled as
// loop-free braid walks one vertex pair at a time against the sigma* table,
// then mapped back through theta_inverse; the loop-free condition only
// couples the two half-steps of a pair, so pair-level weights are exact.

#include "ncpart/bigint.hpp"
#include "ncpart/core_model.hpp"
#include "ncpart/count_table.hpp"
#include "ncpart/errors.hpp"
#include "ncpart/random_stream.hpp"
#include "ncpart/tableau.hpp"
#include "ncpart/walk_engine.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ncpart {

struct Candidate {
  Move first = Move::nothing;   // the half-step, or the odd half of a pair
  Move second = Move::nothing;  // even half of a pair; `nothing` for half-steps
  WalkPoint via;                // point after `first`
  WalkPoint point;              // resulting point
  const BigCount* weight_cell;  // completion count, owned by the count table

  const BigCount& weight() const { return *weight_cell; }
};

struct TransitionDistribution {
  std::vector<Candidate> candidates;
  const BigCount* total_cell = nullptr;  // equals the sum of the weights

  const BigCount& total() const { return *total_cell; }

  /// Candidate owning the draw r in [0, total).
  const Candidate& select(BigCount r) const {
    for (const Candidate& c : candidates) {
      if (r < c.weight()) return c;
      r -= c.weight();
    }
    throw LogicError("draw outside the distribution total");
  }
};

namespace detail {

/// Throws unless the candidate weights are positive in sum and add up to
/// the table total.
inline void check_total(const TransitionDistribution& d, const char* unit, int index, WalkPoint p) {
  thread_local BigCount sum;
  sum = 0;
  for (const Candidate& c : d.candidates) sum += c.weight();
  auto where = [&] {
    return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ") at " + unit + ' ' + std::to_string(index);
  };
  if (sum == 0) throw LogicError("unreachable state " + where());
  if (sum != d.total()) throw LogicError("transition weights do not sum to the completion count from " + where());
}

}  // namespace detail

inline void require_omega_for(const CountTable& omega, int n) {
  if (omega.kind() != TableKind::omega) throw std::invalid_argument("expected an omega table");
  if (omega.layer_count() < 2 * n + 1)
    throw std::invalid_argument("omega table built for n=" + std::to_string(omega.n()) + " cannot serve n=" +
                                std::to_string(n));
}

inline void require_sigma_for(const CountTable& sigma, int braid_vertices) {
  if (sigma.kind() != TableKind::sigma_star) throw std::invalid_argument("expected a sigma_star table");
  if (sigma.layer_count() < 2 * braid_vertices + 1)
    throw std::invalid_argument("sigma_star table built for n=" + std::to_string(sigma.n()) + " cannot serve " +
                                std::to_string(braid_vertices) + " braid vertices");
}

/// Weights for the half-step after `step_index` (0-based) steps of a
/// partition walk of length 2n sitting at `p`. Candidates are listed in the
/// fixed order stay, row 1, row 2 and restricted to the chamber.
inline TransitionDistribution partition_step_weights(WalkPoint p, int step_index, int n, const CountTable& omega) {
  require_omega_for(omega, n);
  if (step_index < 0 || step_index >= 2 * n) throw std::out_of_range("step index outside [0, 2n)");
  const bool odd = (step_index + 1) % 2 == 1;
  const Move row1 = odd ? Move::remove_row1 : Move::add_row1;
  const Move row2 = odd ? Move::remove_row2 : Move::add_row2;
  const int remaining = 2 * n - step_index - 1;
  TransitionDistribution d;
  d.candidates.reserve(3);
  for (Move m : {Move::nothing, row1, row2}) {
    WalkPoint q = p.moved(m);
    if (!q.in_chamber()) continue;
    d.candidates.push_back({m, Move::nothing, q, q, &omega.at(remaining, q.a, q.b)});
  }
  d.total_cell = &omega.at(remaining + 1, p.a, p.b);
  detail::check_total(d, "step", step_index, p);
  return d;
}

/// Weights for braid vertex v (1-based) of the loop-free braid walk over
/// [n-1] that encodes a 2-regular partition of [n].
inline TransitionDistribution braid_pair_weights(WalkPoint p, int vertex, int n, const CountTable& sigma) {
  const int braid_vertices = n - 1;
  require_sigma_for(sigma, braid_vertices);
  if (vertex < 1 || vertex > braid_vertices) throw std::out_of_range("braid vertex outside [1, n-1]");
  const int remaining = 2 * (braid_vertices - vertex);
  TransitionDistribution d;
  d.candidates.reserve(8);
  for (Move o : {Move::nothing, Move::add_row1, Move::add_row2}) {
    WalkPoint via = p.moved(o);
    if (!via.in_chamber()) continue;
    for (Move e : {Move::nothing, Move::remove_row1, Move::remove_row2}) {
      if (o == Move::add_row1 && e == Move::remove_row1) continue;  // a loop
      WalkPoint q = via.moved(e);
      if (!q.in_chamber()) continue;
      d.candidates.push_back({o, e, via, q, &sigma.at(remaining, q.a, q.b)});
    }
  }
  d.total_cell = &sigma.at(remaining + 2, p.a, p.b);
  detail::check_total(d, "braid vertex", vertex, p);
  return d;
}

namespace detail {

inline void accumulate(BigRational* probability, const BigCount& weight, const BigCount& total) {
  if (probability) *probability *= BigRational(weight, total);
}

inline void check_telescoped(const BigRational* probability, const BigCount& universe) {
  if (probability && *probability != BigRational(BigCount(1), universe))
    throw LogicError("path probability does not equal 1/" + universe.str());
}

}  // namespace detail

/// Draws a uniformly random partition walk of length 2n. If
/// `path_probability` is given, it is multiplied by the exact probability of
/// every transition taken and checked against 1/w(2n,1,0) at the end.
inline VacillatingTableau sample_partition_walk(int n, RandomStream& rng, const CountTable& omega,
                                                BigRational* path_probability = nullptr) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  require_omega_for(omega, n);
  std::vector<Move> moves;
  moves.reserve(2 * static_cast<std::size_t>(n));
  WalkPoint p{1, 0};
  for (int h = 0; h < 2 * n; ++h) {
    TransitionDistribution d = partition_step_weights(p, h, n, omega);
    const Candidate& c = d.select(rng.uniform_below(d.total()));
    detail::accumulate(path_probability, c.weight(), d.total());
    moves.push_back(c.first);
    p = c.point;
  }
  if (!(p == WalkPoint{1, 0})) throw LogicError("partition walk did not return to the origin");
  detail::check_telescoped(path_probability, omega.at(2 * n, 1, 0));
  return VacillatingTableau::from_moves(Flavor::partition, moves);
}

inline SetPartition sample_partition(int n, RandomStream& rng, const CountTable& omega) {
  return tableau_to_partition(sample_partition_walk(n, rng, omega));
}

/// Convenience overload that builds the omega table for this call.
inline SetPartition sample_partition(int n, RandomStream& rng) {
  return sample_partition(n, rng, build_omega_table(n));
}

/// Draws a uniformly random loop-free braid walk over [n-1] (length 2(n-1)).
inline VacillatingTableau sample_braid_walk(int n, RandomStream& rng, const CountTable& sigma,
                                            BigRational* path_probability = nullptr) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const int braid_vertices = n - 1;
  require_sigma_for(sigma, braid_vertices);
  std::vector<Move> moves;
  moves.reserve(2 * static_cast<std::size_t>(braid_vertices));
  WalkPoint p{1, 0};
  for (int v = 1; v <= braid_vertices; ++v) {
    TransitionDistribution d = braid_pair_weights(p, v, n, sigma);
    const Candidate& c = d.select(rng.uniform_below(d.total()));
    detail::accumulate(path_probability, c.weight(), d.total());
    moves.push_back(c.first);
    moves.push_back(c.second);
    p = c.point;
  }
  if (!(p == WalkPoint{1, 0})) throw LogicError("braid walk did not return to the origin");
  detail::check_telescoped(path_probability, sigma.at(2 * braid_vertices, 1, 0));
  return VacillatingTableau::from_moves(Flavor::braid, moves);
}

/// Partition tableau of a uniformly random 2-regular 3-noncrossing partition.
inline VacillatingTableau sample_two_regular_walk(int n, RandomStream& rng, const CountTable& sigma,
                                                  BigRational* path_probability = nullptr) {
  return theta_inverse(sample_braid_walk(n, rng, sigma, path_probability));
}

inline SetPartition sample_two_regular_partition(int n, RandomStream& rng, const CountTable& sigma) {
  if (n == 1) return SetPartition::singletons(1);
  return tableau_to_partition(sample_two_regular_walk(n, rng, sigma));
}

enum class Variant { plain, two_regular };

/// Holds the count table for one (variant, n) and draws samples from it.
class PartitionSampler {
 public:
  PartitionSampler(Variant variant, int n, const BuildLimits& limits = {})
      : variant_(variant), n_(n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    table_ = std::make_shared<const CountTable>(variant == Variant::plain
                                                    ? build_omega_table(n, limits)
                                                    : build_sigma_star(n - 1, SigmaMethod::direct_dp, limits));
  }

  PartitionSampler(Variant variant, int n, std::shared_ptr<const CountTable> table)
      : variant_(variant), n_(n), table_(std::move(table)) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (variant == Variant::plain)
      require_omega_for(*table_, n);
    else
      require_sigma_for(*table_, n - 1);
  }

  Variant variant() const { return variant_; }
  int n() const { return n_; }
  const CountTable& table() const { return *table_; }

  /// Number of structures the sampler draws from.
  BigCount universe_size() const {
    return variant_ == Variant::plain ? table_->at(2 * n_, 1, 0) : table_->at(2 * (n_ - 1), 1, 0);
  }

  /// Partition-flavor tableau of the sampled structure.
  VacillatingTableau walk(RandomStream& rng, BigRational* path_probability = nullptr) const {
    return variant_ == Variant::plain ? sample_partition_walk(n_, rng, *table_, path_probability)
                                      : sample_two_regular_walk(n_, rng, *table_, path_probability);
  }

  SetPartition operator()(RandomStream& rng) const { return tableau_to_partition(walk(rng)); }

 private:
  Variant variant_;
  int n_;
  std::shared_ptr<const CountTable> table_;
};

}  // namespace ncpart
