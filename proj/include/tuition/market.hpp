#pragma once

#include <array>

namespace tuition {

/// alpha_R, alpha_e, alpha_f. Must be non-negative and sum to one.
struct RankingWeights {
  double reputation = 1.0 / 3.0;
  double expenditure = 1.0 / 3.0;
  double facilities = 1.0 / 3.0;
  bool operator==(const RankingWeights&) const = default;
};

/// The three figures a college reports to the ranking agency.
struct RankingInputs {
  double reputation = 0.0;               // Q
  double expenditure_per_student = 0.0;  // e
  double space_per_student = 0.0;        // b_Y
  bool operator==(const RankingInputs&) const = default;
};

using IndexPair = std::array<double, 2>;
using RankPair = std::array<int, 2>;
using ApplicationSplit = std::array<double, 2>;

IndexPair ranking_index(const RankingInputs& a, const RankingInputs& b, const RankingWeights& w);

/// Rank 1 when a college's index is at least its rival's; a tie ranks both first.
RankPair assign_ranks(double index_a, double index_b);

ApplicationSplit allocate_applications(double pool, const RankPair& ranks);

struct MarketState {
  bool rankings_enabled = false;
  IndexPair index{0.5, 0.5};
  RankPair ranks{0, 0};  // 0 = not ranked yet
  ApplicationSplit applications{0.0, 0.0};
  // Inputs reported at the previous ranking, used when rankings lag a year.
  bool has_lagged_inputs = false;
  std::array<RankingInputs, 2> lagged_inputs{};
  bool operator==(const MarketState&) const = default;
};

}  // namespace tuition
