#include "tuition/market.hpp"

#include "tuition/errors.hpp"

namespace tuition {

namespace {

double share(double mine, double theirs, const char* what) {
  const double total = mine + theirs;
  if (!(total > 0.0)) {
    throw SimulationError(FailureKind::degenerate_market, std::string("zero total ") + what);
  }
  return mine / total;
}

}  // namespace

IndexPair ranking_index(const RankingInputs& a, const RankingInputs& b, const RankingWeights& w) {
  auto index_of = [&](const RankingInputs& self, const RankingInputs& other) {
    return w.reputation * share(self.reputation, other.reputation, "reputation") +
           w.expenditure *
               share(self.expenditure_per_student, other.expenditure_per_student, "expenditure per student") +
           w.facilities * share(self.space_per_student, other.space_per_student, "space per student");
  };
  return {index_of(a, b), index_of(b, a)};
}

RankPair assign_ranks(double index_a, double index_b) {
  return {index_a >= index_b ? 1 : 2, index_b >= index_a ? 1 : 2};
}

ApplicationSplit allocate_applications(double pool, const RankPair& ranks) {
  for (int r : ranks) {
    if (r != 1 && r != 2) throw SimulationError(FailureKind::internal, "rank outside {1,2}");
  }
  if (ranks[0] == 2 && ranks[1] == 2) {
    throw SimulationError(FailureKind::internal, "both colleges ranked second");
  }
  const double total = ranks[0] + ranks[1];
  // The first-ranked college gets its share and the other takes the remainder.
  // Its share is at least half the pool, so the subtraction is exact and the
  // pool is conserved bit for bit.
  const int lead = ranks[0] <= ranks[1] ? 0 : 1;
  const double first = pool * (1.0 - ranks[lead] / total);
  ApplicationSplit split{};
  split[lead] = first;
  split[1 - lead] = pool - first;
  return split;
}

}  // namespace tuition
