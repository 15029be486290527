#include "toricvb/filtration.hpp"

#include <algorithm>

#include "toricvb/error.hpp"

namespace toricvb {

Filtration::Filtration(std::size_t ambient_dim, std::vector<FiltrationStep> steps)
    : ambient_dim_(ambient_dim), steps_(std::move(steps)), zero_(Subspace::zero(ambient_dim)) {
  if (ambient_dim_ == 0) throw InvariantViolation("filtration of the zero space");
  if (steps_.empty()) throw InvariantViolation("filtration has no steps");
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const auto& s = steps_[i];
    if (s.space.ambient_dim() != ambient_dim_) {
      throw InvariantViolation("step " + std::to_string(i) + " lives in Q^" + std::to_string(s.space.ambient_dim()) +
                               ", expected Q^" + std::to_string(ambient_dim_));
    }
    if (s.space.is_zero()) throw InvariantViolation("step " + std::to_string(i) + " is the zero space");
    if (i == 0) {
      if (!s.space.is_full()) throw InvariantViolation("first step must be the whole space");
      continue;
    }
    const auto& prev = steps_[i - 1];
    if (s.until <= prev.until) {
      throw InvariantViolation("step " + std::to_string(i) + " index " + std::to_string(s.until) +
                               " does not exceed " + std::to_string(prev.until));
    }
    if (s.space.dim() >= prev.space.dim() || !s.space.is_subspace_of(prev.space)) {
      throw InvariantViolation("step " + std::to_string(i) + " is not a proper subspace of step " +
                               std::to_string(i - 1));
    }
  }
}

Filtration Filtration::single_drop(std::size_t ambient_dim, std::int64_t until) {
  return Filtration(ambient_dim, {{until, Subspace::full(ambient_dim)}});
}

Filtration Filtration::tabulate(std::size_t ambient_dim, std::vector<std::int64_t> points,
                                const std::function<Subspace(std::int64_t)>& space_at) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) throw InvariantViolation("tabulate needs at least one point");
  std::vector<Subspace> spaces;
  spaces.reserve(points.size());
  for (auto p : points) spaces.push_back(space_at(p));
  std::vector<FiltrationStep> steps;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (spaces[i].is_zero()) break;
    if (i + 1 < points.size() && spaces[i] == spaces[i + 1]) continue;
    steps.push_back({points[i], spaces[i]});
  }
  return Filtration(ambient_dim, std::move(steps));
}

const Subspace& Filtration::eval(std::int64_t j) const {
  auto it = std::lower_bound(steps_.begin(), steps_.end(), j,
                             [](const FiltrationStep& s, std::int64_t v) { return s.until < v; });
  return it == steps_.end() ? zero_ : it->space;
}

Filtration Filtration::shifted(std::int64_t by) const {
  Filtration out = *this;
  for (auto& s : out.steps_) s.until += by;
  return out;
}

}  // namespace toricvb
