#include "pk/engine/path_compression.hpp"

namespace pk::engine {

Term states_equal(const encoder::TransitionSystem& ts, Step i, Step j)
{
  std::vector<Term> eqs;
  for (const auto& v : ts.vars) {
    eqs.push_back(logic::eq(logic::indexed_var(v.name, v.sort, i), logic::indexed_var(v.name, v.sort, j)));
  }
  return logic::land(std::move(eqs));
}

std::vector<Term> compression_at(const encoder::TransitionSystem& ts, Step j)
{
  std::vector<Term> out;
  for (Step i = 0; i < j; ++i) out.push_back(logic::lnot(states_equal(ts, i, j)));
  out.push_back(logic::lnot(logic::instantiate_state(ts.init, j)));
  return out;
}

std::vector<Term> path_compression_constraints(const encoder::TransitionSystem& ts, Step k)
{
  std::vector<Term> out;
  for (Step j = 1; j <= k + 1; ++j) {
    auto c = compression_at(ts, j);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

}  // namespace pk::engine
