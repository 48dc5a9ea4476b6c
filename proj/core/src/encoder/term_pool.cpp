#include "pk/encoder/term_pool.hpp"

#include <algorithm>
#include <set>

namespace pk::encoder {

namespace {

struct Occurrence {
  Term term;
  std::size_t depth;
  std::size_t order;
};

}  // namespace

TermPool harvest_terms(const TransitionSystem& ts, const PoolCaps& caps)
{
  std::set<std::string> fresh;
  for (const auto& v : ts.vars) {
    if (v.role == VarRole::Fresh) fresh.insert(v.name);
  }
  auto mentions_fresh = [&](const Term& t) {
    for (const auto& [name, sort] : logic::free_state_vars(t)) {
      if (fresh.count(name)) return true;
    }
    return false;
  };

  std::vector<Term> sources;
  for (const Term& f : {ts.init, logic::strip_primes(ts.trans)}) {
    for (const auto& c : logic::conjuncts(f)) {
      bool definitional = c.is_app() && c.op() == logic::Op::Eq && c.arg(0).is_var();
      sources.push_back(definitional ? c.arg(1) : c);
    }
  }
  if (caps.from_property) {
    for (const auto& p : ts.properties) sources.push_back(p);
  }

  std::vector<Occurrence> subterms;
  std::set<Term, logic::TermLess> seen;
  std::set<logic::Integer> int_constants;
  bool saw_false = false;
  for (const auto& src : sources) {
    logic::visit_subterms(src, [&](const Term& t) {
      if (t.is_const()) {
        if (t.sort() == Sort::Int) int_constants.insert(t.value().as_integer());
        if (t.is_false()) saw_false = true;
        return false;
      }
      if (t.is_var()) return false;
      if (t.sort() != Sort::Real && !mentions_fresh(t) && seen.insert(t).second) {
        subterms.push_back({t, t.depth(), subterms.size()});
      }
      return true;
    });
  }
  std::stable_sort(subterms.begin(), subterms.end(),
                   [](const Occurrence& a, const Occurrence& b) { return a.depth < b.depth; });

  TermPool pool;
  auto push = [](std::vector<Term>& out, std::set<Term, logic::TermLess>& dedup, const Term& t) {
    if (dedup.insert(t).second) out.push_back(t);
  };
  std::set<Term, logic::TermLess> int_seen, bool_seen;
  for (const auto& v : ts.vars) {
    if (v.role == VarRole::Fresh) continue;
    if (v.sort == Sort::Int) push(pool.int_terms, int_seen, logic::var(v.name, v.sort));
    if (v.sort == Sort::Bool) push(pool.bool_terms, bool_seen, logic::var(v.name, v.sort));
  }
  for (const auto& o : subterms) {
    if (o.term.sort() == Sort::Int) push(pool.int_terms, int_seen, o.term);
    if (o.term.sort() == Sort::Bool) push(pool.bool_terms, bool_seen, o.term);
  }
  push(pool.int_terms, int_seen, logic::int_const(0));
  push(pool.int_terms, int_seen, logic::int_const(1));
  for (const auto& n : int_constants) push(pool.int_terms, int_seen, logic::int_const(n));
  push(pool.bool_terms, bool_seen, logic::bool_const(true));
  if (saw_false) push(pool.bool_terms, bool_seen, logic::bool_const(false));

  if (pool.int_terms.size() > caps.int_terms) pool.int_terms.resize(caps.int_terms);
  if (pool.bool_terms.size() > caps.bool_terms) pool.bool_terms.resize(caps.bool_terms);
  return pool;
}

}  // namespace pk::encoder
