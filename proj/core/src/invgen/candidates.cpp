#include "pk/invgen/candidates.hpp"

namespace pk::invgen {

Template int_leq() { return {"int-leq", logic::Sort::Int, [](const Term& s, const Term& t) { return logic::le(s, t); }}; }

Template bool_imp()
{
  return {"bool-imp", logic::Sort::Bool, [](const Term& s, const Term& t) { return logic::implies(s, t); }};
}

std::vector<Template> templates(const TemplateChoice& choice)
{
  std::vector<Template> out;
  if (choice.int_leq) out.push_back(int_leq());
  if (choice.bool_imp) out.push_back(bool_imp());
  return out;
}

CandidateSet::CandidateSet(std::vector<Term> formulas)
{
  for (auto& f : formulas) items_.push_back({items_.size(), std::move(f), true});
}

std::size_t CandidateSet::alive_count() const
{
  std::size_t n = 0;
  for (const auto& c : items_) n += c.alive;
  return n;
}

std::vector<Candidate> CandidateSet::alive() const
{
  std::vector<Candidate> out;
  for (const auto& c : items_) {
    if (c.alive) out.push_back(c);
  }
  return out;
}

Term CandidateSet::conjunction() const
{
  std::vector<Term> fs;
  for (const auto& c : items_) {
    if (c.alive) fs.push_back(c.formula);
  }
  return logic::land(std::move(fs));
}

Term CandidateSet::at(Step i) const { return logic::instantiate_state(conjunction(), i); }

CandidateSet generate_candidates(const encoder::TermPool& pool, const std::vector<Template>& templates)
{
  std::vector<Term> formulas;
  for (const auto& tpl : templates) {
    const auto& terms = tpl.sort == logic::Sort::Bool ? pool.bool_terms : pool.int_terms;
    for (const auto& s : terms) {
      for (const auto& t : terms) {
        if (s == t) continue;
        formulas.push_back(tpl.instantiate(s, t));
      }
    }
  }
  return CandidateSet(std::move(formulas));
}

Assignment project(const Assignment& a, const Term& f) { return logic::restrict_to(a, logic::free_indexed_vars(f)); }

CandidateSet filter(CandidateSet c, const Assignment& a, Step at_step)
{
  for (const auto& cand : c.items()) {
    if (!cand.alive) continue;
    if (logic::evaluate_bool(logic::instantiate_state(cand.formula, at_step), a) == false) c.kill(cand.id);
  }
  return c;
}

}  // namespace pk::invgen
