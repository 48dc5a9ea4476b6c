#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pk/encoder/term_pool.hpp"
#include "pk/logic/evaluate.hpp"

namespace pk::invgen {

using logic::Assignment;
using logic::Step;
using logic::Term;

/// A binary relation schema R[s, t] over terms of one sort.
struct Template {
  std::string name;
  logic::Sort sort = logic::Sort::Int;
  std::function<Term(const Term&, const Term&)> instantiate;
};

/// s ≤ t over Int terms.
Template int_leq();
/// s ⇒ t over Bool terms.
Template bool_imp();

struct TemplateChoice {
  bool int_leq = true;
  bool bool_imp = true;
};

std::vector<Template> templates(const TemplateChoice& choice);

struct Candidate {
  std::size_t id = 0;
  Term formula;
  bool alive = true;
};

/// Conjunction of candidate invariants; dead conjuncts stay in place so ids
/// remain stable.
class CandidateSet {
 public:
  CandidateSet() = default;
  explicit CandidateSet(std::vector<Term> formulas);

  const std::vector<Candidate>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  std::size_t alive_count() const;
  std::vector<Candidate> alive() const;
  /// ∧ of alive conjuncts.
  Term conjunction() const;
  /// ∧ of alive conjuncts instantiated at step i.
  Term at(Step i) const;
  void kill(std::size_t id) { items_.at(id).alive = false; }

 private:
  std::vector<Candidate> items_;
};

/// R[s, t] for every template and every ordered pair of distinct pool terms
/// of the template's sort, in pool order.
CandidateSet generate_candidates(const encoder::TermPool& pool, const std::vector<Template>& templates);

/// Restriction of a to the variables of f.
Assignment project(const Assignment& a, const Term& f);

/// Kills every alive conjunct that a falsifies at step `at_step`. Conjuncts
/// whose value is undefined under a are kept.
CandidateSet filter(CandidateSet c, const Assignment& a, Step at_step);

}  // namespace pk::invgen
