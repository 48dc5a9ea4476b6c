#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pk/logic/number.hpp"
#include "pk/logic/value.hpp"

namespace pk::logic {

/// Raised when a term would violate a construction invariant (ill-sorted
/// arguments, nonlinear product, zero divisor). Always a programming error.
class LogicError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Op : std::uint8_t {
  Add,
  Sub,
  Neg,
  Mul,
  IntDiv,
  Mod,
  Lt,
  Le,
  Eq,
  Ge,
  Gt,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Ite,
  Apply,  // uninterpreted function symbol
};

std::string_view to_string(Op op);

/// How a variable is anchored in time. State formulas use Current (and
/// transition formulas Next for primed variables); instantiation maps both
/// onto Indexed variables.
enum class Timing : std::uint8_t { Current, Next, Indexed };

using Step = std::uint32_t;

namespace detail {
struct TermNode;
}

/// Immutable, structurally compared term. Copies are cheap (shared node).
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Const, App };

  /// The constant `true`.
  Term();

  Kind kind() const;
  Sort sort() const;
  std::size_t hash() const;
  std::size_t depth() const;

  bool is_var() const { return kind() == Kind::Var; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_true() const;
  bool is_false() const;

  const std::string& name() const;
  Timing timing() const;
  Step step() const;

  const Value& value() const;

  Op op() const;
  std::span<const Term> args() const;
  const Term& arg(std::size_t i) const { return args()[i]; }
  /// Function symbol of an Apply node.
  const std::string& function() const;

  const void* node_id() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> node) : node_(std::move(node)) {}
  friend Term make_node(detail::TermNode&& node);

  std::shared_ptr<const detail::TermNode> node_;
};

/// Deterministic total order on terms (structural, independent of addresses).
int compare(const Term& a, const Term& b);

struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
};
struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// ---------------------------------------------------------------------------
// Construction. Arithmetic on two constants is folded so that products keep a
// constant factor; everything else is built as written.

Term bool_const(bool b);
Term int_const(Integer n);
Term real_const(Rational q);
Term constant(const Value& v);

Term var(std::string name, Sort sort);
Term next_var(std::string name, Sort sort);
Term indexed_var(std::string name, Sort sort, Step step);

Term add(Term a, Term b);
Term sub(Term a, Term b);
Term neg(Term a);
Term mul(Term a, Term b);
Term int_div(Term a, const Integer& divisor);
Term mod(Term a, const Integer& divisor);

Term lt(Term a, Term b);
Term le(Term a, Term b);
Term eq(Term a, Term b);
Term ge(Term a, Term b);
Term gt(Term a, Term b);

Term lnot(Term a);
Term land(std::vector<Term> args);
Term land(Term a, Term b);
Term lor(std::vector<Term> args);
Term lor(Term a, Term b);
Term implies(Term a, Term b);
Term iff(Term a, Term b);
Term ite(Term c, Term then_t, Term else_t);
Term apply(std::string function, Sort result, std::vector<Term> args);

/// Builds an application exactly as given (no folding); validates sorts.
Term make_app(Op op, std::vector<Term> args, std::string function = {});

// ---------------------------------------------------------------------------
// Indexed variables and step instantiation.

struct IndexedVar {
  std::string name;
  Step step = 0;

  friend auto operator<=>(const IndexedVar&, const IndexedVar&) = default;
};

std::ostream& operator<<(std::ostream& os, const IndexedVar& v);

/// Maps Current variables to step i and Next variables to step i + 1.
Term instantiate(const Term& f, Step i);
/// P(x_i) from a state formula P.
Term instantiate_state(const Term& f, Step i);
/// T(x_i, x_{i+1}) from a transition formula T.
Term instantiate_trans(const Term& f, Step i);
/// Reads every Next variable as Current.
Term strip_primes(const Term& f);

std::set<IndexedVar> free_indexed_vars(const Term& f);
/// Names of Current/Next variables, with their sorts.
std::map<std::string, Sort> free_state_vars(const Term& f);
bool mentions_next(const Term& f);
bool mentions_indexed(const Term& f);

/// Pre-order traversal; `visit` returning false prunes the subtree.
void visit_subterms(const Term& f, const std::function<bool(const Term&)>& visit);

/// Top-level conjuncts of an And (or the term itself).
std::vector<Term> conjuncts(const Term& f);

/// Multiset of operators appearing in f, used to check that renaming keeps
/// the formula's shape.
std::map<Op, std::size_t> operator_counts(const Term& f);

std::ostream& operator<<(std::ostream& os, const Term& t);

}  // namespace pk::logic
