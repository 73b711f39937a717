#ifndef SCG_STRUCTURE_HPP
#define SCG_STRUCTURE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scg/errors.hpp"

namespace scg {

enum class symbol_kind { function, relation, constant };

/** One signature symbol; index is the 1-based position used by encodings. */
struct symbol {
  int index = 0;
  std::string name;
  symbol_kind kind = symbol_kind::function;
  int arity = 0;

  friend bool operator==(const symbol&, const symbol&) = default;
};

/** Finite signature with contiguous indices starting at 1. */
class signature {
public:
  signature() = default;
  explicit signature(std::vector<symbol> symbols);

  const std::vector<symbol>& symbols() const { return symbols_; }
  const symbol& at(int index) const;
  bool has(int index) const;
  const symbol& by_name(const std::string& name) const;

  friend bool operator==(const signature&, const signature&) = default;

private:
  std::vector<symbol> symbols_;  // position i holds index i+1
};

/** Uniform query interface over a structure, string-keyed by element name.

    Finite structures answer from tables; computable structures answer from
    code. Implementations are pure: identical queries get identical answers,
    concurrent queries are safe. */
class structure_oracle {
public:
  virtual ~structure_oracle() = default;

  virtual bool signature_finite() const = 0;
  // Symbols with index <= max_m, in index order; a negative max_m means all
  // symbols and requires a finite signature.
  virtual std::vector<symbol> symbols_upto(int max_m) const = 0;
  virtual bool has_symbol(int m) const = 0;
  virtual symbol symbol_at(int m) const = 0;

  virtual bool domain_finite() const = 0;
  virtual std::vector<std::string> domain() const = 0;
  virtual bool element_exists(const std::string& key) const = 0;

  virtual std::string apply(int m, const std::vector<std::string>& args) const = 0;
  virtual bool holds(int m, const std::vector<std::string>& args) const = 0;

  virtual std::vector<std::string> generators() const = 0;
};

/** Finite structure backed by explicit tables. */
class fg_structure final : public structure_oracle {
public:
  fg_structure() = default;
  fg_structure(signature sig, std::vector<std::string> domain);

  void define_function(const std::string& sym, std::vector<std::string> args,
                       const std::string& value);
  void add_relation_tuple(const std::string& sym, std::vector<std::string> args);
  void set_generators(std::vector<std::string> gens);

  // Checks totality of function tables and membership of every referenced
  // element; throws parse_error with a description on failure.
  void validate() const;

  const signature& sig() const { return sig_; }

  bool signature_finite() const override { return true; }
  std::vector<symbol> symbols_upto(int max_m) const override;
  bool has_symbol(int m) const override { return sig_.has(m); }
  symbol symbol_at(int m) const override { return sig_.at(m); }
  bool domain_finite() const override { return true; }
  std::vector<std::string> domain() const override { return domain_; }
  bool element_exists(const std::string& key) const override;
  std::string apply(int m, const std::vector<std::string>& args) const override;
  bool holds(int m, const std::vector<std::string>& args) const override;
  std::vector<std::string> generators() const override { return generators_; }

  const std::map<int, std::map<std::vector<std::string>, std::string>>& function_tables() const {
    return fn_;
  }
  const std::map<int, std::set<std::vector<std::string>>>& relation_tables() const {
    return rel_;
  }

private:
  signature sig_;
  std::vector<std::string> domain_;
  std::set<std::string> domain_set_;
  std::map<int, std::map<std::vector<std::string>, std::string>> fn_;
  std::map<int, std::set<std::vector<std::string>>> rel_;
  std::vector<std::string> generators_;
};

// Replaces constants and 0-ary functions by unary relations holding exactly
// at the designated element; symbol indices and names are kept.
fg_structure normalize(const fg_structure& s);

fg_structure parse_structure(const std::string& text);
std::string serialize_structure(const fg_structure& s, const std::string& comment = "");

/** Term over a signature: a variable leaf or a function application. */
struct term {
  int var = -1;            // >= 0 on leaves
  int symbol = 0;          // function symbol index on applications
  std::vector<term> args;

  static term v(int var) { return term{var, 0, {}}; }
  static term app(int symbol, std::vector<term> args) { return term{-1, symbol, std::move(args)}; }
};

/** Quantifier-free formula tree. */
struct qf_formula {
  enum class node { atom_eq, atom_rel, neg, conj, disj };
  node kind = node::atom_eq;
  term lhs, rhs;                     // atom_eq
  int symbol = 0;                    // atom_rel
  std::vector<term> args;            // atom_rel
  std::vector<qf_formula> children;  // neg (1 child), conj, disj

  static qf_formula eq(term a, term b);
  static qf_formula rel(int symbol, std::vector<term> args);
  static qf_formula neg_of(qf_formula f);
  static qf_formula conj_of(std::vector<qf_formula> fs);
  static qf_formula disj_of(std::vector<qf_formula> fs);

  // Function and relation symbol indices occurring anywhere in the tree.
  void collect_symbols(std::set<int>& functions, std::set<int>& relations) const;
};

/** Universe concept: element type plus apply/holds, used by eval_qf. */
template <class U>
typename U::element eval_term(const term& t, const U& u,
                              const std::vector<typename U::element>& assignment) {
  if (t.var >= 0) {
    if (static_cast<std::size_t>(t.var) >= assignment.size())
      throw domain_error("unassigned variable in formula");
    return assignment[static_cast<std::size_t>(t.var)];
  }
  std::vector<typename U::element> args;
  args.reserve(t.args.size());
  for (const term& a : t.args) args.push_back(eval_term(a, u, assignment));
  return u.apply_fn(t.symbol, args);
}

template <class U>
bool eval_qf(const qf_formula& f, const U& u,
             const std::vector<typename U::element>& assignment) {
  switch (f.kind) {
    case qf_formula::node::atom_eq:
      return eval_term(f.lhs, u, assignment) == eval_term(f.rhs, u, assignment);
    case qf_formula::node::atom_rel: {
      std::vector<typename U::element> args;
      args.reserve(f.args.size());
      for (const term& a : f.args) args.push_back(eval_term(a, u, assignment));
      return u.holds_rel(f.symbol, args);
    }
    case qf_formula::node::neg:
      return !eval_qf(f.children[0], u, assignment);
    case qf_formula::node::conj:
      for (const auto& c : f.children)
        if (!eval_qf(c, u, assignment)) return false;
      return true;
    case qf_formula::node::disj:
      for (const auto& c : f.children)
        if (eval_qf(c, u, assignment)) return true;
      return false;
  }
  throw domain_error("corrupt formula node");
}

/** Adapts any structure_oracle to the universe concept with string elements. */
struct oracle_universe {
  using element = std::string;
  const structure_oracle* s;

  element apply_fn(int m, const std::vector<element>& args) const { return s->apply(m, args); }
  bool holds_rel(int m, const std::vector<element>& args) const { return s->holds(m, args); }
};

struct substructure_result {
  std::vector<std::string> elements;  // breadth-first discovery order
  bool complete = false;              // true when a fixed point was reached
};

// Closure of `tuple` under the function symbols enumerable in s; oracle
// structures stop after `budget` rounds of applications unless a fixed point
// arrives earlier. symbol_bound truncates infinite signatures.
substructure_result generate_substructure(const structure_oracle& s,
                                          const std::vector<std::string>& tuple,
                                          int budget, int symbol_bound = 64);

// Domain bijection preserving all tables, or nothing. Backtracking with
// occurrence-profile pruning; intended for domains of at most 8 elements.
std::optional<std::map<std::string, std::string>> isomorphic(const fg_structure& s1,
                                                             const fg_structure& s2);

}  // namespace scg

#endif
