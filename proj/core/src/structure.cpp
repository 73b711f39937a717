#include "scg/structure.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace scg {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw parse_error("malformed " + what + ": '" + text + "'");
  return value;
}

std::vector<std::string> parse_tuple(const std::string& text) {
  // "(a0,a1)" or "()"
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw parse_error("malformed tuple: '" + text + "'");
  std::string inner = text.substr(1, text.size() - 2);
  std::vector<std::string> out;
  if (inner.empty()) return out;
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    std::size_t comma = inner.find(',', pos);
    std::string item = inner.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
    if (item.empty()) throw parse_error("malformed tuple: '" + text + "'");
    out.push_back(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string kind_name(symbol_kind k) {
  switch (k) {
    case symbol_kind::function: return "function";
    case symbol_kind::relation: return "relation";
    case symbol_kind::constant: return "constant";
  }
  return "?";
}

}  // namespace

signature::signature(std::vector<symbol> symbols) : symbols_(std::move(symbols)) {
  std::sort(symbols_.begin(), symbols_.end(),
            [](const symbol& a, const symbol& b) { return a.index < b.index; });
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].index != static_cast<int>(i) + 1)
      throw parse_error("symbol indices must be contiguous from 1; missing or duplicate index " +
                        std::to_string(i + 1));
    if (symbols_[i].arity < 0) throw parse_error("negative arity");
    if (symbols_[i].kind == symbol_kind::constant && symbols_[i].arity != 0)
      throw parse_error("constant symbols have arity 0");
  }
}

const symbol& signature::at(int index) const {
  if (!has(index)) throw domain_error("no symbol with index " + std::to_string(index));
  return symbols_[static_cast<std::size_t>(index) - 1];
}

bool signature::has(int index) const {
  return index >= 1 && static_cast<std::size_t>(index) <= symbols_.size();
}

const symbol& signature::by_name(const std::string& name) const {
  for (const symbol& s : symbols_)
    if (s.name == name) return s;
  throw domain_error("no symbol named '" + name + "'");
}

fg_structure::fg_structure(signature sig, std::vector<std::string> domain)
    : sig_(std::move(sig)), domain_(std::move(domain)) {
  for (const auto& e : domain_) {
    if (!domain_set_.insert(e).second) throw parse_error("duplicate domain element '" + e + "'");
  }
}

void fg_structure::define_function(const std::string& sym, std::vector<std::string> args,
                                   const std::string& value) {
  const symbol& s = sig_.by_name(sym);
  if (s.kind == symbol_kind::relation)
    throw parse_error("'" + sym + "' is a relation, not a function");
  if (static_cast<int>(args.size()) != s.arity)
    throw parse_error("arity mismatch in table for '" + sym + "'");
  fn_[s.index][std::move(args)] = value;
}

void fg_structure::add_relation_tuple(const std::string& sym, std::vector<std::string> args) {
  const symbol& s = sig_.by_name(sym);
  if (s.kind != symbol_kind::relation)
    throw parse_error("'" + sym + "' is not a relation");
  if (static_cast<int>(args.size()) != s.arity)
    throw parse_error("relation tuple arity mismatch for '" + sym + "'");
  rel_[s.index].insert(std::move(args));
}

void fg_structure::set_generators(std::vector<std::string> gens) { generators_ = std::move(gens); }

void fg_structure::validate() const {
  for (const symbol& s : sig_.symbols()) {
    if (s.kind == symbol_kind::relation) {
      auto it = rel_.find(s.index);
      if (it == rel_.end()) continue;  // empty relation
      for (const auto& tup : it->second)
        for (const auto& e : tup)
          if (!domain_set_.count(e))
            throw parse_error("relation '" + s.name + "' mentions unknown element '" + e + "'");
      continue;
    }
    // Functions and constants need a total table over domain^arity.
    auto it = fn_.find(s.index);
    std::size_t expected = 1;
    for (int i = 0; i < s.arity; ++i) expected *= domain_.size();
    std::size_t have = it == fn_.end() ? 0 : it->second.size();
    if (have != expected)
      throw parse_error("table for " + kind_name(s.kind) + " '" + s.name + "' has " +
                        std::to_string(have) + " entries, needs " + std::to_string(expected));
    if (it == fn_.end()) continue;
    for (const auto& [args, value] : it->second) {
      for (const auto& e : args)
        if (!domain_set_.count(e))
          throw parse_error("table for '" + s.name + "' mentions unknown element '" + e + "'");
      if (!domain_set_.count(value))
        throw parse_error("function '" + s.name + "' maps outside the domain: '" + value + "'");
    }
  }
  for (const auto& g : generators_)
    if (!domain_set_.count(g))
      throw parse_error("generator '" + g + "' is not a domain element");
}

std::vector<symbol> fg_structure::symbols_upto(int max_m) const {
  std::vector<symbol> out;
  for (const symbol& s : sig_.symbols()) {
    if (max_m >= 0 && s.index > max_m) break;
    out.push_back(s);
  }
  return out;
}

bool fg_structure::element_exists(const std::string& key) const {
  return domain_set_.count(key) != 0;
}

std::string fg_structure::apply(int m, const std::vector<std::string>& args) const {
  const symbol& s = sig_.at(m);
  if (s.kind == symbol_kind::relation)
    throw domain_error("apply on relation symbol '" + s.name + "'");
  auto table = fn_.find(m);
  if (table != fn_.end()) {
    auto it = table->second.find(args);
    if (it != table->second.end()) return it->second;
  }
  throw domain_error("function '" + s.name + "' has no entry for the given tuple");
}

bool fg_structure::holds(int m, const std::vector<std::string>& args) const {
  const symbol& s = sig_.at(m);
  if (s.kind != symbol_kind::relation)
    throw domain_error("holds on non-relation symbol '" + s.name + "'");
  auto table = rel_.find(m);
  return table != rel_.end() && table->second.count(args) != 0;
}

fg_structure normalize(const fg_structure& s) {
  std::vector<symbol> symbols;
  for (const symbol& sym : s.sig().symbols()) {
    if (sym.arity == 0 && sym.kind != symbol_kind::relation) {
      symbols.push_back({sym.index, sym.name, symbol_kind::relation, 1});
    } else {
      symbols.push_back(sym);
    }
  }
  fg_structure out{signature(std::move(symbols)), s.domain()};
  for (const auto& [m, table] : s.function_tables()) {
    const symbol& sym = s.sig().at(m);
    if (sym.arity == 0) {
      for (const auto& [args, value] : table)
        out.add_relation_tuple(sym.name, {value});
    } else {
      for (const auto& [args, value] : table) out.define_function(sym.name, args, value);
    }
  }
  for (const auto& [m, tuples] : s.relation_tables()) {
    const symbol& sym = s.sig().at(m);
    for (const auto& tup : tuples) out.add_relation_tuple(sym.name, tup);
  }
  out.set_generators(s.generators());
  out.validate();
  return out;
}

fg_structure parse_structure(const std::string& text) {
  std::istringstream in(text);
  std::vector<symbol> symbols;
  std::vector<std::string> domain;
  std::vector<std::string> generators;
  struct fn_line { std::string sym; std::vector<std::pair<std::vector<std::string>, std::string>> entries; };
  struct rel_line { std::string sym; std::vector<std::vector<std::string>> tuples; };
  std::vector<fn_line> fn_lines;
  std::vector<rel_line> rel_lines;
  std::set<int> seen_indices;

  for (std::string line; std::getline(in, line);) {
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    const std::string& head = tokens[0];
    if (head == "signature:") {
      symbol sym;
      bool have_m = false, have_kind = false, have_name = false, have_arity = false;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto eq = tokens[i].find('=');
        if (eq == std::string::npos) throw parse_error("malformed signature field: '" + tokens[i] + "'");
        std::string key = tokens[i].substr(0, eq), val = tokens[i].substr(eq + 1);
        if (key == "m") { sym.index = parse_int(val, "symbol index"); have_m = true; }
        else if (key == "kind") {
          have_kind = true;
          if (val == "function") sym.kind = symbol_kind::function;
          else if (val == "relation") sym.kind = symbol_kind::relation;
          else if (val == "constant") sym.kind = symbol_kind::constant;
          else throw parse_error("unknown symbol kind '" + val + "'");
        }
        else if (key == "name") { sym.name = val; have_name = true; }
        else if (key == "arity") { sym.arity = parse_int(val, "arity"); have_arity = true; }
        else throw parse_error("unknown signature field '" + key + "'");
      }
      if (!have_m || !have_kind || !have_name || !have_arity)
        throw parse_error("signature line missing a field: '" + line + "'");
      if (!seen_indices.insert(sym.index).second)
        throw parse_error("duplicate symbol index " + std::to_string(sym.index));
      symbols.push_back(sym);
    } else if (head == "domain:") {
      domain.insert(domain.end(), tokens.begin() + 1, tokens.end());
    } else if (head == "generators:") {
      generators.insert(generators.end(), tokens.begin() + 1, tokens.end());
    } else if (head == "fn" || head == "rel") {
      if (tokens.size() < 2 || tokens[1].back() != ':')
        throw parse_error("malformed table line: '" + line + "'");
      std::string sym = tokens[1].substr(0, tokens[1].size() - 1);
      if (head == "fn") {
        fn_line fl{sym, {}};
        for (std::size_t i = 2; i < tokens.size(); ++i) {
          auto arrow = tokens[i].find(")->");
          if (arrow == std::string::npos)
            throw parse_error("malformed function entry: '" + tokens[i] + "'");
          fl.entries.emplace_back(parse_tuple(tokens[i].substr(0, arrow + 1)),
                                  tokens[i].substr(arrow + 3));
        }
        fn_lines.push_back(std::move(fl));
      } else {
        rel_line rl{sym, {}};
        for (std::size_t i = 2; i < tokens.size(); ++i) rl.tuples.push_back(parse_tuple(tokens[i]));
        rel_lines.push_back(std::move(rl));
      }
    } else {
      throw parse_error("unrecognized line: '" + line + "'");
    }
  }

  fg_structure out{signature(std::move(symbols)), std::move(domain)};
  for (auto& fl : fn_lines)
    for (auto& [args, value] : fl.entries) out.define_function(fl.sym, std::move(args), value);
  for (auto& rl : rel_lines)
    for (auto& tup : rl.tuples) out.add_relation_tuple(rl.sym, std::move(tup));
  out.set_generators(std::move(generators));
  out.validate();
  return normalize(out);
}

std::string serialize_structure(const fg_structure& s, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  for (const symbol& sym : s.sig().symbols()) {
    out << "signature: m=" << sym.index << " kind=" << kind_name(sym.kind) << " name=" << sym.name
        << " arity=" << sym.arity << "\n";
  }
  out << "domain:";
  for (const auto& e : s.domain()) out << ' ' << e;
  out << "\n";
  for (const auto& [m, table] : s.function_tables()) {
    out << "fn " << s.sig().at(m).name << ":";
    for (const auto& [args, value] : table) {
      out << " (";
      for (std::size_t i = 0; i < args.size(); ++i) out << (i ? "," : "") << args[i];
      out << ")->" << value;
    }
    out << "\n";
  }
  for (const auto& [m, tuples] : s.relation_tables()) {
    out << "rel " << s.sig().at(m).name << ":";
    for (const auto& tup : tuples) {
      out << " (";
      for (std::size_t i = 0; i < tup.size(); ++i) out << (i ? "," : "") << tup[i];
      out << ")";
    }
    out << "\n";
  }
  if (!s.generators().empty()) {
    out << "generators:";
    for (const auto& g : s.generators()) out << ' ' << g;
    out << "\n";
  }
  return out.str();
}

qf_formula qf_formula::eq(term a, term b) {
  qf_formula f;
  f.kind = node::atom_eq;
  f.lhs = std::move(a);
  f.rhs = std::move(b);
  return f;
}

qf_formula qf_formula::rel(int symbol, std::vector<term> args) {
  qf_formula f;
  f.kind = node::atom_rel;
  f.symbol = symbol;
  f.args = std::move(args);
  return f;
}

qf_formula qf_formula::neg_of(qf_formula inner) {
  qf_formula f;
  f.kind = node::neg;
  f.children.push_back(std::move(inner));
  return f;
}

qf_formula qf_formula::conj_of(std::vector<qf_formula> fs) {
  qf_formula f;
  f.kind = node::conj;
  f.children = std::move(fs);
  return f;
}

qf_formula qf_formula::disj_of(std::vector<qf_formula> fs) {
  qf_formula f;
  f.kind = node::disj;
  f.children = std::move(fs);
  return f;
}

namespace {
void collect_term_symbols(const term& t, std::set<int>& functions) {
  if (t.var >= 0) return;
  functions.insert(t.symbol);
  for (const term& a : t.args) collect_term_symbols(a, functions);
}
}  // namespace

void qf_formula::collect_symbols(std::set<int>& functions, std::set<int>& relations) const {
  switch (kind) {
    case node::atom_eq:
      collect_term_symbols(lhs, functions);
      collect_term_symbols(rhs, functions);
      break;
    case node::atom_rel:
      relations.insert(symbol);
      for (const term& a : args) collect_term_symbols(a, functions);
      break;
    default:
      for (const auto& c : children) c.collect_symbols(functions, relations);
  }
}

substructure_result generate_substructure(const structure_oracle& s,
                                          const std::vector<std::string>& tuple, int budget,
                                          int symbol_bound) {
  for (const auto& e : tuple)
    if (!s.element_exists(e)) throw domain_error("substructure seed '" + e + "' not in domain");

  std::vector<symbol> fns;
  for (const symbol& sym : s.symbols_upto(s.signature_finite() ? -1 : symbol_bound))
    if (sym.kind != symbol_kind::relation) fns.push_back(sym);

  substructure_result out;
  std::set<std::string> seen;
  for (const auto& e : tuple)
    if (seen.insert(e).second) out.elements.push_back(e);

  bool bounded_rounds = !s.domain_finite();
  for (int round = 0;; ++round) {
    if (bounded_rounds && round == budget) {
      out.complete = false;
      return out;
    }
    std::vector<std::string> added;
    for (const symbol& f : fns) {
      if (f.arity > 0 && out.elements.empty()) continue;
      // All tuples over the current closure; domains stay tiny.
      std::vector<std::size_t> idx(static_cast<std::size_t>(f.arity), 0);
      for (;;) {
        std::vector<std::string> args;
        args.reserve(idx.size());
        for (std::size_t i : idx) args.push_back(out.elements[i]);
        std::string value = s.apply(f.index, args);
        if (seen.insert(value).second) added.push_back(value);
        std::size_t k = 0;
        for (; k < idx.size(); ++k) {
          if (++idx[k] < out.elements.size()) break;
          idx[k] = 0;
        }
        if (k == idx.size()) break;
      }
    }
    if (added.empty()) {
      out.complete = true;
      return out;
    }
    out.elements.insert(out.elements.end(), added.begin(), added.end());
  }
}

namespace {

// Occurrence counts of an element across every table, position by position.
std::vector<long> occurrence_profile(const fg_structure& s, const std::string& e) {
  std::vector<long> out;
  for (const symbol& sym : s.sig().symbols()) {
    if (sym.kind == symbol_kind::relation) {
      auto it = s.relation_tables().find(sym.index);
      for (int pos = 0; pos < sym.arity; ++pos) {
        long n = 0;
        if (it != s.relation_tables().end())
          for (const auto& tup : it->second)
            if (tup[static_cast<std::size_t>(pos)] == e) ++n;
        out.push_back(n);
      }
    } else {
      auto it = s.function_tables().find(sym.index);
      long as_value = 0;
      std::vector<long> as_arg(static_cast<std::size_t>(sym.arity), 0);
      if (it != s.function_tables().end()) {
        for (const auto& [args, value] : it->second) {
          if (value == e) ++as_value;
          for (std::size_t pos = 0; pos < args.size(); ++pos)
            if (args[pos] == e) ++as_arg[pos];
        }
      }
      out.push_back(as_value);
      out.insert(out.end(), as_arg.begin(), as_arg.end());
    }
  }
  return out;
}

bool check_full_map(const fg_structure& s1, const fg_structure& s2,
                    const std::map<std::string, std::string>& map) {
  for (const auto& [m, table] : s1.function_tables()) {
    for (const auto& [args, value] : table) {
      std::vector<std::string> mapped;
      mapped.reserve(args.size());
      for (const auto& a : args) mapped.push_back(map.at(a));
      if (s2.apply(m, mapped) != map.at(value)) return false;
    }
  }
  for (const symbol& sym : s1.sig().symbols()) {
    if (sym.kind != symbol_kind::relation) continue;
    auto t1 = s1.relation_tables().find(sym.index);
    auto t2 = s2.relation_tables().find(sym.index);
    std::size_t n1 = t1 == s1.relation_tables().end() ? 0 : t1->second.size();
    std::size_t n2 = t2 == s2.relation_tables().end() ? 0 : t2->second.size();
    if (n1 != n2) return false;
    if (t1 == s1.relation_tables().end()) continue;
    for (const auto& tup : t1->second) {
      std::vector<std::string> mapped;
      mapped.reserve(tup.size());
      for (const auto& a : tup) mapped.push_back(map.at(a));
      if (!s2.holds(sym.index, mapped)) return false;
    }
  }
  return true;
}

bool extend_map(const fg_structure& s1, const fg_structure& s2,
                const std::vector<std::string>& order,
                const std::map<std::string, std::vector<std::string>>& candidates,
                std::size_t depth, std::map<std::string, std::string>& map,
                std::set<std::string>& used) {
  if (depth == order.size()) return check_full_map(s1, s2, map);
  const std::string& e = order[depth];
  for (const std::string& target : candidates.at(e)) {
    if (used.count(target)) continue;
    map[e] = target;
    used.insert(target);
    if (extend_map(s1, s2, order, candidates, depth + 1, map, used)) return true;
    used.erase(target);
    map.erase(e);
  }
  return false;
}

}  // namespace

std::optional<std::map<std::string, std::string>> isomorphic(const fg_structure& s1,
                                                             const fg_structure& s2) {
  if (!(s1.sig() == s2.sig())) throw domain_error("isomorphic: signature mismatch");
  auto d1 = s1.domain(), d2 = s2.domain();
  if (d1.size() != d2.size()) return std::nullopt;

  std::map<std::string, std::vector<std::string>> candidates;
  std::map<std::string, std::vector<long>> profile2;
  for (const auto& e : d2) profile2[e] = occurrence_profile(s2, e);
  for (const auto& e : d1) {
    auto p = occurrence_profile(s1, e);
    auto& c = candidates[e];
    for (const auto& f : d2)
      if (profile2[f] == p) c.push_back(f);
    if (c.empty()) return std::nullopt;
  }

  std::vector<std::string> order = d1;
  std::sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
    return candidates[a].size() < candidates[b].size();
  });

  std::map<std::string, std::string> map;
  std::set<std::string> used;
  if (extend_map(s1, s2, order, candidates, 0, map, used)) return map;
  return std::nullopt;
}

}  // namespace scg
