// Acceptance gate: each check prints one PASS or FAIL line with its runtime.
// Bounds and budgets are pinned here; the process exits nonzero if any check
// fails. argv[1] is the corpus directory of structure files.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "scg/decoder.hpp"
#include "scg/encoder.hpp"
#include "scg/errors.hpp"
#include "scg/presentation.hpp"
#include "scg/profile.hpp"
#include "scg/structure.hpp"
#include "scg/tree.hpp"
#include "scg/words.hpp"

namespace {

using namespace scg;
using clock_type = std::chrono::steady_clock;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".structure") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw parse_error("no structure files in '" + dir.string() + "'");
  return files;
}

power_word one(const alphabet_ptr& alph, gen_index g) { return single_run(alph, g, 1); }

power_word random_word(std::mt19937_64& rng, const alphabet_ptr& alph, int max_len) {
  std::uniform_int_distribution<int> pick_len(1, max_len);
  std::uniform_int_distribution<gen_index> pick_gen(0, static_cast<gen_index>(alph->size() - 1));
  std::uniform_int_distribution<int> pick_sign(0, 1);
  power_word out;
  int len = pick_len(rng);
  for (int i = 0; i < len; ++i)
    out = concat(out, single_run(alph, pick_gen(rng), pick_sign(rng) ? 1 : -1));
  return out;
}

// ---- separate checks ----------------------------------------------------

bool check_block_length(const std::filesystem::path& file, std::string& note) {
  auto profile = paper_profile();
  auto g = encode(parse_structure(read_file(file)), profile);
  auto word = build_u(u_family::A, one(g.pres.alph(), g.element_gens.at("a0")),
                      one(g.pres.alph(), g.c), profile);
  const std::int64_t expected = 333'834'500;
  note = "letter length " + std::to_string(word.letter_length());
  return word.letter_length() == expected;
}

bool check_corpus_metric(const std::vector<std::filesystem::path>& files, std::string& note) {
  auto profile = paper_profile();
  for (const auto& file : files) {
    auto start = clock_type::now();
    auto g = encode(parse_structure(read_file(file)), profile);
    auto report = verify_metric(g.pres, {1, 20});
    double secs = std::chrono::duration<double>(clock_type::now() - start).count();
    if (!report.holds || secs > 60.0) {
      note = file.filename().string() + (report.holds ? " exceeded 60s" : " violates the metric");
      return false;
    }
  }
  note = std::to_string(files.size()) + " structures";
  return true;
}

bool check_corpus_roundtrip(const std::vector<std::filesystem::path>& files, std::string& note) {
  auto profile = paper_profile();
  for (const auto& file : files) {
    auto start = clock_type::now();
    auto report = roundtrip_check(parse_structure(read_file(file)), profile);
    double secs = std::chrono::duration<double>(clock_type::now() - start).count();
    if (!report.ok || secs > 30.0) {
      note = file.filename().string() + (report.ok ? " exceeded 30s" : " failed to round-trip");
      return false;
    }
  }
  note = std::to_string(files.size()) + " structures";
  return true;
}

bool check_trivial_products(const std::filesystem::path& file, std::string& note) {
  auto profile = testing::scaled_profile();
  auto g = encode(parse_structure(read_file(file)), profile);
  if (!verify_metric(g.pres, {1, 20}).holds) {
    note = "scaled encoding violates the metric";
    return false;
  }
  const auto& pool = g.pres.relators().list();
  const auto& alph = g.pres.alph();
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<std::size_t> pick_relator(0, pool.size() - 1);
  std::uniform_int_distribution<int> pick_count(1, 5);

  for (int i = 0; i < 500; ++i) {
    power_word product;
    do {
      product = {};
      int factors = pick_count(rng);
      for (int f = 0; f < factors; ++f) {
        auto c = random_word(rng, alph, 6);
        product = concat(product, concat(concat(c, pool[pick_relator(rng)]), invert(c)));
      }
    } while (product.empty());
    if (!dehn_reduce(product, g.pres).minimal.empty()) {
      note = "product " + std::to_string(i + 1) + " did not reduce to the identity";
      return false;
    }
    auto witness = greendlinger_witnesses(product, g.pres, {1, 20});
    if (witness.result == greendlinger_report::kind::failure) {
      note = "product " + std::to_string(i + 1) + " lacks a span above 17/20";
      return false;
    }
    for (const auto& s : witness.spans) {
      if (20 * s.length <= 17 * s.relator_len) {
        note = "span of " + std::to_string(s.length) + " letters is not above 17/20";
        return false;
      }
    }
  }
  note = "500 products";
  return true;
}

bool check_separation(const std::filesystem::path& file, std::string& note) {
  auto profile = paper_profile();
  auto g = encode(parse_structure(read_file(file)), profile);
  const auto& alph = g.pres.alph();
  std::vector<power_word> letters;
  for (const auto& name : {"a0", "a1", "a2"})
    letters.push_back(one(alph, g.element_gens.at(name)));
  for (gen_index gi : {g.b, g.c, g.d, g.f1, g.f2}) letters.push_back(one(alph, gi));
  for (std::size_t i = 0; i < letters.size(); ++i)
    for (std::size_t j = i + 1; j < letters.size(); ++j)
      if (is_trivial(concat(letters[i], invert(letters[j])), g.pres)) {
        note = "letters " + render_word(letters[i]) + " and " + render_word(letters[j]) +
               " collapsed";
        return false;
      }
  for (std::int64_t n : {std::int64_t{1}, std::int64_t{2}, profile.p1 / 2, profile.p1 - 1})
    if (is_trivial(single_run(alph, g.f1, n), g.pres)) {
      note = "f1^" + std::to_string(n) + " collapsed";
      return false;
    }
  note = "28 letter pairs and 4 torsion powers";
  return true;
}

bool check_orbit(const std::filesystem::path& file, std::string& note) {
  auto profile = paper_profile();
  auto g = encode(parse_structure(read_file(file)), profile);
  const auto& alph = g.pres.alph();
  power_word x = one(alph, g.b), y = one(alph, g.c), z = one(alph, g.d);
  power_word t1 = one(alph, g.f1), t2 = one(alph, g.f2);
  if (!orbit_formula(x, y, z, t1, t2, g)) {
    note = "canonical tuple rejected";
    return false;
  }

  std::mt19937_64 rng(515);
  auto conj = [](const power_word& c, const power_word& w) {
    return concat(concat(c, w), invert(c));
  };
  for (int i = 0; i < 20; ++i) {
    auto c = random_word(rng, alph, 6);
    if (!orbit_formula(conj(c, x), conj(c, y), conj(c, z), conj(c, t1), conj(c, t2), g)) {
      note = "conjugate " + std::to_string(i + 1) + " rejected";
      return false;
    }
  }

  auto a0 = one(alph, g.element_gens.at("a0"));
  for (int i = 0; i < 20; ++i) {
    auto c = random_word(rng, alph, 6);
    power_word px = x, py = y, pz = z, pt1 = t1, pt2 = t2;
    switch (i % 5) {
      case 0:
        std::swap(px, py);
        break;
      case 1:
        px = concat(px, a0);
        break;
      case 2:
        std::swap(pt1, pt2);
        break;
      case 3:
        pt2 = pt1;
        break;
      case 4:
        px = conj(c, px);  // one coordinate moved, the rest left in place
        if (px == x) px = concat(x, a0);
        break;
    }
    if (orbit_formula(px, py, pz, pt1, pt2, g)) {
      note = "perturbation " + std::to_string(i + 1) + " accepted";
      return false;
    }
  }
  note = "1 canonical, 20 conjugates, 20 perturbations";
  return true;
}

bool check_tree_identities(std::string& note) {
  auto profile = paper_profile();
  auto oracle = std::make_shared<tree_structure>(false, 8);
  auto g = encode(std::static_pointer_cast<const structure_oracle>(oracle), profile);
  const auto& alph = g.pres.alph();

  // Every chain from the root to an element at level <= 2 with path length
  // <= 2 and entries |i| <= 2, one verified identity per step.
  std::set<std::pair<std::string, std::string>> seen;
  long long verified = 0;
  auto step = [&](const tree_element& from, int symbol, const tree_element& to) -> bool {
    if (!seen.insert({from.key() + "#" + std::to_string(symbol), to.key()}).second) return true;
    auto x = one(alph, element_generator(g, from.key()));
    auto value = one(alph, element_generator(g, to.key()));
    auto w = build_w(symbol, {x}, one(alph, g.b), profile);
    if (!is_trivial(concat(w, invert(value)), g.pres)) return false;
    ++verified;
    return true;
  };

  for (std::int64_t n = 0; n <= 2; ++n) {
    // Climb to the level anchor, then branch along every short path.
    tree_element cur{};
    bool ok = true;
    for (std::int64_t s = 0; s < n && ok; ++s) {
      tree_element next = tree_parent(cur);
      ok = step(cur, 1, next);
      cur = next;
    }
    if (!ok) {
      note = "parent chain broke at level " + std::to_string(n);
      return false;
    }
    for (std::int64_t i1 = -2; i1 <= 2; ++i1) {
      tree_element mid = tree_child(cur, i1);
      if (!step(cur, oracle->child_symbol(i1), mid)) {
        note = "child step " + std::to_string(i1) + " from " + cur.key() + " broke";
        return false;
      }
      for (std::int64_t i2 = -2; i2 <= 2; ++i2)
        if (!step(mid, oracle->child_symbol(i2), tree_child(mid, i2))) {
          note = "child step " + std::to_string(i2) + " from " + mid.key() + " broke";
          return false;
        }
    }
  }
  note = std::to_string(verified) + " stepwise identities";
  return verified >= 50;
}

// ---- level-shift transfer (mirrors the command-line driver) -------------

struct tree_op {
  bool parent = false;
  std::int64_t child = 0;
};

tree_element apply_ops(tree_element x, const std::vector<tree_op>& ops) {
  for (const auto& op : ops) x = op.parent ? tree_parent(x) : tree_child(x, op.child);
  return x;
}

std::vector<tree_element> level_elements(std::int64_t n, int max_path, std::int64_t max_entry) {
  std::vector<std::vector<std::int64_t>> paths{{}};
  for (int len = 1; len <= max_path; ++len) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& p : paths)
      if (static_cast<int>(p.size()) == len - 1)
        for (std::int64_t e = -max_entry; e <= max_entry; ++e) {
          auto q = p;
          q.push_back(e);
          next.push_back(q);
        }
    paths.insert(paths.end(), next.begin(), next.end());
  }
  std::vector<tree_element> out;
  for (const auto& p : paths) out.push_back({n, p});
  return out;
}

bool check_shift_transfer(std::string& note) {
  const int k = 3;
  const std::int64_t max_entry = 2;
  long long checked = 0, failures = 0;

  for (bool decorated : {false, true}) {
    tree_structure tr(decorated, k);
    std::vector<std::vector<tree_op>> chains{{}};
    std::vector<tree_op> ops{{true, 0}};
    for (std::int64_t i = -max_entry; i <= max_entry; ++i) ops.push_back({false, i});
    std::size_t level_start = 0;
    for (int d = 1; d <= 2; ++d) {
      std::size_t level_end = chains.size();
      for (std::size_t c = level_start; c < level_end; ++c)
        for (const auto& op : ops) {
          auto chain = chains[c];
          chain.push_back(op);
          chains.push_back(chain);
        }
      level_start = level_end;
    }
    auto to_term = [&](const std::vector<tree_op>& chain, int var) {
      term t = term::v(var);
      for (const auto& op : chain)
        t = term::app(op.parent ? 1 : tr.child_symbol(op.child), {t});
      return t;
    };

    auto witnesses = level_elements(0, 2, max_entry);
    auto params = level_elements(1, 2, max_entry);

    auto run_one = [&](const qf_formula& phi, const std::vector<tree_element>& ps,
                       const std::vector<tree_element>& ws) {
      ++checked;
      try {
        if (!sigma1_shift_check(phi, ps, ws, k, decorated).ok) ++failures;
      } catch (const std::exception&) {
        ++failures;
      }
    };

    for (std::size_t c1 = 0; c1 < chains.size(); ++c1)
      for (std::size_t c2 = c1; c2 < chains.size(); ++c2) {
        auto phi = qf_formula::eq(to_term(chains[c1], 0), to_term(chains[c2], 0));
        auto neg = qf_formula::neg_of(phi);
        for (const auto& w : witnesses) {
          bool holds = apply_ops(w, chains[c1]) == apply_ops(w, chains[c2]);
          run_one(holds ? phi : neg, {}, {w});
        }
      }
    for (std::size_t c1 = 0; c1 < chains.size(); ++c1)
      for (std::size_t c2 = 0; c2 < chains.size(); ++c2) {
        auto phi = qf_formula::eq(to_term(chains[c1], 0), to_term(chains[c2], 1));
        auto neg = qf_formula::neg_of(phi);
        for (const auto& w : witnesses)
          for (const auto& q : params) {
            bool holds = apply_ops(w, chains[c1]) == apply_ops(q, chains[c2]);
            run_one(holds ? phi : neg, {q}, {w});
          }
      }
    if (decorated)
      for (const auto& chain : chains) {
        auto phi = qf_formula::rel(2, {to_term(chain, 0)});
        auto neg = qf_formula::neg_of(phi);
        for (const auto& w : witnesses) {
          bool holds = tree_decoration(apply_ops(w, chain));
          run_one(holds ? phi : neg, {}, {w});
        }
      }

    // Seeded composites over two witness variables and one parameter.
    std::mt19937_64 rng(808);
    std::uniform_int_distribution<std::size_t> pick_chain(0, chains.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_wit(0, witnesses.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_par(0, params.size() - 1);
    std::uniform_int_distribution<int> roll(0, 99);

    std::vector<tree_element> asg(3);
    auto eval_term_elt = [&](const term& t, auto&& rec) -> tree_element {
      if (t.var >= 0) return asg[static_cast<std::size_t>(t.var)];
      auto x = rec(t.args[0], rec);
      if (t.symbol == 1) return tree_parent(x);
      return tree_child(x, unzigzag(t.symbol - (decorated ? 3 : 2)));
    };
    auto eval_formula = [&](const qf_formula& f, auto&& self) -> bool {
      switch (f.kind) {
        case qf_formula::node::atom_eq:
          return eval_term_elt(f.lhs, eval_term_elt) == eval_term_elt(f.rhs, eval_term_elt);
        case qf_formula::node::atom_rel:
          return tree_decoration(eval_term_elt(f.args[0], eval_term_elt));
        case qf_formula::node::neg:
          return !self(f.children[0], self);
        case qf_formula::node::conj:
          for (const auto& c : f.children)
            if (!self(c, self)) return false;
          return true;
        case qf_formula::node::disj:
          for (const auto& c : f.children)
            if (self(c, self)) return true;
          return false;
      }
      return false;
    };
    auto random_atom = [&]() {
      int var = roll(rng) < 50 ? 0 : 1;
      if (decorated && roll(rng) < 25)
        return qf_formula::rel(2, {to_term(chains[pick_chain(rng)], var)});
      int other = roll(rng) < 70 ? 1 - var : 2;
      return qf_formula::eq(to_term(chains[pick_chain(rng)], var),
                            to_term(chains[pick_chain(rng)], other));
    };
    auto random_formula = [&](int depth, auto&& self) -> qf_formula {
      int r = roll(rng);
      if (depth == 0 || r < 40) return random_atom();
      if (r < 60) return qf_formula::neg_of(self(depth - 1, self));
      std::vector<qf_formula> parts{self(depth - 1, self), self(depth - 1, self)};
      return r < 80 ? qf_formula::conj_of(std::move(parts))
                    : qf_formula::disj_of(std::move(parts));
    };
    for (int s = 0; s < 400; ++s) {
      auto phi = random_formula(2, random_formula);
      asg[0] = witnesses[pick_wit(rng)];
      asg[1] = witnesses[pick_wit(rng)];
      asg[2] = params[pick_par(rng)];
      if (!eval_formula(phi, eval_formula)) phi = qf_formula::neg_of(phi);
      run_one(phi, {asg[2]}, {asg[0], asg[1]});
    }
  }

  note = std::to_string(checked) + " instances, " + std::to_string(failures) + " failures";
  return failures == 0;
}

// ---- metric oracle ------------------------------------------------------

struct letter {
  gen_index gen = 0;
  int sign = 1;
  friend bool operator==(const letter&, const letter&) = default;
};

std::vector<letter> expand(const power_word& w) {
  std::vector<letter> out;
  for (const auto& r : w.runs()) {
    int sign = r.exp > 0 ? 1 : -1;
    for (std::int64_t i = 0; i < std::llabs(r.exp); ++i) out.push_back({r.gen, sign});
  }
  return out;
}

std::vector<letter> invert_letters(const std::vector<letter>& w) {
  std::vector<letter> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->sign});
  return out;
}

// Letter-level reference: every distinct rotation of every relator and its
// inverse, pairwise longest common prefixes, max ratio against both lengths.
ratio brute_force_max_piece(const std::vector<power_word>& relators) {
  std::vector<std::vector<letter>> closure;
  for (const auto& r : relators) {
    for (const auto& base : {expand(r), invert_letters(expand(r))}) {
      for (std::size_t s = 0; s < base.size(); ++s) {
        std::vector<letter> rot(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
        if (std::find(closure.begin(), closure.end(), rot) == closure.end())
          closure.push_back(std::move(rot));
      }
    }
  }
  ratio best{0, 1};
  for (std::size_t i = 0; i < closure.size(); ++i)
    for (std::size_t j = i + 1; j < closure.size(); ++j) {
      const auto &a = closure[i], &b = closure[j];
      std::size_t limit = std::min(a.size(), b.size());
      std::size_t lcp = 0;
      while (lcp < limit && a[lcp] == b[lcp]) ++lcp;
      if (lcp == 0) continue;
      for (std::int64_t len : {static_cast<std::int64_t>(a.size()), static_cast<std::int64_t>(b.size())}) {
        ratio cand{static_cast<std::int64_t>(lcp), len};
        if (ratio_less(best, cand)) best = cand;
      }
    }
  return best;
}

bool check_metric_oracle(std::string& note) {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> pick_gens(2, 4);
  std::uniform_int_distribution<int> pick_relators(3, 6);
  std::uniform_int_distribution<int> pick_len(6, 40);
  std::uniform_int_distribution<int> roll(0, 99);

  for (int iter = 0; iter < 50; ++iter) {
    int gens = pick_gens(rng);
    std::vector<std::string> names;
    for (int i = 0; i < gens; ++i) names.push_back("g" + std::to_string(i));
    auto alph = testing::make_alphabet(names);
    std::uniform_int_distribution<gen_index> pick_gen(0, static_cast<gen_index>(gens - 1));
    std::uniform_int_distribution<int> pick_sign(0, 1);

    std::vector<power_word> relators;
    std::map<gen_index, std::int64_t> torsion;
    std::int64_t budget = 200;

    auto cyclically_equal = [&](const power_word& a, const power_word& b) {
      auto la = expand(a);
      for (const auto& base : {expand(b), invert_letters(expand(b))}) {
        if (base.size() != la.size()) continue;
        for (std::size_t s = 0; s < base.size(); ++s) {
          std::vector<letter> rot(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
          rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
          if (rot == la) return true;
        }
      }
      return false;
    };

    int want = pick_relators(rng);
    for (int r = 0; r < want && budget > 0; ++r) {
      if (roll(rng) < 30) {
        gen_index g = pick_gen(rng);
        if (torsion.count(g)) continue;
        std::int64_t orders[] = {5, 7, 11, 13};
        std::int64_t p = orders[static_cast<std::size_t>(roll(rng)) % 4];
        if (p > budget) continue;
        relators.push_back(single_run(alph, g, p));
        torsion[g] = p;
        budget -= p;
        continue;
      }
      int len = static_cast<int>(std::min<std::int64_t>(pick_len(rng), budget));
      if (len < 2) break;
      power_word w;
      for (int attempt = 0; attempt < 50; ++attempt) {
        w = {};
        for (int i = 0; i < len; ++i)
          w = concat(w, single_run(alph, pick_gen(rng), pick_sign(rng) ? 1 : -1));
        w = cyclic_reduce(w).core;
        if (w.letter_length() >= 2) break;
      }
      if (w.letter_length() < 2) continue;
      bool duplicate = false;
      for (const auto& existing : relators)
        if (cyclically_equal(existing, w)) duplicate = true;
      if (duplicate) continue;
      budget -= w.letter_length();
      relators.push_back(w);
    }
    if (relators.empty()) continue;

    presentation p(alph, relator_family(relators), torsion);
    auto report = verify_metric(p, {1, 20});
    ratio expected = brute_force_max_piece(relators);
    bool expected_holds = ratio_less(expected, {1, 20});
    bool same_ratio = report.max_piece.num * expected.den == expected.num * report.max_piece.den;
    if (report.holds != expected_holds || !same_ratio) {
      note = "presentation " + std::to_string(iter + 1) + ": reported " +
             std::to_string(report.max_piece.num) + "/" + std::to_string(report.max_piece.den) +
             ", reference " + std::to_string(expected.num) + "/" + std::to_string(expected.den);
      return false;
    }
  }
  note = "50 presentations";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: scg_acceptance <corpus-dir>\n";
    return 2;
  }

  std::vector<std::filesystem::path> files;
  std::filesystem::path three_cycle;
  try {
    files = corpus_files(argv[1]);
    for (const auto& f : files)
      if (f.filename() == "three-cycle.structure") three_cycle = f;
    if (three_cycle.empty()) throw parse_error("corpus lacks three-cycle.structure");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  int failed = 0;
  auto criterion = [&](const std::string& name, double budget_secs,
                       const std::function<bool(std::string&)>& fn) {
    auto start = clock_type::now();
    std::string note;
    bool ok = false;
    try {
      ok = fn(note);
    } catch (const std::exception& e) {
      note = e.what();
    }
    double secs = std::chrono::duration<double>(clock_type::now() - start).count();
    if (secs > budget_secs) {
      ok = false;
      note += (note.empty() ? "" : "; ") + std::string("over the ") +
              std::to_string(static_cast<long long>(budget_secs)) + "s budget";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << "  " << name << " [" << secs << "s]";
    if (!note.empty()) line << " " << note;
    std::cout << line.str() << "\n";
    if (!ok) ++failed;
  };

  criterion("exact block word length", 1.0,
            [&](std::string& n) { return check_block_length(files.front(), n); });
  criterion("corpus metric at 1/20", 60.0 * static_cast<double>(files.size()),
            [&](std::string& n) { return check_corpus_metric(files, n); });
  criterion("corpus round-trip", 30.0 * static_cast<double>(files.size()),
            [&](std::string& n) { return check_corpus_roundtrip(files, n); });
  criterion("trivial products with spans", 300.0,
            [&](std::string& n) { return check_trivial_products(three_cycle, n); });
  criterion("letter separation and torsion powers", 10.0,
            [&](std::string& n) { return check_separation(three_cycle, n); });
  criterion("orbit recognition", 120.0,
            [&](std::string& n) { return check_orbit(three_cycle, n); });
  criterion("tree term identities", 120.0,
            [&](std::string& n) { return check_tree_identities(n); });
  criterion("level-shift transfer", 300.0,
            [&](std::string& n) { return check_shift_transfer(n); });
  criterion("metric reference agreement", 300.0,
            [&](std::string& n) { return check_metric_oracle(n); });

  return failed == 0 ? 0 : 1;
}
