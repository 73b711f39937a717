#include "scg/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

namespace scg {

bool ratio_less(const ratio& a, const ratio& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

relator_family::relator_family(std::vector<power_word> list) : list_(std::move(list)) {}
relator_family::relator_family(schema_fn schema) : schema_(std::move(schema)) {}

const std::vector<power_word>& relator_family::list() const {
  if (schema_) throw domain_error("relator schema has no finite list");
  return list_;
}

std::vector<power_word> relator_family::relevant(const std::vector<gen_index>& letters,
                                                 std::int64_t max_letter_len) const {
  if (schema_) return schema_(letters, max_letter_len);
  std::vector<power_word> out;
  for (const power_word& r : list_)
    if (static_cast<__int128>(r.letter_length()) < 2 * static_cast<__int128>(max_letter_len))
      out.push_back(r);
  return out;
}

presentation::presentation(alphabet_ptr alph, relator_family relators,
                           std::map<gen_index, std::int64_t> torsion_orders)
    : alph_(std::move(alph)), relators_(std::move(relators)), torsion_(std::move(torsion_orders)) {
  if (!alph_) throw domain_error("presentation needs an alphabet");
  for (const auto& [g, p] : torsion_) {
    if (p < 2)
      throw domain_error("torsion order for '" + alph_->gen(g).name + "' must be at least 2");
  }
  if (relators_.finite()) {
    for (const power_word& r : relators_.list()) {
      if (r.empty()) throw domain_error("empty relator");
      if (!cyclic_reduce(r).conjugator.empty())
        throw domain_error("relator not cyclically reduced: " + render_word(r));
    }
    for (const auto& [g, p] : torsion_) {
      bool matched = false;
      for (const power_word& r : relators_.list())
        if (r.runs().size() == 1 && r.runs()[0].gen == g && std::llabs(r.runs()[0].exp) == p)
          matched = true;
      if (!matched)
        throw domain_error("torsion order for '" + alph_->gen(g).name +
                           "' has no matching relator");
    }
  }
}

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  a ^= b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2);
  return a;
}
std::uint64_t run_key(gen_index g, std::int64_t exp) {
  return mix(static_cast<std::uint64_t>(g) + 1, static_cast<std::uint64_t>(exp));
}
std::uint64_t pair_key(gen_index g1, bool n1, gen_index g2, bool n2) {
  return mix(mix(g1 + 1, n1 ? 2 : 3), mix(g2 + 1, n2 ? 2 : 3));
}

/** One symmetrized source word (a relator or its inverse) with run indexes
    that make rotation matching cheap. */
struct closure_word {
  cyclic_word cyc;
  std::size_t relator = 0;
  bool inverted = false;
  std::int64_t length = 0;
  std::vector<gen_index> gens;
  std::vector<std::int64_t> exps;
  std::vector<std::int64_t> caps;
  std::int64_t max_adjacent = 0;
  std::unordered_multimap<std::uint64_t, std::size_t> exact;  // (gen, exp) -> run
  std::unordered_multimap<std::uint64_t, std::size_t> adj;    // run pair signature -> first run
};

closure_word make_closure(const power_word& r, std::size_t relator, bool inverted) {
  closure_word cw;
  cw.cyc = to_cyclic(inverted ? invert(r) : r);
  cw.relator = relator;
  cw.inverted = inverted;
  cw.length = cw.cyc.letter_len;
  std::size_t n = cw.cyc.runs.size();
  for (const run& rn : cw.cyc.runs) {
    cw.gens.push_back(rn.gen);
    cw.exps.push_back(rn.exp);
    cw.caps.push_back(std::llabs(rn.exp));
  }
  for (std::size_t i = 0; i < n; ++i) {
    cw.exact.emplace(run_key(cw.gens[i], cw.exps[i]), i);
    if (n > 1) {
      std::size_t nx = (i + 1) % n;
      cw.adj.emplace(pair_key(cw.gens[i], cw.exps[i] < 0, cw.gens[nx], cw.exps[nx] < 0), i);
      cw.max_adjacent = std::max(cw.max_adjacent, cw.caps[i] + cw.caps[nx]);
    } else {
      cw.max_adjacent = cw.caps[i];
    }
  }
  return cw;
}

/** A maximal overlap: `length` letters starting at subject letter `start`
    equal the prefix of the rotation of closure word `cw` that begins
    `offset` letters into its run `first_run`. */
struct match_candidate {
  std::int64_t start = 0;
  std::int64_t length = 0;
  std::size_t cw = 0;
  std::size_t first_run = 0;
  std::int64_t offset = 0;
};

struct subject_view {
  const std::vector<run>* runs = nullptr;
  std::vector<std::int64_t> prefix;
  std::int64_t length = 0;
  bool cyclic = false;
  std::unordered_multimap<std::uint64_t, std::size_t> by_gen;  // (gen, neg) -> run
};

subject_view make_subject(const std::vector<run>& runs, bool cyclic) {
  subject_view s;
  s.runs = &runs;
  s.cyclic = cyclic;
  s.prefix.reserve(runs.size());
  for (std::size_t j = 0; j < runs.size(); ++j) {
    s.prefix.push_back(s.length);
    s.length += std::llabs(runs[j].exp);
    s.by_gen.emplace(mix(runs[j].gen + 1, runs[j].exp < 0 ? 2 : 3), j);
  }
  return s;
}

// Emits every overlap T between a subject subword and a rotation prefix of cw
// with T * thr_den > thr_num * |cw|. Matches are run-aligned: interior runs
// agree exactly, boundary runs may be partial.
void scan_matches(const subject_view& s, const closure_word& cw, std::size_t cw_id,
                  std::int64_t thr_num, std::int64_t thr_den,
                  std::vector<match_candidate>& out) {
  const std::vector<run>& sr = *s.runs;
  std::size_t S = sr.size();
  std::size_t R = cw.cyc.runs.size();
  if (S == 0) return;
  auto passes = [&](std::int64_t T) {
    return static_cast<__int128>(T) * thr_den > static_cast<__int128>(thr_num) * cw.length;
  };
  auto scap = [&](std::size_t j) -> std::int64_t { return std::llabs(sr[j].exp); };

  // Anchors at exactly matching runs, extended both ways.
  for (std::size_t j = 0; j < S; ++j) {
    auto [lo, hi] = cw.exact.equal_range(run_key(sr[j].gen, sr[j].exp));
    for (auto it = lo; it != hi; ++it) {
      std::size_t i = it->second;
      if (cw.gens[i] != sr[j].gen || cw.exps[i] != sr[j].exp) continue;

      // Letters matchable to the right of the anchor, walking at most R-1
      // further relator runs; a partially matched run ends the walk.
      std::int64_t r_letters = 0;
      std::size_t r_steps = 0;
      while (r_steps + 1 < R) {
        std::size_t steps = r_steps + 1;
        if (s.cyclic ? (steps + 1 > S) : (j + steps >= S)) break;
        std::size_t sj = s.cyclic ? (j + steps) % S : j + steps;
        std::size_t ci = (i + steps) % R;
        if (sr[sj].gen != cw.gens[ci] || (sr[sj].exp < 0) != (cw.exps[ci] < 0)) break;
        r_letters += std::min(scap(sj), cw.caps[ci]);
        ++r_steps;
        if (scap(sj) != cw.caps[ci]) break;
      }

      std::int64_t l_letters = 0;
      std::size_t l_steps = 0;
      std::size_t l_last = i;         // relator run holding the left end
      std::int64_t l_last_taken = 0;  // letters taken from its tail
      while (l_steps + 1 < R) {
        std::size_t steps = l_steps + 1;
        if (s.cyclic ? (1 + r_steps + steps > S) : (j < steps)) break;
        std::size_t sj = s.cyclic ? (j + S - (steps % S)) % S : j - steps;
        std::size_t ci = (i + R - (steps % R)) % R;
        if (sr[sj].gen != cw.gens[ci] || (sr[sj].exp < 0) != (cw.exps[ci] < 0)) break;
        std::int64_t m = std::min(scap(sj), cw.caps[ci]);
        l_letters += m;
        ++l_steps;
        l_last = ci;
        l_last_taken = m;
        if (scap(sj) != cw.caps[ci]) break;
      }

      // Left and right reach may wrap around the relator circle and compete
      // for the same letters; the leftmost-then-longest rule gives the left
      // side priority and clips the right.
      std::int64_t T = cw.caps[i] + l_letters +
                       std::min(r_letters, cw.length - cw.caps[i] - l_letters);
      if (!passes(T)) continue;

      match_candidate c;
      c.length = T;
      c.cw = cw_id;
      if (l_steps == 0) {
        c.start = s.prefix[j];
        c.first_run = i;
        c.offset = 0;
      } else {
        std::size_t sj = s.cyclic ? (j + S - (l_steps % S)) % S : j - l_steps;
        c.start = s.prefix[sj] + scap(sj) - l_last_taken;
        c.first_run = l_last;
        c.offset = cw.caps[l_last] - l_last_taken;
      }
      out.push_back(c);
    }
  }

  // Two-run overlaps with both boundary runs partial.
  if (R > 1 && S > 1 && passes(cw.max_adjacent)) {
    std::size_t last = s.cyclic ? S : S - 1;
    for (std::size_t j = 0; j < last; ++j) {
      std::size_t j2 = (j + 1) % S;
      auto [lo, hi] =
          cw.adj.equal_range(pair_key(sr[j].gen, sr[j].exp < 0, sr[j2].gen, sr[j2].exp < 0));
      for (auto it = lo; it != hi; ++it) {
        std::size_t i = it->second;
        std::size_t i2 = (i + 1) % R;
        if (cw.gens[i] != sr[j].gen || (cw.exps[i] < 0) != (sr[j].exp < 0)) continue;
        if (cw.gens[i2] != sr[j2].gen || (cw.exps[i2] < 0) != (sr[j2].exp < 0)) continue;
        std::int64_t a = std::min(scap(j), cw.caps[i]);
        std::int64_t b = std::min(scap(j2), cw.caps[i2]);
        if (!passes(a + b)) continue;
        match_candidate c;
        c.start = s.prefix[j] + scap(j) - a;
        c.length = a + b;
        c.cw = cw_id;
        c.first_run = i;
        c.offset = cw.caps[i] - a;
        out.push_back(c);
      }
    }
  }

  // Single-run overlaps against relator runs long enough to clear the
  // threshold on their own.
  for (std::size_t i = 0; i < R; ++i) {
    if (!passes(cw.caps[i])) continue;
    auto [lo, hi] = s.by_gen.equal_range(mix(cw.gens[i] + 1, cw.exps[i] < 0 ? 2 : 3));
    for (auto it = lo; it != hi; ++it) {
      std::size_t j = it->second;
      if (sr[j].gen != cw.gens[i] || (sr[j].exp < 0) != (cw.exps[i] < 0)) continue;
      std::int64_t T = std::min(scap(j), cw.caps[i]);
      if (!passes(T)) continue;
      match_candidate c;
      c.start = s.prefix[j];
      c.length = T;
      c.cw = cw_id;
      c.first_run = i;
      c.offset = cw.caps[i] - T;
      out.push_back(c);
    }
  }
}

bool candidate_before(const match_candidate& a, const match_candidate& b) {
  if (a.start != b.start) return a.start < b.start;
  if (a.length != b.length) return a.length > b.length;
  if (a.cw != b.cw) return a.cw < b.cw;
  if (a.first_run != b.first_run) return a.first_run < b.first_run;
  return a.offset < b.offset;
}

// The symmetrized sources a Dehn scan should consider for `w`: the relevant
// relators and their inverses, plus the torsion powers. Torsion relators in
// the stored list are skipped so they are not scanned twice.
std::vector<closure_word> closures_for(const power_word& w, const presentation& p) {
  std::vector<closure_word> cws;
  std::vector<power_word> rel = p.relators().relevant(w.letters(), w.letter_length());
  for (std::size_t k = 0; k < rel.size(); ++k) {
    const power_word& r = rel[k];
    if (r.empty()) continue;
    if (r.runs().size() == 1) {
      auto it = p.torsion_orders().find(r.runs()[0].gen);
      if (it != p.torsion_orders().end() && it->second == std::llabs(r.runs()[0].exp)) continue;
    }
    cws.push_back(make_closure(r, k, false));
    cws.push_back(make_closure(r, k, true));
  }
  std::size_t slot = rel.size();
  for (const auto& [g, ord] : p.torsion_orders()) {
    cws.push_back(make_closure(single_run(p.alph(), g, ord), slot, false));
    cws.push_back(make_closure(single_run(p.alph(), g, ord), slot, true));
    ++slot;
  }
  return cws;
}

}  // namespace

std::optional<dehn_step> find_dehn_step(const power_word& w, const presentation& p) {
  if (w.empty()) return std::nullopt;
  std::vector<closure_word> cws = closures_for(w, p);
  subject_view s = make_subject(w.runs(), false);
  std::vector<match_candidate> cand;
  for (std::size_t c = 0; c < cws.size(); ++c) scan_matches(s, cws[c], c, 1, 2, cand);
  if (cand.empty()) return std::nullopt;
  const match_candidate* best = &cand[0];
  for (const match_candidate& c : cand)
    if (candidate_before(c, *best)) best = &c;

  const closure_word& cw = cws[best->cw];
  dehn_step st;
  st.start_letter = best->start;
  st.length = best->length;
  auto run_of = [&](std::int64_t letter) {
    std::size_t r = static_cast<std::size_t>(
        std::upper_bound(s.prefix.begin(), s.prefix.end(), letter) - s.prefix.begin() - 1);
    return r;
  };
  st.start_run = run_of(best->start);
  st.start_offset = best->start - s.prefix[st.start_run];
  st.end_run = run_of(best->start + best->length - 1);
  st.end_offset = best->start + best->length - 1 - s.prefix[st.end_run] + 1;
  st.relator_rotation = rotation(w.alph(), cw.cyc, best->first_run, best->offset);
  st.replacement = invert(subword(st.relator_rotation, best->length, cw.length - best->length));
  if (!(subword(w, best->start, best->length) ==
        subword(st.relator_rotation, 0, best->length)))
    throw property_violation("scanned match does not align with the relator rotation");
  return st;
}

dehn_result dehn_reduce(const power_word& w, const presentation& p) {
  dehn_result out{w, {}};
  while (auto st = find_dehn_step(out.minimal, p)) {
    power_word next = splice(out.minimal, st->start_letter, st->length, st->replacement);
    if (next.letter_length() >= out.minimal.letter_length())
      throw property_violation("Dehn step failed to shorten the word");
    out.log.push_back(std::move(*st));
    out.minimal = std::move(next);
  }
  return out;
}

void replay_dehn_log(const power_word& input, const std::vector<dehn_step>& log,
                     const power_word& output) {
  power_word w = input;
  for (const dehn_step& st : log) {
    std::int64_t L = st.relator_rotation.letter_length();
    if (2 * st.length <= L)
      throw property_violation("logged match does not exceed half its relator");
    if (!(subword(w, st.start_letter, st.length) ==
          subword(st.relator_rotation, 0, st.length)))
      throw property_violation("logged span does not match the relator rotation");
    if (!(st.replacement == invert(subword(st.relator_rotation, st.length, L - st.length))))
      throw property_violation("logged replacement is not the inverted remainder");
    w = splice(w, st.start_letter, st.length, st.replacement);
  }
  if (!(w == output)) throw property_violation("replayed reduction does not reach the output");
}

bool is_trivial(const power_word& w, const presentation& p) {
  return dehn_reduce(w, p).minimal.empty();
}

power_word cyclic_dehn_reduce(const power_word& w, const presentation& p) {
  power_word x = w;
  for (;;) {
    cyclic_split cs = cyclic_reduce(x);
    bool stripped = !cs.conjugator.empty();
    x = std::move(cs.core);
    if (x.empty()) return x;

    // Dehn-reduce the word itself, then seam-moving rotations of it.
    bool reduced = false;
    std::vector<power_word> forms;
    forms.push_back(x);
    cyclic_word cx = to_cyclic(x);
    forms.push_back(rotation(p.alph(), cx, 0, 0));
    if (cx.runs.size() > 1) forms.push_back(rotation(p.alph(), cx, cx.runs.size() / 2, 0));
    for (const power_word& form : forms) {
      dehn_result dr = dehn_reduce(form, p);
      if (dr.minimal.letter_length() < x.letter_length()) {
        x = std::move(dr.minimal);
        reduced = true;
        break;
      }
    }
    if (!reduced && !stripped) return x;
  }
}

bool has_order_dividing(const power_word& w, int i, const presentation& p) {
  if (i != 1 && i != 2) throw domain_error("torsion generator index must be 1 or 2");
  gen_index f = 0;
  if (!p.alph()->find_role(i == 1 ? gen_role::f1 : gen_role::f2, f))
    throw domain_error("presentation has no torsion generator f" + std::to_string(i));
  power_word x = cyclic_dehn_reduce(w, p);
  if (x.empty()) return true;
  return x.runs().size() == 1 && x.runs()[0].gen == f;
}

namespace {

/** Tail tokens of a rotation: the runs after the leading run, cyclically,
    then the unconsumed remainder of the leading run. */
struct tail_cursor {
  const closure_word* cw;
  std::size_t lead;
  std::int64_t consumed;  // letters taken from the leading run
  std::size_t t = 0;

  bool next(gen_index& g, bool& neg, std::int64_t& mag) {
    std::size_t R = cw->cyc.runs.size();
    if (t + 1 < R) {
      std::size_t idx = (lead + 1 + t) % R;
      g = cw->gens[idx];
      neg = cw->exps[idx] < 0;
      mag = cw->caps[idx];
      ++t;
      return true;
    }
    if (t + 1 == R && consumed < cw->caps[lead]) {
      g = cw->gens[lead];
      neg = cw->exps[lead] < 0;
      mag = cw->caps[lead] - consumed;
      ++t;
      return true;
    }
    return false;
  }
  bool done() const {
    std::size_t R = cw->cyc.runs.size();
    return t + 1 > R || (t + 1 == R && consumed == cw->caps[lead]);
  }
};

enum class walk_outcome { piece, duplicate, prefix_of };

struct walk_result {
  walk_outcome kind = walk_outcome::piece;
  std::int64_t piece_len = 0;
  std::size_t shorter = 0;  // closure id fully contained in the other (prefix_of)
};

// Longest common prefix of the two rotations that start with the same
// `lead_letters` letters of the given runs. Detects dedup (equal words) and
// whole-word containment.
walk_result walk_tails(const closure_word& a, std::size_t run_a, const closure_word& b,
                       std::size_t run_b, std::int64_t lead_letters, std::size_t id_a,
                       std::size_t id_b) {
  tail_cursor ca{&a, run_a, lead_letters};
  tail_cursor cb{&b, run_b, lead_letters};
  walk_result res;
  res.piece_len = lead_letters;
  for (;;) {
    gen_index g1 = 0, g2 = 0;
    bool n1 = false, n2 = false;
    std::int64_t m1 = 0, m2 = 0;
    bool h1 = ca.next(g1, n1, m1);
    bool h2 = cb.next(g2, n2, m2);
    if (!h1 && !h2) {
      res.kind = walk_outcome::duplicate;
      return res;
    }
    if (!h1 || !h2) {
      res.kind = walk_outcome::prefix_of;
      res.shorter = h1 ? id_b : id_a;
      res.piece_len = h1 ? b.length : a.length;
      return res;
    }
    if (g1 != g2 || n1 != n2) return res;
    std::int64_t m = std::min(m1, m2);
    res.piece_len += m;
    if (m1 == m2) continue;
    // The shorter token ends inside the other's run; if it was the final
    // token its whole rotation is a prefix of the other, otherwise the next
    // token starts a different generator and the prefix ends here.
    const tail_cursor& shorter_cursor = m1 < m2 ? ca : cb;
    if (shorter_cursor.done()) {
      res.kind = walk_outcome::prefix_of;
      res.shorter = m1 < m2 ? id_a : id_b;
      res.piece_len = m1 < m2 ? a.length : b.length;
    }
    return res;
  }
}

struct bucket_entry {
  std::size_t cw;
  std::size_t run;
  std::int64_t cap;
  bool fixed;  // single-run word: only the full-run rotation exists
};

}  // namespace

metric_report verify_metric(const presentation& p, const ratio& lambda) {
  if (lambda.num <= 0 || lambda.den <= 0) throw domain_error("lambda must be positive");
  const std::vector<power_word>& list = p.relators().list();
  std::vector<closure_word> cws;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const power_word& r = list[k];
    if (r.empty()) throw domain_error("empty relator");
    if (!cyclic_reduce(r).conjugator.empty())
      throw domain_error("relator not cyclically reduced: " + render_word(r));
    cws.push_back(make_closure(r, k, false));
    cws.push_back(make_closure(r, k, true));
  }

  std::map<std::pair<gen_index, bool>, std::vector<bucket_entry>> buckets;
  for (std::size_t c = 0; c < cws.size(); ++c) {
    const closure_word& cw = cws[c];
    for (std::size_t i = 0; i < cw.cyc.runs.size(); ++i)
      buckets[{cw.gens[i], cw.exps[i] < 0}].push_back(
          {c, i, cw.caps[i], cw.cyc.runs.size() == 1});
  }

  metric_report rep;
  rep.max_piece = {0, 1};
  auto alph = p.alph();
  auto consider = [&](std::int64_t piece, gen_index g, bool neg, const bucket_entry& P,
                      const bucket_entry& Q) {
    if (piece < 1) return;
    for (std::int64_t L : {cws[P.cw].length, cws[Q.cw].length}) {
      ratio r{piece, L};
      if (ratio_less(rep.max_piece, r)) {
        rep.max_piece = r;
        std::ostringstream os;
        os << "piece of " << piece << " letters starting " << alph->gen(g).name
           << (neg ? "^-" : "^+") << " shared by relator " << cws[P.cw].relator
           << (cws[P.cw].inverted ? " (inverted)" : "") << " and relator " << cws[Q.cw].relator
           << (cws[Q.cw].inverted ? " (inverted)" : "") << ", measured against length " << L;
        rep.witness = os.str();
      }
    }
  };

  for (const auto& [key, entries] : buckets) {
    auto [g, neg] = key;
    for (std::size_t a = 0; a < entries.size(); ++a) {
      const bucket_entry& P = entries[a];
      // Distinct rotations inside one run of one word.
      if (!P.fixed && P.cap >= 2) consider(P.cap - 1, g, neg, P, P);
      for (std::size_t b = a + 1; b < entries.size(); ++b) {
        const bucket_entry& Q = entries[b];
        if (P.fixed && Q.fixed) {
          if (P.cap == Q.cap) continue;  // identical one-run words: same element
          consider(std::min(P.cap, Q.cap), g, neg, P, Q);  // shorter word is a prefix
          continue;
        }
        // Unequal leading-run remainders end at the shorter remainder.
        consider(P.cap == Q.cap ? P.cap - 1 : std::min(P.cap, Q.cap), g, neg, P, Q);
        // Equal remainders: walk the tails from the shorter cap.
        if (P.fixed && P.cap > Q.cap) continue;
        if (Q.fixed && Q.cap > P.cap) continue;
        walk_result wr = walk_tails(cws[P.cw], P.run, cws[Q.cw], Q.run,
                                    std::min(P.cap, Q.cap), P.cw, Q.cw);
        if (wr.kind == walk_outcome::duplicate) continue;
        consider(wr.piece_len, g, neg, P, Q);
      }
    }
  }

  rep.holds = ratio_less(rep.max_piece, lambda);
  return rep;
}

greendlinger_report greendlinger_witnesses(const power_word& w, const presentation& p,
                                           const ratio& lambda) {
  if (w.empty()) throw domain_error("the empty word has no witnesses");
  if (!is_trivial(w, p)) throw domain_error("word is not trivial");

  cyclic_split cs = cyclic_reduce(w);
  const power_word& x = cs.core;
  greendlinger_report rep;
  rep.core_offset = cs.conjugator.letter_length();
  rep.core_length = x.letter_length();
  cyclic_word cx = to_cyclic(x);

  std::vector<power_word> rel = p.relators().relevant(x.letters(), x.letter_length());
  for (const power_word& r : rel) {
    if (r.letter_length() != x.letter_length()) continue;
    if (cyclically_equal(cx, to_cyclic(r)) || cyclically_equal(cx, to_cyclic(invert(r)))) {
      rep.result = greendlinger_report::kind::relator;
      return rep;
    }
  }
  if (cx.single_run()) {
    auto it = p.torsion_orders().find(cx.runs[0].gen);
    if (it != p.torsion_orders().end() && std::llabs(cx.runs[0].exp) == it->second) {
      rep.result = greendlinger_report::kind::relator;
      return rep;
    }
  }

  // Spans above the Greendlinger threshold (1 - 3*lambda) on the cyclic core.
  std::vector<closure_word> cws = closures_for(x, p);
  subject_view s = make_subject(cx.runs, true);
  std::vector<match_candidate> cand;
  for (std::size_t c = 0; c < cws.size(); ++c)
    scan_matches(s, cws[c], c, lambda.den - 3 * lambda.num, lambda.den, cand);
  std::sort(cand.begin(), cand.end(), candidate_before);
  cand.erase(std::unique(cand.begin(), cand.end(),
                         [](const match_candidate& a, const match_candidate& b) {
                           return a.start == b.start && a.length == b.length && a.cw == b.cw;
                         }),
             cand.end());

  // The core may have a merged seam; its letter 0 sits inside the first
  // cyclic run when the original first and last runs shared a generator.
  std::int64_t shift = 0;
  if (cx.runs.size() < x.runs().size()) shift = std::llabs(x.runs().back().exp);
  std::int64_t n = x.letter_length();
  auto to_core = [&](std::int64_t pos) { return ((pos - shift) % n + n) % n; };

  auto disjoint = [&](std::int64_t s1, std::int64_t l1, std::int64_t s2, std::int64_t l2) {
    if (l1 + l2 > n) return false;
    auto inside = [&](std::int64_t q, std::int64_t st, std::int64_t len) {
      std::int64_t d = ((q - st) % n + n) % n;
      return d < len;
    };
    return !inside(s2, s1, l1) && !inside(s1, s2, l2);
  };

  std::sort(cand.begin(), cand.end(), [](const match_candidate& a, const match_candidate& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.start < b.start;
  });
  if (cand.size() > 256) cand.resize(256);
  for (std::size_t i = 0; i < cand.size(); ++i) {
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      std::int64_t s1 = to_core(cand[i].start), s2 = to_core(cand[j].start);
      if (!disjoint(s1, cand[i].length, s2, cand[j].length)) continue;
      rep.result = greendlinger_report::kind::spans;
      rep.spans.push_back({s1, cand[i].length, cws[cand[i].cw].length});
      rep.spans.push_back({s2, cand[j].length, cws[cand[j].cw].length});
      if (rep.spans[0].start > rep.spans[1].start) std::swap(rep.spans[0], rep.spans[1]);
      return rep;
    }
  }
  rep.result = greendlinger_report::kind::failure;
  return rep;
}

presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  alphabet_ptr alph;
  std::vector<power_word> relators;
  std::map<gen_index, std::int64_t> torsion;
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens[0] == "generators:") {
      if (alph) throw parse_error("duplicate generators line");
      alph = std::make_shared<alphabet>();
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        gen_role role = gen_role::generic;
        if (tokens[i] == "b") role = gen_role::b;
        else if (tokens[i] == "c") role = gen_role::c;
        else if (tokens[i] == "d") role = gen_role::d;
        else if (tokens[i] == "f1") role = gen_role::f1;
        else if (tokens[i] == "f2") role = gen_role::f2;
        alph->add({tokens[i], role});
      }
    } else if (tokens[0] == "torsion:") {
      if (!alph) throw parse_error("torsion line before generators");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto eq = tokens[i].find('=');
        if (eq == std::string::npos)
          throw parse_error("malformed torsion entry: '" + tokens[i] + "'");
        std::string name = tokens[i].substr(0, eq), value = tokens[i].substr(eq + 1);
        std::int64_t order = 0;
        auto res = std::from_chars(value.data(), value.data() + value.size(), order);
        if (res.ec != std::errc() || res.ptr != value.data() + value.size())
          throw parse_error("malformed torsion order: '" + value + "'");
        torsion[alph->index_of(name)] = order;
      }
    } else {
      if (!alph) throw parse_error("relator before generators line");
      relators.push_back(parse_word(line, alph));
    }
  }
  if (!alph) throw parse_error("missing generators line");
  return presentation(std::move(alph), relator_family(std::move(relators)), std::move(torsion));
}

std::string serialize_presentation(const presentation& p) {
  std::ostringstream out;
  out << "generators:";
  for (const auto& name : p.alph()->names()) out << ' ' << name;
  out << "\n";
  for (const power_word& r : p.relators().list()) out << render_word(r) << "\n";
  if (!p.torsion_orders().empty()) {
    out << "torsion:";
    for (const auto& [g, ord] : p.torsion_orders())
      out << ' ' << p.alph()->gen(g).name << '=' << ord;
    out << "\n";
  }
  return out.str();
}

}  // namespace scg
