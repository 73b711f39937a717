#include "scg/words.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace scg {

namespace {

// Appends one run to a reduced run list, keeping it reduced.
void push_merged(std::vector<run>& out, run r) {
  if (r.exp == 0) return;
  if (!out.empty() && out.back().gen == r.gen) {
    out.back().exp = checked_add(out.back().exp, r.exp);
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(r);
}

std::int64_t total_letters(const std::vector<run>& runs) {
  std::int64_t n = 0;
  for (const run& r : runs) n = checked_add(n, checked_abs(r.exp));
  return n;
}

alphabet_ptr merge_alphabets(const alphabet_ptr& a, const alphabet_ptr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (a->names() != b->names()) throw alphabet_error("words use different alphabets");
  return a;
}

}  // namespace

power_word::power_word(alphabet_ptr alph, std::vector<run> raw) : alph_(std::move(alph)) {
  runs_.reserve(raw.size());
  for (const run& r : raw) push_merged(runs_, r);
  letter_len_ = total_letters(runs_);
}

std::vector<gen_index> power_word::letters() const {
  std::vector<gen_index> out;
  for (const run& r : runs_) {
    if (std::find(out.begin(), out.end(), r.gen) == out.end()) out.push_back(r.gen);
  }
  return out;
}

power_word parse_word(const std::string& text, const alphabet_ptr& alph) {
  if (!alph) throw alphabet_error("parse_word requires an alphabet");
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw parse_error("empty word text; the empty word is written 'e'");
  if (tokens.size() == 1 && tokens[0] == "e") return power_word(alph);

  std::vector<run> raw;
  raw.reserve(tokens.size());
  for (const std::string& tok : tokens) {
    if (tok == "e") throw parse_error("'e' cannot appear alongside runs");
    std::string name = tok;
    std::int64_t exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string digits = tok.substr(caret + 1);
      bool ok = !digits.empty();
      std::size_t first = digits[0] == '-' ? 1 : 0;
      ok = ok && digits.size() > first && digits[first] != '0';
      for (std::size_t i = first; ok && i < digits.size(); ++i)
        ok = digits[i] >= '0' && digits[i] <= '9';
      if (ok) {
        auto res = std::from_chars(digits.data(), digits.data() + digits.size(), exp);
        ok = res.ec == std::errc() && res.ptr == digits.data() + digits.size();
      }
      if (!ok) throw parse_error("malformed exponent in '" + tok + "'");
    }
    if (!alphabet::valid_name(name)) throw parse_error("malformed generator name in '" + tok + "'");
    raw.push_back({alph->index_of(name), exp});
  }
  return power_word(alph, std::move(raw));
}

std::string render_word(const power_word& w) {
  if (w.empty()) return "e";
  const alphabet_ptr& alph = w.alph();
  std::ostringstream out;
  bool first = true;
  for (const run& r : w.runs()) {
    if (!first) out << ' ';
    first = false;
    out << alph->gen(r.gen).name;
    if (r.exp != 1) out << '^' << r.exp;
  }
  return out.str();
}

power_word concat(const power_word& a, const power_word& b) {
  power_word out(merge_alphabets(a.alph(), b.alph()));
  out.runs_.reserve(a.runs().size() + b.runs().size());
  out.runs_ = a.runs();
  for (const run& r : b.runs()) push_merged(out.runs_, r);
  out.letter_len_ = total_letters(out.runs_);
  return out;
}

power_word invert(const power_word& w) {
  std::vector<run> raw;
  raw.reserve(w.runs().size());
  for (auto it = w.runs().rbegin(); it != w.runs().rend(); ++it)
    raw.push_back({it->gen, checked_neg(it->exp)});
  return power_word(w.alph(), std::move(raw));
}

cyclic_split cyclic_reduce(const power_word& w) {
  std::vector<run> runs = w.runs();
  std::size_t lo = 0, hi = runs.size();
  std::vector<run> conj;
  while (hi - lo >= 2) {
    run& f = runs[lo];
    run& l = runs[hi - 1];
    if (f.gen != l.gen || (f.exp > 0) == (l.exp > 0)) break;
    std::int64_t mag = std::min(checked_abs(f.exp), checked_abs(l.exp));
    std::int64_t t = f.exp > 0 ? mag : -mag;
    conj.push_back({f.gen, t});
    f.exp -= t;
    l.exp += t;
    if (f.exp == 0) ++lo;
    if (l.exp == 0) --hi;
  }
  cyclic_split out;
  out.conjugator = power_word(w.alph(), std::move(conj));
  out.core = power_word(w.alph(), std::vector<run>(runs.begin() + lo, runs.begin() + hi));
  return out;
}

power_word pow(const power_word& w, std::int64_t k, std::size_t max_runs) {
  if (k == 0 || w.empty()) return power_word(w.alph());
  if (k < 0) return pow(invert(w), checked_neg(k), max_runs);
  if (k == 1) return w;
  cyclic_split split = cyclic_reduce(w);
  power_word mid;
  if (split.core.runs().size() == 1) {
    const run& r = split.core.runs()[0];
    mid = single_run(w.alph(), r.gen, checked_mul(r.exp, k));
  } else {
    std::size_t core_runs = split.core.runs().size();
    if (static_cast<std::uint64_t>(k) > max_runs / core_runs)
      throw overflow_error("power expansion exceeds run budget");
    std::vector<run> raw;
    raw.reserve(split.core.runs().size() * static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i)
      for (const run& r : split.core.runs()) push_merged(raw, r);
    mid = power_word(w.alph(), std::move(raw));
  }
  return concat(split.conjugator, concat(mid, invert(split.conjugator)));
}

power_word single_run(const alphabet_ptr& alph, gen_index g, std::int64_t exp) {
  return power_word(alph, std::vector<run>{{g, exp}});
}

power_word subword(const power_word& w, std::int64_t start, std::int64_t len) {
  if (start < 0 || len < 0 || start > w.letter_length() - len)
    throw domain_error("subword range out of bounds");
  std::vector<run> raw;
  std::int64_t pos = 0;
  for (const run& r : w.runs()) {
    if (len == 0) break;
    std::int64_t width = checked_abs(r.exp);
    std::int64_t take_lo = std::max<std::int64_t>(start - pos, 0);
    std::int64_t take_hi = std::min(start + len - pos, width);
    if (take_hi > take_lo) {
      std::int64_t mag = take_hi - take_lo;
      raw.push_back({r.gen, r.exp > 0 ? mag : -mag});
    }
    pos = checked_add(pos, width);
    if (pos >= start + len) break;
  }
  return power_word(w.alph(), std::move(raw));
}

power_word splice(const power_word& w, std::int64_t start, std::int64_t len,
                  const power_word& repl) {
  power_word prefix = subword(w, 0, start);
  power_word suffix = subword(w, start + len, w.letter_length() - start - len);
  std::vector<run> raw;
  raw.reserve(prefix.runs().size() + repl.runs().size() + suffix.runs().size());
  for (const run& r : prefix.runs()) push_merged(raw, r);
  for (const run& r : repl.runs()) push_merged(raw, r);
  for (const run& r : suffix.runs()) push_merged(raw, r);
  return power_word(merge_alphabets(w.alph(), repl.alph()), std::move(raw));
}

cyclic_word to_cyclic(const power_word& w) {
  const std::vector<run>& rs = w.runs();
  std::size_t n = rs.size();
  cyclic_word out;
  out.letter_len = w.letter_length();
  if (n >= 2 && rs.front().gen == rs.back().gen) {
    if ((rs.front().exp > 0) != (rs.back().exp > 0))
      throw domain_error("word is not cyclically reduced");
    // Seam merge: the last run continues into the first when read cyclically.
    out.runs.reserve(n - 1);
    out.runs.push_back({rs.front().gen, checked_add(rs.back().exp, rs.front().exp)});
    for (std::size_t i = 1; i + 1 < n; ++i) out.runs.push_back(rs[i]);
  } else {
    out.runs = rs;
  }
  return out;
}

cyclic_word invert(const cyclic_word& w) {
  cyclic_word out;
  out.letter_len = w.letter_len;
  out.runs.reserve(w.runs.size());
  for (auto it = w.runs.rbegin(); it != w.runs.rend(); ++it)
    out.runs.push_back({it->gen, checked_neg(it->exp)});
  return out;
}

power_word rotation(const alphabet_ptr& alph, const cyclic_word& c, std::size_t first,
                    std::int64_t offset) {
  std::size_t n = c.runs.size();
  if (n == 0) return power_word(alph);
  if (first >= n) throw domain_error("rotation run index out of range");
  const run& f = c.runs[first];
  std::int64_t width = checked_abs(f.exp);
  if (offset < 0 || offset >= width) throw domain_error("rotation offset out of range");
  if (n == 1) return single_run(alph, f.gen, f.exp);
  std::vector<run> raw;
  raw.reserve(n + 1);
  std::int64_t head = width - offset;
  raw.push_back({f.gen, f.exp > 0 ? head : -head});
  for (std::size_t j = 1; j < n; ++j) raw.push_back(c.runs[(first + j) % n]);
  if (offset > 0) raw.push_back({f.gen, f.exp > 0 ? offset : -offset});
  return power_word(alph, std::move(raw));
}

bool cyclically_equal(const cyclic_word& a, const cyclic_word& b) {
  if (a.letter_len != b.letter_len || a.runs.size() != b.runs.size()) return false;
  std::size_t n = a.runs.size();
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool match = true;
    for (std::size_t j = 0; j < n && match; ++j) match = a.runs[j] == b.runs[(shift + j) % n];
    if (match) return true;
  }
  return false;
}

}  // namespace scg
