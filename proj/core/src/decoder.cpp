#include "scg/decoder.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "scg/errors.hpp"

namespace scg {
namespace {

power_word letter(const alphabet_ptr& alph, gen_index g) { return single_run(alph, g, 1); }

std::string rep_name(const power_word& w) {
  std::string s = render_word(w);
  std::replace(s.begin(), s.end(), ' ', '.');
  return s;
}

// Nonempty freely reduced words of at most `budget` letters, shortest first,
// letters ordered by generator index with the positive sign first. The
// alphabet size is snapshotted once, so generators interned concurrently by a
// lazy encoding do not shift the enumeration.
void walk_words(const alphabet_ptr& alph, int budget,
                const std::function<void(const power_word&)>& fn) {
  const gen_index n = static_cast<gen_index>(alph->size());
  struct signed_letter {
    gen_index gen = 0;
    int sign = 1;
  };
  std::vector<signed_letter> word;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      std::vector<run> raw;
      raw.reserve(word.size());
      for (const signed_letter& l : word) raw.push_back({l.gen, l.sign});
      fn(power_word(alph, std::move(raw)));
      return;
    }
    for (gen_index g = 0; g < n; ++g)
      for (int sign : {1, -1}) {
        if (!word.empty() && word.back().gen == g && word.back().sign == -sign) continue;
        word.push_back({g, sign});
        rec(remaining - 1);
        word.pop_back();
      }
  };
  for (int len = 1; len <= budget; ++len) rec(len);
}

}  // namespace

bool in_domain(const power_word& x, const group_of_structure& g) {
  if (x.empty()) return false;  // the identity is never a domain element
  const alphabet_ptr& alph = g.pres.alph();
  return is_trivial(build_u(u_family::A, x, letter(alph, g.c), g.profile), g.pres) &&
         is_trivial(build_u(u_family::A, x, letter(alph, g.d), g.profile), g.pres);
}

std::variant<bool, power_word> recover_symbol(int m, const std::vector<power_word>& xs,
                                              const group_of_structure& g,
                                              const std::vector<power_word>& candidates) {
  if (!g.source->has_symbol(m))
    throw domain_error("no symbol with index " + std::to_string(m));
  const symbol sym = g.source->symbol_at(m);
  if (sym.kind == symbol_kind::constant)
    throw domain_error("constants must be normalized away before decoding");
  if (static_cast<std::size_t>(sym.arity) != xs.size())
    throw domain_error("symbol " + sym.name + " expects " + std::to_string(sym.arity) +
                       " arguments, got " + std::to_string(xs.size()));
  const power_word w = build_w(m, xs, letter(g.pres.alph(), g.b), g.profile);
  if (sym.kind == symbol_kind::relation) return is_trivial(w, g.pres);
  const power_word* match = nullptr;
  for (const power_word& y : candidates) {
    if (!is_trivial(concat(w, invert(y)), g.pres)) continue;
    if (match != nullptr)
      throw property_violation("two representatives both equal the value of " + sym.name);
    match = &y;
  }
  if (match == nullptr)
    throw domain_error("no known representative equals the value of " + sym.name +
                       "; decoding budget exhausted");
  return *match;
}

decoded_structure decode(const group_of_structure& g, int budget, int symbol_bound) {
  if (budget < 0) throw domain_error("negative decode budget");
  if (symbol_bound < 0 && !g.source->signature_finite())
    throw domain_error("decoding an infinite signature needs a symbol bound");

  decoded_structure out;
  walk_words(g.pres.alph(), budget, [&](const power_word& x) {
    if (!in_domain(x, g)) return;
    for (const power_word& r : out.reps)
      if (is_trivial(concat(x, invert(r)), g.pres)) return;
    out.reps.push_back(x);
    out.names.push_back(rep_name(x));
  });

  const std::vector<symbol> syms = g.source->symbols_upto(symbol_bound);
  out.rebuilt = fg_structure(signature(syms), out.names);
  for (const symbol& sym : syms) {
    if (sym.kind == symbol_kind::constant)
      throw domain_error("constants must be normalized away before decoding");
    if (sym.kind == symbol_kind::function && out.reps.empty())
      throw domain_error("decode budget " + std::to_string(budget) +
                         " leaves function symbol " + sym.name + " without values");
    std::vector<std::size_t> idx(static_cast<std::size_t>(sym.arity), 0);
    bool done = out.reps.empty() && sym.arity > 0;
    while (!done) {
      std::vector<power_word> xs;
      std::vector<std::string> args;
      xs.reserve(idx.size());
      args.reserve(idx.size());
      for (std::size_t j : idx) {
        xs.push_back(out.reps[j]);
        args.push_back(out.names[j]);
      }
      const auto got = recover_symbol(sym.index, xs, g, out.reps);
      if (sym.kind == symbol_kind::relation) {
        if (std::get<bool>(got)) out.rebuilt.add_relation_tuple(sym.name, args);
      } else {
        const power_word& y = std::get<power_word>(got);
        std::size_t vi = 0;
        while (!(out.reps[vi] == y)) ++vi;
        out.rebuilt.define_function(sym.name, args, out.names[vi]);
      }
      std::size_t pos = idx.size();
      for (;;) {
        if (pos == 0) {
          done = true;
          break;
        }
        --pos;
        if (++idx[pos] < out.reps.size()) break;
        idx[pos] = 0;
      }
    }
  }
  out.rebuilt.set_generators(out.names);
  out.rebuilt.validate();
  out.provenance = "decoded from a structure encoding (scale=" + g.profile.scale +
                   ", budget=" + std::to_string(budget) + ")";
  return out;
}

bool orbit_formula(const power_word& x, const power_word& y, const power_word& z,
                   const power_word& t1, const power_word& t2,
                   const group_of_structure& g) {
  const presentation& p = g.pres;
  // Normalizing first answers alike on group-equal inputs and keeps the
  // substituted powers of t1, t2 materially small.
  const power_word xn = dehn_reduce(x, p).minimal;
  const power_word yn = dehn_reduce(y, p).minimal;
  const power_word zn = dehn_reduce(z, p).minimal;
  const power_word t1n = dehn_reduce(t1, p).minimal;
  const power_word t2n = dehn_reduce(t2, p).minimal;

  // Nontrivial torsion of the first prime order, then of the second.
  if (t1n.empty() || !has_order_dividing(t1n, 1, p)) return false;
  if (t2n.empty() || !has_order_dividing(t2n, 2, p)) return false;
  // The identity would fail the non-torsion side conditions below.
  if (xn.empty() || yn.empty() || zn.empty()) return false;

  // v couples the torsion pair both ways.
  if (!is_trivial(build_v(t1n, t2n, g.profile), p)) return false;
  if (!is_trivial(build_v(t2n, t1n, g.profile), p)) return false;

  // Each remaining coordinate satisfies its own u family against both torsion
  // letters and is itself torsion-free for both primes.
  const auto u_clause = [&](u_family fam, const power_word& s) {
    return is_trivial(build_u(fam, s, t1n, g.profile), p) &&
           is_trivial(build_u(fam, s, t2n, g.profile), p) &&
           !has_order_dividing(s, 1, p) && !has_order_dividing(s, 2, p);
  };
  return u_clause(u_family::b, xn) && u_clause(u_family::c, yn) && u_clause(u_family::d, zn);
}

roundtrip_report roundtrip_check(const fg_structure& s, const construction_profile& profile) {
  const fg_structure src = normalize(s);
  const group_of_structure g = encode(src, profile);
  const decoded_structure d = decode(g, 1);
  roundtrip_report rep;
  if (auto bij = isomorphic(d.rebuilt, src)) {
    rep.ok = true;
    rep.bijection = std::move(*bij);
  }
  return rep;
}

std::string serialize_decoded(const decoded_structure& d) {
  return serialize_structure(d.rebuilt, d.provenance);
}

}  // namespace scg
