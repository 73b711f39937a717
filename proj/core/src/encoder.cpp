#include "scg/encoder.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "scg/errors.hpp"
#include "scg/words.hpp"

namespace scg {

namespace {

block_range block_of(u_family fam, const construction_profile& p) {
  switch (fam) {
    case u_family::A: return p.ua;
    case u_family::b: return p.ub;
    case u_family::c: return p.uc;
    case u_family::d: return p.ud;
  }
  throw domain_error("corrupt u-family selector");
}

power_word squares_product(const power_word& x, const power_word& y, const block_range& b) {
  if (x.empty() || y.empty()) throw domain_error("relator factors need nonempty arguments");
  if (x.alph() != y.alph()) throw alphabet_error("relator factors mix alphabets");
  std::vector<run> raw;
  raw.reserve(static_cast<std::size_t>(b.count()) * (x.runs().size() + y.runs().size() + 2));
  for (std::int64_t i = b.lo; i <= b.hi; ++i) {
    for (const run& r : x.runs()) raw.push_back(r);
    power_word p = pow(y, i * i);
    for (const run& r : p.runs()) raw.push_back(r);
  }
  return power_word(x.alph(), std::move(raw));
}

// Shared by the public lookup and the lazy schema; append races lose benignly.
gen_index intern_element(const alphabet_ptr& alph, const structure_oracle& src,
                         const std::string& key) {
  if (alph->contains(key)) {
    gen_index g = alph->index_of(key);
    if (alph->gen(g).role != gen_role::domain)
      throw domain_error("element name '" + key + "' collides with a construction constant");
    return g;
  }
  if (!src.element_exists(key))
    throw domain_error("unknown structure element '" + key + "'");
  try {
    return alph->add({key, gen_role::domain});
  } catch (const alphabet_error&) {
    return alph->index_of(key);
  }
}

const char* family_name(relator_info::family f) {
  switch (f) {
    case relator_info::family::torsion: return "torsion";
    case relator_info::family::v: return "v";
    case relator_info::family::ub: return "u_b";
    case relator_info::family::uc: return "u_c";
    case relator_info::family::ud: return "u_d";
    case relator_info::family::ua: return "u_A";
    case relator_info::family::w_relation: return "w-relation";
    case relator_info::family::w_function: return "w-function";
  }
  return "?";
}

}  // namespace

power_word build_u(u_family fam, const power_word& x, const power_word& y,
                   const construction_profile& profile) {
  return squares_product(x, y, block_of(fam, profile));
}

power_word build_v(const power_word& x, const power_word& y,
                   const construction_profile& profile) {
  return squares_product(x, y, profile.v);
}

power_word build_w(int m, const std::vector<power_word>& xs, const power_word& y,
                   const construction_profile& profile) {
  if (m < 1) throw domain_error("w relators need a symbol index of at least 1");
  if (xs.empty()) throw domain_error("w relators need at least one x argument");
  if (y.empty()) throw domain_error("relator factors need nonempty arguments");
  for (const power_word& x : xs) {
    if (x.empty()) throw domain_error("relator factors need nonempty arguments");
    if (x.alph() != y.alph()) throw alphabet_error("relator factors mix alphabets");
  }
  std::vector<run> raw;
  std::int64_t base = profile.w_base(m);
  for (std::int64_t i = 1; i <= profile.w_block_len; ++i) {
    for (const power_word& x : xs)
      for (const run& r : x.runs()) raw.push_back(r);
    power_word p = pow(y, base + i);
    for (const run& r : p.runs()) raw.push_back(r);
  }
  return power_word(y.alph(), std::move(raw));
}

group_of_structure encode(std::shared_ptr<const structure_oracle> source,
                          const construction_profile& profile) {
  if (!source) throw domain_error("encode needs a structure");
  validate_profile(profile);
  bool lazy = !source->domain_finite() || !source->signature_finite();
  std::vector<symbol> syms = source->symbols_upto(source->signature_finite() ? -1 : 64);
  for (const symbol& s : syms)
    if (s.kind == symbol_kind::constant || s.arity < 1)
      throw domain_error("encode requires a normalized signature; symbol '" + s.name +
                         "' is a constant or has arity 0");

  auto alph = std::make_shared<alphabet>();
  std::map<std::string, gen_index> element_gens;
  std::vector<std::string> base_elements = lazy ? source->generators() : source->domain();
  if (base_elements.empty()) throw domain_error("encode needs a nonempty domain");
  for (const std::string& key : base_elements)
    element_gens[key] = alph->add({key, gen_role::domain});
  gen_index b = alph->add({"b", gen_role::b});
  gen_index c = alph->add({"c", gen_role::c});
  gen_index d = alph->add({"d", gen_role::d});
  gen_index f1 = alph->add({"f1", gen_role::f1});
  gen_index f2 = alph->add({"f2", gen_role::f2});
  std::map<gen_index, std::int64_t> torsion{{f1, profile.p1}, {f2, profile.p2}};
  auto one = [&](gen_index g) { return single_run(alph, g, 1); };

  if (lazy) {
    relator_family::schema_fn schema =
        [alph, source, profile, b, c, d, f1, f2](const std::vector<gen_index>& letters,
                                                 std::int64_t max_len) {
          std::set<gen_index> have(letters.begin(), letters.end());
          auto has = [&](gen_index g) { return have.count(g) != 0; };
          std::vector<power_word> out;
          auto fits = [&](const power_word& w) {
            return static_cast<__int128>(w.letter_length()) <
                   2 * static_cast<__int128>(max_len);
          };
          auto push = [&](power_word w) {
            if (fits(w)) out.push_back(std::move(w));
          };
          auto one = [&](gen_index g) { return single_run(alph, g, 1); };
          if (has(f1) && has(f2)) {
            push(build_v(one(f1), one(f2), profile));
            push(build_v(one(f2), one(f1), profile));
          }
          for (auto [xg, fam] : {std::pair{b, u_family::b}, std::pair{c, u_family::c},
                                 std::pair{d, u_family::d}}) {
            if (!has(xg)) continue;
            if (has(f1)) push(build_u(fam, one(xg), one(f1), profile));
            if (has(f2)) push(build_u(fam, one(xg), one(f2), profile));
          }
          std::vector<gen_index> elems;
          for (gen_index g : letters)
            if (alph->gen(g).role == gen_role::domain) elems.push_back(g);
          std::sort(elems.begin(), elems.end());
          elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
          for (gen_index a : elems) {
            if (has(c)) push(build_u(u_family::A, one(a), one(c), profile));
            if (has(d)) push(build_u(u_family::A, one(a), one(d), profile));
          }
          if (has(b) && !elems.empty()) {
            const std::int64_t L = profile.w_block_len;
            for (int m = 1; source->has_symbol(m); ++m) {
              __int128 floor_len = static_cast<__int128>(L) * (1 + profile.w_base(m)) +
                                   static_cast<__int128>(L) * (L + 1) / 2;
              // A fixed-point function relator cyclically reduces to one
              // letter under this floor, so the break allows for it.
              if (floor_len - 1 >= 2 * static_cast<__int128>(max_len)) break;
              symbol sym = source->symbol_at(m);
              std::vector<std::size_t> odo(static_cast<std::size_t>(sym.arity), 0);
              while (true) {
                std::vector<std::string> keys;
                std::vector<power_word> xs;
                for (std::size_t idx : odo) {
                  keys.push_back(alph->gen(elems[idx]).name);
                  xs.push_back(one(elems[idx]));
                }
                power_word w = build_w(m, xs, one(b), profile);
                if (sym.kind == symbol_kind::relation) {
                  if (source->holds(m, keys)) push(std::move(w));
                } else {
                  gen_index vg = intern_element(alph, *source, source->apply(m, keys));
                  push(cyclic_reduce(concat(w, invert(single_run(alph, vg, 1)))).core);
                }
                std::size_t pos = odo.size();
                while (pos > 0) {
                  if (++odo[pos - 1] < elems.size()) break;
                  odo[pos - 1] = 0;
                  --pos;
                }
                if (pos == 0) break;
              }
            }
          }
          return out;
        };
    presentation pres(alph, relator_family(std::move(schema)), std::move(torsion));
    return group_of_structure{std::move(pres), std::move(source), profile,
                              b,  c,  d,  f1, f2, std::move(element_gens), {}, true};
  }

  std::vector<power_word> list;
  std::vector<relator_info> infos;
  auto push = [&](power_word w, relator_info info) {
    list.push_back(std::move(w));
    infos.push_back(std::move(info));
  };
  using fam = relator_info::family;
  push(single_run(alph, f1, profile.p1), {fam::torsion, {f1}, "f1", f1, 0});
  push(single_run(alph, f2, profile.p2), {fam::torsion, {f2}, "f2", f2, 0});
  push(build_v(one(f1), one(f2), profile), {fam::v, {f1, f2}, "f1", f2, 0});
  push(build_v(one(f2), one(f1), profile), {fam::v, {f1, f2}, "f2", f1, 0});
  push(build_u(u_family::b, one(b), one(f1), profile), {fam::ub, {b, f1}, "b", f1, 0});
  push(build_u(u_family::b, one(b), one(f2), profile), {fam::ub, {b, f2}, "b", f2, 0});
  push(build_u(u_family::c, one(c), one(f1), profile), {fam::uc, {c, f1}, "c", f1, 0});
  push(build_u(u_family::c, one(c), one(f2), profile), {fam::uc, {c, f2}, "c", f2, 0});
  push(build_u(u_family::d, one(d), one(f1), profile), {fam::ud, {d, f1}, "d", f1, 0});
  push(build_u(u_family::d, one(d), one(f2), profile), {fam::ud, {d, f2}, "d", f2, 0});
  std::vector<std::string> domain = source->domain();
  for (const std::string& key : domain) {
    gen_index a = element_gens.at(key);
    push(build_u(u_family::A, one(a), one(c), profile), {fam::ua, {a, c}, key, c, 0});
    push(build_u(u_family::A, one(a), one(d), profile), {fam::ua, {a, d}, key, d, 0});
  }
  for (const symbol& sym : syms) {
    std::vector<std::size_t> odo(static_cast<std::size_t>(sym.arity), 0);
    while (true) {
      std::vector<std::string> keys;
      std::vector<power_word> xs;
      std::vector<gen_index> lhs;
      for (std::size_t idx : odo) {
        keys.push_back(domain[idx]);
        gen_index a = element_gens.at(domain[idx]);
        xs.push_back(one(a));
        lhs.push_back(a);
      }
      lhs.push_back(b);
      std::ostringstream ctx;
      for (std::size_t i = 0; i < keys.size(); ++i) ctx << (i ? " " : "") << keys[i];
      if (sym.kind == symbol_kind::relation) {
        if (source->holds(sym.index, keys))
          push(build_w(sym.index, xs, one(b), profile),
               {fam::w_relation, lhs, ctx.str(), b, sym.index});
      } else {
        gen_index vg = element_gens.at(source->apply(sym.index, keys));
        power_word r = cyclic_reduce(
            concat(build_w(sym.index, xs, one(b), profile),
                   invert(single_run(alph, vg, 1)))).core;
        push(std::move(r), {fam::w_function, lhs, ctx.str(), b, sym.index});
      }
      std::size_t pos = odo.size();
      while (pos > 0) {
        if (++odo[pos - 1] < domain.size()) break;
        odo[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  presentation pres(alph, relator_family(std::move(list)), std::move(torsion));
  return group_of_structure{std::move(pres), std::move(source), profile,
                            b,  c,  d,  f1, f2, std::move(element_gens),
                            std::move(infos), false};
}

group_of_structure encode(const fg_structure& source, const construction_profile& profile) {
  return encode(std::make_shared<fg_structure>(source), profile);
}

std::vector<power_word> relevant_relators(const group_of_structure& g,
                                          const std::vector<gen_index>& letters,
                                          std::int64_t max_len) {
  if (g.lazy) return g.pres.relators().relevant(letters, max_len);
  std::set<gen_index> have(letters.begin(), letters.end());
  std::vector<power_word> out;
  const auto& list = g.pres.relators().list();
  for (std::size_t i = 0; i < list.size(); ++i) {
    const relator_info& info = g.infos[i];
    if (info.fam == relator_info::family::torsion) continue;
    if (static_cast<__int128>(list[i].letter_length()) >=
        2 * static_cast<__int128>(max_len))
      continue;
    bool all = true;
    for (gen_index l : info.lhs_letters)
      if (!have.count(l)) {
        all = false;
        break;
      }
    if (all) out.push_back(list[i]);
  }
  return out;
}

gen_index element_generator(const group_of_structure& g, const std::string& key) {
  if (!g.source) throw domain_error("encoding carries no source structure");
  return intern_element(g.pres.alph(), *g.source, key);
}

std::vector<std::string> exponent_collisions(const group_of_structure& g) {
  if (g.lazy) throw domain_error("the exponent audit needs a stored relator list");
  struct hit {
    relator_info::family fam;
    std::string context;
  };
  std::map<std::pair<gen_index, std::int64_t>, std::vector<hit>> buckets;
  for (const relator_info& info : g.infos) {
    auto add = [&](std::int64_t e) {
      buckets[{info.y_gen, e}].push_back({info.fam, info.context});
    };
    switch (info.fam) {
      case relator_info::family::torsion:
        add(info.y_gen == g.f1 ? g.profile.p1 : g.profile.p2);
        break;
      case relator_info::family::v:
        for (std::int64_t i = g.profile.v.lo; i <= g.profile.v.hi; ++i) add(i * i);
        break;
      case relator_info::family::ub:
        for (std::int64_t i = g.profile.ub.lo; i <= g.profile.ub.hi; ++i) add(i * i);
        break;
      case relator_info::family::uc:
        for (std::int64_t i = g.profile.uc.lo; i <= g.profile.uc.hi; ++i) add(i * i);
        break;
      case relator_info::family::ud:
        for (std::int64_t i = g.profile.ud.lo; i <= g.profile.ud.hi; ++i) add(i * i);
        break;
      case relator_info::family::ua:
        for (std::int64_t i = g.profile.ua.lo; i <= g.profile.ua.hi; ++i) add(i * i);
        break;
      case relator_info::family::w_relation:
      case relator_info::family::w_function:
        for (std::int64_t i = 1; i <= g.profile.w_block_len; ++i)
          add(g.profile.w_base(info.m) + i);
        break;
    }
  }
  std::vector<std::string> out;
  for (const auto& [key, hits] : buckets) {
    if (hits.size() < 2) continue;
    for (std::size_t a = 0; a < hits.size(); ++a)
      for (std::size_t b2 = a + 1; b2 < hits.size(); ++b2) {
        bool cross = hits[a].fam != hits[b2].fam;
        bool twin = !cross && hits[a].context == hits[b2].context;
        if (!cross && !twin) continue;
        std::ostringstream msg;
        msg << "letter " << g.pres.alph()->gen(key.first).name << " exponent "
            << key.second << " shared by " << family_name(hits[a].fam) << "("
            << hits[a].context << ") and " << family_name(hits[b2].fam) << "("
            << hits[b2].context << ")";
        out.push_back(msg.str());
      }
  }
  return out;
}

}  // namespace scg
