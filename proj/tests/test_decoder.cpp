#include "doctest.h"
#include "scg/decoder.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "helpers.hpp"
#include "scg/tree.hpp"

using namespace scg;
using scg::testing::scaled_profile;
using scg::testing::w;

namespace {

fg_structure parse(const char* text) { return parse_structure(text); }

const char* one_holds =
    "signature: m=1 kind=relation name=R arity=1\n"
    "domain: a0\n"
    "rel R: (a0)\n";

const char* one_empty =
    "signature: m=1 kind=relation name=R arity=1\n"
    "domain: a0\n";

const char* two_swap =
    "signature: m=1 kind=function name=f arity=1\n"
    "signature: m=2 kind=relation name=R arity=1\n"
    "domain: a0 a1\n"
    "fn f: (a0)->a1 (a1)->a0\n"
    "rel R: (a0)\n";

const char* three_add =
    "signature: m=1 kind=function name=add arity=2\n"
    "domain: a0 a1 a2\n"
    "fn add: (a0,a0)->a0 (a0,a1)->a1 (a0,a2)->a2 (a1,a0)->a1 (a1,a1)->a2 (a1,a2)->a0 "
    "(a2,a0)->a2 (a2,a1)->a0 (a2,a2)->a1\n";

}  // namespace

TEST_CASE("domain membership separates element letters from everything else") {
  group_of_structure g = encode(parse(two_swap));
  const auto& alph = g.pres.alph();

  CHECK(in_domain(w(alph, "a0"), g));
  CHECK(in_domain(w(alph, "a1"), g));
  for (const char* t : {"b", "c", "d", "f1", "f2", "a0^-1", "a0 a1"})
    CHECK_FALSE(in_domain(w(alph, t), g));
  // A conjugated element letter satisfies the c side but not the d side.
  CHECK_FALSE(in_domain(w(alph, "c a0 c^-1"), g));
  // The identity fails both sides.
  CHECK_FALSE(in_domain(w(alph, "a0 a0^-1"), g));
}

TEST_CASE("symbol recovery reads the tables back through the word problem") {
  group_of_structure g = encode(parse(two_swap));
  const auto& alph = g.pres.alph();
  std::vector<power_word> reps{w(alph, "a0"), w(alph, "a1")};

  auto fn = recover_symbol(1, {reps[0]}, g, reps);
  CHECK(std::get<power_word>(fn) == reps[1]);
  auto fn2 = recover_symbol(1, {reps[1]}, g, reps);
  CHECK(std::get<power_word>(fn2) == reps[0]);
  CHECK(std::get<bool>(recover_symbol(2, {reps[0]}, g, reps)));
  CHECK_FALSE(std::get<bool>(recover_symbol(2, {reps[1]}, g, reps)));

  CHECK_THROWS_AS(recover_symbol(1, {reps[0], reps[1]}, g, reps), domain_error);
  CHECK_THROWS_AS(recover_symbol(7, {reps[0]}, g, reps), domain_error);
  // No candidate matches: the budget was too small.
  CHECK_THROWS_AS(recover_symbol(1, {reps[0]}, g, {}), domain_error);

  // A binary table answers through two substituted letters.
  group_of_structure ga = encode(parse(three_add));
  const auto& aalph = ga.pres.alph();
  std::vector<power_word> areps{w(aalph, "a0"), w(aalph, "a1"), w(aalph, "a2")};
  CHECK(std::get<power_word>(recover_symbol(1, {areps[1], areps[2]}, ga, areps)) == areps[0]);
  CHECK(std::get<power_word>(recover_symbol(1, {areps[2], areps[2]}, ga, areps)) == areps[1]);
}

TEST_CASE("decode rebuilds the source structure at budget one") {
  fg_structure src = parse(two_swap);
  group_of_structure g = encode(src);
  decoded_structure d = decode(g, 1);

  CHECK(d.names == std::vector<std::string>{"a0", "a1"});
  CHECK(d.reps[0] == w(g.pres.alph(), "a0"));
  CHECK(d.reps[1] == w(g.pres.alph(), "a1"));
  CHECK(d.rebuilt.apply(1, {"a0"}) == "a1");
  CHECK(d.rebuilt.apply(1, {"a1"}) == "a0");
  CHECK(d.rebuilt.holds(2, {"a0"}));
  CHECK_FALSE(d.rebuilt.holds(2, {"a1"}));
  CHECK(isomorphic(d.rebuilt, src).has_value());

  // A larger budget finds only group-equal duplicates of the same reps.
  decoded_structure d2 = decode(g, 2);
  CHECK(d2.names == d.names);
}

TEST_CASE("decode with budget zero only closes relation-only signatures") {
  group_of_structure rel_only = encode(parse(one_holds));
  decoded_structure d = decode(rel_only, 0);
  CHECK(d.reps.empty());
  CHECK(d.rebuilt.domain().empty());

  group_of_structure with_fn = encode(parse(two_swap));
  CHECK_THROWS_AS(decode(with_fn, 0), domain_error);
  CHECK_THROWS_AS(decode(with_fn, -1), domain_error);
}

TEST_CASE("decoded structures serialize with a provenance comment") {
  decoded_structure d = decode(encode(parse(two_swap)), 1);
  std::string text = serialize_decoded(d);
  CHECK(text.find("decoded from a structure encoding") != std::string::npos);
  fg_structure back = parse_structure(text);
  CHECK(back.domain() == d.rebuilt.domain());
  CHECK(back.function_tables() == d.rebuilt.function_tables());
}

TEST_CASE("round trips recover each source up to isomorphism") {
  roundtrip_report r1 = roundtrip_check(parse(one_holds), paper_profile());
  CHECK(r1.ok);
  CHECK(r1.bijection.size() == 1);

  roundtrip_report r2 = roundtrip_check(parse(two_swap), paper_profile());
  CHECK(r2.ok);
  CHECK(r2.bijection.size() == 2);

  roundtrip_report r3 = roundtrip_check(parse(three_add), paper_profile());
  CHECK(r3.ok);
  CHECK(r3.bijection.size() == 3);

  // Constants pass through their unary-relation normal form.
  roundtrip_report r4 = roundtrip_check(parse("signature: m=1 kind=constant name=k arity=0\n"
                                              "signature: m=2 kind=relation name=S arity=1\n"
                                              "domain: a0 a1\n"
                                              "fn k: ()->a0\n"
                                              "rel S: (a1)\n"),
                                        scaled_profile());
  CHECK(r4.ok);
  CHECK(r4.bijection.size() == 2);
}

TEST_CASE("decoding one structure never matches a different one") {
  decoded_structure d = decode(encode(parse(one_holds)), 1);
  CHECK(isomorphic(d.rebuilt, parse(one_holds)).has_value());
  CHECK_FALSE(isomorphic(d.rebuilt, parse(one_empty)).has_value());
}

TEST_CASE("orbit formula accepts the canonical tuple and conjugates of it") {
  group_of_structure g = encode(parse(one_holds));
  const auto& alph = g.pres.alph();
  power_word xb = w(alph, "b"), yc = w(alph, "c"), zd = w(alph, "d");
  power_word t1 = w(alph, "f1"), t2 = w(alph, "f2");

  CHECK(orbit_formula(xb, yc, zd, t1, t2, g));

  for (const char* ctext : {"a0 c^2", "f2^-1 b", "d a0^-1"}) {
    CAPTURE(ctext);
    power_word conj = w(alph, ctext);
    auto by = [&](const power_word& t) { return concat(concat(conj, t), invert(conj)); };
    CHECK(orbit_formula(by(xb), by(yc), by(zd), by(t1), by(t2), g));
  }

  // Group-equal but freely distinct input: b padded with a relator.
  power_word padded = concat(xb, build_u(u_family::b, xb, t1, g.profile));
  CHECK(orbit_formula(padded, yc, zd, t1, t2, g));
}

TEST_CASE("orbit formula rejects near misses") {
  group_of_structure g = encode(parse(one_holds));
  const auto& alph = g.pres.alph();
  power_word xb = w(alph, "b"), yc = w(alph, "c"), zd = w(alph, "d");
  power_word t1 = w(alph, "f1"), t2 = w(alph, "f2");

  // Coordinate swaps.
  CHECK_FALSE(orbit_formula(yc, xb, zd, t1, t2, g));
  CHECK_FALSE(orbit_formula(xb, yc, zd, t2, t1, g));
  CHECK_FALSE(orbit_formula(xb, zd, yc, t1, t2, g));
  // Duplicated torsion letter.
  CHECK_FALSE(orbit_formula(xb, yc, zd, t1, t1, g));
  // One coordinate multiplied by a domain generator.
  CHECK_FALSE(orbit_formula(concat(xb, w(alph, "a0")), yc, zd, t1, t2, g));
  // Conjugating only one coordinate breaks the coupling.
  CHECK_FALSE(orbit_formula(xb, yc, zd, w(alph, "c f1 c^-1"), t2, g));
  // Identity coordinates fail their side conditions.
  CHECK_FALSE(orbit_formula(power_word(alph), yc, zd, t1, t2, g));
  CHECK_FALSE(orbit_formula(xb, yc, zd, power_word(alph), t2, g));
}

TEST_CASE("tree encodings decode their generator row and report truncation") {
  group_of_structure g = encode(std::make_shared<tree_structure>(false, 2));
  const auto& alph = g.pres.alph();

  decoded_structure d = decode(g, 1, 0);
  CHECK(d.names == std::vector<std::string>{"e0"});
  CHECK(d.rebuilt.sig().symbols().empty());

  // With the parent map in scope, its value lies outside the budget-one reps.
  CHECK_THROWS_AS(decode(g, 1, 1), domain_error);
  // An unbounded symbol set is refused outright.
  CHECK_THROWS_AS(decode(g, 1, -1), domain_error);

  // Stepwise identities: each map relator makes its value letter reachable.
  power_word bw = w(alph, "b");
  power_word e0 = single_run(alph, g.element_gens.at("e0"), 1);
  power_word e1 = single_run(alph, element_generator(g, "e1"), 1);
  power_word e2 = single_run(alph, element_generator(g, "e2"), 1);
  power_word e0_0 = single_run(alph, element_generator(g, "e0_0"), 1);
  CHECK(is_trivial(concat(build_w(1, {e0}, bw, g.profile), invert(e1)), g.pres));
  CHECK(is_trivial(concat(build_w(1, {e1}, bw, g.profile), invert(e2)), g.pres));
  CHECK(is_trivial(concat(build_w(2, {e0}, bw, g.profile), invert(e0_0)), g.pres));
  CHECK_FALSE(is_trivial(concat(build_w(1, {e0}, bw, g.profile), invert(e0)), g.pres));
}
