#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foa/enumerate.hpp"
#include "foa/eval.hpp"
#include "foa/json_io.hpp"
#include "foa/parser.hpp"
#include "foa/printer.hpp"
#include "foa/theory.hpp"

using namespace foa;

namespace {

SignaturePtr sig_with(const std::function<void(Signature&)>& fill) {
  auto s = std::make_shared<Signature>();
  fill(*s);
  return s;
}

} // namespace

TEST_CASE("prime_signature renames non-rigid symbols only") {
  auto sig = sig_with([](Signature& s) {
    s.add_sort("S");
    s.add_constant("c", "S", false);
    s.add_predicate("lt", {"S", "S"}, true);
  });
  Signature p = prime_signature(*sig);
  CHECK(p.find_constant("c'") != nullptr);
  CHECK(p.find_constant("c") == nullptr);
  CHECK(p.find_predicate("lt") != nullptr); // rigid, unchanged
}

TEST_CASE("prime_signature is the identity on all-rigid signatures") {
  auto sig = sig_with([](Signature& s) {
    s.add_sort("S");
    s.add_constant("c", "S", true);
    s.add_predicate("p", {"S"}, true);
  });
  CHECK(prime_signature(*sig) == *sig);
}

TEST_CASE("priming twice yields the double-primed signature") {
  auto sig = sig_with([](Signature& s) { s.add_predicate("p", {}, false); });
  Signature pp = prime_signature(prime_signature(*sig));
  CHECK(pp.find_predicate("p''") != nullptr);
}

TEST_CASE("rename_formula substitutes symbols and keeps bound variables") {
  auto sig = sig_with([](Signature& s) {
    s.add_sort("S");
    s.add_predicate("p", {"S"}, false);
    s.add_predicate("q", {}, false);
  });
  ParseContext ctx{{sig}, false};
  FormulaPtr f = parse_formula("exists x:S. p(x) & q", ctx);
  FormulaPtr r = rename_formula(f, {{"p", "p'"}});
  CHECK(print_formula(r) == "exists x:S. p'(x) & q");

  SUBCASE("identity mapping gives a structurally equal formula") {
    CHECK(alpha_equal(rename_formula(f, {}), f));
  }
  SUBCASE("collision with an unrenamed symbol is an error") {
    auto sig2 = sig_with([](Signature& s) {
      s.add_predicate("a", {}, false);
      s.add_predicate("b", {}, false);
    });
    FormulaPtr g = parse_formula("a & b", ParseContext{{sig2}, false});
    CHECK_THROWS_AS(rename_formula(g, {{"a", "b"}}), ValidationError);
  }
}

TEST_CASE("join_structures takes the disjoint union of tables") {
  auto gamma = sig_with([](Signature& s) {
    s.add_sort("S");
    s.add_predicate("P", {"S"}, false);
  });
  auto sigma = sig_with([](Signature& s) {
    s.add_sort("S");
    s.add_constant("c", "S", false);
  });
  Structure rho(gamma);
  rho.set_domain("S", {"a", "b"});
  rho.set_predicate("P", {{"a"}});
  Structure letter(sigma);
  letter.set_domain("S", {"a", "b"});
  letter.set_constant("c", "b");

  Structure joint = join_structures({&rho, &letter});
  CHECK(joint.predicate_holds("P", {"a"}));
  CHECK(joint.constant("c") == "b");

  SUBCASE("single part joins to itself") {
    Structure same = join_structures({&rho});
    CHECK(same.predicate_table("P") == rho.predicate_table("P"));
  }
  SUBCASE("overlapping symbol names are rejected") {
    CHECK_THROWS_AS(join_structures({&rho, &rho}), ValidationError);
  }
  SUBCASE("mismatched shared domains are rejected") {
    Structure other(sigma);
    other.set_domain("S", {"a"});
    other.set_constant("c", "a");
    CHECK_THROWS_AS(join_structures({&rho, &other}), ValidationError);
  }
  SUBCASE("join is order-insensitive up to table equality") {
    Structure ab = join_structures({&rho, &letter});
    Structure ba = join_structures({&letter, &rho});
    CHECK(ab == ba);
  }
}

TEST_CASE("eval_fo implements classical satisfaction") {
  auto sig = sig_with([](Signature& s) {
    s.add_sort("S");
    s.add_predicate("p", {"S"}, false);
  });
  Structure st(sig);
  st.set_domain("S", {"a", "b"});
  st.set_predicate("p", {{"a"}});
  ParseContext ctx{{sig}, false};
  CHECK(eval_fo(st, parse_formula("exists x:S. p(x)", ctx)));
  CHECK_FALSE(eval_fo(st, parse_formula("forall x:S. p(x)", ctx)));
  st.set_predicate("p", {});
  CHECK_FALSE(eval_fo(st, parse_formula("forall x:S. p(x)", ctx))); // empty table, nonempty domain
}

TEST_CASE("eval_fo on the reachability blocker rejects a connected pair") {
  // Letter: two nodes with an edge s -> d; P covers the whole domain, so the
  // conjunct !P(d) fails.
  auto sigma = sig_with([](Signature& s) {
    s.add_sort("N");
    s.add_predicate("Rel", {"N", "N"}, false);
    s.add_constant("src", "N", false);
    s.add_constant("dst", "N", false);
  });
  auto gamma = sig_with([](Signature& s) {
    s.add_sort("N");
    s.add_predicate("P", {"N"}, false);
  });
  Structure letter(sigma);
  letter.set_domain("N", {"n1", "n2"});
  letter.set_constant("src", "n1");
  letter.set_constant("dst", "n2");
  letter.set_predicate("Rel", {{"n1", "n2"}});
  Structure state(gamma);
  state.set_domain("N", {"n1", "n2"});
  state.set_predicate("P", {{"n1"}, {"n2"}});

  Structure joint = join_structures({&state, &letter});
  ParseContext ctx{{gamma, sigma}, false};
  FormulaPtr phi_t = parse_formula(
      "P(src) & (forall x:N. forall y:N. (P(x) & Rel(x, y)) -> P(y)) & !P(dst)", ctx);
  CHECK_FALSE(eval_fo(joint, phi_t));
}

TEST_CASE("enumerate_structures yields the closed-form number of structures") {
  SUBCASE("one proposition gives two structures") {
    auto sig = sig_with([](Signature& s) { s.add_predicate("p", {}, false); });
    CHECK(all_structures(sig, {}, 100).size() == 2);
  }
  SUBCASE("one unary predicate over two elements gives four structures") {
    auto sig = sig_with([](Signature& s) {
      s.add_sort("S");
      s.add_predicate("p", {"S"}, false);
    });
    CHECK(all_structures(sig, {{"S", {"a", "b"}}}, 100).size() == 4);
  }
  SUBCASE("one unary function over two elements gives four total maps") {
    auto sig = sig_with([](Signature& s) {
      s.add_sort("S");
      s.add_function("f", {"S"}, "S", false);
    });
    CHECK(all_structures(sig, {{"S", {"a", "b"}}}, 100).size() == 4);
  }
}

TEST_CASE("enumerate_structures yields no duplicates and matches its count") {
  auto sig = sig_with([](Signature& s) {
    s.add_sort("S");
    s.add_constant("c", "S", false);
    s.add_predicate("p", {"S"}, false);
    s.add_function("f", {"S"}, "S", true);
  });
  DomainMap dom{{"S", {"a", "b"}}};
  auto all = all_structures(sig, dom, 1000);
  CHECK(all.size() == StructureEnumerator::count(*sig, dom)); // 2 * 4 * 4
  CHECK(all.size() == 32);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
  for (const auto& st : all) st.validate();
}

TEST_CASE("validate_word reports rigidity violations with the letter index") {
  auto sig = sig_with([](Signature& s) {
    s.add_sort("S");
    s.add_constant("c", "S", true);
  });
  Word w;
  w.sig = sig;
  Structure l0(sig), l1(sig);
  l0.set_domain("S", {"a", "b"});
  l0.set_constant("c", "a");
  l1.set_domain("S", {"a", "b"});
  l1.set_constant("c", "b");
  w.letters = {l0, l1};
  WordReport r = validate_word(w);
  CHECK_FALSE(r.ok);
  CHECK(r.letter == 1);

  SUBCASE("the empty word is vacuously fine") {
    Word empty;
    empty.sig = sig;
    CHECK(validate_word(empty).ok);
  }
}

TEST_CASE("validate_word names the violated axiom") {
  auto sig = sig_with([](Signature& s) {
    s.add_sort("S");
    s.add_predicate("p", {"S"}, false);
  });
  Theory th;
  th.axioms.push_back(parse_formula("forall x:S. p(x)", ParseContext{{sig}, false}));
  Word w;
  w.sig = sig;
  Structure l(sig);
  l.set_domain("S", {"a"});
  l.set_predicate("p", {});
  w.letters = {l};
  WordReport r = validate_word(w, th);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("forall x:S. p(x)") != std::string::npos);
  CHECK(r.letter == 0);
}

TEST_CASE("enumerated words validate by construction") {
  auto sig = sig_with([](Signature& s) {
    s.add_sort("S");
    s.add_constant("c", "S", true);
    s.add_predicate("p", {"S"}, false);
  });
  size_t count = 0;
  for_each_word(sig, {{"S", {"a", "b"}}}, 0, 2, [&](const Word& w) {
    ++count;
    CHECK(validate_word(w).ok);
  });
  // letters: 2 rigid constants * 4 predicate tables = 8; per rigid group 4
  // letters: words = empty + 2 groups * (4 + 16)
  CHECK(count == 1 + 2 * (4 + 16));
}

TEST_CASE("negation is complement on the enumerated corpus") {
  auto sig = sig_with([](Signature& s) {
    s.add_sort("S");
    s.add_predicate("p", {"S"}, false);
    s.add_constant("c", "S", false);
  });
  ParseContext ctx{{sig}, false};
  std::vector<FormulaPtr> corpus = {
      parse_formula("exists x:S. p(x)", ctx),
      parse_formula("forall x:S. p(x) -> p(c)", ctx),
      parse_formula("p(c)", ctx),
      parse_formula("exists x:S. !(x = c)", ctx),
  };
  for (int size = 1; size <= 2; ++size) {
    std::vector<std::string> dom;
    for (int i = 0; i < size; ++i) dom.push_back("e" + std::to_string(i));
    for (const auto& st : all_structures(sig, {{"S", dom}}, 1000))
      for (const auto& f : corpus) CHECK(eval_fo(st, mk_not(f)) == !eval_fo(st, f));
  }
}

TEST_CASE("join_structures is associative on disjoint parts") {
  auto s1 = sig_with([](Signature& s) { s.add_predicate("a", {}, false); });
  auto s2 = sig_with([](Signature& s) { s.add_predicate("b", {}, false); });
  auto s3 = sig_with([](Signature& s) { s.add_predicate("c", {}, false); });
  Structure t1(s1), t2(s2), t3(s3);
  t1.set_predicate("a", {{}});
  t2.set_predicate("b", {});
  t3.set_predicate("c", {{}});
  Structure left = join_structures({&t1, &t2});
  Structure right = join_structures({&t2, &t3});
  CHECK(join_structures({&left, &t3}) == join_structures({&t1, &right}));
}

TEST_CASE("signature and word JSON round-trips are byte-stable") {
  auto sig = sig_with([](Signature& s) {
    s.add_sort("S");
    s.add_constant("c", "S", true);
    s.add_function("f", {"S"}, "S", false);
    s.add_predicate("p", {"S", "S"}, false);
  });
  Json j = signature_to_json(*sig);
  Signature back = signature_from_json(j);
  CHECK(back == *sig);
  CHECK(signature_to_json(back).dump(2) == j.dump(2));

  Word w;
  w.sig = sig;
  Structure l(sig);
  l.set_domain("S", {"a", "b"});
  l.set_constant("c", "a");
  for (const auto& t : tuples_over({{"S", {"a", "b"}}}, {"S"}))
    l.set_function_entry("f", t, "b");
  l.set_predicate("p", {{"a", "b"}});
  w.letters = {l, l};
  Json wj = word_to_json(w);
  Word wback = word_from_json(wj, nullptr);
  CHECK(word_to_json(wback).dump(2) == wj.dump(2));
  CHECK(validate_word(wback).ok);
}

TEST_CASE("loader rejects reserved decorations in symbol names") {
  Json j;
  j["sorts"] = Json::array({"S"});
  j["constants"] = Json::array({Json{{"name", "c'"}, {"sort", "S"}, {"rigid", false}}});
  CHECK_THROWS_AS(signature_from_json(j), ValidationError);
}
