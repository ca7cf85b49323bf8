#include <catch_amalgamated.hpp>

#include <relcomm/catalog.hpp>
#include <relcomm/enumerate.hpp>
#include <relcomm/expr.hpp>

#include "gen.hpp"

using namespace relcomm;
namespace ex = relcomm::expr;

namespace {

  ExprPtr nm(char const* s) {
    return ex::name(s);
  }
  ExprPtr mk(ExprKind k, std::vector<ExprPtr> args = {}) {
    return ex::make(k, std::move(args));
  }

}  // namespace

TEST_CASE("grammar examples", "[expr]") {
  // S & (R^- ; (S & T^-) ; R)
  ExprPtr const inner = mk(ExprKind::intersect, {nm("S"), mk(ExprKind::converse, {nm("T")})});
  ExprPtr const chain = mk(ExprKind::compose,
                           {mk(ExprKind::compose, {mk(ExprKind::converse, {nm("R")}), inner}),
                            nm("R")});
  CHECK(*parse_expr("(S & (R^- ; (S & T^-) ; R))") == *mk(ExprKind::intersect, {nm("S"), chain}));

  CHECK(*parse_expr("K(R,S;delta)^*")
        == *mk(ExprKind::star, {mk(ExprKind::k, {nm("R"), nm("S"), mk(ExprKind::delta)})}));
  CHECK(*parse_expr("R^-^*") == *mk(ExprKind::star, {mk(ExprKind::converse, {nm("R")})}));
}

TEST_CASE("precedence and associativity", "[expr]") {
  CHECK(*parse_expr("R + S & T ; U")
        == *mk(ExprKind::unite,
               {nm("R"), mk(ExprKind::intersect,
                            {nm("S"), mk(ExprKind::compose, {nm("T"), nm("U")})})}));
  CHECK(*parse_expr("R ; S ; T")
        == *mk(ExprKind::compose, {mk(ExprKind::compose, {nm("R"), nm("S")}), nm("T")}));
  CHECK(*parse_expr("R;S^o")
        == *mk(ExprKind::compose, {nm("R"), mk(ExprKind::tol_close, {nm("S")})}));
  CHECK(*parse_expr("  {(0,1), (2,0)}\n") == *ex::literal({{0, 1}, {2, 0}}));
  CHECK(*parse_expr("{}") == *ex::literal({}));
  CHECK(*parse_expr("join(cg(R), adm(S))")
        == *mk(ExprKind::join, {mk(ExprKind::cg, {nm("R")}), mk(ExprKind::adm_close, {nm("S")})}));
  CHECK(*parse_expr("commW(R, S)") == *mk(ExprKind::comm_weak, {nm("R"), nm("S")}));
  // the K separator is the last top-level ';'
  CHECK(*parse_expr("K(R, S ; T; V)")
        == *mk(ExprKind::k, {nm("R"), mk(ExprKind::compose, {nm("S"), nm("T")}), nm("V")}));
  CHECK(*parse_expr("K(R, S; (V ; T))")
        == *mk(ExprKind::k, {nm("R"), nm("S"), mk(ExprKind::compose, {nm("V"), nm("T")})}));
  CHECK(*parse_expr("K(K(R,S;T) , S ; T; V)")
        == *mk(ExprKind::k, {mk(ExprKind::k, {nm("R"), nm("S"), nm("T")}),
                             mk(ExprKind::compose, {nm("S"), nm("T")}), nm("V")}));
}

TEST_CASE("parse errors carry positions", "[expr]") {
  auto error_at = [](char const* text) {
    try {
      parse_expr(text);
    } catch (ParseError const& e) {
      return std::pair{e.line(), e.column()};
    }
    FAIL("no parse error for " << text);
    return std::pair<std::size_t, std::size_t>{0, 0};
  };
  CHECK(error_at("R ;") == std::pair<std::size_t, std::size_t>{1, 4});
  CHECK(error_at("R\n  & ) S").first == 2);
  CHECK(error_at("R\n  & ) S").second == 5);
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("comm1(R)"), ParseError);
  CHECK_THROWS_AS(parse_expr("K(R, S)"), ParseError);
  CHECK_THROWS_AS(parse_expr("{(0,1)"), ParseError);
  CHECK_THROWS_AS(parse_expr("R S"), ParseError);
  CHECK_THROWS_AS(parse_expr("R^x"), ParseError);
  CHECK_THROWS_AS(parse_expr("foo(R)"), ParseError);
  CHECK_THROWS_AS(parse_expr("R $ S"), ParseError);
  try {
    parse_expr("(R ; S");
  } catch (ParseError const& e) {
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("expected"));
  }
}

TEST_CASE("printing round-trips on generated expressions", "[expr]") {
  Rng rng(8);
  for (int i = 0; i < 500; ++i) {
    ExprPtr const     e    = gen::random_expr(rng, 1 + static_cast<int>(rng.below(5)));
    std::string const text = to_string(*e);
    ExprPtr const     back = parse_expr(text);
    INFO(text);
    CHECK(*back == *e);
    CHECK(to_string(*back) == text);
  }
}

TEST_CASE("evaluation examples", "[expr]") {
  FiniteAlgebra const& z2 = find_in_catalog("Z2")->algebra;
  Env                  env;
  env.bind("R", BinRel::delta(2));
  CHECK(eval_expr(z2, env, *parse_expr("R^*")) == BinRel::delta(2));

  env.bind("R", BinRel::all(2));
  env.bind("S", BinRel::all(2));
  CHECK(eval_expr(z2, env, *parse_expr("comm1(R,S)")) == BinRel::delta(2));

  FiniteAlgebra const& set2 = find_in_catalog("Set2")->algebra;
  Env                  e2;
  e2.bind("R", BinRel::from_pairs(2, {{0, 0}, {1, 1}, {0, 1}}));
  CHECK(eval_expr(set2, e2, *parse_expr("R^o")) == BinRel::all(2));

  // rebinding replaces
  CHECK(env.find("R") != nullptr);
  CHECK(env.find("Q") == nullptr);
  CHECK(env.bindings().size() == 2);
}

TEST_CASE("evaluation errors", "[expr]") {
  FiniteAlgebra const& z2 = find_in_catalog("Z2")->algebra;
  Env                  env;
  try {
    eval_expr(z2, env, *parse_expr("X ; delta"));
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("'X'"));
  }
  env.bind("R", BinRel::from_pairs(2, {{0, 0}, {1, 1}, {0, 1}}));
  CHECK_THROWS_AS(eval_expr(z2, env, *parse_expr("comm1(R, all)")), Error);
  // closing the inputs first makes it legal: adm(R + delta) = all on Z2
  CHECK(eval_expr(z2, env, *parse_expr("comm1(R, all)"), true) == BinRel::delta(2));
  CHECK_THROWS_AS(eval_expr(z2, env, *parse_expr("join(R, all)")), Error);
  CHECK_THROWS_AS(eval_expr(z2, env, *parse_expr("{(0,5)}")), Error);
  env.bind("Big", BinRel::delta(3));
  CHECK_THROWS_AS(eval_expr(z2, env, *parse_expr("Big")), Error);
}

TEST_CASE("evaluation agrees with direct calls on every node kind", "[expr]") {
  std::vector<FiniteAlgebra> algebras{find_in_catalog("L3")->algebra,
                                      find_in_catalog("Z3")->algebra,
                                      random_algebra(Signature::groupoid(3), 4)};
  Rng rng(31);
  for (auto const& alg : algebras) {
    std::size_t const n = alg.size();
    auto const        ra
        = enumerate(alg, RelFamily{RelKind::reflexive_admissible, FamilyMode::exhaustive, 0, 0});
    auto const con = enumerate(alg, RelFamily{RelKind::congruence, FamilyMode::exhaustive, 0, 0});
    for (int trial = 0; trial < 40; ++trial) {
      BinRel const r = ra[rng.below(ra.size())];
      BinRel const s = ra[rng.below(ra.size())];
      BinRel       v = BinRel::empty(n);
      v.add(static_cast<Element>(rng.below(n)), static_cast<Element>(rng.below(n)));
      BinRel const g = con[rng.below(con.size())];
      BinRel const h = con[rng.below(con.size())];
      Env          env;
      env.bind("R", r);
      env.bind("S", s);
      env.bind("V", v);
      env.bind("G", g);
      env.bind("H", h);
      auto ev = [&](char const* text) { return eval_expr(alg, env, *parse_expr(text)); };
      CHECK(ev("R") == r);
      CHECK(ev("delta") == BinRel::delta(n));
      CHECK(ev("all") == BinRel::all(n));
      CHECK(ev("empty") == BinRel::empty(n));
      CHECK(ev("{(0,1),(2,2)}") == BinRel::from_pairs(n, {{0, 1}, {2, 2}}));
      CHECK(ev("V^-") == converse(v));
      CHECK(ev("V^*") == star(v));
      CHECK(ev("V^o") == tol_close(alg, v));
      CHECK(ev("R ; V") == compose(r, v));
      CHECK(ev("R & S") == intersect(r, s));
      CHECK(ev("R + V") == unite(r, v));
      CHECK(ev("adm(V)") == adm_close(alg, v));
      CHECK(ev("cg(V)") == cg(alg, v));
      CHECK(ev("comm1(R, S)") == comm1(alg, r, s));
      CHECK(ev("comm(R, S)") == comm(alg, r, s));
      CHECK(ev("commW(R, S)") == comm_weak(alg, r, s));
      CHECK(ev("K(R, S; V)") == k_op(alg, r, s, v));
      CHECK(ev("join(G, H)") == cong_join(alg, g, h));
    }
  }
}

TEST_CASE("generated expressions evaluate", "[expr]") {
  // without commutator nodes every tree is defined
  FiniteAlgebra const& l3 = find_in_catalog("L3")->algebra;
  Rng                  rng(77);
  Env                  env;
  env.bind("R", BinRel::from_pairs(3, {{0, 1}}));
  env.bind("S", BinRel::delta(3));
  env.bind("T", BinRel::all(3));
  for (int i = 0; i < 200; ++i) {
    ExprPtr const e = gen::random_expr(rng, 4, 3, false);
    CHECK_NOTHROW(eval_expr(l3, env, *e));
  }
}
