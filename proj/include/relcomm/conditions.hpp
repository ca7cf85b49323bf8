// relcomm - commutators of reflexive admissible relations on finite algebras
//
// Every checked condition, written once in the expression language.
//
// Conventions: R ; S is {(a,c) : a R b S c}, ^- is the converse, ^* the
// transitive closure, ^o the tolerance closure, comm1(R,S) is [R,S|1],
// comm(R,S) is [R,S], and K(R,S;V) keeps the bottom rows of the matrices in
// M(R,S) whose top row lies in V. B and G name congruences (beta, gamma).

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enumerate.hpp"
#include "expr.hpp"

namespace relcomm {

  enum class ConditionId {
    // Lemma on [.,.|1] of compositions
    L1A_I,
    L1A_II,
    L1A_III,
    // Lemma on K of compositions
    L1B_I,
    L1B_II,
    L1B_III,
    // K(R,S;V) inside S & (R^- ; (S & V) ; R)
    K_BOUND,
    // the K lemma at V = delta implies the [.,.|1] lemma
    X1B_X1A_I,
    X1B_X1A_II,
    X1B_X1A_III,
    // Theorem with tolerances
    T2_I,
    T2_IA,
    T2_IB,
    T2_IC,
    T2_ID,
    T2_II,
    T2_III,
    T2_IV,
    T2_V,
    T2_VI,
    // Theorem with reflexive admissible relations
    T3_I,
    T3_IA,
    T3_II,
    T3_III,
    T3_IV,
    T3_V,
    T3_VI,
    P3A_I,
    P3A_II,
    T4_I_HYP,
    T4_I_CONC,
    T4_I_COR,
    T4_II_HYP,
    T4_II_CONC,
    T4_II_COR,
    PROB_I,
    PROB_II,
    PROB_III,
    PROB_IV,
    PROB_V,
    // R & T inside [R,T], equivalent to PROB_III
    REM_III,
    SEQ_A,
    SEQ_B,
    SEQ_C,
    SEQ_D,
    SEQ_E,
    SEQ_F,
    SEQ_G,
    SEQ_H,
    SEQ_I,
    SEQ_J,
    SEQ_K,
    SEQ_L
  };

  enum class ClauseRelation { subset, equal };

  /// Whether a failure can be a legitimate property of the algebra.
  enum class ConditionRole {
    identity,     // holds in every algebra; a failure is an implementation bug
    consequence,  // holds whenever the matching hypothesis holds
    property      // may hold or fail
  };

  struct Variable {
    std::string name;
    RelKind     kind;
  };

  struct Clause {
    std::string    lhs_text;
    ClauseRelation relation;
    std::string    rhs_text;
    ExprPtr        lhs;
    ExprPtr        rhs;

    std::string text() const {
      return lhs_text + (relation == ClauseRelation::subset ? " <= " : " = ") + rhs_text;
    }
  };

  struct ConditionDef {
    ConditionId           id;
    std::string           tag;
    ConditionRole         role;
    std::vector<Variable> variables;
    std::vector<Clause>   premises;  // instances failing a premise are skipped
    std::vector<Clause>   clauses;   // all must hold
  };

  namespace detail {

    inline Clause clause(std::string lhs, ClauseRelation rel, std::string rhs) {
      Clause c{std::move(lhs), rel, std::move(rhs), nullptr, nullptr};
      c.lhs = parse_expr(c.lhs_text);
      c.rhs = parse_expr(c.rhs_text);
      return c;
    }

    inline Clause sub(std::string lhs, std::string rhs) {
      return clause(std::move(lhs), ClauseRelation::subset, std::move(rhs));
    }

    inline Clause eq(std::string lhs, std::string rhs) {
      return clause(std::move(lhs), ClauseRelation::equal, std::move(rhs));
    }

    inline std::vector<ConditionDef> build_condition_table() {
      using C = ConditionId;
      using R = ConditionRole;
      constexpr RelKind ra  = RelKind::reflexive_admissible;
      constexpr RelKind tol = RelKind::tolerance;
      constexpr RelKind con = RelKind::congruence;
      constexpr RelKind any = RelKind::any;

      // Shared right-hand sides.
      std::string const l1a_i_rhs = "(S & (R2^- ; (S & (R1^- ; R1)) ; R2))^*";
      std::string const l1a_ii_rhs
          = "((R^- ; R) & ((S & (R^- ; (S & T^-) ; R)) ; (T & (R^- ; (S^- & T) ; R))))^*";
      std::string const l1a_iii_rhs
          = "((R^- ; R) & (S ; (T & (R^- ; (T & (S^- ; U^-)) ; R)) ; U))^*";
      std::string const iii_rhs = "(T & (R2^- ; (T & (R1^- ; R1)) ; R2))^*";
      std::string const iv_rhs  = "(T & (R2 ; (T & (R1^- ; R1)) ; R2^-))^* ; R2";
      std::string const v_rhs   = "(T & (S ; (T & B) ; S))^* ; S";
      std::string const x4_rhs
          = "((S & (R^- ; (S & T^-) ; R)) ; (T & (R^- ; (S^- & T) ; R)))^*";
      std::string const tol1 = "comm1(R, R^o)";
      std::string const rr1  = "comm1(R, R)";

      std::vector<ConditionDef> t;
      auto add = [&](C id,
                     std::string tag,
                     R role,
                     std::vector<Variable> vars,
                     std::vector<Clause> clauses,
                     std::vector<Clause> premises = {}) {
        t.push_back({id, std::move(tag), role, std::move(vars), std::move(premises),
                     std::move(clauses)});
      };

      add(C::L1A_I, "L1A_I", R::identity, {{"R1", ra}, {"R2", ra}, {"S", ra}},
          {sub("comm1(R1 ; R2, S)", l1a_i_rhs)});
      add(C::L1A_II, "L1A_II", R::identity, {{"R", ra}, {"S", ra}, {"T", ra}},
          {sub("comm1(R, S ; T)", l1a_ii_rhs)});
      add(C::L1A_III, "L1A_III", R::identity,
          {{"R", ra}, {"S", ra}, {"T", ra}, {"U", ra}},
          {sub("comm1(R, S ; T ; U)", l1a_iii_rhs)});

      add(C::L1B_I, "L1B_I", R::identity,
          {{"R1", ra}, {"R2", ra}, {"S", ra}, {"V", any}},
          {sub("K(R1 ; R2, S; V)", "K(R2, S; K(R1, S; V))")});
      add(C::L1B_II, "L1B_II", R::identity,
          {{"R", ra}, {"S", ra}, {"T", ra}, {"V", any}},
          {sub("K(R, S ; T; V)", "K(R, S; S & (V ; T^-)) ; K(R, T; T & (S^- ; V))")});
      add(C::L1B_III, "L1B_III", R::identity,
          {{"R", ra}, {"S", ra}, {"T", ra}, {"U", ra}, {"V", any}},
          {sub("K(R, S ; T ; U; V)",
               "(R^- ; V ; R) & (S ; K(R, T; T & (S^- ; V ; U^-)) ; U)")});
      add(C::K_BOUND, "K_BOUND", R::identity, {{"R", ra}, {"S", ra}, {"V", any}},
          {sub("K(R, S; V)", "S & (R^- ; (S & V) ; R)")});

      add(C::X1B_X1A_I, "X1B_X1A_I", R::identity, {{"R1", ra}, {"R2", ra}, {"S", ra}},
          {sub("K(R1 ; R2, S; delta)", "K(R2, S; K(R1, S; delta))"),
           sub("K(R2, S; K(R1, S; delta))", "S & (R2^- ; (S & (R1^- ; R1)) ; R2)"),
           sub("K(R1 ; R2, S; delta)^*", l1a_i_rhs)});
      add(C::X1B_X1A_II, "X1B_X1A_II", R::identity, {{"R", ra}, {"S", ra}, {"T", ra}},
          {sub("K(R, S ; T; delta)",
               "(R^- ; R) & (K(R, S; S & T^-) ; K(R, T; T & S^-))"),
           sub("(R^- ; R) & (K(R, S; S & T^-) ; K(R, T; T & S^-))",
               "(R^- ; R) & ((S & (R^- ; (S & T^-) ; R)) ; (T & (R^- ; (S^- & T) ; R)))"),
           sub("K(R, S ; T; delta)^*", l1a_ii_rhs)});
      add(C::X1B_X1A_III, "X1B_X1A_III", R::identity,
          {{"R", ra}, {"S", ra}, {"T", ra}, {"U", ra}},
          {sub("K(R, S ; T ; U; delta)",
               "(R^- ; R) & (S ; K(R, T; T & (S^- ; U^-)) ; U)"),
           sub("(R^- ; R) & (S ; K(R, T; T & (S^- ; U^-)) ; U)",
               "(R^- ; R) & (S ; (T & (R^- ; (T & (S^- ; U^-)) ; R)) ; U)"),
           sub("K(R, S ; T ; U; delta)^*", l1a_iii_rhs)});

      add(C::T2_I, "T2_I", R::property, {{"R", ra}}, {sub("R", tol1)});
      add(C::T2_IA, "T2_IA", R::property, {{"R", ra}}, {sub("R^*", tol1)});
      add(C::T2_IB, "T2_IB", R::property, {{"R", ra}}, {sub("R^-", tol1)});
      add(C::T2_IC, "T2_IC", R::property, {{"R", ra}}, {sub("R^o", tol1)});
      add(C::T2_ID, "T2_ID", R::property, {{"R", ra}}, {eq("cg(R)", tol1)});
      add(C::T2_II, "T2_II", R::property, {{"R", ra}, {"T", tol}},
          {sub("R & T", "comm1(R, T)")});
      add(C::T2_III, "T2_III", R::property, {{"R1", ra}, {"R2", ra}, {"T", tol}},
          {sub("(R1 ; R2) & T", iii_rhs)});
      add(C::T2_IV, "T2_IV", R::property, {{"R1", ra}, {"R2", ra}, {"T", tol}},
          {sub("R1 & (T ; R2)", iv_rhs)});
      add(C::T2_V, "T2_V", R::property, {{"B", con}, {"T", tol}, {"S", tol}},
          {sub("B & (T ; S)", v_rhs)});
      add(C::T2_VI, "T2_VI", R::property, {{"B", con}, {"G", con}, {"T", tol}},
          {sub("B & (T ; G)", "join(G, (T & B)^*)")});

      add(C::T3_I, "T3_I", R::property, {{"R", ra}}, {sub("R", rr1)});
      add(C::T3_IA, "T3_IA", R::property, {{"R", ra}}, {sub("R^*", rr1)});
      add(C::T3_II, "T3_II", R::property, {{"R", ra}, {"T", ra}},
          {sub("R & T", "comm1(R, T)")});
      add(C::T3_III, "T3_III", R::property, {{"R1", ra}, {"R2", ra}, {"T", ra}},
          {sub("(R1 ; R2) & T", iii_rhs)});
      add(C::T3_IV, "T3_IV", R::property, {{"R1", ra}, {"R2", ra}, {"T", ra}},
          {sub("R1 & (T ; R2)", iv_rhs)});
      add(C::T3_V, "T3_V", R::property, {{"B", con}, {"S", tol}, {"T", ra}},
          {sub("B & (T ; S)", v_rhs)});
      add(C::T3_VI, "T3_VI", R::property, {{"B", con}, {"G", con}, {"T", ra}},
          {sub("B & (T ; G)", "(G ; (T & B))^*")});

      add(C::P3A_I, "P3A_I", R::property, {{"R", ra}}, {sub("R", rr1), sub("R^-", rr1)});
      add(C::P3A_II, "P3A_II", R::property, {{"R", ra}}, {eq("cg(R)", rr1)});

      add(C::T4_I_HYP, "T4_I_HYP", R::property, {{"R", ra}}, {sub("R", tol1)});
      add(C::T4_I_CONC, "T4_I_CONC", R::consequence, {{"R", ra}, {"S", ra}, {"T", ra}},
          {sub("R & (S ; T) & (T^- ; S^-)", x4_rhs)});
      add(C::T4_I_COR, "T4_I_COR", R::consequence, {{"G", con}, {"S", ra}, {"T", ra}},
          {sub("G & (S ; T) & (T^- ; S^-)", "((G & S) ; (G & T))^*")},
          {sub("S & T^-", "G")});
      add(C::T4_II_HYP, "T4_II_HYP", R::property, {{"R", ra}}, {sub("R", rr1)});
      add(C::T4_II_CONC, "T4_II_CONC", R::consequence, {{"R", ra}, {"S", ra}, {"T", ra}},
          {sub("R & (S ; T)", x4_rhs)});
      add(C::T4_II_COR, "T4_II_COR", R::consequence, {{"G", con}, {"S", ra}, {"T", ra}},
          {sub("G & (S ; T)", "((G & S) ; (G & T))^*")},
          {sub("S & T^-", "G")});

      add(C::PROB_I, "PROB_I", R::property, {{"R", ra}}, {sub("R", tol1)});
      add(C::PROB_II, "PROB_II", R::property, {{"R", ra}}, {sub("R", rr1)});
      add(C::PROB_III, "PROB_III", R::property, {{"R", ra}}, {sub("R", "comm(R, R)")});
      add(C::PROB_IV, "PROB_IV", R::property, {{"R", tol}}, {sub("R", rr1)});
      add(C::PROB_V, "PROB_V", R::property, {{"R", tol}}, {sub("R", "comm(R, R)")});
      add(C::REM_III, "REM_III", R::property, {{"R", ra}, {"T", ra}},
          {sub("R & T", "comm(R, T)")});

      // Sequel properties; C is [R,R^o|1] for (a)-(f) and [R,R|1] for (g)-(l).
      auto sequel = [&](C first, char letter, std::string const& c) {
        std::vector<Clause> cs = {sub("R", c + " ; R^-"),
                                  sub("R", c + " ; R^- ; " + c),
                                  sub("R ; R", c + " ; R"),
                                  sub("R ; R", c + " ; R ; " + c),
                                  eq("cg(R)", c + " ; R"),
                                  eq("cg(R)", c + " ; R ; " + c)};
        for (std::size_t i = 0; i < cs.size(); ++i) {
          add(static_cast<C>(static_cast<int>(first) + static_cast<int>(i)),
              std::string("SEQ_") + static_cast<char>(letter + i), R::property,
              {{"R", ra}}, {cs[i]});
        }
      };
      sequel(C::SEQ_A, 'A', tol1);
      sequel(C::SEQ_G, 'G', rr1);
      return t;
    }

  }  // namespace detail

  /// All condition definitions, ordered as ConditionId.
  inline std::vector<ConditionDef> const& condition_table() {
    static std::vector<ConditionDef> const table = detail::build_condition_table();
    return table;
  }

  inline ConditionDef const& condition(ConditionId id) {
    return condition_table().at(static_cast<std::size_t>(id));
  }

  inline std::string const& to_string(ConditionId id) {
    return condition(id).tag;
  }

  inline std::optional<ConditionId> parse_condition_id(std::string_view tag) {
    for (auto const& def : condition_table()) {
      if (def.tag == tag) {
        return def.id;
      }
    }
    return std::nullopt;
  }

  inline std::vector<ConditionId> all_conditions() {
    std::vector<ConditionId> out;
    for (auto const& def : condition_table()) {
      out.push_back(def.id);
    }
    return out;
  }

  inline std::vector<ConditionId> const& problem_conditions() {
    static std::vector<ConditionId> const ids = {ConditionId::PROB_I,
                                                 ConditionId::PROB_II,
                                                 ConditionId::PROB_III,
                                                 ConditionId::PROB_IV,
                                                 ConditionId::PROB_V};
    return ids;
  }

}  // namespace relcomm
