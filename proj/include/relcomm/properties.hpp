// relcomm - commutators of reflexive admissible relations on finite algebras
//
// Witness-producing checkers for the conditions in conditions.hpp.

#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conditions.hpp"
#include "enumerate.hpp"
#include "expr.hpp"
#include "random.hpp"

namespace relcomm {

  enum class Verdict { holds, fails, no_counterexample_sampled };

  inline std::string_view to_string(Verdict v) {
    switch (v) {
      case Verdict::holds:
        return "holds";
      case Verdict::fails:
        return "fails";
      case Verdict::no_counterexample_sampled:
        return "no counterexample found (sampled)";
    }
    return "?";
  }

  struct Witness {
    std::vector<std::pair<std::string, BinRel>> bindings;
    std::size_t                                 clause = 0;
    Pair                                        pair{0, 0};
    // true: the pair is on the left but not the right; false: the reverse
    // (only for equations)
    bool left_only = true;
  };

  struct PropertyReport {
    ConditionId            condition = ConditionId::T2_I;
    Verdict                verdict   = Verdict::holds;
    std::optional<Witness> witness;
    std::size_t            relations_checked = 0;  // instances evaluated
    std::size_t            vacuous           = 0;  // instances failing a premise
    FamilyMode             family_mode       = FamilyMode::exhaustive;

    bool holds() const noexcept {
      return verdict != Verdict::fails;
    }
    // A verdict is certain when it is a failure (there is a witness) or
    // when every instance was checked.
    bool certain() const noexcept {
      return verdict != Verdict::no_counterexample_sampled;
    }
  };

  struct CheckOptions {
    FamilyMode    mode         = FamilyMode::exhaustive;
    std::size_t   sample_count = 200;
    std::uint64_t seed         = 0;
    // Quantifier products up to this size are checked in full; larger ones
    // are sampled (or rejected, if downgrading is not allowed).
    std::size_t       instance_limit    = 300000;
    std::size_t       sampled_instances = 20000;
    bool              allow_downgrade   = true;
    bool              close_inputs      = false;
    EnumerationBounds bounds            = {};
  };

  /// Outcome of a claim relating several conditions: an equivalence or an
  /// implication chain.
  struct ClaimReport {
    enum class Status { consistent, violated, inconclusive };

    std::string                 claim;
    std::vector<PropertyReport> members;
    Status                      status = Status::consistent;
    std::string                 detail;
  };

  inline std::string_view to_string(ClaimReport::Status s) {
    switch (s) {
      case ClaimReport::Status::consistent:
        return "consistent";
      case ClaimReport::Status::violated:
        return "violated";
      case ClaimReport::Status::inconclusive:
        return "inconclusive (sampled)";
    }
    return "?";
  }

  struct TheoremX4Report {
    PropertyReport hypothesis;
    PropertyReport conclusion;
    PropertyReport corollary;

    /// The conclusion is claimed only when the hypothesis is known to hold.
    bool claimed() const noexcept {
      return hypothesis.verdict == Verdict::holds;
    }
    bool violated() const noexcept {
      return claimed() && (!conclusion.holds() || !corollary.holds());
    }
  };

  enum class ChainTheorem { X2, X3 };

  /// Checks conditions on one algebra. Relation families are enumerated
  /// lazily and shared between checks; M(R,S) is memoized.
  class Checker {
   public:
    explicit Checker(FiniteAlgebra const& alg, CheckOptions opts = {})
        : _alg(alg), _opts(opts), _eval(_alg, opts.close_inputs) {}

    FiniteAlgebra const& algebra() const noexcept {
      return _alg;
    }

    CheckOptions const& options() const noexcept {
      return _opts;
    }

    Evaluator& evaluator() noexcept {
      return _eval;
    }

    /// Members of a family under the configured mode. A family too large
    /// to enumerate is sampled instead when downgrading is allowed.
    std::vector<BinRel> const& pool(RelKind kind) {
      auto it = _pools.find(kind);
      if (it == _pools.end()) {
        RelFamily fam{kind, _opts.mode, _opts.sample_count,
                      derive_seed(_opts.seed, static_cast<std::uint64_t>(kind))};
        if (fam.mode == FamilyMode::exhaustive && _opts.allow_downgrade
            && _alg.size() > _opts.bounds.max_for(kind)) {
          fam.mode = FamilyMode::sampled;
        }
        _pool_modes[kind] = fam.mode;
        it = _pools.emplace(kind, enumerate(_alg, fam, _opts.bounds)).first;
      }
      return it->second;
    }

    FamilyMode pool_mode(RelKind kind) {
      pool(kind);
      return _pool_modes.at(kind);
    }

    /// Evaluates one instance; returns the witness of a violation, if any.
    /// Returns std::nullopt with *vacuous set when a premise fails.
    std::optional<Witness> check_instance(ConditionDef const& def,
                                          Env const&          env,
                                          bool*               vacuous = nullptr) {
      if (vacuous != nullptr) {
        *vacuous = false;
      }
      for (auto const& p : def.premises) {
        if (!clause_holds(p, env)) {
          if (vacuous != nullptr) {
            *vacuous = true;
          }
          return std::nullopt;
        }
      }
      for (std::size_t i = 0; i < def.clauses.size(); ++i) {
        Clause const& c   = def.clauses[i];
        BinRel const  lhs = _eval.eval(*c.lhs, env);
        BinRel const  rhs = _eval.eval(*c.rhs, env);
        if (auto p = first_difference(lhs, rhs)) {
          Witness w{env.bindings(), i, *p, true};
          return w;
        }
        if (c.relation == ClauseRelation::equal) {
          if (auto p = first_difference(rhs, lhs)) {
            Witness w{env.bindings(), i, *p, false};
            return w;
          }
        }
      }
      return std::nullopt;
    }

    std::optional<Witness> check_instance(ConditionId id, Env const& env) {
      return check_instance(condition(id), env);
    }

    /// A condition at one set of bindings.
    PropertyReport check_at(ConditionId id, Env const& env) {
      PropertyReport report;
      report.condition         = id;
      report.relations_checked = 1;
      bool vac                 = false;
      report.witness           = check_instance(condition(id), env, &vac);
      report.vacuous           = vac ? 1 : 0;
      report.verdict           = report.witness ? Verdict::fails : Verdict::holds;
      return report;
    }

    /// Quantifies a condition over its variable families.
    PropertyReport check(ConditionId id) {
      ConditionDef const& def = condition(id);
      PropertyReport      report;
      report.condition = id;

      std::vector<std::vector<BinRel> const*> pools;
      FamilyMode                              mode = _opts.mode;
      double                                  product = 1;
      for (auto const& v : def.variables) {
        pools.push_back(&pool(v.kind));
        product *= static_cast<double>(pools.back()->size());
        if (pool_mode(v.kind) == FamilyMode::sampled) {
          mode = FamilyMode::sampled;
        }
      }
      if (product > static_cast<double>(_opts.instance_limit)) {
        if (_opts.mode == FamilyMode::exhaustive && !_opts.allow_downgrade) {
          throw Error("condition " + def.tag + " has "
                      + std::to_string(static_cast<unsigned long long>(product))
                      + " instances, above the exhaustive limit of "
                      + std::to_string(_opts.instance_limit));
        }
        mode = FamilyMode::sampled;
      }
      report.family_mode = mode;

      Env env;
      for (std::size_t i = 0; i < def.variables.size(); ++i) {
        env.bind(def.variables[i].name, (*pools[i])[0]);
      }
      auto run = [&](std::vector<std::size_t> const& idx) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
          env.bind(def.variables[i].name, (*pools[i])[idx[i]]);
        }
        bool vac = false;
        auto w   = check_instance(def, env, &vac);
        ++report.relations_checked;
        if (vac) {
          ++report.vacuous;
        }
        if (w) {
          report.verdict = Verdict::fails;
          report.witness = std::move(w);
          return false;
        }
        return true;
      };

      std::vector<std::size_t> idx(def.variables.size(), 0);
      if (product <= static_cast<double>(_opts.instance_limit)) {
        // odometer over the full product, last variable fastest
        while (true) {
          if (!run(idx)) {
            return report;
          }
          std::size_t i = idx.size();
          while (i-- > 0) {
            if (++idx[i] < pools[i]->size()) {
              break;
            }
            idx[i] = 0;
          }
          if (i == std::size_t(-1)) {
            break;
          }
        }
      } else {
        Rng rng(derive_seed(_opts.seed, 1000 + static_cast<std::uint64_t>(id)));
        for (std::size_t s = 0; s < _opts.sampled_instances; ++s) {
          for (std::size_t i = 0; i < idx.size(); ++i) {
            idx[i] = rng.below(pools[i]->size());
          }
          if (!run(idx)) {
            return report;
          }
        }
      }
      report.verdict = mode == FamilyMode::exhaustive ? Verdict::holds
                                                      : Verdict::no_counterexample_sampled;
      return report;
    }

    /// Equivalences: the x2 group, the x3 group, x3a, and R <= [R,R] against
    /// R & T <= [R,T].
    std::vector<ClaimReport> check_equivalence_claims() {
      using C = ConditionId;
      return {equivalence("T2_I <=> T2_IA <=> T2_IB <=> T2_IC <=> T2_ID <=> T2_II",
                          {C::T2_I, C::T2_IA, C::T2_IB, C::T2_IC, C::T2_ID, C::T2_II}),
              equivalence("T3_I <=> T3_IA <=> T3_II", {C::T3_I, C::T3_IA, C::T3_II}),
              equivalence("P3A_I <=> P3A_II", {C::P3A_I, C::P3A_II}),
              equivalence("PROB_III <=> REM_III", {C::PROB_III, C::REM_III})};
    }

    /// Each condition of the theorem implies every later one.
    ClaimReport check_implication_chain(ChainTheorem which) {
      using C = ConditionId;
      std::vector<ConditionId> const ids
          = which == ChainTheorem::X2
                ? std::vector<ConditionId>{C::T2_I, C::T2_IA, C::T2_IB, C::T2_IC,
                                           C::T2_ID, C::T2_II, C::T2_III, C::T2_IV,
                                           C::T2_V, C::T2_VI}
                : std::vector<ConditionId>{C::T3_I, C::T3_IA, C::T3_II, C::T3_III,
                                           C::T3_IV, C::T3_V, C::T3_VI};
      ClaimReport out;
      out.claim = which == ChainTheorem::X2 ? "x2 chain: each implies all below"
                                            : "x3 chain: each implies all below";
      for (auto id : ids) {
        out.members.push_back(check(id));
      }
      for (std::size_t i = 0; i < out.members.size(); ++i) {
        for (std::size_t j = i + 1; j < out.members.size(); ++j) {
          auto const& a = out.members[i];
          auto const& b = out.members[j];
          if (a.holds() && !b.holds()) {
            note_disagreement(out, a, b);
          }
        }
      }
      return out;
    }

    TheoremX4Report check_theorem_x4(int part) {
      using C = ConditionId;
      TheoremX4Report out;
      if (part == 1) {
        out.hypothesis = check(C::T4_I_HYP);
        out.conclusion = check(C::T4_I_CONC);
        out.corollary  = check(C::T4_I_COR);
      } else if (part == 2) {
        out.hypothesis = check(C::T4_II_HYP);
        out.conclusion = check(C::T4_II_CONC);
        out.corollary  = check(C::T4_II_COR);
      } else {
        throw Error("theorem x4 has parts 1 and 2");
      }
      return out;
    }

    /// Truth values of the five Problem conditions; needs exhaustive mode.
    std::map<ConditionId, bool> problem_profile() {
      std::map<ConditionId, bool> out;
      for (auto id : problem_conditions()) {
        PropertyReport const r = check(id);
        if (!r.certain()) {
          throw Error("problem profiles need exhaustive relation families");
        }
        out[id] = r.holds();
      }
      return out;
    }

   private:
    static std::optional<Pair> first_difference(BinRel const& a, BinRel const& b) {
      for (Element x = 0; x < a.size(); ++x) {
        BinRel::Row const extra = static_cast<BinRel::Row>(a.row(x) & ~b.row(x));
        if (extra != 0) {
          return Pair{x, static_cast<Element>(std::countr_zero(extra))};
        }
      }
      return std::nullopt;
    }

    bool clause_holds(Clause const& c, Env const& env) {
      BinRel const lhs = _eval.eval(*c.lhs, env);
      BinRel const rhs = _eval.eval(*c.rhs, env);
      return c.relation == ClauseRelation::subset ? is_subset(lhs, rhs) : lhs == rhs;
    }

    // A true verdict against a false one is a contradiction only when the
    // true verdict covers every instance.
    static void note_disagreement(ClaimReport&          out,
                                  PropertyReport const& yes,
                                  PropertyReport const& no) {
      std::string const msg = to_string(yes.condition) + " " + std::string(to_string(yes.verdict))
                              + " but " + to_string(no.condition) + " fails";
      if (yes.certain()) {
        out.status = ClaimReport::Status::violated;
      } else if (out.status == ClaimReport::Status::consistent) {
        out.status = ClaimReport::Status::inconclusive;
      }
      if (!out.detail.empty()) {
        out.detail += "; ";
      }
      out.detail += msg;
    }

    ClaimReport equivalence(std::string claim, std::vector<ConditionId> const& ids) {
      ClaimReport out;
      out.claim = std::move(claim);
      for (auto id : ids) {
        out.members.push_back(check(id));
      }
      for (auto const& a : out.members) {
        for (auto const& b : out.members) {
          if (a.holds() && !b.holds()) {
            note_disagreement(out, a, b);
          }
        }
      }
      return out;
    }

    FiniteAlgebra                        _alg;
    CheckOptions                         _opts;
    Evaluator                            _eval;
    std::map<RelKind, std::vector<BinRel>> _pools;
    std::map<RelKind, FamilyMode>          _pool_modes;
  };

  // Free-function entry points.

  inline PropertyReport check_theorem_condition(FiniteAlgebra const& alg,
                                                ConditionId          id,
                                                CheckOptions const&  opts = {}) {
    return Checker(alg, opts).check(id);
  }

  /// Lemma x1a at specific relations; `part` is 1, 2 or 3.
  inline PropertyReport check_lemma_x1a(FiniteAlgebra const& alg, int part, Env const& env) {
    static constexpr ConditionId ids[]
        = {ConditionId::L1A_I, ConditionId::L1A_II, ConditionId::L1A_III};
    if (part < 1 || part > 3) {
      throw Error("lemma x1a has parts 1 to 3");
    }
    return Checker(alg).check_at(ids[part - 1], env);
  }

  inline PropertyReport check_lemma_x1b(FiniteAlgebra const& alg, int part, Env const& env) {
    static constexpr ConditionId ids[]
        = {ConditionId::L1B_I, ConditionId::L1B_II, ConditionId::L1B_III};
    if (part < 1 || part > 3) {
      throw Error("lemma x1b has parts 1 to 3");
    }
    return Checker(alg).check_at(ids[part - 1], env);
  }

  /// Re-evaluates a failing report's witness; true if the violation is
  /// reproduced exactly.
  inline bool reverify(FiniteAlgebra const&  alg,
                       PropertyReport const& report,
                       bool                  close_inputs = false) {
    if (report.verdict != Verdict::fails || !report.witness) {
      return false;
    }
    ConditionDef const& def = condition(report.condition);
    Witness const&      w   = *report.witness;
    Env                 env;
    for (auto const& [name, rel] : w.bindings) {
      env.bind(name, rel);
    }
    Evaluator ev(alg, close_inputs);
    for (auto const& p : def.premises) {
      BinRel const l = ev.eval(*p.lhs, env), r = ev.eval(*p.rhs, env);
      if (!(p.relation == ClauseRelation::subset ? is_subset(l, r) : l == r)) {
        return false;
      }
    }
    if (w.clause >= def.clauses.size()) {
      return false;
    }
    Clause const& c   = def.clauses[w.clause];
    BinRel const  lhs = ev.eval(*c.lhs, env);
    BinRel const  rhs = ev.eval(*c.rhs, env);
    auto const [x, y] = w.pair;
    return w.left_only ? (lhs.contains(x, y) && !rhs.contains(x, y))
                       : (rhs.contains(x, y) && !lhs.contains(x, y));
  }

}  // namespace relcomm
