// relcomm - commutators of reflexive admissible relations on finite algebras
//
// Budgeted search for algebras whose condition verdicts differ.

#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "conditions.hpp"
#include "io.hpp"
#include "properties.hpp"

namespace relcomm {

  struct SearchTask {
    std::vector<std::pair<std::string, std::size_t>> operations = {{"*", 2}};
    std::vector<std::size_t>                         sizes      = {3, 4};
    std::uint64_t                                    seed       = 0;
    // Two conditions to separate; without a target every distinct profile
    // is reported.
    std::optional<std::pair<ConditionId, ConditionId>> target;
    std::size_t                                        budget          = 100;
    std::size_t                                        start_index     = 0;
    bool                                               include_catalog = true;
    std::size_t                                        jobs            = 1;
    EnumerationBounds                                  bounds          = {};
  };

  struct Candidate {
    std::string                 name;
    std::string                 source;  // "catalog" or "random"
    std::size_t                 index = 0;
    NamedAlgebra                algebra;
    std::map<ConditionId, bool> verdicts;
    bool                        all_certain = true;
  };

  struct ProfileGroup {
    std::string              profile;  // one T/F per profile condition
    std::vector<std::string> members;
  };

  struct SearchReport {
    SearchTask               task;
    std::vector<ConditionId> profile_conditions;
    std::vector<Candidate>   candidates;  // isomorphic copies removed
    std::size_t              generated  = 0;
    std::size_t              duplicates = 0;
    std::size_t              next_index = 0;  // resume point
    std::vector<ProfileGroup> groups;
    std::vector<std::size_t>  separations;  // indices into candidates
  };

  namespace detail {

    inline std::string profile_string(Candidate const&                c,
                                      std::vector<ConditionId> const& ids) {
      std::string s;
      for (auto id : ids) {
        s += c.verdicts.at(id) ? 'T' : 'F';
      }
      return s;
    }

    // Isomorphism key; brute force over relabelings is affordable for n <= 4.
    inline std::optional<std::vector<Element>> iso_key(FiniteAlgebra const& alg) {
      if (alg.size() > 4) {
        return std::nullopt;
      }
      std::vector<Element> key{static_cast<Element>(alg.size())};
      for (auto const& op : alg.operations()) {
        key.push_back(static_cast<Element>(op.arity));
      }
      auto const canon = canonical_form(alg);
      key.insert(key.end(), canon.begin(), canon.end());
      return key;
    }

  }  // namespace detail

  /// Verdicts of \p ids on one algebra, over exhaustive families.
  inline std::map<ConditionId, bool> evaluate_conditions(FiniteAlgebra const&            alg,
                                                         std::vector<ConditionId> const& ids,
                                                         bool* all_certain = nullptr,
                                                         EnumerationBounds const& bounds = {}) {
    CheckOptions opts;
    opts.bounds = bounds;
    Checker                     checker(alg, opts);
    std::map<ConditionId, bool> out;
    bool                        certain = true;
    for (auto id : ids) {
      PropertyReport const r = checker.check(id);
      out[id]                = r.holds();
      certain                = certain && r.certain();
    }
    if (all_certain != nullptr) {
      *all_certain = certain;
    }
    return out;
  }

  /// The five Problem verdicts of one algebra.
  inline std::map<ConditionId, bool> evaluate_problem_profile(FiniteAlgebra const& alg) {
    return Checker(alg).problem_profile();
  }

  inline SearchReport run_search(SearchTask const& task) {
    if (task.sizes.empty()) {
      throw Error("the search needs at least one universe size");
    }
    SearchReport report;
    report.task               = task;
    report.profile_conditions = problem_conditions();
    if (task.target) {
      for (auto id : {task.target->first, task.target->second}) {
        if (std::find(report.profile_conditions.begin(), report.profile_conditions.end(), id)
            == report.profile_conditions.end()) {
          report.profile_conditions.push_back(id);
        }
      }
    }

    std::set<std::vector<Element>> seen;
    if (task.include_catalog) {
      for (auto const& entry : catalog()) {
        if (auto key = detail::iso_key(entry.algebra)) {
          seen.insert(*key);
        }
        report.candidates.push_back({entry.name, "catalog", 0, entry, {}, true});
      }
    }
    Signature sig;
    sig.operations = task.operations;
    // Replay the skipped prefix so that a resumed run rejects the same
    // isomorphic copies as an uninterrupted one.
    for (std::size_t i = 0; i < task.start_index; ++i) {
      sig.size = task.sizes[i % task.sizes.size()];
      if (auto key = detail::iso_key(random_algebra(sig, derive_seed(task.seed, i)))) {
        seen.insert(*key);
      }
    }
    for (std::size_t i = task.start_index; i < task.start_index + task.budget; ++i) {
      sig.size = task.sizes[i % task.sizes.size()];
      FiniteAlgebra alg = random_algebra(sig, derive_seed(task.seed, i));
      ++report.generated;
      if (auto key = detail::iso_key(alg)) {
        if (!seen.insert(*key).second) {
          ++report.duplicates;
          continue;
        }
      }
      std::string name = "G" + std::to_string(sig.size) + "-" + std::to_string(i);
      report.candidates.push_back({name, "random", i, {name, std::move(alg)}, {}, true});
    }
    report.next_index = task.start_index + task.budget;

    // Candidates are independent; results land in their own slots, so the
    // report does not depend on scheduling.
    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(report.candidates.size());
    auto                     worker = [&] {
      for (std::size_t i = next++; i < report.candidates.size(); i = next++) {
        Candidate& c = report.candidates[i];
        try {
          c.verdicts = evaluate_conditions(
              c.algebra.algebra, report.profile_conditions, &c.all_certain, task.bounds);
        } catch (std::exception const& e) {
          errors[i] = c.name + ": " + e.what();
        }
      }
    };
    std::size_t const        jobs = std::max<std::size_t>(1, task.jobs);
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }
    for (auto const& e : errors) {
      if (!e.empty()) {
        throw Error("search: " + e);
      }
    }

    std::map<std::string, std::vector<std::string>> groups;
    std::set<std::string>                           represented;
    for (std::size_t i = 0; i < report.candidates.size(); ++i) {
      Candidate const&  c = report.candidates[i];
      std::string const p = detail::profile_string(c, report.profile_conditions);
      groups[p].push_back(c.name);
      if (task.target) {
        if (c.verdicts.at(task.target->first) != c.verdicts.at(task.target->second)) {
          report.separations.push_back(i);
        }
      } else if (represented.insert(p).second) {
        report.separations.push_back(i);
      }
    }
    for (auto& [p, members] : groups) {
      report.groups.push_back({p, std::move(members)});
    }
    return report;
  }

}  // namespace relcomm
