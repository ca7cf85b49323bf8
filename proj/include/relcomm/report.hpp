// relcomm - commutators of reflexive admissible relations on finite algebras
//
// Text and structured (JSON Lines) renderings of check and search results.
// Structured records are single-line objects with a fixed field order; the
// first field is always "record".

#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "conditions.hpp"
#include "io.hpp"
#include "properties.hpp"
#include "search.hpp"

namespace relcomm {

  using Json = nlohmann::ordered_json;

  enum class OutputFormat { text, structured };

  inline std::string_view to_string(ConditionRole r) {
    switch (r) {
      case ConditionRole::identity:
        return "identity";
      case ConditionRole::consequence:
        return "consequence";
      case ConditionRole::property:
        return "property";
    }
    return "?";
  }

  inline std::string_view verdict_key(Verdict v) {
    switch (v) {
      case Verdict::holds:
        return "holds";
      case Verdict::fails:
        return "fails";
      case Verdict::no_counterexample_sampled:
        return "no_counterexample_sampled";
    }
    return "?";
  }

  inline std::string json_line(Json const& j) {
    return j.dump() + "\n";
  }

  // ---- property reports

  inline Json to_json(PropertyReport const& r, std::string const& algebra) {
    ConditionDef const& def = condition(r.condition);
    Json                j;
    j["record"]    = "condition";
    j["algebra"]   = algebra;
    j["condition"] = def.tag;
    j["role"]      = to_string(def.role);
    j["verdict"]   = verdict_key(r.verdict);
    j["family"]    = to_string(r.family_mode);
    j["instances"] = r.relations_checked;
    j["vacuous"]   = r.vacuous;
    if (r.witness) {
      Json bindings = Json::object();
      for (auto const& [name, rel] : r.witness->bindings) {
        bindings[name] = format_relation(rel);
      }
      Json w;
      w["bindings"] = std::move(bindings);
      w["clause"]   = def.clauses.at(r.witness->clause).text();
      w["pair"]     = {r.witness->pair.first, r.witness->pair.second};
      w["side"]     = r.witness->left_only ? "left" : "right";
      j["witness"]  = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    return j;
  }

  inline std::string witness_bindings_text(Witness const& w) {
    std::string out;
    for (auto const& [name, rel] : w.bindings) {
      if (!out.empty()) {
        out += ", ";
      }
      out += name + " = " + format_relation_short(rel);
    }
    return out;
  }

  inline std::string format_text(PropertyReport const& r) {
    ConditionDef const& def = condition(r.condition);
    std::ostringstream  out;
    out << def.tag << ": " << to_string(r.verdict);
    if (r.witness) {
      out << ", witness " << witness_bindings_text(*r.witness) << '\n';
      Clause const& c = def.clauses.at(r.witness->clause);
      out << "  clause " << c.text() << '\n'
          << "  pair " << format_pair(r.witness->pair) << " is only on the "
          << (r.witness->left_only ? "left" : "right") << " side\n";
    } else {
      out << '\n';
    }
    out << "  " << r.relations_checked << " instance" << (r.relations_checked == 1 ? "" : "s")
        << " (" << to_string(r.family_mode) << ")";
    if (r.vacuous != 0) {
      out << ", " << r.vacuous << " skipped by premises";
    }
    out << '\n';
    return out.str();
  }

  // ---- claims

  inline Json to_json(ClaimReport const& c, std::string const& algebra) {
    Json j;
    j["record"]  = "claim";
    j["algebra"] = algebra;
    j["claim"]   = c.claim;
    j["status"]  = c.status == ClaimReport::Status::inconclusive ? "inconclusive"
                                                                 : std::string(to_string(c.status));
    Json members = Json::object();
    for (auto const& m : c.members) {
      members[to_string(m.condition)] = verdict_key(m.verdict);
    }
    j["members"] = std::move(members);
    j["detail"]  = c.detail;
    return j;
  }

  inline std::string format_text(ClaimReport const& c) {
    std::ostringstream out;
    out << c.claim << ": " << to_string(c.status) << '\n';
    for (auto const& m : c.members) {
      out << "  " << to_string(m.condition) << ' ' << to_string(m.verdict) << '\n';
    }
    if (!c.detail.empty()) {
      out << "  " << c.detail << '\n';
    }
    return out.str();
  }

  inline Json to_json(TheoremX4Report const& t, int part, std::string const& algebra) {
    Json j;
    j["record"]     = "x4";
    j["algebra"]    = algebra;
    j["part"]       = part;
    j["hypothesis"] = verdict_key(t.hypothesis.verdict);
    j["conclusion"] = verdict_key(t.conclusion.verdict);
    j["corollary"]  = verdict_key(t.corollary.verdict);
    j["claimed"]    = t.claimed();
    j["violated"]   = t.violated();
    return j;
  }

  inline std::string format_text(TheoremX4Report const& t, int part) {
    std::ostringstream out;
    out << "x4 part " << part << ": ";
    if (!t.claimed()) {
      out << (t.hypothesis.verdict == Verdict::fails ? "hypothesis false"
                                                     : "hypothesis not established")
          << ", conclusion not claimed (conclusion " << to_string(t.conclusion.verdict)
          << ", corollary " << to_string(t.corollary.verdict) << ")\n";
    } else {
      out << "hypothesis " << to_string(t.hypothesis.verdict);
      out << ", conclusion " << to_string(t.conclusion.verdict) << ", corollary "
          << to_string(t.corollary.verdict) << (t.violated() ? " (VIOLATED)" : "") << '\n';
    }
    return out.str();
  }

  // ---- relations

  inline Json relation_record(std::string const& algebra,
                              std::string const& expr,
                              BinRel const&      r) {
    Json j;
    j["record"]   = "relation";
    j["algebra"]  = algebra;
    j["expr"]     = expr;
    j["size"]     = r.count();
    j["relation"] = format_relation(r);
    return j;
  }

  // ---- search

  inline Json verdicts_json(std::map<ConditionId, bool> const& v,
                            std::vector<ConditionId> const&    order) {
    Json j = Json::object();
    for (auto id : order) {
      j[to_string(id)] = v.at(id);
    }
    return j;
  }

  inline std::string target_string(SearchTask const& t) {
    return t.target ? to_string(t.target->first) + "," + to_string(t.target->second)
                    : std::string("profile");
  }

  /// Every record of a search report, one JSON object per line.
  inline std::string format_structured(SearchReport const& r) {
    std::string out;
    Json        head;
    head["record"] = "search";
    head["target"] = target_string(r.task);
    Json sig       = Json::array();
    for (auto const& [name, arity] : r.task.operations) {
      sig.push_back(name + "/" + std::to_string(arity));
    }
    head["signature"]   = std::move(sig);
    head["sizes"]       = r.task.sizes;
    head["seed"]        = r.task.seed;
    head["budget"]      = r.task.budget;
    head["start_index"] = r.task.start_index;
    head["next_index"]  = r.next_index;
    head["catalog"]     = r.task.include_catalog;
    head["generated"]   = r.generated;
    head["duplicates"]  = r.duplicates;
    head["evaluated"]   = r.candidates.size();
    out += json_line(head);

    for (auto const& c : r.candidates) {
      Json j;
      j["record"]   = "algebra";
      j["name"]     = c.name;
      j["source"]   = c.source;
      j["index"]    = c.index;
      j["certain"]  = c.all_certain;
      j["verdicts"] = verdicts_json(c.verdicts, r.profile_conditions);
      out += json_line(j);
    }
    Json conds = Json::array();
    for (auto id : r.profile_conditions) {
      conds.push_back(to_string(id));
    }
    for (auto const& g : r.groups) {
      Json j;
      j["record"]     = "profile";
      j["conditions"] = conds;
      j["profile"]    = g.profile;
      j["count"]      = g.members.size();
      j["members"]    = g.members;
      out += json_line(j);
    }
    for (auto i : r.separations) {
      Candidate const& c = r.candidates[i];
      Json             j;
      j["record"]   = "separation";
      j["name"]     = c.name;
      j["verdicts"] = verdicts_json(c.verdicts, r.profile_conditions);
      j["algebra"]  = write_algebra(c.algebra);
      out += json_line(j);
    }
    Json tail;
    tail["record"]      = "summary";
    tail["separations"] = r.separations.size();
    tail["result"]      = r.separations.empty() ? "none found" : "found";
    out += json_line(tail);
    return out;
  }

  inline std::string format_text(SearchReport const& r) {
    std::ostringstream out;
    out << "search target " << target_string(r.task) << ", seed " << r.task.seed
        << ", indices " << r.task.start_index << ".." << r.next_index << '\n'
        << "generated " << r.generated << ", isomorphic duplicates " << r.duplicates
        << ", evaluated " << r.candidates.size() << '\n';
    out << "profiles over";
    for (auto id : r.profile_conditions) {
      out << ' ' << to_string(id);
    }
    out << '\n';
    for (auto const& g : r.groups) {
      out << "  " << g.profile << "  " << g.members.size() << ":";
      std::size_t shown = 0;
      for (auto const& m : g.members) {
        if (shown++ == 8) {
          out << " ...";
          break;
        }
        out << ' ' << m;
      }
      out << '\n';
    }
    if (r.separations.empty()) {
      out << "separations: none found\n";
    }
    for (auto i : r.separations) {
      Candidate const& c = r.candidates[i];
      out << "separation " << c.name << " ("
          << detail::profile_string(c, r.profile_conditions) << ")\n";
      std::istringstream lines(write_algebra(c.algebra));
      for (std::string line; std::getline(lines, line);) {
        out << "    " << line << '\n';
      }
    }
    return out.str();
  }

  /// Reloads each separation's embedded algebra from a structured search
  /// report and recomputes its verdicts. Returns the names that disagree.
  inline std::vector<std::string> reverify_search_output(std::string const& jsonl) {
    std::vector<std::string> bad;
    std::istringstream       in(jsonl);
    for (std::string line; std::getline(in, line);) {
      if (line.empty()) {
        continue;
      }
      Json const j = Json::parse(line);
      if (j.at("record") != "separation") {
        continue;
      }
      NamedAlgebra const       alg = parse_algebra(j.at("algebra").get<std::string>());
      std::vector<ConditionId> ids;
      for (auto const& [tag, value] : j.at("verdicts").items()) {
        auto id = parse_condition_id(tag);
        if (!id) {
          throw Error("unknown condition '" + tag + "' in search output");
        }
        ids.push_back(*id);
      }
      auto const  fresh = evaluate_conditions(alg.algebra, ids);
      bool        same  = true;
      for (auto const& [tag, value] : j.at("verdicts").items()) {
        same = same && fresh.at(*parse_condition_id(tag)) == value.get<bool>();
      }
      if (!same) {
        bad.push_back(j.at("name").get<std::string>());
      }
    }
    return bad;
  }

}  // namespace relcomm
