// relcomm command-line interface.
//
// Exit status: 0 completed, 1 a violation of something that must hold
// (identity conditions, equivalence and chain claims, x4 conclusions),
// 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <relcomm/relcomm.hpp>

namespace {

  using namespace relcomm;

  struct Globals {
    std::string format       = "text";
    bool        close_inputs = false;

    bool structured() const {
      return format == "structured";
    }
  };

  struct FamilyArgs {
    std::string   mode    = "exhaustive";
    std::size_t   samples = 200;
    std::uint64_t seed    = 0;
  };

  class UsageError : public Error {
    using Error::Error;
  };

  NamedAlgebra resolve_algebra(std::string const& arg) {
    if (std::filesystem::exists(arg)) {
      NamedAlgebra a = load_algebra(arg);
      if (a.name.empty()) {
        a.name = std::filesystem::path(arg).stem().string();
      }
      return a;
    }
    if (auto const* a = find_in_catalog(arg)) {
      return *a;
    }
    throw UsageError("'" + arg + "' is neither an algebra file nor a catalog name");
  }

  FamilyMode parse_mode(std::string const& s) {
    if (s == "exhaustive") {
      return FamilyMode::exhaustive;
    }
    if (s == "sampled") {
      return FamilyMode::sampled;
    }
    throw UsageError("family mode must be 'exhaustive' or 'sampled', not '" + s + "'");
  }

  CheckOptions make_options(Globals const& g, FamilyArgs const& f) {
    CheckOptions o;
    o.mode         = parse_mode(f.mode);
    o.sample_count = f.samples;
    o.seed         = f.seed;
    o.close_inputs = g.close_inputs;
    o.bounds       = EnumerationBounds::from_environment();
    return o;
  }

  Env parse_bindings(std::size_t n, std::vector<std::string> const& binds) {
    Env env;
    for (auto const& b : binds) {
      auto const eq = b.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw UsageError("--bind expects NAME=RELATION, got '" + b + "'");
      }
      env.bind(b.substr(0, eq), parse_relation(n, b.substr(eq + 1)));
    }
    return env;
  }

  void add_family_options(CLI::App* cmd, FamilyArgs& f) {
    cmd->add_option("--family", f.mode, "exhaustive or sampled relation families")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    cmd->add_option("--samples", f.samples, "relations per sampled family");
    cmd->add_option("--seed", f.seed, "seed for sampled families");
  }

  std::vector<std::string> split(std::string const& s, char sep) {
    std::vector<std::string> out;
    std::string              cur;
    for (char c : s) {
      if (c == sep) {
        out.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  }

  ConditionId condition_arg(std::string const& tag) {
    auto id = parse_condition_id(tag);
    if (!id) {
      throw UsageError("unknown condition '" + tag + "' (see 'relcomm conditions')");
    }
    return *id;
  }

  // ---- subcommands

  int run_eval(Globals const& g,
               std::string const&              alg_spec,
               std::string const&              text,
               std::vector<std::string> const& binds) {
    NamedAlgebra const a   = resolve_algebra(alg_spec);
    Env const          env = parse_bindings(a.algebra.size(), binds);
    ExprPtr const      e   = parse_expr(text);
    BinRel const       r   = eval_expr(a.algebra, env, *e, g.close_inputs);
    if (g.structured()) {
      std::cout << json_line(relation_record(a.name, to_string(*e), r));
    } else {
      std::cout << format_relation(r) << '\n';
    }
    return 0;
  }

  bool is_bug(PropertyReport const& r) {
    return r.verdict == Verdict::fails && condition(r.condition).role == ConditionRole::identity;
  }

  int run_check(Globals const&                  g,
                std::string const&              alg_spec,
                std::string const&              tag,
                FamilyArgs const&               f,
                std::vector<std::string> const& binds) {
    NamedAlgebra const a  = resolve_algebra(alg_spec);
    ConditionId const  id = condition_arg(tag);
    Checker            checker(a.algebra, make_options(g, f));
    PropertyReport     r;
    if (binds.empty()) {
      r = checker.check(id);
    } else {
      Env const env = parse_bindings(a.algebra.size(), binds);
      for (auto const& v : condition(id).variables) {
        if (env.find(v.name) == nullptr) {
          throw UsageError("condition " + tag + " needs a binding for " + v.name);
        }
      }
      r = checker.check_at(id, env);
    }
    std::cout << (g.structured() ? json_line(to_json(r, a.name)) : format_text(r));
    return is_bug(r) ? 1 : 0;
  }

  int run_check_all(Globals const& g, std::string const& alg_spec, FamilyArgs const& f) {
    NamedAlgebra const a = resolve_algebra(alg_spec);
    Checker            checker(a.algebra, make_options(g, f));
    bool               bad = false;
    if (!g.structured()) {
      std::cout << "algebra " << a.name << " (size " << a.algebra.size() << ")\n";
    }
    for (auto id : all_conditions()) {
      PropertyReport const r = checker.check(id);
      bad                    = bad || is_bug(r);
      std::cout << (g.structured() ? json_line(to_json(r, a.name)) : format_text(r));
    }
    std::vector<ClaimReport> claims = checker.check_equivalence_claims();
    claims.push_back(checker.check_implication_chain(ChainTheorem::X2));
    claims.push_back(checker.check_implication_chain(ChainTheorem::X3));
    for (auto const& c : claims) {
      bad = bad || c.status == ClaimReport::Status::violated;
      std::cout << (g.structured() ? json_line(to_json(c, a.name)) : format_text(c));
    }
    for (int part : {1, 2}) {
      TheoremX4Report const t = checker.check_theorem_x4(part);
      bad                     = bad || t.violated();
      std::cout << (g.structured() ? json_line(to_json(t, part, a.name))
                                   : format_text(t, part));
    }
    return bad ? 1 : 0;
  }

  int run_enumerate(Globals const&     g,
                    std::string const& alg_spec,
                    std::string const& kind_text,
                    FamilyArgs const&  f) {
    NamedAlgebra const a    = resolve_algebra(alg_spec);
    auto const         kind = parse_rel_kind(kind_text);
    if (!kind) {
      throw UsageError("unknown relation family '" + kind_text + "'");
    }
    RelFamily const fam{*kind, parse_mode(f.mode), f.samples, f.seed};
    auto const      rels = enumerate(a.algebra, fam, EnumerationBounds::from_environment());
    for (auto const& r : rels) {
      if (g.structured()) {
        Json j;
        j["record"]   = "relation";
        j["algebra"]  = a.name;
        j["family"]   = to_string(*kind);
        j["size"]     = r.count();
        j["relation"] = format_relation(r);
        std::cout << json_line(j);
      } else {
        std::cout << format_relation(r) << '\n';
      }
    }
    if (!g.structured()) {
      std::cout << "# " << rels.size() << ' ' << to_string(*kind) << " relations ("
                << to_string(fam.mode) << ")\n";
    }
    return 0;
  }

  struct SearchArgs {
    std::string   target;
    std::string   sizes     = "3,4";
    std::string   signature = "*/2";
    std::size_t   budget    = 100;
    std::uint64_t seed      = 0;
    std::size_t   jobs      = 1;
    std::size_t   start     = 0;
    bool          no_catalog = false;
  };

  int run_search_cmd(Globals const& g, SearchArgs const& s) {
    SearchTask task;
    if (!s.target.empty()) {
      auto const parts = split(s.target, ',');
      if (parts.size() != 2) {
        throw UsageError("--target expects two condition ids, ID,ID");
      }
      task.target = std::pair{condition_arg(parts[0]), condition_arg(parts[1])};
    }
    task.sizes.clear();
    for (auto const& p : split(s.sizes, ',')) {
      std::size_t pos = 0;
      std::size_t v   = 0;
      try {
        v = std::stoul(p, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos == 0 || pos != p.size() || v == 0 || v > kMaxUniverse) {
        throw UsageError("bad universe size '" + p + "' in --sizes");
      }
      task.sizes.push_back(v);
    }
    task.operations.clear();
    for (auto const& op : split(s.signature, ',')) {
      auto const slash = op.rfind('/');
      if (slash == std::string::npos || slash == 0) {
        throw UsageError("--signature expects NAME/ARITY items, got '" + op + "'");
      }
      std::size_t arity = 0;
      try {
        arity = std::stoul(op.substr(slash + 1));
      } catch (std::exception const&) {
        throw UsageError("bad arity in '" + op + "'");
      }
      task.operations.emplace_back(op.substr(0, slash), arity);
    }
    task.budget          = s.budget;
    task.seed            = s.seed;
    task.jobs            = s.jobs;
    task.start_index     = s.start;
    task.include_catalog = !s.no_catalog;
    task.bounds          = EnumerationBounds::from_environment();
    SearchReport const r = run_search(task);
    std::cout << (g.structured() ? format_structured(r) : format_text(r));
    return 0;
  }

  int run_catalog(Globals const& g, std::string const& show) {
    if (!show.empty()) {
      NamedAlgebra const* a = find_in_catalog(show);
      if (a == nullptr) {
        throw UsageError("no catalog algebra named '" + show + "'");
      }
      std::cout << write_algebra(*a);
      return 0;
    }
    for (auto const& a : catalog()) {
      if (g.structured()) {
        Json j;
        j["record"]  = "algebra";
        j["name"]    = a.name;
        j["size"]    = a.algebra.size();
        Json ops     = Json::array();
        for (auto const& op : a.algebra.operations()) {
          ops.push_back({{"name", op.name}, {"arity", op.arity}, {"table", op.table}});
        }
        j["operations"] = std::move(ops);
        std::cout << json_line(j);
      } else {
        std::cout << a.name << "  size " << a.algebra.size() << "  ops";
        if (a.algebra.operations().empty()) {
          std::cout << " (none)";
        }
        for (auto const& op : a.algebra.operations()) {
          std::cout << ' ' << op.name << '/' << op.arity;
        }
        std::cout << '\n';
      }
    }
    return 0;
  }

  int run_conditions(Globals const& g) {
    for (auto const& def : condition_table()) {
      if (g.structured()) {
        Json j;
        j["record"] = "definition";
        j["tag"]    = def.tag;
        j["role"]   = to_string(def.role);
        Json vars   = Json::object();
        for (auto const& v : def.variables) {
          vars[v.name] = to_string(v.kind);
        }
        j["variables"] = std::move(vars);
        Json pre       = Json::array();
        for (auto const& p : def.premises) {
          pre.push_back(p.text());
        }
        j["premises"] = std::move(pre);
        Json cl       = Json::array();
        for (auto const& c : def.clauses) {
          cl.push_back(c.text());
        }
        j["clauses"] = std::move(cl);
        std::cout << json_line(j);
        continue;
      }
      std::cout << def.tag << " [" << to_string(def.role) << "] for";
      for (auto const& v : def.variables) {
        std::cout << ' ' << v.name << ':' << to_string(v.kind);
      }
      std::cout << '\n';
      for (auto const& p : def.premises) {
        std::cout << "  if   " << p.text() << '\n';
      }
      for (auto const& c : def.clauses) {
        std::cout << "  then " << c.text() << '\n';
      }
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relcomm: relation commutators on finite algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "text or structured (JSON Lines)")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_flag("--close-inputs",
               g.close_inputs,
               "close commutator arguments to reflexive admissible relations");

  std::string              alg_spec, expr_text, cond_tag, kind_text, show;
  std::vector<std::string> binds;
  FamilyArgs               fam;
  SearchArgs               sargs;

  auto* eval = app.add_subcommand("eval", "evaluate a relation expression");
  eval->add_option("-a,--algebra", alg_spec, "algebra file or catalog name")->required();
  eval->add_option("-e,--expr", expr_text, "expression")->required();
  eval->add_option("--bind", binds, "NAME=RELATION, repeatable");

  auto* check = app.add_subcommand("check", "check one condition");
  check->add_option("-a,--algebra", alg_spec, "algebra file or catalog name")->required();
  check->add_option("--condition", cond_tag, "condition id")->required();
  check->add_option("--bind", binds, "check at these relations only");
  add_family_options(check, fam);

  auto* check_all = app.add_subcommand("check-all", "check every condition and claim");
  check_all->add_option("-a,--algebra", alg_spec, "algebra file or catalog name")->required();
  add_family_options(check_all, fam);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list the relations of a family");
  enumerate_cmd->add_option("-a,--algebra", alg_spec, "algebra file or catalog name")
      ->required();
  enumerate_cmd->add_option("--family", kind_text, "reflexive-admissible, tolerance, congruence or any")
      ->required();
  enumerate_cmd->add_option("--mode", fam.mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  enumerate_cmd->add_option("--samples", fam.samples, "relations to sample");
  enumerate_cmd->add_option("--seed", fam.seed, "seed for sampling");

  auto* search = app.add_subcommand("search", "search small algebras for separations");
  search->add_option("--target", sargs.target, "two condition ids ID,ID (default: all profiles)");
  search->add_option("--sizes", sargs.sizes, "universe sizes, comma separated")
      ->capture_default_str();
  search->add_option("--signature", sargs.signature, "NAME/ARITY list")->capture_default_str();
  search->add_option("--budget", sargs.budget, "random algebras to generate")
      ->capture_default_str();
  search->add_option("--seed", sargs.seed, "search seed")->capture_default_str();
  search->add_option("--jobs", sargs.jobs, "worker threads")->capture_default_str();
  search->add_option("--start-index", sargs.start, "resume from this candidate index");
  search->add_flag("--no-catalog", sargs.no_catalog, "skip the built-in algebras");

  auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in algebras");
  catalog_cmd->add_option("--show", show, "print one algebra in file format");

  auto* conditions_cmd = app.add_subcommand("conditions", "list the checkable conditions");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  bool overridden = false;
  EnumerationBounds::from_environment(&overridden);
  if (overridden) {
    std::cerr << "warning: RELCOMM_MAX_N overrides the exhaustive enumeration bounds\n";
  }

  try {
    if (*eval) {
      return run_eval(g, alg_spec, expr_text, binds);
    }
    if (*check) {
      return run_check(g, alg_spec, cond_tag, fam, binds);
    }
    if (*check_all) {
      return run_check_all(g, alg_spec, fam);
    }
    if (*enumerate_cmd) {
      return run_enumerate(g, alg_spec, kind_text, fam);
    }
    if (*search) {
      return run_search_cmd(g, sargs);
    }
    if (*catalog_cmd) {
      return run_catalog(g, show);
    }
    if (*conditions_cmd) {
      return run_conditions(g);
    }
  } catch (std::exception const& e) {
    std::cerr << "relcomm: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
