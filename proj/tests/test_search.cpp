#include <catch_amalgamated.hpp>

#include <relcomm/report.hpp>
#include <relcomm/search.hpp>

using namespace relcomm;
using C = ConditionId;

namespace {

  std::vector<std::string> random_names(SearchReport const& r) {
    std::vector<std::string> out;
    for (auto const& c : r.candidates) {
      if (c.source == "random") {
        out.push_back(c.name);
      }
    }
    return out;
  }

  std::string const* group_of(SearchReport const& r, std::string const& name) {
    for (auto const& g : r.groups) {
      if (std::find(g.members.begin(), g.members.end(), name) != g.members.end()) {
        return &g.profile;
      }
    }
    return nullptr;
  }

}  // namespace

TEST_CASE("zero budget covers the catalog exactly", "[search]") {
  SearchTask task;
  task.budget = 0;
  task.target = std::pair{C::PROB_I, C::PROB_II};
  SearchReport const r = run_search(task);
  REQUIRE(r.candidates.size() == catalog().size());
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    CHECK(r.candidates[i].name == catalog()[i].name);
  }
  CHECK(r.generated == 0);
  // whatever the outcome, each reported separation really differs
  for (auto i : r.separations) {
    auto const& v = r.candidates[i].verdicts;
    CHECK(v.at(C::PROB_I) != v.at(C::PROB_II));
  }
  std::string const out = format_structured(r);
  CHECK(reverify_search_output(out).empty());
  CHECK(out.find(r.separations.empty() ? "\"none found\"" : "\"found\"") != std::string::npos);
}

TEST_CASE("Z2 and L2 land in different profile groups", "[search]") {
  SearchTask task;
  task.budget = 0;
  SearchReport const r  = run_search(task);
  auto const*        z2 = group_of(r, "Z2");
  auto const*        l2 = group_of(r, "L2");
  REQUIRE(z2 != nullptr);
  REQUIRE(l2 != nullptr);
  CHECK(*z2 == "FFFFF");
  CHECK(*l2 == "TTTTT");
  // one representative per profile in untargeted mode
  CHECK(r.separations.size() == r.groups.size());
}

TEST_CASE("search is deterministic and independent of jobs", "[search]") {
  SearchTask task;
  task.sizes  = {3};
  task.budget = 60;
  task.seed   = 11;
  std::string const one = format_structured(run_search(task));
  CHECK(format_structured(run_search(task)) == one);
  task.jobs = 3;
  CHECK(format_structured(run_search(task)) == one);
  task.seed = 12;
  CHECK(format_structured(run_search(task)) != one);
}

TEST_CASE("search resumes where it stopped", "[search]") {
  SearchTask whole;
  whole.sizes           = {3, 2};
  whole.budget          = 80;
  whole.seed            = 5;
  whole.include_catalog = false;
  SearchReport const all = run_search(whole);

  SearchTask first = whole;
  first.budget     = 30;
  SearchReport const a = run_search(first);
  CHECK(a.next_index == 30);
  SearchTask second  = whole;
  second.start_index = a.next_index;
  second.budget      = 50;
  SearchReport const b = run_search(second);
  CHECK(b.next_index == 80);

  auto joined = random_names(a);
  auto rest   = random_names(b);
  joined.insert(joined.end(), rest.begin(), rest.end());
  CHECK(joined == random_names(all));
  CHECK(a.duplicates + b.duplicates == all.duplicates);
}

TEST_CASE("isomorphic copies are rejected", "[search]") {
  SearchTask task;
  task.sizes  = {2};
  task.budget = 200;
  SearchReport const r = run_search(task);
  // 16 groupoids on two elements fall into 10 isomorphism classes
  CHECK(r.duplicates > 0);
  CHECK(r.candidates.size() <= catalog().size() + 10);
  std::set<std::vector<Element>> keys;
  for (auto const& c : r.candidates) {
    if (c.algebra.algebra.size() == 2 && c.algebra.algebra.number_of_operations() == 1
        && c.algebra.algebra.operation(0).arity == 2) {
      CHECK(keys.insert(canonical_form(c.algebra.algebra)).second);
    }
  }
}

TEST_CASE("targeted separations re-verify", "[search]") {
  SearchTask task;
  task.sizes  = {2, 3};
  task.budget = 40;
  task.seed   = 2;
  task.target = std::pair{C::PROB_I, C::PROB_V};
  SearchReport const r = run_search(task);
  CHECK(r.profile_conditions.size() == 5);
  std::string const out = format_structured(r);
  CHECK(reverify_search_output(out).empty());

  // a target outside the Problem conditions extends the profile
  task.target = std::pair{C::T3_I, C::P3A_I};
  task.budget = 10;
  SearchReport const t = run_search(task);
  CHECK(t.profile_conditions.size() == 7);
  CHECK(reverify_search_output(format_structured(t)).empty());
  for (auto i : t.separations) {
    auto const& v = t.candidates[i].verdicts;
    CHECK(v.at(C::T3_I) != v.at(C::P3A_I));
  }

  // tampering with a verdict is caught
  std::string bad = out;
  auto const  pos = bad.find("\"record\":\"separation\"");
  if (pos != std::string::npos) {
    auto const v = bad.find("\"PROB_I\":", pos);
    auto const t_pos = bad.find("true", v);
    auto const f_pos = bad.find("false", v);
    if (t_pos < f_pos) {
      bad.replace(t_pos, 4, "false");
    } else {
      bad.replace(f_pos, 5, "true");
    }
    CHECK_FALSE(reverify_search_output(bad).empty());
  }
}

TEST_CASE("search input errors", "[search]") {
  SearchTask task;
  task.sizes.clear();
  CHECK_THROWS_AS(run_search(task), Error);
}
