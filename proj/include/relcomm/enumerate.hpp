// relcomm - commutators of reflexive admissible relations on finite algebras
//
// Enumeration and sampling of relation families.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "random.hpp"
#include "relation.hpp"

namespace relcomm {

  enum class RelKind {
    reflexive_admissible,
    tolerance,
    congruence,
    any  // every binary relation; used for the unrestricted argument of K
  };

  enum class FamilyMode { exhaustive, sampled };

  inline std::string_view to_string(RelKind k) {
    switch (k) {
      case RelKind::reflexive_admissible:
        return "reflexive-admissible";
      case RelKind::tolerance:
        return "tolerance";
      case RelKind::congruence:
        return "congruence";
      case RelKind::any:
        return "any";
    }
    return "?";
  }

  inline std::string_view to_string(FamilyMode m) {
    return m == FamilyMode::exhaustive ? "exhaustive" : "sampled";
  }

  inline std::optional<RelKind> parse_rel_kind(std::string_view s) {
    if (s == "reflexive-admissible" || s == "ra") {
      return RelKind::reflexive_admissible;
    } else if (s == "tolerance" || s == "tol") {
      return RelKind::tolerance;
    } else if (s == "congruence" || s == "con") {
      return RelKind::congruence;
    } else if (s == "any") {
      return RelKind::any;
    }
    return std::nullopt;
  }

  /// Largest universe for which each family may be enumerated exhaustively.
  struct EnumerationBounds {
    std::size_t reflexive_admissible = 4;  // n^2 - n <= 12 free bits
    std::size_t tolerance            = 6;  // (n^2 - n) / 2 <= 15 free bits
    std::size_t congruence           = 10;  // Bell(10) = 115975 partitions
    std::size_t any                  = 3;  // 2^9 relations

    std::size_t max_for(RelKind k) const noexcept {
      switch (k) {
        case RelKind::reflexive_admissible:
          return reflexive_admissible;
        case RelKind::tolerance:
          return tolerance;
        case RelKind::congruence:
          return congruence;
        case RelKind::any:
          return any;
      }
      return 0;
    }

    /// Defaults, or a single bound for every family taken from the
    /// environment variable RELCOMM_MAX_N when it is set to a number.
    static EnumerationBounds from_environment(bool* overridden = nullptr) {
      EnumerationBounds b;
      char const*       env = std::getenv("RELCOMM_MAX_N");
      if (overridden != nullptr) {
        *overridden = false;
      }
      if (env != nullptr && *env != '\0') {
        char*               end = nullptr;
        unsigned long const v   = std::strtoul(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0) {
          std::size_t const n = std::min<std::size_t>(v, kMaxUniverse);
          b.reflexive_admissible = b.tolerance = b.congruence = b.any = n;
          if (overridden != nullptr) {
            *overridden = true;
          }
        }
      }
      return b;
    }
  };

  struct RelFamily {
    RelKind       kind         = RelKind::reflexive_admissible;
    FamilyMode    mode         = FamilyMode::exhaustive;
    std::size_t   sample_count = 200;
    std::uint64_t seed         = 0;
  };

  namespace detail {

    inline bool in_family(FiniteAlgebra const& alg, RelKind kind, BinRel const& r) {
      switch (kind) {
        case RelKind::reflexive_admissible:
          return is_reflexive(r) && is_admissible(alg, r);
        case RelKind::tolerance:
          return is_tolerance(alg, r);
        case RelKind::congruence:
          return is_congruence(alg, r);
        case RelKind::any:
          return true;
      }
      return false;
    }

    inline std::vector<BinRel> exhaustive_reflexive(FiniteAlgebra const& alg,
                                                    bool symmetric) {
      std::size_t const n = alg.size();
      std::vector<Pair> free;  // row-major, so the counter order is the
                               // BinRel order for the reflexive case
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (a != b && (!symmetric || a < b)) {
            free.emplace_back(a, b);
          }
        }
      }
      std::vector<BinRel> out;
      std::uint64_t const total = std::uint64_t(1) << free.size();
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        BinRel r = BinRel::delta(n);
        for (std::size_t i = 0; i < free.size(); ++i) {
          if ((mask >> i) & 1u) {
            r.add(free[i].first, free[i].second);
            if (symmetric) {
              r.add(free[i].second, free[i].first);
            }
          }
        }
        if (is_admissible(alg, r)) {
          out.push_back(r);
        }
      }
      return out;
    }

    // Restricted growth strings enumerate each set partition exactly once.
    inline std::vector<BinRel> exhaustive_congruences(FiniteAlgebra const& alg) {
      std::size_t const        n = alg.size();
      std::vector<std::size_t> rgs(n, 0), maxes(n, 0);
      std::vector<BinRel>      out;
      while (true) {
        BinRel r(n);
        for (Element a = 0; a < n; ++a) {
          for (Element b = 0; b < n; ++b) {
            if (rgs[a] == rgs[b]) {
              r.add(a, b);
            }
          }
        }
        if (equivalence_is_compatible(alg, r)) {
          out.push_back(r);
        }
        // next restricted growth string
        std::size_t i = n;
        while (i-- > 1) {
          if (rgs[i] <= maxes[i - 1]) {
            ++rgs[i];
            std::size_t const m = std::max(maxes[i - 1], rgs[i]);
            maxes[i]            = m;
            for (std::size_t j = i + 1; j < n; ++j) {
              rgs[j]   = 0;
              maxes[j] = m;
            }
            break;
          }
        }
        if (i == 0 || i == std::size_t(-1)) {
          break;
        }
      }
      return out;
    }

    inline std::vector<BinRel> exhaustive_any(std::size_t n) {
      std::vector<BinRel> out;
      std::uint64_t const total = std::uint64_t(1) << (n * n);
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        BinRel r(n);
        for (std::size_t i = 0; i < n * n; ++i) {
          if ((mask >> i) & 1u) {
            r.add(i / n, i % n);
          }
        }
        out.push_back(r);
      }
      return out;
    }

  }  // namespace detail

  /// All members of a relation family, in increasing BinRel order.
  ///
  /// Exhaustive mode filters every candidate relation by the family
  /// predicate (partitions, for congruences). Sampled mode closes
  /// `sample_count` random sets of 1 to 3 pairs under the family's closure
  /// operator, deduplicates, and is deterministic for a fixed seed.
  inline std::vector<BinRel> enumerate(FiniteAlgebra const&     alg,
                                       RelFamily const&         family,
                                       EnumerationBounds const& bounds = {}) {
    std::size_t const   n = alg.size();
    std::vector<BinRel> out;
    if (family.mode == FamilyMode::exhaustive) {
      if (n > bounds.max_for(family.kind)) {
        throw Error("exhaustive enumeration of " + std::string(to_string(family.kind))
                    + " relations is limited to universes of size "
                    + std::to_string(bounds.max_for(family.kind)) + ", got "
                    + std::to_string(n) + " (use sampled mode)");
      }
      switch (family.kind) {
        case RelKind::reflexive_admissible:
          out = detail::exhaustive_reflexive(alg, false);
          break;
        case RelKind::tolerance:
          out = detail::exhaustive_reflexive(alg, true);
          break;
        case RelKind::congruence:
          out = detail::exhaustive_congruences(alg);
          break;
        case RelKind::any:
          out = detail::exhaustive_any(n);
          break;
      }
    } else {
      Rng                                    rng(family.seed);
      std::unordered_set<BinRel, BinRelHash> seen;
      for (std::size_t s = 0; s < family.sample_count; ++s) {
        BinRel r(n);
        if (family.kind == RelKind::any) {
          for (Element a = 0; a < n; ++a) {
            for (Element b = 0; b < n; ++b) {
              if (rng.below(2) == 1) {
                r.add(a, b);
              }
            }
          }
        } else {
          std::size_t const k = 1 + rng.below(3);
          for (std::size_t i = 0; i < k; ++i) {
            Element const a = rng.below(n);
            Element const b = rng.below(n);
            r.add(a, b);
          }
          switch (family.kind) {
            case RelKind::reflexive_admissible:
              r = adm_close(alg, unite(r, BinRel::delta(n)));
              break;
            case RelKind::tolerance:
              r = tol_close(alg, r);
              break;
            case RelKind::congruence:
              r = cg(alg, r);
              break;
            case RelKind::any:
              break;
          }
        }
        if (seen.insert(r).second) {
          out.push_back(r);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace relcomm
