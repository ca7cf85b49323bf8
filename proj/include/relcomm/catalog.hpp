// relcomm - commutators of reflexive admissible relations on finite algebras
//
// Named small algebras, random algebras and isomorphism-invariant forms.

#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "io.hpp"
#include "random.hpp"

namespace relcomm {

  namespace detail {
    template <typename F>
    Operation binary_op(std::string name, std::size_t n, F&& f) {
      Operation op{std::move(name), 2, {}};
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          op.table.push_back(static_cast<Element>(f(a, b)));
        }
      }
      return op;
    }
  }  // namespace detail

  /// The built-in algebras:
  ///
  ///   Trivial  one element, one binary operation
  ///   Set2     two-element set, no operations
  ///   Set3     three-element set, no operations
  ///   Z2 Z3 Z4 cyclic groups as groupoids under +
  ///   Z2xZ2    Klein four-group under +, with (a, b) encoded as 2a + b
  ///   L2       two-element lattice (meet, join)
  ///   L3       three-element chain 0 < 1 < 2 (meet, join)
  ///   SL2      two-element meet-semilattice
  ///   LZ3      three-element left-zero band, x * y = x
  inline std::vector<NamedAlgebra> const& catalog() {
    static std::vector<NamedAlgebra> const algebras = [] {
      using detail::binary_op;
      std::vector<NamedAlgebra> out;
      auto add = [&](std::string name, std::size_t n, std::vector<Operation> ops) {
        out.push_back({std::move(name), FiniteAlgebra(n, std::move(ops))});
      };
      auto min_ = [](Element a, Element b) { return std::min(a, b); };
      auto max_ = [](Element a, Element b) { return std::max(a, b); };

      add("Trivial", 1, {binary_op("*", 1, [](Element, Element) { return 0; })});
      add("Set2", 2, {});
      add("Set3", 3, {});
      for (std::size_t n : {2, 3, 4}) {
        add("Z" + std::to_string(n),
            n,
            {binary_op("+", n, [n](Element a, Element b) { return (a + b) % n; })});
      }
      add("Z2xZ2", 4, {binary_op("+", 4, [](Element a, Element b) { return a ^ b; })});
      add("L2", 2, {binary_op("meet", 2, min_), binary_op("join", 2, max_)});
      add("L3", 3, {binary_op("meet", 3, min_), binary_op("join", 3, max_)});
      add("SL2", 2, {binary_op("meet", 2, min_)});
      add("LZ3", 3, {binary_op("*", 3, [](Element a, Element) { return a; })});
      return out;
    }();
    return algebras;
  }

  inline NamedAlgebra const* find_in_catalog(std::string_view name) {
    for (auto const& a : catalog()) {
      if (a.name == name) {
        return &a;
      }
    }
    return nullptr;
  }

  struct Signature {
    std::vector<std::pair<std::string, std::size_t>> operations;  // (name, arity)
    std::size_t                                      size = 3;

    static Signature groupoid(std::size_t n) {
      return Signature{{{"*", 2}}, n};
    }
  };

  /// Uniformly random operation tables. The tables are filled in
  /// declaration order, entry by entry, from mt19937_64 seeded with
  /// \p seed, each entry drawn by Rng::below(n); equal (signature, seed)
  /// give equal algebras on every platform.
  inline FiniteAlgebra random_algebra(Signature const& sig, std::uint64_t seed) {
    Rng                    rng(seed);
    std::vector<Operation> ops;
    for (auto const& [name, arity] : sig.operations) {
      Operation op{name, arity, {}};
      std::size_t const entries = ipow(sig.size, arity);
      op.table.reserve(entries);
      for (std::size_t i = 0; i < entries; ++i) {
        op.table.push_back(static_cast<Element>(rng.below(sig.size)));
      }
      ops.push_back(std::move(op));
    }
    return FiniteAlgebra(sig.size, std::move(ops));
  }

  /// Applies the relabeling a -> perm[a] to every table.
  inline FiniteAlgebra relabel(FiniteAlgebra const& alg, std::vector<Element> const& perm) {
    std::size_t const    n = alg.size();
    std::vector<Element> inverse(n);
    for (Element a = 0; a < n; ++a) {
      inverse[perm[a]] = a;
    }
    std::vector<Operation> ops;
    for (auto const& op : alg.operations()) {
      Operation out{op.name, op.arity, std::vector<Element>(op.table.size())};
      std::size_t const total = op.table.size();
      for (std::size_t pos = 0; pos < total; ++pos) {
        // the new entry at (b_0..b_k) is perm of the old entry at the preimages
        std::size_t old_pos = 0, rest = pos, stride = total / (op.arity == 0 ? 1 : n);
        for (std::size_t i = 0; i < op.arity; ++i) {
          std::size_t const digit = rest / stride;
          rest %= stride;
          old_pos = old_pos * n + inverse[digit];
          stride /= n;
        }
        out.table[pos] = perm[op.table[old_pos]];
      }
      ops.push_back(std::move(out));
    }
    return FiniteAlgebra(n, std::move(ops));
  }

  /// Lexicographically least concatenation of the tables over all n!
  /// relabelings; equal for isomorphic algebras of the same signature.
  inline std::vector<Element> canonical_form(FiniteAlgebra const& alg) {
    std::size_t const    n = alg.size();
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Element> best;
    do {
      std::vector<Element> flat;
      FiniteAlgebra const  moved = relabel(alg, perm);
      for (auto const& op : moved.operations()) {
        flat.insert(flat.end(), op.table.begin(), op.table.end());
      }
      if (best.empty() || flat < best) {
        best = std::move(flat);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

}  // namespace relcomm
