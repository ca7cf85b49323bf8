// relcomm - commutators of reflexive admissible relations on finite algebras
//
// Matrix sets M(R,S), the operator K(R,S;V) and the relation commutators
// [R,S|1], [R,S|1]_W and [R,S].
//
// M(R,S) consists of the quadruples (x, y, z, w), read as the matrix
//
//     | x  y |     | t(a, b)   t(a, b')  |
//     | z  w |  =  | t(a', b)  t(a', b') |
//
// with t a term operation, a R a' and b S b' coordinatewise. For reflexive
// R and S this is the subuniverse of A^4 generated by the quadruples
// (a, a, a', a') for a R a' and (b, b', b, b') for b S b'.

#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "closure.hpp"
#include "relation.hpp"

namespace relcomm {

  namespace detail {

    inline void require_reflexive_admissible(FiniteAlgebra const& alg,
                                             BinRel const&        r,
                                             char const*          what) {
      check_size(alg, r);
      for (Element a = 0; a < r.size(); ++a) {
        if (!r.contains(a, a)) {
          throw Error(std::string(what) + " is not reflexive: the pair ("
                      + std::to_string(a) + "," + std::to_string(a)
                      + ") is missing");
        }
      }
      if (auto v = find_admissibility_violation(alg, r)) {
        throw Error(std::string(what) + " is not admissible: " + v->describe());
      }
    }

    inline QuadSet build_m_set(FiniteAlgebra const& alg,
                               BinRel const&        r,
                               BinRel const&        s) {
      std::size_t const n = alg.size();
      auto const        code = [n](Element x, Element y, Element z, Element w) {
        return static_cast<Code>(((x * n + y) * n + z) * n + w);
      };
      std::vector<Code> gens;
      for (auto [a, a2] : r.pairs()) {
        gens.push_back(code(a, a, a2, a2));
      }
      for (auto [b, b2] : s.pairs()) {
        gens.push_back(code(b, b2, b, b2));
      }
      return QuadSet(close_codes(alg, 4, gens));
    }

    struct PairKey {
      BinRel r, s;
      bool   operator==(PairKey const&) const = default;
    };

    struct PairKeyHash {
      std::size_t operator()(PairKey const& k) const noexcept {
        return k.r.hash() * 31 + k.s.hash();
      }
    };

  }  // namespace detail

  /// M(R,S) for reflexive admissible R and S.
  inline QuadSet m_set(FiniteAlgebra const& alg, BinRel const& r, BinRel const& s) {
    detail::require_reflexive_admissible(alg, r, "the row relation R");
    detail::require_reflexive_admissible(alg, s, "the column relation S");
    return detail::build_m_set(alg, r, s);
  }

  /// {(z, w) : (x, y, z, w) in M with (x, y) in V}.
  inline BinRel k_from(QuadSet const& m, BinRel const& v) {
    std::size_t const n = m.universe_size();
    BinRel            out(n);
    for (Code c : m.codes()) {
      auto const q = m.quad(c);
      if (v.contains(q[0], q[1])) {
        out.add(q[2], q[3]);
      }
    }
    return out;
  }

  inline BinRel comm1_from(QuadSet const& m) {
    return star(k_from(m, BinRel::delta(m.universe_size())));
  }

  inline BinRel comm_weak_from(QuadSet const& m) {
    std::size_t const n = m.universe_size();
    BinRel            out(n);
    for (Code c : m.codes()) {
      auto const q = m.quad(c);
      if (q[0] == q[1] && q[1] == q[2]) {
        out.add(q[0], q[3]);
      }
    }
    return out;
  }

  /// Least congruence delta with K(R,S;delta) contained in delta, by the
  /// increasing iteration delta_0 = Delta, delta_{i+1} = Cg(delta_i u K(R,S;delta_i)).
  inline BinRel comm_from(FiniteAlgebra const& alg, QuadSet const& m) {
    BinRel delta = BinRel::delta(alg.size());
    while (true) {
      BinRel next = cg(alg, unite(delta, k_from(m, delta)));
      if (next == delta) {
        return delta;
      }
      delta = next;
    }
  }

  inline BinRel k_op(FiniteAlgebra const& alg,
                     BinRel const&        r,
                     BinRel const&        s,
                     BinRel const&        v) {
    detail::check_size(alg, v);
    return k_from(m_set(alg, r, s), v);
  }

  /// [R,S|1]: the transitive closure of K(R,S;Delta).
  inline BinRel comm1(FiniteAlgebra const& alg, BinRel const& r, BinRel const& s) {
    return comm1_from(m_set(alg, r, s));
  }

  /// [R,S|1]_W = {(x, w) : (x, x, x, w) in M(R,S)}.
  inline BinRel comm_weak(FiniteAlgebra const& alg, BinRel const& r, BinRel const& s) {
    return comm_weak_from(m_set(alg, r, s));
  }

  /// [R,S]: the smallest congruence centralizing R modulo S.
  inline BinRel comm(FiniteAlgebra const& alg, BinRel const& r, BinRel const& s) {
    return comm_from(alg, m_set(alg, r, s));
  }

  /// Memoizes M(R,S) per (R, S) for one algebra. Arguments are validated
  /// once, on the first request. Safe for concurrent use; the table is
  /// cleared when it outgrows `capacity`.
  class CommutatorContext {
   public:
    explicit CommutatorContext(FiniteAlgebra const& alg, std::size_t capacity = 1 << 16)
        : _alg(&alg), _capacity(capacity) {}

    FiniteAlgebra const& algebra() const noexcept {
      return *_alg;
    }

    std::shared_ptr<QuadSet const> m_set(BinRel const& r, BinRel const& s) {
      detail::PairKey key{r, s};
      {
        std::lock_guard<std::mutex> lock(_mutex);
        auto                        it = _cache.find(key);
        if (it != _cache.end()) {
          return it->second;
        }
      }
      auto m = std::make_shared<QuadSet const>(relcomm::m_set(*_alg, r, s));
      std::lock_guard<std::mutex> lock(_mutex);
      if (_cache.size() >= _capacity) {
        _cache.clear();
      }
      _cache.emplace(std::move(key), m);
      return m;
    }

    BinRel k_op(BinRel const& r, BinRel const& s, BinRel const& v) {
      detail::check_size(*_alg, v);
      return k_from(*m_set(r, s), v);
    }

    BinRel comm1(BinRel const& r, BinRel const& s) {
      return comm1_from(*m_set(r, s));
    }

    BinRel comm_weak(BinRel const& r, BinRel const& s) {
      return comm_weak_from(*m_set(r, s));
    }

    BinRel comm(BinRel const& r, BinRel const& s) {
      return comm_from(*_alg, *m_set(r, s));
    }

    std::size_t cached() const {
      std::lock_guard<std::mutex> lock(_mutex);
      return _cache.size();
    }

   private:
    FiniteAlgebra const* _alg;
    std::size_t          _capacity;
    mutable std::mutex   _mutex;
    std::unordered_map<detail::PairKey, std::shared_ptr<QuadSet const>, detail::PairKeyHash>
        _cache;
  };

}  // namespace relcomm
