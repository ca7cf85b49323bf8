// relcomm - commutators of reflexive admissible relations on finite algebras
//
// Binary relations as bit matrices, and the relation-algebra toolkit.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "closure.hpp"

namespace relcomm {

  using Pair = std::pair<Element, Element>;

  /// A binary relation on {0, ..., n-1}; row a holds the set {b : a R b}.
  class BinRel {
   public:
    using Row = std::uint16_t;

    BinRel() = default;

    explicit BinRel(std::size_t n) : _n(static_cast<std::uint8_t>(n)) {
      if (n == 0 || n > kMaxUniverse) {
        throw Error("relation size " + std::to_string(n)
                    + " outside 1.." + std::to_string(kMaxUniverse));
      }
    }

    BinRel(std::size_t n, std::initializer_list<Pair> pairs) : BinRel(n) {
      for (auto [a, b] : pairs) {
        add(a, b);
      }
    }

    static BinRel empty(std::size_t n) {
      return BinRel(n);
    }

    static BinRel delta(std::size_t n) {
      BinRel r(n);
      for (std::size_t a = 0; a < n; ++a) {
        r._rows[a] = static_cast<Row>(Row(1) << a);
      }
      return r;
    }

    static BinRel all(std::size_t n) {
      BinRel r(n);
      for (std::size_t a = 0; a < n; ++a) {
        r._rows[a] = r.full_row();
      }
      return r;
    }

    static BinRel from_pairs(std::size_t n, std::vector<Pair> const& pairs) {
      BinRel r(n);
      for (auto [a, b] : pairs) {
        r.add(a, b);
      }
      return r;
    }

    std::size_t size() const noexcept {
      return _n;
    }

    bool contains(Element a, Element b) const noexcept {
      return a < _n && b < _n && ((_rows[a] >> b) & 1u);
    }

    void add(Element a, Element b) {
      if (a >= _n || b >= _n) {
        throw Error("pair (" + std::to_string(a) + "," + std::to_string(b)
                    + ") outside a universe of size " + std::to_string(_n));
      }
      _rows[a] = static_cast<Row>(_rows[a] | (Row(1) << b));
    }

    void remove(Element a, Element b) noexcept {
      if (a < _n && b < _n) {
        _rows[a] = static_cast<Row>(_rows[a] & ~(Row(1) << b));
      }
    }

    Row row(std::size_t a) const noexcept {
      return _rows[a];
    }

    void set_row(std::size_t a, Row r) noexcept {
      _rows[a] = static_cast<Row>(r & full_row());
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (std::size_t a = 0; a < _n; ++a) {
        c += std::popcount(_rows[a]);
      }
      return c;
    }

    bool is_empty() const noexcept {
      return count() == 0;
    }

    /// Pairs in row-major order.
    std::vector<Pair> pairs() const {
      std::vector<Pair> out;
      for (Element a = 0; a < _n; ++a) {
        for (Element b = 0; b < _n; ++b) {
          if (contains(a, b)) {
            out.emplace_back(a, b);
          }
        }
      }
      return out;
    }

    bool operator==(BinRel const&) const = default;

    // Relations are ordered as the integers sum 2^(a*n+b) over their pairs:
    // the last row is the most significant.
    bool operator<(BinRel const& that) const noexcept {
      if (_n != that._n) {
        return _n < that._n;
      }
      for (std::size_t a = _n; a-- > 0;) {
        if (_rows[a] != that._rows[a]) {
          return _rows[a] < that._rows[a];
        }
      }
      return false;
    }

    std::size_t hash() const noexcept {
      std::uint64_t h = 0xcbf29ce484222325ull ^ _n;
      for (std::size_t a = 0; a < _n; ++a) {
        h = (h ^ _rows[a]) * 0x100000001b3ull;
      }
      return static_cast<std::size_t>(h);
    }

    Row full_row() const noexcept {
      return static_cast<Row>((std::uint32_t(1) << _n) - 1);
    }

   private:
    std::uint8_t                  _n = 0;
    std::array<Row, kMaxUniverse> _rows{};
  };

  struct BinRelHash {
    std::size_t operator()(BinRel const& r) const noexcept {
      return r.hash();
    }
  };

  namespace detail {
    inline void check_same_size(BinRel const& r, BinRel const& s) {
      if (r.size() != s.size()) {
        throw Error("relation sizes differ: " + std::to_string(r.size())
                    + " and " + std::to_string(s.size()));
      }
    }
    inline void check_size(FiniteAlgebra const& alg, BinRel const& r) {
      if (r.size() != alg.size()) {
        throw Error("relation of size " + std::to_string(r.size())
                    + " on an algebra of size " + std::to_string(alg.size()));
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  inline bool is_subset(BinRel const& r, BinRel const& s) {
    detail::check_same_size(r, s);
    for (std::size_t a = 0; a < r.size(); ++a) {
      if ((r.row(a) & ~s.row(a)) != 0) {
        return false;
      }
    }
    return true;
  }

  inline bool is_reflexive(BinRel const& r) noexcept {
    for (std::size_t a = 0; a < r.size(); ++a) {
      if (!r.contains(a, a)) {
        return false;
      }
    }
    return true;
  }

  inline bool is_symmetric(BinRel const& r) noexcept {
    for (Element a = 0; a < r.size(); ++a) {
      for (Element b = a + 1; b < r.size(); ++b) {
        if (r.contains(a, b) != r.contains(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relation algebra
  ////////////////////////////////////////////////////////////////////////

  inline BinRel converse(BinRel const& r) {
    BinRel out(r.size());
    for (Element a = 0; a < r.size(); ++a) {
      for (Element b = 0; b < r.size(); ++b) {
        if (r.contains(a, b)) {
          out.add(b, a);
        }
      }
    }
    return out;
  }

  /// {(a, c) : a r b and b s c for some b}.
  inline BinRel compose(BinRel const& r, BinRel const& s) {
    detail::check_same_size(r, s);
    BinRel out(r.size());
    for (std::size_t a = 0; a < r.size(); ++a) {
      BinRel::Row acc = 0;
      BinRel::Row mid = r.row(a);
      while (mid != 0) {
        int const b = std::countr_zero(mid);
        mid         = static_cast<BinRel::Row>(mid & (mid - 1));
        acc         = static_cast<BinRel::Row>(acc | s.row(b));
      }
      out.set_row(a, acc);
    }
    return out;
  }

  inline BinRel intersect(BinRel const& r, BinRel const& s) {
    detail::check_same_size(r, s);
    BinRel out(r.size());
    for (std::size_t a = 0; a < r.size(); ++a) {
      out.set_row(a, static_cast<BinRel::Row>(r.row(a) & s.row(a)));
    }
    return out;
  }

  inline BinRel unite(BinRel const& r, BinRel const& s) {
    detail::check_same_size(r, s);
    BinRel out(r.size());
    for (std::size_t a = 0; a < r.size(); ++a) {
      out.set_row(a, static_cast<BinRel::Row>(r.row(a) | s.row(a)));
    }
    return out;
  }

  /// Transitive closure (not reflexive-transitive), by repeated squaring.
  inline BinRel star(BinRel const& r) {
    BinRel t = r;
    while (true) {
      BinRel next = unite(t, compose(t, t));
      if (next == t) {
        return t;
      }
      t = next;
    }
  }

  inline bool is_transitive(BinRel const& r) {
    return is_subset(compose(r, r), r);
  }

  inline bool is_equivalence(BinRel const& r) {
    return is_reflexive(r) && is_symmetric(r) && is_transitive(r);
  }

  ////////////////////////////////////////////////////////////////////////
  // Compatibility with the operations of an algebra
  ////////////////////////////////////////////////////////////////////////

  /// An operation application that leaves a relation: the arguments are
  /// related coordinatewise but the images are not.
  struct AdmissibilityViolation {
    std::string       operation;
    std::vector<Pair> arguments;
    Pair              image;

    std::string describe() const {
      std::string s = operation + " maps the related pairs";
      for (auto [a, b] : arguments) {
        s += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
      s += " to (" + std::to_string(image.first) + ","
           + std::to_string(image.second) + ") outside the relation";
      return s;
    }
  };

  inline std::optional<AdmissibilityViolation>
  find_admissibility_violation(FiniteAlgebra const& alg, BinRel const& r) {
    detail::check_size(alg, r);
    std::size_t const n     = alg.size();
    std::vector<Pair> const pairs = r.pairs();
    for (auto const& op : alg.operations()) {
      std::size_t const a = op.arity;
      if (a == 0) {
        if (!r.contains(op.table[0], op.table[0])) {
          return AdmissibilityViolation{
              op.name, {}, {op.table[0], op.table[0]}};
        }
        continue;
      }
      if (pairs.empty()) {
        continue;
      }
      std::vector<std::size_t> idx(a, 0);
      while (true) {
        std::size_t left = 0, right = 0;
        for (std::size_t i = 0; i < a; ++i) {
          left  = left * n + pairs[idx[i]].first;
          right = right * n + pairs[idx[i]].second;
        }
        if (!r.contains(op.table[left], op.table[right])) {
          AdmissibilityViolation v{op.name, {}, {op.table[left], op.table[right]}};
          for (std::size_t i = 0; i < a; ++i) {
            v.arguments.push_back(pairs[idx[i]]);
          }
          return v;
        }
        std::size_t i = a;
        while (i-- > 0) {
          if (++idx[i] < pairs.size()) {
            break;
          }
          idx[i] = 0;
        }
        if (i == std::size_t(-1)) {
          break;
        }
      }
    }
    return std::nullopt;
  }

  /// True iff every operation maps coordinatewise related tuples to related
  /// elements.
  inline bool is_admissible(FiniteAlgebra const& alg, BinRel const& r) {
    return !find_admissibility_violation(alg, r).has_value();
  }

  inline bool is_tolerance(FiniteAlgebra const& alg, BinRel const& r) {
    return is_reflexive(r) && is_symmetric(r) && is_admissible(alg, r);
  }

  namespace detail {
    // For an equivalence relation it is enough to vary one argument at a
    // time; transitivity chains the single steps together.
    inline bool equivalence_is_compatible(FiniteAlgebra const& alg,
                                          BinRel const&        r) {
      std::size_t const n = alg.size();
      for (auto const& op : alg.operations()) {
        std::size_t const a = op.arity;
        if (a == 0) {
          continue;
        }
        std::size_t const total = ipow(n, a);
        for (std::size_t pos = 0; pos < total; ++pos) {
          std::size_t stride = 1;
          for (std::size_t i = 0; i < a; ++i, stride *= n) {
            std::size_t const digit = (pos / stride) % n;
            BinRel::Row       block = r.row(digit);
            while (block != 0) {
              int const other = std::countr_zero(block);
              block           = static_cast<BinRel::Row>(block & (block - 1));
              std::size_t const pos2
                  = pos - digit * stride + static_cast<std::size_t>(other) * stride;
              if (!r.contains(op.table[pos], op.table[pos2])) {
                return false;
              }
            }
          }
        }
      }
      return true;
    }
  }  // namespace detail

  inline bool is_congruence(FiniteAlgebra const& alg, BinRel const& r) {
    detail::check_size(alg, r);
    return is_equivalence(r) && detail::equivalence_is_compatible(alg, r);
  }

  ////////////////////////////////////////////////////////////////////////
  // Closures
  ////////////////////////////////////////////////////////////////////////

  /// Smallest admissible relation containing \p r (the subuniverse of A^2
  /// generated by its pairs).
  inline BinRel adm_close(FiniteAlgebra const& alg, BinRel const& r) {
    detail::check_size(alg, r);
    std::size_t const n = alg.size();
    std::vector<Code> gens;
    for (auto [a, b] : r.pairs()) {
      gens.push_back(static_cast<Code>(a * n + b));
    }
    TupleSet const closed = close_codes(alg, 2, gens);
    BinRel         out(n);
    for (Code c : closed.codes()) {
      out.add(c / n, c % n);
    }
    return out;
  }

  /// Smallest tolerance containing \p r.
  inline BinRel tol_close(FiniteAlgebra const& alg, BinRel const& r) {
    detail::check_size(alg, r);
    BinRel const sym = unite(unite(BinRel::delta(r.size()), r), converse(r));
    return adm_close(alg, sym);
  }

  /// Smallest congruence containing \p r.
  inline BinRel cg(FiniteAlgebra const& alg, BinRel const& r) {
    BinRel const out = star(tol_close(alg, r));
    // The transitive closure of an admissible relation is admissible.
    if (!detail::equivalence_is_compatible(alg, out)) {
      throw Error("internal error: transitive closure of a tolerance is not "
                  "compatible");
    }
    return out;
  }

  /// Join of two congruences in the congruence lattice.
  inline BinRel cong_join(FiniteAlgebra const& alg,
                          BinRel const&        gamma,
                          BinRel const&        delta) {
    if (!is_congruence(alg, gamma)) {
      throw Error("join: the first argument is not a congruence");
    }
    if (!is_congruence(alg, delta)) {
      throw Error("join: the second argument is not a congruence");
    }
    return star(compose(gamma, delta));
  }

}  // namespace relcomm

template <>
struct std::hash<relcomm::BinRel> {
  std::size_t operator()(relcomm::BinRel const& r) const noexcept {
    return r.hash();
  }
};
