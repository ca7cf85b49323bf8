// relcomm - commutators of reflexive admissible relations on finite algebras
//
// Subuniverse generation in finite direct powers.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace relcomm {

  using Code = std::uint32_t;

  /// A subset of A^k, with k-tuples encoded as base-n integers (first
  /// coordinate most significant). Membership is a bitset of length n^k;
  /// members are additionally kept in insertion order.
  class TupleSet {
   public:
    TupleSet() = default;

    TupleSet(std::size_t n, std::size_t k)
        : _n(n), _k(k), _bits(check_capacity(n, k), false) {}

    std::size_t universe_size() const noexcept {
      return _n;
    }

    std::size_t arity() const noexcept {
      return _k;
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

    bool empty() const noexcept {
      return _members.empty();
    }

    bool contains_code(Code c) const {
      return c < _bits.size() && _bits[c];
    }

    bool contains(std::span<Element const> tuple) const {
      return tuple.size() == _k && contains_code(encode(tuple));
    }

    // Returns true if the tuple was new.
    bool insert_code(Code c) {
      if (_bits[c]) {
        return false;
      }
      _bits[c] = true;
      _members.push_back(c);
      return true;
    }

    bool insert(std::span<Element const> tuple) {
      if (tuple.size() != _k) {
        throw Error("tuple of length " + std::to_string(tuple.size())
                    + " inserted into a set of " + std::to_string(_k)
                    + "-tuples");
      }
      for (Element e : tuple) {
        if (e >= _n) {
          throw Error("tuple entry " + std::to_string(e)
                      + " outside the universe of size " + std::to_string(_n));
        }
      }
      return insert_code(encode(tuple));
    }

    /// Members in insertion order.
    std::vector<Code> const& codes() const noexcept {
      return _members;
    }

    std::vector<Code> sorted_codes() const {
      std::vector<Code> out = _members;
      std::sort(out.begin(), out.end());
      return out;
    }

    Code encode(std::span<Element const> tuple) const {
      Code c = 0;
      for (Element e : tuple) {
        c = c * static_cast<Code>(_n) + e;
      }
      return c;
    }

    std::vector<Element> decode(Code c) const {
      std::vector<Element> out(_k);
      for (std::size_t i = _k; i-- > 0;) {
        out[i] = c % _n;
        c /= _n;
      }
      return out;
    }

    bool is_subset_of(TupleSet const& other) const {
      return std::all_of(_members.begin(), _members.end(), [&](Code c) {
        return other.contains_code(c);
      });
    }

    bool operator==(TupleSet const& that) const {
      return _n == that._n && _k == that._k && _bits == that._bits;
    }

   private:
    static std::size_t check_capacity(std::size_t n, std::size_t k) {
      // 2^26 bits is far beyond desk scale but still cheap to allocate.
      std::size_t total = 1;
      for (std::size_t i = 0; i < k; ++i) {
        total *= n;
        if (total > (std::size_t(1) << 26)) {
          throw Error("the power A^" + std::to_string(k) + " with |A| = "
                      + std::to_string(n) + " is too large");
        }
      }
      return total;
    }

    std::size_t       _n = 0;
    std::size_t       _k = 0;
    std::vector<bool> _bits;
    std::vector<Code> _members;
  };

  /// A subset of A^4; (x, y, z, w) stands for the matrix |x y; z w|.
  class QuadSet : public TupleSet {
   public:
    QuadSet() = default;
    explicit QuadSet(std::size_t n) : TupleSet(n, 4) {}
    QuadSet(TupleSet&& ts) : TupleSet(std::move(ts)) {
      if (arity() != 4) {
        throw Error("a QuadSet needs 4-tuples");
      }
    }

    bool contains(Element x, Element y, Element z, Element w) const {
      std::array<Element, 4> t{x, y, z, w};
      return x < universe_size() && y < universe_size() && z < universe_size()
             && w < universe_size() && contains_code(encode(t));
    }

    bool insert(Element x, Element y, Element z, Element w) {
      std::array<Element, 4> t{x, y, z, w};
      return TupleSet::insert(t);
    }

    std::array<Element, 4> quad(Code c) const {
      std::size_t const      n = universe_size();
      std::array<Element, 4> q{};
      for (std::size_t i = 4; i-- > 0;) {
        q[i] = c % n;
        c /= n;
      }
      return q;
    }
  };

  namespace detail {

    // Semi-naive saturation: when the member at position p is processed,
    // every operation is applied to every argument tuple drawn from
    // positions 0..p that uses p at least once (indexed by the first such
    // coordinate). Each argument tuple is therefore visited exactly once.
    inline void saturate(FiniteAlgebra const& alg, TupleSet& set) {
      std::size_t const n = alg.size();
      std::size_t const k = set.arity();

      std::vector<Element> digits;  // digits of member i at [i*k, (i+1)*k)
      auto push_digits = [&](Code c) {
        std::size_t const base = digits.size();
        digits.resize(base + k);
        for (std::size_t i = k; i-- > 0;) {
          digits[base + i] = c % n;
          c /= n;
        }
      };

      for (auto const& op : alg.operations()) {
        if (op.arity == 0) {
          Code c = 0;
          for (std::size_t i = 0; i < k; ++i) {
            c = c * static_cast<Code>(n) + op.table[0];
          }
          set.insert_code(c);
        }
      }
      for (Code c : set.codes()) {
        push_digits(c);
      }

      std::vector<std::size_t> args;
      for (std::size_t p = 0; p < set.size(); ++p) {
        for (auto const& op : alg.operations()) {
          std::size_t const a = op.arity;
          if (a == 0) {
            continue;
          }
          args.assign(a, 0);
          for (std::size_t first = 0; first < a; ++first) {
            if (first > 0 && p == 0) {
              break;  // nothing strictly below position 0
            }
            // coordinates < first range over [0, p), coordinate first is p,
            // coordinates > first range over [0, p]
            for (std::size_t i = 0; i < a; ++i) {
              args[i] = (i == first) ? p : 0;
            }
            while (true) {
              Code out = 0;
              for (std::size_t c = 0; c < k; ++c) {
                std::size_t pos = 0;
                for (std::size_t i = 0; i < a; ++i) {
                  pos = pos * n + digits[args[i] * k + c];
                }
                out = out * static_cast<Code>(n) + op.table[pos];
              }
              if (set.insert_code(out)) {
                push_digits(out);
              }
              // odometer, last coordinate fastest, skipping `first`
              std::size_t i = a;
              while (i-- > 0) {
                if (i == first) {
                  continue;
                }
                std::size_t const limit = (i < first) ? p : p + 1;
                if (++args[i] < limit) {
                  break;
                }
                args[i] = 0;
              }
              if (i == std::size_t(-1)) {
                break;
              }
            }
          }
        }
      }
    }

  }  // namespace detail

  /// Smallest subset of A^k containing \p generators (given as codes) and
  /// closed under the coordinatewise action of every operation.
  inline TupleSet close_codes(FiniteAlgebra const&   alg,
                              std::size_t            k,
                              std::span<Code const> generators) {
    TupleSet set(alg.size(), k);
    std::size_t const limit = ipow(alg.size(), k);
    for (Code c : generators) {
      if (c >= limit) {
        throw Error("generator code " + std::to_string(c)
                    + " does not encode a " + std::to_string(k) + "-tuple");
      }
      set.insert_code(c);
    }
    detail::saturate(alg, set);
    return set;
  }

  /// Subuniverse of A^k generated by \p generators, as lexicographically
  /// sorted tuples. With no generators and no constants the result is empty.
  inline std::vector<std::vector<Element>>
  subuniverse_closure(FiniteAlgebra const&                     alg,
                      std::size_t                              k,
                      std::vector<std::vector<Element>> const& generators) {
    if (k == 0) {
      throw Error("the power must be positive");
    }
    TupleSet set(alg.size(), k);
    for (auto const& g : generators) {
      set.insert(g);
    }
    detail::saturate(alg, set);
    std::vector<std::vector<Element>> out;
    out.reserve(set.size());
    for (Code c : set.sorted_codes()) {
      out.push_back(set.decode(c));
    }
    return out;
  }

}  // namespace relcomm
