// relcomm - commutators of reflexive admissible relations on finite algebras
//
// Finite algebras given by operation tables.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace relcomm {

  /// Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  using Element = std::uint32_t;

  // BinRel stores one 16-bit row per element, which bounds the universe.
  inline constexpr std::size_t kMaxUniverse = 16;
  inline constexpr std::size_t kDefaultMaxArity = 4;

  struct Operation {
    std::string name;
    std::size_t arity = 0;
    // Row-major: the entry for (a_0, ..., a_{k-1}) is at sum a_i * n^(k-1-i).
    std::vector<Element> table;

    bool operator==(Operation const&) const = default;
  };

  inline std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t result = 1;
    while (exp-- > 0) {
      result *= base;
    }
    return result;
  }

  /// A finite algebra on the universe {0, ..., n-1}.
  ///
  /// Instances are immutable once constructed and validated; every table entry
  /// is a universe element, every table has n^arity entries and operation
  /// names are unique.
  class FiniteAlgebra {
   public:
    FiniteAlgebra() = default;

    FiniteAlgebra(std::size_t n,
                  std::vector<Operation> ops,
                  std::size_t max_arity = kDefaultMaxArity)
        : _size(n), _ops(std::move(ops)) {
      validate(max_arity);
    }

    std::size_t size() const noexcept {
      return _size;
    }

    std::size_t number_of_operations() const noexcept {
      return _ops.size();
    }

    std::vector<Operation> const& operations() const noexcept {
      return _ops;
    }

    Operation const& operation(std::size_t i) const {
      if (i >= _ops.size()) {
        throw Error("operation index " + std::to_string(i)
                    + " out of range, the algebra has "
                    + std::to_string(_ops.size()) + " operations");
      }
      return _ops[i];
    }

    bool operator==(FiniteAlgebra const&) const = default;

   private:
    void validate(std::size_t max_arity) const {
      if (_size == 0) {
        throw Error("the universe must be nonempty");
      }
      if (_size > kMaxUniverse) {
        throw Error("universe size " + std::to_string(_size)
                    + " exceeds the supported maximum "
                    + std::to_string(kMaxUniverse));
      }
      std::unordered_set<std::string> names;
      for (auto const& op : _ops) {
        if (op.arity > max_arity) {
          throw Error("operation '" + op.name + "' has arity "
                      + std::to_string(op.arity) + " above the cap "
                      + std::to_string(max_arity));
        }
        if (!names.insert(op.name).second) {
          throw Error("duplicate operation name '" + op.name + "'");
        }
        std::size_t const expected = ipow(_size, op.arity);
        if (op.table.size() != expected) {
          throw Error("operation '" + op.name + "' has "
                      + std::to_string(op.table.size())
                      + " table entries, expected "
                      + std::to_string(expected));
        }
        for (std::size_t i = 0; i < op.table.size(); ++i) {
          if (op.table[i] >= _size) {
            throw Error("operation '" + op.name + "' entry "
                        + std::to_string(i) + " is "
                        + std::to_string(op.table[i])
                        + ", outside the universe");
          }
        }
      }
    }

    std::size_t            _size = 0;
    std::vector<Operation> _ops;
  };

  /// Value of operation \p op_index at \p args.
  inline Element eval_op(FiniteAlgebra const&     alg,
                         std::size_t              op_index,
                         std::span<Element const> args) {
    Operation const& op = alg.operation(op_index);
    if (args.size() != op.arity) {
      throw Error("operation '" + op.name + "' has arity "
                  + std::to_string(op.arity) + " but "
                  + std::to_string(args.size()) + " arguments were given");
    }
    std::size_t pos = 0;
    for (Element a : args) {
      if (a >= alg.size()) {
        throw Error("argument " + std::to_string(a)
                    + " is outside the universe of size "
                    + std::to_string(alg.size()));
      }
      pos = pos * alg.size() + a;
    }
    return op.table[pos];
  }

  inline Element eval_op(FiniteAlgebra const&           alg,
                         std::size_t                    op_index,
                         std::initializer_list<Element> args) {
    return eval_op(alg, op_index, std::span<Element const>(args.begin(), args.size()));
  }

}  // namespace relcomm
