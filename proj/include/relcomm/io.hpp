// relcomm - commutators of reflexive admissible relations on finite algebras
//
// Text formats: relation literals and .alg algebra files.
//
// An .alg file is a sequence of lines; '#' starts a comment.
//
//   name: Z2            optional display name
//   size: 2             universe {0, 1}
//   op: + 2             operation '+' of arity 2, followed by its n^2
//   0 1                 table entries in row-major order: the entry for
//   1 0                 (a, b) is at position a*n + b
//
// Table entries are whitespace separated and may be laid out freely, also
// on the 'op:' line itself after the arity. A nullary operation has one
// entry. Keys are 'name', 'size' and 'op'; 'size' precedes every 'op'.

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "expr.hpp"
#include "relation.hpp"

namespace relcomm {

  inline std::string format_pair(Pair p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
  }

  /// Pair-list literal, pairs in row-major order: {(0,0),(0,1),(1,1)}.
  inline std::string format_relation(BinRel const& r) {
    std::string out = "{";
    bool        first = true;
    for (auto p : r.pairs()) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += format_pair(p);
    }
    return out + "}";
  }

  /// Like format_relation, but writes delta, all and empty by name.
  inline std::string format_relation_short(BinRel const& r) {
    std::size_t const n = r.size();
    if (r == BinRel::delta(n)) {
      return "delta";
    } else if (r == BinRel::all(n)) {
      return "all";
    } else if (r.is_empty()) {
      return "empty";
    }
    return format_relation(r);
  }

  /// Parses a literal {(a,b),...} or one of delta, all, empty.
  inline BinRel parse_relation(std::size_t n, std::string_view text) {
    ExprPtr const e = parse_expr(text);
    switch (e->kind) {
      case ExprKind::literal:
        for (auto [a, b] : e->pairs) {
          if (a >= n || b >= n) {
            throw Error("pair " + format_pair({a, b})
                        + " outside a universe of size " + std::to_string(n));
          }
        }
        return BinRel::from_pairs(n, e->pairs);
      case ExprKind::delta:
        return BinRel::delta(n);
      case ExprKind::all:
        return BinRel::all(n);
      case ExprKind::empty:
        return BinRel::empty(n);
      default:
        throw Error("expected a relation literal, found '" + std::string(text) + "'");
    }
  }

  struct NamedAlgebra {
    std::string   name;
    FiniteAlgebra algebra;
  };

  inline NamedAlgebra parse_algebra(std::string_view text,
                                    std::size_t      max_arity = kDefaultMaxArity) {
    NamedAlgebra           out;
    std::size_t            size = 0;
    std::vector<Operation> ops;
    std::size_t            expected = 0;  // entries still owed to ops.back()
    std::size_t            line_no  = 0;

    auto fail = [&](std::string const& msg) {
      throw Error("algebra file line " + std::to_string(line_no) + ": " + msg);
    };
    auto read_entries = [&](std::istringstream& in) {
      std::string tok;
      while (in >> tok) {
        if (expected == 0) {
          fail("unexpected table entry '" + tok + "'");
        }
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
          v = std::stoul(tok, &pos);
        } catch (std::exception const&) {
          pos = 0;
        }
        if (pos != tok.size()) {
          fail("table entry '" + tok + "' is not a number");
        }
        if (v >= size) {
          fail("table entry " + tok + " outside the universe");
        }
        ops.back().table.push_back(static_cast<Element>(v));
        --expected;
      }
    };

    std::istringstream lines{std::string(text)};
    std::string        line;
    while (std::getline(lines, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      auto const colon = line.find(':');
      std::string key;
      if (colon != std::string::npos) {
        std::istringstream k(line.substr(0, colon));
        k >> key;
      }
      if (key == "name" || key == "size" || key == "op") {
        if (expected != 0) {
          fail("operation '" + ops.back().name + "' is missing "
               + std::to_string(expected) + " table entries");
        }
        std::istringstream in(line.substr(colon + 1));
        if (key == "name") {
          std::string rest;
          std::getline(in >> std::ws, rest);
          while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) {
            rest.pop_back();
          }
          out.name = rest;
        } else if (key == "size") {
          if (size != 0) {
            fail("duplicate 'size'");
          }
          long long n = 0;
          if (!(in >> n) || n <= 0) {
            fail("'size' needs a positive integer");
          }
          size = static_cast<std::size_t>(n);
          if (size > kMaxUniverse) {
            fail("size " + std::to_string(size) + " exceeds the maximum "
                 + std::to_string(kMaxUniverse));
          }
        } else {
          if (size == 0) {
            fail("'op' before 'size'");
          }
          Operation op;
          long long arity = -1;
          if (!(in >> op.name >> arity) || arity < 0) {
            fail("expected 'op: NAME ARITY'");
          }
          if (static_cast<std::size_t>(arity) > max_arity) {
            fail("operation '" + op.name + "' has arity " + std::to_string(arity)
                 + " above the cap " + std::to_string(max_arity));
          }
          op.arity = static_cast<std::size_t>(arity);
          expected = ipow(size, op.arity);
          ops.push_back(std::move(op));
          read_entries(in);
        }
      } else {
        std::istringstream in(line);
        read_entries(in);
      }
    }
    if (expected != 0) {
      fail("operation '" + ops.back().name + "' is missing "
           + std::to_string(expected) + " table entries");
    }
    if (size == 0) {
      throw Error("algebra file has no 'size'");
    }
    out.algebra = FiniteAlgebra(size, std::move(ops), max_arity);
    return out;
  }

  inline std::string write_algebra(NamedAlgebra const& a) {
    std::ostringstream out;
    std::size_t const  n = a.algebra.size();
    if (!a.name.empty()) {
      out << "name: " << a.name << '\n';
    }
    out << "size: " << n << '\n';
    for (auto const& op : a.algebra.operations()) {
      out << "op: " << op.name << ' ' << op.arity << '\n';
      std::size_t const width = op.arity == 0 ? 1 : n;
      for (std::size_t i = 0; i < op.table.size(); ++i) {
        out << op.table[i] << ((i + 1) % width == 0 ? '\n' : ' ');
      }
    }
    return out.str();
  }

  inline NamedAlgebra load_algebra(std::string const& path,
                                   std::size_t        max_arity = kDefaultMaxArity) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open algebra file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_algebra(buffer.str(), max_arity);
  }

}  // namespace relcomm
