// relcomm - commutators of reflexive admissible relations on finite algebras
//
// A small language of relation expressions: parser, printer and evaluator.
//
// Grammar, loosest binding first:
//
//   expr     := inter ('+' inter)*                 union
//   inter    := comp ('&' comp)*                   intersection
//   comp     := postfix (';' postfix)*             composition, R ; S
//   postfix  := primary ('^-' | '^*' | '^o')*      converse, transitive
//                                                  closure, tolerance closure
//   primary  := '(' expr ')' | 'delta' | 'all' | 'empty' | IDENT | literal
//             | 'cg(' expr ')' | 'adm(' expr ')' | 'join(' expr ',' expr ')'
//             | 'comm1(' expr ',' expr ')' | 'comm(' expr ',' expr ')'
//             | 'commW(' expr ',' expr ')' | 'K(' expr ',' expr ';' expr ')'
//   literal  := '{' [ pair (',' pair)* ] '}'       pair := '(' NUM ',' NUM ')'
//
// Inside K(...) the separator is the last ';' at nesting depth zero, so
// K(R, S ; T ; V) reads as K(R, S;T, V).

#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commutator.hpp"
#include "relation.hpp"

namespace relcomm {

  enum class ExprKind {
    name,
    delta,
    all,
    empty,
    literal,
    converse,
    star,
    tol_close,
    compose,
    intersect,
    unite,
    adm_close,
    cg,
    comm1,
    comm,
    comm_weak,
    k,
    join
  };

  struct Expr;
  using ExprPtr = std::shared_ptr<Expr const>;

  struct Expr {
    ExprKind             kind = ExprKind::empty;
    std::string          name;   // for ExprKind::name
    std::vector<Pair>    pairs;  // for ExprKind::literal, as written
    std::vector<ExprPtr> args;

    bool operator==(Expr const& that) const {
      if (kind != that.kind || name != that.name || pairs != that.pairs
          || args.size() != that.args.size()) {
        return false;
      }
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (!(*args[i] == *that.args[i])) {
          return false;
        }
      }
      return true;
    }
  };

  namespace expr {
    inline ExprPtr make(ExprKind k, std::vector<ExprPtr> args = {}) {
      auto e  = std::make_shared<Expr>();
      e->kind = k;
      e->args = std::move(args);
      return e;
    }
    inline ExprPtr name(std::string n) {
      auto e  = std::make_shared<Expr>();
      e->kind = ExprKind::name;
      e->name = std::move(n);
      return e;
    }
    inline ExprPtr literal(std::vector<Pair> pairs) {
      auto e   = std::make_shared<Expr>();
      e->kind  = ExprKind::literal;
      e->pairs = std::move(pairs);
      return e;
    }
  }  // namespace expr

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& msg)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + msg),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line, _column;
  };

  namespace detail {

    enum class Tok {
      ident,
      number,
      lparen,
      rparen,
      lbrace,
      rbrace,
      comma,
      semi,
      amp,
      plus,
      post_converse,
      post_star,
      post_tol,
      end
    };

    struct Token {
      Tok         kind;
      std::string text;
      std::size_t line, column;
    };

    inline std::vector<Token> tokenize(std::string_view text) {
      std::vector<Token> out;
      std::size_t        line = 1, col = 1, i = 0;
      auto               advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
          if (text[i] == '\n') {
            ++line;
            col = 1;
          } else {
            ++col;
          }
        }
      };
      while (i < text.size()) {
        char const c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          advance(1);
          continue;
        }
        std::size_t const l = line, cc = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          std::size_t j = i;
          while (j < text.size()
                 && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
            ++j;
          }
          out.push_back({Tok::ident, std::string(text.substr(i, j - i)), l, cc});
          advance(j - i);
          continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
          std::size_t j = i;
          while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            ++j;
          }
          out.push_back({Tok::number, std::string(text.substr(i, j - i)), l, cc});
          advance(j - i);
          continue;
        }
        if (c == '^') {
          char const next = i + 1 < text.size() ? text[i + 1] : '\0';
          Tok        t;
          if (next == '-') {
            t = Tok::post_converse;
          } else if (next == '*') {
            t = Tok::post_star;
          } else if (next == 'o') {
            t = Tok::post_tol;
          } else {
            throw ParseError(l, cc, "expected '^-', '^*' or '^o' after '^'");
          }
          out.push_back({t, std::string(text.substr(i, 2)), l, cc});
          advance(2);
          continue;
        }
        Tok t;
        switch (c) {
          case '(':
            t = Tok::lparen;
            break;
          case ')':
            t = Tok::rparen;
            break;
          case '{':
            t = Tok::lbrace;
            break;
          case '}':
            t = Tok::rbrace;
            break;
          case ',':
            t = Tok::comma;
            break;
          case ';':
            t = Tok::semi;
            break;
          case '&':
            t = Tok::amp;
            break;
          case '+':
            t = Tok::plus;
            break;
          default:
            throw ParseError(l, cc, std::string("unexpected character '") + c + "'");
        }
        out.push_back({t, std::string(1, c), l, cc});
        advance(1);
      }
      out.push_back({Tok::end, "", line, col});
      return out;
    }

    class Parser {
     public:
      explicit Parser(std::string_view text)
          : _toks(tokenize(text)), _limit(_toks.size() - 1) {}

      ExprPtr parse() {
        ExprPtr e = parse_union();
        expect(Tok::end, "end of input");
        return e;
      }

     private:
      Token const& peek() const {
        return _pos < _limit ? _toks[_pos] : end_token();
      }

      Token const& end_token() const {
        // Report positions inside a limited range at the limit token.
        return _toks[_limit].kind == Tok::end ? _toks[_limit] : _end_at_limit;
      }

      Token const& take() {
        Token const& t = peek();
        if (_pos < _limit) {
          ++_pos;
        }
        return t;
      }

      [[noreturn]] void fail(Token const& t, std::string_view expected) const {
        std::string found = t.text.empty() ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.line, t.column,
                         "expected " + std::string(expected) + ", found " + found);
      }

      Token const& expect(Tok kind, std::string_view expected) {
        if (peek().kind != kind) {
          fail(peek(), expected);
        }
        return take();
      }

      ExprPtr parse_union() {
        ExprPtr left = parse_inter();
        while (peek().kind == Tok::plus) {
          take();
          left = expr::make(ExprKind::unite, {left, parse_inter()});
        }
        return left;
      }

      ExprPtr parse_inter() {
        ExprPtr left = parse_comp();
        while (peek().kind == Tok::amp) {
          take();
          left = expr::make(ExprKind::intersect, {left, parse_comp()});
        }
        return left;
      }

      ExprPtr parse_comp() {
        ExprPtr left = parse_postfix();
        while (peek().kind == Tok::semi) {
          take();
          left = expr::make(ExprKind::compose, {left, parse_postfix()});
        }
        return left;
      }

      ExprPtr parse_postfix() {
        ExprPtr e = parse_primary();
        while (true) {
          switch (peek().kind) {
            case Tok::post_converse:
              take();
              e = expr::make(ExprKind::converse, {e});
              break;
            case Tok::post_star:
              take();
              e = expr::make(ExprKind::star, {e});
              break;
            case Tok::post_tol:
              take();
              e = expr::make(ExprKind::tol_close, {e});
              break;
            default:
              return e;
          }
        }
      }

      Element parse_number() {
        Token const& t = expect(Tok::number, "number");
        if (t.text.size() > 3) {
          fail(t, "a universe element");
        }
        return static_cast<Element>(std::stoul(t.text));
      }

      ExprPtr parse_literal() {
        expect(Tok::lbrace, "'{'");
        std::vector<Pair> pairs;
        if (peek().kind != Tok::rbrace) {
          while (true) {
            expect(Tok::lparen, "'('");
            Element const a = parse_number();
            expect(Tok::comma, "','");
            Element const b = parse_number();
            expect(Tok::rparen, "')'");
            pairs.emplace_back(a, b);
            if (peek().kind != Tok::comma) {
              break;
            }
            take();
          }
        }
        expect(Tok::rbrace, "',' or '}'");
        return expr::literal(std::move(pairs));
      }

      ExprPtr parse_k() {
        expect(Tok::lparen, "'('");
        ExprPtr first = parse_union();
        expect(Tok::comma, "','");
        // locate the closing parenthesis and the last ';' at depth zero
        std::size_t depth = 0, semi = 0, j = _pos;
        bool        found_semi = false;
        for (; j < _limit; ++j) {
          Tok const k = _toks[j].kind;
          if (k == Tok::lparen || k == Tok::lbrace) {
            ++depth;
          } else if (k == Tok::rparen || k == Tok::rbrace) {
            if (depth == 0) {
              break;
            }
            --depth;
          } else if (k == Tok::semi && depth == 0) {
            semi       = j;
            found_semi = true;
          }
        }
        if (!found_semi) {
          fail(j < _limit ? _toks[j] : end_token(), "';' separating the third argument of K");
        }
        std::size_t const saved       = _limit;
        Token const       saved_end   = _end_at_limit;
        _limit                        = semi;
        _end_at_limit                 = _toks[semi];
        _end_at_limit.kind            = Tok::end;
        ExprPtr second                = parse_union();
        if (_pos != semi) {
          fail(peek(), "';'");
        }
        _limit        = saved;
        _end_at_limit = saved_end;
        expect(Tok::semi, "';'");
        ExprPtr third = parse_union();
        expect(Tok::rparen, "')'");
        return expr::make(ExprKind::k, {first, second, third});
      }

      ExprPtr parse_call(ExprKind kind, std::size_t arity) {
        expect(Tok::lparen, "'('");
        std::vector<ExprPtr> args;
        for (std::size_t i = 0; i < arity; ++i) {
          if (i > 0) {
            expect(Tok::comma, "','");
          }
          args.push_back(parse_union());
        }
        expect(Tok::rparen, arity > 1 ? "',' or ')'" : "')'");
        return expr::make(kind, std::move(args));
      }

      ExprPtr parse_primary() {
        Token const& t = peek();
        switch (t.kind) {
          case Tok::lparen: {
            take();
            ExprPtr e = parse_union();
            expect(Tok::rparen, "')'");
            return e;
          }
          case Tok::lbrace:
            return parse_literal();
          case Tok::ident: {
            std::string const word = t.text;
            take();
            if (word == "delta") {
              return expr::make(ExprKind::delta);
            } else if (word == "all") {
              return expr::make(ExprKind::all);
            } else if (word == "empty") {
              return expr::make(ExprKind::empty);
            }
            if (peek().kind == Tok::lparen) {
              if (word == "cg") {
                return parse_call(ExprKind::cg, 1);
              } else if (word == "adm") {
                return parse_call(ExprKind::adm_close, 1);
              } else if (word == "comm1") {
                return parse_call(ExprKind::comm1, 2);
              } else if (word == "comm") {
                return parse_call(ExprKind::comm, 2);
              } else if (word == "commW") {
                return parse_call(ExprKind::comm_weak, 2);
              } else if (word == "join") {
                return parse_call(ExprKind::join, 2);
              } else if (word == "K") {
                return parse_k();
              }
              fail(peek(), "an operator after the relation name '" + word + "'");
            }
            return expr::name(word);
          }
          default:
            fail(t, "'(', '{', a relation name, a constant or a function");
        }
      }

      std::vector<Token> _toks;
      std::size_t        _pos = 0;
      std::size_t        _limit;
      Token              _end_at_limit{Tok::end, "", 0, 0};
    };

    inline int precedence(ExprKind k) {
      switch (k) {
        case ExprKind::unite:
          return 1;
        case ExprKind::intersect:
          return 2;
        case ExprKind::compose:
          return 3;
        case ExprKind::converse:
        case ExprKind::star:
        case ExprKind::tol_close:
          return 4;
        default:
          return 5;
      }
    }

    inline void print(Expr const& e, std::string& out);

    inline void print_wrapped(Expr const& e, bool wrap, std::string& out) {
      if (wrap) {
        out += '(';
      }
      print(e, out);
      if (wrap) {
        out += ')';
      }
    }

    inline void print(Expr const& e, std::string& out) {
      auto binary = [&](char const* op) {
        int const p = precedence(e.kind);
        print_wrapped(*e.args[0], precedence(e.args[0]->kind) < p, out);
        out += op;
        print_wrapped(*e.args[1], precedence(e.args[1]->kind) <= p, out);
      };
      auto call = [&](char const* fn) {
        out += fn;
        out += '(';
        for (std::size_t i = 0; i < e.args.size(); ++i) {
          if (i > 0) {
            out += ", ";
          }
          print(*e.args[i], out);
        }
        out += ')';
      };
      auto postfix = [&](char const* op) {
        print_wrapped(*e.args[0], precedence(e.args[0]->kind) < 4, out);
        out += op;
      };
      switch (e.kind) {
        case ExprKind::name:
          out += e.name;
          break;
        case ExprKind::delta:
          out += "delta";
          break;
        case ExprKind::all:
          out += "all";
          break;
        case ExprKind::empty:
          out += "empty";
          break;
        case ExprKind::literal:
          out += '{';
          for (std::size_t i = 0; i < e.pairs.size(); ++i) {
            if (i > 0) {
              out += ',';
            }
            out += '(' + std::to_string(e.pairs[i].first) + ','
                   + std::to_string(e.pairs[i].second) + ')';
          }
          out += '}';
          break;
        case ExprKind::converse:
          postfix("^-");
          break;
        case ExprKind::star:
          postfix("^*");
          break;
        case ExprKind::tol_close:
          postfix("^o");
          break;
        case ExprKind::compose:
          binary(" ; ");
          break;
        case ExprKind::intersect:
          binary(" & ");
          break;
        case ExprKind::unite:
          binary(" + ");
          break;
        case ExprKind::adm_close:
          call("adm");
          break;
        case ExprKind::cg:
          call("cg");
          break;
        case ExprKind::comm1:
          call("comm1");
          break;
        case ExprKind::comm:
          call("comm");
          break;
        case ExprKind::comm_weak:
          call("commW");
          break;
        case ExprKind::join:
          call("join");
          break;
        case ExprKind::k:
          out += "K(";
          print(*e.args[0], out);
          out += ", ";
          print(*e.args[1], out);
          out += "; ";
          // a top-level ';' in the last argument would move the separator
          print_wrapped(*e.args[2], precedence(e.args[2]->kind) <= 3, out);
          out += ')';
          break;
      }
    }

  }  // namespace detail

  inline ExprPtr parse_expr(std::string_view text) {
    return detail::Parser(text).parse();
  }

  /// Prints with the fewest parentheses that parse back to the same tree.
  inline std::string to_string(Expr const& e) {
    std::string out;
    detail::print(e, out);
    return out;
  }

  /// Bindings of relation names; small, so lookup is linear.
  class Env {
   public:
    Env() = default;
    Env(std::initializer_list<std::pair<std::string, BinRel>> init)
        : _bindings(init) {}

    void bind(std::string const& name, BinRel const& r) {
      for (auto& [n, v] : _bindings) {
        if (n == name) {
          v = r;
          return;
        }
      }
      _bindings.emplace_back(name, r);
    }

    BinRel const* find(std::string_view name) const noexcept {
      for (auto const& [n, v] : _bindings) {
        if (n == name) {
          return &v;
        }
      }
      return nullptr;
    }

    std::vector<std::pair<std::string, BinRel>> const& bindings() const noexcept {
      return _bindings;
    }

   private:
    std::vector<std::pair<std::string, BinRel>> _bindings;
  };

  /// Evaluates expressions on one algebra, sharing M(R,S) across calls.
  class Evaluator {
   public:
    explicit Evaluator(FiniteAlgebra const& alg, bool close_inputs = false)
        : _ctx(alg), _close_inputs(close_inputs) {}

    FiniteAlgebra const& algebra() const noexcept {
      return _ctx.algebra();
    }

    CommutatorContext& context() noexcept {
      return _ctx;
    }

    BinRel eval(Expr const& e, Env const& env) {
      FiniteAlgebra const& alg = _ctx.algebra();
      std::size_t const    n   = alg.size();
      auto arg = [&](std::size_t i) { return eval(*e.args[i], env); };
      auto commutator_arg = [&](std::size_t i) {
        BinRel r = arg(i);
        return _close_inputs ? adm_close(alg, unite(r, BinRel::delta(n))) : r;
      };
      switch (e.kind) {
        case ExprKind::name: {
          BinRel const* r = env.find(e.name);
          if (r == nullptr) {
            throw Error("unbound relation name '" + e.name + "'");
          }
          detail::check_size(alg, *r);
          return *r;
        }
        case ExprKind::delta:
          return BinRel::delta(n);
        case ExprKind::all:
          return BinRel::all(n);
        case ExprKind::empty:
          return BinRel::empty(n);
        case ExprKind::literal:
          return BinRel::from_pairs(n, e.pairs);
        case ExprKind::converse:
          return converse(arg(0));
        case ExprKind::star:
          return star(arg(0));
        case ExprKind::tol_close:
          return tol_close(alg, arg(0));
        case ExprKind::compose:
          return compose(arg(0), arg(1));
        case ExprKind::intersect:
          return intersect(arg(0), arg(1));
        case ExprKind::unite:
          return unite(arg(0), arg(1));
        case ExprKind::adm_close:
          return adm_close(alg, arg(0));
        case ExprKind::cg:
          return cg(alg, arg(0));
        case ExprKind::comm1: {
          BinRel const r = commutator_arg(0);
          return _ctx.comm1(r, commutator_arg(1));
        }
        case ExprKind::comm: {
          BinRel const r = commutator_arg(0);
          return _ctx.comm(r, commutator_arg(1));
        }
        case ExprKind::comm_weak: {
          BinRel const r = commutator_arg(0);
          return _ctx.comm_weak(r, commutator_arg(1));
        }
        case ExprKind::k: {
          BinRel const r = commutator_arg(0);
          BinRel const s = commutator_arg(1);
          return _ctx.k_op(r, s, arg(2));
        }
        case ExprKind::join: {
          BinRel const g = arg(0);
          return cong_join(alg, g, arg(1));
        }
      }
      throw Error("unknown expression node");
    }

   private:
    CommutatorContext _ctx;
    bool              _close_inputs;
  };

  inline BinRel eval_expr(FiniteAlgebra const& alg,
                          Env const&           env,
                          Expr const&          e,
                          bool                 close_inputs = false) {
    return Evaluator(alg, close_inputs).eval(e, env);
  }

}  // namespace relcomm
