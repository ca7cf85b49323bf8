// Random expression trees for round-trip and evaluation tests.

#pragma once

#include <relcomm/expr.hpp>
#include <relcomm/random.hpp>

namespace gen {

  using relcomm::ExprKind;
  using relcomm::ExprPtr;
  namespace expr = relcomm::expr;

  /// A random tree of at most `depth` levels over the names R, S and T.
  /// With `commutators` false, no node needs reflexive admissible inputs.
  inline ExprPtr random_expr(relcomm::Rng& rng,
                             int           depth,
                             std::size_t   n           = 3,
                             bool          commutators = true) {
    static constexpr char const* names[] = {"R", "S", "T"};
    if (depth <= 0 || rng.below(4) == 0) {
      switch (rng.below(6)) {
        case 0:
          return expr::make(ExprKind::delta);
        case 1:
          return expr::make(ExprKind::all);
        case 2:
          return expr::make(ExprKind::empty);
        case 3: {
          std::vector<relcomm::Pair> pairs;
          for (std::size_t i = 0, k = rng.below(4); i < k; ++i) {
            pairs.emplace_back(static_cast<relcomm::Element>(rng.below(n)),
                               static_cast<relcomm::Element>(rng.below(n)));
          }
          return expr::literal(std::move(pairs));
        }
        default:
          return expr::name(names[rng.below(3)]);
      }
    }
    static constexpr ExprKind kinds[] = {
        ExprKind::converse, ExprKind::star,      ExprKind::tol_close, ExprKind::compose,
        ExprKind::intersect, ExprKind::unite,    ExprKind::adm_close, ExprKind::cg,
        ExprKind::comm1,    ExprKind::comm,      ExprKind::comm_weak, ExprKind::k,
        ExprKind::join};
    std::size_t const limit = commutators ? std::size(kinds) : 8;
    ExprKind const    k     = kinds[rng.below(limit)];
    auto sub = [&] { return random_expr(rng, depth - 1, n, commutators); };
    switch (k) {
      case ExprKind::converse:
      case ExprKind::star:
      case ExprKind::tol_close:
      case ExprKind::adm_close:
      case ExprKind::cg:
        return expr::make(k, {sub()});
      case ExprKind::k: {
        auto a = sub();
        auto b = sub();
        return expr::make(k, {a, b, sub()});
      }
      default: {
        auto a = sub();
        return expr::make(k, {a, sub()});
      }
    }
  }

}  // namespace gen
