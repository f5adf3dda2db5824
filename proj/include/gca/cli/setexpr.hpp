#ifndef GCA_CLI_SETEXPR_HPP
#define GCA_CLI_SETEXPR_HPP

#include <optional>
#include <string_view>

#include "gca/tree_calculus.hpp"

namespace gca::cli {

// Set expressions over one fiber:
//   atom   := V(path) | V(path; e#0, f, ...) | empty | ( expr )
//   inter  := atom { & atom }
//   diff   := inter { - inter }
//   expr   := diff { (| or ^) diff }
//   top    := expr [ == expr ]
// & binds tighter than -, which binds tighter than | and ^.
struct SetExprValue {
  RingSet set;                // canonical; the left side when comparing
  std::optional<RingSet> rhs;  // set for "a == b"
  std::optional<bool> equal;
};

SetExprValue eval_set_expr(const Fiber& t, std::string_view text);

}  // namespace gca::cli

#endif
