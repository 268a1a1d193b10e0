#pragma once

#include "cursor.hpp"
#include "matclose/ring.hpp"

namespace matclose::detail {

/// Element-literal parser entry point that leaves the cursor after the
/// literal, so enclosing grammars (matrix literals, expressions) can embed it.
Value parse_element(const Ring& ring, Cursor& cur);

/// Matrix literal `[[a,b],[c,d]]` over `ring`; returns the entries row-major
/// and the dimensions.
std::vector<Value> parse_matrix_literal(const Ring& ring, Cursor& cur, std::size_t& rows,
                                        std::size_t& cols);

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace matclose::detail
