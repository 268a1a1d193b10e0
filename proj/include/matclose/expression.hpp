#pragma once

#include <string_view>

#include "matclose/ring.hpp"

namespace matclose {

/// Evaluates an arithmetic expression over `ring`:
///
///   expr   := term ( ('+' | '-') term )*
///   term   := unary ( '*' unary )*
///   unary  := '-' unary | power
///   power  := atom ( '^' int )?
///   atom   := 'inv(' expr ')' | '(' expr ')' | element literal
///
/// Element literals use the ring's own syntax, e.g. `@1 [[1,0],[0,0]]` in a
/// matricial closure. A parenthesized literal such as a product pair `(1,2)`
/// is read as a literal first. inv() throws DomainError for non-units.
RingElement evaluate(const Ring& ring, std::string_view expr);

}  // namespace matclose
