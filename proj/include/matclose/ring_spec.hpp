#pragma once

#include <string_view>

#include "matclose/ring.hpp"

namespace matclose {

/// Builds a ring from the ring-spec DSL:
///
///   ring    := postfix ( 'x' postfix )*            left-associative product
///   postfix := atom ( '[' suffix ']' )*
///   suffix  := 'C' int | 'C<' int '>'              cyclic group ring
///            | 'x'                                 polynomial ring
///            | 'x,x^-1'                            Laurent ring
///   atom    := 'Z/' int | 'GF(' int ')'
///            | 'M' int '(' ring ')' | 'M<' int '>(' ring ')'
///            | 'MC' int '(' ring ')'               matricial closure
///            | '(' ring ')'
///
/// Whitespace is ignored between tokens. Errors are ParseError with a byte
/// offset; GF(p) with composite p is rejected.
Ring build_ring(std::string_view spec);

}  // namespace matclose
