#ifndef BLOCKALG_PARSE_HPP
#define BLOCKALG_PARSE_HPP

#include "blockalg/scalar.hpp"

namespace blockalg {

/// Parse the expression syntax used by all file formats: integer literals,
/// variable names (and the extension generator, when the context has one),
/// `+ - * / ^ ( )`. Entirely exact; no floating point.
/// Throws ParseError with position info on malformed input.
Scalar parse_scalar(const CtxPtr& ctx, const std::string& text);

}  // namespace blockalg

#endif
