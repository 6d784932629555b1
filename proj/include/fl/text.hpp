#pragma once

#include <string>
#include <string_view>

namespace fl {

/// One input symbol: a single Unicode scalar value.
using Symbol = char32_t;

/// A finite word; may be empty.
using Word = std::u32string;

/// Decodes UTF-8 into a sequence of Unicode scalars. Throws ParseError on
/// malformed input.
Word utf8_decode(std::string_view s);

std::string utf8_encode(std::u32string_view w);
std::string utf8_encode(Symbol c);

/// Decodes a string that must contain exactly one scalar.
Symbol utf8_decode_symbol(std::string_view s);

}  // namespace fl
