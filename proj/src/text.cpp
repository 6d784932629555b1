#include "fl/text.hpp"

#include "fl/errors.hpp"

namespace fl {

Word utf8_decode(std::string_view s) {
    Word out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char b0 = s[i];
        char32_t cp = 0;
        std::size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            throw ParseError("invalid UTF-8 lead byte", i);
        }
        if (i + len > s.size()) throw ParseError("truncated UTF-8 sequence", i);
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char b = s[i + k];
            if ((b & 0xC0) != 0x80) throw ParseError("invalid UTF-8 continuation byte", i + k);
            cp = (cp << 6) | (b & 0x3F);
        }
        // reject overlong encodings and surrogates
        static const char32_t min_cp[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < min_cp[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            throw ParseError("invalid UTF-8 scalar value", i);
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string utf8_encode(Symbol c) {
    std::string out;
    if (c < 0x80) {
        out += static_cast<char>(c);
    } else if (c < 0x800) {
        out += static_cast<char>(0xC0 | (c >> 6));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
        out += static_cast<char>(0xE0 | (c >> 12));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (c >> 18));
        out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    }
    return out;
}

std::string utf8_encode(std::u32string_view w) {
    std::string out;
    for (Symbol c : w) out += utf8_encode(c);
    return out;
}

Symbol utf8_decode_symbol(std::string_view s) {
    Word w = utf8_decode(s);
    if (w.size() != 1)
        throw ParseError("expected exactly one symbol, got " + std::to_string(w.size()), 0);
    return w[0];
}

}  // namespace fl
