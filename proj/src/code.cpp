#include "coprime/code.hpp"

#include <algorithm>

namespace coprime {

Code parse_code(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch != '0' && ch != '1')
            throw InvalidCharacter(
                "invalid character '" + std::string(1, ch) +
                    "' at position " + std::to_string(i + 1),
                i + 1);
        bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return Code(std::move(bits));
}

std::string format_code(const Code& c) {
    std::string out;
    out.reserve(c.size());
    for (auto b : c)
        out.push_back(b ? '1' : '0');
    return out;
}

Code refl(const Code& c) {
    std::vector<std::uint8_t> bits(c.begin(), c.end());
    std::reverse(bits.begin(), bits.end());
    return Code(std::move(bits));
}

bool is_palindrome(const Code& c) {
    return std::equal(c.begin(), c.end(), c.bits().rbegin());
}

std::size_t weight(const Code& c) {
    return static_cast<std::size_t>(std::count(c.begin(), c.end(), 1));
}

} // namespace coprime
