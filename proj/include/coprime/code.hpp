#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coprime/errors.hpp"

namespace coprime {

// A finite bit sequence x1..xn. x1 is the leftmost character of the text
// form and the first generator applied when walking from the root. The
// empty code is legal and denotes the root.
class Code {
public:
    Code() = default;
    explicit Code(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    // 0-based access; the API-level cluster operations are 1-based.
    std::uint8_t bit(std::size_t i) const { return bits_[i]; }

    void push_back(std::uint8_t b) { bits_.push_back(b); }

    auto begin() const { return bits_.begin(); }
    auto end() const { return bits_.end(); }

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    // Lexicographic with '0' < '1'; a prefix sorts before its extensions.
    auto operator<=>(const Code&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

// Accepts only '0'/'1' (empty string allowed); throws InvalidCharacter
// with the 1-based offending position.
Code parse_code(std::string_view text);
std::string format_code(const Code& c);

// refl(x1 x2 .. xn) = xn .. x2 x1.
Code refl(const Code& c);
bool is_palindrome(const Code& c);

// Number of 1-bits.
std::size_t weight(const Code& c);

} // namespace coprime
