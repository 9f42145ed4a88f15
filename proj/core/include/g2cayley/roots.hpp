#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace g2cayley {

/// Root a*alpha + b*beta of the rank-2 system, alpha short, beta long.
struct Root {
    int a = 0;
    int b = 0;

    friend bool operator==(Root x, Root y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(Root x, Root y) { return !(x == y); }
    friend bool operator<(Root x, Root y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
    Root operator-() const { return {-a, -b}; }
    int height() const { return a + b; }
    std::string str() const;
};

inline constexpr Root kAlpha{1, 0};
inline constexpr Root kBeta{0, 1};
inline constexpr Root kAlphaBeta{1, 1};
inline constexpr Root kTwoAlphaBeta{2, 1};
inline constexpr Root kThreeAlphaBeta{3, 1};
inline constexpr Root kThreeAlphaTwoBeta{3, 2};

/// The six positive roots in height order.
const std::array<Root, 6>& positive_roots();

/// Roots with a one-parameter subgroup realized in this library:
/// the six positive roots plus -alpha and -beta.
bool is_supported_root(Root r);
bool is_positive_root(Root r);

/// Exponents (p, q) of the character value of gamma(l1, l2) on the root
/// subgroup: conjugation scales the parameter by l1^p l2^q.
std::pair<int, int> root_character_exponents(Root r);

} // namespace g2cayley
