#pragma once

#include <string>

namespace parastat {

// Element (a1, a2) of Z2 x Z2. Addition is componentwise mod 2, the dot
// product a.b = a1 b1 + a2 b2 mod 2 drives the bracket sign (-1)^(a.b).
struct Grade {
    int a1 = 0;
    int a2 = 0;

    Grade() = default;
    Grade(int x, int y) : a1(x & 1), a2(y & 1) {}

    Grade operator+(const Grade &o) const { return Grade(a1 ^ o.a1, a2 ^ o.a2); }
    int dot(const Grade &o) const { return (a1 * o.a1 + a2 * o.a2) & 1; }
    // (-1)^(a.b)
    int bracket_sign(const Grade &o) const { return dot(o) ? -1 : 1; }

    bool operator==(const Grade &o) const { return a1 == o.a1 && a2 == o.a2; }
    bool operator!=(const Grade &o) const { return !(*this == o); }
    bool operator<(const Grade &o) const { return a1 != o.a1 ? a1 < o.a1 : a2 < o.a2; }

    std::string str() const {
        return "(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
    }
};

} // namespace parastat
