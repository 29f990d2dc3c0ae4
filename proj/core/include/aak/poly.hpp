#pragma once
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace aak {

// Sparse Laurent polynomial in one variable A: exponent -> coefficient.
// Ordered map so iteration is by increasing exponent.
using Poly = std::map<int, long long>;

inline void poly_add_term(Poly& p, int e, long long c) {
    if (c == 0) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly out = a;
    for (auto& [e, c] : b) poly_add_term(out, e, c);
    return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) poly_add_term(out, ea + eb, ca * cb);
    return out;
}

// Multiply by c * A^e in place.
inline Poly poly_shift(const Poly& a, int e, long long c) {
    Poly out;
    for (auto& [ea, ca] : a) poly_add_term(out, ea + e, ca * c);
    return out;
}

// (-A^2 - A^-2)^k, the circle factor.
inline Poly delta_pow(int k) {
    Poly out{{0, 1}};
    for (int i = 0; i < k; ++i) {
        Poly nxt;
        for (auto& [e, c] : out) {
            poly_add_term(nxt, e + 2, -c);
            poly_add_term(nxt, e - 2, -c);
        }
        out = nxt;
    }
    return out;
}

inline bool poly_is_one(const Poly& p) {
    return p.size() == 1 && p.begin()->first == 0 && p.begin()->second == 1;
}

// Render as "c*A^e" terms joined by " + " in increasing exponent order.
inline std::string poly_to_string(const Poly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : p) {
        if (!first) os << " + ";
        first = false;
        os << c << "*A^" << e;
    }
    return os.str();
}

}  // namespace aak
