#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zerogap {

/// Allowed integer coefficients for the power-series class.  The constant
/// term is always fixed to 1; `allowed` constrains every later
/// coefficient.  Height is the largest absolute allowed value.
struct CoeffSet {
    std::vector<int> allowed;  // ascending, contains 0
    int height = 1;
    std::string name;

    bool contains(int c) const {
        return std::binary_search(allowed.begin(), allowed.end(), c);
    }

    /// {-1, 0, 1}, height 1.
    static CoeffSet b1() { return {{-1, 0, 1}, 1, "b1"}; }
    /// {-2, -1, 0, 1, 2}, height 2.
    static CoeffSet b2() { return {{-2, -1, 0, 1, 2}, 2, "b2"}; }

    static CoeffSet by_name(const std::string& n) {
        if (n == "b1") return b1();
        if (n == "b2") return b2();
        throw std::invalid_argument("unknown coefficient set: " + n);
    }
};

/// Integer-coefficient prefix of a power series in the class.  c[0] is the
/// constant term (always 1); the degree is syntactic, i.e. trailing zeros
/// count.
struct Poly {
    std::vector<int> c;

    Poly() : c{1} {}
    explicit Poly(std::vector<int> coeffs) : c(std::move(coeffs)) {
        if (c.empty() || c[0] != 1) throw std::invalid_argument("leading coefficient must be 1");
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }

    int coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0;
    }

    void validate(const CoeffSet& set) const {
        if (c.empty() || c[0] != 1) throw std::invalid_argument("leading coefficient must be 1");
        for (std::size_t i = 1; i < c.size(); ++i)
            if (!set.contains(c[i]))
                throw std::invalid_argument("coefficient " + std::to_string(c[i]) +
                                            " at index " + std::to_string(i) +
                                            " outside coefficient set " + set.name);
    }

    bool operator==(const Poly& o) const { return c == o.c; }
};

namespace detail {
inline bool is_compact_char(char ch) { return (ch >= '0' && ch <= '9') || ch == 'o'; }
}

/// Parse a coefficient string.  Two grammars:
///   compact:  one symbol per coefficient, digits for nonnegative values
///             and 'o' for -1 ("1ooo1" -> [1,-1,-1,-1,1]);
///   list:     comma-separated integers, optionally wrapped in (), [] or
///             {} ("(1,-2,-1)" -> [1,-2,-1]); needed for heights > 1
///             where negative values other than -1 occur.
/// Every coefficient must belong to `set` and the leading one must be 1.
inline Poly parse_coeffs(const std::string& text, const CoeffSet& set) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty coefficient string");

    std::vector<int> out;
    const bool list_form = s.find(',') != std::string::npos || s.front() == '(' ||
                           s.front() == '[' || s.front() == '{';
    if (list_form) {
        if ((s.front() == '(' && s.back() == ')') || (s.front() == '[' && s.back() == ']') ||
            (s.front() == '{' && s.back() == '}'))
            s = s.substr(1, s.size() - 2);
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t comma = s.find(',', pos);
            std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty()) throw std::invalid_argument("empty coefficient entry");
            std::size_t used = 0;
            int val;
            try {
                val = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("invalid coefficient entry: " + tok);
            }
            if (used != tok.size()) throw std::invalid_argument("invalid coefficient entry: " + tok);
            out.push_back(val);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        for (char ch : s) {
            if (!detail::is_compact_char(ch))
                throw std::invalid_argument(std::string("invalid character '") + ch +
                                            "' in coefficient string");
            out.push_back(ch == 'o' ? -1 : ch - '0');
        }
    }

    if (out.empty() || out[0] != 1) throw std::invalid_argument("missing leading 1");
    Poly p{std::move(out)};
    p.validate(set);
    return p;
}

/// Inverse of parse_coeffs: compact form when all coefficients fit it,
/// list form otherwise.
inline std::string format_coeffs(const Poly& p) {
    bool compact = true;
    for (int v : p.c)
        if (v < -1 || v > 9) compact = false;
    std::string s;
    if (compact) {
        for (int v : p.c) s.push_back(v == -1 ? 'o' : static_cast<char>('0' + v));
    } else {
        s.push_back('(');
        for (std::size_t i = 0; i < p.c.size(); ++i) {
            if (i) s.push_back(',');
            s += std::to_string(p.c[i]);
        }
        s.push_back(')');
    }
    return s;
}

}  // namespace zerogap
