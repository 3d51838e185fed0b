#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace tricross {

/// Integer Laurent polynomial in two variables (a, z).
///
/// Terms are kept sorted by (exponent of a, exponent of z) with no zero
/// coefficients, so structural equality is polynomial equality.
class LaurentPoly2 {
public:
    struct Term {
        int a = 0;
        int z = 0;
        std::int64_t coeff = 0;

        friend bool operator==(const Term&, const Term&) = default;
        friend auto operator<=>(const Term&, const Term&) = default;
    };

    LaurentPoly2() = default;

    static LaurentPoly2 constant(std::int64_t c) { return monomial(c, 0, 0); }

    static LaurentPoly2 monomial(std::int64_t c, int ea, int ez) {
        LaurentPoly2 p;
        if (c != 0) p.terms_.push_back({ea, ez, c});
        return p;
    }

    static LaurentPoly2 a_pow(int e) { return monomial(1, e, 0); }
    static LaurentPoly2 z_pow(int e) { return monomial(1, 0, e); }

    /// (a + a^-1) z^-1 - 1, the value of a split unknotted component.
    static const LaurentPoly2& delta() {
        static const LaurentPoly2 d = [] {
            LaurentPoly2 p;
            p.terms_ = {{-1, -1, 1}, {0, 0, -1}, {1, -1, 1}};
            return p;
        }();
        return d;
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    std::int64_t coeff(int ea, int ez) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{ea, ez, INT64_MIN},
                                   [](const Term& x, const Term& y) {
                                       return std::tie(x.a, x.z) < std::tie(y.a, y.z);
                                   });
        if (it != terms_.end() && it->a == ea && it->z == ez) return it->coeff;
        return 0;
    }

    LaurentPoly2& operator+=(const LaurentPoly2& o) { return *this = merge(*this, o, 1); }
    LaurentPoly2& operator-=(const LaurentPoly2& o) { return *this = merge(*this, o, -1); }

    friend LaurentPoly2 operator+(const LaurentPoly2& x, const LaurentPoly2& y) { return merge(x, y, 1); }
    friend LaurentPoly2 operator-(const LaurentPoly2& x, const LaurentPoly2& y) { return merge(x, y, -1); }
    friend LaurentPoly2 operator-(const LaurentPoly2& x) { return merge(LaurentPoly2{}, x, -1); }

    friend LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y) {
        if (x.is_zero() || y.is_zero()) return {};
        if (y.terms_.size() == 1) return x.times_monomial(y.terms_[0]);
        if (x.terms_.size() == 1) return y.times_monomial(x.terms_[0]);
        std::vector<Term> raw;
        raw.reserve(x.terms_.size() * y.terms_.size());
        for (const auto& s : x.terms_)
            for (const auto& t : y.terms_) raw.push_back({s.a + t.a, s.z + t.z, s.coeff * t.coeff});
        return from_unsorted(std::move(raw));
    }

    LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }

    /// Multiply by c * a^ea * z^ez.
    LaurentPoly2 shifted(int ea, int ez, std::int64_t c = 1) const {
        return times_monomial({ea, ez, c});
    }

    LaurentPoly2 pow(unsigned e) const {
        LaurentPoly2 result = constant(1);
        LaurentPoly2 base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    /// Substitute a -> a^-1.
    LaurentPoly2 mirrored() const {
        std::vector<Term> raw = terms_;
        for (auto& t : raw) t.a = -t.a;
        std::sort(raw.begin(), raw.end());
        LaurentPoly2 p;
        p.terms_ = std::move(raw);
        return p;
    }

    friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;
    friend auto operator<=>(const LaurentPoly2& x, const LaurentPoly2& y) {
        return x.terms_ <=> y.terms_;
    }

    /// Canonical text: "c a^i z^j" terms sorted by (i, j) joined by " + "; "0" when empty.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            if (!first) os << " + ";
            first = false;
            os << t.coeff << " a^" << t.a << " z^" << t.z;
        }
        return os.str();
    }

    /// Inverse of to_string().  Tolerates arbitrary term order and repeated terms.
    static LaurentPoly2 parse(std::string_view text) {
        std::vector<Term> raw;
        std::string s(text);
        if (s.find_first_not_of(" \t") == std::string::npos)
            throw std::invalid_argument("empty polynomial text");
        if (s == "0") return {};
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
        };
        auto read_int = [&]() -> long long {
            skip_ws();
            std::size_t used = 0;
            long long v = std::stoll(s.substr(pos), &used);
            pos += used;
            return v;
        };
        auto expect = [&](std::string_view tok) {
            skip_ws();
            if (s.compare(pos, tok.size(), tok) != 0)
                throw std::invalid_argument("malformed polynomial near position " + std::to_string(pos));
            pos += tok.size();
        };
        while (true) {
            Term t;
            t.coeff = read_int();
            expect("a^");
            t.a = static_cast<int>(read_int());
            expect("z^");
            t.z = static_cast<int>(read_int());
            raw.push_back(t);
            skip_ws();
            if (pos >= s.size()) break;
            expect("+");
        }
        return from_unsorted(std::move(raw));
    }

    /// Total degree span in a (max - min); 0 for constants and zero.
    int a_span() const {
        if (terms_.empty()) return 0;
        auto [lo, hi] = std::minmax_element(terms_.begin(), terms_.end(),
                                            [](const Term& x, const Term& y) { return x.a < y.a; });
        return hi->a - lo->a;
    }

private:
    std::vector<Term> terms_;

    LaurentPoly2 times_monomial(const Term& m) const {
        LaurentPoly2 p;
        if (m.coeff == 0) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.a + m.a, t.z + m.z, t.coeff * m.coeff});
        return p;
    }

    static LaurentPoly2 from_unsorted(std::vector<Term> raw) {
        std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) {
            return std::tie(x.a, x.z) < std::tie(y.a, y.z);
        });
        LaurentPoly2 p;
        for (const auto& t : raw) {
            if (!p.terms_.empty() && p.terms_.back().a == t.a && p.terms_.back().z == t.z) {
                p.terms_.back().coeff += t.coeff;
                if (p.terms_.back().coeff == 0) p.terms_.pop_back();
            } else if (t.coeff != 0) {
                p.terms_.push_back(t);
            }
        }
        return p;
    }

    static LaurentPoly2 merge(const LaurentPoly2& x, const LaurentPoly2& y, int sign) {
        LaurentPoly2 p;
        p.terms_.reserve(x.terms_.size() + y.terms_.size());
        auto i = x.terms_.begin();
        auto j = y.terms_.begin();
        while (i != x.terms_.end() || j != y.terms_.end()) {
            if (j == y.terms_.end() || (i != x.terms_.end() && std::tie(i->a, i->z) < std::tie(j->a, j->z))) {
                p.terms_.push_back(*i++);
            } else if (i == x.terms_.end() || std::tie(j->a, j->z) < std::tie(i->a, i->z)) {
                p.terms_.push_back({j->a, j->z, sign * j->coeff});
                ++j;
            } else {
                std::int64_t c = i->coeff + sign * j->coeff;
                if (c != 0) p.terms_.push_back({i->a, i->z, c});
                ++i;
                ++j;
            }
        }
        return p;
    }
};

inline LaurentPoly2 mirror_poly(const LaurentPoly2& p) { return p.mirrored(); }

}  // namespace tricross
