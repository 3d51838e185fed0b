#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tricross {

/// Thrown for malformed code text.  `position` is a byte offset into the input
/// (or npos when the problem is structural rather than lexical).
class ParseError : public std::runtime_error {
public:
    enum class Kind { syntax, arity, multiplicity };

    ParseError(Kind kind, std::size_t position, const std::string& what)
        : std::runtime_error(what + (position == npos ? std::string{} : " at position " + std::to_string(position))),
          kind_(kind), position_(position) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    Kind kind_;
    std::size_t position_;
};

struct PdCode {
    std::vector<std::array<int, 4>> crossings;

    std::size_t size() const noexcept { return crossings.size(); }
    friend bool operator==(const PdCode&, const PdCode&) = default;
};

enum class CrossingName { eX, eY };

struct SPdCrossing {
    CrossingName name = CrossingName::eX;
    std::array<int, 6> edges{};

    friend bool operator==(const SPdCrossing&, const SPdCrossing&) = default;
};

struct SPdCode {
    std::vector<SPdCrossing> crossings;

    std::size_t size() const noexcept { return crossings.size(); }
    friend bool operator==(const SPdCode&, const SPdCode&) = default;
};

struct StrandDecomposition {
    std::vector<std::vector<int>> components;

    std::size_t component_count() const noexcept { return components.size(); }
};

inline const char* to_string(CrossingName n) { return n == CrossingName::eX ? "eX" : "eY"; }

namespace detail {

class CodeLexer {
public:
    explicit CodeLexer(std::string_view text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(std::string_view tok) {
        skip_ws();
        return s_.substr(pos_, tok.size()) == tok;
    }

    void expect(std::string_view tok) {
        if (!peek(tok))
            throw ParseError(ParseError::Kind::syntax, pos_, "expected '" + std::string(tok) + "'");
        pos_ += tok.size();
    }

    int integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(ParseError::Kind::syntax, start, "expected a positive integer");
        long long v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            v = v * 10 + (s_[i] - '0');
            if (v > 1'000'000'000) throw ParseError(ParseError::Kind::syntax, start, "label too large");
        }
        if (v == 0) throw ParseError(ParseError::Kind::syntax, start, "labels must be positive");
        return static_cast<int>(v);
    }

    void finish() {
        skip_ws();
        if (pos_ != s_.size()) throw ParseError(ParseError::Kind::syntax, pos_, "trailing characters");
    }

    std::size_t pos() const noexcept { return pos_; }

    // Bracketed comma-separated integer list; arity is checked by the caller
    // so that the error can say which arity was expected.
    std::vector<int> int_list() {
        expect("[");
        std::vector<int> out;
        out.push_back(integer());
        while (peek(",")) {
            ++pos_;
            out.push_back(integer());
        }
        expect("]");
        return out;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

template <std::size_t N>
void check_multiplicity(const std::vector<std::array<int, N>>& tuples) {
    std::map<int, int> count;
    for (const auto& t : tuples)
        for (int e : t) ++count[e];
    std::vector<int> bad;
    for (auto [label, k] : count)
        if (k != 2) bad.push_back(label);
    if (!bad.empty()) {
        std::string msg = "labels not occurring exactly twice:";
        for (int b : bad) msg += " " + std::to_string(b);
        throw ParseError(ParseError::Kind::multiplicity, ParseError::npos, msg);
    }
}

template <std::size_t N>
std::vector<std::array<int, N>> tuples_of(const SPdCode& c) {
    std::vector<std::array<int, N>> out;
    for (const auto& x : c.crossings) out.push_back(x.edges);
    return out;
}

}  // namespace detail

inline void validate(const SPdCode& code) {
    std::vector<std::array<int, 6>> t;
    for (const auto& x : code.crossings) {
        for (int e : x.edges)
            if (e <= 0) throw ParseError(ParseError::Kind::syntax, ParseError::npos, "labels must be positive");
        t.push_back(x.edges);
    }
    detail::check_multiplicity(t);
}

inline void validate(const PdCode& code) {
    for (const auto& x : code.crossings)
        for (int e : x)
            if (e <= 0) throw ParseError(ParseError::Kind::syntax, ParseError::npos, "labels must be positive");
    detail::check_multiplicity(code.crossings);
}

inline SPdCode parse_spd(std::string_view text) {
    detail::CodeLexer lx(text);
    SPdCode code;
    lx.expect("sPD");
    lx.expect("[");
    do {
        CrossingName name;
        if (lx.peek("eX")) {
            name = CrossingName::eX;
        } else if (lx.peek("eY")) {
            name = CrossingName::eY;
        } else {
            throw ParseError(ParseError::Kind::syntax, lx.pos(), "expected eX or eY");
        }
        lx.expect(name == CrossingName::eX ? "eX" : "eY");
        std::size_t at = lx.pos();
        auto v = lx.int_list();
        if (v.size() != 6)
            throw ParseError(ParseError::Kind::arity, at,
                             "triple crossing needs 6 labels, got " + std::to_string(v.size()));
        SPdCrossing x;
        x.name = name;
        std::copy(v.begin(), v.end(), x.edges.begin());
        code.crossings.push_back(x);
        if (!lx.peek(",")) break;
        lx.expect(",");
    } while (true);
    lx.expect("]");
    lx.finish();
    validate(code);
    return code;
}

inline PdCode parse_pd(std::string_view text) {
    detail::CodeLexer lx(text);
    PdCode code;
    lx.expect("PD");
    lx.expect("[");
    do {
        lx.expect("X");
        std::size_t at = lx.pos();
        auto v = lx.int_list();
        if (v.size() != 4)
            throw ParseError(ParseError::Kind::arity, at,
                             "double crossing needs 4 labels, got " + std::to_string(v.size()));
        code.crossings.push_back({v[0], v[1], v[2], v[3]});
        if (lx.peek(",")) lx.expect(",");
    } while (lx.peek("X"));
    lx.expect("]");
    lx.finish();
    validate(code);
    return code;
}

inline std::string serialize(const SPdCode& code) {
    std::ostringstream os;
    os << "sPD[";
    for (std::size_t i = 0; i < code.crossings.size(); ++i) {
        if (i) os << ',';
        os << to_string(code.crossings[i].name) << '[';
        for (int k = 0; k < 6; ++k) os << (k ? "," : "") << code.crossings[i].edges[k];
        os << ']';
    }
    os << ']';
    return os.str();
}

inline std::string serialize(const PdCode& code) {
    std::ostringstream os;
    os << "PD[";
    for (std::size_t i = 0; i < code.crossings.size(); ++i) {
        if (i) os << ',';
        os << "X[";
        for (int k = 0; k < 4; ++k) os << (k ? "," : "") << code.crossings[i][k];
        os << ']';
    }
    os << ']';
    return os.str();
}

/// Where each label sits: the two (crossing, position) ends of every edge.
template <std::size_t N>
struct EdgeEnds {
    std::map<int, std::array<std::pair<int, int>, 2>> ends;

    explicit EdgeEnds(const std::vector<std::array<int, N>>& tuples) {
        std::map<int, int> seen;
        for (int c = 0; c < static_cast<int>(tuples.size()); ++c)
            for (int p = 0; p < static_cast<int>(N); ++p) {
                int e = tuples[c][p];
                ends[e][seen[e]++] = {c, p};
            }
    }

    std::pair<int, int> other(int label, std::pair<int, int> end) const {
        const auto& two = ends.at(label);
        return two[0] == end ? two[1] : two[0];
    }
};

/// Per-crossing parity of the incoming positions under the natural
/// orientation (in/out alternating around every crossing).  Within every
/// connected piece the first crossing reached is fixed with parity `seed`.
/// Returns false when no consistent assignment exists.
template <std::size_t N>
bool natural_parities(const std::vector<std::array<int, N>>& t, std::vector<int>& parity) {
    EdgeEnds<N> ends(t);
    const int n = static_cast<int>(t.size());
    parity.assign(n, -1);
    for (int root = 0; root < n; ++root) {
        if (parity[root] >= 0) continue;
        parity[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int p = 0; p < static_cast<int>(N); ++p) {
                auto [c2, p2] = ends.other(t[c][p], {c, p});
                // one end of an edge is incoming, the other outgoing
                bool in_here = (p % 2) == parity[c];
                int want = in_here ? 1 - (p2 % 2) : (p2 % 2);
                if (parity[c2] < 0) {
                    parity[c2] = want;
                    stack.push_back(c2);
                } else if (parity[c2] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace detail {

// Strand traversal shared by the 4- and 6-valent codes: the strand through
// position p leaves through p + N/2.
template <std::size_t N>
std::vector<std::vector<int>> strand_cycles(const std::vector<std::array<int, N>>& t) {
    EdgeEnds<N> ends(t);
    std::map<int, bool> used;
    std::vector<std::vector<int>> out;
    for (const auto& [label, two] : ends.ends) {
        if (used[label]) continue;
        // walk from the end two[0] through its crossing, then to the far end
        std::vector<int> cyc;
        int e = label;
        std::pair<int, int> at = two[0];
        while (!used[e]) {
            used[e] = true;
            cyc.push_back(e);
            auto far = ends.other(e, at);
            int q = (far.second + static_cast<int>(N) / 2) % static_cast<int>(N);
            e = t[far.first][q];
            at = {far.first, q};
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

inline std::vector<int> canonical_cycle(std::vector<int> cyc) {
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
    if (cyc.size() > 2 && cyc[cyc.size() - 1] < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
    return cyc;
}

}  // namespace detail

/// Partition of the labels into closed strands.  Each cycle starts at its
/// smallest label and continues towards the smaller neighbour; cycles are
/// ordered by their first label.
inline StrandDecomposition components(const SPdCode& code) {
    StrandDecomposition d;
    for (auto& cyc : detail::strand_cycles(detail::tuples_of<6>(code)))
        d.components.push_back(detail::canonical_cycle(std::move(cyc)));
    std::sort(d.components.begin(), d.components.end());
    return d;
}

inline StrandDecomposition components(const PdCode& code) {
    StrandDecomposition d;
    for (auto& cyc : detail::strand_cycles(code.crossings))
        d.components.push_back(detail::canonical_cycle(std::move(cyc)));
    std::sort(d.components.begin(), d.components.end());
    return d;
}

namespace detail {

// Connected pieces of the crossing graph.
template <std::size_t N>
std::vector<int> crossing_pieces(const std::vector<std::array<int, N>>& t, const EdgeEnds<N>& ends, int& count) {
    const int n = static_cast<int>(t.size());
    std::vector<int> piece(n, -1);
    count = 0;
    for (int r = 0; r < n; ++r) {
        if (piece[r] >= 0) continue;
        std::vector<int> st{r};
        piece[r] = count;
        while (!st.empty()) {
            int c = st.back();
            st.pop_back();
            for (int p = 0; p < static_cast<int>(N); ++p) {
                int c2 = ends.other(t[c][p], {c, p}).first;
                if (piece[c2] < 0) {
                    piece[c2] = count;
                    st.push_back(c2);
                }
            }
        }
        ++count;
    }
    return piece;
}

// Relabel 1..E walking strands in the direction given by is_in(c, p), taking
// strands in order of their smallest original label.
template <std::size_t N, typename InFn>
std::vector<std::array<int, N>> relabel_along(const std::vector<std::array<int, N>>& t, const EdgeEnds<N>& ends,
                                              InFn is_in) {
    std::map<int, int> relabel;
    int next = 1;
    for (const auto& [label, two] : ends.ends) {
        int e = label;
        while (!relabel.count(e)) {
            relabel[e] = next++;
            const auto& ee = ends.ends.at(e);
            auto head = is_in(ee[0].first, ee[0].second) ? ee[0] : ee[1];
            int q = (head.second + static_cast<int>(N) / 2) % static_cast<int>(N);
            e = t[head.first][q];
        }
    }
    auto out = t;
    for (auto& tup : out)
        for (auto& e : tup) e = relabel.at(e);
    return out;
}

}  // namespace detail

/// Relabel 1..3n increasing along the natural orientation.  In each connected
/// piece the sign of the orientation makes the first occurrence (reading
/// order) of the piece's smallest label an incoming end; strands are numbered
/// in order of their smallest original label.
inline SPdCode renumber(const SPdCode& code) {
    validate(code);
    auto t = detail::tuples_of<6>(code);
    std::vector<int> parity;
    if (!natural_parities(t, parity))
        throw std::invalid_argument("code admits no in/out alternating orientation");
    EdgeEnds<6> ends(t);
    int pieces = 0;
    auto piece = detail::crossing_pieces(t, ends, pieces);
    std::vector<int> flip(pieces, -1);
    for (const auto& [label, two] : ends.ends) {
        int pc = piece[two[0].first];
        if (flip[pc] >= 0) continue;
        auto first = std::min(two[0], two[1]);
        flip[pc] = (first.second % 2) == parity[first.first] ? 0 : 1;
    }
    auto is_in = [&](int c, int p) { return ((p % 2) == parity[c]) != (flip[piece[c]] == 1); };
    auto r = detail::relabel_along(t, ends, is_in);
    SPdCode out = code;
    for (std::size_t i = 0; i < r.size(); ++i) out.crossings[i].edges = r[i];
    return out;
}

/// Classical codes have no alternating orientation; each strand is walked
/// so that the first occurrence of its smallest label is the end it enters.
inline PdCode renumber(const PdCode& code) {
    validate(code);
    const auto& t = code.crossings;
    EdgeEnds<4> ends(t);
    // decide the head of every edge by walking each strand once
    std::map<std::pair<int, int>, bool> incoming;
    for (const auto& [label, two] : ends.ends) {
        if (incoming.count(two[0])) continue;
        auto head = std::min(two[0], two[1]);
        int e = label;
        while (!incoming.count(head)) {
            auto tail = ends.other(e, head);
            incoming[head] = true;
            incoming[tail] = false;
            int q = (head.second + 2) % 4;
            e = t[head.first][q];
            head = ends.other(e, {head.first, q});
        }
    }
    return PdCode{detail::relabel_along(t, ends, [&](int c, int p) { return incoming.at({c, p}); })};
}

/// Rotate a tuple left by k: result[i] = t[(i + k) % N].
template <typename T, std::size_t N>
std::array<T, N> rotate_left(const std::array<T, N>& t, int k) {
    std::array<T, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = t[(i + static_cast<std::size_t>(((k % static_cast<int>(N)) + N))) % N];
    return r;
}

}  // namespace tricross
