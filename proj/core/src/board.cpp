#include "knights/board.hpp"

#include "knights/errors.hpp"

namespace knights {

namespace {

// remainder in [0, k)
int mod_floor(int v, int k) {
    int r = v % k;
    return r < 0 ? r + k : r;
}

bool is_knight_pair(KnightPair p) {
    int ax = p.x < 0 ? -p.x : p.x;
    int ay = p.y < 0 ? -p.y : p.y;
    return (ax == 1 && ay == 2) || (ax == 2 && ay == 1);
}

bool jump_stays_on(const BoardSpec &spec, Square from, KnightPair p) {
    if (!spec.wraps_a()) {
        int a = from.a + p.x;
        if (a < 0 || a >= spec.m) return false;
    }
    if (!spec.wraps_b()) {
        int b = from.b + p.y;
        if (b < 0 || b >= spec.n) return false;
    }
    return true;
}

} // namespace

const std::array<KnightPair, 8> &knight_pairs() {
    static const std::array<KnightPair, 8> pairs = {
        {{-2, -1}, {-2, 1}, {-1, -2}, {-1, 2}, {1, -2}, {1, 2}, {2, -1}, {2, 1}}};
    return pairs;
}

bool on_board(const BoardSpec &spec, Square sq) {
    return sq.a >= 0 && sq.a < spec.m && sq.b >= 0 && sq.b < spec.n;
}

std::vector<Square> all_squares(const BoardSpec &spec) {
    std::vector<Square> out;
    out.reserve(static_cast<size_t>(spec.square_count()));
    for (int a = 0; a < spec.m; ++a)
        for (int b = 0; b < spec.n; ++b) out.push_back({a, b});
    return out;
}

Square apply_jump(const BoardSpec &spec, const DirectedJump &jump) {
    if (!is_knight_pair(jump.pair)) throw InvalidJump("pair is not a knight displacement");
    if (!on_board(spec, jump.from)) throw InvalidJump("source square is off the board");
    if (!jump_stays_on(spec, jump.from, jump.pair)) throw InvalidJump("jump leaves the board");
    int a = jump.from.a + jump.pair.x;
    int b = jump.from.b + jump.pair.y;
    if (spec.wraps_a()) a = mod_floor(a, spec.m);
    if (spec.wraps_b()) b = mod_floor(b, spec.n);
    return {a, b};
}

std::vector<DirectedJump> neighbors(const BoardSpec &spec, Square from) {
    if (!on_board(spec, from)) throw InvalidJump("source square is off the board");
    std::vector<DirectedJump> out;
    out.reserve(8);
    for (KnightPair p : knight_pairs())
        if (jump_stays_on(spec, from, p)) out.push_back({from, p});
    return out;
}

EdgeId canonical_edge(const BoardSpec &spec, const DirectedJump &jump) {
    Square to = apply_jump(spec, jump);
    EdgeId fwd{jump.from, jump.pair};
    EdgeId rev{to, -jump.pair};
    return fwd < rev ? fwd : rev;
}

long long edge_count(const BoardSpec &spec) {
    long long directed = 0;
    for (Square sq : all_squares(spec)) directed += static_cast<long long>(neighbors(spec, sq).size());
    return directed / 2;
}

} // namespace knights
