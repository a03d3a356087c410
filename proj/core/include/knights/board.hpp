#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

namespace knights {

enum class Topology { Regular, Cylinder, Torus };

// Board of m columns and n rows. Coordinate a runs over columns [0, m),
// coordinate b over rows [0, n). A cylinder identifies b modulo n; a torus
// additionally identifies a modulo m. Loops and parallel edges that the
// identifications create are kept as distinct edges.
struct BoardSpec {
    Topology topology = Topology::Regular;
    int m = 1;
    int n = 1;

    friend auto operator<=>(const BoardSpec &, const BoardSpec &) = default;

    long long square_count() const { return static_cast<long long>(m) * n; }
    bool wraps_a() const { return topology == Topology::Torus; }
    bool wraps_b() const { return topology != Topology::Regular; }
};

struct Square {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const Square &, const Square &) = default;
};

// knight displacement; x moves a, y moves b
struct KnightPair {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const KnightPair &, const KnightPair &) = default;
    KnightPair operator-() const { return {-x, -y}; }
};

struct DirectedJump {
    Square from;
    KnightPair pair;

    friend auto operator<=>(const DirectedJump &, const DirectedJump &) = default;
};

// Name of an undirected edge: of the two directed readings (from, pair) and
// (to, -pair), the lexicographically smaller under (from.a, from.b, pair.x,
// pair.y). Distinct parallel edges between the same squares get distinct ids.
struct EdgeId {
    Square from;
    KnightPair pair;

    friend auto operator<=>(const EdgeId &, const EdgeId &) = default;
};

// the eight displacements, lexicographically ordered
const std::array<KnightPair, 8> &knight_pairs();

bool on_board(const BoardSpec &spec, Square sq);

// squares in lexicographic (a, b) order
std::vector<Square> all_squares(const BoardSpec &spec);

// Destination square, wrapping identified coordinates into range.
// Throws InvalidJump if the pair is not a knight displacement, the source is
// off the board, or a non-identified coordinate leaves its range.
Square apply_jump(const BoardSpec &spec, const DirectedJump &jump);

// valid jumps out of a square, in knight_pairs() order
std::vector<DirectedJump> neighbors(const BoardSpec &spec, Square from);

EdgeId canonical_edge(const BoardSpec &spec, const DirectedJump &jump);

// number of undirected edges: every edge, loops included, has exactly two
// directed readings, so this is half the count of valid directed jumps
long long edge_count(const BoardSpec &spec);

} // namespace knights

template <> struct std::hash<knights::Square> {
    size_t operator()(const knights::Square &sq) const noexcept {
        return std::hash<long long>()((static_cast<long long>(sq.a) << 32) ^ static_cast<unsigned>(sq.b));
    }
};

template <> struct std::hash<knights::EdgeId> {
    size_t operator()(const knights::EdgeId &e) const noexcept {
        size_t h = std::hash<knights::Square>()(e.from);
        size_t k = std::hash<long long>()((static_cast<long long>(e.pair.x) << 32) ^ static_cast<unsigned>(e.pair.y));
        return h ^ (k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};
