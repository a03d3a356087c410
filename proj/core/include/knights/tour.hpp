#pragma once

#include <vector>

#include "knights/board.hpp"

namespace knights {

// A knight's tour. A closed tour visits every square exactly once and
// returns to its start square: jumps has length m*n, or length 0 on a
// single-square board (loops are never used to close a trivial tour).
// An open tour visits every square once without returning: length m*n - 1.
// Repeating an edge id is invalid either way, which is what makes two-square
// boards interesting: their closed tours must use two distinct parallel edges.
struct Tour {
    BoardSpec spec;
    Square start;
    std::vector<DirectedJump> jumps;
    bool closed = true;

    friend bool operator==(const Tour &, const Tour &) = default;
};

// throws InvalidTour if any of the above is violated
void validate_tour(const Tour &tour);

bool is_valid_tour(const Tour &tour);

// squares in visit order: m*n entries for a closed tour (the return to start
// is not repeated), jumps+1 entries for an open tour, 1 for the empty tour
std::vector<Square> visit_order(const Tour &tour);

// the same closed cycle re-based to begin at new_start
Tour rotate_tour(const Tour &tour, Square new_start);

// the same tour walked backwards; an open tour's start becomes its old end
Tour reverse_tour(const Tour &tour);

// swap the roles of a and b; defined for rectangles and tori, where the
// transposed board has the same identifications
Tour transpose_tour(const Tour &tour);

// reinterpret the tour on a board with more identifications (Regular ->
// Cylinder or Torus, Cylinder -> Torus); the jumps are unchanged
Tour embed_tour(const Tour &tour, Topology target);

} // namespace knights
