#pragma once

#include <vector>
#include <string>

#include "hforge/sign_matrix.hpp"
#include "hforge/io.hpp"

namespace fixtures {

// Regular Hadamard matrix of order 36 with |Aut| = 40320 on its 2-design.
inline const std::vector<std::string> h1_rows = {
    "+++--------+-+-+---+-+----+-+++-+++-",
    "+++--------+-+-+--+-+-++++-+---+---+",
    "+++------++-+-+-++-+-+----++---+---+",
    "---+++---++--+-+--+-++----++---+-++-",
    "---+++-----++-++---+--++--++--+-+--+",
    "---+++-----+-+--++-+-+--++--++-+---+",
    "------++++-+++----++----+-++-+-++---",
    "------+++-++---++----++--++---++-+-+",
    "------+++----+++-+-+++-+---++-----++",
    "--++--+--++-++----++-+++-+--+-+-----",
    "--++---+-++----++------++--+++--++-+",
    "++--++++---++---+-+--+-+---++----+--",
    "--+-+-+--+-++-+-----+----+--+--+++++",
    "++-+-++-++---+---+-----+-++-----++-+",
    "--+-+---+---+-++-++--+-++++--+---+--",
    "++-++--++-+---++--++-----+--+--++---",
    "--+--+-+--++----+++++--+-++-----+-+-",
    "--+--+--+----++-+++---+----++-++++--",
    "-+-+--+--+-+--+++++-+---+-+-+-+-----",
    "+-+-+++-++-----++--+---++-----++--+-",
    "-+-+----+---+---+-+-++-+-----++++-++",
    "+-++-+-+++-+--+-----++---+-+-++-----",
    "-+--+--+-+-------+----++-+++++++--+-",
    "-+--+---++++-++-+--++-++-----+---+--",
    "-+---++---+---+---++----++-+-++--+++",
    "-+---+-+-+--+++++----++-++------+-+-",
    "+-+++-++-----++-+-+---+---+--+----++",
    "+----+--+++++--+-++---+-----++----++",
    "+----++---+---+-----+++++-+-++-++---",
    "-++++-+-+-++-----+---++-+--+----+-+-",
    "-+++-+++----+--+-+-++-+------+-+-+--",
    "+---+-+---+-++-+++--+----+-+-++-+---",
    "+---+--+-+-------++++++-+-----+-++-+",
    "+--+----+---+---+--++-+-+++++----++-",
    "-++-++-++-+-++------+---+-+-+-+----+",
    "+--+---+--+++++--+-----++-----++-++-",
};

inline hforge::SignMatrix h1() { return hforge::sign_from_rows(h1_rows); }

// 15x15 orbit matrix of a 2-(35,17,8) design under an order-3 automorphism
// with 5 fixed points/blocks and 10 orbits of length 3.
inline const int a1_matrix[15][15] = {
    {1, 1, 1, 1, 1, 3, 3, 3, 3, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 1, 1, 3, 0, 0, 0, 3, 3, 3, 0, 0, 0},
    {1, 1, 1, 1, 1, 0, 3, 0, 0, 3, 0, 0, 3, 3, 0},
    {1, 1, 1, 1, 1, 0, 0, 3, 0, 0, 3, 0, 3, 0, 3},
    {1, 1, 1, 1, 1, 0, 0, 0, 3, 0, 0, 3, 0, 3, 3},
    {1, 1, 0, 0, 0, 3, 1, 1, 1, 1, 1, 1, 2, 2, 2},
    {1, 0, 1, 0, 0, 1, 3, 1, 1, 1, 2, 2, 1, 1, 2},
    {1, 0, 0, 1, 0, 1, 1, 3, 1, 2, 1, 2, 1, 2, 1},
    {1, 0, 0, 0, 1, 1, 1, 1, 3, 2, 2, 1, 2, 1, 1},
    {0, 1, 1, 0, 0, 1, 1, 2, 2, 3, 1, 1, 1, 1, 2},
    {0, 1, 0, 1, 0, 1, 2, 1, 2, 1, 3, 1, 1, 2, 1},
    {0, 1, 0, 0, 1, 1, 2, 2, 1, 1, 1, 3, 2, 1, 1},
    {0, 0, 1, 1, 0, 2, 1, 1, 2, 1, 1, 2, 3, 1, 1},
    {0, 0, 1, 0, 1, 2, 1, 2, 1, 1, 2, 1, 1, 3, 1},
    {0, 0, 0, 1, 1, 2, 2, 1, 1, 2, 1, 1, 1, 1, 3},
};

// A Hadamard matrix of order 12.
inline const std::vector<std::string> h12_rows = {
    "++++++++++++",
    "-++-+++---+-",
    "--++-+++---+",
    "-+-++-+++---",
    "--+-++-+++--",
    "---+-++-+++-",
    "----+-++-+++",
    "-+---+-++-++",
    "-++---+-++-+",
    "-+++---+-++-",
    "--+++---+-++",
    "-+-+++---+-+",
};

inline hforge::SignMatrix h12() { return hforge::sign_from_rows(h12_rows); }

// Sylvester doubling: orders 1, 2, 4, 8, 16, ...
inline hforge::SignMatrix sylvester(std::size_t n) {
    hforge::SignMatrix m(1, 1);
    m.set(0, 0, +1);
    std::size_t cur = 1;
    while (cur < n) {
        hforge::SignMatrix d(2 * cur, 2 * cur);
        for (std::size_t i = 0; i < cur; ++i)
            for (std::size_t j = 0; j < cur; ++j) {
                int v = m.get(i, j);
                d.set(i, j, v);
                d.set(i, j + cur, v);
                d.set(i + cur, j, v);
                d.set(i + cur, j + cur, -v);
            }
        m = d;
        cur *= 2;
    }
    return m;
}

} // namespace fixtures
