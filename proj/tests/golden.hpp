#pragma once

// Worked cube example: formula, seed and the full trace it must produce.

namespace sspsat::golden {

inline constexpr const char* kCubeExampleDimacs =
    "p cnf 4 5\n2 3 0\n1 -2 0\n-1 -2 3 0\n-3 4 0\n-3 -4 0\n";

inline constexpr const char* kCubeExampleSeed = "-2 -3";

inline constexpr const char* kCubeExampleTrace = R"(1 initialize -2 -3 0
2 nbhd -2 -3 0 clause C1 2 3 0 -> 2 -3 0 added -2 3 0 added
3 move-to-body -2 -3 0 clause C1 2 3 0
4 split 2 -3 0 on 1 -> -1 2 -3 0 added 1 2 -3 0 added
5 merge -1 2 -3 0 1 2 -3 0 pivot 1 -> 2 -3 0 learn C6 -2 3 0 from C2 1 -2 0 C3 -1 -2 3 0
6 nbhd 2 -3 0 clause C6 -2 3 0 -> -2 -3 0 covered 2 3 0 added
7 move-to-body 2 -3 0 clause C6 -2 3 0
8 split -2 3 0 on 4 -> -2 3 -4 0 added -2 3 4 0 added
9 merge -2 3 -4 0 -2 3 4 0 pivot 4 -> -2 3 0 learn C7 -3 0 from C4 -3 4 0 C5 -3 -4 0
10 nbhd -2 3 0 clause C7 -3 0 -> -2 -3 0 covered
11 move-to-body -2 3 0 clause C7 -3 0
12 nbhd 2 3 0 clause C7 -3 0 -> 2 -3 0 covered
13 move-to-body 2 3 0 clause C7 -3 0
14 finish UNSAT body 4 learned 2
)";

}  // namespace sspsat::golden
