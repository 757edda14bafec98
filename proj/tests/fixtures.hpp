#pragma once

#include "longcycle/cycle.hpp"
#include "longcycle/gen.hpp"

// Hand-built plane graphs whose base cycle 0..c-1 reaches a discharging
// fixpoint with known violating faces. Off-cycle vertices come last; every
// vertex has degree >= 3 so the catalog's forced-edge arguments apply.

namespace fixtures {

// 8-cycle, a=8 inside (adj 1,3,5), b=9 outside (adj 2,4,7), chord 0-6.
// Violating faces: three pairwise-shifted 2-faces (case 2b) and a 4-face
// with a 3-face across an outer edge (case 4g).
inline longcycle::EmbeddedGraph two_face_pair() {
  return longcycle::from_faces(10, {{1, 2, 3, 8},
                                    {8, 3, 4, 5},
                                    {6, 7, 0},
                                    {0, 1, 8, 5, 6},
                                    {2, 9, 4, 3},
                                    {4, 9, 7, 6, 5},
                                    {7, 9, 2, 1, 0}});
}

// 8-cycle, a=8 inside (adj 1,3,5), b=9 outside (adj 1,4,6), chords 2-4, 5-7,
// 0-6. Violating faces: a 2-face against a 3-face across its middle C-edge
// (case 2c), shifted 2-face pairs (2b), the same shape seen from the 3-face
// (3-2c) and a 4-face sending across its middle (4f).
inline longcycle::EmbeddedGraph two_face_vs_three_face() {
  return longcycle::from_faces(10, {{1, 2, 3, 8},
                                    {8, 3, 4, 5},
                                    {5, 6, 7},
                                    {8, 5, 7, 0, 1},
                                    {4, 3, 2},
                                    {2, 1, 9, 4},
                                    {9, 6, 5, 4},
                                    {0, 7, 6},
                                    {9, 1, 0, 6}});
}

// 10-cycle, a=10 inside (adj 1,4,7), b=11 outside (adj 0,2,8), d=12 outside
// (adj 3,5,7), chords 9-1 and 4-6. Violating faces: a 3-face flanked by two
// 2-faces (case 3a), a 4-face with the middle 2-face pair (4a), and 3-face /
// 2-face middle shapes (3-2c).
inline longcycle::EmbeddedGraph three_face_flanked() {
  return longcycle::from_faces(13, {{1, 2, 3, 4, 10},
                                    {4, 5, 6},
                                    {10, 4, 6, 7},
                                    {10, 7, 8, 9, 1},
                                    {9, 0, 1},
                                    {2, 1, 0, 11},
                                    {0, 9, 8, 11},
                                    {5, 4, 3, 12},
                                    {12, 7, 6, 5},
                                    {2, 11, 8, 7, 12, 3}});
}

// 12-cycle, a=12 inside (adj 0,5,8), b=13 outside (adj 1,3,11), d=14 outside
// (adj 3,6,8), chords 2-5 and 5-7. The violating 5-face sends to a 3-face
// across the 3-face's outermost middle edge (case 5e); the inside 3-face and
// its 2-face partner replay the 2c shapes.
inline longcycle::EmbeddedGraph five_face_sender() {
  return longcycle::from_faces(15, {{2, 3, 4, 5},
                                    {0, 1, 2, 5, 12},
                                    {5, 6, 7},
                                    {12, 5, 7, 8},
                                    {12, 8, 9, 10, 11, 0},
                                    {3, 2, 1, 13},
                                    {11, 13, 1, 0},
                                    {6, 5, 4, 3, 14},
                                    {3, 13, 11, 10, 9, 8, 14},
                                    {14, 8, 7, 6}});
}

// 14-cycle, a=14 inside (adj 0,6,10), b=15 outside (adj 0,2,11), d=16 outside
// (adj 2,5,9), g=17 outside (adj 5,7,9), chords 1-6, 6-8, 10-12, 10-13. The
// violating 6-face has a middle 3-face and 2-faces on both flanks (case 6c);
// a 4-face with the middle 2-face pair gives another 4a instance.
inline longcycle::EmbeddedGraph six_face_sender() {
  return longcycle::from_faces(18, {{1, 2, 3, 4, 5, 6},
                                    {0, 1, 6, 14},
                                    {6, 7, 8},
                                    {14, 6, 8, 9, 10},
                                    {10, 11, 12},
                                    {10, 12, 13},
                                    {14, 10, 13, 0},
                                    {2, 1, 0, 15},
                                    {5, 4, 3, 2, 16},
                                    {7, 6, 5, 17},
                                    {17, 9, 8, 7},
                                    {16, 9, 17, 5},
                                    {16, 2, 15, 11, 10, 9},
                                    {11, 15, 0, 13, 12}});
}

// 16-cycle, a=16 inside (adj 0,7,11), g=17 outside (adj 15,1,13), h=18
// outside (adj 1,3,12), b=19 outside (adj 3,5,11), d=20 outside (adj 5,8,10),
// chords 0-2 and 0-4. One violating 7-face whose edges are tiled by three
// 2-faces and an end 3-face (case 7b).
inline longcycle::EmbeddedGraph seven_face_row() {
  return longcycle::from_faces(21, {{0, 1, 2},
                                    {0, 2, 3, 4},
                                    {0, 4, 5, 6, 7, 16},
                                    {16, 7, 8, 9, 10, 11},
                                    {16, 11, 12, 13, 14, 15, 0},
                                    {1, 0, 15, 17},
                                    {3, 2, 1, 18},
                                    {5, 4, 3, 19},
                                    {8, 7, 6, 5, 20},
                                    {20, 10, 9, 8},
                                    {5, 19, 11, 10, 20},
                                    {19, 3, 18, 12, 11},
                                    {1, 17, 13, 12, 18},
                                    {15, 14, 13, 17}});
}

// 16-cycle, two mutually opposite 5-faces exchanging weight: a=16 inside
// (adj 0,5,14), g=17 inside (adj 5,7,13), h=18 inside (adj 7,9,11), d=19
// outside (adj 3,8,10), i=20 outside (adj 15,1,13), b=21 outside (adj 1,3,12),
// chords 2-4 and 3-6. Both 5-faces end at exactly 5 - 3*(2/3) = 3.
inline longcycle::EmbeddedGraph five_face_exchange() {
  return longcycle::from_faces(22, {{2, 3, 4},
                                    {0, 1, 2, 4, 5, 16},
                                    {5, 6, 7, 17},
                                    {7, 8, 9, 18},
                                    {18, 9, 10, 11},
                                    {17, 7, 18, 11, 12, 13},
                                    {16, 5, 17, 13, 14},
                                    {0, 16, 14, 15},
                                    {3, 2, 1, 21},
                                    {1, 0, 15, 20},
                                    {6, 5, 4, 3},
                                    {8, 7, 6, 3, 19},
                                    {20, 15, 14, 13},
                                    {21, 1, 20, 13, 12},
                                    {19, 3, 21, 12, 11, 10},
                                    {9, 8, 19, 10}});
}

inline longcycle::Cycle base_cycle(int c) {
  longcycle::Cycle out;
  for (int i = 0; i < c; ++i) out.vertices.push_back(i);
  return out;
}

}  // namespace fixtures
