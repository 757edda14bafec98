// The case catalog behind match_case: each violating minor j-face shape is a
// recipe with a window of consecutive cycle vertices (coordinates 0..j over
// the face's arc, extendable both ways), conditions on the faces across
// window edges, and a probe program over chords of G. Probes that hit an
// existing edge yield a rewrite; exhausted programs end in a structural
// contradiction (invalid input) or give up to the search fallback. The
// interpreter resolves the "without loss of generality" choices by trying
// both window orientations.

#include <algorithm>
#include <map>
#include <memory>

#include "longcycle/extend.hpp"

namespace longcycle {
namespace {

struct Sym {
  bool is_coord;
  int coord;
  char lone;
};
Sym C(int coord) { return {true, coord, 0}; }
Sym L(char lone) { return {false, 0, lone}; }

using Path = std::vector<Sym>;

struct Tmpl {
  int lo = 0, hi = 0;  // replaced subpath = coords lo..hi
  Path replacement;
};

struct Instr;
using Program = std::vector<Instr>;

struct Instr {
  enum Kind { ProbeExt, Assert, AssertNot, Ext, Contra, GiveUp, Branch } kind;
  int u = 0, v = 0;
  Tmpl tmpl;
  std::string msg;
  Program present, absent;
};

Instr probe_ext(int u, int v, Tmpl t) { return {Instr::ProbeExt, u, v, std::move(t), "", {}, {}}; }
Instr assert_edge(int u, int v, std::string msg) {
  return {Instr::Assert, u, v, {}, std::move(msg), {}, {}};
}
Instr assert_no_edge(int u, int v, std::string msg) {
  return {Instr::AssertNot, u, v, {}, std::move(msg), {}, {}};
}
Instr ext(Tmpl t) { return {Instr::Ext, 0, 0, std::move(t), "", {}, {}}; }
Instr contra(std::string msg) { return {Instr::Contra, 0, 0, {}, std::move(msg), {}, {}}; }
Instr give_up() { return {Instr::GiveUp, 0, 0, {}, "", {}, {}}; }
Instr branch(int u, int v, Program present, Program absent) {
  return {Instr::Branch, u, v, {}, "", std::move(present), std::move(absent)};
}

struct FaceReq {
  int edge;        // window edge (edge, edge+1)
  bool same_side;  // relative to the violating face
  bool major;
  int j = 0;          // exact j when minor
  int arc_start = 0;  // expected window coord of the face's arc start
  char lone = 0;      // symbol bound to the lone vertex
};

FaceReq minor_at(int edge, int j, int arc_start, char lone, bool same_side = false) {
  return {edge, same_side, false, j, arc_start, lone};
}
FaceReq major_at(int edge) { return {edge, false, true, 0, 0, 0}; }

struct Recipe {
  std::string id;
  int j;  // j of the violating face
  std::vector<FaceReq> conds;
  Program program;
};

Tmpl tmpl(int lo, int hi, Path replacement) { return {lo, hi, std::move(replacement)}; }

const std::vector<Recipe>& catalog() {
  static const std::vector<Recipe> recipes = [] {
    std::vector<Recipe> r;
    // ---- minor 2-faces: arc (0,1,2), lone a ----
    r.push_back({"2a", 2, {minor_at(1, 2, 0, 'b')}, {contra("2-face opposite 2-face on both edges")}});
    r.push_back({"2b", 2, {minor_at(1, 2, 1, 'b')},
                 {ext(tmpl(0, 3, {C(0), L('a'), C(2), C(1), L('b'), C(3)}))}});
    r.push_back({"2c", 2, {minor_at(1, 3, 0, 'b')},
                 {assert_edge(1, 3, "third neighbor forced"),
                  ext(tmpl(0, 3, {C(0), L('a'), C(2), C(1), C(3)}))}});

    // ---- minor 3-faces: arc (0,1,2,3), lone a, middle edge (1,2) ----
    r.push_back({"3-2c", 3, {minor_at(1, 2, 0, 'b')},
                 {assert_edge(1, 3, "third neighbor forced"),
                  ext(tmpl(0, 3, {C(0), L('b'), C(2), C(1), C(3)}))}});
    r.push_back({"3-mid", 3, {minor_at(1, 3, 0, 'b')}, {contra("2-separator across a 3-face pair")}});
    r.push_back({"3b", 3, {minor_at(2, 3, 1, 'd')},
                 {ext(tmpl(0, 4, {C(0), L('a'), C(3), C(2), C(1), L('d'), C(4)}))}});
    r.push_back({"3a", 3, {minor_at(0, 2, -1, 'b'), minor_at(2, 2, 2, 'd')},
                 {ext(tmpl(-1, 4, {C(-1), L('b'), C(1), C(0), L('a'), C(3), C(2), L('d'), C(4)}))}});

    // ---- minor 4-faces: arc (0,1,2,3,4), lone a ----
    r.push_back({"4a", 4, {minor_at(1, 2, 1, 'd')},
                 {probe_ext(0, 2, tmpl(0, 3, {C(0), C(2), C(1), L('d'), C(3)})),
                  probe_ext(2, 4, tmpl(1, 4, {C(1), L('d'), C(3), C(2), C(4)})),
                  contra("middle vertex has degree 2")}});
    r.push_back({"4b", 4, {minor_at(3, 2, 3, 'd'), minor_at(0, 3, -1, 'b')},
                 {ext(tmpl(-1, 5, {C(-1), L('b'), C(2), C(1), C(0), L('a'), C(4), C(3), L('d'), C(5)}))}});
    r.push_back({"4b2", 4, {minor_at(3, 2, 3, 'd'), minor_at(1, 3, 0, 'b')},
                 {probe_ext(1, 4, tmpl(0, 4, {C(0), L('b'), C(3), C(2), C(1), C(4)})),
                  assert_edge(2, 4, "2-separator otherwise"),
                  ext(tmpl(2, 5, {C(2), C(4), C(3), L('d'), C(5)}))}});
    r.push_back({"4c", 4, {minor_at(2, 2, 2, 'd'), minor_at(0, 2, -1, 'b'), major_at(1)},
                 {probe_ext(1, 3, tmpl(1, 4, {C(1), C(3), C(2), L('d'), C(4)})),
                  assert_edge(0, 3, "third neighbor forced"),
                  ext(tmpl(-1, 4, {C(-1), L('b'), C(1), C(0), C(3), C(2), L('d'), C(4)}))}});
    r.push_back({"4d", 4, {minor_at(2, 2, 2, 'd'), minor_at(1, 3, -1, 'b')},
                 {probe_ext(1, 3, tmpl(1, 4, {C(1), C(3), C(2), L('d'), C(4)})),
                  assert_edge(0, 3, "third neighbor forced"),
                  ext(tmpl(-1, 5, {C(-1), L('b'), C(2), C(1), C(0), C(3), C(4), C(5)}))}});
    r.push_back({"4d-deg", 4, {minor_at(2, 2, 2, 'd'), minor_at(1, 2, 0, 'b')},
                 {probe_ext(1, 3, tmpl(1, 4, {C(1), C(3), C(2), L('d'), C(4)})),
                  assert_edge(0, 3, "third neighbor forced"),
                  contra("degree-2 vertex between the two 2-faces")}});
    for (int pj : {2, 3}) {  // 4e with f1 a 4-face; the R4 partner is a 2- or 3-face
      r.push_back({pj == 2 ? "4e" : "4e-p3", 4,
                   {minor_at(2, 2, 2, 'd'), minor_at(0, 4, -2, 'b'),
                    minor_at(-2, pj, pj == 2 ? -2 : -3, 'g', true)},
                   {probe_ext(1, 3, tmpl(1, 4, {C(1), C(3), C(2), L('d'), C(4)})),
                    assert_edge(0, 3, "third neighbor forced"),
                    probe_ext(-1, 1, tmpl(-2, 3, {C(-2), L('b'), C(2), C(1), C(-1), C(0), C(3)})),
                    probe_ext(-3, -1, tmpl(-3, 3, {C(-3), C(-1), C(-2), L('b'), C(2), C(1), C(0), C(3)})),
                    assert_edge(-1, 2, "third neighbor forced"),
                    contra("degree-2 vertex inside the 4-face pair")}});
    }
    r.push_back({"4e-j5", 4,
                 {minor_at(2, 2, 2, 'd'), minor_at(0, 5, -3, 'b'),
                  minor_at(-3, 2, -4, 'h', true), minor_at(-2, 2, -2, 'g', true)},
                 {probe_ext(1, 3, tmpl(1, 4, {C(1), C(3), C(2), L('d'), C(4)})),
                  assert_edge(0, 3, "third neighbor forced"),
                  probe_ext(-1, 1, tmpl(-2, 1, {C(-2), L('g'), C(0), C(-1), C(1)})),
                  probe_ext(-3, -1, tmpl(-3, 0, {C(-3), C(-1), C(-2), L('g'), C(0)})),
                  assert_edge(-1, 2, "third neighbor forced"),
                  contra("degree-2 vertex inside the 5-face")}});
    r.push_back({"4f", 4, {minor_at(2, 3, 1, 'd')},
                 {probe_ext(0, 3, tmpl(0, 4, {C(0), C(3), C(2), C(1), L('d'), C(4)})),
                  assert_edge(1, 3, "third neighbor forced"),
                  assert_edge(0, 2, "2-separator otherwise"),
                  ext(tmpl(0, 4, {C(0), C(2), C(3), C(1), L('d'), C(4)}))}});
    r.push_back({"4g", 4, {minor_at(3, 3, 2, 'd'), minor_at(1, 3, -1, 'b')},
                 {probe_ext(1, 3, tmpl(0, 5, {C(0), L('a'), C(4), C(3), C(1), C(2), L('d'), C(5)})),
                  probe_ext(1, 4, tmpl(1, 5, {C(1), C(4), C(3), C(2), L('d'), C(5)})),
                  assert_edge(-1, 1, "third neighbor forced"),
                  ext(tmpl(-1, 5, {C(-1), C(1), C(0), L('a'), C(4), C(3), C(2), L('d'), C(5)}))}});
    r.push_back({"4h", 4,
                 {minor_at(3, 3, 2, 'd'), minor_at(0, 4, -2, 'b'), minor_at(-2, 3, -3, 'g', true)},
                 {probe_ext(1, 3, tmpl(0, 5, {C(0), L('a'), C(4), C(3), C(1), C(2), L('d'), C(5)})),
                  probe_ext(1, 4, tmpl(1, 5, {C(1), C(4), C(3), C(2), L('d'), C(5)})),
                  probe_ext(-1, 1, tmpl(-3, 2, {C(-3), L('g'), C(0), C(1), C(-1), C(-2), L('b'), C(2)})),
                  probe_ext(-2, 1, tmpl(-3, 1, {C(-3), L('g'), C(0), C(-1), C(-2), C(1)})),
                  contra("degree-2 vertex between the 4-faces")}});
    r.push_back({"4h2", 4,
                 {minor_at(3, 3, 2, 'd'), minor_at(0, 4, -2, 'b'), minor_at(-2, 2, -2, 'g', true)},
                 {probe_ext(1, 3, tmpl(0, 5, {C(0), L('a'), C(4), C(3), C(1), C(2), L('d'), C(5)})),
                  probe_ext(1, 4, tmpl(1, 5, {C(1), C(4), C(3), C(2), L('d'), C(5)})),
                  probe_ext(-1, 1, tmpl(-2, 1, {C(-2), L('g'), C(0), C(-1), C(1)})),
                  assert_edge(-2, 1, "third neighbor forced"),
                  contra("degree-2 vertex inside the 2-face")}});
    // 4i: f' is a second minor 4-face across (2,3),(3,4); f'' across (0,1),(1,2)
    // is a 4- or 5-face; both have their own m=2 partners.
    {
      auto step1_p2 = Program{
          probe_ext(3, 5, tmpl(3, 6, {C(3), C(5), C(4), L('h'), C(6)})),
          assert_edge(2, 5, "third neighbor forced"),
          probe_ext(1, 3, tmpl(1, 6, {C(1), C(3), C(2), C(5), C(4), L('h'), C(6)})),
          assert_edge(0, 3, "third neighbor forced"),
      };
      auto step1_p3 = Program{
          probe_ext(1, 3, tmpl(1, 7, {C(1), C(3), C(2), L('d'), C(6), C(5), C(4), L('h'), C(7)})),
          probe_ext(3, 5, tmpl(2, 7, {C(2), L('d'), C(6), C(5), C(3), C(4), L('h'), C(7)})),
          probe_ext(3, 6, tmpl(3, 7, {C(3), C(6), C(5), C(4), L('h'), C(7)})),
          assert_edge(0, 3, "third neighbor forced"),
      };
      auto tail_f4_g2 = Program{
          probe_ext(-1, 1, tmpl(-2, 1, {C(-2), L('g'), C(0), C(-1), C(1)})),
          assert_edge(-1, 2, "third neighbor forced"),
          probe_ext(1, 3, tmpl(-2, 3, {C(-2), L('g'), C(0), C(-1), C(2), C(1), C(3)})),
          assert_edge(1, 4, "third neighbor forced"),
          contra("crossing chords inside the 4-face"),
      };
      auto tail_f4_g3 = Program{
          probe_ext(1, 3, tmpl(-3, 3, {C(-3), L('g'), C(0), C(-1), C(-2), L('b'), C(2), C(1), C(3)})),
          probe_ext(-1, 1, tmpl(-3, 2, {C(-3), L('g'), C(0), C(1), C(-1), C(-2), L('b'), C(2)})),
          probe_ext(-2, 1, tmpl(-3, 1, {C(-3), L('g'), C(0), C(-1), C(-2), C(1)})),
          assert_edge(1, 4, "third neighbor forced"),
          contra("crossing chords inside the 4-face"),
      };
      auto tail_f5 = Program{
          probe_ext(-3, -1, tmpl(-3, 0, {C(-3), C(-1), C(-2), L('g'), C(0)})),
          probe_ext(-1, 1, tmpl(-2, 1, {C(-2), L('g'), C(0), C(-1), C(1)})),
          assert_edge(-1, 2, "third neighbor forced"),
          contra("degree-2 vertex inside the 5-face"),
      };
      auto cat = [](Program a, const Program& b) {
        for (const auto& i : b) a.push_back(i);
        return a;
      };
      for (int p2j : {2, 3}) {
        const auto& step1 = p2j == 2 ? step1_p2 : step1_p3;
        std::string sfx = p2j == 2 ? "" : "-q3";
        std::vector<FaceReq> base{minor_at(2, 4, 2, 'd'),
                                  minor_at(4, p2j, p2j == 2 ? 4 : 4, 'h', true)};
        // f'' a 4-face with partner f1 a 2- or 3-face
        {
          auto conds = base;
          conds.push_back(minor_at(0, 4, -2, 'b'));
          conds.push_back(minor_at(-2, 2, -2, 'g', true));
          r.push_back({"4i" + sfx, 4, conds, cat(step1, tail_f4_g2)});
        }
        {
          auto conds = base;
          conds.push_back(minor_at(0, 4, -2, 'b'));
          conds.push_back(minor_at(-2, 3, -3, 'g', true));
          r.push_back({"4i-g3" + sfx, 4, conds, cat(step1, tail_f4_g3)});
        }
        // f'' a 5-face with its two 2-faces
        {
          auto conds = base;
          conds.push_back(minor_at(0, 5, -3, 'b'));
          conds.push_back(minor_at(-3, 2, -4, 'i', true));
          conds.push_back(minor_at(-2, 2, -2, 'g', true));
          r.push_back({"4i-5" + sfx, 4, conds, cat(step1, tail_f5)});
        }
      }
    }

    // ---- minor 5-faces: arc (0..5), lone a ----
    r.push_back({"5a", 5,
                 {minor_at(3, 5, 3, 'd'), minor_at(5, 2, 5, 'g', true), minor_at(7, 2, 7, 'h', true),
                  minor_at(0, 2, -1, 'i'), minor_at(1, 2, 1, 'b')},
                 {probe_ext(4, 6, tmpl(4, 7, {C(4), C(6), C(5), L('g'), C(7)})),
                  probe_ext(6, 8, tmpl(5, 8, {C(5), L('g'), C(7), C(6), C(8)})),
                  assert_edge(3, 6, "third neighbor forced"),
                  probe_ext(2, 4, tmpl(1, 4, {C(1), L('b'), C(3), C(2), C(4)})),
                  probe_ext(0, 2, tmpl(0, 3, {C(0), C(2), C(1), L('b'), C(3)})),
                  assert_edge(2, 5, "third neighbor forced"),
                  contra("degree-2 vertex between the 5-faces")}});
    r.push_back({"5b", 5, {minor_at(3, 4, 3, 'd'), minor_at(5, 2, 5, 'g', true), minor_at(1, 2, 1, 'b')},
                 {probe_ext(0, 2, tmpl(0, 3, {C(0), C(2), C(1), L('b'), C(3)})),
                  probe_ext(2, 4, tmpl(1, 4, {C(1), L('b'), C(3), C(2), C(4)})),
                  assert_edge(2, 5, "third neighbor forced"),
                  probe_ext(4, 6, tmpl(4, 7, {C(4), C(6), C(5), L('g'), C(7)})),
                  assert_edge(3, 6, "third neighbor forced"),
                  contra("degree-2 vertex beside the 4-face")}});
    r.push_back({"5b2", 5, {minor_at(3, 4, 3, 'd'), minor_at(5, 3, 5, 'g', true), minor_at(1, 2, 1, 'b')},
                 {probe_ext(0, 2, tmpl(0, 3, {C(0), C(2), C(1), L('b'), C(3)})),
                  probe_ext(2, 4, tmpl(1, 4, {C(1), L('b'), C(3), C(2), C(4)})),
                  assert_edge(2, 5, "third neighbor forced"),
                  probe_ext(4, 6, tmpl(3, 8, {C(3), L('d'), C(7), C(6), C(4), C(5), L('g'), C(8)})),
                  probe_ext(4, 7, tmpl(4, 8, {C(4), C(7), C(6), C(5), L('g'), C(8)})),
                  contra("degree-2 vertex beside the 4-face")}});
    r.push_back({"5c", 5, {minor_at(2, 3, 1, 'd'), minor_at(0, 2, -1, 'b'), minor_at(4, 2, 4, 'g')},
                 {probe_ext(0, 2, tmpl(-1, 2, {C(-1), L('b'), C(1), C(0), C(2)})),
                  probe_ext(3, 5, tmpl(3, 6, {C(3), C(5), C(4), L('g'), C(6)})),
                  probe_ext(2, 5, tmpl(1, 5, {C(1), L('d'), C(4), C(3), C(2), C(5)})),
                  probe_ext(0, 3, tmpl(0, 4, {C(0), C(3), C(2), C(1), L('d'), C(4)})),
                  contra("2-separator around the 3-face")}});
    r.push_back({"5d", 5, {minor_at(3, 3, 2, 'd'), minor_at(1, 3, -1, 'b')},
                 {probe_ext(1, 4, tmpl(1, 5, {C(1), C(4), C(3), C(2), L('d'), C(5)})),
                  probe_ext(0, 3, tmpl(-1, 3, {C(-1), L('b'), C(2), C(1), C(0), C(3)})),
                  branch(0, 4,
                         {branch(1, 3,
                                 {ext(tmpl(0, 5, {C(0), C(4), C(3), C(1), C(2), L('d'), C(5)}))},
                                 {assert_edge(3, 5, "third neighbor forced"),
                                  ext(tmpl(-1, 5, {C(-1), L('b'), C(2), C(1), C(0), C(4), C(3), C(5)}))})},
                         {assert_edge(1, 3, "2-separator otherwise"),
                          probe_ext(2, 4, tmpl(-1, 5, {C(-1), L('b'), C(2), C(4), C(3), C(1), C(0), L('a'), C(5)})),
                          contra("degree-2 vertex beside the 3-face")})}});
    r.push_back({"5d-deg", 5, {minor_at(3, 3, 2, 'd'), minor_at(1, 2, 0, 'b')},
                 {probe_ext(1, 4, tmpl(1, 5, {C(1), C(4), C(3), C(2), L('d'), C(5)})),
                  probe_ext(1, 3, tmpl(0, 3, {C(0), L('b'), C(2), C(1), C(3)})),
                  assert_edge(1, 5, "third neighbor forced"),
                  contra("2-separator beside the 3-face")}});
    r.push_back({"5e", 5, {minor_at(4, 3, 3, 'd'), minor_at(1, 2, 1, 'b')},
                 {probe_ext(0, 2, tmpl(0, 3, {C(0), C(2), C(1), L('b'), C(3)})),
                  probe_ext(2, 4, tmpl(1, 4, {C(1), L('b'), C(3), C(2), C(4)})),
                  assert_edge(2, 5, "third neighbor forced"),
                  ext(tmpl(2, 6, {C(2), C(5), C(4), C(3), L('d'), C(6)}))}});
    r.push_back({"5f", 5, {minor_at(3, 2, 3, 'd'), minor_at(1, 2, 1, 'b')},
                 {probe_ext(2, 4, tmpl(2, 5, {C(2), C(4), C(3), L('d'), C(5)})),
                  assert_no_edge(1, 4, "would leave a degree-2 vertex"),
                  assert_edge(0, 4, "third neighbor forced"),
                  assert_edge(0, 2, "third neighbor forced"),
                  ext(tmpl(0, 3, {C(0), C(2), C(1), L('b'), C(3)}))}});

    // ---- minor 6-faces: arc (0..6), lone a ----
    r.push_back({"6a", 6,
                 {minor_at(4, 5, 4, 'd'), minor_at(6, 2, 6, 'g', true), minor_at(8, 2, 8, 'h', true),
                  minor_at(0, 2, 0, 'i'), minor_at(2, 2, 2, 'b')},
                 {probe_ext(1, 3, tmpl(1, 4, {C(1), C(3), C(2), L('b'), C(4)})),
                  probe_ext(3, 5, tmpl(2, 5, {C(2), L('b'), C(4), C(3), C(5)})),
                  assert_no_edge(0, 3, "would leave a degree-2 vertex"),
                  assert_edge(3, 6, "third neighbor forced"),
                  probe_ext(5, 7, tmpl(5, 8, {C(5), C(7), C(6), L('g'), C(8)})),
                  probe_ext(7, 9, tmpl(6, 9, {C(6), L('g'), C(8), C(7), C(9)})),
                  assert_edge(4, 7, "third neighbor forced"),
                  contra("degree-2 vertex beside the 5-face")}});
    {
      // 6b: f' a 4-face across (4,5),(5,6); its partner across (6,7),(7,8) is a
      // 2- or 3-face; the left side is a middle-tu 3-face + 2-face, or two 2-faces.
      auto left3 = std::vector<FaceReq>{minor_at(0, 3, -1, 'h'), minor_at(2, 2, 2, 'b')};
      auto left2 = std::vector<FaceReq>{minor_at(0, 2, 0, 'i'), minor_at(2, 2, 2, 'b')};
      auto head = Program{
          probe_ext(1, 3, tmpl(1, 4, {C(1), C(3), C(2), L('b'), C(4)})),
          probe_ext(3, 5, tmpl(2, 5, {C(2), L('b'), C(4), C(3), C(5)})),
      };
      auto left3_mid = Program{
          probe_ext(0, 3, tmpl(-1, 3, {C(-1), L('h'), C(2), C(1), C(0), C(3)})),
          assert_edge(3, 6, "third neighbor forced"),
      };
      auto left2_mid = Program{
          assert_no_edge(0, 3, "would leave a degree-2 vertex"),
          assert_edge(3, 6, "third neighbor forced"),
      };
      auto tail_g2 = Program{
          probe_ext(5, 7, tmpl(5, 8, {C(5), C(7), C(6), L('g'), C(8)})),
          assert_edge(4, 7, "third neighbor forced"),
          contra("degree-2 vertex beside the 4-face"),
      };
      auto tail_g3 = Program{
          probe_ext(5, 7, tmpl(4, 9, {C(4), L('d'), C(8), C(7), C(5), C(6), L('g'), C(9)})),
          probe_ext(5, 8, tmpl(5, 9, {C(5), C(8), C(7), C(6), L('g'), C(9)})),
          contra("degree-2 vertex beside the 4-face"),
      };
      auto cat = [](Program a, const Program& b, const Program& c) {
        for (const auto& i : b) a.push_back(i);
        for (const auto& i : c) a.push_back(i);
        return a;
      };
      for (int gj : {2, 3}) {
        const auto& tail = gj == 2 ? tail_g2 : tail_g3;
        std::string sfx = gj == 2 ? "" : "-q3";
        auto base = std::vector<FaceReq>{minor_at(4, 4, 4, 'd'),
                                         minor_at(6, gj, 6, 'g', true)};
        auto c1 = base;
        c1.insert(c1.end(), left3.begin(), left3.end());
        r.push_back({"6b" + sfx, 6, c1, cat(head, left3_mid, tail)});
        auto c2 = base;
        c2.insert(c2.end(), left2.begin(), left2.end());
        r.push_back({"6b-2f" + sfx, 6, c2, cat(head, left2_mid, tail)});
      }
    }
    r.push_back({"6c", 6, {minor_at(3, 3, 2, 'd'), minor_at(0, 2, 0, 'b'), minor_at(5, 2, 5, 'g')},
                 {probe_ext(1, 3, tmpl(0, 3, {C(0), L('b'), C(2), C(1), C(3)})),
                  probe_ext(1, 4, tmpl(1, 5, {C(1), C(4), C(3), C(2), L('d'), C(5)})),
                  assert_no_edge(1, 5, "2-separator otherwise"),
                  assert_edge(1, 6, "third neighbor forced"),
                  ext(tmpl(0, 7, {C(0), L('a'), C(6), C(1), C(2), C(3), C(4), C(5), L('g'), C(7)}))}});
    r.push_back({"6d", 6, {minor_at(4, 3, 3, 'd'), minor_at(1, 2, 1, 'b'), minor_at(0, 2, -1, 'g')},
                 {probe_ext(0, 2, tmpl(0, 3, {C(0), C(2), C(1), L('b'), C(3)})),
                  probe_ext(2, 4, tmpl(1, 4, {C(1), L('b'), C(3), C(2), C(4)})),
                  probe_ext(2, 5, tmpl(2, 6, {C(2), C(5), C(4), C(3), L('d'), C(6)})),
                  assert_edge(2, 6, "third neighbor forced"),
                  contra("2-separator beside the 3-face")}});
    r.push_back({"6e", 6, {minor_at(5, 3, 4, 'd'), minor_at(0, 3, -1, 'h'), minor_at(2, 2, 2, 'b')},
                 {probe_ext(1, 3, tmpl(1, 4, {C(1), C(3), C(2), L('b'), C(4)})),
                  probe_ext(3, 5, tmpl(2, 5, {C(2), L('b'), C(4), C(3), C(5)})),
                  probe_ext(3, 6, tmpl(3, 7, {C(3), C(6), C(5), C(4), L('d'), C(7)})),
                  probe_ext(0, 3, tmpl(-1, 3, {C(-1), L('h'), C(2), C(1), C(0), C(3)})),
                  contra("degree-2 vertex between the 3-faces")}});
    r.push_back({"6e-2f", 6, {minor_at(5, 3, 4, 'd'), minor_at(0, 2, 0, 'g'), minor_at(2, 2, 2, 'b')},
                 {probe_ext(1, 3, tmpl(1, 4, {C(1), C(3), C(2), L('b'), C(4)})),
                  probe_ext(3, 5, tmpl(2, 5, {C(2), L('b'), C(4), C(3), C(5)})),
                  probe_ext(3, 6, tmpl(3, 7, {C(3), C(6), C(5), C(4), L('d'), C(7)})),
                  assert_edge(0, 3, "third neighbor forced"),
                  contra("degree-2 vertex in the end 2-face")}});
    r.push_back({"6f", 6, {minor_at(1, 2, 0, 'g'), minor_at(2, 2, 2, 'b'), minor_at(4, 2, 4, 'd')},
                 {probe_ext(1, 3, tmpl(1, 4, {C(1), C(3), C(2), L('b'), C(4)})),
                  probe_ext(3, 5, tmpl(2, 5, {C(2), L('b'), C(4), C(3), C(5)})),
                  assert_no_edge(3, 6, "would leave a degree-2 vertex"),
                  assert_no_edge(0, 3, "would leave a degree-2 vertex"),
                  contra("degree-2 middle vertex")}});
    r.push_back({"6g", 6, {minor_at(1, 2, 1, 'b'), minor_at(3, 2, 3, 'd'), minor_at(5, 2, 5, 'g')},
                 {probe_ext(0, 2, tmpl(0, 3, {C(0), C(2), C(1), L('b'), C(3)})),
                  probe_ext(2, 4, tmpl(1, 4, {C(1), L('b'), C(3), C(2), C(4)})),
                  assert_no_edge(2, 5, "would leave a degree-2 vertex"),
                  assert_edge(2, 6, "third neighbor forced"),
                  probe_ext(4, 6, tmpl(4, 7, {C(4), C(6), C(5), L('g'), C(7)})),
                  contra("degree-2 vertex beside the 2-faces")}});

    // ---- minor 7-faces: arc (0..7), lone a ----
    {
      auto left = Program{
          probe_ext(2, 4, tmpl(2, 5, {C(2), C(4), C(3), L('b'), C(5)})),
          probe_ext(4, 6, tmpl(3, 6, {C(3), L('b'), C(5), C(4), C(6)})),
          assert_no_edge(4, 7, "would leave a degree-2 vertex"),
          assert_no_edge(1, 4, "would leave a degree-2 vertex"),
          assert_edge(0, 4, "third neighbor forced"),
          assert_edge(0, 6, "third neighbor forced"),
          ext(tmpl(-1, 7,
                   {C(-1), L('i'), C(1), C(2), C(3), C(4), C(5), C(6), C(0), L('a'), C(7)})),
      };
      auto head_g2 = Program{
          probe_ext(6, 8, tmpl(6, 9, {C(6), C(8), C(7), L('g'), C(9)})),
          assert_edge(5, 8, "third neighbor forced"),
      };
      auto head_g3 = Program{
          probe_ext(6, 8, tmpl(5, 10, {C(5), L('d'), C(9), C(8), C(6), C(7), L('g'), C(10)})),
          probe_ext(6, 9, tmpl(6, 10, {C(6), C(9), C(8), C(7), L('g'), C(10)})),
      };
      auto cat = [](Program a, const Program& b) {
        for (const auto& i : b) a.push_back(i);
        return a;
      };
      for (int gj : {2, 3}) {
        std::string sfx = gj == 2 ? "" : "-q3";
        r.push_back({"7a" + sfx, 7,
                     {minor_at(5, 4, 5, 'd'), minor_at(7, gj, 7, 'g', true),
                      minor_at(0, 2, -1, 'i'), minor_at(1, 2, 1, 'h'), minor_at(3, 2, 3, 'b')},
                     cat(gj == 2 ? head_g2 : head_g3, left)});
      }
    }
    r.push_back({"7b", 7,
                 {minor_at(6, 3, 5, 'd'), minor_at(0, 2, -1, 'g'), minor_at(1, 2, 1, 'h'),
                  minor_at(3, 2, 3, 'b')},
                 {probe_ext(2, 4, tmpl(2, 5, {C(2), C(4), C(3), L('b'), C(5)})),
                  probe_ext(4, 6, tmpl(3, 6, {C(3), L('b'), C(5), C(4), C(6)})),
                  probe_ext(4, 7, tmpl(4, 8, {C(4), C(7), C(6), C(5), L('d'), C(8)})),
                  assert_no_edge(1, 4, "would leave a degree-2 vertex"),
                  assert_edge(0, 4, "third neighbor forced"),
                  assert_edge(0, 2, "third neighbor forced"),
                  ext(tmpl(0, 3, {C(0), C(2), C(1), L('h'), C(3)}))}});
    r.push_back({"7c", 7,
                 {minor_at(1, 2, 1, 'b'), minor_at(3, 2, 3, 'd'), minor_at(5, 2, 5, 'g')},
                 {probe_ext(2, 4, tmpl(2, 5, {C(2), C(4), C(3), L('d'), C(5)})),
                  probe_ext(4, 6, tmpl(3, 6, {C(3), L('d'), C(5), C(4), C(6)})),
                  assert_no_edge(1, 4, "would leave a degree-2 vertex"),
                  assert_no_edge(4, 7, "would leave a degree-2 vertex"),
                  assert_edge(0, 4, "third neighbor forced"),
                  probe_ext(0, 2, tmpl(0, 3, {C(0), C(2), C(1), L('b'), C(3)})),
                  contra("degree-2 vertex after the diagonal")}});

    // ---- minor 8-faces: arc (0..8), lone a ----
    r.push_back({"8a", 8,
                 {minor_at(7, 3, 6, 'd'), minor_at(0, 2, 0, 'g'), minor_at(2, 2, 2, 'h'),
                  minor_at(4, 2, 4, 'b')},
                 {probe_ext(1, 3, tmpl(1, 4, {C(1), C(3), C(2), L('h'), C(4)})),
                  probe_ext(3, 5, tmpl(3, 6, {C(3), C(5), C(4), L('b'), C(6)})),
                  probe_ext(5, 7, tmpl(4, 7, {C(4), L('b'), C(6), C(5), C(7)})),
                  probe_ext(5, 8, tmpl(5, 9, {C(5), C(8), C(7), C(6), L('d'), C(9)})),
                  assert_no_edge(1, 5, "would leave a degree-2 vertex"),
                  assert_no_edge(2, 5, "would leave a degree-2 vertex"),
                  assert_edge(0, 5, "third neighbor forced"),
                  assert_edge(0, 3, "third neighbor forced"),
                  contra("degree-2 vertex at the far end")}});
    r.push_back({"8b", 8,
                 {minor_at(0, 2, 0, 'b'), minor_at(2, 2, 2, 'd'), minor_at(4, 2, 4, 'g'),
                  minor_at(6, 2, 6, 'h')},
                 {probe_ext(5, 7, tmpl(4, 7, {C(4), L('g'), C(6), C(5), C(7)})),
                  assert_no_edge(5, 8, "would leave a degree-2 vertex"),
                  probe_ext(1, 3, tmpl(1, 4, {C(1), C(3), C(2), L('d'), C(4)})),
                  probe_ext(3, 5, tmpl(3, 6, {C(3), C(5), C(4), L('g'), C(6)})),
                  assert_no_edge(1, 5, "would leave a degree-2 vertex"),
                  assert_no_edge(2, 5, "would leave a degree-2 vertex"),
                  assert_edge(0, 5, "third neighbor forced"),
                  assert_edge(0, 3, "third neighbor forced"),
                  contra("degree-2 vertex at the far end")}});
    r.push_back({"8b2", 8,
                 {minor_at(0, 2, -1, 'i'), minor_at(1, 2, 1, 'b'), minor_at(3, 2, 3, 'd'),
                  minor_at(5, 2, 5, 'g'), minor_at(7, 2, 7, 'h')},
                 {probe_ext(2, 4, tmpl(1, 4, {C(1), L('b'), C(3), C(2), C(4)})),
                  probe_ext(4, 6, tmpl(4, 7, {C(4), C(6), C(5), L('g'), C(7)})),
                  branch(1, 4, {contra("degree-2 vertex left of center")}, {}),
                  branch(4, 7, {contra("degree-2 vertex right of center")}, {}),
                  branch(0, 4,
                         {probe_ext(0, 2, tmpl(-1, 2, {C(-1), L('i'), C(1), C(0), C(2)})),
                          contra("degree-2 vertex left of center")},
                         {}),
                  branch(4, 8,
                         {probe_ext(6, 8, tmpl(6, 9, {C(6), C(8), C(7), L('h'), C(9)})),
                          contra("degree-2 vertex right of center")},
                         {}),
                  contra("degree-2 center vertex")}});

    // ---- minor 9-faces: arc (0..9), lone a (j >= 10 never violates) ----
    r.push_back({"9", 9,
                 {minor_at(0, 2, -1, 'i'), minor_at(1, 2, 1, 'b'), minor_at(3, 2, 3, 'd'),
                  minor_at(5, 2, 5, 'g'), minor_at(7, 2, 7, 'h')},
                 {probe_ext(6, 8, tmpl(5, 8, {C(5), L('g'), C(7), C(6), C(8)})),
                  assert_no_edge(6, 9, "would leave a degree-2 vertex"),
                  probe_ext(2, 4, tmpl(2, 5, {C(2), C(4), C(3), L('d'), C(5)})),
                  probe_ext(4, 6, tmpl(4, 7, {C(4), C(6), C(5), L('g'), C(7)})),
                  assert_no_edge(2, 6, "would leave a degree-2 vertex"),
                  assert_no_edge(3, 6, "would leave a degree-2 vertex"),
                  probe_ext(0, 2, tmpl(-1, 2, {C(-1), L('i'), C(1), C(0), C(2)})),
                  give_up()}});
    return r;
  }();
  return recipes;
}

// binding of a recipe window onto the cycle around the violating face
struct Binding {
  const CycleContext* ctx;
  const EmbeddedGraph* g;
  int face_id;
  int p;    // arc start position of the violating face
  int jf;   // its j
  int dir;  // +1 or -1
  std::map<char, int> lone;

  int pos(int coord) const {
    int c = ctx->c();
    int q = dir > 0 ? p + coord : p + jf - coord;
    return ((q % c) + c) % c;
  }
  int vert(int coord) const { return ctx->cycle.vertices[pos(coord)]; }
  int eid(int edge) const {
    int c = ctx->c();
    int q = dir > 0 ? p + edge : p + jf - edge - 1;
    return ((q % c) + c) % c;
  }
  int resolve(const Sym& s) const { return s.is_coord ? vert(s.coord) : lone.at(s.lone); }
};

bool bind_conditions(Binding& b, const Recipe& rec) {
  const CycleContext& ctx = *b.ctx;
  Side f_side = ctx.faces[b.face_id].side;
  b.lone.clear();
  b.lone['a'] = ctx.faces[b.face_id].lone_vertex;
  for (const auto& req : rec.conds) {
    int eid = b.eid(req.edge);
    auto [fa, fb] = ctx.edge_faces[eid];
    Side want = req.same_side ? f_side
                              : (f_side == Side::Inside ? Side::Outside : Side::Inside);
    int fid = ctx.faces[fa].side == want ? fa : fb;
    if (ctx.faces[fid].side != want) return false;
    const ContextFace& cf = ctx.faces[fid];
    if (req.major) {
      if (cf.cls != FaceClass::Major) return false;
      continue;
    }
    if (cf.cls != FaceClass::Minor || cf.j != req.j) return false;
    int expect;
    if (b.dir > 0)
      expect = b.pos(req.arc_start);
    else {
      int c = ctx.c();
      int q = b.p + b.jf - req.arc_start - req.j;
      expect = ((q % c) + c) % c;
    }
    if (cf.arc_start != expect) return false;
    if (req.lone) {
      auto it = b.lone.find(req.lone);
      if (it != b.lone.end() && it->second != cf.lone_vertex) return false;
      b.lone[req.lone] = cf.lone_vertex;
    }
  }
  return true;
}

// window extent of a recipe (for the distinctness check)
std::pair<int, int> recipe_extent(const Recipe& rec) {
  int lo = 0, hi = rec.j;
  auto touch = [&](int c) {
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  };
  for (const auto& q : rec.conds) {
    touch(q.edge);
    touch(q.edge + 1);
    if (!q.major) {
      touch(q.arc_start);
      touch(q.arc_start + q.j);
    }
  }
  std::function<void(const Program&)> scan = [&](const Program& prog) {
    for (const auto& ins : prog) {
      if (ins.kind == Instr::ProbeExt || ins.kind == Instr::Assert ||
          ins.kind == Instr::AssertNot || ins.kind == Instr::Branch) {
        touch(ins.u);
        touch(ins.v);
      }
      if (ins.kind == Instr::ProbeExt || ins.kind == Instr::Ext) {
        touch(ins.tmpl.lo);
        touch(ins.tmpl.hi);
        for (const auto& s : ins.tmpl.replacement)
          if (s.is_coord) touch(s.coord);
      }
      scan(ins.present);
      scan(ins.absent);
    }
  };
  scan(rec.program);
  return {lo, hi};
}

std::optional<ExtensionStep> instantiate(const Binding& b, const std::string& case_id,
                                         const Tmpl& t) {
  ExtensionStep step;
  step.case_id = case_id;
  step.face = b.face_id;
  if (t.hi - t.lo + 1 > b.ctx->c()) return std::nullopt;  // would wrap the cycle
  for (int c = t.lo; c <= t.hi; ++c) step.removed_subpath.push_back(b.vert(c));
  for (const auto& s : t.replacement) step.replacement_path.push_back(b.resolve(s));
  if (b.dir < 0) {
    std::reverse(step.removed_subpath.begin(), step.removed_subpath.end());
    std::reverse(step.replacement_path.begin(), step.replacement_path.end());
  }
  // structural sanity; apply_step re-validates against the whole cycle
  std::vector<int> sorted = step.replacement_path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  if (step.replacement_path.front() != step.removed_subpath.front() ||
      step.replacement_path.back() != step.removed_subpath.back())
    return std::nullopt;
  for (size_t i = 0; i + 1 < step.replacement_path.size(); ++i)
    if (!b.g->has_edge(step.replacement_path[i], step.replacement_path[i + 1]))
      return std::nullopt;
  std::vector<char> in_replacement(b.g->vertex_count(), 0);
  for (int v : step.replacement_path) in_replacement[v] = 1;
  for (int v : step.removed_subpath)
    if (!in_replacement[v]) return std::nullopt;
  if (step.replacement_path.size() <= step.removed_subpath.size()) return std::nullopt;
  std::vector<char> removed(b.g->vertex_count(), 0);
  for (int v : step.removed_subpath) removed[v] = 1;
  for (int v : step.replacement_path)
    if (!removed[v]) step.absorbed.push_back(v);
  return step;
}

enum class RunKind { Step, Contra, GiveUp };
struct RunResult {
  RunKind kind;
  std::optional<ExtensionStep> step;
  std::string msg;
};

// `wrapped`: the recipe's window spans more coordinates than the cycle has,
// so coordinates alias. Probe rewrites stay sound (fully re-validated), but
// the blocking arguments behind contradictions assume distinct vertices, so
// under aliasing they are not trusted and degrade to giving up.
RunResult run_program(const Binding& b, const std::string& case_id, const Program& prog,
                      bool wrapped) {
  for (const auto& ins : prog) {
    switch (ins.kind) {
      case Instr::ProbeExt:
        if (b.g->has_edge(b.vert(ins.u), b.vert(ins.v))) {
          auto step = instantiate(b, case_id, ins.tmpl);
          if (!step) return {RunKind::GiveUp, std::nullopt, "degenerate instantiation"};
          return {RunKind::Step, step, ""};
        }
        break;
      case Instr::Assert:
        if (!b.g->has_edge(b.vert(ins.u), b.vert(ins.v))) {
          if (wrapped) return {RunKind::GiveUp, std::nullopt, ""};
          return {RunKind::Contra, std::nullopt, "missing forced edge: " + ins.msg};
        }
        break;
      case Instr::AssertNot:
        if (b.g->has_edge(b.vert(ins.u), b.vert(ins.v))) {
          if (wrapped) return {RunKind::GiveUp, std::nullopt, ""};
          return {RunKind::Contra, std::nullopt, "forbidden edge present: " + ins.msg};
        }
        break;
      case Instr::Ext: {
        auto step = instantiate(b, case_id, ins.tmpl);
        if (!step) return {RunKind::GiveUp, std::nullopt, "degenerate instantiation"};
        return {RunKind::Step, step, ""};
      }
      case Instr::Contra:
        if (wrapped) return {RunKind::GiveUp, std::nullopt, ""};
        return {RunKind::Contra, std::nullopt, ins.msg};
      case Instr::GiveUp:
        return {RunKind::GiveUp, std::nullopt, ""};
      case Instr::Branch: {
        const Program& into =
            b.g->has_edge(b.vert(ins.u), b.vert(ins.v)) ? ins.present : ins.absent;
        if (!into.empty()) return run_program(b, case_id, into, wrapped);
        break;
      }
    }
  }
  return {RunKind::GiveUp, std::nullopt, "program fell through"};
}

}  // namespace

std::optional<ExtensionStep> match_case(const EmbeddedGraph& g, const CycleContext& ctx,
                                        int face_id) {
  const ContextFace& f = ctx.faces[face_id];
  require(f.cls == FaceClass::Minor, ErrorKind::InternalError,
          "match_case called on a non-minor face");
  require(f.j >= 2, ErrorKind::InternalError, "minor 1-face implies an extendable edge");
  require(f.j <= 9, ErrorKind::InternalError, "a j-face with j >= 10 cannot violate");
  for (const auto& rec : catalog()) {
    if (rec.j != f.j) continue;
    auto [lo, hi] = recipe_extent(rec);
    bool wrapped = hi - lo + 1 > ctx.c();
    for (int dir : {+1, -1}) {
      Binding b{&ctx, &g, face_id, f.arc_start, f.j, dir, {}};
      if (!bind_conditions(b, rec)) continue;
      auto res = run_program(b, rec.id, rec.program, wrapped);
      switch (res.kind) {
        case RunKind::Step:
          return res.step;
        case RunKind::Contra:
          fail(ErrorKind::InternalError,
               "contradiction in case " + rec.id + ": " + res.msg +
                   " (input invariant broken or catalog transcription bug)");
        case RunKind::GiveUp:
          break;
      }
    }
  }
  return std::nullopt;  // Unmatched: driver falls back to the bounded search
}

}  // namespace longcycle
