#include "decidua/flowchart/corpus.hpp"

namespace decidua::flowchart {

const std::vector<CorpusProgram>& bundled_corpus() {
  static const std::vector<CorpusProgram> corpus = {
      {"skip",
       "# no declarations: a single empty state\n"
       "skip\n"},

      {"countdown",
       "var x in 0..7;\n"
       "while 0 < x do x := x - 1 od\n"},

      {"diverge",
       "# spins forever when b starts at 1\n"
       "var b in 0..1;\n"
       "while b = 1 do skip od\n"},

      {"undef_guard",
       "var x in 0..2;\n"
       "if undef then skip else skip fi\n"},

      {"overflow_assign",
       "# the sum always leaves the range of x\n"
       "var x in 0..2;\n"
       "x := x + 5\n"},

      {"parity",
       "var n in 0..7;\n"
       "var p in 0..1;\n"
       "p := 0;\n"
       "while 0 < n do\n"
       "  n := n - 1;\n"
       "  if p = 0 then p := 1 else p := 0 fi\n"
       "od\n"},

      {"gcd_sub",
       "# subtraction loop; spins when exactly one input is zero\n"
       "var a in 0..6;\n"
       "var b in 0..6;\n"
       "while not (a = b) do\n"
       "  if a < b then b := b - a else a := a - b fi\n"
       "od\n"},

      {"sub_partiality",
       "# the guard has no value at x = 0\n"
       "var x in 0..3;\n"
       "if x - 1 < 2 then x := 0 else x := 3 fi\n"},

      {"mul_square",
       "var x in 0..3;\n"
       "var y in 0..9;\n"
       "y := x * x\n"},

      {"nested_loops",
       "var i in 0..3;\n"
       "var j in 0..3;\n"
       "var s in 0..15;\n"
       "s := 0;\n"
       "while 0 < i do\n"
       "  j := i;\n"
       "  while 0 < j do\n"
       "    (if s < 15 then s := s + 1 else skip fi);\n"
       "    j := j - 1\n"
       "  od;\n"
       "  i := i - 1\n"
       "od\n"},

      {"bool_guards",
       "var a in 0..1;\n"
       "var b in 0..1;\n"
       "if (a = 1 and not (b = 0)) or b = 1 then a := 0 else b := 0 fi\n"},

      {"contagious_undef",
       "# 'or undef' poisons the guard in every state\n"
       "var x in 0..2;\n"
       "if x = 1 or undef then skip else x := 0 fi\n"},

      {"seq_grouping",
       "var x in 0..4;\n"
       "(x := 1; x := x + 1);\n"
       "x := x * 2\n"},
  };
  return corpus;
}

}  // namespace decidua::flowchart
