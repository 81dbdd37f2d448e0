#include "mnv/sym/golden.hpp"

#include <stdexcept>

#include "mnv/sym/parser.hpp"

namespace mnv::sym {

const std::vector<GoldenEntry>& golden_table() {
  static const std::vector<GoldenEntry> table = {
      {"nu_1_0", "1/4 dbi(u*ub)"},
      {"nu_2_0", "1/2 ub"},
      {"nu_1_1", "1/16 dbi(u*ub*dbi(u*ub)) - 1/4 dbi(u*d(ub))"},
      {"nu_2_1", "1/8 ub*dbi(u*ub) - 1/2 d(ub)"},
      {"nu_1_2",
       "1/64 dbi(u*ub*dbi(u*ub*dbi(u*ub)))"
       " - 1/16 dbi(u*d(ub*dbi(u*ub))) - 1/16 dbi(u*ub*dbi(u*d(ub)))"
       " + 1/4 dbi(u*d(d(ub)))"},
      {"nu_2_2",
       "1/32 ub*dbi(u*ub*dbi(u*ub))"
       " - 1/8 d(ub*dbi(u*ub)) - 1/8 ub*dbi(u*d(ub))"
       " + 1/2 d(d(ub))"},
      {"nu_2_3_printed",
       "1/128 u*dbi(u*ub*dbi(u*ub*dbi(u*ub)))"
       " - 1/32 ub*dbi(u*d(ub*dbi(u*ub))) - 1/32 ub*dbi(u*ub*dbi(u*d(ub)))"
       " - 1/32 d(ub*dbi(u*ub*dbi(u*ub)))"
       " + 1/8 u*dbi(u*d(d(ub))) + 1/8 d(d(u*dbi(u*ub)))"
       " + 1/8 d(ub*dbi(u*d(ub)))"
       " - 1/2 d(d(d(ub)))"},
      {"nu_2_3_derived",
       "1/128 ub*dbi(u*ub*dbi(u*ub*dbi(u*ub)))"
       " - 1/32 ub*dbi(u*d(ub*dbi(u*ub))) - 1/32 ub*dbi(u*ub*dbi(u*d(ub)))"
       " - 1/32 d(ub*dbi(u*ub*dbi(u*ub)))"
       " + 1/8 ub*dbi(u*d(d(ub))) + 1/8 d(d(ub*dbi(u*ub)))"
       " + 1/8 d(ub*dbi(u*d(ub)))"
       " - 1/2 d(d(d(ub)))"},
      {"nus_1_0", "-1/4 dbi(u*ub)"},
      {"nus_2_0", "1/2 u"},
      {"nus_1_1", "1/16 dbi(u*ub*dbi(u*ub)) - 1/4 dbi(ub*d(u))"},
      {"nus_2_1", "-1/8 u*dbi(u*ub) + 1/2 d(u)"},
      {"nus_1_2",
       "-1/64 dbi(u*ub*dbi(u*ub*dbi(u*ub)))"
       " + 1/16 dbi(ub*d(u*dbi(u*ub))) + 1/16 dbi(u*ub*dbi(ub*d(u)))"
       " - 1/4 dbi(ub*d(d(u)))"},
      {"nus_2_2",
       "1/32 u*dbi(u*ub*dbi(u*ub))"
       " - 1/8 d(u*dbi(u*ub)) - 1/8 u*dbi(ub*d(u))"
       " + 1/2 d(d(u))"},
      {"nus_2_3",
       "-1/128 u*dbi(u*ub*dbi(u*ub*dbi(u*ub)))"
       " + 1/32 u*dbi(ub*d(u*dbi(u*ub))) + 1/32 u*dbi(u*ub*dbi(ub*d(u)))"
       " + 1/32 d(u*dbi(u*ub*dbi(u*ub)))"
       " - 1/8 u*dbi(ub*d(d(u))) - 1/8 d(d(u*dbi(u*ub)))"
       " - 1/8 d(u*dbi(ub*d(u)))"
       " + 1/2 d(d(d(u)))"},
      {"i1_final",
       "-3/8 u*dbi(ub*d(d(u))) - 3/8 d(u)*dbi(u*d(ub))"
       " - 3/8 u*dbi(d(u)*d(ub)) - 3/8 d(u)*dbi(ub*d(u))"
       " + 1/2 d(d(d(u)))"},
      {"i2_final",
       "3/8 d(ub)*dbi(u*d(ub)) + 3/8 d(ub)*dbi(ub*d(u))"
       " + 3/8 ub*dbi(d(u)*d(ub)) + 3/8 ub*dbi(u*d(d(ub)))"
       " - 1/2 d(d(d(ub)))"},
      {"mnv_rhs",
       "3/4 u*dbi(d(ub*d(u))) + 3/4 d(u)*dbi(d(u*ub))"
       " + 3/4 u*di(db(ub*db(u))) + 3/4 db(u)*di(db(u*ub))"},
      {"nmnv_bracket",
       "u*dbi(d(ub*d(u))) + d(u)*dbi(d(u*ub))"
       " + u*di(db(ub*db(u))) + db(u)*di(db(u*ub))"},
  };
  return table;
}

SymExpr golden(const std::string& name) {
  for (const auto& e : golden_table())
    if (name == e.name) return parse_expr(e.text);
  throw std::invalid_argument("golden: unknown entry " + name);
}

}  // namespace mnv::sym
