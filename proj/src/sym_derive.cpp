#include "mnv/sym/derive.hpp"

#include "mnv/sym/canonical.hpp"
#include "mnv/sym/golden.hpp"
#include "mnv/sym/parser.hpp"

namespace mnv::sym {

namespace {

std::string first_term(const SymExpr& e) {
  if (e.is_zero()) return "(empty)";
  return print_expr(expr_of(e.terms().begin()->second.first,
                            e.terms().begin()->second.second));
}

void require_zero(const SymExpr& e, const char* what) {
  if (!e.is_zero())
    throw DerivationError(std::string(what) +
                          ": nonzero canonical remainder, first term " +
                          first_term(e));
}

}  // namespace

Derivation derive_mnv() {
  Derivation d;
  d.plain = build_series(3);
  for (int l = 0; l <= 3; ++l) {
    d.sharp1.push_back(sharp_transform(d.plain.nu1[l]));
    d.sharp2.push_back(sharp_transform(d.plain.nu2[l]));
  }

  const SymExpr p1_raw = bracket3_raw(d.plain.nu1, d.sharp2);
  const SymExpr p2_raw = bracket3_raw(d.sharp1, d.plain.nu2);

  const SymExpr o7 = canonicalize(order_part(p1_raw, 7)) +
                     canonicalize(order_part(p2_raw, 7));
  const SymExpr o5 = canonicalize(order_part(p1_raw, 5)) +
                     canonicalize(order_part(p2_raw, 5));
  require_zero(o7, "order-7 cancellation");
  require_zero(o5, "order-5 cancellation");
  d.order7_zero = true;
  d.order5_zero = true;

  d.bracket_i1 = canonicalize(p1_raw);
  d.bracket_i2 = canonicalize(p2_raw);

  d.u_dot = scale(d.bracket_i1, Rational(-2)) +
            scale(conj_transform(d.bracket_i2), Rational(2));

  // Linear part must move left as d^3 u + db^3 u.
  const SymExpr d3u = parse_expr("d(d(d(u))) + db(db(db(u)))");
  require_zero(canonicalize(order_part(d.u_dot, 1) + d3u),
               "linear part");
  d.linear_part_ok = true;

  d.rhs = order_part(d.u_dot, 3);
  require_zero(d.u_dot - d.rhs - canonicalize(scale(d3u, Rational(-1))),
               "stray orders in u_dot");

  // The eight canonical cubics regroup into the four 3/4-coefficient terms.
  for (const auto& [k, t] : d.rhs.terms())
    if (!(t.second == Rational(3, 4)))
      throw DerivationError("cubic coefficient " + t.second.str() +
                            " != 3/4 on " + print_expr(expr_of(t.first)));
  const SymExpr grouped = golden("mnv_rhs");
  require_zero(canonicalize(d.rhs - grouped), "grouped right-hand side");
  {
    // each group contributes a disjoint pair of canonical terms
    SymExpr sum;
    long total = 0;
    for (const auto& [k, t] : grouped.terms()) {
      const SymExpr part = canonicalize(expr_of(t.first, t.second));
      total += part.size();
      sum = sum + part;
    }
    if (total != sum.size() || total != d.rhs.size())
      throw DerivationError("grouping overlap in right-hand side");
  }
  d.grouping_ok = true;

  require_zero(canonicalize(scale(d.rhs, Rational(4, 3)) -
                            golden("nmnv_bracket")),
               "4/3 normalization");
  d.normalization_ok = true;
  return d;
}

}  // namespace mnv::sym
