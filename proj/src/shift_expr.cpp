#include "shift_expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace ergo {

ShiftExprPtr ShiftExpr::atom(i64 h, bool comp) {
  auto e = std::make_shared<ShiftExpr>();
  e->kind = Kind::Atom;
  e->shift = h;
  e->complemented = comp;
  return e;
}

ShiftExprPtr ShiftExpr::unite(ShiftExprPtr l, ShiftExprPtr r) {
  auto e = std::make_shared<ShiftExpr>();
  e->kind = Kind::Union;
  e->left = std::move(l);
  e->right = std::move(r);
  return e;
}

ShiftExprPtr ShiftExpr::intersect(ShiftExprPtr l, ShiftExprPtr r) {
  auto e = std::make_shared<ShiftExpr>();
  e->kind = Kind::Intersect;
  e->left = std::move(l);
  e->right = std::move(r);
  return e;
}

i64 max_abs_shift(const ShiftExpr& e) {
  if (e.kind == ShiftExpr::Kind::Atom) return e.shift < 0 ? -e.shift : e.shift;
  return std::max(max_abs_shift(*e.left), max_abs_shift(*e.right));
}

namespace {
void collect_shifts(const ShiftExpr& e, std::vector<i64>& out) {
  if (e.kind == ShiftExpr::Kind::Atom) {
    out.push_back(e.shift);
  } else {
    collect_shifts(*e.left, out);
    collect_shifts(*e.right, out);
  }
}
}  // namespace

std::vector<i64> distinct_shifts(const ShiftExpr& e) {
  std::vector<i64> out;
  collect_shifts(e, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_expr(const ShiftExpr& e) {
  switch (e.kind) {
    case ShiftExpr::Kind::Atom: {
      std::string s = e.complemented ? "~E" : "E";
      if (e.shift != 0) s += "@" + std::to_string(e.shift);
      return s;
    }
    case ShiftExpr::Kind::Union:
      return "(" + format_expr(*e.left) + " | " + format_expr(*e.right) + ")";
    case ShiftExpr::Kind::Intersect:
      return "(" + format_expr(*e.left) + " & " + format_expr(*e.right) + ")";
  }
  return "";
}

namespace {

ShiftExprPtr negate(const ShiftExprPtr& e) {
  switch (e->kind) {
    case ShiftExpr::Kind::Atom:
      return ShiftExpr::atom(e->shift, !e->complemented);
    case ShiftExpr::Kind::Union:
      return ShiftExpr::intersect(negate(e->left), negate(e->right));
    case ShiftExpr::Kind::Intersect:
      return ShiftExpr::unite(negate(e->left), negate(e->right));
  }
  throw std::logic_error("unreachable");
}

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("expression parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  ShiftExprPtr parse() {
    ShiftExprPtr e = term();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return e;
  }

  ShiftExprPtr term() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '~') {
      ++pos;
      return negate(term());
    }
    if (c == '(') {
      ++pos;
      ShiftExprPtr l = term();
      skip_ws();
      if (pos >= text.size() || (text[pos] != '|' && text[pos] != '&'))
        fail("expected '|' or '&'");
      char op = text[pos++];
      ShiftExprPtr r = term();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return op == '|' ? ShiftExpr::unite(l, r) : ShiftExpr::intersect(l, r);
    }
    if (c == 'E') {
      ++pos;
      i64 h = 0;
      if (pos < text.size() && text[pos] == '@') {
        ++pos;
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) fail("expected shift after '@'");
        h = std::stoll(text.substr(start, pos - start));
      }
      return ShiftExpr::atom(h, false);
    }
    fail("expected 'E', '~' or '('");
  }
};

}  // namespace

ShiftExprPtr parse_expr(const std::string& text) {
  Parser p{text};
  return p.parse();
}

WindowSet eval_expr_on(const ShiftExpr& e, const WindowSet& base, Window w) {
  switch (e.kind) {
    case ShiftExpr::Kind::Atom: {
      WindowSet s = shift_restrict(base, e.shift, w);
      return e.complemented ? set_complement(s) : s;
    }
    case ShiftExpr::Kind::Union:
      return set_union(eval_expr_on(*e.left, base, w), eval_expr_on(*e.right, base, w));
    case ShiftExpr::Kind::Intersect:
      return set_intersect(eval_expr_on(*e.left, base, w),
                           eval_expr_on(*e.right, base, w));
  }
  throw std::logic_error("unreachable");
}

WindowSet eval_expr(const ShiftExpr& e, const LazySet& E, Window w) {
  i64 pad = max_abs_shift(e);
  WindowSet base = restrict_to(E, {w.lo - pad, w.hi + pad});
  return eval_expr_on(e, base, w);
}

bool eval_expr_word(const ShiftExpr& e, const std::vector<i64>& shifts,
                    const std::vector<bool>& bits) {
  switch (e.kind) {
    case ShiftExpr::Kind::Atom: {
      auto it = std::lower_bound(shifts.begin(), shifts.end(), e.shift);
      bool in = bits[static_cast<std::size_t>(it - shifts.begin())];
      return e.complemented ? !in : in;
    }
    case ShiftExpr::Kind::Union:
      return eval_expr_word(*e.left, shifts, bits) ||
             eval_expr_word(*e.right, shifts, bits);
    case ShiftExpr::Kind::Intersect:
      return eval_expr_word(*e.left, shifts, bits) &&
             eval_expr_word(*e.right, shifts, bits);
  }
  throw std::logic_error("unreachable");
}

}  // namespace ergo
