#include "darboux/seed_parser.hpp"

#include <cctype>

namespace darboux {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_literal(std::string_view lit) {
    skip_ws();
    if (text_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  void expect_literal(std::string_view lit) {
    if (!try_literal(lit))
      throw SeedParseError(pos_, "expected '" + std::string(lit) + "'");
  }

  bool peek_digit_or_minus() {
    skip_ws();
    if (done()) return false;
    char c = text_[pos_];
    return c == '-' || std::isdigit(static_cast<unsigned char>(c));
  }

  long parse_int() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (!done() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw SeedParseError(pos_, "expected integer");
    long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000) throw SeedParseError(start, "integer too large");
      ++pos_;
    }
    return neg ? -value : value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

bool ast_equal(const SeedExprAst& a, const SeedExprAst& b) {
  if (a.node.index() != b.node.index()) return false;
  if (auto* s = std::get_if<SeedExprAst::Sin>(&a.node))
    return s->k == std::get<SeedExprAst::Sin>(b.node).k;
  if (auto* c = std::get_if<SeedExprAst::Cos>(&a.node))
    return c->k == std::get<SeedExprAst::Cos>(b.node).k;
  if (auto* p = std::get_if<SeedExprAst::Pow>(&a.node))
    return p->e == std::get<SeedExprAst::Pow>(b.node).e;
  const auto& sa = std::get<SeedExprAst::Scale>(a.node);
  const auto& sb = std::get<SeedExprAst::Scale>(b.node);
  return sa.factor == sb.factor && ast_equal(*sa.child, *sb.child);
}

SeedExprAst parse_seed(std::string_view text) {
  Cursor cur(text);

  auto parse_function = [&cur]() -> SeedExprAst {
    if (cur.try_literal("sin(")) {
      std::size_t at = cur.pos();
      long k = cur.parse_int();
      cur.expect_literal("x)");
      if (k == 0) throw SeedParseError(at, "sin(0x) is the zero function");
      if (k < 0) throw SeedParseError(at, "wavenumber must be positive");
      return SeedExprAst{SeedExprAst::Sin{static_cast<int>(k)}};
    }
    if (cur.try_literal("cos(")) {
      std::size_t at = cur.pos();
      long k = cur.parse_int();
      cur.expect_literal("x)");
      if (k < 0) throw SeedParseError(at, "wavenumber must be positive");
      return SeedExprAst{SeedExprAst::Cos{static_cast<int>(k)}};
    }
    if (cur.try_literal("x^")) {
      std::size_t at = cur.pos();
      long e = cur.parse_int();
      if (e < 1) throw SeedParseError(at, "exponent must be >= 1");
      return SeedExprAst{SeedExprAst::Pow{static_cast<int>(e)}};
    }
    throw SeedParseError(cur.pos(), "expected sin(, cos( or x^");
  };

  SeedExprAst ast;
  if (cur.peek_digit_or_minus()) {
    std::size_t at = cur.pos();
    long num = cur.parse_int();
    long den = 1;
    if (cur.try_literal("/")) {
      std::size_t dat = cur.pos();
      den = cur.parse_int();
      if (den <= 0) throw SeedParseError(dat, "denominator must be positive");
    }
    Rational factor(num, den);
    if (factor.is_zero()) throw SeedParseError(at, "scale must be nonzero");
    cur.expect_literal("*");
    SeedExprAst child = parse_function();
    ast.node = SeedExprAst::Scale{factor, std::make_shared<SeedExprAst>(std::move(child))};
  } else {
    ast = parse_function();
  }
  cur.skip_ws();
  if (!cur.done()) throw SeedParseError(cur.pos(), "trailing input");
  return ast;
}

std::string pretty_print(const SeedExprAst& ast) {
  if (auto* s = std::get_if<SeedExprAst::Sin>(&ast.node))
    return "sin(" + std::to_string(s->k) + "x)";
  if (auto* c = std::get_if<SeedExprAst::Cos>(&ast.node))
    return "cos(" + std::to_string(c->k) + "x)";
  if (auto* p = std::get_if<SeedExprAst::Pow>(&ast.node))
    return "x^" + std::to_string(p->e);
  const auto& sc = std::get<SeedExprAst::Scale>(ast.node);
  return sc.factor.str() + "*" + pretty_print(*sc.child);
}

std::pair<SeedSpec, Rational> to_seed_spec(const SeedExprAst& ast) {
  if (auto* s = std::get_if<SeedExprAst::Sin>(&ast.node))
    return {SeedSpec::sin_k(s->k), Rational(1)};
  if (auto* c = std::get_if<SeedExprAst::Cos>(&ast.node))
    return {SeedSpec::cos_k(c->k), Rational(1)};
  if (auto* p = std::get_if<SeedExprAst::Pow>(&ast.node))
    return {SeedSpec::power_odd(p->e), Rational(1)};
  const auto& sc = std::get<SeedExprAst::Scale>(ast.node);
  auto [spec, inner] = to_seed_spec(*sc.child);
  return {spec, sc.factor * inner};
}

}  // namespace darboux
