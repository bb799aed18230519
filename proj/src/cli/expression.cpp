#include "commensurate/cli/expression.hpp"

#include <algorithm>
#include <cctype>

#include "commensurate/errors.hpp"

namespace commensurate::cli {

bool Syntax::accepts(LiteralStyle style) const {
  return std::find(literals.begin(), literals.end(), style) != literals.end();
}

bool same_shape(const Expression &a, const Expression &b) {
  if (a.kind != b.kind || a.text != b.text || a.exponent != b.exponent ||
      a.operands.size() != b.operands.size())
    return false;
  for (std::size_t i = 0; i < a.operands.size(); ++i) {
    if (!same_shape(a.operands[i], b.operands[i]))
      return false;
  }
  return true;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

const char *const atom_expected = "expected one of: generator, literal, '(', inv(, embed(, psi(";

class Parser {
public:
  Parser(std::string_view src, const Syntax &syntax) : src_(src), syntax_(syntax) {}

  Expression parse() {
    Expression e = parse_expr();
    skip_space();
    if (pos_ < src_.size())
      throw ParseError(pos_, "expected one of: '*', '^', end of input");
    return e;
  }

private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c))
      throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  Expression parse_expr() {
    Expression lhs = parse_term();
    while (peek('*')) {
      ++pos_;
      Expression rhs = parse_term();
      Expression product;
      product.kind = Expression::Kind::product;
      product.position = lhs.position;
      product.operands.push_back(std::move(lhs));
      product.operands.push_back(std::move(rhs));
      lhs = std::move(product);
    }
    return lhs;
  }

  Expression parse_term() {
    Expression base = parse_atom();
    if (!peek('^'))
      return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
      negative = src_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= src_.size() || !is_digit(src_[pos_]))
      throw ParseError(pos_, "expected a signed integer exponent");
    std::int64_t value = 0;
    while (pos_ < src_.size() && is_digit(src_[pos_])) {
      if (__builtin_mul_overflow(value, 10, &value) ||
          __builtin_add_overflow(value, src_[pos_] - '0', &value))
        throw ParseError(start, "exponent out of range");
      ++pos_;
    }
    Expression power;
    power.kind = Expression::Kind::power;
    power.position = base.position;
    power.exponent = negative ? -value : value;
    power.operands.push_back(std::move(base));
    return power;
  }

  Expression literal(std::size_t start, std::size_t end) {
    Expression e;
    e.kind = Expression::Kind::literal;
    e.position = start;
    e.text = std::string(src_.substr(start, end - start));
    pos_ = end;
    if (syntax_.check_literal) {
      try {
        syntax_.check_literal(e.text);
      } catch (const MalformedLiteral &err) {
        throw ParseError(start, std::string("malformed literal: ") + err.what());
      }
    }
    return e;
  }

  /// End of "(digits and spaces)" starting at `at`, or npos.
  std::size_t cycle_end(std::size_t at) const {
    if (at >= src_.size() || src_[at] != '(')
      return std::string_view::npos;
    std::size_t i = at + 1;
    while (i < src_.size() && (is_digit(src_[i]) || src_[i] == ' '))
      ++i;
    return i < src_.size() && src_[i] == ')' ? i + 1 : std::string_view::npos;
  }

  Expression parse_atom() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= src_.size())
      throw ParseError(pos_, atom_expected);
    const char c = src_[pos_];

    if (c == '[' && syntax_.accepts(LiteralStyle::matrix)) {
      int depth = 0;
      for (std::size_t i = pos_; i < src_.size(); ++i) {
        if (src_[i] == '[')
          ++depth;
        else if (src_[i] == ']' && --depth == 0)
          return literal(start, i + 1);
      }
      throw ParseError(start, "unterminated matrix literal");
    }

    if (c == '#' && syntax_.accepts(LiteralStyle::table_index)) {
      std::size_t i = pos_ + 1;
      while (i < src_.size() && is_digit(src_[i]))
        ++i;
      if (i == pos_ + 1)
        throw ParseError(pos_ + 1, "expected digits after '#'");
      return literal(start, i);
    }

    if (c == '(') {
      if (syntax_.accepts(LiteralStyle::permutation)) {
        std::size_t end = cycle_end(pos_);
        if (end != std::string_view::npos) {
          for (std::size_t next = cycle_end(end); next != std::string_view::npos;
               next = cycle_end(end))
            end = next;
          return literal(start, end);
        }
      }
      if (syntax_.accepts(LiteralStyle::dyadic)) {
        const std::size_t close = src_.find(')', pos_);
        const std::string_view body =
            close == std::string_view::npos ? std::string_view{} : src_.substr(pos_ + 1, close - pos_ - 1);
        if (body.find(';') != std::string_view::npos && body.find('(') == std::string_view::npos)
          return literal(start, close + 1);
      }
      ++pos_;
      Expression inner = parse_expr();
      expect(')');
      return inner;
    }

    if (syntax_.accepts(LiteralStyle::integer) &&
        (is_digit(c) || (c == '-' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1])))) {
      std::size_t i = pos_ + 1;
      while (i < src_.size() && is_digit(src_[i]))
        ++i;
      return literal(start, i);
    }

    if (is_ident_start(c)) {
      std::size_t i = pos_;
      while (i < src_.size() && is_ident_char(src_[i]))
        ++i;
      const std::string name(src_.substr(pos_, i - pos_));
      pos_ = i;
      if (name == "inv" || name == "embed") {
        expect('(');
        Expression call;
        call.kind = name == "inv" ? Expression::Kind::inverse : Expression::Kind::embed;
        call.position = start;
        call.operands.push_back(parse_expr());
        expect(')');
        return call;
      }
      if (name == "psi") {
        expect('(');
        skip_space();
        const std::size_t target_start = pos_;
        while (pos_ < src_.size() && (is_ident_char(src_[pos_]) || src_[pos_] == ':'))
          ++pos_;
        if (pos_ == target_start)
          throw ParseError(pos_, "expected a target name");
        Expression call;
        call.kind = Expression::Kind::psi;
        call.position = start;
        call.text = std::string(src_.substr(target_start, pos_ - target_start));
        expect(',');
        call.operands.push_back(parse_expr());
        expect(')');
        return call;
      }
      if (std::find(syntax_.generators.begin(), syntax_.generators.end(), name) ==
          syntax_.generators.end())
        throw ParseError(start, "unknown generator '" + name + "'");
      Expression gen;
      gen.kind = Expression::Kind::generator;
      gen.position = start;
      gen.text = name;
      return gen;
    }

    throw ParseError(start, atom_expected);
  }

  std::string_view src_;
  const Syntax &syntax_;
  std::size_t pos_ = 0;
};

} // namespace

Expression parse_expression(std::string_view source, const Syntax &syntax) {
  return Parser(source, syntax).parse();
}

std::string render(const Expression &expr) {
  using Kind = Expression::Kind;
  switch (expr.kind) {
  case Kind::generator:
  case Kind::literal:
    return expr.text;
  case Kind::product: {
    const Expression &rhs = expr.operands[1];
    const std::string right = rhs.kind == Kind::product ? "(" + render(rhs) + ")" : render(rhs);
    return render(expr.operands[0]) + "*" + right;
  }
  case Kind::power: {
    const Expression &base = expr.operands[0];
    const bool wrap = base.kind == Kind::product || base.kind == Kind::power ||
                      (base.kind == Kind::literal && !base.text.empty() && base.text[0] == '-');
    return (wrap ? "(" + render(base) + ")" : render(base)) + "^" + std::to_string(expr.exponent);
  }
  case Kind::inverse:
    return "inv(" + render(expr.operands[0]) + ")";
  case Kind::embed:
    return "embed(" + render(expr.operands[0]) + ")";
  case Kind::psi:
    return "psi(" + expr.text + "," + render(expr.operands[0]) + ")";
  }
  return {};
}

} // namespace commensurate::cli
