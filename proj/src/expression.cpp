#include "hadafrac/expression.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hadafrac/errors.hpp"

namespace hadafrac {

struct ExprAst::Node {
  ExprKind kind;
  double value = 0.0;
  std::optional<ExprAst> lhs;
  std::optional<ExprAst> rhs;
  std::size_t depth = 1;
};

ExprAst ExprAst::constant(double value) {
  return ExprAst(std::make_shared<const Node>(Node{ExprKind::Constant, value, {}, {}, 1}));
}

ExprAst ExprAst::variable() {
  return ExprAst(std::make_shared<const Node>(Node{ExprKind::Variable, 0.0, {}, {}, 1}));
}

ExprAst ExprAst::unary(ExprKind kind, ExprAst operand) {
  if (kind < ExprKind::Neg || kind > ExprKind::Cos) {
    throw DomainError("not a unary expression kind");
  }
  const std::size_t depth = operand.depth() + 1;
  return ExprAst(std::make_shared<const Node>(Node{kind, 0.0, std::move(operand), {}, depth}));
}

ExprAst ExprAst::binary(ExprKind kind, ExprAst lhs, ExprAst rhs) {
  if (kind < ExprKind::Add) {
    throw DomainError("not a binary expression kind");
  }
  const std::size_t depth = std::max(lhs.depth(), rhs.depth()) + 1;
  return ExprAst(
      std::make_shared<const Node>(Node{kind, 0.0, std::move(lhs), std::move(rhs), depth}));
}

ExprKind ExprAst::kind() const noexcept { return node_->kind; }
double ExprAst::value() const noexcept { return node_->value; }
std::size_t ExprAst::depth() const noexcept { return node_->depth; }

const ExprAst& ExprAst::lhs() const {
  if (!node_->lhs) {
    throw DomainError("expression node has no operand");
  }
  return *node_->lhs;
}

const ExprAst& ExprAst::rhs() const {
  if (!node_->rhs) {
    throw DomainError("expression node has no second operand");
  }
  return *node_->rhs;
}

bool operator==(const ExprAst& a, const ExprAst& b) {
  if (a.node_ == b.node_) {
    return true;
  }
  if (a.kind() != b.kind()) {
    return false;
  }
  switch (a.kind()) {
    case ExprKind::Constant:
      return a.value() == b.value();
    case ExprKind::Variable:
      return true;
    default:
      break;
  }
  if (!(a.lhs() == b.lhs())) {
    return false;
  }
  return a.kind() < ExprKind::Add || a.rhs() == b.rhs();
}

namespace {

constexpr std::size_t kMaxNesting = 256;

struct FunctionName {
  std::string_view name;
  ExprKind kind;
};

constexpr std::array<FunctionName, 6> kFunctions = {{
    {"ln", ExprKind::Ln},
    {"exp", ExprKind::Exp},
    {"sqrt", ExprKind::Sqrt},
    {"abs", ExprKind::Abs},
    {"sin", ExprKind::Sin},
    {"cos", ExprKind::Cos},
}};

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
  double number = 0.0;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

const std::vector<std::string> kAtomStart = {"number", "x", "pi", "e", "function", "("};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  ExprAst parse() {
    ExprAst result = expr();
    if (current_.kind != Tok::End) {
      fail("unexpected '" + std::string(current_.text) + "'",
           {"+", "-", "*", "/", "^", "end of input"});
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
    throw ParseError("syntax error at byte " + std::to_string(current_.offset) + ": " + message,
                     current_.offset, std::move(expected));
  }

  void advance() {
    while (pos_ < text_.size() && is_space(text_[pos_])) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, start, "end of input"};
      return;
    }
    const char c = text_[pos_];
    if (is_digit(c) || (c == '.' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]))) {
      lex_number(start);
      return;
    }
    if (is_alpha(c)) {
      while (pos_ < text_.size() && (is_alpha(text_[pos_]) || is_digit(text_[pos_]))) {
        ++pos_;
      }
      current_ = {Tok::Ident, start, text_.substr(start, pos_ - start)};
      return;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      default:
        current_ = {Tok::End, start, text_.substr(start, 1)};
        fail("invalid character '" + std::string(1, c) + "'",
             {"number", "identifier", "operator", "(", ")"});
    }
    ++pos_;
    current_ = {kind, start, text_.substr(start, 1)};
  }

  void lex_number(std::size_t start) {
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      ++pos_;
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) {
        ++pos_;
      }
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) {
        ++look;
      }
      if (look < text_.size() && is_digit(text_[look])) {
        pos_ = look;
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
          ++pos_;
        }
      }
    }
    const std::string_view literal = text_.substr(start, pos_ - start);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(literal.data(), literal.data() + literal.size(), value);
    if (ec != std::errc() || end != literal.data() + literal.size() || !std::isfinite(value)) {
      current_ = {Tok::Number, start, literal};
      fail("numeric literal '" + std::string(literal) + "' is out of range", {"number"});
    }
    current_ = {Tok::Number, start, literal, value};
  }

  void expect(Tok kind, const char* what) {
    if (current_.kind != kind) {
      fail("expected '" + std::string(what) + "', found '" + std::string(current_.text) + "'",
           {what});
    }
    advance();
  }

  void enter() {
    if (++nesting_ > kMaxNesting) {
      fail("expression nested deeper than " + std::to_string(kMaxNesting), {});
    }
  }

  ExprAst expr() {
    enter();
    ExprAst result = term();
    while (current_.kind == Tok::Plus || current_.kind == Tok::Minus) {
      const ExprKind op = current_.kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub;
      advance();
      result = ExprAst::binary(op, std::move(result), term());
    }
    --nesting_;
    return result;
  }

  ExprAst term() {
    ExprAst result = factor();
    while (current_.kind == Tok::Star || current_.kind == Tok::Slash) {
      const ExprKind op = current_.kind == Tok::Star ? ExprKind::Mul : ExprKind::Div;
      advance();
      result = ExprAst::binary(op, std::move(result), factor());
    }
    return result;
  }

  ExprAst factor() {
    enter();
    ExprAst result = [&] {
      if (current_.kind == Tok::Minus) {
        advance();
        return ExprAst::unary(ExprKind::Neg, power());
      }
      return power();
    }();
    --nesting_;
    return result;
  }

  ExprAst power() {
    ExprAst base = atom();
    if (current_.kind == Tok::Caret) {
      advance();
      return ExprAst::binary(ExprKind::Pow, std::move(base), factor());
    }
    return base;
  }

  ExprAst atom() {
    switch (current_.kind) {
      case Tok::Number: {
        const double value = current_.number;
        advance();
        return ExprAst::constant(value);
      }
      case Tok::LParen: {
        advance();
        ExprAst inner = expr();
        expect(Tok::RParen, ")");
        return inner;
      }
      case Tok::Ident:
        return identifier();
      default:
        fail("expected an operand, found '" + std::string(current_.text) + "'", kAtomStart);
    }
  }

  ExprAst identifier() {
    const Token ident = current_;
    if (ident.text == "x") {
      advance();
      return ExprAst::variable();
    }
    if (ident.text == "pi") {
      advance();
      return ExprAst::constant(std::numbers::pi);
    }
    if (ident.text == "e") {
      advance();
      return ExprAst::constant(std::numbers::e);
    }
    const auto fn = std::find_if(kFunctions.begin(), kFunctions.end(),
                                 [&](const FunctionName& f) { return f.name == ident.text; });
    if (fn == kFunctions.end()) {
      fail("unknown identifier '" + std::string(ident.text) + "'",
           {"x", "pi", "e", "ln", "exp", "sqrt", "abs", "sin", "cos"});
    }
    advance();
    expect(Tok::LParen, "(");
    if (current_.kind == Tok::RParen) {
      fail("arity error: " + std::string(fn->name) + " takes exactly 1 argument, got 0", kAtomStart);
    }
    ExprAst argument = expr();
    if (current_.kind == Tok::Comma) {
      fail("arity error: " + std::string(fn->name) + " takes exactly 1 argument", {")"});
    }
    expect(Tok::RParen, ")");
    return ExprAst::unary(fn->kind, std::move(argument));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t nesting_ = 0;
  Token current_{Tok::End, 0, ""};
};

std::string_view function_name(ExprKind kind) {
  for (const auto& f : kFunctions) {
    if (f.kind == kind) {
      return f.name;
    }
  }
  return "?";
}

char operator_symbol(ExprKind kind) {
  switch (kind) {
    case ExprKind::Add: return '+';
    case ExprKind::Sub: return '-';
    case ExprKind::Mul: return '*';
    case ExprKind::Div: return '/';
    case ExprKind::Pow: return '^';
    default: return '?';
  }
}

std::string format_constant(double value) {
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), std::abs(value));
  std::string digits(buffer.data(), end);
  return std::signbit(value) ? "(-" + digits + ")" : digits;
}

void serialize_into(const ExprAst& ast, std::string& out) {
  switch (ast.kind()) {
    case ExprKind::Constant:
      out += format_constant(ast.value());
      return;
    case ExprKind::Variable:
      out += 'x';
      return;
    case ExprKind::Neg:
      out += "(-";
      serialize_into(ast.lhs(), out);
      out += ')';
      return;
    case ExprKind::Ln:
    case ExprKind::Exp:
    case ExprKind::Sqrt:
    case ExprKind::Abs:
    case ExprKind::Sin:
    case ExprKind::Cos:
      out += function_name(ast.kind());
      out += '(';
      serialize_into(ast.lhs(), out);
      out += ')';
      return;
    default:
      out += '(';
      serialize_into(ast.lhs(), out);
      out += operator_symbol(ast.kind());
      serialize_into(ast.rhs(), out);
      out += ')';
      return;
  }
}

[[noreturn]] void fault(const ExprAst& ast, double tau, const std::string& what) {
  const std::string sub = serialize(ast);
  throw EvaluationError("domain fault in " + sub + " at x = " + std::to_string(tau) + ": " + what,
                        sub, tau);
}

double evaluate(const ExprAst& ast, double tau) {
  double result = 0.0;
  switch (ast.kind()) {
    case ExprKind::Constant:
      return ast.value();
    case ExprKind::Variable:
      return tau;
    case ExprKind::Neg:
      return -evaluate(ast.lhs(), tau);
    case ExprKind::Ln: {
      const double a = evaluate(ast.lhs(), tau);
      if (!(a > 0.0)) {
        fault(ast, tau, "logarithm of a nonpositive value");
      }
      result = std::log(a);
      break;
    }
    case ExprKind::Exp:
      result = std::exp(evaluate(ast.lhs(), tau));
      break;
    case ExprKind::Sqrt: {
      const double a = evaluate(ast.lhs(), tau);
      if (a < 0.0) {
        fault(ast, tau, "square root of a negative value");
      }
      result = std::sqrt(a);
      break;
    }
    case ExprKind::Abs:
      return std::abs(evaluate(ast.lhs(), tau));
    case ExprKind::Sin:
      result = std::sin(evaluate(ast.lhs(), tau));
      break;
    case ExprKind::Cos:
      result = std::cos(evaluate(ast.lhs(), tau));
      break;
    case ExprKind::Add:
      result = evaluate(ast.lhs(), tau) + evaluate(ast.rhs(), tau);
      break;
    case ExprKind::Sub:
      result = evaluate(ast.lhs(), tau) - evaluate(ast.rhs(), tau);
      break;
    case ExprKind::Mul:
      result = evaluate(ast.lhs(), tau) * evaluate(ast.rhs(), tau);
      break;
    case ExprKind::Div: {
      const double num = evaluate(ast.lhs(), tau);
      const double den = evaluate(ast.rhs(), tau);
      if (den == 0.0) {
        fault(ast, tau, "division by zero");
      }
      result = num / den;
      break;
    }
    case ExprKind::Pow: {
      const double base = evaluate(ast.lhs(), tau);
      const double exponent = evaluate(ast.rhs(), tau);
      if (base == 0.0 && exponent < 0.0) {
        fault(ast, tau, "zero raised to a negative power");
      }
      if (base < 0.0 && exponent != std::trunc(exponent)) {
        fault(ast, tau, "negative base with a non-integer exponent");
      }
      result = std::pow(base, exponent);
      break;
    }
  }
  if (!std::isfinite(result)) {
    fault(ast, tau, "result is not finite");
  }
  return result;
}

}  // namespace

ExprAst parse_expr(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty expression", 0, kAtomStart);
  }
  if (text.size() > kMaxExpressionBytes) {
    throw ParseError("expression longer than 64 KiB", kMaxExpressionBytes, {});
  }
  return Parser(text).parse();
}

std::string serialize(const ExprAst& ast) {
  std::string out;
  serialize_into(ast, out);
  return out;
}

double eval_expr(const ExprAst& ast, double tau) {
  if (!(tau >= 1.0)) {
    throw DomainError("expressions are evaluated on tau >= 1, got " + std::to_string(tau));
  }
  return evaluate(ast, tau);
}

RealFunction to_function(ExprAst ast) {
  std::string label = serialize(ast);
  return RealFunction([ast = std::move(ast)](double tau) { return eval_expr(ast, tau); },
                      std::move(label));
}

RealFunction parse_function(std::string_view text) { return to_function(parse_expr(text)); }

}  // namespace hadafrac
