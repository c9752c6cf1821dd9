#include "genform/dsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>

#include "genform/error.hpp"

namespace genform::dsl {

std::string Diagnostic::render() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + code + ": " + message;
}

const Value* Session::find(std::string_view name) const {
  for (const auto& def : definitions)
    if (def.name == name) return &def.value;
  return nullptr;
}

bool operator==(const Session& a, const Session& b) {
  if (!same_chart(a.chart, b.chart) || a.definitions.size() != b.definitions.size()) return false;
  for (std::size_t i = 0; i < a.definitions.size(); ++i) {
    const auto& x = a.definitions[i];
    const auto& y = b.definitions[i];
    if (x.name != y.name || !(x.value == y.value)) return false;
  }
  return true;
}

namespace {

[[noreturn]] void fail(int line, int column, const char* code, std::string message) {
  throw ParseError(Diagnostic{line, column, code, std::move(message)});
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;

  bool is(char c) const { return kind == Tok::punct && text.size() == 1 && text[0] == c; }
  bool is_ident(std::string_view s) const { return kind == Tok::ident && text == s; }
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  static constexpr std::string_view punct = "=,;[]{}()+-*/^@";
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    const int l = line, col = column;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        text += src[i];
        advance();
      }
      out.push_back({Tok::ident, std::move(text), l, col});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        text += src[i];
        advance();
      }
      out.push_back({Tok::number, std::move(text), l, col});
    } else if (c == '/' && i + 1 < src.size() && src[i + 1] == '\\') {
      fail(l, col, code::lexical, "infix wedge '/\\' is reserved; use wedge(a, b)");
    } else if (punct.find(c) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, c), l, col});
      advance();
    } else if (c == '.') {
      fail(l, col, code::lexical, "decimal numbers are not allowed; write rationals as a/b");
    } else {
      fail(l, col, code::lexical, std::string("unexpected character '") + (static_cast<unsigned char>(c) < 0x80 ? std::string(1, c) : std::string("<non-ASCII>")) + "'");
    }
  }
  out.push_back({Tok::end, "", line, column});
  return out;
}

// ---------------------------------------------------------------------------
// Syntax tree

struct Expr {
  enum class Kind { number, name, vector_basis, call, binary, negate, gform, gvector };
  Kind kind;
  std::string text;  // number digits, identifier, function name or operator
  std::vector<std::unique_ptr<Expr>> args;
  int line;
  int column;
};

using ExprPtr = std::unique_ptr<Expr>;

struct ChartDecl {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> positions;
  Rational k = 0;
};

struct DefSyntax {
  std::string name;
  int line;
  int column;
  ExprPtr expr;
};

const std::set<std::string, std::less<>>& functions() {
  static const std::set<std::string, std::less<>> names = {"wedge", "d",    "I",     "L",   "Lc",
                                                           "Lv",    "comm", "scale", "add", "smul"};
  return names;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ChartDecl chart() {
    const Token& head = peek();
    if (!head.is_ident("chart")) fail(head.line, head.column, code::syntax, "a session must start with 'chart'");
    ++pos_;
    ChartDecl decl;
    do {
      const Token& t = expect_ident("coordinate name");
      decl.names.push_back(t.text);
      decl.positions.emplace_back(t.line, t.column);
    } while (accept(','));
    if (peek().is_ident("k") && peek(1).is('=')) {
      pos_ += 2;
      decl.k = rational();
    }
    return decl;
  }

  std::vector<DefSyntax> definitions() {
    std::vector<DefSyntax> defs;
    while (peek().kind != Tok::end) {
      const Token& name = expect_ident("definition name");
      expect('=');
      ExprPtr e = expr();
      const Token& next = peek();
      if (next.kind != Tok::end && !(next.kind == Tok::ident && peek(1).is('=')))
        fail(next.line, next.column, code::syntax, "unexpected '" + next.text + "' after expression");
      defs.push_back({name.text, name.line, name.column, std::move(e)});
    }
    return defs;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  bool accept(char c) {
    if (!peek().is(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    const Token& t = peek();
    if (!t.is(c))
      fail(t.line, t.column, code::syntax,
           std::string("expected '") + c + "', found " + (t.kind == Tok::end ? "end of input" : "'" + t.text + "'"));
    ++pos_;
  }

  const Token& expect_ident(const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::ident)
      fail(t.line, t.column, code::syntax,
           std::string("expected ") + what + ", found " + (t.kind == Tok::end ? "end of input" : "'" + t.text + "'"));
    ++pos_;
    return t;
  }

  Rational rational() {
    const Token& start = peek();
    std::string text;
    if (accept('-')) text = "-";
    const Token& num = peek();
    if (num.kind != Tok::number) fail(num.line, num.column, code::syntax, "expected a rational constant");
    ++pos_;
    text += num.text;
    if (accept('/')) {
      const Token& den = peek();
      if (den.kind != Tok::number) fail(den.line, den.column, code::syntax, "expected a denominator");
      ++pos_;
      text += "/" + den.text;
    }
    auto q = parse_rational(text);
    if (!q) fail(start.line, start.column, code::syntax, "invalid rational '" + text + "'");
    return *q;
  }

  ExprPtr node(Expr::Kind kind, std::string text, const Token& at) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->text = std::move(text);
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  ExprPtr binary(const Token& op, ExprPtr lhs, ExprPtr rhs) {
    auto e = node(Expr::Kind::binary, op.text, op);
    e->args.push_back(std::move(lhs));
    e->args.push_back(std::move(rhs));
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = product();
    while (peek().is('+') || peek().is('-')) {
      const Token& op = tokens_[pos_++];
      lhs = binary(op, std::move(lhs), product());
    }
    return lhs;
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    while (peek().is('*') || peek().is('/')) {
      const Token& op = tokens_[pos_++];
      lhs = binary(op, std::move(lhs), unary());
    }
    return lhs;
  }

  ExprPtr unary() {
    if (peek().is('-')) {
      const Token& op = tokens_[pos_++];
      auto e = node(Expr::Kind::negate, "-", op);
      e->args.push_back(unary());
      return e;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (peek().is('^')) {
      const Token& op = tokens_[pos_++];
      return binary(op, std::move(base), power());
    }
    return base;
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number:
        ++pos_;
        return node(Expr::Kind::number, t.text, t);
      case Tok::ident: {
        ++pos_;
        if (!peek().is('(')) return node(Expr::Kind::name, t.text, t);
        if (!functions().contains(t.text)) fail(t.line, t.column, code::unknown_name, "unknown function '" + t.text + "'");
        ++pos_;
        auto call = node(Expr::Kind::call, t.text, t);
        do {
          call->args.push_back(expr());
        } while (accept(','));
        expect(')');
        return call;
      }
      case Tok::punct:
        if (t.is('(')) {
          ++pos_;
          ExprPtr inner = expr();
          expect(')');
          return inner;
        }
        if (t.is('@')) {
          ++pos_;
          const Token& name = expect_ident("coordinate after '@'");
          return node(Expr::Kind::vector_basis, name.text, name);
        }
        if (t.is('[') || t.is('{')) {
          ++pos_;
          auto pair = node(t.is('[') ? Expr::Kind::gform : Expr::Kind::gvector, t.text, t);
          pair->args.push_back(expr());
          expect(';');
          pair->args.push_back(expr());
          expect(t.is('[') ? ']' : '}');
          return pair;
        }
        break;
      case Tok::end:
        fail(t.line, t.column, code::syntax, "unexpected end of input");
    }
    fail(t.line, t.column, code::syntax, "unexpected '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Evaluation

class Evaluator {
 public:
  Evaluator(ChartRef chart, const std::vector<DefSyntax>& defs) : chart_(std::move(chart)) {
    for (std::size_t i = 0; i < defs.size(); ++i) declared_.emplace(defs[i].name, i);
  }

  Value eval_definition(const Expr& e) { return eval(e); }

  void bind(const std::string& name, Value v) { bound_.emplace(name, std::move(v)); }

 private:
  const char* code_for(const genform::Error& err) const {
    switch (err.code()) {
      case ErrorCode::degree_mismatch: return code::degree;
      case ErrorCode::chart_mismatch: return code::chart;
      default: return code::type;
    }
  }

  Value eval(const Expr& e) {
    try {
      return eval_unchecked(e);
    } catch (const genform::Error& err) {
      fail(e.line, e.column, code_for(err), err.what());
    }
  }

  OrdinaryForm scalar_form(const ScalarField& f) const { return OrdinaryForm::scalar(f); }

  std::optional<int> coordinate_index(std::string_view name) const {
    const auto& names = chart_->coordinates;
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<int>(it - names.begin());
  }

  Value lookup(const Expr& e) {
    if (auto it = bound_.find(e.text); it != bound_.end()) return it->second;
    if (auto it = declared_.find(e.text); it != declared_.end())
      fail(e.line, e.column, code::use_before_def, "'" + e.text + "' is used before its definition");
    if (auto i = coordinate_index(e.text)) return scalar_form(ScalarField::coordinate(chart_, *i));
    if (e.text.size() > 1 && e.text[0] == 'd')
      if (auto i = coordinate_index(std::string_view(e.text).substr(1)))
        return OrdinaryForm::basis(ScalarField::constant(chart_, 1), {*i});
    fail(e.line, e.column, code::unknown_name, "unknown name '" + e.text + "'");
  }

  [[noreturn]] void type_error(const Expr& e, const std::string& message) const {
    fail(e.line, e.column, code::type, message);
  }

  static bool is_scalar(const Value& v) {
    const auto* f = std::get_if<OrdinaryForm>(&v);
    return f && (f->degree() == 0 || f->is_zero());
  }

  static ScalarField as_scalar(const Value& v) {
    const auto& f = std::get<OrdinaryForm>(v);
    return f.is_zero() ? ScalarField::zero(f.chart()) : f.as_scalar();
  }

  static std::string describe(const Value& v) {
    if (const auto* f = std::get_if<OrdinaryForm>(&v)) return f->degree() == 0 ? "scalar" : std::to_string(f->degree()) + "-form";
    return kind_name(kind_of(v));
  }

  // Multiplies any value by an ordinary scalar field.
  static Value scale_by(const ScalarField& mu, const Value& v) {
    return std::visit([&](const auto& x) -> Value { return mu * x; }, v);
  }

  Value add(const Expr& e, const Value& a, const Value& b, bool subtract) {
    if (kind_of(a) != kind_of(b)) {
      // A bare 0 adapts to the other operand.
      if (is_scalar(a) && is_zero(a)) return subtract ? scale_by(ScalarField::constant(chart_, -1), b) : b;
      if (is_scalar(b) && is_zero(b)) return a;
      type_error(e, "cannot combine a " + describe(a) + " and a " + describe(b));
    }
    return std::visit(
        [&](const auto& x) -> Value {
          using T = std::decay_t<decltype(x)>;
          const T& y = std::get<T>(b);
          return subtract ? x - y : x + y;
        },
        a);
  }

  Value multiply(const Expr& e, const Value& a, const Value& b) {
    if (is_scalar(a)) return scale_by(as_scalar(a), b);
    if (is_scalar(b)) return scale_by(as_scalar(b), a);
    type_error(e, "'*' needs a scalar operand (got " + describe(a) + " and " + describe(b) + "); use wedge()");
  }

  Value divide(const Expr& e, const Value& a, const Value& b) {
    if (!is_scalar(b) || !as_scalar(b).is_constant() || as_scalar(b).is_zero())
      type_error(e, "division is only by non-zero rational constants");
    return scale_by(ScalarField::constant(chart_, 1 / as_scalar(b).constant_term()), a);
  }

  Value power(const Expr& e, const Value& a, const Value& b) {
    const auto* fa = std::get_if<OrdinaryForm>(&a);
    const auto* fb = std::get_if<OrdinaryForm>(&b);
    if (!fa || !fb) type_error(e, "'^' needs ordinary forms or scalars");
    if (is_scalar(a) && is_scalar(b)) {
      const ScalarField exponent = as_scalar(b);
      const Rational c = exponent.constant_term();
      if (!exponent.is_constant() || c.get_den() != 1 || sgn(c) < 0 || c > 1024)
        type_error(e, "exponent must be a non-negative integer constant");
      return scalar_form(pow(as_scalar(a), static_cast<unsigned>(c.get_num().get_ui())));
    }
    return wedge(*fa, *fb);
  }

  void expect_args(const Expr& e, std::size_t n) const {
    if (e.args.size() != n)
      fail(e.line, e.column, code::arity,
           e.text + "() takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") + ", got " +
               std::to_string(e.args.size()));
  }

  template <class A, class B>
  static bool kinds(const Value& a, const Value& b) {
    return std::holds_alternative<A>(a) && std::holds_alternative<B>(b);
  }

  Value call(const Expr& e) {
    const std::string& f = e.text;
    std::vector<Value> args;
    for (const auto& a : e.args) args.push_back(eval(*a));
    auto signature = [&] {
      std::string s;
      for (const auto& a : args) s += (s.empty() ? "" : ", ") + describe(a);
      return f + "(" + s + ")";
    };

    if (f == "d") {
      expect_args(e, 1);
      if (auto* a = std::get_if<OrdinaryForm>(&args[0])) return d(*a);
      if (auto* a = std::get_if<GeneralizedForm>(&args[0])) return d(*a);
      type_error(e, "no overload for " + signature());
    }
    if (f == "smul") {
      expect_args(e, 2);
      if (!is_scalar(args[0])) type_error(e, "smul() needs a scalar first argument, got " + signature());
      return scale_by(as_scalar(args[0]), args[1]);
    }
    if (f == "add") {
      if (e.args.size() == 3) {
        if (!is_scalar(args[1])) type_error(e, "add(a, mu, b) needs a scalar mu, got " + signature());
        if (kinds<GeneralizedVector, GeneralizedVector>(args[0], args[2]))
          return add_scaled(std::get<GeneralizedVector>(args[0]), as_scalar(args[1]), std::get<GeneralizedVector>(args[2]));
        return add(e, args[0], scale_by(as_scalar(args[1]), args[2]), false);
      }
      expect_args(e, 2);
      return add(e, args[0], args[1], false);
    }

    expect_args(e, 2);
    const Value& a = args[0];
    const Value& b = args[1];
    if (f == "wedge") {
      if (kinds<OrdinaryForm, OrdinaryForm>(a, b)) return wedge(std::get<OrdinaryForm>(a), std::get<OrdinaryForm>(b));
      if (kinds<GeneralizedForm, GeneralizedForm>(a, b))
        return wedge(std::get<GeneralizedForm>(a), std::get<GeneralizedForm>(b));
    } else if (f == "I") {
      if (kinds<VectorField, OrdinaryForm>(a, b)) return contract(std::get<VectorField>(a), std::get<OrdinaryForm>(b));
      if (kinds<GeneralizedVector, GeneralizedForm>(a, b))
        return contract(std::get<GeneralizedVector>(a), std::get<GeneralizedForm>(b));
    } else if (f == "L" || f == "Lc") {
      if (kinds<VectorField, OrdinaryForm>(a, b)) return lie(std::get<VectorField>(a), std::get<OrdinaryForm>(b));
      if (kinds<GeneralizedVector, GeneralizedForm>(a, b)) {
        const auto& v = std::get<GeneralizedVector>(a);
        const auto& x = std::get<GeneralizedForm>(b);
        return f == "L" ? lie(v, x) : lie_cartan(v, x);
      }
    } else if (f == "Lv" || f == "comm") {
      if (kinds<VectorField, VectorField>(a, b)) return bracket(std::get<VectorField>(a), std::get<VectorField>(b));
      if (kinds<GeneralizedVector, GeneralizedVector>(a, b)) {
        const auto& v = std::get<GeneralizedVector>(a);
        const auto& w = std::get<GeneralizedVector>(b);
        return f == "Lv" ? lie(v, w) : commutator(v, w);
      }
    } else if (f == "scale") {
      if (kinds<GeneralizedForm, GeneralizedVector>(a, b)) {
        const auto& a0 = std::get<GeneralizedForm>(a);
        if (a0.degree() != 0)
          fail(e.line, e.column, code::degree,
               "scale() needs a generalized 0-form, got degree " + std::to_string(a0.degree()));
        return scale(a0, std::get<GeneralizedVector>(b));
      }
    }
    type_error(e, "no overload for " + signature());
  }

  // Degree of the generalized form [a ; b]. A bare zero scalar in either slot adapts.
  int pair_degree(const Expr& e, const OrdinaryForm& a, const OrdinaryForm& b) const {
    const bool a_free = a.is_zero() && a.degree() == 0;
    const bool b_free = b.is_zero() && b.degree() == 0;
    if (!a_free && !b_free) {
      if (b.degree() != a.degree() + 1)
        fail(e.line, e.column, code::degree,
             "companion of a " + std::to_string(a.degree()) + "-form must be a " + std::to_string(a.degree() + 1) +
                 "-form, got a " + std::to_string(b.degree()) + "-form");
      return a.degree();
    }
    if (!a_free) return a.degree();
    if (!b_free) return b.degree() - 1;
    return 0;
  }

  Value eval_unchecked(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::number:
        return scalar_form(ScalarField::constant(chart_, *parse_rational(e.text)));
      case Expr::Kind::name:
        return lookup(e);
      case Expr::Kind::vector_basis: {
        auto i = coordinate_index(e.text);
        if (!i) fail(e.line, e.column, code::unknown_name, "'@" + e.text + "' does not name a coordinate");
        return VectorField::basis(chart_, *i);
      }
      case Expr::Kind::negate:
        return scale_by(ScalarField::constant(chart_, -1), eval(*e.args[0]));
      case Expr::Kind::call:
        return call(e);
      case Expr::Kind::binary: {
        const Value a = eval(*e.args[0]);
        const Value b = eval(*e.args[1]);
        switch (e.text[0]) {
          case '+': return add(e, a, b, false);
          case '-': return add(e, a, b, true);
          case '*': return multiply(e, a, b);
          case '/': return divide(e, a, b);
          default: return power(e, a, b);
        }
      }
      case Expr::Kind::gform: {
        const Value a = eval(*e.args[0]);
        const Value b = eval(*e.args[1]);
        const auto* fa = std::get_if<OrdinaryForm>(&a);
        const auto* fb = std::get_if<OrdinaryForm>(&b);
        if (!fa || !fb) type_error(e, "generalized form literal needs two ordinary forms");
        const int p = pair_degree(e, *fa, *fb);
        return GeneralizedForm(p, *fa, *fb);
      }
      case Expr::Kind::gvector: {
        const Value a = eval(*e.args[0]);
        const Value b = eval(*e.args[1]);
        VectorField field = VectorField::zero(chart_);
        if (const auto* v = std::get_if<VectorField>(&a)) {
          field = *v;
        } else if (!(is_scalar(a) && is_zero(a))) {
          type_error(*e.args[0], "first slot of a generalized vector must be a vector field");
        }
        if (!is_scalar(b)) type_error(*e.args[1], "second slot of a generalized vector must be a scalar");
        return GeneralizedVector(std::move(field), as_scalar(b));
      }
    }
    type_error(e, "malformed expression");
  }

  ChartRef chart_;
  std::map<std::string, std::size_t, std::less<>> declared_;
  std::map<std::string, Value, std::less<>> bound_;
};

bool reserved(std::string_view name) {
  return name == "chart" || name == "k" || functions().contains(name);
}

}  // namespace

Session parse_session(std::string_view text) {
  Parser parser(tokenize(text));
  const ChartDecl decl = parser.chart();
  std::set<std::string, std::less<>> taken;
  for (std::size_t i = 0; i < decl.names.size(); ++i) {
    const auto& name = decl.names[i];
    const auto [line, column] = decl.positions[i];
    if (reserved(name)) fail(line, column, code::duplicate, "'" + name + "' is reserved");
    if (!taken.insert(name).second) fail(line, column, code::duplicate, "duplicate coordinate '" + name + "'");
  }
  for (const auto& name : decl.names) {
    if (!taken.insert("d" + name).second)
      fail(decl.positions.front().first, decl.positions.front().second, code::duplicate,
           "coordinate 'd" + name + "' clashes with the basis form of '" + name + "'");
  }

  Session session;
  session.chart = make_chart(decl.names, decl.k);
  const std::vector<DefSyntax> defs = parser.definitions();
  for (const auto& def : defs) {
    if (reserved(def.name)) fail(def.line, def.column, code::duplicate, "'" + def.name + "' is reserved");
    if (!taken.insert(def.name).second)
      fail(def.line, def.column, code::duplicate, "'" + def.name + "' is already defined");
  }

  Evaluator evaluator(session.chart, defs);
  for (std::size_t i = 0; i < defs.size(); ++i) {
    Value v = evaluator.eval_definition(*defs[i].expr);
    evaluator.bind(defs[i].name, v);
    session.definitions.push_back({defs[i].name, std::move(v), defs[i].line, defs[i].column});
  }
  return session;
}

std::string format_session(const Session& session) {
  std::string out = format(*session.chart) + "\n";
  for (const auto& def : session.definitions) out += def.name + " = " + format(def.value) + "\n";
  return out;
}

std::vector<Rational> parse_point(const Chart& chart, std::string_view bindings) {
  std::vector<std::optional<Rational>> values(chart.coordinates.size());
  auto usage = [](std::string message) { fail(0, 0, code::usage, std::move(message)); };
  std::size_t start = 0;
  while (start <= bindings.size()) {
    const std::size_t comma = std::min(bindings.find(',', start), bindings.size());
    std::string_view item = bindings.substr(start, comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) usage("binding '" + std::string(item) + "' is not of the form name=value");
    const std::string_view name = item.substr(0, eq);
    const auto it = std::find(chart.coordinates.begin(), chart.coordinates.end(), name);
    if (it == chart.coordinates.end()) usage("'" + std::string(name) + "' is not a coordinate");
    auto& slot = values[static_cast<std::size_t>(it - chart.coordinates.begin())];
    if (slot) usage("coordinate '" + std::string(name) + "' bound twice");
    slot = parse_rational(item.substr(eq + 1));
    if (!slot) usage("invalid rational '" + std::string(item.substr(eq + 1)) + "'");
    start = comma + 1;
  }
  std::vector<Rational> point;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) usage("point binds " + std::to_string(std::count_if(values.begin(), values.end(), [](const auto& v) { return v.has_value(); })) + " of " + std::to_string(values.size()) + " coordinates; missing '" + chart.coordinates[i] + "'");
    point.push_back(*values[i]);
  }
  return point;
}

}  // namespace genform::dsl
