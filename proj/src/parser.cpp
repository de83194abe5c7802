#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "dimetrics/frontend.hpp"
#include "lexer.hpp"

namespace dimetrics::frontend {

using detail::Token;
using detail::TokenKind;

namespace {

struct Expr {
  enum class Kind { literal, name, this_ref, field_access, call, creation };
  Kind kind = Kind::literal;
  std::string name;
  std::unique_ptr<Expr> target;
  std::vector<Expr> args;
};

struct Stmt {
  enum class Kind { local, assign, ret, expr };
  Kind kind = Kind::expr;
  std::string declared_type;
  std::string declared_name;
  std::optional<Expr> lhs;
  std::optional<Expr> value;
};

struct Param {
  std::string type;
  std::string name;
};

struct FieldDecl {
  std::string type;
  std::string name;
  std::optional<Expr> init;
};

struct MethodDecl {
  std::string name;
  bool is_constructor = false;
  std::string return_type;
  std::vector<Param> params;
  std::vector<Stmt> body;
};

struct ClassDecl {
  std::string name;
  std::size_t line = 1;
  std::vector<std::string> super_types;
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;
  std::size_t first_token = 0;
  std::size_t last_token = 0;
};

struct SyntaxError {
  std::size_t line;
  std::size_t column;
  std::string message;
};

std::string describe(const Token& t) {
  if (t.kind == TokenKind::end) return "end of file";
  return "'" + t.text + "'";
}

const std::set<std::string, std::less<>> kClassModifiers = {"public", "abstract", "final"};
const std::set<std::string, std::less<>> kMemberModifiers = {"public", "private", "protected", "static", "final"};

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  std::vector<ClassDecl> parse_unit() {
    if (peek().is_keyword("package")) {
      next();
      qualified_name(false);
      expect_punct(";");
    }
    while (peek().is_keyword("import")) {
      next();
      qualified_name(true);
      expect_punct(";");
    }
    std::vector<ClassDecl> classes;
    while (peek().kind != TokenKind::end) classes.push_back(class_decl());
    return classes;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void reject(const Token& t) const {
    if (t.kind == TokenKind::end) throw SyntaxError{t.line, t.column, "unexpected end of file"};
    if (t.kind == TokenKind::keyword) throw SyntaxError{t.line, t.column, "unsupported construct '" + t.text + "'"};
    throw SyntaxError{t.line, t.column, "unsupported token '" + t.text + "'"};
  }

  [[noreturn]] void expected(std::string_view what) const {
    const Token& t = peek();
    if (t.kind == TokenKind::punct && !is_structural(t.text)) reject(t);
    if (t.kind == TokenKind::keyword && !is_subset_keyword(t.text)) reject(t);
    throw SyntaxError{t.line, t.column, "expected " + std::string(what) + ", found " + describe(t)};
  }

  static bool is_structural(std::string_view p) {
    return p == "{" || p == "}" || p == "(" || p == ")" || p == "[" || p == "]" || p == ";" || p == "," || p == "." ||
           p == "=";
  }

  static bool is_subset_keyword(std::string_view k) {
    static const std::set<std::string, std::less<>> subset = {
        "class", "extends", "implements", "new",     "this",   "return", "void",    "package", "import", "public",
        "private", "protected", "static", "final",  "abstract", "true", "false",  "null",    "boolean", "byte",
        "char",  "short",   "int",        "long",   "float",  "double"};
    return subset.count(k) != 0;
  }

  void expect_punct(std::string_view p) {
    if (!peek().is_punct(p)) expected("'" + std::string(p) + "'");
    next();
  }

  std::string identifier(std::string_view what = "identifier") {
    if (peek().kind != TokenKind::identifier) expected(what);
    return next().text;
  }

  void qualified_name(bool allow_wildcard) {
    identifier();
    while (peek().is_punct(".")) {
      next();
      if (allow_wildcard && peek().is_punct("*")) {
        next();
        return;
      }
      identifier();
    }
  }

  bool at_type_start() const {
    const Token& t = peek();
    return t.kind == TokenKind::identifier || (t.kind == TokenKind::keyword && detail::is_primitive_type(t.text));
  }

  // Returns the element type; array brackets are consumed and dropped.
  std::string type() {
    if (!at_type_start()) expected("type");
    std::string name = next().text;
    if (peek().is_punct("<")) reject(peek());
    while (peek().is_punct("[")) {
      next();
      expect_punct("]");
    }
    return name;
  }

  ClassDecl class_decl() {
    ClassDecl decl;
    decl.first_token = pos_;
    while (peek().kind == TokenKind::keyword && kClassModifiers.count(peek().text) != 0) next();
    if (!peek().is_keyword("class")) expected("class declaration");
    decl.line = peek().line;
    next();
    decl.name = identifier("class name");
    if (peek().is_punct("<")) reject(peek());
    if (peek().is_keyword("extends")) {
      next();
      decl.super_types.push_back(super_type());
    }
    if (peek().is_keyword("implements")) {
      next();
      decl.super_types.push_back(super_type());
      while (peek().is_punct(",")) {
        next();
        decl.super_types.push_back(super_type());
      }
    }
    expect_punct("{");
    while (!peek().is_punct("}")) {
      if (peek().kind == TokenKind::end) expected("'}'");
      member(decl);
    }
    decl.last_token = pos_;
    next();
    return decl;
  }

  std::string super_type() {
    std::string name = identifier("type name");
    if (peek().is_punct("<")) reject(peek());
    return name;
  }

  void member(ClassDecl& decl) {
    while (peek().kind == TokenKind::keyword && kMemberModifiers.count(peek().text) != 0) next();

    if (peek().kind == TokenKind::identifier && peek().text == decl.name && peek(1).is_punct("(")) {
      MethodDecl m;
      m.name = next().text;
      m.is_constructor = true;
      m.params = params();
      m.body = block();
      decl.methods.push_back(std::move(m));
      return;
    }

    std::string result_type;
    bool is_void = false;
    if (peek().is_keyword("void")) {
      next();
      is_void = true;
    } else {
      result_type = type();
    }
    std::string name = identifier("member name");

    if (peek().is_punct("(")) {
      MethodDecl m;
      m.name = std::move(name);
      m.return_type = is_void ? "" : result_type;
      m.params = params();
      m.body = block();
      decl.methods.push_back(std::move(m));
      return;
    }
    if (is_void) expected("'('");

    while (true) {
      FieldDecl f{result_type, name, std::nullopt};
      if (peek().is_punct("=")) {
        next();
        f.init = expression();
      }
      decl.fields.push_back(std::move(f));
      if (!peek().is_punct(",")) break;
      next();
      name = identifier("field name");
    }
    expect_punct(";");
  }

  std::vector<Param> params() {
    expect_punct("(");
    std::vector<Param> out;
    if (!peek().is_punct(")")) {
      while (true) {
        if (peek().is_keyword("final")) next();
        Param p;
        p.type = type();
        p.name = identifier("parameter name");
        out.push_back(std::move(p));
        if (!peek().is_punct(",")) break;
        next();
      }
    }
    expect_punct(")");
    return out;
  }

  std::vector<Stmt> block() {
    expect_punct("{");
    std::vector<Stmt> body;
    while (!peek().is_punct("}")) {
      if (peek().kind == TokenKind::end) expected("'}'");
      body.push_back(statement());
    }
    next();
    return body;
  }

  bool at_local_declaration() const {
    const Token& t = peek();
    if (t.is_keyword("final")) return true;
    if (t.kind == TokenKind::keyword && detail::is_primitive_type(t.text)) return true;
    if (t.kind != TokenKind::identifier) return false;
    if (peek(1).kind == TokenKind::identifier) return true;
    return peek(1).is_punct("[") && peek(2).is_punct("]");
  }

  Stmt statement() {
    Stmt s;
    if (peek().is_keyword("return")) {
      next();
      s.kind = Stmt::Kind::ret;
      if (!peek().is_punct(";")) s.value = expression();
      expect_punct(";");
      return s;
    }
    if (at_local_declaration()) {
      if (peek().is_keyword("final")) next();
      s.kind = Stmt::Kind::local;
      s.declared_type = type();
      s.declared_name = identifier("variable name");
      if (peek().is_punct("=")) {
        next();
        s.value = expression();
      }
      expect_punct(";");
      return s;
    }

    const Token& start = peek();
    Expr e = expression();
    if (peek().is_punct("=")) {
      if (e.kind != Expr::Kind::name && e.kind != Expr::Kind::field_access)
        throw SyntaxError{start.line, start.column, "invalid assignment target"};
      next();
      s.kind = Stmt::Kind::assign;
      s.lhs = std::move(e);
      s.value = expression();
    } else {
      if (e.kind != Expr::Kind::call && e.kind != Expr::Kind::creation)
        throw SyntaxError{start.line, start.column, "not a statement"};
      s.kind = Stmt::Kind::expr;
      s.value = std::move(e);
    }
    expect_punct(";");
    return s;
  }

  std::vector<Expr> arguments() {
    expect_punct("(");
    std::vector<Expr> args;
    if (!peek().is_punct(")")) {
      while (true) {
        args.push_back(expression());
        if (!peek().is_punct(",")) break;
        next();
      }
    }
    expect_punct(")");
    return args;
  }

  Expr expression() {
    Expr e = primary();
    while (peek().is_punct(".")) {
      next();
      std::string member = identifier("member name");
      Expr outer;
      outer.name = std::move(member);
      outer.target = std::make_unique<Expr>(std::move(e));
      if (peek().is_punct("(")) {
        outer.kind = Expr::Kind::call;
        outer.args = arguments();
      } else {
        outer.kind = Expr::Kind::field_access;
      }
      e = std::move(outer);
    }
    return e;
  }

  Expr primary() {
    const Token& t = peek();
    Expr e;
    switch (t.kind) {
      case TokenKind::int_literal:
      case TokenKind::float_literal:
      case TokenKind::string_literal:
      case TokenKind::char_literal:
        next();
        e.kind = Expr::Kind::literal;
        return e;
      case TokenKind::identifier:
        e.name = next().text;
        if (peek().is_punct("(")) {
          e.kind = Expr::Kind::call;
          e.args = arguments();
        } else {
          e.kind = Expr::Kind::name;
        }
        return e;
      case TokenKind::keyword:
        if (t.is_keyword("true") || t.is_keyword("false") || t.is_keyword("null")) {
          next();
          e.kind = Expr::Kind::literal;
          return e;
        }
        if (t.is_keyword("this")) {
          next();
          if (peek().is_punct("(")) reject(peek());
          e.kind = Expr::Kind::this_ref;
          return e;
        }
        if (t.is_keyword("new")) {
          next();
          e.kind = Expr::Kind::creation;
          e.name = identifier("type name");
          if (peek().is_punct("<") || peek().is_punct("[")) reject(peek());
          e.args = arguments();
          if (peek().is_punct("{")) reject(peek());
          return e;
        }
        reject(t);
      case TokenKind::punct:
        if (t.is_punct("-") &&
            (peek(1).kind == TokenKind::int_literal || peek(1).kind == TokenKind::float_literal)) {
          next();
          next();
          e.kind = Expr::Kind::literal;
          return e;
        }
        if (is_structural(t.text)) expected("expression");
        reject(t);
      case TokenKind::end:
        reject(t);
    }
    reject(t);
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

// Turns a parsed declaration into a ClassModel, resolving receivers by local static typing.
class ClassAnalyzer {
 public:
  explicit ClassAnalyzer(const ClassDecl& decl) : decl_(decl) {
    for (const auto& f : decl.fields) field_types_.emplace(f.name, f.type);
    for (const auto& m : decl.methods)
      if (!m.is_constructor && !m.return_type.empty()) return_types_.emplace(m.name, m.return_type);
  }

  ClassModel build() {
    ClassModel model;
    model.name = decl_.name;
    model.line = decl_.line;
    model.super_types = decl_.super_types;
    for (const auto& f : decl_.fields) {
      model.fields.push_back(Field{f.name, f.type});
      if (f.init) {
        Sink sink{&model.initializers.instantiated_types, &model.initializers.invoked_methods, nullptr};
        std::map<std::string, std::string> scope;
        visit(*f.init, scope, sink);
      }
    }
    for (const auto& m : decl_.methods) model.methods.push_back(method(m));
    return model;
  }

 private:
  struct Sink {
    std::multiset<std::string>* instantiated;
    std::set<std::pair<std::string, std::string>>* invoked;
    std::set<std::string>* accessed;  // null outside methods
  };
  using Scope = std::map<std::string, std::string>;

  MethodModel method(const MethodDecl& decl) {
    MethodModel m;
    m.name = decl.name;
    m.is_constructor = decl.is_constructor;
    m.return_type = decl.return_type;
    Scope scope;
    for (const auto& p : decl.params) {
      m.param_types.push_back(p.type);
      scope[p.name] = p.type;
    }
    Sink sink{&m.instantiated_types, &m.invoked_methods, &m.accessed_fields};
    for (const auto& s : decl.body) {
      if (s.lhs) visit(*s.lhs, scope, sink);
      if (s.value) visit(*s.value, scope, sink);
      if (s.kind == Stmt::Kind::local) scope[s.declared_name] = s.declared_type;
    }
    return m;
  }

  std::optional<std::string> own_field(const std::string& name, Sink& sink) {
    auto it = field_types_.find(name);
    if (it == field_types_.end()) return std::nullopt;
    if (sink.accessed) sink.accessed->insert(name);
    return it->second;
  }

  std::optional<std::string> visit(const Expr& e, const Scope& scope, Sink& sink) {
    switch (e.kind) {
      case Expr::Kind::literal:
        return std::nullopt;
      case Expr::Kind::this_ref:
        return decl_.name;
      case Expr::Kind::name: {
        if (auto it = scope.find(e.name); it != scope.end()) return it->second;
        return own_field(e.name, sink);
      }
      case Expr::Kind::field_access: {
        if (e.target->kind == Expr::Kind::this_ref) return own_field(e.name, sink);
        visit(*e.target, scope, sink);
        return std::nullopt;
      }
      case Expr::Kind::call: {
        std::optional<std::string> receiver;
        if (!e.target) {
          receiver = decl_.name;
        } else if (e.target->kind == Expr::Kind::name && !scope.count(e.target->name) &&
                   !field_types_.count(e.target->name)) {
          receiver = e.target->name;  // static call through a type name
        } else {
          receiver = visit(*e.target, scope, sink);
        }
        for (const auto& a : e.args) visit(a, scope, sink);
        if (!receiver) return std::nullopt;
        sink.invoked->emplace(*receiver, e.name);
        if (*receiver == decl_.name) {
          if (auto it = return_types_.find(e.name); it != return_types_.end()) return it->second;
        }
        return std::nullopt;
      }
      case Expr::Kind::creation:
        for (const auto& a : e.args) visit(a, scope, sink);
        sink.instantiated->insert(e.name);
        return e.name;
    }
    return std::nullopt;
  }

  const ClassDecl& decl_;
  std::map<std::string, std::string> field_types_;
  std::map<std::string, std::string> return_types_;
};

}  // namespace

ParseResult parse_source(std::shared_ptr<const SourceFile> file) {
  ParseResult result;
  auto lexed = detail::tokenize(file->text);
  if (lexed.error) {
    result.diagnostics.push_back(Diagnostic{file->path, lexed.error->line, lexed.error->column, lexed.error->message});
    return result;
  }

  std::vector<ClassDecl> decls;
  try {
    decls = Parser(lexed.tokens).parse_unit();
  } catch (const SyntaxError& e) {
    result.diagnostics.push_back(Diagnostic{file->path, e.line, e.column, e.message});
    return result;
  }

  for (const auto& decl : decls) {
    ClassModel model = ClassAnalyzer(decl).build();
    std::set<std::size_t> lines;
    for (std::size_t i = decl.first_token; i <= decl.last_token; ++i) lines.insert(lexed.tokens[i].line);
    model.loc = lines.size();
    model.source = file;
    result.classes.push_back(std::move(model));
  }
  return result;
}

}  // namespace dimetrics::frontend
