#include "foa/parser.hpp"

#include <cctype>

#include "foa/errors.hpp"

namespace foa {

namespace {

enum class Tok {
  End,
  Ident,
  Number,
  LParen,
  RParen,
  Comma,
  Dot,
  Colon,
  Eq,
  Amp,
  Pipe,
  Bang,
  Arrow,
  DArrow
};

struct Lexer {
  const std::string& text;
  size_t pos = 0;
  Tok tok = Tok::End;
  std::string value;
  size_t tok_pos = 0;

  explicit Lexer(const std::string& t) : text(t) { advance(); }

  void skip_space() {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      } else if (text[pos] == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  void advance() {
    skip_space();
    tok_pos = pos;
    value.clear();
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        value += text[pos++];
      tok = Tok::Number;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
              text[pos] == '#' || text[pos] == '@'))
        value += text[pos++];
      while (pos < text.size() && text[pos] == '\'') value += text[pos++];
      tok = Tok::Ident;
      return;
    }
    switch (c) {
    case '(': tok = Tok::LParen; ++pos; return;
    case ')': tok = Tok::RParen; ++pos; return;
    case ',': tok = Tok::Comma; ++pos; return;
    case '.': tok = Tok::Dot; ++pos; return;
    case ':': tok = Tok::Colon; ++pos; return;
    case '=': tok = Tok::Eq; ++pos; return;
    case '&': tok = Tok::Amp; ++pos; return;
    case '|': tok = Tok::Pipe; ++pos; return;
    case '!': tok = Tok::Bang; ++pos; return;
    case '-':
      if (pos + 1 < text.size() && text[pos + 1] == '>') {
        tok = Tok::Arrow;
        pos += 2;
        return;
      }
      throw ParseError("unexpected character '-'", pos);
    case '<':
      if (pos + 2 < text.size() + 1 && text.compare(pos, 3, "<->") == 0) {
        tok = Tok::DArrow;
        pos += 3;
        return;
      }
      throw ParseError("unexpected character '<'", pos);
    default:
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
  }
};

struct SoBound {
  std::string name;
  SymbolKind kind;
  std::vector<std::string> args;
  std::string result;
};

struct Parser {
  Lexer lx;
  const ParseContext& ctx;
  std::vector<std::pair<std::string, std::string>> vars; // name -> sort, scoped
  std::vector<SoBound> so_bound;

  Parser(const std::string& text, const ParseContext& c) : lx(text), ctx(c) {}

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, lx.tok_pos); }

  void expect(Tok t, const char* what) {
    if (lx.tok != t) fail(std::string("expected ") + what);
    lx.advance();
  }

  bool is_keyword(const std::string& s) const {
    return s == "exists" || s == "forall" || s == "exists2" || s == "true" || s == "false" ||
           s == "X" || s == "wX" || s == "Y" || s == "Z" || s == "wY" || s == "U" || s == "R" ||
           s == "S" || s == "T";
  }

  const std::string* var_sort(const std::string& name) const {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

  const SoBound* so_lookup(const std::string& name) const {
    for (auto it = so_bound.rbegin(); it != so_bound.rend(); ++it)
      if (it->name == name) return &*it;
    return nullptr;
  }

  const ConstDecl* find_const(const std::string& n) const {
    for (const auto& s : ctx.sigs)
      if (const auto* d = s->find_constant(n)) return d;
    return nullptr;
  }
  const FuncDecl* find_func(const std::string& n) const {
    for (const auto& s : ctx.sigs)
      if (const auto* d = s->find_function(n)) return d;
    return nullptr;
  }
  const PredDecl* find_pred(const std::string& n) const {
    for (const auto& s : ctx.sigs)
      if (const auto* d = s->find_predicate(n)) return d;
    return nullptr;
  }
  bool known_sort(const std::string& n) const {
    for (const auto& s : ctx.sigs)
      if (s->has_sort(n)) return true;
    return false;
  }

  FormulaPtr parse() {
    FormulaPtr f = formula();
    if (lx.tok != Tok::End) fail("trailing input after formula");
    return f;
  }

  FormulaPtr formula() { return implies(); }

  FormulaPtr implies() {
    FormulaPtr l = or_expr();
    if (lx.tok == Tok::Arrow) {
      lx.advance();
      FormulaPtr r = implies();
      if (ctx.expand_derived) return mk_or(mk_not(l), r);
      return mk_implies(l, r);
    }
    if (lx.tok == Tok::DArrow) {
      lx.advance();
      FormulaPtr r = implies();
      if (ctx.expand_derived) return mk_and(mk_or(mk_not(l), r), mk_or(mk_not(r), l));
      return mk_iff(l, r);
    }
    return l;
  }

  FormulaPtr or_expr() {
    FormulaPtr l = and_expr();
    if (lx.tok == Tok::Pipe) {
      lx.advance();
      return mk_or(l, or_expr());
    }
    return l;
  }

  FormulaPtr and_expr() {
    FormulaPtr l = until_expr();
    if (lx.tok == Tok::Amp) {
      lx.advance();
      return mk_and(l, and_expr());
    }
    return l;
  }

  FormulaPtr until_expr() {
    FormulaPtr l = unary();
    if (lx.tok == Tok::Ident && (lx.value == "U" || lx.value == "R" || lx.value == "S" || lx.value == "T")) {
      std::string op = lx.value;
      lx.advance();
      FormulaPtr r = until_expr();
      if (op == "U") return mk_binary(FKind::Until, l, r);
      if (op == "S") return mk_binary(FKind::Since, l, r);
      if (op == "R")
        return ctx.expand_derived ? mk_not(mk_binary(FKind::Until, mk_not(l), mk_not(r)))
                                  : mk_binary(FKind::Release, l, r);
      return ctx.expand_derived ? mk_not(mk_binary(FKind::Since, mk_not(l), mk_not(r)))
                                : mk_binary(FKind::Triggered, l, r);
    }
    return l;
  }

  FormulaPtr unary() {
    if (lx.tok == Tok::Bang) {
      lx.advance();
      return mk_not(unary());
    }
    if (lx.tok == Tok::Ident) {
      const std::string& kw = lx.value;
      if (kw == "X") {
        lx.advance();
        return mk_temporal(FKind::Next, unary());
      }
      if (kw == "Y") {
        lx.advance();
        return mk_temporal(FKind::Yesterday, unary());
      }
      if (kw == "wX") {
        lx.advance();
        FormulaPtr k = unary();
        return ctx.expand_derived ? mk_not(mk_temporal(FKind::Next, mk_not(k)))
                                  : mk_temporal(FKind::WeakNext, k);
      }
      if (kw == "Z" || kw == "wY") {
        lx.advance();
        FormulaPtr k = unary();
        return ctx.expand_derived ? mk_not(mk_temporal(FKind::Yesterday, mk_not(k)))
                                  : mk_temporal(FKind::WeakYesterday, k);
      }
      if (kw == "exists" || kw == "forall") return quantifier(kw == "exists");
      if (kw == "exists2") return so_quantifier();
    }
    return primary();
  }

  FormulaPtr quantifier(bool existential) {
    lx.advance();
    if (lx.tok != Tok::Ident) fail("expected a variable name");
    std::string var = lx.value;
    if (is_keyword(var)) fail("reserved word used as variable name");
    lx.advance();
    expect(Tok::Colon, "':' and a sort");
    if (lx.tok != Tok::Ident) fail("expected a sort name");
    std::string sort = lx.value;
    if (!known_sort(sort)) fail("unknown sort '" + sort + "'");
    lx.advance();
    expect(Tok::Dot, "'.'");
    vars.emplace_back(var, sort);
    FormulaPtr body = formula();
    vars.pop_back();
    return mk_quant(existential ? FKind::Exists : FKind::Forall, var, sort, body);
  }

  FormulaPtr so_quantifier() {
    lx.advance();
    if (lx.tok != Tok::Ident) fail("expected a symbol name");
    std::string name = lx.value;
    lx.advance();
    expect(Tok::Colon, "':'");
    if (lx.tok != Tok::Ident) fail("expected pred, func, or const");
    std::string kindword = lx.value;
    lx.advance();
    expect(Tok::LParen, "'('");
    SoBound b;
    b.name = name;
    if (kindword == "pred") {
      b.kind = SymbolKind::Predicate;
      while (lx.tok == Tok::Ident) {
        if (!known_sort(lx.value)) fail("unknown sort '" + lx.value + "'");
        b.args.push_back(lx.value);
        lx.advance();
        if (lx.tok == Tok::Comma) lx.advance();
      }
    } else if (kindword == "func") {
      b.kind = SymbolKind::Function;
      while (lx.tok == Tok::Ident) {
        if (!known_sort(lx.value)) fail("unknown sort '" + lx.value + "'");
        b.args.push_back(lx.value);
        lx.advance();
        if (lx.tok == Tok::Comma) lx.advance();
      }
      expect(Tok::Arrow, "'->' and a result sort");
      if (lx.tok != Tok::Ident || !known_sort(lx.value)) fail("expected a result sort");
      b.result = lx.value;
      lx.advance();
    } else if (kindword == "const") {
      b.kind = SymbolKind::Constant;
      if (lx.tok != Tok::Ident || !known_sort(lx.value)) fail("expected a sort");
      b.result = lx.value;
      lx.advance();
    } else {
      fail("expected pred, func, or const");
    }
    expect(Tok::RParen, "')'");
    expect(Tok::Dot, "'.'");
    if (find_const(name) || find_func(name) || find_pred(name) || so_lookup(name))
      fail("second-order bound symbol '" + name + "' shadows an existing symbol");
    so_bound.push_back(b);
    FormulaPtr body = formula();
    so_bound.pop_back();
    return mk_so_exists(b.name, b.kind, b.args, b.result, body);
  }

  FormulaPtr primary() {
    if (lx.tok == Tok::LParen) {
      lx.advance();
      FormulaPtr f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (lx.tok == Tok::Ident && lx.value == "true") {
      lx.advance();
      return mk_true();
    }
    if (lx.tok == Tok::Ident && lx.value == "false") {
      lx.advance();
      return mk_false();
    }
    if (lx.tok != Tok::Ident && lx.tok != Tok::Number) fail("expected a formula");

    // Either an atom or the left term of an equality.
    if (lx.tok == Tok::Ident) {
      std::string name = lx.value;
      if (is_keyword(name)) fail("unexpected keyword '" + name + "'");
      const SoBound* so = so_lookup(name);
      if ((so && so->kind == SymbolKind::Predicate) || (!so && find_pred(name))) {
        std::vector<std::string> want =
            so ? so->args : find_pred(name)->args;
        lx.advance();
        std::vector<TermPtr> args;
        if (lx.tok == Tok::LParen) {
          lx.advance();
          while (lx.tok != Tok::RParen) {
            args.push_back(term());
            if (lx.tok == Tok::Comma) lx.advance();
          }
          expect(Tok::RParen, "')'");
        }
        if (args.size() != want.size())
          fail("predicate '" + name + "' expects " + std::to_string(want.size()) + " arguments");
        for (size_t i = 0; i < args.size(); ++i)
          if (args[i]->sort != want[i])
            fail("argument " + std::to_string(i + 1) + " of '" + name + "' has sort '" +
                 args[i]->sort + "', expected '" + want[i] + "'");
        return mk_atom(name, std::move(args));
      }
    }
    TermPtr l = term();
    if (lx.tok != Tok::Eq) fail("expected '=' after a term");
    lx.advance();
    TermPtr r = term();
    if (l->sort != r->sort)
      fail("equality between different sorts '" + l->sort + "' and '" + r->sort + "'");
    return mk_eq(l, r);
  }

  TermPtr term() {
    if (lx.tok == Tok::Number) {
      std::string name = lx.value;
      const ConstDecl* d = find_const(name);
      if (!d) fail("numeral constant '" + name + "' is not declared");
      lx.advance();
      return mk_const(name, d->sort);
    }
    if (lx.tok != Tok::Ident) fail("expected a term");
    std::string name = lx.value;
    if (is_keyword(name)) fail("unexpected keyword '" + name + "' in a term");
    lx.advance();
    if (const std::string* sort = var_sort(name)) return mk_var(name, *sort);
    const SoBound* so = so_lookup(name);
    if (so && so->kind == SymbolKind::Constant) return mk_const(name, so->result);
    if ((so && so->kind == SymbolKind::Function) || (!so && find_func(name))) {
      std::vector<std::string> want = so ? so->args : find_func(name)->args;
      std::string result = so ? so->result : find_func(name)->result;
      expect(Tok::LParen, "'(' after a function symbol");
      std::vector<TermPtr> args;
      while (lx.tok != Tok::RParen) {
        args.push_back(term());
        if (lx.tok == Tok::Comma) lx.advance();
      }
      expect(Tok::RParen, "')'");
      if (args.size() != want.size())
        fail("function '" + name + "' expects " + std::to_string(want.size()) + " arguments");
      for (size_t i = 0; i < args.size(); ++i)
        if (args[i]->sort != want[i])
          fail("argument " + std::to_string(i + 1) + " of '" + name + "' has sort '" +
               args[i]->sort + "', expected '" + want[i] + "'");
      return mk_app(name, result, std::move(args));
    }
    if (const ConstDecl* d = find_const(name)) return mk_const(name, d->sort);
    fail("unknown symbol '" + name + "'");
  }
};

} // namespace

FormulaPtr parse_formula(const std::string& text, const ParseContext& ctx) {
  Parser p(text, ctx);
  return p.parse();
}

} // namespace foa
