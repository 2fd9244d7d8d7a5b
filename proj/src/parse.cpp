#include "liftlog/parse.hpp"

#include <algorithm>
#include <cctype>

namespace liftlog {

namespace {

struct token {
  enum kind_t { ident, number, symbol, end } kind;
  std::string text;
  int line;
  int column;
};

class lexer {
public:
  explicit lexer(const std::string& text) : s_(text) { advance(); }

  const token& peek() const { return tok_; }
  token take() {
    token t = tok_;
    advance();
    return t;
  }
  bool accept_symbol(const std::string& sym) {
    if (tok_.kind == token::symbol && tok_.text == sym) {
      advance();
      return true;
    }
    return false;
  }
  void expect_symbol(const std::string& sym) {
    if (!accept_symbol(sym))
      throw parse_error("expected '" + sym + "'", tok_.line, tok_.column);
  }

private:
  void advance() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) {
      if (s_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
      ++pos_;
    }
    tok_.line = line_;
    tok_.column = col_;
    if (pos_ >= s_.size()) { tok_ = {token::end, "", line_, col_}; return; }
    char c = s_[pos_];
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) {
        ++pos_; ++col_;
      }
      tok_ = {token::ident, s_.substr(start, pos_ - start), tok_.line, tok_.column};
    } else if (std::isdigit((unsigned char)c)) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
        ++pos_; ++col_;
      }
      tok_ = {token::number, s_.substr(start, pos_ - start), tok_.line, tok_.column};
    } else if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
      pos_ += 2; col_ += 2;
      tok_ = {token::symbol, "->", tok_.line, tok_.column};
    } else {
      ++pos_; ++col_;
      tok_ = {token::symbol, std::string(1, c), tok_.line, tok_.column};
    }
  }

  std::string s_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  token tok_;
};

long long parse_posint(lexer& lx, const char* what) {
  token t = lx.peek();
  if (t.kind == token::symbol && t.text == "-")
    throw parse_error("negative exponent after '^'", t.line, t.column);
  if (t.kind != token::number)
    throw parse_error(std::string("expected ") + what, t.line, t.column);
  lx.take();
  long long v = std::stoll(t.text);
  if (v <= 0) throw parse_error(std::string("expected positive ") + what, t.line, t.column);
  return v;
}

int var_index(const ring_context& ctx, const token& t) {
  for (int i = 0; i < ctx.n(); ++i)
    if (ctx.vars[i] == t.text) return i;
  throw parse_error("unknown variable '" + t.text + "'", t.line, t.column);
}

// factor ("*" factor)*; accumulates exponents into e
void parse_monomial_into(lexer& lx, const ring_context& ctx, expvec& e) {
  while (true) {
    token t = lx.peek();
    if (t.kind != token::ident)
      throw parse_error("expected variable", t.line, t.column);
    lx.take();
    int idx = var_index(ctx, t);
    long long exp = 1;
    if (lx.accept_symbol("^")) exp = parse_posint(lx, "exponent");
    e[idx] += (int)exp;
    if (!lx.accept_symbol("*")) break;
  }
}

std::vector<std::string> parse_name_list(lexer& lx) {
  std::vector<std::string> names;
  while (true) {
    token t = lx.peek();
    if (t.kind != token::ident)
      throw parse_error("expected variable name", t.line, t.column);
    names.push_back(lx.take().text);
    if (!lx.accept_symbol(",")) break;
  }
  return names;
}

} // namespace

std::pair<ring_context, monomial_ideal> parse_ring_and_ideal(const std::string& text) {
  lexer lx(text);
  token head = lx.peek();
  if (head.kind != token::ident || head.text != "ring")
    throw parse_error("expected 'ring' header", head.line, head.column);
  lx.take();
  ring_context ctx(parse_name_list(lx));
  lx.expect_symbol(";");

  std::vector<expvec> gens;
  if (lx.peek().kind != token::end) {
    while (true) {
      expvec e(ctx.n(), 0);
      parse_monomial_into(lx, ctx, e);
      gens.push_back(std::move(e));
      if (!lx.accept_symbol(",")) break;
    }
  }
  token tail = lx.peek();
  if (tail.kind != token::end)
    throw parse_error("unexpected trailing input", tail.line, tail.column);
  return {ctx, minimalize(ctx, std::move(gens))};
}

monomial_ideal parse_ideal(const ring_context& ctx, const std::string& text) {
  lexer lx(text);
  std::vector<expvec> gens;
  if (lx.peek().kind != token::end) {
    while (true) {
      expvec e(ctx.n(), 0);
      parse_monomial_into(lx, ctx, e);
      gens.push_back(std::move(e));
      if (!lx.accept_symbol(",")) break;
    }
  }
  token tail = lx.peek();
  if (tail.kind != token::end)
    throw parse_error("unexpected trailing input", tail.line, tail.column);
  return minimalize(ctx, std::move(gens));
}

monomial_map parse_monomial_map(const std::string& text) {
  lexer lx(text);
  std::vector<std::string> src_names, tgt_names;
  bool have_header = false;
  if (lx.peek().kind == token::ident && lx.peek().text == "ring") {
    lx.take();
    src_names = parse_name_list(lx);
    lx.expect_symbol("->");
    tgt_names = parse_name_list(lx);
    lx.expect_symbol(";");
    have_header = true;
  }

  std::vector<std::pair<std::string, std::vector<std::pair<std::string, long long>>>>
      bindings;
  while (lx.peek().kind != token::end) {
    token lhs = lx.peek();
    if (lhs.kind != token::ident)
      throw parse_error("expected variable binding", lhs.line, lhs.column);
    lx.take();
    lx.expect_symbol("=");
    std::vector<std::pair<std::string, long long>> mono;
    while (true) {
      token t = lx.peek();
      if (t.kind != token::ident)
        throw parse_error("expected variable", t.line, t.column);
      lx.take();
      long long exp = 1;
      if (lx.accept_symbol("^")) exp = parse_posint(lx, "exponent");
      mono.push_back({t.text, exp});
      if (!lx.accept_symbol("*")) break;
    }
    bindings.push_back({lhs.text, std::move(mono)});
    if (!lx.accept_symbol(";")) break;
  }
  if (lx.peek().kind != token::end)
    throw parse_error("unexpected trailing input", lx.peek().line, lx.peek().column);
  if (bindings.empty()) throw parse_error("empty map", 1, 1);

  if (!have_header) {
    for (const auto& [lhs, mono] : bindings) src_names.push_back(lhs);
    for (const auto& [lhs, mono] : bindings)
      for (const auto& [v, e] : mono)
        if (std::find(tgt_names.begin(), tgt_names.end(), v) == tgt_names.end())
          tgt_names.push_back(v);
  }
  ring_context src(src_names), tgt(tgt_names);

  std::vector<expvec> rows(src.n(), expvec(tgt.n(), 0));
  std::vector<bool> bound(src.n(), false);
  for (const auto& [lhs, mono] : bindings) {
    int i = -1;
    for (int k = 0; k < src.n(); ++k)
      if (src.vars[k] == lhs) i = k;
    if (i < 0) throw parse_error("binding for undeclared variable '" + lhs + "'", 1, 1);
    if (bound[i]) throw parse_error("duplicate binding for '" + lhs + "'", 1, 1);
    bound[i] = true;
    for (const auto& [v, e] : mono) {
      int j = -1;
      for (int k = 0; k < tgt.n(); ++k)
        if (tgt.vars[k] == v) j = k;
      if (j < 0) throw parse_error("unknown target variable '" + v + "'", 1, 1);
      rows[i][j] += (int)e;
    }
  }
  for (int i = 0; i < src.n(); ++i)
    if (!bound[i])
      throw parse_error("missing binding for '" + src.vars[i] + "'", 1, 1);
  return monomial_map(src, tgt, rows);
}

graded_derivation parse_derivation(const ring_context& ctx, const std::string& text) {
  lexer lx(text);
  const int n = ctx.n();
  bool have_degree = false;
  expvec degree(n, 0);
  qvec coeffs(n, rat(0));

  bool negative = false;
  if (lx.accept_symbol("-")) negative = true;
  while (true) {
    rat c = negative ? rat(-1) : rat(1);
    expvec mono(n, 0);
    int slot = -1;
    token t = lx.peek();
    if (t.kind == token::number) {
      lx.take();
      long long num = std::stoll(t.text);
      long long den = 1;
      if (lx.accept_symbol("/")) {
        token d = lx.peek();
        if (d.kind != token::number)
          throw parse_error("expected denominator", d.line, d.column);
        lx.take();
        den = std::stoll(d.text);
      }
      c *= rat(num, den);
      lx.expect_symbol("*");
    }
    while (slot < 0) {
      token f = lx.peek();
      if (f.kind != token::ident)
        throw parse_error("expected variable or D<var>", f.line, f.column);
      lx.take();
      bool is_op = false;
      if (f.text.size() > 1 && f.text[0] == 'D') {
        std::string rest = f.text.substr(1);
        bool is_var = std::find(ctx.vars.begin(), ctx.vars.end(), f.text) !=
                      ctx.vars.end();
        if (!is_var) {
          for (int i = 0; i < n; ++i)
            if (ctx.vars[i] == rest) { slot = i; is_op = true; }
          if (!is_op)
            throw parse_error("unknown variable '" + rest + "' after D", f.line,
                              f.column);
        }
      }
      if (!is_op) {
        int idx = var_index(ctx, f);
        long long exp = 1;
        if (lx.accept_symbol("^")) exp = parse_posint(lx, "exponent");
        mono[idx] += (int)exp;
        lx.expect_symbol("*");
      }
    }
    expvec b = mono;
    b[slot] -= 1;
    if (!have_degree) {
      degree = b;
      have_degree = true;
    } else if (degree != b) {
      throw parse_error("terms of different multidegree", lx.peek().line,
                        lx.peek().column);
    }
    coeffs[slot] += c;

    if (lx.accept_symbol("+")) {
      negative = false;
    } else if (lx.accept_symbol("-")) {
      negative = true;
    } else {
      break;
    }
  }
  token tail = lx.peek();
  if (tail.kind != token::end)
    throw parse_error("unexpected trailing input", tail.line, tail.column);
  return graded_derivation(std::move(degree), std::move(coeffs));
}

std::vector<long long> parse_integer_list(const std::string& text) {
  lexer lx(text);
  std::vector<long long> out;
  while (true) {
    bool neg = lx.accept_symbol("-");
    token t = lx.peek();
    if (t.kind != token::number)
      throw parse_error("expected integer", t.line, t.column);
    lx.take();
    long long v = std::stoll(t.text);
    out.push_back(neg ? -v : v);
    if (!lx.accept_symbol(",")) break;
  }
  token tail = lx.peek();
  if (tail.kind != token::end)
    throw parse_error("unexpected trailing input", tail.line, tail.column);
  return out;
}

std::vector<long long> parse_weights(const std::string& text) {
  std::vector<long long> w = parse_integer_list(text);
  for (long long x : w)
    if (x < 0) throw parse_error("weights must be nonnegative", 1, 1);
  return w;
}

} // namespace liftlog
