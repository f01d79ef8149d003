#include "henkin/text.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace henkin::text {

  namespace {
    std::string format_message(SourceSpan const& s, std::string const& msg) {
      return std::to_string(s.line) + ":" + std::to_string(s.column) + ": "
             + msg;
    }
  }  // namespace

  ParseError::ParseError(ErrorKind kind, SourceSpan span,
                         std::string const& message)
      : std::runtime_error(format_message(span, message)),
        kind_(kind),
        span_(span),
        detail_(message) {}

  namespace {

    ////////////////////////////////////////////////////////////////////////
    // Lexer
    ////////////////////////////////////////////////////////////////////////

    enum class Tok {
      name,
      kw_forall,
      kw_exists,
      kw_true,
      kw_false,
      lparen,
      rparen,
      lbrace,
      rbrace,
      dot,
      semi,
      comma,
      equal,
      not_equal,
      tilde,
      amp,
      bar,
      arrow,
      dbl_arrow,
      end
    };

    struct Token {
      Tok         kind;
      std::string text;
      SourceSpan  span;
    };

    std::string describe(Tok t) {
      switch (t) {
        case Tok::name: return "variable";
        case Tok::kw_forall: return "'forall'";
        case Tok::kw_exists: return "'exists'";
        case Tok::kw_true: return "'true'";
        case Tok::kw_false: return "'false'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::lbrace: return "'{'";
        case Tok::rbrace: return "'}'";
        case Tok::dot: return "'.'";
        case Tok::semi: return "';'";
        case Tok::comma: return "','";
        case Tok::equal: return "'='";
        case Tok::not_equal: return "'!='";
        case Tok::tilde: return "'~'";
        case Tok::amp: return "'&'";
        case Tok::bar: return "'|'";
        case Tok::arrow: return "'->'";
        case Tok::dbl_arrow: return "'<->'";
        case Tok::end: return "end of input";
      }
      return "token";
    }

    class Lexer {
     public:
      explicit Lexer(std::string_view src) : src_(src) {}

      std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
          skip_blank();
          if (pos_ >= src_.size()) {
            out.push_back({Tok::end, "", here(0)});
            return out;
          }
          out.push_back(next());
        }
      }

     private:
      SourceSpan here(std::size_t len) const {
        return {line_, col_, len};
      }

      void advance(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
          if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
          } else {
            ++col_;
          }
          ++pos_;
        }
      }

      void skip_blank() {
        while (pos_ < src_.size()) {
          char c = src_[pos_];
          if (c == '#') {
            while (pos_ < src_.size() && src_[pos_] != '\n') {
              advance(1);
            }
          } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            advance(1);
          } else {
            return;
          }
        }
      }

      static bool is_alpha(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
      }

      static bool is_name_char(char c) {
        return is_alpha(c) || (c >= '0' && c <= '9') || c == '_' || c == '\'';
      }

      Token next() {
        char c = src_[pos_];
        if (static_cast<unsigned char>(c) >= 0x80) {
          throw ParseError(ErrorKind::lexical, here(1),
                           "non-ASCII character in input");
        }
        if (is_alpha(c)) {
          std::size_t n = 1;
          while (pos_ + n < src_.size() && is_name_char(src_[pos_ + n])) {
            ++n;
          }
          std::string word(src_.substr(pos_, n));
          Token       t{Tok::name, word, here(n)};
          if (word == "forall") {
            t.kind = Tok::kw_forall;
          } else if (word == "exists") {
            t.kind = Tok::kw_exists;
          } else if (word == "true") {
            t.kind = Tok::kw_true;
          } else if (word == "false") {
            t.kind = Tok::kw_false;
          }
          advance(n);
          return t;
        }
        auto starts = [&](std::string_view s) {
          return src_.substr(pos_, s.size()) == s;
        };
        struct Punct {
          std::string_view text;
          Tok              kind;
        };
        static constexpr Punct puncts[] = {
            {"<->", Tok::dbl_arrow}, {"->", Tok::arrow}, {"!=", Tok::not_equal},
            {"(", Tok::lparen},      {")", Tok::rparen}, {"{", Tok::lbrace},
            {"}", Tok::rbrace},      {".", Tok::dot},    {";", Tok::semi},
            {",", Tok::comma},       {"=", Tok::equal},  {"~", Tok::tilde},
            {"&", Tok::amp},         {"|", Tok::bar}};
        for (auto const& p : puncts) {
          if (starts(p.text)) {
            Token t{p.kind, std::string(p.text), here(p.text.size())};
            advance(p.text.size());
            return t;
          }
        }
        throw ParseError(ErrorKind::lexical, here(1),
                         std::string("unexpected character '") + c + "'");
      }

      std::string_view src_;
      std::size_t      pos_  = 0;
      std::size_t      line_ = 1;
      std::size_t      col_  = 1;
    };

    ////////////////////////////////////////////////////////////////////////
    // Parser
    ////////////////////////////////////////////////////////////////////////

    class Parser {
     public:
      explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

      Formula run() {
        auto f = formula();
        if (peek().kind != Tok::end) {
          fail("expected end of input, found " + show(peek()));
        }
        return f;
      }

     private:
      Token const& peek(std::size_t k = 0) const {
        return toks_[std::min(pos_ + k, toks_.size() - 1)];
      }

      bool accept(Tok t) {
        if (peek().kind == t) {
          ++pos_;
          return true;
        }
        return false;
      }

      Token expect(Tok t) {
        if (peek().kind != t) {
          fail("expected " + describe(t) + ", found " + show(peek()));
        }
        return toks_[pos_++];
      }

      static std::string show(Token const& t) {
        if (t.kind == Tok::name) {
          return "'" + t.text + "'";
        }
        return describe(t.kind);
      }

      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(ErrorKind::syntax, peek().span, msg);
      }

      Formula formula() {
        auto lhs = implication();
        while (accept(Tok::dbl_arrow)) {
          lhs = Formula::equivalence(std::move(lhs), implication());
        }
        return lhs;
      }

      Formula implication() {
        auto lhs = disjunction();
        if (accept(Tok::arrow)) {
          return Formula::implication(std::move(lhs), implication());
        }
        return lhs;
      }

      Formula disjunction() {
        std::vector<Formula> fs{conjunction()};
        while (accept(Tok::bar)) {
          fs.push_back(conjunction());
        }
        return fs.size() == 1 ? fs.front() : Formula::disjunction(fs);
      }

      Formula conjunction() {
        std::vector<Formula> fs{unary()};
        while (accept(Tok::amp)) {
          fs.push_back(unary());
        }
        return fs.size() == 1 ? fs.front() : Formula::conjunction(fs);
      }

      Formula unary() {
        if (accept(Tok::tilde)) {
          return Formula::negation(unary());
        }
        return primary();
      }

      Formula primary() {
        switch (peek().kind) {
          case Tok::lparen: {
            ++pos_;
            auto f = formula();
            expect(Tok::rparen);
            return f;
          }
          case Tok::kw_true: ++pos_; return Formula::truth();
          case Tok::kw_false: ++pos_; return Formula::falsity();
          case Tok::kw_forall:
          case Tok::kw_exists: return first_order();
          case Tok::name:
            if (peek().text == "H" && peek(1).kind == Tok::lbrace) {
              return henkin();
            }
            return atom();
          default: fail("expected a formula, found " + show(peek()));
        }
      }

      Formula atom() {
        Variable lhs(expect(Tok::name).text);
        if (accept(Tok::equal)) {
          return Formula::equal(lhs, Variable(expect(Tok::name).text));
        }
        if (accept(Tok::not_equal)) {
          return Formula::negation(
              Formula::equal(lhs, Variable(expect(Tok::name).text)));
        }
        fail("expected '=' or '!=', found " + show(peek()));
      }

      Formula first_order() {
        Token                 kw = toks_[pos_++];
        std::vector<Variable> vs;
        std::set<Variable>    seen;
        while (peek().kind == Tok::name) {
          Token t = toks_[pos_++];
          if (!seen.insert(Variable(t.text)).second) {
            throw ParseError(ErrorKind::semantic, t.span,
                             "quantifier binds '" + t.text + "' twice");
          }
          vs.emplace_back(t.text);
        }
        if (vs.empty()) {
          fail("expected a variable after " + describe(kw.kind));
        }
        expect(Tok::dot);
        auto body = formula();
        return kw.kind == Tok::kw_forall ? Formula::forall(vs, body)
                                         : Formula::exists(vs, body);
      }

      Formula henkin() {
        Token head = toks_[pos_];
        pos_ += 2;  // 'H' '{'
        expect(Tok::kw_forall);
        std::vector<Variable> universals;
        while (peek().kind == Tok::name) {
          universals.emplace_back(toks_[pos_++].text);
        }
        expect(Tok::semi);
        std::vector<Existential> rows;
        if (peek().kind != Tok::rbrace) {
          do {
            Existential e{Variable(expect(Tok::name).text), {}};
            expect(Tok::lparen);
            while (peek().kind != Tok::rparen) {
              e.deps.emplace_back(expect(Tok::name).text);
              accept(Tok::comma);
            }
            expect(Tok::rparen);
            rows.push_back(std::move(e));
          } while (accept(Tok::comma));
        }
        Token close = expect(Tok::rbrace);
        HenkinPrefix prefix(std::move(universals), std::move(rows));
        auto         diags = prefix.check();
        if (!diags.empty()) {
          SourceSpan span = head.span;
          span.length     = close.span.line == head.span.line
                                ? close.span.column + 1 - head.span.column
                                : head.span.length;
          throw ParseError(ErrorKind::semantic, span, diags.front().message);
        }
        expect(Tok::dot);
        return Formula::branch(std::move(prefix), formula());
      }

      std::vector<Token> toks_;
      std::size_t        pos_ = 0;
    };

    ////////////////////////////////////////////////////////////////////////
    // Printer
    ////////////////////////////////////////////////////////////////////////

    // Binding strength; higher binds tighter.
    int strength(Formula const& f) {
      using K = Formula::Kind;
      switch (f.kind()) {
        case K::forall:
        case K::exists:
        case K::branch: return 0;
        case K::equivalence: return 1;
        case K::implication: return 2;
        case K::disjunction: return 3;
        case K::conjunction: return 4;
        case K::negation:
          return f.operand(0).kind() == K::equal ? 6 : 5;
        default: return 6;
      }
    }

    void join(std::string& out, std::vector<Variable> const& vs,
              std::string_view sep) {
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i != 0) {
          out += sep;
        }
        out += vs[i].name();
      }
    }

    void render(Formula const& f, int min_strength, std::string& out);

    void render_body(Formula const& f, std::string& out) {
      using K = Formula::Kind;
      switch (f.kind()) {
        case K::equal:
          out += f.lhs_var().name();
          out += " = ";
          out += f.rhs_var().name();
          return;
        case K::truth: out += "true"; return;
        case K::falsity: out += "false"; return;
        case K::negation: {
          auto const& g = f.operand(0);
          if (g.kind() == K::equal) {
            out += g.lhs_var().name();
            out += " != ";
            out += g.rhs_var().name();
            return;
          }
          out += '~';
          bool wrap = g.kind() == K::negation && g.operand(0).kind() == K::equal;
          render(g, wrap ? 7 : 5, out);
          return;
        }
        case K::conjunction:
        case K::disjunction: {
          auto const* sep  = f.kind() == K::conjunction ? " & " : " | ";
          int         need = f.kind() == K::conjunction ? 5 : 4;
          bool        first = true;
          for (auto const& g : f.operands()) {
            if (!first) {
              out += sep;
            }
            first = false;
            render(g, need, out);
          }
          return;
        }
        case K::implication:
          render(f.operand(0), 3, out);
          out += " -> ";
          render(f.operand(1), 2, out);
          return;
        case K::equivalence:
          render(f.operand(0), 2, out);
          out += " <-> ";
          render(f.operand(1), 2, out);
          return;
        case K::forall:
        case K::exists:
          out += f.kind() == K::forall ? "forall " : "exists ";
          join(out, f.bound(), " ");
          out += " . ";
          render(f.body(), 0, out);
          return;
        case K::branch:
          out += print_prefix(f.prefix());
          out += " . ";
          render(f.body(), 0, out);
          return;
      }
    }

    void render(Formula const& f, int min_strength, std::string& out) {
      if (strength(f) < min_strength) {
        out += '(';
        render_body(f, out);
        out += ')';
      } else {
        render_body(f, out);
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Presentations
    ////////////////////////////////////////////////////////////////////////

    Word parse_word(std::string_view line, std::size_t begin, std::size_t end,
                    std::size_t lineno, char const* side) {
      while (begin < end && (line[begin] == ' ' || line[begin] == '\t')) {
        ++begin;
      }
      while (end > begin && (line[end - 1] == ' ' || line[end - 1] == '\t'
                             || line[end - 1] == '\r')) {
        --end;
      }
      if (begin == end) {
        throw ParseError(ErrorKind::syntax, {lineno, begin + 1, 0},
                         std::string("empty ") + side + " word");
      }
      for (std::size_t i = begin; i < end; ++i) {
        if (!is_letter(line[i])) {
          throw ParseError(ErrorKind::lexical, {lineno, i + 1, 1},
                           std::string("illegal character '") + line[i]
                               + "' in word (letters a-z only)");
        }
      }
      return Word(std::string(line.substr(begin, end - begin)));
    }

    std::optional<Equation> parse_line(std::string_view line,
                                       std::size_t      lineno) {
      auto hash = line.find('#');
      if (hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      auto blank = std::all_of(line.begin(), line.end(), [](char c) {
        return c == ' ' || c == '\t' || c == '\r';
      });
      if (blank) {
        return std::nullopt;
      }
      auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError(ErrorKind::syntax, {lineno, line.size() + 1, 0},
                         "missing '=' in equation");
      }
      auto lhs = parse_word(line, 0, eq, lineno, "left");
      auto rhs = parse_word(line, eq + 1, line.size(), lineno, "right");
      return Equation{std::move(lhs), std::move(rhs)};
    }

    std::vector<Equation> parse_lines(std::string_view text) {
      std::vector<Equation> out;
      std::size_t           lineno = 1;
      while (true) {
        auto nl   = text.find('\n');
        auto line = text.substr(0, nl);
        if (auto e = parse_line(line, lineno)) {
          out.push_back(std::move(*e));
        }
        if (nl == std::string_view::npos) {
          break;
        }
        text = text.substr(nl + 1);
        ++lineno;
      }
      return out;
    }

  }  // namespace

  Formula parse_formula(std::string_view text) {
    return Parser(Lexer(text).run()).run();
  }

  std::string print_prefix(HenkinPrefix const& p) {
    std::string out = "H{ forall";
    for (auto const& u : p.universals()) {
      out += ' ';
      out += u.name();
    }
    out += " ;";
    bool first = true;
    for (auto const& e : p.existentials()) {
      out += first ? " " : ", ";
      first = false;
      out += e.var.name();
      out += '(';
      join(out, e.deps, " ");
      out += ')';
    }
    out += " }";
    return out;
  }

  std::string print_formula(Formula const& f) {
    std::string out;
    render(f, 0, out);
    return out;
  }

  Presentation parse_presentation(std::string_view text) {
    for (std::size_t i = 0, line = 1, col = 1; i < text.size(); ++i) {
      if (static_cast<unsigned char>(text[i]) >= 0x80) {
        throw ParseError(ErrorKind::lexical, {line, col, 1},
                         "non-ASCII character in input");
      }
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return Presentation(parse_lines(text));
  }

  Equation parse_equation(std::string_view text) {
    auto p = parse_presentation(text);
    if (p.equations().size() != 1) {
      throw ParseError(ErrorKind::syntax, {1, 1, text.size()},
                       "expected exactly one equation, found "
                           + std::to_string(p.equations().size()));
    }
    return p.equations().front();
  }

}  // namespace henkin::text
