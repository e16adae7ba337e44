#include "malcev/parse.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace malcev {

namespace {

struct Token {
  enum Kind { Word, Number, Sym, End } kind;
  std::string text;
  int line;
  int col;
};

struct Lexer {
  std::vector<std::vector<Token>> lines;

  explicit Lexer(const std::string& text) {
    int lineno = 1;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
      std::vector<Token> toks;
      for (int i = 0; i < static_cast<int>(raw.size());) {
        char c = raw[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
          continue;
        }
        int col = i + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          int j = i;
          while (j < static_cast<int>(raw.size()) &&
                 (std::isalnum(static_cast<unsigned char>(raw[j])) || raw[j] == '_'))
            ++j;
          toks.push_back({Token::Word, raw.substr(i, j - i), lineno, col});
          i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          int j = i;
          while (j < static_cast<int>(raw.size()) &&
                 std::isdigit(static_cast<unsigned char>(raw[j])))
            ++j;
          toks.push_back({Token::Number, raw.substr(i, j - i), lineno, col});
          i = j;
        } else if (std::string("[],=*+-/{}").find(c) != std::string::npos) {
          toks.push_back({Token::Sym, std::string(1, c), lineno, col});
          ++i;
        } else {
          throw SyntaxError(lineno, col, std::string("unexpected character '") + c + "'");
        }
      }
      if (!toks.empty()) lines.push_back(std::move(toks));
      ++lineno;
    }
  }
};

struct LineParser {
  const std::vector<Token>& toks;
  size_t pos = 0;
  mutable Token end_tok{Token::End, "", 0, 0};

  const Token& peek() const {
    if (pos >= toks.size()) {
      end_tok.line = toks.empty() ? 1 : toks.back().line;
      end_tok.col =
          toks.empty() ? 1 : toks.back().col + static_cast<int>(toks.back().text.size());
      return end_tok;
    }
    return toks[pos];
  }
  Token next() {
    Token t = peek();
    if (pos < toks.size()) ++pos;
    return t;
  }
  bool at_end() const { return pos >= toks.size(); }
  Token expect(Token::Kind k, const std::string& what) {
    Token t = next();
    if (t.kind != k)
      throw SyntaxError(t.line, t.col, "expected " + what +
                                           (t.kind == Token::End ? " at end of line"
                                                                 : ", found '" + t.text + "'"));
    return t;
  }
  Token expect_sym(const std::string& s) {
    Token t = next();
    if (t.kind != Token::Sym || t.text != s)
      throw SyntaxError(t.line, t.col, "expected '" + s + "'" +
                                           (t.kind == Token::End ? " at end of line"
                                                                 : ", found '" + t.text + "'"));
    return t;
  }
  void expect_done() {
    if (!at_end()) {
      Token t = peek();
      throw SyntaxError(t.line, t.col, "trailing input '" + t.text + "'");
    }
  }
};

// A resolved combination target: which space the names live in.
struct NameTable {
  const std::vector<std::string>* names;
  const char* space_label;
  // the other space, for codomain diagnostics
  const std::vector<std::string>* other = nullptr;

  int index_of(const std::string& s) const {
    for (size_t i = 0; i < names->size(); ++i)
      if ((*names)[i] == s) return static_cast<int>(i);
    return -1;
  }
};

Scalar parse_coefficient(LineParser& lp, const Field& f, bool negative) {
  Token num = lp.expect(Token::Number, "a number");
  std::string lit = num.text;
  if (lp.peek().kind == Token::Sym && lp.peek().text == "/") {
    lp.next();
    Token den = lp.expect(Token::Number, "a denominator");
    if (!f.is_rational())
      throw SyntaxError(num.line, num.col,
                        "fractional coefficients are not allowed over " + f.str());
    if (den.text.find_first_not_of('0') == std::string::npos)
      throw SyntaxError(den.line, den.col, "zero denominator");
    lit += "/" + den.text;
  }
  Scalar s = Scalar::parse(f, lit);
  return negative ? -s : s;
}

// combination := 0 | ['-'] term { ('+'|'-') term }
// term := coefficient '*' name | coefficient? name
Vec parse_combination(LineParser& lp, const Field& f, const NameTable& table) {
  Vec out(f, static_cast<int>(table.names->size()));
  bool negative = false;
  if (lp.peek().kind == Token::Sym && lp.peek().text == "-") {
    lp.next();
    negative = true;
  }
  if (lp.peek().kind == Token::Number && lp.peek().text == "0" && lp.pos + 1 >= lp.toks.size()) {
    lp.next();
    return out;  // explicit zero
  }
  while (true) {
    Scalar coeff = Scalar::one(f);
    if (negative) coeff = -coeff;
    if (lp.peek().kind == Token::Number) {
      coeff = parse_coefficient(lp, f, negative);
      lp.expect_sym("*");
    }
    Token name = lp.expect(Token::Word, "a basis name");
    int idx = table.index_of(name.text);
    if (idx < 0) {
      if (table.other) {
        for (const auto& o : *table.other)
          if (o == name.text)
            throw WrongCodomain(name.line, name.col,
                                "'" + name.text + "' belongs to the wrong space; expected a " +
                                    table.space_label + " combination");
      }
      throw UnknownBasisName(name.line, name.col, name.text);
    }
    out[idx] += coeff;
    if (lp.at_end()) break;
    Token op = lp.next();
    if (op.kind != Token::Sym || (op.text != "+" && op.text != "-"))
      throw SyntaxError(op.line, op.col, "expected '+' or '-', found '" + op.text + "'");
    negative = (op.text == "-");
  }
  return out;
}

struct AlgebraHeader {
  Field field = Field::rationals();
  int dim = 0;
  std::vector<std::string> names;
  size_t lines_consumed = 0;
};

// field / dim / basis, in that order.
AlgebraHeader parse_header(const Lexer& lx) {
  AlgebraHeader h;
  if (lx.lines.empty()) throw SyntaxError(1, 1, "empty document");
  size_t li = 0;

  {
    LineParser lp{lx.lines[li++]};
    Token kw = lp.expect(Token::Word, "'field'");
    if (kw.text != "field") throw SyntaxError(kw.line, kw.col, "document must start with 'field'");
    Token which = lp.expect(Token::Word, "'rational' or 'gf'");
    if (which.text == "rational") {
      h.field = Field::rationals();
    } else if (which.text == "gf") {
      Token pnum = lp.expect(Token::Number, "a prime");
      std::uint64_t p = std::stoull(pnum.text);
      try {
        h.field = Field::gf(p);
      } catch (const BadFieldChar&) {
        throw BadFieldChar(p);
      } catch (const FieldNotAllowed& e) {
        throw SyntaxError(pnum.line, pnum.col, e.what());
      }
    } else {
      throw SyntaxError(which.line, which.col, "unknown field '" + which.text + "'");
    }
    lp.expect_done();
  }
  if (li >= lx.lines.size()) throw SyntaxError(1, 1, "missing 'dim' line");
  {
    LineParser lp{lx.lines[li++]};
    Token kw = lp.expect(Token::Word, "'dim'");
    if (kw.text != "dim") throw SyntaxError(kw.line, kw.col, "expected 'dim'");
    Token num = lp.expect(Token::Number, "a dimension");
    h.dim = std::stoi(num.text);
    if (h.dim <= 0) throw SyntaxError(num.line, num.col, "dimension must be positive");
    lp.expect_done();
  }
  if (li >= lx.lines.size()) throw SyntaxError(1, 1, "missing 'basis' line");
  {
    LineParser lp{lx.lines[li++]};
    Token kw = lp.expect(Token::Word, "'basis'");
    if (kw.text != "basis") throw SyntaxError(kw.line, kw.col, "expected 'basis'");
    std::set<std::string> seen;
    while (!lp.at_end()) {
      Token name = lp.expect(Token::Word, "a basis name");
      if (!seen.insert(name.text).second)
        throw SyntaxError(name.line, name.col, "duplicate basis name '" + name.text + "'");
      h.names.push_back(name.text);
    }
    if (static_cast<int>(h.names.size()) != h.dim) {
      const Token& t = lx.lines[li - 1][0];
      throw SyntaxError(t.line, t.col, "basis lists " + std::to_string(h.names.size()) +
                                           " names for dim " + std::to_string(h.dim));
    }
  }
  h.lines_consumed = li;
  return h;
}

struct ParsedAlgebra {
  MalcevAlgebra A;
  size_t lines_consumed;
};

ParsedAlgebra parse_algebra_lines(const Lexer& lx) {
  AlgebraHeader h = parse_header(lx);
  MalcevAlgebra A(h.field, h.names);
  NameTable table{&A.names(), "base-algebra"};
  std::set<std::pair<int, int>> seen;

  size_t li = h.lines_consumed;
  for (; li < lx.lines.size(); ++li) {
    const auto& toks = lx.lines[li];
    if (toks[0].kind == Token::Word) break;  // datum sections start with a keyword
    LineParser lp{toks};
    lp.expect_sym("[");
    Token a = lp.expect(Token::Word, "a basis name");
    lp.expect_sym(",");
    Token b = lp.expect(Token::Word, "a basis name");
    lp.expect_sym("]");
    lp.expect_sym("=");
    int ia = table.index_of(a.text), ib = table.index_of(b.text);
    if (ia < 0) throw UnknownBasisName(a.line, a.col, a.text);
    if (ib < 0) throw UnknownBasisName(b.line, b.col, b.text);
    if (ia == ib)
      throw SyntaxError(a.line, a.col, "diagonal bracket [" + a.text + "," + b.text +
                                           "] is zero by anticommutativity");
    int lo = std::min(ia, ib), hi = std::max(ia, ib);
    if (!seen.insert({lo, hi}).second)
      throw DuplicatePair(a.line, a.col, "[" + a.text + "," + b.text + "]");
    Vec value = parse_combination(lp, h.field, table);
    if (ia > ib) value = -value;
    A.set_pair_product(lo, hi, value);
  }
  return {std::move(A), li};
}

std::vector<std::string> parse_space_line(LineParser& lp) {
  Token kw = lp.expect(Token::Word, "'space'");
  Token vname = lp.expect(Token::Word, "'V'");
  if (vname.text != "V") throw SyntaxError(vname.line, vname.col, "complement space must be named V");
  lp.expect_sym("{");
  Token bw = lp.expect(Token::Word, "'basis'");
  if (bw.text != "basis") throw SyntaxError(bw.line, bw.col, "expected 'basis'");
  std::vector<std::string> names;
  std::set<std::string> seen;
  while (!(lp.peek().kind == Token::Sym && lp.peek().text == "}")) {
    Token name = lp.expect(Token::Word, "a basis name or '}'");
    if (!seen.insert(name.text).second)
      throw SyntaxError(name.line, name.col, "duplicate basis name '" + name.text + "'");
    names.push_back(name.text);
  }
  lp.expect_sym("}");
  lp.expect_done();
  if (names.empty()) throw SyntaxError(kw.line, kw.col, "space V needs at least one basis name");
  return names;
}

}  // namespace

MalcevAlgebra parse_algebra(const std::string& text) {
  Lexer lx(text);
  ParsedAlgebra pa = parse_algebra_lines(lx);
  if (pa.lines_consumed != lx.lines.size()) {
    const Token& t = lx.lines[pa.lines_consumed][0];
    throw SyntaxError(t.line, t.col, "unexpected section '" + t.text + "' in an algebra document");
  }
  return pa.A;
}

ExtendingDatum parse_datum(const std::string& text) {
  Lexer lx(text);
  ParsedAlgebra pa = parse_algebra_lines(lx);
  const MalcevAlgebra& M = pa.A;
  const Field& f = M.field();

  size_t li = pa.lines_consumed;
  if (li >= lx.lines.size())
    throw SyntaxError(lx.lines.back()[0].line, 1, "datum document needs a 'space V' section");
  LineParser sp{lx.lines[li]};
  if (sp.peek().text != "space") {
    const Token& t = lx.lines[li][0];
    throw SyntaxError(t.line, t.col, "expected 'space V { basis ... }', found '" + t.text + "'");
  }
  std::vector<std::string> v_names = parse_space_line(sp);
  for (const auto& nm : v_names)
    if (M.name_index(nm) >= 0) {
      const Token& t = lx.lines[li][0];
      throw SyntaxError(t.line, t.col, "name '" + nm + "' is already a base-algebra basis name");
    }
  ++li;

  ExtendingDatum d = ExtendingDatum::zero(M, v_names);
  NameTable mtab{&M.names(), "base-algebra", &d.basis_v};
  NameTable vtab{&d.basis_v, "complement", &M.names()};

  std::set<std::pair<int, int>> seen_tl, seen_tr, seen_om, seen_bv;
  for (; li < lx.lines.size(); ++li) {
    LineParser lp{lx.lines[li]};
    Token kw = lp.expect(Token::Word, "a section keyword");
    if (kw.text == "tl" || kw.text == "tr") {
      Token mt = lp.expect(Token::Word, "a base-algebra name");
      Token vt = lp.expect(Token::Word, "a complement name");
      lp.expect_sym("=");
      int im = mtab.index_of(mt.text);
      if (im < 0) throw UnknownBasisName(mt.line, mt.col, mt.text);
      int iv = vtab.index_of(vt.text);
      if (iv < 0) throw UnknownBasisName(vt.line, vt.col, vt.text);
      auto& seen = kw.text == "tl" ? seen_tl : seen_tr;
      if (!seen.insert({im, iv}).second)
        throw DuplicatePair(kw.line, kw.col, kw.text + " " + mt.text + " " + vt.text);
      if (kw.text == "tl")
        d.tl.set(im, iv, parse_combination(lp, f, mtab));
      else
        d.tr.set(im, iv, parse_combination(lp, f, vtab));
    } else if (kw.text == "omega") {
      Token a = lp.expect(Token::Word, "a complement name");
      Token b = lp.expect(Token::Word, "a complement name");
      lp.expect_sym("=");
      int ia = vtab.index_of(a.text), ib = vtab.index_of(b.text);
      if (ia < 0) throw UnknownBasisName(a.line, a.col, a.text);
      if (ib < 0) throw UnknownBasisName(b.line, b.col, b.text);
      if (ia == ib)
        throw SyntaxError(a.line, a.col, "omega is skew; the diagonal vanishes");
      int lo = std::min(ia, ib), hi = std::max(ia, ib);
      if (!seen_om.insert({lo, hi}).second)
        throw DuplicatePair(a.line, a.col, "omega " + a.text + " " + b.text);
      Vec value = parse_combination(lp, f, mtab);
      if (ia > ib) value = -value;
      d.omega.set_pair(lo, hi, value);
    } else if (kw.text == "bv") {
      lp.expect_sym("[");
      Token a = lp.expect(Token::Word, "a complement name");
      lp.expect_sym(",");
      Token b = lp.expect(Token::Word, "a complement name");
      lp.expect_sym("]");
      lp.expect_sym("=");
      int ia = vtab.index_of(a.text), ib = vtab.index_of(b.text);
      if (ia < 0) throw UnknownBasisName(a.line, a.col, a.text);
      if (ib < 0) throw UnknownBasisName(b.line, b.col, b.text);
      if (ia == ib)
        throw SyntaxError(a.line, a.col, "diagonal bracket vanishes by anticommutativity");
      int lo = std::min(ia, ib), hi = std::max(ia, ib);
      if (!seen_bv.insert({lo, hi}).second)
        throw DuplicatePair(a.line, a.col, "bv [" + a.text + "," + b.text + "]");
      Vec value = parse_combination(lp, f, vtab);
      if (ia > ib) value = -value;
      d.bracket_v.set_pair(lo, hi, value);
    } else {
      throw SyntaxError(kw.line, kw.col, "unknown section '" + kw.text + "'");
    }
  }
  return d;
}

ModuleAction parse_action(const MalcevAlgebra& M, const std::string& text) {
  Lexer lx(text);
  if (lx.lines.empty()) throw SyntaxError(1, 1, "empty action document");
  LineParser sp{lx.lines[0]};
  if (sp.peek().text != "space")
    throw SyntaxError(lx.lines[0][0].line, lx.lines[0][0].col,
                      "action document must start with 'space V { basis ... }'");
  std::vector<std::string> v_names = parse_space_line(sp);

  ModuleAction act;
  act.basis_v = v_names;
  act.act = BilinearMap(M.field(), M.dim(), static_cast<int>(v_names.size()),
                        static_cast<int>(v_names.size()));
  NameTable mtab{&M.names(), "base-algebra", &act.basis_v};
  NameTable vtab{&act.basis_v, "carrier", &M.names()};
  std::set<std::pair<int, int>> seen;
  for (size_t li = 1; li < lx.lines.size(); ++li) {
    LineParser lp{lx.lines[li]};
    Token kw = lp.expect(Token::Word, "'tr'");
    if (kw.text != "tr")
      throw SyntaxError(kw.line, kw.col, "only 'tr' lines are allowed in an action document");
    Token mt = lp.expect(Token::Word, "a base-algebra name");
    Token vt = lp.expect(Token::Word, "a carrier name");
    lp.expect_sym("=");
    int im = mtab.index_of(mt.text);
    if (im < 0) throw UnknownBasisName(mt.line, mt.col, mt.text);
    int iv = vtab.index_of(vt.text);
    if (iv < 0) throw UnknownBasisName(vt.line, vt.col, vt.text);
    if (!seen.insert({im, iv}).second)
      throw DuplicatePair(kw.line, kw.col, "tr " + mt.text + " " + vt.text);
    act.act.set(im, iv, parse_combination(lp, M.field(), vtab));
  }
  return act;
}

Cocycle parse_cocycle(const MalcevAlgebra& M, const std::vector<std::string>& basis_v,
                      const std::string& text) {
  Lexer lx(text);
  Cocycle w{SkewBilinearMap(M.field(), M.dim(), static_cast<int>(basis_v.size()))};
  NameTable mtab{&M.names(), "base-algebra", &basis_v};
  NameTable vtab{&basis_v, "carrier", &M.names()};
  std::set<std::pair<int, int>> seen;
  for (const auto& line : lx.lines) {
    LineParser lp{line};
    Token kw = lp.expect(Token::Word, "'omega'");
    if (kw.text != "omega")
      throw SyntaxError(kw.line, kw.col, "only 'omega' lines are allowed in a cocycle document");
    Token a = lp.expect(Token::Word, "a base-algebra name");
    Token b = lp.expect(Token::Word, "a base-algebra name");
    lp.expect_sym("=");
    int ia = mtab.index_of(a.text), ib = mtab.index_of(b.text);
    if (ia < 0) throw UnknownBasisName(a.line, a.col, a.text);
    if (ib < 0) throw UnknownBasisName(b.line, b.col, b.text);
    if (ia == ib) throw SyntaxError(a.line, a.col, "omega is skew; the diagonal vanishes");
    int lo = std::min(ia, ib), hi = std::max(ia, ib);
    if (!seen.insert({lo, hi}).second)
      throw DuplicatePair(a.line, a.col, "omega " + a.text + " " + b.text);
    Vec value = parse_combination(lp, M.field(), vtab);
    if (ia > ib) value = -value;
    w.omega.set_pair(lo, hi, value);
  }
  return w;
}

Matrix parse_dmatrix(const MalcevAlgebra& M, const std::string& text) {
  Lexer lx(text);
  Matrix D(M.field(), M.dim(), M.dim());
  NameTable mtab{&M.names(), "base-algebra"};
  std::set<int> seen;
  for (const auto& line : lx.lines) {
    LineParser lp{line};
    Token kw = lp.expect(Token::Word, "'D'");
    if (kw.text != "D")
      throw SyntaxError(kw.line, kw.col, "only 'D' lines are allowed in a map document");
    Token mt = lp.expect(Token::Word, "a base-algebra name");
    lp.expect_sym("=");
    int im = mtab.index_of(mt.text);
    if (im < 0) throw UnknownBasisName(mt.line, mt.col, mt.text);
    if (!seen.insert(im).second) throw DuplicatePair(kw.line, kw.col, "D " + mt.text);
    D.set_col(im, parse_combination(lp, M.field(), mtab));
  }
  return D;
}

namespace {

void emit_header(std::ostringstream& out, const MalcevAlgebra& A) {
  out << "field " << A.field().str() << "\n";
  out << "dim " << A.dim() << "\n";
  out << "basis";
  for (const auto& n : A.names()) out << " " << n;
  out << "\n";
  for (int i = 0; i < A.dim(); ++i)
    for (int j = i + 1; j < A.dim(); ++j) {
      const Vec& v = A.pair_product(i, j);
      if (v.is_zero()) continue;
      out << "[" << A.names()[i] << "," << A.names()[j] << "] = " << v.str(A.names())
          << "\n";
    }
}

}  // namespace

std::string serialize_algebra(const MalcevAlgebra& A) {
  std::ostringstream out;
  emit_header(out, A);
  return out.str();
}

std::string serialize_datum(const ExtendingDatum& d) {
  std::ostringstream out;
  emit_header(out, d.M);
  out << "space V { basis";
  for (const auto& n : d.basis_v) out << " " << n;
  out << " }\n";
  for (int i = 0; i < d.M.dim(); ++i)
    for (int b = 0; b < d.dim_v(); ++b) {
      if (!d.tl.at(i, b).is_zero())
        out << "tl " << d.M.names()[i] << " " << d.basis_v[b] << " = "
            << d.tl.at(i, b).str(d.M.names()) << "\n";
    }
  for (int i = 0; i < d.M.dim(); ++i)
    for (int b = 0; b < d.dim_v(); ++b) {
      if (!d.tr.at(i, b).is_zero())
        out << "tr " << d.M.names()[i] << " " << d.basis_v[b] << " = "
            << d.tr.at(i, b).str(d.basis_v) << "\n";
    }
  for (int a = 0; a < d.dim_v(); ++a)
    for (int b = a + 1; b < d.dim_v(); ++b) {
      if (!d.omega.pair(a, b).is_zero())
        out << "omega " << d.basis_v[a] << " " << d.basis_v[b] << " = "
            << d.omega.pair(a, b).str(d.M.names()) << "\n";
    }
  for (int a = 0; a < d.dim_v(); ++a)
    for (int b = a + 1; b < d.dim_v(); ++b) {
      if (!d.bracket_v.pair(a, b).is_zero())
        out << "bv [" << d.basis_v[a] << "," << d.basis_v[b] << "] = "
            << d.bracket_v.pair(a, b).str(d.basis_v) << "\n";
    }
  return out.str();
}

MalcevAlgebra algebra_mod_p(const MalcevAlgebra& A, std::uint64_t p) {
  Field f = Field::gf(p);
  if (!A.field().is_rational()) {
    if (A.field().prime() != p)
      throw FieldNotAllowed("algebra is over " + A.field().str() + ", not gf " +
                            std::to_string(p));
    return A;
  }
  MalcevAlgebra B(f, A.names());
  for (int i = 0; i < A.dim(); ++i)
    for (int j = i + 1; j < A.dim(); ++j) {
      const Vec& v = A.pair_product(i, j);
      Vec w(f, A.dim());
      for (int k = 0; k < A.dim(); ++k) {
        const mpq_class& q = v[k].rat();
        mpz_class den = q.get_den();
        if (mpz_divisible_ui_p(den.get_mpz_t(), p))
          throw FieldNotAllowed("denominator not a unit mod " + std::to_string(p));
        mpz_class num = q.get_num() % static_cast<long>(p);
        mpz_class dmod = den % static_cast<long>(p);
        std::uint64_t nres = mpz_class(num < 0 ? num + static_cast<long>(p) : num).get_ui();
        std::uint64_t dres = dmod.get_ui();
        w[k] = Scalar::modp(nres, p) * Scalar::modp(dres, p).inv();
      }
      B.set_pair_product(i, j, w);
    }
  return B;
}

}  // namespace malcev
