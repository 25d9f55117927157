#ifndef QAC_CMX_HPP
#define QAC_CMX_HPP

#include <sstream>
#include <string>
#include <vector>

#include "qac/xmod.hpp"

namespace qac {

struct ParseError : std::runtime_error {
  int line, column;
  std::string expectation;
  ParseError(int ln, int col, const std::string& expect)
      : std::runtime_error("parse error at line " + std::to_string(ln) + ", column " +
                           std::to_string(col) + ": expected " + expect),
        line(ln),
        column(col),
        expectation(expect) {}
};

/// Raw tables of a cmx file, before group-law validation.
struct CmxDocument {
  int version = 1;
  int gamma_order = 0, f_order = 0, g_order = 0;
  Vec gamma_table, f_table, g_table;  // row-major Cayley tables
  Vec boundary;                       // |F| indices into G
  std::vector<Vec> act_g_f;           // |G| permutations of F
  std::vector<Vec> act_gamma_f;       // |Gamma| permutations of F
  std::vector<Vec> act_gamma_g;       // |Gamma| permutations of G
};

namespace detail {

struct CmxLexer {
  std::vector<std::string> toks;
  std::vector<int> tok_line, tok_col;
  size_t pos = 0;
  int last_line = 1, last_col = 1;

  explicit CmxLexer(const std::string& text) {
    int line = 1, col = 1;
    std::string cur;
    int cur_line = 0, cur_col = 0;
    bool comment = false;
    auto flush = [&]() {
      if (!cur.empty()) {
        toks.push_back(cur);
        tok_line.push_back(cur_line);
        tok_col.push_back(cur_col);
        cur.clear();
      }
    };
    for (char ch : text) {
      if (ch == '\n') {
        flush();
        comment = false;
        ++line;
        col = 1;
        continue;
      }
      if (comment) {
        ++col;
        continue;
      }
      if (ch == '#') {
        flush();
        comment = true;
      } else if (ch == ' ' || ch == '\t' || ch == '\r') {
        flush();
      } else {
        if (cur.empty()) {
          cur_line = line;
          cur_col = col;
        }
        cur += ch;
      }
      ++col;
    }
    flush();
    last_line = line;
    last_col = col;
  }

  bool done() const { return pos >= toks.size(); }

  std::string next(const std::string& expect) {
    if (done()) throw ParseError(last_line, last_col, expect);
    last_line = tok_line[pos];
    last_col = tok_col[pos] + (int)toks[pos].size();
    return toks[pos++];
  }

  void expect(const std::string& word) {
    std::string t = next("'" + word + "'");
    if (t != word) throw ParseError(tok_line[pos - 1], tok_col[pos - 1], "'" + word + "'");
  }

  int number(const std::string& expect, int lo, int hi) {
    std::string t = next(expect);
    int v = 0;
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(tok_line[pos - 1], tok_col[pos - 1], expect);
    try {
      v = std::stoi(t);
    } catch (const std::exception&) {
      throw ParseError(tok_line[pos - 1], tok_col[pos - 1], expect);
    }
    if (v < lo || v > hi)
      throw ParseError(tok_line[pos - 1], tok_col[pos - 1],
                       expect + " in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
  }

  /// One line-confined row of exactly `len` indices below `hi`.
  Vec row(const std::string& what, int len, int hi) {
    Vec r(len);
    int row_line = done() ? last_line : tok_line[pos];
    for (int i = 0; i < len; ++i) {
      if (done() || tok_line[pos] != row_line)
        throw ParseError(row_line, last_col,
                         std::to_string(len) + " entries in " + what);
      r[i] = number(what + " entry", 0, hi - 1);
    }
    if (!done() && tok_line[pos] == row_line)
      throw ParseError(row_line, tok_col[pos],
                       "end of " + what + " after " + std::to_string(len) + " entries");
    return r;
  }
};

inline void parse_group_body(CmxLexer& lx, const std::string& name, int& order, Vec& table) {
  lx.expect("order");
  order = lx.number(name + " order", 1, 4096);
  lx.expect("table");
  table.clear();
  for (int i = 0; i < order; ++i) {
    Vec r = lx.row(name + " table", order, order);
    table.insert(table.end(), r.begin(), r.end());
  }
}

}  // namespace detail

inline CmxDocument parse(const std::string& text) {
  detail::CmxLexer lx(text);
  CmxDocument d;
  lx.expect("cmx");
  d.version = lx.number("format version 1", 1, 1);
  lx.expect("[gamma]");
  detail::parse_group_body(lx, "gamma", d.gamma_order, d.gamma_table);
  lx.expect("[group");
  lx.expect("F]");
  detail::parse_group_body(lx, "F", d.f_order, d.f_table);
  lx.expect("[group");
  lx.expect("G]");
  detail::parse_group_body(lx, "G", d.g_order, d.g_table);
  lx.expect("[boundary]");
  d.boundary = lx.row("boundary", d.f_order, d.g_order);
  lx.expect("[action");
  lx.expect("G");
  lx.expect("F]");
  for (int i = 0; i < d.g_order; ++i) d.act_g_f.push_back(lx.row("G-on-F row", d.f_order, d.f_order));
  lx.expect("[action");
  lx.expect("gamma");
  lx.expect("F]");
  for (int i = 0; i < d.gamma_order; ++i)
    d.act_gamma_f.push_back(lx.row("gamma-on-F row", d.f_order, d.f_order));
  lx.expect("[action");
  lx.expect("gamma");
  lx.expect("G]");
  for (int i = 0; i < d.gamma_order; ++i)
    d.act_gamma_g.push_back(lx.row("gamma-on-G row", d.g_order, d.g_order));
  if (!lx.done()) throw ParseError(lx.tok_line[lx.pos], lx.tok_col[lx.pos], "end of file");
  return d;
}

namespace detail {

inline void emit_rows(std::ostringstream& os, const Vec& flat, int rows, int cols) {
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) os << (j ? " " : "") << flat[i * cols + j];
    os << "\n";
  }
}

inline void emit_rows(std::ostringstream& os, const std::vector<Vec>& rows) {
  for (const auto& r : rows) {
    for (size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
    os << "\n";
  }
}

}  // namespace detail

inline std::string emit(const CmxDocument& d) {
  std::ostringstream os;
  os << "cmx " << d.version << "\n";
  os << "[gamma]\norder " << d.gamma_order << "\ntable\n";
  detail::emit_rows(os, d.gamma_table, d.gamma_order, d.gamma_order);
  os << "[group F]\norder " << d.f_order << "\ntable\n";
  detail::emit_rows(os, d.f_table, d.f_order, d.f_order);
  os << "[group G]\norder " << d.g_order << "\ntable\n";
  detail::emit_rows(os, d.g_table, d.g_order, d.g_order);
  os << "[boundary]\n";
  detail::emit_rows(os, d.boundary, 1, d.f_order);
  os << "[action G F]\n";
  detail::emit_rows(os, d.act_g_f);
  os << "[action gamma F]\n";
  detail::emit_rows(os, d.act_gamma_f);
  os << "[action gamma G]\n";
  detail::emit_rows(os, d.act_gamma_g);
  return os.str();
}

/// Build the crossed module; throws NotAGroup and friends on bad tables.
inline CrossedModule to_crossed_module(const CmxDocument& d) {
  FiniteGroup gamma = build_group(d.gamma_order, d.gamma_table);
  FiniteGroup f = build_group(d.f_order, d.f_table);
  FiniteGroup g = build_group(d.g_order, d.g_table);
  CrossedModule cm;
  cm.F = GammaGroup{gamma, f, d.act_gamma_f};
  cm.G = GammaGroup{gamma, g, d.act_gamma_g};
  cm.boundary = d.boundary;
  cm.gact = d.act_g_f;
  return cm;
}

inline CmxDocument to_document(const CrossedModule& cm) {
  CmxDocument d;
  d.gamma_order = cm.F.gamma.n;
  d.gamma_table = cm.F.gamma.tab;
  d.f_order = cm.F.grp.n;
  d.f_table = cm.F.grp.tab;
  d.g_order = cm.G.grp.n;
  d.g_table = cm.G.grp.tab;
  d.boundary = cm.boundary;
  d.act_g_f = cm.gact;
  d.act_gamma_f = cm.F.act;
  d.act_gamma_g = cm.G.act;
  return d;
}

}  // namespace qac

#endif
