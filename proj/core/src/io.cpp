#include "dcoset/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace dcoset {

/* ------------------------------------------------------------------ */
/* Group sources                                                       */
/* ------------------------------------------------------------------ */

CoxeterMatrix parse_group_file(std::istream& in) {
  std::string line;
  int rank = -1;
  std::vector<std::tuple<int, int, int>> bonds;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (head == "rank") {
      if (rank != -1) throw ParseError("duplicate 'rank' line" + where);
      if (!(ls >> rank) || rank < 1)
        throw ParseError("expected a positive integer after 'rank'" + where);
    } else if (head == "m") {
      if (rank == -1) throw ParseError("'m' line before 'rank'" + where);
      int i = 0, j = 0, v = 0;
      if (!(ls >> i >> j >> v)) throw ParseError("expected 'm i j v'" + where);
      if (i < 1 || i > rank || j < 1 || j > rank || i == j)
        throw ParseError("bad generator pair '" + std::to_string(i) + " " +
                         std::to_string(j) + "'" + where);
      if (v < 2) throw ParseError("bond order must be >= 2, got '" + std::to_string(v) +
                                  "'" + where);
      bonds.emplace_back(i - 1, j - 1, v);
    } else {
      throw ParseError("unexpected token '" + head + "'" + where);
    }
    std::string extra;
    if (ls >> extra) throw ParseError("trailing token '" + extra + "'" + where);
  }
  if (rank == -1) throw ParseError("missing 'rank' line");
  return CoxeterMatrix::from_bonds(rank, bonds);
}

CoxeterMatrix preset_matrix(const std::string& name) {
  if (name == "A1xA1") return CoxeterMatrix::from_bonds(2, {});
  if (name == "A2") return CoxeterMatrix::from_bonds(2, {{0, 1, 3}});
  if (name == "B2") return CoxeterMatrix::from_bonds(2, {{0, 1, 4}});
  if (name == "A3") return CoxeterMatrix::from_bonds(3, {{0, 1, 3}, {1, 2, 3}});
  if (name == "B3") return CoxeterMatrix::from_bonds(3, {{0, 1, 3}, {1, 2, 4}});
  if (name == "H3") return CoxeterMatrix::from_bonds(3, {{0, 1, 5}, {1, 2, 3}});
  if (name.size() > 3 && name.starts_with("I2(") && name.back() == ')') {
    const std::string inner = name.substr(3, name.size() - 4);
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(inner, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != inner.size() || k < 2)
      throw ParseError("bad dihedral order in preset '" + name + "'");
    return CoxeterMatrix::from_bonds(2, {{0, 1, k}});
  }
  throw ParseError("unknown preset '" + name + "'");
}

bool is_preset_name(const std::string& name) {
  try {
    preset_matrix(name);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

/* ------------------------------------------------------------------ */
/* Words, subsets, expressions                                         */
/* ------------------------------------------------------------------ */

std::string render_gen_set(GenSet s) {
  std::string out;
  for (int g : s) {
    if (!out.empty()) out += '-';
    out += std::to_string(g + 1);
  }
  return out.empty() ? "-" : out;
}

GenSet parse_gen_set(const std::string& text, int rank) {
  GenSet out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "-") continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 1 || v > rank)
      throw ParseError("bad generator '" + tok + "' (rank " + std::to_string(rank) + ")");
    out = out.with(v - 1);
  }
  return out;
}

std::string render_word(const CoxeterGroup& g, Element w) {
  const Word& word = g.word(w);
  if (word.empty()) return "-";
  std::string out;
  for (char s : word) {
    if (!out.empty()) out += '-';
    out += std::to_string(s + 1);
  }
  return out;
}

Element parse_word(const CoxeterGroup& g, const std::string& text) {
  if (text.empty() || text == "-") return g.identity();
  Element acc = g.identity();
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t dash = text.find('-', pos);
    if (dash == std::string::npos) dash = text.size();
    const std::string tok = text.substr(pos, dash - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size() || v < 1 || v > g.rank())
      throw ParseError("bad letter '" + tok + "' in word '" + text + "'");
    acc = g.right_mult(acc, v - 1);
    pos = dash + 1;
  }
  return acc;
}

namespace {

std::string subset_body(GenSet s) {
  std::string out;
  for (int g : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(g + 1);
  }
  return out;
}

}  // namespace

std::string render_expr(const SinglestepExpr& e) {
  std::string out;
  for (GenSet s : e.subsets()) {
    if (!out.empty()) out += ',';
    out += '[' + subset_body(s) + ']';
  }
  return out;
}

SinglestepExpr parse_expr(const CoxeterGroup& g, const std::string& text) {
  std::vector<GenSet> subsets;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '[')
      throw ParseError("expected '[' at '" + text.substr(pos) + "'");
    const std::size_t close = text.find(']', pos);
    if (close == std::string::npos)
      throw ParseError("missing ']' after '" + text.substr(pos) + "'");
    subsets.push_back(parse_gen_set(text.substr(pos + 1, close - pos - 1), g.rank()));
    pos = close + 1;
    skip_ws();
    if (pos < text.size()) {
      if (text[pos] != ',')
        throw ParseError("expected ',' at '" + text.substr(pos) + "'");
      ++pos;
      skip_ws();
    }
  }
  if (subsets.empty()) throw ParseError("empty expression text");
  return SinglestepExpr(g, std::move(subsets));
}

std::string render_multistep(const MultistepExpr& e) {
  auto piece = [](GenSet s) {
    const std::string body = subset_body(s);
    return body.empty() ? std::string("-") : body;
  };
  std::string out = "[[" + piece(e.mins().front());
  for (std::size_t i = 0; i < e.step_count(); ++i)
    out += " < " + piece(e.maxes()[i]) + " > " + piece(e.mins()[i + 1]);
  out += "]]";
  return out;
}

std::string render_path(const SubordinatePath& path) {
  const CoxeterGroup& g = path.expr().group();
  std::string out;
  for (std::size_t k = 0; k < path.cosets().size(); ++k) {
    const DoubleCoset& p = path.cosets()[k];
    out += std::to_string(k) + ": " + render_gen_set(path.expr().subsets()[k]) +
           " | min=" + render_word(g, p.min_elem()) +
           " max=" + render_word(g, p.max_elem()) + "\n";
  }
  return out;
}

/* ------------------------------------------------------------------ */
/* Tables and diagrams                                                 */
/* ------------------------------------------------------------------ */

void write_cosets_tsv(std::ostream& out, std::span<const DoubleCoset> cosets) {
  out << "I\tJ\tmin\tmax\tlength\tsize\tleftred\trightred\n";
  for (const DoubleCoset& p : cosets) {
    const CoxeterGroup& g = p.group();
    out << render_gen_set(p.left_type()) << '\t' << render_gen_set(p.right_type()) << '\t'
        << render_word(g, p.min_elem()) << '\t' << render_word(g, p.max_elem()) << '\t'
        << p.length() << '\t' << p.size() << '\t' << render_gen_set(p.left_redundancy())
        << '\t' << render_gen_set(p.right_redundancy()) << '\n';
  }
}

void write_hasse_dot(std::ostream& out, std::span<const DoubleCoset> cosets) {
  const std::size_t n = cosets.size();
  std::vector<bool> leq(n * n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a * n + b] = coset_leq(cosets[a], cosets[b]);
  out << "digraph bruhat {\n  rankdir=BT;\n";
  for (const DoubleCoset& p : cosets)
    out << "  \"" << render_word(p.group(), p.min_elem()) << "\";\n";
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq[a * n + b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && leq[a * n + c] && leq[c * n + b]) cover = false;
      if (cover)
        out << "  \"" << render_word(cosets[a].group(), cosets[a].min_elem()) << "\" -> \""
            << render_word(cosets[b].group(), cosets[b].min_elem()) << "\";\n";
    }
  out << "}\n";
}

}  // namespace dcoset
