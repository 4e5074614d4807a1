#ifndef DCOSET_IO_HPP
#define DCOSET_IO_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dcoset/coset.hpp"
#include "dcoset/coxeter.hpp"
#include "dcoset/expression.hpp"
#include "dcoset/paths.hpp"

namespace dcoset {

// Plain-text group description: a `rank N` line followed by `m i j v`
// lines with 1-indexed generators and v >= 2; unlisted pairs default to
// m = 2. Blank lines and `#` comments are allowed.
CoxeterMatrix parse_group_file(std::istream& in);

// Presets by name: A1xA1, A2, A3, B2, B3, H3, I2(k). Throws ParseError
// on anything else.
CoxeterMatrix preset_matrix(const std::string& name);
bool is_preset_name(const std::string& name);

// Everything below prints generators 1-indexed; the empty set and the
// identity word both render as "-".
std::string render_gen_set(GenSet s);
GenSet parse_gen_set(const std::string& text, int rank);

std::string render_word(const CoxeterGroup& g, Element w);
Element parse_word(const CoxeterGroup& g, const std::string& text);  // hyphen-joined

// Expression text: comma-separated bracketed subsets, e.g.
// "[1],[1 2],[1]"; the empty subset is "[]" or "[-]".
std::string render_expr(const SinglestepExpr& e);
SinglestepExpr parse_expr(const CoxeterGroup& g, const std::string& text);

// Multistep display form, e.g. "[[1 < 1 2 > 1]]".
std::string render_multistep(const MultistepExpr& e);

// One line per step: "k: I_k | min=... max=...".
std::string render_path(const SubordinatePath& path);

// Coset table with columns I, J, min, max, length, size, leftred,
// rightred.
void write_cosets_tsv(std::ostream& out, std::span<const DoubleCoset> cosets);

// Hasse diagram of the Bruhat order on the given cosets (one family)
// as a DOT digraph: nodes labeled by min words, edges the covering
// relations.
void write_hasse_dot(std::ostream& out, std::span<const DoubleCoset> cosets);

}  // namespace dcoset

#endif
