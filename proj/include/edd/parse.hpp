#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "edd/jet.hpp"
#include "edd/matrix.hpp"
#include "edd/poly.hpp"
#include "edd/rational.hpp"

namespace edd {

enum class RingTag { PolyQ, IntZ, Analytic };

std::string to_string(RingTag tag);

/// Abstract syntax for matrix entries: rational literals, the formal
/// variable, +, -, *, integer powers, and the analytic builtins applied to
/// a rational multiple of the variable.
struct EntryExpr {
    enum class Kind { Literal, Variable, Add, Sub, Neg, Mul, Pow, Builtin };
    Kind kind;
    Rational literal;                        // Literal
    int exponent = 0;                        // Pow
    JetBuiltin builtin = JetBuiltin::Poly;   // Builtin
    Rational builtin_scale;                  // Builtin: f(scale * z)
    std::vector<std::unique_ptr<EntryExpr>> args;
};

/// Parses one entry in the grammar above. The variable letter is `x` for
/// polynomial files and `z` for analytic ones; builtins are rejected
/// outside the analytic ring. Throws ParseError with a position on any
/// malformed input.
std::unique_ptr<EntryExpr> parse_entry_expr(const std::string& text, RingTag ring);

Poly lower_to_poly(const EntryExpr& e);
Jet lower_to_jet(const EntryExpr& e, const Rational& point, int truncation);

Poly parse_poly_entry(const std::string& text);
Int parse_int_entry(const std::string& text);
Jet parse_jet_entry(const std::string& text, const Rational& point, int truncation);

/// A matrix read from the text format:
///
///   <ring> <rows> <cols>              (ring = polyQ | int)
///   analytic <rows> <cols> <point> <N>
///
/// followed by the entries in row-major order, entries separated by
/// commas, rows separated by `;` or line breaks. `#` starts a comment.
struct MatrixFile {
    RingTag ring;
    int rows = 0, cols = 0;
    Rational point;         // analytic only
    int truncation = 0;     // analytic only
    std::variant<RingMatrix<Poly>, RingMatrix<Int>, RingMatrix<Jet>> matrix;
};

/// `truncation_override` > 0 replaces the truncation order of an analytic
/// header.
MatrixFile read_matrix_file(std::istream& in, int truncation_override = 0);
MatrixFile read_matrix_file_from_path(const std::string& path, int truncation_override = 0);

/// Parses a comma-separated vector of entries in the file's ring.
std::vector<Poly> parse_poly_vector(const std::string& text, int expected_size);
std::vector<Jet> parse_jet_vector(const std::string& text, int expected_size, const Rational& point, int truncation);

}  // namespace edd
