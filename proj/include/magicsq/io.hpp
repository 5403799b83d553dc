#pragma once

#include "magicsq/grid.hpp"
#include "magicsq/scalar.hpp"
#include "magicsq/verify.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace magicsq {

enum class OutputFormat { text, csv, json };

std::optional<OutputFormat> parse_output_format(std::string_view name);

/// Emits a materialized square. Text right-aligns every cell to the widest
/// one and appends a "constant = <value>" footer; CSV is the bare grid of
/// scalar literals; JSON is the SquareDocument form with order, offset,
/// magic_constant and cells.
void write_square(std::ostream& os, const MagicSquare& square, OutputFormat format);

/// Emits the same bytes as write_square(instantiate(grid, offset), format)
/// without ever materializing the square: rows are computed from the closed
/// form one at a time, so peak memory stays proportional to the order.
void stream_square(std::ostream& os, Order order, const Scalar& offset, OutputFormat format);

/// Emits the offset grid with every cell rendered "N+k".
void write_symbolic_table(std::ostream& os, Order order, OutputFormat format);

/// A square read from disk: a bare CSV grid or a JSON document with optional
/// declared offset and magic constant.
struct SquareDocument {
    long long side = 0;
    std::vector<std::vector<Scalar>> cells;
    std::optional<Scalar> offset;
    std::optional<Scalar> declared_constant;
};

/// Bare grid of comma-separated scalar literals, one row per line. Throws
/// std::invalid_argument on malformed literals or a non-square shape.
SquareDocument read_square_csv(std::istream& in);

/// JSON SquareDocument: required "order" and "cells", optional nullable
/// "offset" and "magic_constant". Enforces the schema, the cell dimensions,
/// and consistency of offset with magic_constant when both are present.
SquareDocument read_square_json(std::istream& in);

/// The verification report in its machine-readable JSON form. When the
/// document declares an offset the report carries an "offset_check" object
/// comparing the observed constant against the formula.
std::string verification_report_json(const VerificationReport& report,
                                     const SquareDocument& doc);

/// Verdict for the CLI: true iff the square is magic and, when an offset is
/// declared, the observed constant matches the formula.
bool verification_accepts(const VerificationReport& report, const SquareDocument& doc);

}  // namespace magicsq
