#include "magicsq/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace magicsq {

namespace {

using Json = nlohmann::json;

// Formatted cells for one row; the provider supplies rows in order and owns
// whatever state it needs (materialized entries or the running closed form).
using RowProvider = std::function<void(long long i, std::vector<std::string>& row)>;

void emit_csv(std::ostream& os, long long s, const RowProvider& provider) {
    std::vector<std::string> row;
    for (long long i = 0; i < s; ++i) {
        provider(i, row);
        for (long long c = 0; c < s; ++c) {
            if (c) os.put(',');
            os << row[static_cast<size_t>(c)];
        }
        os.put('\n');
    }
}

void emit_text(std::ostream& os, long long s, const RowProvider& provider,
               const std::string& footer) {
    size_t width = 0;
    std::vector<std::string> row;
    for (long long i = 0; i < s; ++i) {
        provider(i, row);
        for (const std::string& cell : row) width = std::max(width, cell.size());
    }
    for (long long i = 0; i < s; ++i) {
        provider(i, row);
        for (long long c = 0; c < s; ++c) {
            if (c) os.put(' ');
            const std::string& cell = row[static_cast<size_t>(c)];
            for (size_t pad = cell.size(); pad < width; ++pad) os.put(' ');
            os << cell;
        }
        os.put('\n');
    }
    if (!footer.empty()) os << footer << '\n';
}

// Hand-rolled document emission so the streaming and materialized paths are
// byte-identical. Scalar literals need no JSON escaping.
void emit_json(std::ostream& os, long long s, const RowProvider& provider,
               const std::optional<std::string>& offset,
               const std::optional<std::string>& constant) {
    os << "{\n  \"order\": " << s << ",\n";
    if (offset) os << "  \"offset\": \"" << *offset << "\",\n";
    if (constant) os << "  \"magic_constant\": \"" << *constant << "\",\n";
    os << "  \"cells\": [\n";
    std::vector<std::string> row;
    for (long long i = 0; i < s; ++i) {
        provider(i, row);
        os << "    [";
        for (long long c = 0; c < s; ++c) {
            if (c) os << ", ";
            os << '"' << row[static_cast<size_t>(c)] << '"';
        }
        os << (i + 1 < s ? "],\n" : "]\n");
    }
    os << "  ]\n}\n";
}

void emit_square(std::ostream& os, long long s, const RowProvider& provider,
                 const Scalar& offset, const Scalar& constant, OutputFormat format) {
    switch (format) {
        case OutputFormat::csv:
            emit_csv(os, s, provider);
            break;
        case OutputFormat::text:
            emit_text(os, s, provider, "constant = " + format_scalar(constant));
            break;
        case OutputFormat::json:
            emit_json(os, s, provider, format_scalar(offset), format_scalar(constant));
            break;
    }
}

// Tight loop for the common large-order case: integer offset, CSV rows
// written through one reused buffer. Produces the same bytes as the generic
// path cell for cell.
bool fast_stream_csv(std::ostream& os, long long s, const Scalar& offset) {
    if (!offset.is_integer()) return false;
    const BigInt& off = offset.real().num();
    // all emitted values must fit comfortably in int64
    static const BigInt kLimit = (BigInt(1) << 62);
    if (off < -kLimit || off > kLimit || BigInt(s) * s + boost::multiprecision::abs(off) > kLimit) {
        return false;
    }
    const long long n = off.convert_to<long long>();
    const long long m = (s - 1) / 2;

    std::vector<char> buf(static_cast<size_t>(s) * 24 + 2);
    for (long long i = 0; i < s; ++i) {
        char* p = buf.data();
        char* const end = buf.data() + buf.size();
        long long q = (m + (m + 1) * i) % s;
        long long r = ((m + 1) * i) % s;
        for (long long c = 0; c < s; ++c) {
            if (c) *p++ = ',';
            p = std::to_chars(p, end, n + s * q + r).ptr;
            q += m;
            if (q >= s) q -= s;
            r += m + 1;
            if (r >= s) r -= s;
        }
        *p++ = '\n';
        os.write(buf.data(), p - buf.data());
    }
    return true;
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    return std::nullopt;
}

void write_square(std::ostream& os, const MagicSquare& square, OutputFormat format) {
    const long long s = square.order().value();
    RowProvider provider = [&](long long i, std::vector<std::string>& row) {
        row.clear();
        for (long long c = 0; c < s; ++c) row.push_back(format_scalar(square.at(i, c)));
    };
    emit_square(os, s, provider, square.offset(),
                magic_constant(square.order(), square.offset()), format);
}

void stream_square(std::ostream& os, Order order, const Scalar& offset, OutputFormat format) {
    const long long s = order.value();
    if (format == OutputFormat::csv && fast_stream_csv(os, s, offset)) return;
    RowProvider provider = [&, s](long long i, std::vector<std::string>& row) {
        row.clear();
        for (long long c = 0; c < s; ++c) {
            row.push_back(format_scalar(offset + Scalar(offset_cell(s, i, c))));
        }
    };
    emit_square(os, s, provider, offset, magic_constant(order, offset), format);
}

void write_symbolic_table(std::ostream& os, Order order, OutputFormat format) {
    const long long s = order.value();
    RowProvider provider = [s](long long i, std::vector<std::string>& row) {
        row.clear();
        for (long long c = 0; c < s; ++c) {
            row.push_back("N+" + std::to_string(offset_cell(s, i, c)));
        }
    };
    switch (format) {
        case OutputFormat::csv:
            emit_csv(os, s, provider);
            break;
        case OutputFormat::text:
            emit_text(os, s, provider, "");
            break;
        case OutputFormat::json:
            emit_json(os, s, provider, std::nullopt, std::nullopt);
            break;
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

void validate_document(SquareDocument& doc) {
    const size_t side = doc.cells.size();
    if (side == 0) throw std::invalid_argument("document has no cells");
    for (const auto& row : doc.cells) {
        if (row.size() != side) {
            throw std::invalid_argument("document grid is not square");
        }
    }
    doc.side = static_cast<long long>(side);
    if (doc.offset && doc.declared_constant) {
        if (magic_constant_for_side(doc.side, *doc.offset) != *doc.declared_constant) {
            throw std::invalid_argument(
                "document offset and magic_constant are inconsistent");
        }
    }
}

}  // namespace

SquareDocument read_square_csv(std::istream& in) {
    SquareDocument doc;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (blank) continue;
        std::vector<Scalar> row;
        for (const std::string& token : split_csv_line(line)) {
            row.push_back(parse_scalar(token));
        }
        doc.cells.push_back(std::move(row));
    }
    validate_document(doc);
    return doc;
}

SquareDocument read_square_json(std::istream& in) {
    Json json;
    try {
        json = Json::parse(in);
    } catch (const Json::parse_error& err) {
        throw std::invalid_argument(std::string("invalid JSON: ") + err.what());
    }
    if (!json.is_object()) throw std::invalid_argument("document must be a JSON object");
    if (!json.contains("order") || !json["order"].is_number_integer()) {
        throw std::invalid_argument("document needs an integer \"order\"");
    }
    if (!json.contains("cells") || !json["cells"].is_array()) {
        throw std::invalid_argument("document needs a \"cells\" array");
    }

    SquareDocument doc;
    const long long declared_order = json["order"].get<long long>();
    for (const Json& row_json : json["cells"]) {
        if (!row_json.is_array()) throw std::invalid_argument("\"cells\" rows must be arrays");
        std::vector<Scalar> row;
        for (const Json& cell : row_json) {
            if (!cell.is_string()) {
                throw std::invalid_argument("cells must be scalar literal strings");
            }
            row.push_back(parse_scalar(cell.get<std::string>()));
        }
        doc.cells.push_back(std::move(row));
    }
    auto optional_scalar = [&](const char* key) -> std::optional<Scalar> {
        if (!json.contains(key) || json[key].is_null()) return std::nullopt;
        if (!json[key].is_string()) {
            throw std::invalid_argument(std::string("\"") + key +
                                        "\" must be a scalar literal string or null");
        }
        return parse_scalar(json[key].get<std::string>());
    };
    doc.offset = optional_scalar("offset");
    doc.declared_constant = optional_scalar("magic_constant");
    validate_document(doc);
    if (doc.side != declared_order) {
        throw std::invalid_argument("cell dimensions do not match \"order\"");
    }
    return doc;
}

std::string verification_report_json(const VerificationReport& report,
                                     const SquareDocument& doc) {
    Json out;
    out["order"] = report.side;
    out["is_magic"] = report.is_magic;
    out["all_distinct"] = report.all_distinct;
    out["common_constant"] =
        report.common_constant ? Json(format_scalar(*report.common_constant)) : Json(nullptr);
    Json rows = Json::array(), cols = Json::array();
    for (const Scalar& v : report.row_sums) rows.push_back(format_scalar(v));
    for (const Scalar& v : report.column_sums) cols.push_back(format_scalar(v));
    out["row_sums"] = std::move(rows);
    out["column_sums"] = std::move(cols);
    out["diag_lr_sum"] = format_scalar(report.diag_lr_sum);
    out["diag_rl_sum"] = format_scalar(report.diag_rl_sum);
    out["failures"] = report.failures;
    if (report.structural) {
        const StructuralReport& s = *report.structural;
        out["structural"] = {{"permutation_ok", s.permutation_ok},
                             {"diagonal_seed_ok", s.diagonal_seed_ok},
                             {"anti_diagonal_seed_ok", s.anti_diagonal_seed_ok},
                             {"anchors_ok", s.anchors_ok},
                             {"antisymmetry_ok", s.antisymmetry_ok},
                             {"wrapped_lr_blocks_ok", s.wrapped_lr_blocks_ok},
                             {"wrapped_rl_residues_ok", s.wrapped_rl_residues_ok},
                             {"middle_line_pairing_ok", s.middle_line_pairing_ok}};
    }
    if (doc.offset) {
        const Scalar expected = magic_constant_for_side(report.side, *doc.offset);
        Json check;
        check["offset"] = format_scalar(*doc.offset);
        check["expected_constant"] = format_scalar(expected);
        check["matches"] =
            report.common_constant.has_value() && *report.common_constant == expected;
        out["offset_check"] = std::move(check);
    }
    return out.dump(2) + "\n";
}

bool verification_accepts(const VerificationReport& report, const SquareDocument& doc) {
    if (!report.is_magic) return false;
    if (doc.offset) {
        const Scalar expected = magic_constant_for_side(report.side, *doc.offset);
        return report.common_constant.has_value() && *report.common_constant == expected;
    }
    return true;
}

}  // namespace magicsq
