#include "magicsq/grid.hpp"
#include "magicsq/io.hpp"
#include "magicsq/oracle.hpp"
#include "magicsq/scalar.hpp"
#include "magicsq/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace magicsq;

// exit codes: 0 success / magic, 1 verified and not magic, 2 usage or parse error
constexpr int kOk = 0;
constexpr int kNotMagic = 1;
constexpr int kUsageError = 2;

OutputFormat require_format(const std::string& name) {
    auto format = parse_output_format(name);
    if (!format) throw std::invalid_argument("unknown format: " + name);
    return *format;
}

int run_generate(long long order_value, const std::string& offset_text,
                 const std::string& format_name, bool stream) {
    const Order order(order_value);
    const Scalar offset = parse_scalar(offset_text);
    const OutputFormat format = require_format(format_name);
    if (stream) {
        stream_square(std::cout, order, offset, format);
    } else {
        write_square(std::cout, instantiate(offset_grid_rules(order), offset), format);
    }
    return kOk;
}

int run_table(long long order_value, const std::string& format_name) {
    write_symbolic_table(std::cout, Order(order_value), require_format(format_name));
    return kOk;
}

int run_constant(long long order_value, const std::string& offset_text) {
    std::cout << format_scalar(magic_constant(Order(order_value), parse_scalar(offset_text)))
              << '\n';
    return kOk;
}

// grids of plain integers in [0, s^2) read as offset grids and get the
// structural checks alongside the magic ones
std::optional<OffsetGrid> as_offset_grid(const SquareDocument& doc) {
    if (doc.side % 2 == 0) return std::nullopt;
    std::vector<long long> cells;
    cells.reserve(static_cast<size_t>(doc.side * doc.side));
    for (const auto& row : doc.cells) {
        for (const Scalar& value : row) {
            if (!value.is_integer()) return std::nullopt;
            const BigInt& v = value.real().num();
            if (v < 0 || v >= BigInt(doc.side) * doc.side) return std::nullopt;
            cells.push_back(v.convert_to<long long>());
        }
    }
    return OffsetGrid::from_cells(Order(doc.side), std::move(cells));
}

int run_verify(const std::string& input_path, const std::string& format_name) {
    const OutputFormat format = require_format(format_name);
    if (format == OutputFormat::text) {
        throw std::invalid_argument("verify reads csv or json input");
    }
    std::ifstream in(input_path);
    if (!in) throw std::invalid_argument("cannot open input file: " + input_path);
    const SquareDocument doc =
        format == OutputFormat::csv ? read_square_csv(in) : read_square_json(in);
    VerificationReport report = verify_magic(doc.cells);
    if (std::optional<OffsetGrid> grid = as_offset_grid(doc)) {
        report.structural = verify_structure(*grid);
    }
    std::cout << verification_report_json(report, doc);
    return verification_accepts(report, doc) ? kOk : kNotMagic;
}

int run_oracle(const std::string& cells_text, bool full) {
    std::vector<Scalar> cells;
    std::stringstream stream(cells_text);
    std::string token;
    while (std::getline(stream, token, ',')) cells.push_back(parse_scalar(token));
    const OracleResult result = enumerate_3x3(std::move(cells));
    std::cout << "total=" << result.total_count << " classes=" << result.symmetry_class_count
              << '\n';
    if (full) {
        for (const Grid3& square : result.squares) {
            std::cout << '\n';
            for (int i = 0; i < 3; ++i) {
                std::cout << format_scalar(square[i * 3]) << ',' << format_scalar(square[i * 3 + 1])
                          << ',' << format_scalar(square[i * 3 + 2]) << '\n';
            }
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"Odd-order magic squares over exact integers, rationals and Gaussian rationals"};
    app.require_subcommand(1);

    long long order = 0;
    std::string offset = "0";
    std::string format = "text";
    bool stream = false;
    std::string input_path;
    std::string cells;
    bool full = false;

    CLI::App* generate = app.add_subcommand("generate", "emit the square for an order and offset");
    generate->add_option("--order", order, "odd order")->required();
    generate->add_option("--offset", offset, "scalar literal added to every cell");
    generate->add_option("--format", format, "text|csv|json");
    generate->add_flag("--stream", stream, "write rows as they are computed");

    CLI::App* table = app.add_subcommand("table", "emit the symbolic N+k table");
    table->add_option("--order", order, "odd order")->required();
    table->add_option("--format", format, "text|csv|json");

    CLI::App* constant = app.add_subcommand("constant", "print the magic constant");
    constant->add_option("--order", order, "odd order")->required();
    constant->add_option("--offset", offset, "scalar literal");

    std::string verify_format = "csv";
    CLI::App* verify = app.add_subcommand("verify", "check a square file for the magic property");
    verify->add_option("--input", input_path, "path to a csv grid or json document")->required();
    verify->add_option("--format", verify_format, "csv|json");

    CLI::App* oracle = app.add_subcommand("oracle", "enumerate all magic 3x3 arrangements");
    oracle->add_option("--cells", cells, "nine comma-separated scalar literals")->required();
    oracle->add_flag("--full", full, "list every arrangement");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kUsageError;
    }

    try {
        if (generate->parsed()) return run_generate(order, offset, format, stream);
        if (table->parsed()) return run_table(order, format);
        if (constant->parsed()) return run_constant(order, offset);
        if (verify->parsed()) return run_verify(input_path, verify_format);
        if (oracle->parsed()) return run_oracle(cells, full);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
