#include "magicsq/grid.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace magicsq {

Order::Order(long long s) : s_(s) {
    if (s < 1) throw std::invalid_argument("order must be positive");
    if (s % 2 == 0) throw std::invalid_argument("order must be odd");
    // keep s^2 and the closed-form products inside int64
    if (s > 3'037'000'499LL) throw std::invalid_argument("order too large");
}

SquareA::SquareA(Order order, std::vector<long long> cells)
    : order_(order), cells_(std::move(cells)) {
    if (static_cast<long long>(cells_.size()) != order_.cell_count()) {
        throw std::invalid_argument("cell count does not match order");
    }
}

SquareA build_square_A(Order s) {
    const long long n = s.value();
    std::vector<long long> cells;
    cells.reserve(static_cast<size_t>(n * n));
    for (long long i = 0; i < n; ++i) {
        for (long long c = 0; c < n; ++c) {
            cells.push_back(i * n + c);
        }
    }
    return SquareA(s, std::move(cells));
}

OffsetGrid OffsetGrid::from_cells(Order order, std::vector<long long> cells) {
    if (static_cast<long long>(cells.size()) != order.cell_count()) {
        throw std::invalid_argument("cell count does not match order");
    }
    return OffsetGrid(order, std::move(cells));
}

OffsetGrid offset_grid_rules(Order order) {
    const long long s = order.value();
    if (s == 1) return OffsetGrid::from_cells(order, {0});

    const long long m = order.middle();
    constexpr long long unset = -1;
    std::vector<long long> cells(static_cast<size_t>(s * s), unset);

    auto put = [&](long long i, long long c, long long v) {
        long long& slot = cells[static_cast<size_t>(i * s + c)];
        assert(slot == unset || slot == v);
        slot = v;
    };
    auto wrap = [s](long long x) { return ((x % s) + s) % s; };

    // Middle row of A down the main diagonal, consecutive numbers.
    for (long long t = 0; t < s; ++t) put(t, t, m * s + t);
    // Middle column of A down the anti-diagonal, s numbers apart.
    for (long long t = 0; t < s; ++t) put(t, s - 1 - t, t * s + m);
    // The four corner end-points of A fixed around the center, zero below it.
    put(m + 1, m, 0);
    put(m - 1, m, s * s - 1);
    put(m, m - 1, s - 1);
    put(m, m + 1, s * s - s);
    // Each anti-diagonal cell carries a crossing diagonal of consecutive
    // numbers: the seed t*s + m sits at the midpoint of the block
    // {t*s, ..., t*s + s - 1}.
    for (long long t = 0; t < s; ++t) {
        for (long long k = -m; k <= m; ++k) {
            put(wrap(t + k), wrap(s - 1 - t + k), t * s + m + k);
        }
    }
    // Each main-diagonal cell carries a crossing diagonal of numbers s apart:
    // the seed m*s + t sits at the midpoint of the residue class t mod s.
    for (long long t = 0; t < s; ++t) {
        for (long long k = -m; k <= m; ++k) {
            put(wrap(t + k), wrap(t - k), (m + k) * s + t);
        }
    }
    return OffsetGrid::from_cells(order, std::move(cells));
}

long long offset_cell(long long s, long long i, long long c) {
    const long long m = (s - 1) / 2;
    const long long q = (m + m * c + (m + 1) * i) % s;
    const long long r = ((m + 1) * (i + c)) % s;
    return s * q + r;
}

OffsetGrid offset_grid_closed_form(Order order) {
    const long long s = order.value();
    std::vector<long long> cells;
    cells.reserve(static_cast<size_t>(s * s));
    for (long long i = 0; i < s; ++i) {
        for (long long c = 0; c < s; ++c) {
            cells.push_back(offset_cell(s, i, c));
        }
    }
    return OffsetGrid::from_cells(order, std::move(cells));
}

Scalar magic_constant_for_side(long long side, const Scalar& n) {
    if (side < 1) throw std::invalid_argument("order must be positive");
    BigInt base = BigInt(side) * (BigInt(side) * side - 1) / 2;
    return Scalar(std::move(base)) + Scalar(side) * n;
}

Scalar magic_constant(Order s, const Scalar& n) {
    return magic_constant_for_side(s.value(), n);
}

Scalar normal_magic_constant(Order s) {
    const long long v = s.value();
    return Scalar(BigInt(v) * (BigInt(v) * v + 1) / 2);
}

MagicSquare::MagicSquare(Order order, Scalar offset, std::vector<Scalar> entries)
    : order_(order), offset_(std::move(offset)), entries_(std::move(entries)) {
    if (static_cast<long long>(entries_.size()) != order_.cell_count()) {
        throw std::invalid_argument("entry count does not match order");
    }
}

std::vector<std::vector<Scalar>> MagicSquare::rows() const {
    const long long s = order_.value();
    std::vector<std::vector<Scalar>> out(static_cast<size_t>(s));
    for (long long i = 0; i < s; ++i) {
        out[static_cast<size_t>(i)].assign(entries_.begin() + i * s,
                                           entries_.begin() + (i + 1) * s);
    }
    return out;
}

MagicSquare instantiate(const OffsetGrid& grid, const Scalar& n) {
    std::vector<Scalar> entries;
    entries.reserve(grid.cells().size());
    for (long long k : grid.cells()) {
        entries.push_back(n + Scalar(k));
    }
    return MagicSquare(grid.order(), n, std::move(entries));
}

}  // namespace magicsq
