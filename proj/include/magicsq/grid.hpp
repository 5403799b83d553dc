#pragma once

#include "magicsq/scalar.hpp"

#include <vector>

namespace magicsq {

/// Validated odd positive side length. Construction is defined for odd
/// orders only; even values are rejected at the boundary.
class Order {
public:
    explicit Order(long long s);

    long long value() const { return s_; }
    long long middle() const { return (s_ - 1) / 2; }
    long long cell_count() const { return s_ * s_; }

    friend bool operator==(Order a, Order b) { return a.s_ == b.s_; }

private:
    long long s_;
};

/// The base sequence 0..s^2-1 arranged row-major.
class SquareA {
public:
    SquareA(Order order, std::vector<long long> cells);

    Order order() const { return order_; }
    long long at(long long i, long long c) const { return cells_[i * order_.value() + c]; }
    const std::vector<long long>& cells() const { return cells_; }

private:
    Order order_;
    std::vector<long long> cells_;
};

SquareA build_square_A(Order s);

/// The constructed arrangement of the offsets 0..s^2-1: a permutation whose
/// rows, columns and both main diagonals all sum to s(s^2-1)/2. Plain
/// container; the builders below produce valid grids, and from_cells admits
/// arbitrary contents so broken grids can be fed to the verifier.
class OffsetGrid {
public:
    static OffsetGrid from_cells(Order order, std::vector<long long> cells);

    Order order() const { return order_; }
    long long at(long long i, long long c) const { return cells_[i * order_.value() + c]; }
    const std::vector<long long>& cells() const { return cells_; }

private:
    OffsetGrid(Order order, std::vector<long long> cells)
        : order_(order), cells_(std::move(cells)) {}

    Order order_;
    std::vector<long long> cells_;
};

/// Builds the offset grid geometrically: the main diagonal is seeded with
/// square A's middle row (consecutive down the line), the anti-diagonal with
/// A's middle column (s apart down the line), the four corner end-points of A
/// are fixed around the center, and each seed's crossing diagonal is extended
/// with wraparound, which fills the four corner triangles.
OffsetGrid offset_grid_rules(Order s);

/// Same grid through the closed form cells[i][c] = s*q + r with
/// q = (m + m*c + (m+1)*i) mod s and r = ((m+1)*(i+c)) mod s, m = (s-1)/2.
OffsetGrid offset_grid_closed_form(Order s);

/// Single cell of the closed form, without materializing a grid.
long long offset_cell(long long s, long long i, long long c);

/// The common line sum s(s^2-1)/2 + s*n for the square of order s shifted
/// by n.
Scalar magic_constant(Order s, const Scalar& n);

/// Same formula over an arbitrary positive side, used when checking
/// user-supplied documents whose side may be even.
Scalar magic_constant_for_side(long long side, const Scalar& n);

/// s(s^2+1)/2, the constant of the square with entries 1..s^2; equals
/// magic_constant(s, 1).
Scalar normal_magic_constant(Order s);

/// A concrete square: the offset grid shifted by a fixed scalar.
class MagicSquare {
public:
    MagicSquare(Order order, Scalar offset, std::vector<Scalar> entries);

    Order order() const { return order_; }
    const Scalar& offset() const { return offset_; }
    const Scalar& at(long long i, long long c) const {
        return entries_[i * order_.value() + c];
    }
    const std::vector<Scalar>& entries() const { return entries_; }

    /// Rows as a nested vector, the shape the verifier accepts.
    std::vector<std::vector<Scalar>> rows() const;

private:
    Order order_;
    Scalar offset_;
    std::vector<Scalar> entries_;
};

/// entries[i][c] = n + grid.cells[i][c]; every line sums to
/// magic_constant(s, n).
MagicSquare instantiate(const OffsetGrid& grid, const Scalar& n);

}  // namespace magicsq
