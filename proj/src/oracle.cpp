#include "magicsq/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace magicsq {

namespace {

bool canonical_less(const Grid3& a, const Grid3& b) {
    for (size_t k = 0; k < 9; ++k) {
        int cmp = Scalar::canonical_compare(a[k], b[k]);
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

Grid3 rotated(const Grid3& g) {  // 90 degrees clockwise
    return {g[6], g[3], g[0], g[7], g[4], g[1], g[8], g[5], g[2]};
}

Grid3 mirrored(const Grid3& g) {  // left-right
    return {g[2], g[1], g[0], g[5], g[4], g[3], g[8], g[7], g[6]};
}

// Depth-first search over distinct arrangements of the sorted multiset,
// pruning each line as soon as its last cell is placed. Line sums are
// compared through 3*sum == total to stay in exact integer/rational space.
struct Search {
    const std::vector<Scalar>& values;  // sorted, size 9
    const Scalar& total;
    std::array<bool, 9> used{};
    Grid3 grid;
    std::vector<Grid3>& out;

    bool line_ok(const Scalar& a, const Scalar& b, const Scalar& c) const {
        return (a + b + c) * Scalar(3) == total;
    }

    bool placed_ok(size_t pos) const {
        const size_t row = pos / 3, col = pos % 3;
        if (col == 2 && !line_ok(grid[row * 3], grid[row * 3 + 1], grid[row * 3 + 2]))
            return false;
        if (row == 2 && !line_ok(grid[col], grid[3 + col], grid[6 + col])) return false;
        if (pos == 6 && !line_ok(grid[2], grid[4], grid[6])) return false;
        if (pos == 8 && !line_ok(grid[0], grid[4], grid[8])) return false;
        return true;
    }

    void run(size_t pos) {
        if (pos == 9) {
            out.push_back(grid);
            return;
        }
        for (size_t k = 0; k < 9; ++k) {
            if (used[k]) continue;
            // skip equal values whose earlier twin is unused: dedup repeats
            if (k > 0 && !used[k - 1] && values[k] == values[k - 1]) continue;
            used[k] = true;
            grid[pos] = values[k];
            if (placed_ok(pos)) run(pos + 1);
            used[k] = false;
        }
    }
};

}  // namespace

OracleResult enumerate_3x3(std::vector<Scalar> cells) {
    if (cells.size() != 9) {
        throw std::invalid_argument("oracle needs exactly 9 cells");
    }
    std::sort(cells.begin(), cells.end(), [](const Scalar& a, const Scalar& b) {
        return Scalar::canonical_compare(a, b) < 0;
    });

    OracleResult result;
    result.inputs = cells;
    Scalar total;
    for (const Scalar& v : cells) total += v;

    Search search{cells, total, {}, {}, result.squares};
    search.run(0);
    std::sort(result.squares.begin(), result.squares.end(), canonical_less);

    result.total_count = static_cast<long long>(result.squares.size());

    std::vector<Grid3> reps;
    reps.reserve(result.squares.size());
    for (const Grid3& sq : result.squares) {
        std::vector<Grid3> orbit = symmetry_orbit(sq);
        reps.push_back(orbit.front());  // canonical minimum of the orbit
    }
    std::sort(reps.begin(), reps.end(), canonical_less);
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    result.symmetry_class_count = static_cast<long long>(reps.size());

    return result;
}

std::vector<Grid3> symmetry_orbit(const Grid3& square) {
    std::vector<Grid3> orbit;
    orbit.reserve(8);
    Grid3 g = square;
    for (int r = 0; r < 4; ++r) {
        orbit.push_back(g);
        orbit.push_back(mirrored(g));
        g = rotated(g);
    }
    std::sort(orbit.begin(), orbit.end(), canonical_less);
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

}  // namespace magicsq
