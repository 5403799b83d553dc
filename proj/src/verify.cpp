#include "magicsq/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace magicsq {

namespace {

// Reference for failure reporting: the most frequent sum among the 2s+2
// line sums, ties broken by first appearance (rows, columns, diagonals).
Scalar modal_sum(const std::vector<Scalar>& sums) {
    size_t best = 0;
    size_t best_count = 0;
    for (size_t i = 0; i < sums.size(); ++i) {
        size_t count = 0;
        for (const Scalar& other : sums) {
            if (other == sums[i]) ++count;
        }
        if (count > best_count) {
            best_count = count;
            best = i;
        }
    }
    return sums[best];
}

}  // namespace

VerificationReport verify_magic(const std::vector<std::vector<Scalar>>& square) {
    const size_t s = square.size();
    if (s == 0) throw std::invalid_argument("empty grid");
    for (const auto& row : square) {
        if (row.size() != s) {
            throw std::invalid_argument("ragged grid: every row must have as many cells as there are rows");
        }
    }

    VerificationReport report;
    report.side = static_cast<long long>(s);
    report.row_sums.reserve(s);
    report.column_sums.reserve(s);
    for (size_t i = 0; i < s; ++i) {
        report.row_sums.push_back(
            std::accumulate(square[i].begin(), square[i].end(), Scalar()));
    }
    for (size_t c = 0; c < s; ++c) {
        Scalar sum;
        for (size_t i = 0; i < s; ++i) sum += square[i][c];
        report.column_sums.push_back(std::move(sum));
    }
    for (size_t t = 0; t < s; ++t) {
        report.diag_lr_sum += square[t][t];
        report.diag_rl_sum += square[t][s - 1 - t];
    }

    std::vector<Scalar> all_sums = report.row_sums;
    all_sums.insert(all_sums.end(), report.column_sums.begin(), report.column_sums.end());
    all_sums.push_back(report.diag_lr_sum);
    all_sums.push_back(report.diag_rl_sum);
    const Scalar reference = modal_sum(all_sums);
    bool sums_agree = true;

    auto check_line = [&](const char* kind, size_t index, bool indexed, const Scalar& sum) {
        if (sum == reference) return;
        sums_agree = false;
        std::ostringstream oss;
        oss << kind;
        if (indexed) oss << ' ' << index;
        oss << ": sum = " << sum << ", expected " << reference;
        report.failures.push_back(oss.str());
    };
    for (size_t i = 0; i < s; ++i) check_line("row", i, true, report.row_sums[i]);
    for (size_t c = 0; c < s; ++c) check_line("column", c, true, report.column_sums[c]);
    check_line("diagonal (l-r)", 0, false, report.diag_lr_sum);
    check_line("diagonal (r-l)", 0, false, report.diag_rl_sum);

    if (sums_agree) report.common_constant = reference;

    // Distinctness via a canonical sort; duplicates are reported with the
    // positions of their first two occurrences, in row-major order.
    struct Entry {
        const Scalar* value;
        size_t index;
    };
    std::vector<Entry> entries;
    entries.reserve(s * s);
    for (size_t i = 0; i < s; ++i) {
        for (size_t c = 0; c < s; ++c) {
            entries.push_back({&square[i][c], i * s + c});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        int cmp = Scalar::canonical_compare(*a.value, *b.value);
        if (cmp != 0) return cmp < 0;
        return a.index < b.index;
    });
    report.all_distinct = true;
    for (size_t k = 0; k + 1 < entries.size(); ++k) {
        if (*entries[k].value == *entries[k + 1].value) {
            if (report.all_distinct) {
                report.all_distinct = false;
                std::ostringstream oss;
                oss << "duplicate value " << *entries[k].value << " at (" << entries[k].index / s
                    << "," << entries[k].index % s << ") and (" << entries[k + 1].index / s << ","
                    << entries[k + 1].index % s << ")";
                report.failures.push_back(oss.str());
            }
        }
    }

    report.is_magic = sums_agree && report.all_distinct;
    return report;
}

VerificationReport verify_magic(const MagicSquare& square) {
    return verify_magic(square.rows());
}

StructuralReport verify_structure(const OffsetGrid& grid) {
    const long long s = grid.order().value();
    const long long m = grid.order().middle();
    const long long top = s * s - 1;
    auto at = [&](long long i, long long c) { return grid.at(i, c); };
    auto wrap = [s](long long x) { return ((x % s) + s) % s; };

    StructuralReport rep;

    {
        std::vector<long long> sorted = grid.cells();
        std::sort(sorted.begin(), sorted.end());
        rep.permutation_ok = true;
        for (long long k = 0; k < s * s; ++k) {
            if (sorted[static_cast<size_t>(k)] != k) {
                rep.permutation_ok = false;
                break;
            }
        }
    }

    rep.diagonal_seed_ok = true;
    rep.anti_diagonal_seed_ok = true;
    for (long long t = 0; t < s; ++t) {
        if (at(t, t) != m * s + t) rep.diagonal_seed_ok = false;
        if (at(t, s - 1 - t) != t * s + m) rep.anti_diagonal_seed_ok = false;
    }

    rep.anchors_ok = s == 1 || (at(m + 1, m) == 0 && at(m - 1, m) == top &&
                                at(m, m - 1) == s - 1 && at(m, m + 1) == s * s - s);

    rep.antisymmetry_ok = true;
    for (long long i = 0; i < s && rep.antisymmetry_ok; ++i) {
        for (long long c = 0; c < s; ++c) {
            if (at(i, c) + at(s - 1 - i, s - 1 - c) != top) {
                rep.antisymmetry_ok = false;
                break;
            }
        }
    }

    // Wrapped down-right diagonals ((c - i) mod s fixed): one consecutive
    // block {q*s .. q*s + s - 1}, each step +1 except a single wrap of 1-s.
    rep.wrapped_lr_blocks_ok = true;
    for (long long d = 0; d < s && rep.wrapped_lr_blocks_ok; ++d) {
        long long lo = at(0, d), hi = at(0, d);
        long long wraps = 0;
        for (long long i = 0; i < s; ++i) {
            long long v = at(i, wrap(i + d));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            long long next = at(wrap(i + 1), wrap(i + 1 + d));
            long long diff = next - v;
            if (diff == 1 - s) {
                ++wraps;
            } else if (diff != 1 && s > 1) {
                rep.wrapped_lr_blocks_ok = false;
                break;
            }
        }
        if (rep.wrapped_lr_blocks_ok && s > 1 &&
            (wraps != 1 || lo % s != 0 || hi != lo + s - 1)) {
            rep.wrapped_lr_blocks_ok = false;
        }
    }

    // Wrapped down-left diagonals ((i + c) mod s fixed): one residue class
    // mod s, each step +s except a single wrap of s - s^2.
    rep.wrapped_rl_residues_ok = true;
    for (long long a = 0; a < s && rep.wrapped_rl_residues_ok; ++a) {
        const long long residue = ((at(0, a) % s) + s) % s;
        long long wraps = 0;
        for (long long i = 0; i < s; ++i) {
            long long v = at(i, wrap(a - i));
            if (((v % s) + s) % s != residue) {
                rep.wrapped_rl_residues_ok = false;
                break;
            }
            long long next = at(wrap(i + 1), wrap(a - i - 1));
            long long diff = next - v;
            if (diff == s - s * s) {
                ++wraps;
            } else if (diff != s && s > 1) {
                rep.wrapped_rl_residues_ok = false;
                break;
            }
        }
        if (rep.wrapped_rl_residues_ok && s > 1 && wraps != 1) {
            rep.wrapped_rl_residues_ok = false;
        }
    }

    // The middle row pairs symmetrically about the center (each pair sums to
    // s^2-1) and holds exactly square A's anti-diagonal values; the middle
    // column pairs likewise and holds A's main-diagonal values.
    {
        rep.middle_line_pairing_ok = true;
        std::vector<long long> row, col, a_anti, a_main;
        for (long long t = 0; t < s; ++t) {
            row.push_back(at(m, t));
            col.push_back(at(t, m));
            a_anti.push_back(t * s + (s - 1 - t));
            a_main.push_back(t * s + t);
        }
        for (long long t = 0; t < s; ++t) {
            if (row[static_cast<size_t>(t)] + row[static_cast<size_t>(s - 1 - t)] != top ||
                col[static_cast<size_t>(t)] + col[static_cast<size_t>(s - 1 - t)] != top) {
                rep.middle_line_pairing_ok = false;
            }
        }
        std::sort(row.begin(), row.end());
        std::sort(col.begin(), col.end());
        std::sort(a_anti.begin(), a_anti.end());
        std::sort(a_main.begin(), a_main.end());
        if (row != a_anti || col != a_main) rep.middle_line_pairing_ok = false;
    }

    return rep;
}

bool is_normal(const MagicSquare& square) {
    const long long n = square.order().cell_count();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (const Scalar& entry : square.entries()) {
        if (!entry.is_integer()) return false;
        const BigInt& v = entry.real().num();
        if (v < 1 || v > n) return false;
        auto idx = static_cast<size_t>(v.convert_to<long long>() - 1);
        if (seen[idx]) return false;
        seen[idx] = true;
    }
    return true;
}

}  // namespace magicsq
