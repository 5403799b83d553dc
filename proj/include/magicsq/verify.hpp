#pragma once

#include "magicsq/grid.hpp"
#include "magicsq/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace magicsq {

/// One flag per structural invariant of the offset-grid construction. Each
/// flag is evaluated independently so one broken property cannot mask
/// another.
struct StructuralReport {
    bool permutation_ok = false;
    bool diagonal_seed_ok = false;
    bool anti_diagonal_seed_ok = false;
    bool anchors_ok = false;
    bool antisymmetry_ok = false;
    bool wrapped_lr_blocks_ok = false;
    bool wrapped_rl_residues_ok = false;
    bool middle_line_pairing_ok = false;

    bool all_ok() const {
        return permutation_ok && diagonal_seed_ok && anti_diagonal_seed_ok && anchors_ok &&
               antisymmetry_ok && wrapped_lr_blocks_ok && wrapped_rl_residues_ok &&
               middle_line_pairing_ok;
    }
};

struct VerificationReport {
    long long side = 0;  // any square side, even ones included
    std::vector<Scalar> row_sums;
    std::vector<Scalar> column_sums;
    Scalar diag_lr_sum;
    Scalar diag_rl_sum;
    std::optional<Scalar> common_constant;  // present iff all 2s+2 sums agree
    bool all_distinct = false;
    bool is_magic = false;  // all sums equal AND all entries distinct
    std::optional<StructuralReport> structural;
    std::vector<std::string> failures;  // human-readable findings, deterministic order
};

/// Checks an arbitrary square grid of scalars for the magic property.
/// Accepts any side >= 1, odd or even; throws std::invalid_argument for
/// ragged or empty input.
VerificationReport verify_magic(const std::vector<std::vector<Scalar>>& square);
VerificationReport verify_magic(const MagicSquare& square);

/// Evaluates every structural invariant of the construction on an offset
/// grid (valid or deliberately broken).
StructuralReport verify_structure(const OffsetGrid& grid);

/// True iff the entry multiset is exactly {1, ..., s^2}.
bool is_normal(const MagicSquare& square);

}  // namespace magicsq
