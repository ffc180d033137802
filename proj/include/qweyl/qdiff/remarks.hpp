#pragma once

#include <string>
#include <vector>

#include "qweyl/qdiff/operators.hpp"

namespace qweyl::qdiff {

struct RemarkItem {
    std::string statement;
    bool expected = true;  // false for displayed forms that are expected to fail
    ActionCheck check;
    bool ok() const { return check.pass == expected; }
};

struct RemarkReport {
    std::vector<RemarkItem> items;
    std::vector<std::string> notes;
    bool all_ok() const;
};

// The almost commutative coordinates xq_m1 = x_m1, xq_0 = u_m1 uinv_1 x_0,
// xq_1 = x_1 and D0q = (u_m1 uinv_1)^-1 D_0 on the three-dimensional
// commutative calculus; sweep over [-d, d]^3.
RemarkReport remark1_transform(int sweep_bound = 6);

// Unsymmetric derivatives part_m1, part_0, part_1, the hatted derivative,
// Lam, and the defect of the approximate conjugation relation.
RemarkReport remark3_unsymmetric(int sweep_bound = 6);

// The operator alphabet used by the remark-3 report (with the Q letters of
// the unsymmetric derivatives and their conjugates).
Calculus remark3_calculus();

}  // namespace qweyl::qdiff
