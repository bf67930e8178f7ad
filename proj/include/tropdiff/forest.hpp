#pragma once

// Rooted labeled forests presenting differential-algebra expressions: leaves
// carry coefficients or variables, sets of siblings multiply, and an
// internal (non-root) vertex applies the differential to the product of its
// children.  Sums are multiset unions of trees, products glue roots.

#include "tropdiff/series.hpp"

#include <variant>
#include <vector>

namespace tropdiff {

// Leaf label: a coefficient or a variable index.
using ForestLabel = std::variant<SemiringValue, unsigned>;

struct TreeChild;

// A vertex together with everything below it.  The vector is kept sorted in
// a canonical order so trees compare structurally.
struct Tree {
    std::vector<TreeChild> kids;

    bool operator<(const Tree& o) const;
    bool operator==(const Tree& o) const;
    // The empty vertex: the multiplicative unit.
    bool is_unit() const { return kids.empty(); }
};

struct TreeChild {
    // Leaf when label holds a value; internal vertex otherwise (sub's
    // product gets the differential applied on the way up).
    std::optional<ForestLabel> label;
    Tree sub;

    bool is_leaf() const { return label.has_value(); }
    bool operator<(const TreeChild& o) const;
    bool operator==(const TreeChild& o) const;
};

struct ForestExpr {
    std::vector<Tree> trees;  // canonically sorted multiset; empty = 0

    bool is_zero() const { return trees.empty(); }
    bool operator==(const ForestExpr& o) const { return trees == o.trees; }
};

ForestExpr forest_zero();
ForestExpr forest_one();
ForestExpr coeff_leaf(const SemiringValue& c);
ForestExpr var_leaf(unsigned index);

// Multiset union.
ForestExpr forest_sum(const ForestExpr& a, const ForestExpr& b);
// Pairwise root gluing, extended distributively.
ForestExpr forest_mul(const ForestExpr& a, const ForestExpr& b);
// Every tree gains a new root with the old root as its sole child.
ForestExpr forest_d(const ForestExpr& a);
ForestExpr forest_d(const ForestExpr& a, unsigned times);

// Rewrites to a fixed point: zero-labeled trees are absorbed, unit leaves
// deleted, sibling coefficient leaves merged by (*), a coefficient leaf
// under a univalent non-root parent differentiates to zero (labels denote
// constants), and trees differing only in their root coefficient leaf merge
// by (+).
ForestExpr normalize(const ForestExpr& a);

// Evaluation target: a series semiring with a chosen differential, plus one
// series per variable.
struct Assignment {
    Semiring coeff_tag;
    SeriesDifferential differential;
    std::vector<TruncSeries> values;
};

TruncSeries eval_forest(const ForestExpr& a, const Assignment& asg);

std::string to_string(const ForestExpr& a);

}  // namespace tropdiff
