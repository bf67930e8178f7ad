#include "tropdiff/forest.hpp"

#include <algorithm>

namespace tropdiff {

namespace {

int cmp_rat(const Rat& a, const Rat& b) {
    return cmp(a, b);
}

// Arbitrary but fixed structural order, used only for canonical sorting.
int cmp_value(const SemiringValue& a, const SemiringValue& b) {
    if (a.tag() != b.tag()) return static_cast<int>(a.tag()) < static_cast<int>(b.tag()) ? -1 : 1;
    switch (a.tag()) {
        case Semiring::boolean:
            return static_cast<int>(a.as_bool().bit) - static_cast<int>(b.as_bool().bit);
        case Semiring::trop_exp: {
            const auto& x = a.as_trop_exp();
            const auto& y = b.as_trop_exp();
            if (x.is_zero() || y.is_zero())
                return static_cast<int>(y.is_zero()) - static_cast<int>(x.is_zero());
            return cmp_rat(*x.order, *y.order);
        }
        case Semiring::pos_rat:
            return cmp_rat(a.as_pos_rat().value, b.as_pos_rat().value);
        case Semiring::rank2: {
            const auto& x = a.as_rank2();
            const auto& y = b.as_rank2();
            if (x.is_zero() || y.is_zero())
                return static_cast<int>(y.is_zero()) - static_cast<int>(x.is_zero());
            if (int c = cmp_rat(*x.first.order, *y.first.order)) return c;
            return cmp_rat(x.second.value, y.second.value);
        }
    }
    return 0;
}

int cmp_label(const ForestLabel& a, const ForestLabel& b) {
    if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
    if (a.index() == 0) return cmp_value(std::get<0>(a), std::get<0>(b));
    unsigned x = std::get<1>(a), y = std::get<1>(b);
    return x < y ? -1 : (x > y ? 1 : 0);
}

int cmp_tree(const Tree& a, const Tree& b);

int cmp_child(const TreeChild& a, const TreeChild& b) {
    if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? -1 : 1;
    if (a.is_leaf()) return cmp_label(*a.label, *b.label);
    return cmp_tree(a.sub, b.sub);
}

int cmp_tree(const Tree& a, const Tree& b) {
    if (a.kids.size() != b.kids.size()) return a.kids.size() < b.kids.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (int c = cmp_child(a.kids[i], b.kids[i])) return c;
    return 0;
}

void sort_kids(std::vector<TreeChild>& kids) {
    std::sort(kids.begin(), kids.end(),
              [](const TreeChild& x, const TreeChild& y) { return cmp_child(x, y) < 0; });
}

void sort_trees(std::vector<Tree>& trees) {
    std::sort(trees.begin(), trees.end(),
              [](const Tree& x, const Tree& y) { return cmp_tree(x, y) < 0; });
}

TreeChild leaf_child(ForestLabel label) {
    return TreeChild{std::move(label), Tree{}};
}

TreeChild internal_child(Tree sub) {
    return TreeChild{std::nullopt, std::move(sub)};
}

}  // namespace

bool Tree::operator<(const Tree& o) const { return cmp_tree(*this, o) < 0; }
bool Tree::operator==(const Tree& o) const { return cmp_tree(*this, o) == 0; }
bool TreeChild::operator<(const TreeChild& o) const { return cmp_child(*this, o) < 0; }
bool TreeChild::operator==(const TreeChild& o) const { return cmp_child(*this, o) == 0; }

ForestExpr forest_zero() { return ForestExpr{}; }

ForestExpr forest_one() { return ForestExpr{{Tree{}}}; }

ForestExpr coeff_leaf(const SemiringValue& c) {
    return ForestExpr{{Tree{{leaf_child(ForestLabel{c})}}}};
}

ForestExpr var_leaf(unsigned index) {
    return ForestExpr{{Tree{{leaf_child(ForestLabel{index})}}}};
}

ForestExpr forest_sum(const ForestExpr& a, const ForestExpr& b) {
    ForestExpr out = a;
    out.trees.insert(out.trees.end(), b.trees.begin(), b.trees.end());
    sort_trees(out.trees);
    return out;
}

ForestExpr forest_mul(const ForestExpr& a, const ForestExpr& b) {
    ForestExpr out;
    for (const Tree& ta : a.trees) {
        for (const Tree& tb : b.trees) {
            Tree glued;
            glued.kids = ta.kids;
            glued.kids.insert(glued.kids.end(), tb.kids.begin(), tb.kids.end());
            sort_kids(glued.kids);
            out.trees.push_back(std::move(glued));
        }
    }
    sort_trees(out.trees);
    return out;
}

ForestExpr forest_d(const ForestExpr& a) {
    ForestExpr out;
    for (const Tree& t : a.trees) out.trees.push_back(Tree{{internal_child(t)}});
    sort_trees(out.trees);
    return out;
}

ForestExpr forest_d(const ForestExpr& a, unsigned times) {
    ForestExpr out = a;
    for (unsigned i = 0; i < times; ++i) out = forest_d(out);
    return out;
}

namespace {

// Rewrites the children of one vertex, bottom-up.  Returns nullopt when the
// product at this vertex is identically zero (which absorbs the whole tree:
// zero annihilates products and differentials alike).
std::optional<std::vector<TreeChild>> normalize_vertex(const std::vector<TreeChild>& kids) {
    std::vector<TreeChild> out;
    std::optional<SemiringValue> coeff;
    for (const TreeChild& kid : kids) {
        if (kid.is_leaf()) {
            if (std::holds_alternative<SemiringValue>(*kid.label)) {
                const auto& c = std::get<SemiringValue>(*kid.label);
                if (c.is_zero()) return std::nullopt;
                coeff = coeff ? mul(*coeff, c) : c;
            } else {
                out.push_back(kid);
            }
            continue;
        }
        auto sub = normalize_vertex(kid.sub.kids);
        if (!sub) return std::nullopt;
        // d of a constant vertex vanishes: the subvertex reduced to a bare
        // coefficient (or to the empty product 1).
        if (sub->empty()) return std::nullopt;
        if (sub->size() == 1 && (*sub)[0].is_leaf() &&
            std::holds_alternative<SemiringValue>(*(*sub)[0].label))
            return std::nullopt;
        out.push_back(internal_child(Tree{std::move(*sub)}));
    }
    if (coeff && !coeff->is_one()) out.push_back(leaf_child(ForestLabel{*coeff}));
    sort_kids(out);
    return out;
}

// Splits a normalized vertex into its coefficient leaf (if any) and the rest.
std::pair<std::optional<SemiringValue>, std::vector<TreeChild>> split_root_coeff(
    const std::vector<TreeChild>& kids) {
    std::optional<SemiringValue> coeff;
    std::vector<TreeChild> rest;
    for (const TreeChild& kid : kids) {
        if (kid.is_leaf() && std::holds_alternative<SemiringValue>(*kid.label))
            coeff = std::get<SemiringValue>(*kid.label);
        else
            rest.push_back(kid);
    }
    return {coeff, rest};
}

ForestExpr normalize_once(const ForestExpr& a) {
    // Coefficient-merged trees keyed by their non-coefficient root children.
    std::vector<std::pair<std::vector<TreeChild>, std::optional<SemiringValue>>> groups;
    for (const Tree& t : a.trees) {
        auto kids = normalize_vertex(t.kids);
        if (!kids) continue;
        auto [coeff, rest] = split_root_coeff(*kids);
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == rest; });
        if (it == groups.end()) {
            groups.emplace_back(std::move(rest), coeff);
        } else if (coeff || it->second) {
            SemiringValue lhs = it->second ? *it->second
                                           : SemiringValue::one(coeff->tag());
            SemiringValue rhs = coeff ? *coeff : SemiringValue::one(lhs.tag());
            it->second = add(lhs, rhs);
        }
    }
    ForestExpr out;
    for (auto& [rest, coeff] : groups) {
        Tree t;
        t.kids = std::move(rest);
        if (coeff && !coeff->is_one()) t.kids.push_back(leaf_child(ForestLabel{*coeff}));
        sort_kids(t.kids);
        out.trees.push_back(std::move(t));
    }
    sort_trees(out.trees);
    return out;
}

}  // namespace

ForestExpr normalize(const ForestExpr& a) {
    ForestExpr cur = a;
    for (int step = 0; step < 64; ++step) {
        ForestExpr next = normalize_once(cur);
        if (next == cur) return next;
        cur = std::move(next);
    }
    return cur;
}

namespace {

TruncSeries eval_vertex(const std::vector<TreeChild>& kids, const Assignment& asg) {
    TruncSeries acc = constant_series(SemiringValue::one(asg.coeff_tag));
    for (const TreeChild& kid : kids) {
        TruncSeries factor(asg.coeff_tag, std::nullopt);
        if (kid.is_leaf()) {
            if (std::holds_alternative<SemiringValue>(*kid.label)) {
                factor = constant_series(std::get<SemiringValue>(*kid.label));
            } else {
                unsigned index = std::get<unsigned>(*kid.label);
                if (index >= asg.values.size())
                    throw EngineError("forest references unassigned variable x" +
                                      std::to_string(index + 1));
                factor = asg.values[index];
            }
        } else {
            factor = differentiate(eval_vertex(kid.sub.kids, asg), asg.differential);
        }
        acc = series_mul(acc, factor);
    }
    return acc;
}

}  // namespace

TruncSeries eval_forest(const ForestExpr& a, const Assignment& asg) {
    TruncSeries acc(asg.coeff_tag, std::nullopt);
    for (const Tree& t : a.trees) acc = series_add(acc, eval_vertex(t.kids, asg));
    return acc;
}

namespace {

std::string tree_to_string(const Tree& t);

std::string child_to_string(const TreeChild& kid) {
    if (kid.is_leaf()) {
        if (std::holds_alternative<SemiringValue>(*kid.label))
            return to_string(std::get<SemiringValue>(*kid.label));
        return "x" + std::to_string(std::get<unsigned>(*kid.label) + 1);
    }
    return "d(" + tree_to_string(kid.sub) + ")";
}

std::string tree_to_string(const Tree& t) {
    if (t.is_unit()) return "1";
    std::string out;
    for (const TreeChild& kid : t.kids) {
        if (!out.empty()) out += " * ";
        out += child_to_string(kid);
    }
    return out;
}

}  // namespace

std::string to_string(const ForestExpr& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const Tree& t : a.trees) {
        if (!out.empty()) out += " + ";
        out += tree_to_string(t);
    }
    return out;
}

}  // namespace tropdiff
