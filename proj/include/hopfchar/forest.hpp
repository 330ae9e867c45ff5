#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hopfchar/word.hpp"

namespace hopfchar {

class Forest;

/// Non-planar rooted tree with positive-integer node decorations, kept in
/// canonical form: children are sorted under the tree order below, so two
/// isomorphic decorated trees compare equal.
class Tree {
  public:
    Tree(Letter root, std::vector<Tree> children = {});

    Letter root() const { return root_; }
    const std::vector<Tree>& children() const { return children_; }
    std::int64_t norm() const { return norm_; }
    int node_count() const { return nodes_; }

    /// Total order: (norm, node count, root decoration, children lex).
    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);
    friend bool operator==(const Tree& a, const Tree& b);

  private:
    Letter root_;
    std::vector<Tree> children_;
    std::int64_t norm_;
    int nodes_;
};

/// Multiset of trees, stored sorted; the empty forest is the unit of
/// concatenation.
class Forest {
  public:
    Forest() = default;
    explicit Forest(std::vector<Tree> trees);
    explicit Forest(Tree t) : Forest(std::vector<Tree>{std::move(t)}) {}

    bool empty() const { return trees_.empty(); }
    const std::vector<Tree>& trees() const { return trees_; }
    std::int64_t norm() const;
    int node_count() const;

    friend std::strong_ordering operator<=>(const Forest&, const Forest&) = default;
    friend bool operator==(const Forest&, const Forest&) = default;

  private:
    std::vector<Tree> trees_;  // sorted
};

/// Grafts the forest under a new common root.
Tree bplus(Letter decoration, const Forest& f);

/// Concatenation of forests: multiset union, re-canonicalized.
Forest forest_product(const Forest& f, const Forest& g);

/// Re-sorts into canonical form; idempotent. Construction already
/// canonicalizes, so this is the identity on well-formed values.
Forest canonicalize(const Forest& f);

/// Trees space-separated; a tree is INT or INT(child,child,...).
/// Rejects decorations < 1, unbalanced parentheses and empty child lists.
Forest parse_forest(std::string_view text);

std::string tree_str(const Tree& t);
/// "1(2,3) 2"; the empty forest renders as "-".
std::string forest_str(const Forest& f);

/// All canonical forests with norm <= max_norm (decorations are bounded by
/// the norm). Optional cap on the node count. The empty forest comes first.
std::vector<Forest> forests_up_to_norm(int max_norm, int max_nodes = -1);

}  // namespace hopfchar
