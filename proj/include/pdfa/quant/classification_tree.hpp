#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pdfa/alphabet.hpp"
#include "pdfa/distribution.hpp"
#include "pdfa/quantize.hpp"

namespace pdfa::quant {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

struct TreeNode {
    bool leaf = false;
    /// Distinguishing string of an inner node, access string of a leaf.
    Word label;
    /// Leaf only: MQ answer for the access string.
    Distribution dist;
    /// Inner only, in insertion order.
    std::vector<std::pair<QuantVector, NodeId>> children;
    NodeId parent = kNoNode;
    std::uint32_t depth = 0;
};

/// n-ary classification tree. Nodes live in an arena and keep their ids for
/// the lifetime of the tree; splitting a leaf moves the leaf one level down
/// instead of replacing it, so a leaf id always names the same access string.
class ClassificationTree {
public:
    /// A tree holding just the root, an inner node labelled λ.
    explicit ClassificationTree(std::uint32_t kappa);

    std::uint32_t kappa() const noexcept { return kappa_; }
    NodeId root() const noexcept { return 0; }
    const TreeNode& node(NodeId id) const { return nodes_.at(id); }

    std::optional<NodeId> child(NodeId inner, const QuantVector& arc) const;

    /// New leaf under `parent` along `arc`. Throws ContractViolation when the
    /// arc is taken, `parent` is a leaf, or the access string is already known.
    NodeId add_leaf(NodeId parent, QuantVector arc, Word access, Distribution dist);

    /// Puts an inner node labelled `dstring` where `leaf` was; the old leaf
    /// hangs below it on `old_arc` and a new leaf for `access` on `new_arc`.
    /// Returns the new leaf. The arcs must differ.
    NodeId split_leaf(NodeId leaf, Word dstring, QuantVector old_arc, QuantVector new_arc, Word access,
                      Distribution dist);

    std::optional<NodeId> find_leaf(const Word& access) const;
    /// Leaves in the order they were created.
    const std::vector<NodeId>& leaves() const noexcept { return leaves_; }
    std::vector<Word> access_strings() const;
    std::vector<Word> distinguishing_strings() const;

    /// Deepest inner node above both leaves. Throws InputError for unknown
    /// or identical leaves.
    NodeId lca(NodeId a, NodeId b) const;
    /// Distinguishing string of lca() on two access strings.
    const Word& lca(const Word& a, const Word& b) const;

    std::size_t leaf_count() const noexcept { return leaves_.size(); }
    std::size_t node_count() const noexcept { return nodes_.size(); }

    /// Indented text: "D <dstring>", "[<QuantVector>]", "A <astring> <dist>".
    std::string dump(const Alphabet& alphabet) const;

private:
    NodeId new_node(TreeNode n);
    void attach(NodeId parent, QuantVector arc, NodeId child);

    std::uint32_t kappa_;
    std::vector<TreeNode> nodes_;
    std::vector<NodeId> leaves_;
    std::unordered_map<Word, NodeId, WordHash> by_access_;
};

}  // namespace pdfa::quant
