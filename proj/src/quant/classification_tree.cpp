#include "pdfa/quant/classification_tree.hpp"

#include <sstream>

namespace pdfa::quant {

ClassificationTree::ClassificationTree(std::uint32_t kappa) : kappa_(kappa) {
    if (kappa < 1) throw InputError("kappa must be at least 1");
    nodes_.push_back(TreeNode{});
}

std::optional<NodeId> ClassificationTree::child(NodeId inner, const QuantVector& arc) const {
    for (const auto& [qv, id] : node(inner).children) {
        if (qv == arc) return id;
    }
    return std::nullopt;
}

NodeId ClassificationTree::new_node(TreeNode n) {
    nodes_.push_back(std::move(n));
    return static_cast<NodeId>(nodes_.size() - 1);
}

void ClassificationTree::attach(NodeId parent, QuantVector arc, NodeId c) {
    nodes_[c].parent = parent;
    nodes_[c].depth = nodes_[parent].depth + 1;
    nodes_[parent].children.emplace_back(std::move(arc), c);
}

NodeId ClassificationTree::add_leaf(NodeId parent, QuantVector arc, Word access, Distribution dist) {
    if (node(parent).leaf) throw ContractViolation("cannot hang a leaf below a leaf");
    if (child(parent, arc)) throw ContractViolation("arc " + to_string(arc) + " is already taken");
    if (by_access_.count(access)) throw ContractViolation("access string is already a leaf");
    const NodeId id = new_node(TreeNode{true, access, std::move(dist), {}, kNoNode, 0});
    attach(parent, std::move(arc), id);
    leaves_.push_back(id);
    by_access_.emplace(std::move(access), id);
    return id;
}

NodeId ClassificationTree::split_leaf(NodeId leaf, Word dstring, QuantVector old_arc, QuantVector new_arc,
                                      Word access, Distribution dist) {
    if (!node(leaf).leaf) throw ContractViolation("split target is not a leaf");
    if (old_arc == new_arc) throw ContractViolation("split arcs must differ");
    if (by_access_.count(access)) throw ContractViolation("access string is already a leaf");

    const NodeId parent = nodes_[leaf].parent;
    const NodeId inner = new_node(TreeNode{false, std::move(dstring), {}, {}, parent, nodes_[leaf].depth});
    for (auto& [qv, c] : nodes_[parent].children) {
        if (c == leaf) c = inner;
    }
    nodes_[leaf].children.clear();
    attach(inner, std::move(old_arc), leaf);

    const NodeId fresh = new_node(TreeNode{true, access, std::move(dist), {}, kNoNode, 0});
    attach(inner, std::move(new_arc), fresh);
    leaves_.push_back(fresh);
    by_access_.emplace(std::move(access), fresh);
    return fresh;
}

std::optional<NodeId> ClassificationTree::find_leaf(const Word& access) const {
    auto it = by_access_.find(access);
    if (it == by_access_.end()) return std::nullopt;
    return it->second;
}

std::vector<Word> ClassificationTree::access_strings() const {
    std::vector<Word> out;
    out.reserve(leaves_.size());
    for (NodeId l : leaves_) out.push_back(nodes_[l].label);
    return out;
}

std::vector<Word> ClassificationTree::distinguishing_strings() const {
    std::vector<Word> out;
    for (const auto& n : nodes_) {
        if (!n.leaf) out.push_back(n.label);
    }
    return out;
}

NodeId ClassificationTree::lca(NodeId a, NodeId b) const {
    if (a >= nodes_.size() || b >= nodes_.size() || !nodes_[a].leaf || !nodes_[b].leaf)
        throw InputError("lca needs two leaves of the tree");
    if (a == b) throw InputError("lca needs two distinct leaves");
    while (nodes_[a].depth > nodes_[b].depth) a = nodes_[a].parent;
    while (nodes_[b].depth > nodes_[a].depth) b = nodes_[b].parent;
    while (a != b) {
        a = nodes_[a].parent;
        b = nodes_[b].parent;
    }
    return a;
}

const Word& ClassificationTree::lca(const Word& a, const Word& b) const {
    auto la = find_leaf(a);
    auto lb = find_leaf(b);
    if (!la || !lb) throw InputError("lca: unknown access string");
    return nodes_[lca(*la, *lb)].label;
}

std::string ClassificationTree::dump(const Alphabet& alphabet) const {
    std::ostringstream os;
    auto walk = [&](auto&& self, NodeId id, std::size_t indent) -> void {
        const TreeNode& n = nodes_[id];
        const std::string pad(indent * 2, ' ');
        if (n.leaf) {
            os << pad << "A " << alphabet.format(n.label) << ' ' << to_string(n.dist) << '\n';
            return;
        }
        os << pad << "D " << alphabet.format(n.label) << '\n';
        for (const auto& [qv, c] : n.children) {
            os << pad << "  [" << to_string(qv) << "]\n";
            self(self, c, indent + 2);
        }
    };
    walk(walk, root(), 0);
    return os.str();
}

}  // namespace pdfa::quant
