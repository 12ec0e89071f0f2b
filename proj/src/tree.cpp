#include "quadval/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace quadval {

std::string_view status_name(NodeStatus status) {
  switch (status) {
    case NodeStatus::kTerminating: return "terminating";
    case NodeStatus::kNonTerminating: return "non_terminating";
    case NodeStatus::kDepthCapped: return "depth_capped";
    case NodeStatus::kRootNode: return "root";
  }
  return "?";
}

NodeVerdict node_status(const QuadraticPoly& f, unsigned long level,
                        const Int& residue) {
  if (residue < 0 || residue >= pow2(level)) {
    throw std::invalid_argument("node_status: residue " + residue.get_str() +
                                " out of range for level " +
                                std::to_string(level));
  }
  const Int scale = pow2(level);
  const Int big_a = scale * scale * f.a();
  const Int big_b = scale * (2 * f.a() * residue + f.b());
  const Int big_c = f(residue);
  if (big_c == 0) return {NodeStatus::kRootNode, Valuation::infinite()};

  const auto w = std::min({nu2(big_a), nu2(big_b), nu2(big_c)}).value();
  auto strip = [w](const Int& x) {
    Int out;
    mpz_tdiv_q_2exp(out.get_mpz_t(), x.get_mpz_t(), w);
    return out;
  };
  const Int c0 = strip(big_c);
  const Int ab0 = strip(big_a) + strip(big_b);
  if (mpz_odd_p(c0.get_mpz_t()) && mpz_even_p(ab0.get_mpz_t())) {
    return {NodeStatus::kTerminating, Valuation(w)};
  }
  return {NodeStatus::kNonTerminating, std::nullopt};
}

ValuationTree build_tree(const QuadraticPoly& f, unsigned long depth_cap) {
  if (depth_cap == 0) throw std::invalid_argument("depth cap must be >= 1");
  ValuationTree tree(f);
  tree.depth_cap_ = depth_cap;
  auto& nodes = tree.nodes_;
  nodes.push_back(TreeNode{.level = 0, .residue = 0});

  // Breadth-first: children are appended behind the node being expanded.
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const unsigned long level = nodes[k].level;
    const Int residue = nodes[k].residue;
    const NodeVerdict verdict = node_status(f, level, residue);
    tree.levels_ = std::max(tree.levels_, level);
    nodes[k].status = verdict.status;
    nodes[k].valuation = verdict.valuation;
    if (verdict.status == NodeStatus::kTerminating) continue;
    if (level == depth_cap) {
      nodes[k].status = NodeStatus::kDepthCapped;
      nodes[k].valuation.reset();
      tree.capped_ = true;
      continue;
    }
    const std::size_t left = nodes.size();
    nodes.push_back(TreeNode{.level = level + 1, .residue = residue});
    nodes.push_back(
        TreeNode{.level = level + 1, .residue = residue + pow2(level)});
    nodes[k].children = std::array<std::size_t, 2>{left, left + 1};
  }
  return tree;
}

std::vector<const TreeNode*> ValuationTree::level_nodes(
    unsigned long level) const {
  std::vector<const TreeNode*> out;
  for (const TreeNode& n : nodes_) {
    if (n.level == level) out.push_back(&n);
  }
  std::sort(out.begin(), out.end(), [](const TreeNode* x, const TreeNode* y) {
    return x->residue < y->residue;
  });
  return out;
}

std::vector<Valuation> ValuationTree::flatten() const {
  if (capped_) throw std::domain_error("tree is not finite");
  if (levels_ >= 8 * sizeof(std::size_t) - 1) {
    throw std::length_error("tree too deep to flatten");
  }
  const std::size_t size = std::size_t{1} << levels_;
  std::vector<Valuation> out(size);
  std::vector<bool> seen(size, false);
  for (const TreeNode& n : nodes_) {
    if (n.status == NodeStatus::kRootNode) {
      throw std::domain_error("tree contains an integer root");
    }
    if (n.status != NodeStatus::kTerminating) continue;
    const std::size_t stride = std::size_t{1} << n.level;
    for (std::size_t r = mpz_get_ui(n.residue.get_mpz_t()); r < size;
         r += stride) {
      out[r] = *n.valuation;
      seen[r] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::logic_error("terminating nodes do not cover every residue");
  }
  return out;
}

std::vector<Int> infinite_branch_residues(const QuadraticPoly& f,
                                          unsigned long bits) {
  const Classification cls = classify(f);
  if (cls.is_bounded()) throw std::domain_error("no infinite branches");
  const ValuationTree tree = build_tree(f, bits);
  std::vector<Int> out;
  for (const TreeNode* n : tree.level_nodes(bits)) {
    if (n->status == NodeStatus::kDepthCapped) out.push_back(n->residue);
  }
  // Both roots of a case-3(b) quadratic share their low bits until the level
  // where the discriminant's power of two runs out.
  if (out.size() == 1 && cls.infinite_branches == 2) out.push_back(out[0]);
  if (out.size() != cls.infinite_branches) {
    throw std::logic_error("branch count " + std::to_string(out.size()) +
                           " disagrees with the classification");
  }
  return out;
}

bool is_type_ell_1(const ValuationTree& tree) {
  if (!tree.is_finite()) throw std::domain_error("tree is not finite");
  const unsigned long ell = tree.levels();
  if (ell < 2) return false;
  for (unsigned long i = 1; i < ell; ++i) {
    std::vector<const TreeNode*> open;
    for (const TreeNode* n : tree.level_nodes(i)) {
      if (n->status != NodeStatus::kTerminating) open.push_back(n);
    }
    if (open.size() != 1 || open.front()->residue != pow2(i) - 1) return false;
  }
  return true;
}

}  // namespace quadval
