#ifndef QUADVAL_TREE_HPP
#define QUADVAL_TREE_HPP

// 2-adic valuation trees. The node at level i with residue r stands for the
// class {2^i q + r : q >= 0}; its children are (i+1, r) and (i+1, r + 2^i).
// A node is terminating when nu2(f) is constant on its class.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "quadval/classifier.hpp"
#include "quadval/core_arith.hpp"
#include "quadval/poly.hpp"

namespace quadval {

enum class NodeStatus {
  kTerminating,
  kNonTerminating,
  kDepthCapped,
  /// f(r) == 0: the class contains an integer root at its representative r.
  kRootNode,
};

std::string_view status_name(NodeStatus status);

struct NodeVerdict {
  NodeStatus status;
  /// The constant valuation for kTerminating, infinity for kRootNode,
  /// unset otherwise.
  std::optional<Valuation> valuation;
};

/// Exact termination test for the class 2^i q + r. Writes
/// g(q) = f(2^i q + r) = A q^2 + B q + C and strips the common power 2^w of
/// (A, B, C); the class terminates with valuation w iff the stripped
/// quadratic is constantly odd, i.e. its constant term is odd and the sum of
/// its other two coefficients is even.
/// Throws std::invalid_argument unless 0 <= r < 2^i.
NodeVerdict node_status(const QuadraticPoly& f, unsigned long level,
                        const Int& residue);

struct TreeNode {
  unsigned long level = 0;
  Int residue;
  NodeStatus status = NodeStatus::kNonTerminating;
  std::optional<Valuation> valuation;
  /// Indices into ValuationTree::nodes(): {r, r + 2^level}.
  std::optional<std::array<std::size_t, 2>> children;
};

inline constexpr unsigned long kDefaultDepthCap = 32;

class ValuationTree {
 public:
  const QuadraticPoly& poly() const { return poly_; }
  const TreeNode& root() const { return nodes_.front(); }
  const TreeNode& node(std::size_t index) const { return nodes_.at(index); }
  /// Breadth-first order; index 0 is the root.
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  unsigned long depth_cap() const { return depth_cap_; }

  /// True when no node hit the depth cap.
  bool is_finite() const { return !capped_; }
  /// Deepest level reached; for finite trees this is the level count.
  unsigned long levels() const { return levels_; }

  /// Nodes at one level, in residue order.
  std::vector<const TreeNode*> level_nodes(unsigned long level) const;

  /// Terminating nodes of a finite tree spread over residues mod
  /// 2^levels(). Throws std::domain_error for capped trees or root nodes.
  std::vector<Valuation> flatten() const;

 private:
  friend ValuationTree build_tree(const QuadraticPoly& f,
                                  unsigned long depth_cap);
  explicit ValuationTree(QuadraticPoly f) : poly_(std::move(f)) {}

  QuadraticPoly poly_;
  std::vector<TreeNode> nodes_;
  unsigned long depth_cap_ = 0;
  unsigned long levels_ = 0;
  bool capped_ = false;
};

/// Breadth-first expansion from the root. Non-terminating (and root) nodes
/// split until depth_cap, where they are marked kDepthCapped.
/// Throws std::invalid_argument when depth_cap == 0.
ValuationTree build_tree(const QuadraticPoly& f,
                         unsigned long depth_cap = kDefaultDepthCap);

/// One residue mod 2^bits per 2-adic root of f, ascending. Roots sharing
/// their low `bits` bits contribute the same residue twice.
/// Throws std::domain_error("no infinite branches") for bounded f.
std::vector<Int> infinite_branch_residues(const QuadraticPoly& f,
                                          unsigned long bits);

/// Whether a finite tree with ell >= 2 levels has its non-terminating node
/// at residue 2^i - 1 on every level 1 <= i < ell.
/// Throws std::domain_error for capped trees.
bool is_type_ell_1(const ValuationTree& tree);

}  // namespace quadval

#endif  // QUADVAL_TREE_HPP
