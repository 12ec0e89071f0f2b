#ifndef QUADVAL_CLI_VERIFY_HPP
#define QUADVAL_CLI_VERIFY_HPP

// Cross-checks of the closed form and the tree against the brute-force
// oracle, and the structural laws of unbounded valuation trees.
//
// Tree levels count from the root at level 0, so the class 2^i q + r lives
// at level i. With offset w from even reduction, a terminating node at
// level i >= 1 of an unbounded tree has valuation
//
//   case 2, case 4   i - 1 + w
//   case 3(a)        2(i - 1) + w
//   case 3(b)        2(i - 1) + w for i <= ell, none at ell + 1,
//                    i - 1 + ell + w beyond
//
// and the number of open nodes at level i >= 1 is 1 (cases 2, 3(a)),
// 2 (case 4), or 1 up to level ell and 2 beyond (case 3(b)).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quadval/classifier.hpp"
#include "quadval/poly.hpp"
#include "quadval/tree.hpp"

namespace quadval::cli {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::size_t horizon = 0;
  std::vector<Check> checks;
  bool passed() const;
};

/// Open-node count the laws predict at level i >= 1 of an unbounded tree.
unsigned expected_open_nodes(const Classification& cls, unsigned long level);

/// Valuation the laws predict for a terminating node at level i >= 1 of an
/// unbounded tree; nullopt when no terminating node may appear there.
std::optional<Valuation> expected_terminal_valuation(const Classification& cls,
                                                     unsigned long level);

/// Checks open-node counts, terminal valuations and the frontier of a tree
/// built to `depth`. Returns a description of the first violation, or
/// nullopt. Throws std::domain_error for bounded f.
std::optional<std::string> check_tree_laws(const QuadraticPoly& f,
                                           unsigned long depth);

/// 4 * period for case 3(c) with ell <= 18, otherwise 2^12.
std::size_t default_horizon(const Classification& cls);

/// Bounded f: closed form against the oracle on [0, horizon), empirical
/// period and its minimality. Unbounded f: tree laws to depth
/// min(floor(log2 horizon), 20), branch residues, and the tree against the
/// oracle on [0, horizon).
VerifyReport verify(const QuadraticPoly& f,
                    std::optional<std::size_t> horizon = std::nullopt);

}  // namespace quadval::cli

#endif  // QUADVAL_CLI_VERIFY_HPP
