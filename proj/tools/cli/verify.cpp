#include "cli/verify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "quadval/closed_form.hpp"
#include "quadval/oracle.hpp"

namespace quadval::cli {
namespace {

bool is_open(const TreeNode& node) {
  return node.status != NodeStatus::kTerminating;
}

std::string where(unsigned long level, const Int& residue) {
  return "level " + std::to_string(level) + " residue " + residue.get_str();
}

// The node of the tree whose class contains n: the terminating ancestor, or
// the frontier node when n lies on an open path.
const TreeNode& locate(const ValuationTree& tree, const Int& n) {
  const TreeNode* node = &tree.root();
  while (node->children && node->status != NodeStatus::kTerminating) {
    const bool bit = mpz_tstbit(n.get_mpz_t(), node->level) != 0;
    node = &tree.node((*node->children)[bit ? 1 : 0]);
  }
  return *node;
}

Check first_mismatch(const std::string& name, const std::vector<Valuation>& got,
                     const std::vector<Valuation>& want) {
  Check check{.name = name};
  for (std::size_t n = 0; n < got.size(); ++n) {
    if (got[n] != want[n]) {
      check.passed = false;
      check.detail = "counterexample n=" + std::to_string(n) + ": expected " +
                     want[n].to_string() + ", got " + got[n].to_string();
      break;
    }
  }
  return check;
}

void verify_bounded(const QuadraticPoly& f, const Classification& cls,
                    VerifyReport& report) {
  const std::size_t h = report.horizon;
  const auto seq = oracle::valuation_sequence(f, 0, h);
  std::vector<Valuation> predicted;
  predicted.reserve(h);
  if (cls.is_constant()) {
    predicted.assign(h, *constant_valuation(cls));
  } else {
    for (std::size_t n = 0; n < h; ++n) {
      predicted.push_back(closed_form_valuation(cls, Int(static_cast<unsigned long>(n))));
    }
  }
  report.checks.push_back(first_mismatch(
      "closed form matches oracle on [0, " + std::to_string(h) + ")",
      predicted, seq.values));

  const Int& period = *cls.period;
  Check minimal{.name = "empirical period equals " + period.get_str()};
  if (period > Int(static_cast<unsigned long>(h / 2))) {
    minimal.detail = "skipped: horizon below twice the period";
    report.checks.push_back(minimal);
    return;
  }
  const std::size_t p = period.get_ui();
  const auto found = oracle::empirical_period(seq.values);
  if (found != p) {
    minimal.passed = false;
    minimal.detail = found ? "found period " + std::to_string(*found)
                           : "no period found";
  }
  report.checks.push_back(minimal);

  if (p > 1) {
    Check half{.name = "period " + std::to_string(p / 2) + " rejected"};
    if (auto w = oracle::half_period_witness(seq.values, p)) {
      half.detail = "witness n=" + std::to_string(*w);
    } else {
      half.passed = false;
      half.detail = "no witness below " + std::to_string(p / 2);
    }
    report.checks.push_back(half);
  }
}

void verify_unbounded(const QuadraticPoly& f, VerifyReport& report) {
  const std::size_t h = report.horizon;
  const unsigned long depth =
      std::min<unsigned long>(std::bit_width(h) - 1, 20);

  Check laws{.name = "tree laws to depth " + std::to_string(depth)};
  if (auto failure = check_tree_laws(f, depth)) {
    laws.passed = false;
    laws.detail = *failure;
  }
  report.checks.push_back(laws);

  Check roots{.name = "branch residues mod 2^" + std::to_string(depth)};
  for (const Int& r : infinite_branch_residues(f, depth)) {
    if (nu2(f(r)) < Valuation(depth)) {
      roots.passed = false;
      roots.detail = "nu2(f(" + r.get_str() + ")) = " + nu2(f(r)).to_string();
      break;
    }
  }
  report.checks.push_back(roots);

  const auto tree = build_tree(f, depth);
  const auto seq = oracle::valuation_sequence(f, 0, h);
  Check agree{.name = "tree matches oracle on [0, " + std::to_string(h) + ")"};
  for (std::size_t n = 0; n < h && agree.passed; ++n) {
    const TreeNode& node = locate(tree, Int(static_cast<unsigned long>(n)));
    const Valuation v = seq.values[n];
    const bool ok = node.status == NodeStatus::kTerminating
                        ? v == *node.valuation
                        : v >= Valuation(node.level);
    if (!ok) {
      agree.passed = false;
      agree.detail = "counterexample n=" + std::to_string(n) + " at " +
                     where(node.level, node.residue);
    }
  }
  report.checks.push_back(agree);
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

unsigned expected_open_nodes(const Classification& cls, unsigned long level) {
  switch (cls.case_tag) {
    case CaseTag::kCase2Unbounded:
    case CaseTag::kCase3aUnbounded:
      return 1;
    case CaseTag::kCase3bUnbounded:
      return level <= cls.ell() ? 1 : 2;
    case CaseTag::kCase4Unbounded:
      return 2;
    default:
      throw std::domain_error("tree laws apply to unbounded sequences");
  }
}

std::optional<Valuation> expected_terminal_valuation(const Classification& cls,
                                                     unsigned long level) {
  const unsigned long w = cls.even_offset;
  switch (cls.case_tag) {
    case CaseTag::kCase2Unbounded:
    case CaseTag::kCase4Unbounded:
      return Valuation(level - 1) + w;
    case CaseTag::kCase3aUnbounded:
      return Valuation(2 * (level - 1)) + w;
    case CaseTag::kCase3bUnbounded: {
      const unsigned long ell = cls.ell();
      if (level <= ell) return Valuation(2 * (level - 1)) + w;
      if (level == ell + 1) return std::nullopt;
      return Valuation(level - 1 + ell) + w;
    }
    default:
      throw std::domain_error("tree laws apply to unbounded sequences");
  }
}

std::optional<std::string> check_tree_laws(const QuadraticPoly& f,
                                           unsigned long depth) {
  const Classification cls = classify(f);
  if (cls.is_bounded()) {
    throw std::domain_error("tree laws apply to unbounded sequences");
  }
  const auto tree = build_tree(f, depth);
  if (tree.is_finite()) return "tree closed before depth " + std::to_string(depth);
  for (unsigned long i = 1; i <= depth; ++i) {
    unsigned open = 0;
    const auto expected_v = expected_terminal_valuation(cls, i);
    for (const TreeNode* node : tree.level_nodes(i)) {
      if (is_open(*node)) {
        ++open;
        continue;
      }
      if (!expected_v) {
        return "unexpected terminating node at " + where(i, node->residue);
      }
      if (*node->valuation != *expected_v) {
        return "valuation " + node->valuation->to_string() + " at " +
               where(i, node->residue) + ", expected " + expected_v->to_string();
      }
    }
    if (open != expected_open_nodes(cls, i)) {
      return std::to_string(open) + " open nodes at level " +
             std::to_string(i) + ", expected " +
             std::to_string(expected_open_nodes(cls, i));
    }
  }
  const auto frontier = tree.level_nodes(depth);
  const auto capped = std::count_if(
      frontier.begin(), frontier.end(),
      [](const TreeNode* n) { return n->status == NodeStatus::kDepthCapped; });
  if (static_cast<unsigned>(capped) != expected_open_nodes(cls, depth)) {
    return std::to_string(capped) + " frontier nodes, expected " +
           std::to_string(expected_open_nodes(cls, depth));
  }
  return std::nullopt;
}

std::size_t default_horizon(const Classification& cls) {
  if (cls.is_case3c() && cls.ell() <= 18) return 4 * cls.period->get_ui();
  return std::size_t{1} << 12;
}

VerifyReport verify(const QuadraticPoly& f, std::optional<std::size_t> horizon) {
  const Classification cls = classify(f);
  VerifyReport report;
  report.horizon = horizon.value_or(default_horizon(cls));
  if (report.horizon < 4) throw std::invalid_argument("horizon must be >= 4");
  if (cls.is_bounded()) {
    verify_bounded(f, cls, report);
  } else {
    verify_unbounded(f, report);
  }
  return report;
}

}  // namespace quadval::cli
