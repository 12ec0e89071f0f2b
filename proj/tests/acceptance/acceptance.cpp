// Acceptance suite: one PASS/FAIL line per criterion, with wall time against
// the budget. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.hpp"
#include "cli/verify.hpp"
#include "quadval/classifier.hpp"
#include "quadval/closed_form.hpp"
#include "quadval/operators.hpp"
#include "quadval/oracle.hpp"
#include "quadval/tree.hpp"
#include "support/generators.hpp"
#include "support/golden.hpp"

namespace quadval {
namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

constexpr std::size_t kUniformCount = 500;

template <typename T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// 500 uniform draws filtered to case 3(c), followed by 10 quadratics for
// each ell in [2, 14]; uniform draws rarely have ell above 5.
const std::vector<QuadraticPoly>& case3c_suite() {
  static const std::vector<QuadraticPoly> suite = [] {
    testing::PolyGenerator gen(20240301);
    auto polys = gen.case3c(kUniformCount);
    for (unsigned long ell = 2; ell <= 14; ++ell) {
      for (int k = 0; k < 10; ++k) polys.push_back(gen.case3c_with_ell(ell));
    }
    return polys;
  }();
  return suite;
}

Outcome golden_tables() {
  Outcome out;
  std::size_t rows = 0;
  for (const auto* fig : golden::kAllFigures) {
    std::ostringstream stdout_text, stderr_text;
    const int code = cli::run({"seq", "-a", std::to_string(fig->a), "-b",
                               std::to_string(fig->b), "-c", std::to_string(fig->c),
                               "--count", std::to_string(fig->rows.size())},
                              stdout_text, stderr_text);
    if (code != 0) out.fail(std::string(fig->name) + ": exit " + std::to_string(code));
    std::string expected = "n,value,valuation\n";
    for (const auto& row : fig->rows) {
      expected += std::to_string(row.n) + "," + std::to_string(row.value) + "," +
                  std::to_string(row.valuation) + "\n";
    }
    if (stdout_text.str() != expected) out.fail(std::string(fig->name) + " differs");
    rows += fig->rows.size();
  }
  if (out.passed) out.detail = std::to_string(rows) + " rows exact";
  return out;
}

Outcome classification() {
  struct Expect {
    long a, b, c;
    CaseTag tag;
    unsigned branches;
    unsigned long ell;
    unsigned m;
    long period;
  };
  const std::vector<Expect> expected{
      {4, 13, -25, CaseTag::kCase2Unbounded, 1, 0, 0, 0},
      {13, 12, -28, CaseTag::kCase3bUnbounded, 2, 3, 1, 0},
      {15, 1142, 25559, CaseTag::kCase3cBounded, 0, 7, 2, 128},
      {5, 106, 1125, CaseTag::kCase3cBounded, 0, 5, 5, 32},
  };
  Outcome out;
  std::string labels;
  for (const auto& e : expected) {
    const QuadraticPoly f(e.a, e.b, e.c);
    const auto cls = classify(f);
    bool ok = cls.case_tag == e.tag && cls.infinite_branches == e.branches;
    if (e.tag == CaseTag::kCase3cBounded) {
      ok = ok && cls.ell() == e.ell && cls.disc->m == e.m && *cls.period == e.period;
    } else {
      ok = ok && !cls.period;
    }
    if (!ok) out.fail(str(f) + " classified as " + std::string(case_name(cls.case_tag)));
    labels += (labels.empty() ? "" : "; ") + std::string(case_name(cls.case_tag));
  }
  if (out.passed) out.detail = labels;
  return out;
}

Outcome closed_form_and_minimality(Outcome& minimality) {
  Outcome out;
  std::size_t checked = 0;
  unsigned long max_ell = 0;
  for (const auto& f : case3c_suite()) {
    const auto cls = classify(f);
    const unsigned long ell = cls.ell();
    max_ell = std::max(max_ell, ell);
    const std::size_t period = std::size_t{1} << ell;
    const auto seq = oracle::valuation_sequence(f, 0, 4 * period);
    for (std::size_t n = 0; n < seq.values.size(); ++n) {
      if (closed_form_valuation(cls, Int(static_cast<unsigned long>(n))) !=
          seq.values[n]) {
        out.fail(str(f) + " at n=" + std::to_string(n));
        break;
      }
      ++checked;
    }
    if (oracle::empirical_period(seq.values) != period) {
      minimality.fail(str(f) + ": empirical period is not 2^" + std::to_string(ell));
    }
    const auto witness = oracle::half_period_witness(seq.values, period);
    if (ell > 0 && (!witness || *witness >= period / 2)) {
      minimality.fail(str(f) + ": no witness against 2^" + std::to_string(ell - 1));
    }
  }
  if (out.passed) {
    out.detail = std::to_string(kUniformCount) + " uniform + " +
                 std::to_string(case3c_suite().size() - kUniformCount) +
                 " stratified polynomials, " +
                 std::to_string(checked) + " values, max ell " +
                 std::to_string(max_ell);
  }
  if (minimality.passed) {
    minimality.detail = std::to_string(case3c_suite().size()) +
                        " periods minimal with witnesses";
  }
  return out;
}

Outcome tree_laws() {
  constexpr unsigned long kDepth = 14;
  testing::PolyGenerator gen(20240305);
  const auto is = [](CaseTag tag) {
    return [tag](const Classification& c) { return c.case_tag == tag; };
  };
  // Case 3(b) trees show both branches only below level ell.
  const auto three_b = [](const Classification& c) {
    return c.case_tag == CaseTag::kCase3bUnbounded && c.ell() < kDepth;
  };
  const std::vector<std::pair<std::string, std::vector<QuadraticPoly>>> suites{
      {"2", gen.many(100, [&] { return gen.any(); }, is(CaseTag::kCase2Unbounded))},
      {"3(a)", gen.many(100, [&] { return gen.double_root(); },
                        is(CaseTag::kCase3aUnbounded))},
      {"3(b)", gen.many(100, [&] { return gen.odd_even(); }, three_b)},
      {"4", gen.many(100, [&] { return gen.any(); }, is(CaseTag::kCase4Unbounded))},
  };
  Outcome out;
  std::string counts;
  for (const auto& [label, polys] : suites) {
    std::set<std::size_t> frontier_sizes;
    for (const auto& f : polys) {
      if (auto failure = cli::check_tree_laws(f, kDepth)) {
        out.fail("case " + label + " " + str(f) + ": " + *failure);
      }
      const auto frontier = build_tree(f, kDepth).level_nodes(kDepth);
      frontier_sizes.insert(std::count_if(
          frontier.begin(), frontier.end(),
          [](const TreeNode* n) { return n->status == NodeStatus::kDepthCapped; }));
    }
    std::string sizes;
    for (auto s : frontier_sizes) sizes += (sizes.empty() ? "" : "/") + std::to_string(s);
    counts += (counts.empty() ? "" : ", ") + label + ": " + sizes;
  }
  if (out.passed) {
    out.detail = "400 trees to depth 14; frontier nodes " + counts;
  }
  return out;
}

Outcome tree_table_agreement() {
  Outcome out;
  std::size_t nodes = 0;
  for (const auto& f : case3c_suite()) {
    const auto cls = classify(f);
    const auto tree = build_tree(f);
    if (!tree.is_finite() || tree.levels() != cls.ell()) {
      out.fail(str(f) + ": tree has " + std::to_string(tree.levels()) + " levels");
      continue;
    }
    if (tree.flatten() != period_table(cls).entries) {
      out.fail(str(f) + ": flattened leaves differ from the table");
    }
    for (const auto& node : tree.nodes()) {
      ++nodes;
      const Int stride = pow2(node.level);
      const Valuation first = nu2(f(node.residue));
      bool changed = false;
      for (long q = 0; q <= 32; ++q) {
        const Valuation v = nu2(f(stride * q + node.residue));
        if (node.status == NodeStatus::kTerminating && v != *node.valuation) {
          out.fail(str(f) + ": node " + std::to_string(node.level) + "/" +
                   node.residue.get_str() + " not constant");
        }
        changed = changed || v != first;
      }
      if (node.status != NodeStatus::kTerminating && !changed) {
        out.fail(str(f) + ": open node " + std::to_string(node.level) + "/" +
                 node.residue.get_str() + " constant on 33 samples");
      }
    }
  }
  if (out.passed) {
    out.detail = std::to_string(case3c_suite().size()) + " trees, " +
                 std::to_string(nodes) + " nodes sampled";
  }
  return out;
}

Outcome operator_laws() {
  testing::PolyGenerator gen(20240307);
  const auto usable = [](const Classification& c) {
    return c.is_case3c() && c.ell() >= 2 && c.even_offset == 0;
  };
  const auto polys = gen.many(200, [&] { return gen.any(); }, usable);
  Outcome out;
  for (const auto& f : polys) {
    const auto cls = classify(f);
    const Int s = gen.coefficient();

    const QuadraticPoly moved = translate(f, s);
    for (long n = -8; n < 24; ++n) {
      if (moved(Int(n)) != f(Int(n) - s)) out.fail(str(f) + ": translation pointwise");
    }
    if (!table_translate_law(f, s)) out.fail(str(f) + ": translation table law");
    if (moved.discriminant() != f.discriminant()) {
      out.fail(str(f) + ": translation changed the discriminant");
    }

    const auto canon = canonicalize_to_type_ell_1(f);
    const QuadraticPoly& g = canon.canonical;
    const Int& a = canon.ops[1].parameter;
    const QuadraticPoly monic = translate(g, canon.ops[0].parameter);
    const QuadraticPoly forward = s_operator(monic, a, SDirection::kForward);
    if (forward != f) out.fail(str(f) + ": S forward does not reach f");
    if (s_operator(f, a, SDirection::kBackward) != monic) {
      out.fail(str(f) + ": S backward does not invert S forward");
    }
    for (long n = 0; n < 64; ++n) {
      if (a * forward(Int(n)) != monic(a * n)) out.fail(str(f) + ": S pointwise");
    }
    if (!table_s_law(monic, a)) out.fail(str(f) + ": S table law");
    if (forward.discriminant() != monic.discriminant() ||
        g.discriminant() != f.discriminant()) {
      out.fail(str(f) + ": S changed the discriminant");
    }

    if (g.a() != 1 || g.b() != 2) out.fail(str(f) + ": canonical form not n^2+2n+C");
    if (apply(g, canon.ops) != f) out.fail(str(f) + ": operators do not reproduce f");
    const auto g_tree = build_tree(g);
    if (!is_type_ell_1(g_tree) || g_tree.levels() != cls.ell()) {
      out.fail(str(f) + ": canonical form is not of type (ell,1)");
    }
  }
  if (out.passed) out.detail = std::to_string(polys.size()) + " polynomials";
  return out;
}

Outcome level_one_table() {
  testing::PolyGenerator gen(20240308, 2000);
  const auto ell_one = [](const Classification& c) {
    return c.is_case3c() && c.ell() == 1;
  };
  const auto polys = gen.many(100, [&] { return gen.odd_even(); }, ell_one);
  Outcome out;
  std::set<std::pair<unsigned, unsigned long>> combos;
  for (const auto& f : polys) {
    const auto cls = classify(f);
    combos.insert({cls.disc->m, mpz_fdiv_ui(cls.reduced.b().get_mpz_t(), 4)});
    const auto seq = oracle::valuation_sequence(f, 0, 64);
    for (unsigned n = 0; n < 64; ++n) {
      if (closed_form_valuation(cls, Int(n)) != seq.values[n]) {
        out.fail(str(f) + " at n=" + std::to_string(n));
        break;
      }
    }
  }
  if (combos.size() != 10) {
    out.fail("only " + std::to_string(combos.size()) + " of 10 (m, b mod 4) combinations");
  }
  if (out.passed) {
    out.detail = std::to_string(polys.size()) + " polynomials, all 10 (m, b mod 4) combinations";
  }
  return out;
}

Outcome root_residues() {
  constexpr unsigned long kBits = 12;
  testing::PolyGenerator gen(20240309);
  const auto wanted = [](const Classification& c) {
    return c.case_tag == CaseTag::kCase3bUnbounded ||
           c.case_tag == CaseTag::kCase2Unbounded;
  };
  auto polys = gen.many(50, [&] { return gen.any(); }, wanted);
  polys.insert(polys.begin(), QuadraticPoly(13, 12, -28));
  Outcome out;
  for (const auto& f : polys) {
    const auto fine = infinite_branch_residues(f, kBits);
    for (const auto& r : fine) {
      if (nu2(f(r)) < Valuation(kBits)) {
        out.fail(str(f) + ": nu2(f(" + r.get_str() + ")) < 12");
      }
    }
    for (unsigned long bits = 1; bits < kBits; ++bits) {
      auto truncated = fine;
      for (auto& r : truncated) r = mod_pow2(r, bits);
      std::sort(truncated.begin(), truncated.end());
      auto coarse = infinite_branch_residues(f, bits);
      std::sort(coarse.begin(), coarse.end());
      if (coarse != truncated) {
        out.fail(str(f) + ": residues incoherent at " + std::to_string(bits) + " bits");
      }
    }
  }
  if (out.passed) out.detail = std::to_string(polys.size()) + " polynomials";
  return out;
}

bool report(int number, const std::string& name, const Outcome& outcome,
            double seconds, double budget) {
  const bool in_time = seconds < budget;
  const bool ok = outcome.passed && in_time;
  std::printf("criterion %d %s %s: %s (%.3f s, budget %g s%s)\n", number,
              ok ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str(), seconds,
              budget, in_time ? "" : ", over budget");
  return ok;
}

template <typename F>
std::pair<Outcome, double> timed(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = body();
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return {o, elapsed.count()};
}

}  // namespace
}  // namespace quadval

int main() {
  using namespace quadval;
  bool all = true;

  auto [c1, t1] = timed(golden_tables);
  all &= report(1, "golden tables", c1, t1, 1);

  auto [c2, t2] = timed(classification);
  all &= report(2, "classification", c2, t2, 1);

  case3c_suite();  // generation is shared by criteria 3, 4 and 6
  Outcome c4;
  auto [c3, t3] = timed([&] { return closed_form_and_minimality(c4); });
  all &= report(3, "closed form equals oracle", c3, t3, 60);
  all &= report(4, "period minimality", c4, t3, 60);

  auto [c5, t5] = timed(tree_laws);
  all &= report(5, "tree laws", c5, t5, 60);

  auto [c6, t6] = timed(tree_table_agreement);
  all &= report(6, "tree/table agreement and node status", c6, t6, 60);

  auto [c7, t7] = timed(operator_laws);
  all &= report(7, "operator laws", c7, t7, 30);

  auto [c8, t8] = timed(level_one_table);
  all &= report(8, "single-level table", c8, t8, 10);

  auto [c9, t9] = timed(root_residues);
  all &= report(9, "2-adic root residues", c9, t9, 10);

  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
