#include "cli/render.hpp"

#include <sstream>
#include <stdexcept>

namespace quadval::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  out.push_back(current);
  return out;
}

// Lines of a CSV document; a trailing newline does not add an empty line.
std::vector<std::string> csv_lines(const std::string& text,
                                   const std::string& header) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != header) {
    throw std::invalid_argument("expected CSV header '" + header + "'");
  }
  lines.erase(lines.begin());
  return lines;
}

std::vector<std::string> csv_fields(const std::string& line,
                                    std::size_t expected) {
  auto fields = split(line, ',');
  if (fields.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) +
                                " fields in '" + line + "'");
  }
  return fields;
}

unsigned long exact_log2(std::size_t size) {
  if (size == 0 || (size & (size - 1)) != 0) {
    throw std::invalid_argument("table size " + std::to_string(size) +
                                " is not a power of two");
  }
  unsigned long ell = 0;
  while ((std::size_t{1} << ell) < size) ++ell;
  return ell;
}

PeriodTable table_from_entries(std::vector<Valuation> entries) {
  const unsigned long ell = exact_log2(entries.size());
  return PeriodTable{.ell = ell, .period = pow2(ell),
                     .entries = std::move(entries)};
}

}  // namespace

RenderFormat parse_format(const std::string& name) {
  if (name == "ascii") return RenderFormat::kAscii;
  if (name == "dot") return RenderFormat::kDot;
  if (name == "json") return RenderFormat::kJson;
  if (name == "csv") return RenderFormat::kCsv;
  throw std::invalid_argument("unknown format '" + name + "'");
}

Json int_to_json(const Int& x) {
  std::int64_t small = 0;
  if (fits_int64(x, &small)) return small;
  return x.get_str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    return Int(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json valuation_to_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

Valuation valuation_from_json(const Json& j) {
  if (j.is_string()) return Valuation::parse(j.get<std::string>());
  if (j.is_number_unsigned()) return Valuation(j.get<std::uint64_t>());
  throw std::invalid_argument("expected a valuation, got " + j.dump());
}

Json poly_to_json(const QuadraticPoly& f) {
  return Json{{"a", int_to_json(f.a())},
              {"b", int_to_json(f.b())},
              {"c", int_to_json(f.c())}};
}

std::string classification_text(const QuadraticPoly& f,
                                 const Classification& cls) {
  std::ostringstream os;
  os << (cls.is_bounded() ? "bounded" : "unbounded") << ", case "
     << case_label(cls.case_tag);
  if (cls.is_constant()) {
    os << ", constant valuation " << constant_valuation(cls)->to_string()
       << ", period 1";
  } else if (cls.case_tag == CaseTag::kCase3aUnbounded) {
    os << ", D=0";
  } else if (cls.disc) {
    os << ", ℓ=" << cls.disc->ell << ", m=" << cls.disc->m;
  }
  if (cls.is_case3c()) os << ", period " << cls.period->get_str();
  if (!cls.is_bounded()) {
    os << ", " << cls.infinite_branches << " infinite branch"
       << (cls.infinite_branches == 1 ? "" : "es");
  }
  os << "\n";
  os << "polynomial: " << f << "\n";
  os << "case tag: " << case_name(cls.case_tag) << "\n";
  os << "even offset: " << cls.even_offset << "\n";
  if (cls.even_offset != 0) os << "reduced: " << cls.reduced << "\n";
  if (cls.disc) {
    os << "discriminant: " << cls.reduced.discriminant().get_str();
    if (!cls.disc->is_zero) {
      os << " = 4^" << cls.disc->ell << " * (" << cls.disc->delta.get_str()
         << "), Δ ≡ " << cls.disc->m << " (mod 8)";
    }
    os << "\n";
  }
  return os.str();
}

Json classification_json(const QuadraticPoly& f, const Classification& cls) {
  Json j = poly_to_json(f);
  j["case"] = std::string(case_label(cls.case_tag));
  j["case_tag"] = std::string(case_name(cls.case_tag));
  j["bounded"] = cls.is_bounded();
  j["even_offset"] = cls.even_offset;
  j["reduced"] = poly_to_json(cls.reduced);
  if (cls.disc) {
    j["discriminant"] = int_to_json(cls.reduced.discriminant());
    if (!cls.disc->is_zero) {
      j["ell"] = cls.disc->ell;
      j["delta"] = int_to_json(cls.disc->delta);
      j["m"] = cls.disc->m;
    }
  }
  j["period"] = cls.period ? int_to_json(*cls.period) : Json(nullptr);
  j["infinite_branches"] = cls.infinite_branches;
  if (auto v = constant_valuation(cls)) {
    j["constant_valuation"] = valuation_to_json(*v);
  }
  return j;
}

std::string table_csv(const PeriodTable& table) {
  std::string out = "residue,valuation\n";
  for (std::size_t r = 0; r < table.size(); ++r) {
    out += std::to_string(r) + "," + table[r].to_string() + "\n";
  }
  return out;
}

std::string table_json(const PeriodTable& table) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < table.size(); ++r) {
    rows.push_back(
        Json{{"residue", r}, {"valuation", valuation_to_json(table[r])}});
  }
  Json j{{"ell", table.ell},
         {"period", int_to_json(table.period)},
         {"rows", rows}};
  return j.dump(2) + "\n";
}

PeriodTable parse_table_csv(const std::string& text) {
  std::vector<Valuation> entries;
  for (const auto& line : csv_lines(text, "residue,valuation")) {
    const auto fields = csv_fields(line, 2);
    if (parse_int(fields[0]) != Int(static_cast<unsigned long>(entries.size()))) {
      throw std::invalid_argument("residues must run 0, 1, 2, ...");
    }
    entries.push_back(Valuation::parse(fields[1]));
  }
  return table_from_entries(std::move(entries));
}

PeriodTable parse_table_json(const std::string& text) {
  const Json j = Json::parse(text);
  std::vector<Valuation> entries;
  for (const auto& row : j.at("rows")) {
    if (int_from_json(row.at("residue")) !=
        Int(static_cast<unsigned long>(entries.size()))) {
      throw std::invalid_argument("residues must run 0, 1, 2, ...");
    }
    entries.push_back(valuation_from_json(row.at("valuation")));
  }
  PeriodTable table = table_from_entries(std::move(entries));
  if (j.at("ell").get<unsigned long>() != table.ell ||
      int_from_json(j.at("period")) != table.period) {
    throw std::invalid_argument("ell/period disagree with the row count");
  }
  return table;
}

std::vector<SequenceRow> sequence_rows(const oracle::ValuationSequence& seq) {
  std::vector<SequenceRow> rows;
  rows.reserve(seq.values.size());
  Int n = seq.start;
  for (const auto& v : seq.values) {
    rows.push_back(SequenceRow{n, seq.poly(n), v});
    ++n;
  }
  return rows;
}

std::string sequence_csv(const std::vector<SequenceRow>& rows) {
  std::string out = "n,value,valuation\n";
  for (const auto& row : rows) {
    out += row.n.get_str() + "," + row.value.get_str() + "," +
           row.valuation.to_string() + "\n";
  }
  return out;
}

std::string sequence_json(const std::vector<SequenceRow>& rows) {
  Json items = Json::array();
  for (const auto& row : rows) {
    items.push_back(Json{{"n", int_to_json(row.n)},
                         {"value", int_to_json(row.value)},
                         {"valuation", valuation_to_json(row.valuation)}});
  }
  return Json{{"rows", items}}.dump(2) + "\n";
}

std::vector<SequenceRow> parse_sequence_csv(const std::string& text) {
  std::vector<SequenceRow> rows;
  for (const auto& line : csv_lines(text, "n,value,valuation")) {
    const auto f = csv_fields(line, 3);
    rows.push_back({parse_int(f[0]), parse_int(f[1]), Valuation::parse(f[2])});
  }
  return rows;
}

std::vector<SequenceRow> parse_sequence_json(const std::string& text) {
  std::vector<SequenceRow> rows;
  const Json doc = Json::parse(text);
  for (const auto& item : doc.at("rows")) {
    rows.push_back({int_from_json(item.at("n")), int_from_json(item.at("value")),
                    valuation_from_json(item.at("valuation"))});
  }
  return rows;
}

std::string node_label(const TreeNode& node) {
  return "2^" + std::to_string(node.level) + " q + " + node.residue.get_str();
}

namespace {

std::string node_mark(const TreeNode& node) {
  switch (node.status) {
    case NodeStatus::kTerminating: return "ν=" + node.valuation->to_string();
    case NodeStatus::kNonTerminating: return "*";
    case NodeStatus::kDepthCapped: return "…";
    case NodeStatus::kRootNode:
      return "* (f(" + node.residue.get_str() + ")=0, ν=inf)";
  }
  return "?";
}

void ascii_walk(const ValuationTree& tree, const TreeNode& node,
                std::string& out) {
  out.append(2 * node.level, ' ');
  out += node_label(node) + "  " + node_mark(node) + "\n";
  if (!node.children) return;
  for (std::size_t child : *node.children) {
    ascii_walk(tree, tree.node(child), out);
  }
}

Json json_walk(const ValuationTree& tree, const TreeNode& node) {
  Json j{{"level", node.level},
         {"residue", int_to_json(node.residue)},
         {"status", std::string(status_name(node.status))}};
  if (node.valuation) j["valuation"] = valuation_to_json(*node.valuation);
  Json children = Json::array();
  if (node.children) {
    for (std::size_t child : *node.children) {
      children.push_back(json_walk(tree, tree.node(child)));
    }
  }
  j["children"] = children;
  return j;
}

}  // namespace

std::string tree_ascii(const ValuationTree& tree) {
  std::string out = "f(n) = " + tree.poly().to_string() + "\n";
  ascii_walk(tree, tree.root(), out);
  return out;
}

std::string tree_dot(const ValuationTree& tree) {
  std::ostringstream os;
  os << "digraph valuation_tree {\n";
  os << "  label=\"f(n) = " << tree.poly() << "\";\n";
  os << "  node [shape=circle];\n";
  const auto& nodes = tree.nodes();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const TreeNode& n = nodes[k];
    os << "  n" << k << " [label=\"" << node_label(n) << "\\n"
       << node_mark(n) << "\"";
    if (n.status == NodeStatus::kTerminating) {
      os << ", style=filled, fillcolor=gray40, fontcolor=white";
    } else if (n.status == NodeStatus::kDepthCapped) {
      os << ", style=dashed";
    }
    os << "];\n";
  }
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!nodes[k].children) continue;
    for (std::size_t child : *nodes[k].children) {
      os << "  n" << k << " -> n" << child << " [label=\""
         << nodes[child].residue.get_str() << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

Json tree_json(const ValuationTree& tree) {
  Json j{{"polynomial", poly_to_json(tree.poly())},
         {"depth_cap", tree.depth_cap()},
         {"finite", tree.is_finite()}};
  j["levels"] = tree.is_finite() ? Json(tree.levels()) : Json(nullptr);
  j["root"] = json_walk(tree, tree.root());
  return j;
}

}  // namespace quadval::cli
