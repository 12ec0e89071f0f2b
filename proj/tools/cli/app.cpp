#include "cli/app.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "cli/render.hpp"
#include "cli/verify.hpp"
#include "quadval/classifier.hpp"
#include "quadval/closed_form.hpp"
#include "quadval/operators.hpp"
#include "quadval/oracle.hpp"
#include "quadval/tree.hpp"

namespace quadval::cli {
namespace {

struct Options {
  std::optional<std::string> a, b, c;
  std::string format;
  bool json = false;
  unsigned long depth = kDefaultDepthCap;
  std::string start = "0";
  std::size_t count = 32;
  std::optional<std::size_t> horizon;
  std::string input;
  std::string output;
  bool show_canonical = false;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

QuadraticPoly parse_poly(const std::string& a, const std::string& b,
                         const std::string& c) {
  return QuadraticPoly(parse_int(trim(a)), parse_int(trim(b)),
                       parse_int(trim(c)));
}

QuadraticPoly poly_from(const Options& opt) {
  for (const auto& [flag, value] :
       {std::pair{"-a", &opt.a}, {"-b", &opt.b}, {"-c", &opt.c}}) {
    if (!*value) throw std::invalid_argument(std::string("missing ") + flag);
  }
  return parse_poly(*opt.a, *opt.b, *opt.c);
}

RenderFormat resolve_format(const Options& opt, const std::string& command,
                            std::initializer_list<RenderFormat> allowed,
                            RenderFormat fallback) {
  if (opt.json) return RenderFormat::kJson;
  if (opt.format.empty()) return fallback;
  const RenderFormat f = parse_format(opt.format);
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    throw std::invalid_argument("format '" + opt.format +
                                "' does not apply to " + command);
  }
  return f;
}

std::string summary_line(const QuadraticPoly& f, const Classification& cls) {
  const std::string text = classification_text(f, cls);
  return text.substr(0, text.find('\n'));
}

int cmd_classify(const Options& opt, std::ostream& out) {
  const auto fmt = resolve_format(opt, "classify",
                                  {RenderFormat::kAscii, RenderFormat::kJson},
                                  RenderFormat::kAscii);
  const QuadraticPoly f = poly_from(opt);
  const Classification cls = classify(f);
  if (fmt == RenderFormat::kJson) {
    out << classification_json(f, cls).dump(2) << "\n";
  } else {
    out << classification_text(f, cls);
  }
  return kExitOk;
}

int cmd_table(const Options& opt, std::ostream& out) {
  const auto fmt = resolve_format(opt, "table",
                                  {RenderFormat::kCsv, RenderFormat::kJson},
                                  RenderFormat::kCsv);
  const QuadraticPoly f = poly_from(opt);
  const Classification cls = classify(f);
  if (!cls.is_bounded()) {
    throw std::domain_error("sequence is unbounded; no period table");
  }
  const PeriodTable table =
      cls.is_constant()
          ? PeriodTable{.ell = 0, .period = 1,
                        .entries = {*constant_valuation(cls)}}
          : period_table(cls);
  out << (fmt == RenderFormat::kJson ? table_json(table) : table_csv(table));
  return kExitOk;
}

int cmd_tree(const Options& opt, std::ostream& out) {
  const auto fmt = resolve_format(
      opt, "tree", {RenderFormat::kAscii, RenderFormat::kDot, RenderFormat::kJson},
      RenderFormat::kAscii);
  const QuadraticPoly f = poly_from(opt);
  const ValuationTree tree = build_tree(f, opt.depth);
  switch (fmt) {
    case RenderFormat::kDot: out << tree_dot(tree); break;
    case RenderFormat::kJson: out << tree_json(tree).dump(2) << "\n"; break;
    default: out << tree_ascii(tree); break;
  }
  return kExitOk;
}

int cmd_seq(const Options& opt, std::ostream& out) {
  const auto fmt = resolve_format(opt, "seq",
                                  {RenderFormat::kCsv, RenderFormat::kJson},
                                  RenderFormat::kCsv);
  const QuadraticPoly f = poly_from(opt);
  const auto rows = sequence_rows(
      oracle::valuation_sequence(f, parse_int(opt.start), opt.count));
  out << (fmt == RenderFormat::kJson ? sequence_json(rows) : sequence_csv(rows));
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const auto fmt = resolve_format(opt, "verify",
                                  {RenderFormat::kAscii, RenderFormat::kJson},
                                  RenderFormat::kAscii);
  const QuadraticPoly f = poly_from(opt);
  const Classification cls = classify(f);
  const VerifyReport report = verify(f, opt.horizon);
  if (fmt == RenderFormat::kJson) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back(
          Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    Json j{{"polynomial", poly_to_json(f)},
           {"classification", summary_line(f, cls)},
           {"horizon", report.horizon},
           {"passed", report.passed()},
           {"checks", checks}};
    out << j.dump(2) << "\n";
  } else {
    out << summary_line(f, cls) << "\n";
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
    }
    out << "verify: " << (report.passed() ? "pass" : "fail") << "\n";
  }
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

// Batch input -----------------------------------------------------------------

struct BatchItem {
  Json locator;
  std::string raw;
  std::optional<QuadraticPoly> poly;
  std::string error;
};

BatchItem csv_item(std::size_t line_no, const std::string& line) {
  BatchItem item{.locator = Json{{"line", line_no}}, .raw = line};
  try {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    if (fields.size() != 3) {
      throw std::invalid_argument("expected 3 fields a,b,c, got " +
                                  std::to_string(fields.size()));
    }
    item.poly = parse_poly(fields[0], fields[1], fields[2]);
  } catch (const std::exception& e) {
    item.error = e.what();
  }
  return item;
}

std::vector<BatchItem> read_batch(const std::string& text) {
  std::vector<BatchItem> items;
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '[') {
    const Json array = Json::parse(body);
    for (std::size_t k = 0; k < array.size(); ++k) {
      const Json& entry = array[k];
      BatchItem item{.locator = Json{{"index", k}}, .raw = entry.dump()};
      try {
        if (!entry.is_object()) throw std::invalid_argument("expected {a,b,c}");
        item.poly = QuadraticPoly(int_from_json(entry.at("a")),
                                  int_from_json(entry.at("b")),
                                  int_from_json(entry.at("c")));
      } catch (const std::exception& e) {
        item.error = e.what();
      }
      items.push_back(std::move(item));
    }
    return items;
  }
  std::stringstream ss(text);
  std::string line;
  bool first = true;
  for (std::size_t line_no = 1; std::getline(ss, line); ++line_no) {
    std::string cleaned;
    for (char ch : line) {
      if (ch != ' ' && ch != '\t' && ch != '\r') cleaned += ch;
    }
    if (cleaned.empty()) continue;
    if (first && cleaned == "a,b,c") {
      first = false;
      continue;
    }
    first = false;
    items.push_back(csv_item(line_no, cleaned));
  }
  return items;
}

std::string batch_record(const BatchItem& item) {
  Json record = item.locator;
  if (!item.poly) {
    record["input"] = item.raw;
    record["error"] = item.error;
    return record.dump();
  }
  const Classification cls = classify(*item.poly);
  const Json fields = classification_json(*item.poly, cls);
  for (const auto& [key, value] : fields.items()) record[key] = value;
  record["summary"] = summary_line(*item.poly, cls);
  return record.dump();
}

int cmd_batch(const Options& opt, std::ostream& out) {
  resolve_format(opt, "batch", {RenderFormat::kJson}, RenderFormat::kJson);
  if (opt.input.empty()) throw std::invalid_argument("batch needs --input");
  std::ifstream in(opt.input, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + opt.input);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::vector<BatchItem> items = read_batch(buffer.str());

  // Records are computed in parallel and written in input order.
  std::vector<std::string> records(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < items.size(); k = next++) {
      records[k] = batch_record(items[k]);
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::size_t>(items.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const auto& r : records) out << r << "\n";
  const bool any_failed = std::any_of(items.begin(), items.end(),
                                      [](const BatchItem& i) { return !i.poly; });
  return any_failed ? kExitPartialBatch : kExitOk;
}

// Operators -----------------------------------------------------------------

std::string node_mark(const NodeVerdict& v) {
  if (v.status == NodeStatus::kTerminating) return "ν=" + v.valuation->to_string();
  return "*";
}

int cmd_ops(const Options& opt, std::ostream& out) {
  const auto fmt = resolve_format(opt, "ops",
                                  {RenderFormat::kAscii, RenderFormat::kJson},
                                  RenderFormat::kAscii);
  const QuadraticPoly f = poly_from(opt);
  const EvenReduction red = reduce_even(f);
  const QuadraticPoly& h = red.reduced;
  const Canonicalization canon = canonicalize_to_type_ell_1(h);
  const QuadraticPoly& g = canon.canonical;
  const Int& s = canon.ops[0].parameter;
  const Int& a = canon.ops[1].parameter;
  const bool reproduces = apply(g, canon.ops) == h;
  const ValuationTree g_tree = build_tree(g);
  const unsigned long ell = g_tree.levels();

  Json map = Json::array();
  std::ostringstream text;
  for (unsigned long i = 1; i <= ell; ++i) {
    const Int inv = inverse_mod_pow2(a, i);
    text << "level " << i << ":";
    for (const TreeNode* node : g_tree.level_nodes(i)) {
      const Int r = mod_pow2(inv * (node->residue + s), i);
      const NodeVerdict gv{node->status, node->valuation};
      NodeVerdict fv = node_status(f, i, r);
      text << "  " << node->residue.get_str() << " -> " << r.get_str() << " ("
           << node_mark(gv) << " -> " << node_mark(fv) << ")";
      Json entry{{"level", i},
                 {"g_residue", int_to_json(node->residue)},
                 {"f_residue", int_to_json(r)},
                 {"status", std::string(status_name(fv.status))}};
      if (fv.valuation) entry["valuation"] = valuation_to_json(*fv.valuation);
      map.push_back(entry);
    }
    text << "\n";
  }

  if (fmt == RenderFormat::kJson) {
    Json ops = Json::array();
    for (const auto& op : canon.ops) ops.push_back(op.to_string());
    Json j{{"polynomial", poly_to_json(f)},
           {"even_offset", red.shift},
           {"canonical", poly_to_json(g)},
           {"ell", ell},
           {"ops", ops},
           {"reproduces", reproduces},
           {"residue_map", map}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "f(n) = " << f << "\n";
  if (red.shift != 0) {
    out << "f = 2^" << red.shift << " * (" << h << "); f valuations exceed"
        << " g valuations by " << red.shift << "\n";
  }
  out << "g(n) = " << g << "  (type (" << ell << ",1))\n";
  out << "chain: g";
  for (const auto& op : canon.ops) out << " -> " << op.to_string();
  out << " = " << h << (reproduces ? "  [exact]" : "  [MISMATCH]") << "\n";
  out << "residue map r -> " << a.get_str() << "^-1 (r "
      << (s < 0 ? "- " : "+ ") << Int(abs(s)).get_str()
      << ") mod 2^i, g node -> f node:\n";
  out << text.str();
  if (opt.show_canonical) {
    out << "\ncanonical tree:\n" << tree_ascii(g_tree);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"2-adic valuations of integer quadratics a n^2 + b n + c",
               "quadval"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("-a", opt.a, "leading coefficient (decimal, any size)");
  app.add_option("-b", opt.b, "linear coefficient");
  app.add_option("-c", opt.c, "constant coefficient");
  app.add_option("--format", opt.format, "ascii, dot, json or csv");
  app.add_flag("--json", opt.json, "shorthand for --format json");
  app.add_option("--depth", opt.depth, "tree depth cap")->capture_default_str();
  app.add_option("--start", opt.start, "first n of seq")->capture_default_str();
  app.add_option("--count", opt.count, "number of seq rows")->capture_default_str();
  app.add_option("--horizon", opt.horizon, "verify range [0, H)");
  app.add_option("--input", opt.input, "batch input file (CSV or JSON)");
  app.add_option("--output", opt.output, "write results here instead of stdout");
  app.add_flag("--show-canonical", opt.show_canonical,
               "ops: also print the canonical tree");

  using Handler = int (*)(const Options&, std::ostream&);
  const std::vector<std::tuple<std::string, std::string, Handler>> commands{
      {"classify", "case, boundedness, ell, m, period, branches", cmd_classify},
      {"table", "period table of a bounded sequence", cmd_table},
      {"tree", "valuation tree as ascii, dot or json", cmd_tree},
      {"seq", "rows n, f(n), nu2(f(n))", cmd_seq},
      {"verify", "check closed form and tree laws against brute force", cmd_verify},
      {"batch", "classify every polynomial of --input, one JSON record per line", cmd_batch},
      {"ops", "canonical form n^2 + 2n + C and the operator chain", cmd_ops},
  };
  for (const auto& [name, help, handler] : commands) app.add_subcommand(name, help);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Handler handler = nullptr;
  for (const auto& [name, help, h] : commands) {
    if (app.got_subcommand(name)) handler = h;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    code = handler(opt, buffer);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (opt.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(opt.output, std::ios::binary);
    if (!(file << buffer.str())) {
      err << "error: cannot write " << opt.output << "\n";
      return kExitInputError;
    }
  }
  return code;
}

}  // namespace quadval::cli
