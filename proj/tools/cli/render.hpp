#ifndef QUADVAL_CLI_RENDER_HPP
#define QUADVAL_CLI_RENDER_HPP

// Text encodings used by the command-line tool. CSV output has a header row
// and LF line endings. In JSON, integers that fit in 64 bits are numbers and
// larger ones are decimal strings; an infinite valuation is the string "inf".

#include <string>
#include <vector>

#include "json.hpp"
#include "quadval/classifier.hpp"
#include "quadval/closed_form.hpp"
#include "quadval/oracle.hpp"
#include "quadval/poly.hpp"
#include "quadval/tree.hpp"

namespace quadval::cli {

using Json = nlohmann::ordered_json;

enum class RenderFormat { kAscii, kDot, kJson, kCsv };

/// Throws std::invalid_argument for unknown names.
RenderFormat parse_format(const std::string& name);

Json int_to_json(const Int& x);
/// Accepts a JSON integer or a decimal string.
Int int_from_json(const Json& j);
Json valuation_to_json(const Valuation& v);
Valuation valuation_from_json(const Json& j);

Json poly_to_json(const QuadraticPoly& f);

// Classification -----------------------------------------------------------

/// One summary line, e.g. "bounded, case 3(c), ℓ=7, m=2, period 128",
/// followed by detail lines.
std::string classification_text(const QuadraticPoly& f,
                                const Classification& cls);
Json classification_json(const QuadraticPoly& f, const Classification& cls);

// Period tables -------------------------------------------------------------

std::string table_csv(const PeriodTable& table);
std::string table_json(const PeriodTable& table);
/// Inverses of the two above; throw std::invalid_argument on malformed text.
PeriodTable parse_table_csv(const std::string& text);
PeriodTable parse_table_json(const std::string& text);

// Sequences -----------------------------------------------------------------

struct SequenceRow {
  Int n;
  Int value;
  Valuation valuation;
  friend bool operator==(const SequenceRow&, const SequenceRow&) = default;
};

std::vector<SequenceRow> sequence_rows(const oracle::ValuationSequence& seq);
std::string sequence_csv(const std::vector<SequenceRow>& rows);
std::string sequence_json(const std::vector<SequenceRow>& rows);
std::vector<SequenceRow> parse_sequence_csv(const std::string& text);
std::vector<SequenceRow> parse_sequence_json(const std::string& text);

// Trees ---------------------------------------------------------------------

/// "2^i q + r".
std::string node_label(const TreeNode& node);
std::string tree_ascii(const ValuationTree& tree);
std::string tree_dot(const ValuationTree& tree);
Json tree_json(const ValuationTree& tree);

}  // namespace quadval::cli

#endif  // QUADVAL_CLI_RENDER_HPP
