// Genus tables of rooted/unrooted counts and their text renderings.
#pragma once

#include <string>
#include <vector>

#include "ofm/numeric.hpp"

namespace ofm {

struct TableRow {
  unsigned long genus;
  BigInt labelled;    // rooted count
  BigInt unlabelled;  // unrooted count
};

enum class TableFormat { kMarkdown, kCsv, kJson };

std::vector<TableRow> table_rows(unsigned long min_genus, unsigned long max_genus);

// CSV: header "genus,labelled,unlabelled". JSON: array of objects with the
// counts as decimal strings. Markdown: three-column table.
std::string render_table(const std::vector<TableRow>& rows, TableFormat format);

}  // namespace ofm
