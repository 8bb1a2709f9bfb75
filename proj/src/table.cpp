#include "ofm/table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ofm/closed_form.hpp"
#include "ofm/orbifold.hpp"

namespace ofm {

std::vector<TableRow> table_rows(unsigned long min_genus, unsigned long max_genus) {
  if (min_genus < 1) throw std::invalid_argument("table: genus must be >= 1");
  if (max_genus < min_genus) throw std::invalid_argument("table: empty genus range");
  std::vector<TableRow> rows;
  rows.reserve(max_genus - min_genus + 1);
  for (unsigned long g = min_genus; g <= max_genus; ++g)
    rows.push_back({g, eps4_rooted(g), eps4_unrooted(g)});
  return rows;
}

std::string render_table(const std::vector<TableRow>& rows, TableFormat format) {
  switch (format) {
    case TableFormat::kCsv: {
      std::ostringstream out;
      out << "genus,labelled,unlabelled\n";
      for (const auto& row : rows)
        out << row.genus << ',' << row.labelled << ',' << row.unlabelled << '\n';
      return out.str();
    }
    case TableFormat::kJson: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        obj["genus"] = row.genus;
        obj["labelled"] = row.labelled.get_str();
        obj["unlabelled"] = row.unlabelled.get_str();
        arr.push_back(std::move(obj));
      }
      return arr.dump() + "\n";
    }
    case TableFormat::kMarkdown: {
      std::size_t wg = 5, wl = 8, wu = 10;  // header widths
      for (const auto& row : rows) {
        wg = std::max(wg, std::to_string(row.genus).size());
        wl = std::max(wl, row.labelled.get_str().size());
        wu = std::max(wu, row.unlabelled.get_str().size());
      }
      std::ostringstream out;
      auto line = [&](const std::string& a, const std::string& b, const std::string& c) {
        out << "| " << a << std::string(wg - a.size(), ' ') << " | " << b
            << std::string(wl - b.size(), ' ') << " | " << c << std::string(wu - c.size(), ' ')
            << " |\n";
      };
      line("genus", "labelled", "unlabelled");
      out << "|" << std::string(wg + 2, '-') << "|" << std::string(wl + 2, '-') << "|"
          << std::string(wu + 2, '-') << "|\n";
      for (const auto& row : rows)
        line(std::to_string(row.genus), row.labelled.get_str(), row.unlabelled.get_str());
      return out.str();
    }
  }
  throw std::logic_error("render_table: unknown format");
}

}  // namespace ofm
