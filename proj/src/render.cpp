#include "render.hpp"

#include <json.hpp>
#include <sstream>

#include "errors.hpp"
#include "eulerian.hpp"

namespace geu {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& fields, char sep) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += sep;
    out += fields[i];
  }
  return out;
}

struct TableData {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // long form, one value per row
  std::vector<std::string> plain_lines;        // compact row-per-line form
};

TableData build_table(Context& ctx, const TableSpec& spec) {
  TableData data;
  const bool has_n = spec.n > 0;
  const bool has_range = spec.max_n > 0;
  if (has_n == has_range)
    fail(errc::invalid_argument, "table needs exactly one of --n or --max-n");
  std::vector<int> sizes;
  if (has_n)
    sizes.push_back(spec.n);
  else
    for (int n = 1; n <= spec.max_n; ++n) sizes.push_back(n);

  if (spec.kind == "eulerian") {
    data.columns = {"n", "k", "value"};
    for (int n : sizes) {
      std::vector<std::string> line;
      const int k_lo = spec.k ? *spec.k : 1;
      const int k_hi = spec.k ? *spec.k : n;
      for (int k = k_lo; k <= k_hi; ++k) {
        const std::string value = eulerian_recurrence(ctx, n, k).str();
        data.rows.push_back({std::to_string(n), std::to_string(k), value});
        line.push_back(value);
      }
      data.plain_lines.push_back(join(line, ','));
    }
  } else if (spec.kind == "general") {
    if (!spec.a || !spec.d) fail(errc::invalid_argument, "general table needs --a and --d");
    data.columns = {"n", "k", "a", "d", "value"};
    for (int n : sizes) {
      std::vector<std::string> line;
      const int k_lo = spec.k ? *spec.k : 0;
      const int k_hi = spec.k ? *spec.k : n;
      for (int k = k_lo; k <= k_hi; ++k) {
        const std::string value = general_eulerian(n, k, *spec.a, *spec.d).str();
        data.rows.push_back({std::to_string(n), std::to_string(k), spec.a->str(),
                             spec.d->str(), value});
        line.push_back(value);
      }
      data.plain_lines.push_back(join(line, ','));
    }
  } else if (spec.kind == "cnk") {
    data.columns = {"n", "k", "j", "value"};
    for (int n : sizes) {
      const int k_lo = spec.k ? *spec.k : 0;
      const int k_hi = spec.k ? *spec.k : n;
      for (int k = k_lo; k <= k_hi; ++k) {
        std::vector<std::string> line;
        const int j_lo = spec.j ? *spec.j : 0;
        const int j_hi = spec.j ? *spec.j : n;
        for (int j = j_lo; j <= j_hi; ++j) {
          const std::string value = cnk_coefficient(ctx, n, k, j).str();
          data.rows.push_back(
              {std::to_string(n), std::to_string(k), std::to_string(j), value});
          line.push_back(value);
        }
        data.plain_lines.push_back(join(line, ','));
      }
    }
  } else {
    fail(errc::invalid_argument,
         "unknown table kind '" + spec.kind + "' (expected eulerian, general or cnk)");
  }
  return data;
}

ordered_json table_params(const TableSpec& spec) {
  ordered_json params;
  params["kind"] = spec.kind;
  if (spec.n > 0) params["n"] = spec.n;
  if (spec.max_n > 0) params["max_n"] = spec.max_n;
  if (spec.k) params["k"] = *spec.k;
  if (spec.j) params["j"] = *spec.j;
  if (spec.a) params["a"] = spec.a->str();
  if (spec.d) params["d"] = spec.d->str();
  return params;
}

std::string dump_json(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::plain;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  fail(errc::invalid_argument, "unknown format '" + name + "' (expected plain, csv or json)");
}

std::string render_table(Context& ctx, const TableSpec& spec, Format format) {
  const TableData data = build_table(ctx, spec);
  switch (format) {
    case Format::plain: {
      std::string out;
      for (const auto& line : data.plain_lines) out += line + "\n";
      return out;
    }
    case Format::csv: {
      std::string out = join(data.columns, ',') + "\n";
      for (const auto& row : data.rows) {
        std::vector<std::string> fields;
        for (const auto& f : row) fields.push_back(csv_field(f));
        out += join(fields, ',') + "\n";
      }
      return out;
    }
    case Format::json: {
      ordered_json doc;
      doc["params"] = table_params(spec);
      doc["columns"] = data.columns;
      doc["rows"] = data.rows;
      return dump_json(doc);
    }
  }
  fail(errc::internal, "unreachable");
}

std::string render_stats(const Permutation& p, Format format) {
  const std::string word = to_string(p);
  const int n = p.size();
  const int ascents = ascent_count(p);
  const int wexc = weak_excedance_count(p);
  const long long maj = major_index(p);
  const int q = q_position(p);
  const std::string cycles = to_string(standard_cycle_form(p));
  const std::string f = to_string(fundamental_map(p));
  const std::string f_inverse = to_string(fundamental_inverse(p));
  const std::string g = to_string(complement(p));
  switch (format) {
    case Format::plain: {
      std::ostringstream out;
      out << "word=" << word << "\n"
          << "n=" << n << "\n"
          << "ascents=" << ascents << "\n"
          << "weak_excedances=" << wexc << "\n"
          << "maj=" << maj << "\n"
          << "q_position=" << q << "\n"
          << "cycles=" << cycles << "\n"
          << "f=" << f << "\n"
          << "f_inverse=" << f_inverse << "\n"
          << "g=" << g << "\n";
      return out.str();
    }
    case Format::csv: {
      std::ostringstream out;
      out << "word,n,ascents,weak_excedances,maj,q_position,cycles,f,f_inverse,g\n"
          << csv_field(word) << ',' << n << ',' << ascents << ',' << wexc << ',' << maj
          << ',' << q << ',' << csv_field(cycles) << ',' << csv_field(f) << ','
          << csv_field(f_inverse) << ',' << csv_field(g) << "\n";
      return out.str();
    }
    case Format::json: {
      ordered_json doc;
      doc["word"] = word;
      doc["n"] = n;
      doc["ascents"] = ascents;
      doc["weak_excedances"] = wexc;
      doc["maj"] = maj;
      doc["q_position"] = q;
      doc["cycles"] = cycles;
      doc["f"] = f;
      doc["f_inverse"] = f_inverse;
      doc["g"] = g;
      return dump_json(doc);
    }
  }
  fail(errc::internal, "unreachable");
}

std::string render_bijection(Context& ctx, int n, int k, Side side, Format format) {
  const std::vector<InsertionRecord> records = insertion_records(ctx, n, k, side);
  const std::string side_name = side == Side::A ? "A" : "B";
  const std::string class_name = side == Side::A ? "AW" : "BW";
  switch (format) {
    case Format::plain: {
      std::string out;
      for (const auto& rec : records) {
        out += "source=" + to_string(rec.source) + " class=" + class_name + "(" +
               std::to_string(n - 1) + "," + std::to_string(rec.source_k) + ")" +
               " pos=" + to_string(rec.position) + " image=" + to_string(rec.image) +
               " case=" + to_string(rec.label) + "\n";
      }
      return out;
    }
    case Format::csv: {
      std::string out = "side,n,k,source,source_k,position,image,case\n";
      for (const auto& rec : records) {
        out += side_name + "," + std::to_string(n) + "," + std::to_string(k) + "," +
               csv_field(to_string(rec.source)) + "," + std::to_string(rec.source_k) + "," +
               to_string(rec.position) + "," + csv_field(to_string(rec.image)) + "," +
               to_string(rec.label) + "\n";
      }
      return out;
    }
    case Format::json: {
      ordered_json doc;
      doc["params"] = {{"side", side_name}, {"n", n}, {"k", k}};
      doc["records"] = ordered_json::array();
      for (const auto& rec : records) {
        ordered_json item;
        item["source"] = to_string(rec.source);
        item["source_k"] = rec.source_k;
        item["position"] = to_string(rec.position);
        item["image"] = to_string(rec.image);
        item["case"] = to_string(rec.label);
        doc["records"].push_back(std::move(item));
      }
      return dump_json(doc);
    }
  }
  fail(errc::internal, "unreachable");
}

std::string render_verify(const VerifyReport& report, Format format) {
  switch (format) {
    case Format::plain: {
      std::string out;
      for (const auto& cell : report.cells) {
        out += cell.pass ? "PASS " : "FAIL ";
        out += cell.suite + " n=" + std::to_string(cell.n);
        if (cell.k) out += " k=" + std::to_string(*cell.k);
        if (cell.j) out += " j=" + std::to_string(*cell.j);
        if (!cell.pass && !cell.lhs.empty())
          out += " lhs=" + cell.lhs + " rhs=" + cell.rhs;
        if (!cell.note.empty()) out += " note=" + cell.note;
        out += "\n";
      }
      const std::size_t total = report.cells.size();
      out += "passed " + std::to_string(total - report.failures()) + "/" +
             std::to_string(total) + " cells\n";
      return out;
    }
    case Format::csv: {
      std::string out = "suite,n,k,j,status,lhs,rhs,note\n";
      for (const auto& cell : report.cells) {
        out += cell.suite + "," + std::to_string(cell.n) + ",";
        out += (cell.k ? std::to_string(*cell.k) : "") + ",";
        out += (cell.j ? std::to_string(*cell.j) : "") + ",";
        out += cell.pass ? "pass" : "fail";
        out += "," + csv_field(cell.lhs) + "," + csv_field(cell.rhs) + "," +
               csv_field(cell.note) + "\n";
      }
      return out;
    }
    case Format::json: {
      ordered_json doc;
      doc["params"] = {{"suite", report.suite}, {"max_n", report.max_n}};
      doc["cells"] = ordered_json::array();
      for (const auto& cell : report.cells) {
        ordered_json item;
        item["suite"] = cell.suite;
        item["n"] = cell.n;
        if (cell.k) item["k"] = *cell.k;
        if (cell.j) item["j"] = *cell.j;
        item["pass"] = cell.pass;
        if (!cell.lhs.empty()) item["lhs"] = cell.lhs;
        if (!cell.rhs.empty()) item["rhs"] = cell.rhs;
        if (!cell.note.empty()) item["note"] = cell.note;
        doc["cells"].push_back(std::move(item));
      }
      doc["failed"] = report.failures();
      doc["passed"] = report.cells.size() - report.failures();
      doc["all_passed"] = report.all_passed();
      return dump_json(doc);
    }
  }
  fail(errc::internal, "unreachable");
}

}  // namespace geu
