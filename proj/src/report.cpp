#include "gridcycles/report.hpp"

#include <sstream>

#include "json.hpp"

#include "gridcycles/errors.hpp"
#include "gridcycles/symmetry_algebra.hpp"

namespace gridcycles::report {

namespace {

using nlohmann::json;

const char* mode_name(transfer::Mode mode) {
  return mode == transfer::Mode::unrestricted ? "unrestricted" : "reflective";
}

std::string join_composition(const std::vector<int>& parts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << '+';
    out << parts[i];
  }
  return out.str();
}

std::string dump(const json& doc) { return doc.dump() + "\n"; }

json counts_object(const SymmetryCounts& c) {
  return json{{"A", to_decimal(c.A)}, {"B", to_decimal(c.B)},
              {"C", to_decimal(c.C)}, {"D", to_decimal(c.D)},
              {"E", to_decimal(c.E)}, {"F", to_decimal(c.F)}};
}

json classes_object(const ClassCounts& c) {
  return json{{"u", to_decimal(c.u)}, {"v", to_decimal(c.v)},
              {"w", to_decimal(c.w)}, {"x", to_decimal(c.x)},
              {"y", to_decimal(c.y)}, {"z", to_decimal(c.z)}};
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::plain;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw invalid_operation_error("unknown output format: " + name);
}

std::string render(const CountReport& r, Format format) {
  switch (format) {
    case Format::plain: {
      std::ostringstream out;
      if (r.values.size() == 1) {
        out << to_decimal(r.values.front().second) << "\n";
      } else {
        for (std::size_t i = 0; i < r.values.size(); ++i) {
          if (i) out << ' ';
          out << r.values[i].first << '=' << to_decimal(r.values[i].second);
        }
        out << "\n";
      }
      return out.str();
    }
    case Format::csv: {
      std::ostringstream out;
      out << "symmetry,count\n";
      for (const auto& [symmetry, value] : r.values)
        out << symmetry << ',' << to_decimal(value) << "\n";
      return out.str();
    }
    case Format::json: {
      json counts = json::object();
      for (const auto& [symmetry, value] : r.values)
        counts[std::string(1, symmetry)] = to_decimal(value);
      return dump(json{{"command", "count"},
                       {"n", r.n},
                       {"grid", {{"rows", 2 * r.n}, {"cols", 2 * r.n}}},
                       {"counts", counts},
                       {"checked", r.checked}});
    }
  }
  throw invalid_operation_error("unhandled output format");
}

std::string render(const ClassesReport& r, Format format) {
  switch (format) {
    case Format::plain: {
      std::ostringstream out;
      out << "u=" << to_decimal(r.classes.u) << " v=" << to_decimal(r.classes.v)
          << " w=" << to_decimal(r.classes.w) << " x=" << to_decimal(r.classes.x)
          << " y=" << to_decimal(r.classes.y) << " z=" << to_decimal(r.classes.z)
          << "\n";
      if (r.with_oeis) {
        bool first = true;
        for (const auto& [name, value] : algebra::oeis_row(r.counts, r.classes)) {
          if (!first) out << ' ';
          first = false;
          out << name << '=' << to_decimal(value);
        }
        out << "\n";
      }
      return out.str();
    }
    case Format::csv: {
      std::ostringstream out;
      out << "key,value\n";
      const std::pair<const char*, const BigCount*> rows[] = {
          {"A", &r.counts.A},  {"B", &r.counts.B},  {"C", &r.counts.C},
          {"D", &r.counts.D},  {"E", &r.counts.E},  {"F", &r.counts.F},
          {"u", &r.classes.u}, {"v", &r.classes.v}, {"w", &r.classes.w},
          {"x", &r.classes.x}, {"y", &r.classes.y}, {"z", &r.classes.z}};
      for (const auto& [key, value] : rows)
        out << key << ',' << to_decimal(*value) << "\n";
      out << "total," << to_decimal(r.classes.total()) << "\n";
      if (r.with_oeis)
        for (const auto& [name, value] : algebra::oeis_row(r.counts, r.classes))
          out << name << ',' << to_decimal(value) << "\n";
      return out.str();
    }
    case Format::json: {
      json doc{{"command", "classes"},
               {"n", r.n},
               {"counts", counts_object(r.counts)},
               {"classes", classes_object(r.classes)},
               {"total", to_decimal(r.classes.total())}};
      if (r.with_oeis) {
        json oeis = json::object();
        for (const auto& [name, value] : algebra::oeis_row(r.counts, r.classes))
          oeis[name] = to_decimal(value);
        doc["oeis"] = oeis;
      }
      return dump(doc);
    }
  }
  throw invalid_operation_error("unhandled output format");
}

std::string render(const CensusReport& r, Format format) {
  switch (format) {
    case Format::plain: {
      std::ostringstream out;
      out << "states=" << r.census.states
          << " continuations=" << r.census.continuations << "\n";
      return out.str();
    }
    case Format::csv: {
      std::ostringstream out;
      out << "n,mode,states,continuations\n"
          << r.n << ',' << mode_name(r.mode) << ',' << r.census.states << ','
          << r.census.continuations << "\n";
      return out.str();
    }
    case Format::json:
      return dump(json{{"command", "census"},
                       {"n", r.n},
                       {"mode", mode_name(r.mode)},
                       {"states", r.census.states},
                       {"continuations", r.census.continuations}});
  }
  throw invalid_operation_error("unhandled output format");
}

std::string render(const FromStartReport& r, Format format) {
  BigCount total = 0;
  for (const auto& row : r.rows) total += row.count;
  switch (format) {
    case Format::plain: {
      std::ostringstream out;
      for (const auto& row : r.rows)
        out << row.state.code() << ' ' << join_composition(row.composition)
            << ' ' << to_decimal(row.count) << "\n";
      out << "total " << to_decimal(total) << "\n";
      return out.str();
    }
    case Format::csv: {
      std::ostringstream out;
      out << "state,composition,count\n";
      for (const auto& row : r.rows)
        out << row.state.code() << ',' << join_composition(row.composition)
            << ',' << to_decimal(row.count) << "\n";
      return out.str();
    }
    case Format::json: {
      json rows = json::array();
      for (const auto& row : r.rows)
        rows.push_back(json{{"state", row.state.code()},
                            {"composition", row.composition},
                            {"count", to_decimal(row.count)}});
      return dump(json{{"command", "from-start"},
                       {"n", r.n},
                       {"rows", rows},
                       {"total", to_decimal(total)}});
    }
  }
  throw invalid_operation_error("unhandled output format");
}

std::string render(const RectReport& r, Format format) {
  switch (format) {
    case Format::plain:
      return to_decimal(r.count) + "\n";
    case Format::csv: {
      std::ostringstream out;
      out << "width,height,count\n"
          << r.width << ',' << r.height << ',' << to_decimal(r.count) << "\n";
      return out.str();
    }
    case Format::json:
      return dump(json{{"command", "rect"},
                       {"width", r.width},
                       {"height", r.height},
                       {"count", to_decimal(r.count)}});
  }
  throw invalid_operation_error("unhandled output format");
}

}  // namespace gridcycles::report
