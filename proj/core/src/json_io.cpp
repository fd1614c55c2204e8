#include "omlab/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "omlab/errors.hpp"

namespace omlab {
namespace {

using nlohmann::json;

const json& need(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

std::size_t positive_dim(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() <= 0)
    throw ParseError(where + ": expected a positive integer");
  return static_cast<std::size_t>(j.get<long long>());
}

double finite_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(where + ": value is not finite");
  return v;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected a matrix object");
  std::size_t rows = positive_dim(need(j, "rows", where), where + ".rows");
  std::size_t cols = positive_dim(need(j, "cols", where), where + ".cols");
  const json& data = need(j, "data", where);
  if (!data.is_array() || data.size() != rows)
    throw ParseError(where + ".data: expected " + std::to_string(rows) + " row arrays");
  std::vector<cplx> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = data[i];
    std::string row_where = where + ".data[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != cols)
      throw ParseError(row_where + ": expected " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) {
      const json& e = row[k];
      std::string e_where = row_where + "[" + std::to_string(k) + "]";
      if (!e.is_array() || e.size() != 2)
        throw ParseError(e_where + ": expected [re, im]");
      entries.emplace_back(finite_number(e[0], e_where + "[0]"),
                           finite_number(e[1], e_where + "[1]"));
    }
  }
  return ComplexMatrix(rows, cols, entries);
}

json parse_text(const std::string& text, const std::string& where) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(where + ": malformed JSON");
  return j;
}

void append_escaped(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

// min_slack is +inf when a check never applied; JSON has no inf literal.
std::string real_or_null(double v) { return std::isfinite(v) ? format_real(v) : "null"; }

std::string bool_lit(bool b) { return b ? "true" : "false"; }

const char* kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::inequality: return "inequality";
    case CheckKind::equality: return "equality";
    case CheckKind::two_sided: return "two_sided";
  }
  return "inequality";
}

void append_params(std::string& out, double tol, const CheckParams& params) {
  out += "\"tol\":" + format_real(tol) + ",\"t\":" + format_real(params.t) + ",\"pair\":";
  append_escaped(out, params.pair.label);
}

void append_aggregate(std::string& out, const CheckAggregate& agg) {
  out += "{\"id\":";
  append_escaped(out, agg.check->id);
  out += ",\"paper_location\":";
  append_escaped(out, agg.check->paper_location);
  out += ",\"kind\":\"";
  out += kind_name(agg.check->kind);
  out += "\",\"expected_falsifiable\":" + bool_lit(agg.check->expected_falsifiable);
  out += ",\"applicable_count\":" + std::to_string(agg.applicable);
  out += ",\"violations\":" + std::to_string(agg.violations);
  out += ",\"min_slack\":" + real_or_null(agg.min_slack);
  out += ",\"mean_slack\":" + (agg.applicable ? format_real(agg.mean_slack) : "null");
  out += ",\"worst_witness\":[";
  for (std::size_t i = 0; i < agg.worst_witness.size(); ++i) {
    if (i) out += ',';
    out += matrix_to_json(agg.worst_witness[i]);
  }
  out += "]}";
}

// CSV fields holding commas or quotes get quoted, embedded quotes doubled.
std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string matrix_to_json(const ComplexMatrix& m) {
  std::string out = "{\"rows\":" + std::to_string(m.rows()) +
                    ",\"cols\":" + std::to_string(m.cols()) + ",\"data\":[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += '[' + format_real(m(i, j).real()) + ',' + format_real(m(i, j).imag()) + ']';
    }
    out += ']';
  }
  out += "]}";
  return out;
}

ComplexMatrix matrix_from_json_text(const std::string& text) {
  return matrix_from_json(parse_text(text, "input"), "input");
}

LoadedInput load_input_file(const std::string& path) {
  json j = parse_text(read_file(path), path);
  LoadedInput loaded;
  if (j.is_object() && j.contains("t11")) {
    loaded.block = Block2x2(matrix_from_json(need(j, "t11", path), path + ".t11"),
                            matrix_from_json(need(j, "t12", path), path + ".t12"),
                            matrix_from_json(need(j, "t21", path), path + ".t21"),
                            matrix_from_json(need(j, "t22", path), path + ".t22"));
  } else {
    loaded.matrix = matrix_from_json(j, path);
  }
  return loaded;
}

std::string check_report_json(const std::vector<CheckRow>& rows, double tol,
                              const CheckParams& params) {
  std::string out = "{\"kind\":\"check\",";
  append_params(out, tol, params);
  out += ",\"checks\":[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CheckRow& row = rows[i];
    if (i) out += ',';
    out += "{\"id\":";
    append_escaped(out, row.check->id);
    out += ",\"paper_location\":";
    append_escaped(out, row.check->paper_location);
    out += ",\"kind\":\"";
    out += kind_name(row.check->kind);
    out += "\",\"expected_falsifiable\":" + bool_lit(row.check->expected_falsifiable);
    out += ",\"applicable\":" + bool_lit(row.applicable);
    if (row.result) {
      out += ",\"lhs\":" + format_real(row.result->lhs);
      out += ",\"rhs\":" + format_real(row.result->rhs);
      out += ",\"slack\":" + format_real(row.result->slack);
      out += ",\"holds\":" + bool_lit(row.result->holds);
    }
    out += '}';
  }
  out += "]}\n";
  return out;
}

std::string check_report_csv(const std::vector<CheckRow>& rows) {
  std::string out = "id,paper_location,applicable,lhs,rhs,slack,holds\n";
  for (const CheckRow& row : rows) {
    out += csv_field(row.check->id) + ',' + csv_field(row.check->paper_location) + ',';
    out += bool_lit(row.applicable);
    if (row.result) {
      out += ',' + format_real(row.result->lhs) + ',' + format_real(row.result->rhs) + ',' +
             format_real(row.result->slack) + ',' + bool_lit(row.result->holds);
    } else {
      out += ",,,,";
    }
    out += '\n';
  }
  return out;
}

std::string sweep_report_json(const SweepReport& report) {
  std::string out = "{\"kind\":\"sweep\",\"class\":";
  append_escaped(out, to_string(report.spec.klass));
  out += ",\"block_dim\":" + std::to_string(report.spec.block_dim);
  out += ",\"scale\":" + format_real(report.spec.scale);
  out += ",\"seed\":" + std::to_string(report.spec.seed);
  out += ",\"trials\":" + std::to_string(report.trials) + ',';
  append_params(out, report.tol, report.params);
  out += ",\"violation_total\":" + std::to_string(report.violation_total());
  out += ",\"checks\":[";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    if (i) out += ',';
    append_aggregate(out, report.checks[i]);
  }
  out += "],\"probe\":";
  append_aggregate(out, report.probe);
  out += "}\n";
  return out;
}

std::string sweep_report_csv(const SweepReport& report) {
  std::string out = "id,paper_location,applicable_count,violations,min_slack,mean_slack\n";
  auto row = [&out](const CheckAggregate& agg) {
    out += csv_field(agg.check->id) + ',' + csv_field(agg.check->paper_location) + ',';
    out += std::to_string(agg.applicable) + ',' + std::to_string(agg.violations) + ',';
    out += (std::isfinite(agg.min_slack) ? format_real(agg.min_slack) : "") + ',';
    out += agg.applicable ? format_real(agg.mean_slack) : "";
    out += '\n';
  };
  for (const CheckAggregate& agg : report.checks) row(agg);
  row(report.probe);
  return out;
}

std::string sharpness_report_json(std::string_view check_id, const SampleSpec& spec,
                                  std::size_t restarts, std::size_t iterations, double tol,
                                  const CheckParams& params, const SharpnessResult& result) {
  std::string out = "{\"kind\":\"sharpness\",\"check\":";
  append_escaped(out, check_id);
  out += ",\"class\":";
  append_escaped(out, to_string(spec.klass));
  out += ",\"block_dim\":" + std::to_string(spec.block_dim);
  out += ",\"scale\":" + format_real(spec.scale);
  out += ",\"seed\":" + std::to_string(spec.seed);
  out += ",\"restarts\":" + std::to_string(restarts);
  out += ",\"iterations\":" + std::to_string(iterations) + ',';
  append_params(out, tol, params);
  out += ",\"restart\":" + std::to_string(result.restart);
  out += ",\"result\":{\"lhs\":" + format_real(result.result.lhs);
  out += ",\"rhs\":" + format_real(result.result.rhs);
  out += ",\"slack\":" + format_real(result.result.slack);
  out += ",\"holds\":" + bool_lit(result.result.holds) + '}';
  out += ",\"witness\":" + matrix_to_json(result.witness);
  out += "}\n";
  return out;
}

std::vector<ComplexMatrix> witness_from_report_json(const std::string& text,
                                                    const std::string& check_id) {
  json j = parse_text(text, "report");
  std::string kind = need(j, "kind", "report").get<std::string>();
  if (kind == "sharpness")
    return {matrix_from_json(need(j, "witness", "report"), "report.witness")};
  if (kind != "sweep") throw ParseError("report: kind '" + kind + "' carries no witness");
  auto extract = [](const json& agg, const std::string& where) {
    const json& list = need(agg, "worst_witness", where);
    if (!list.is_array()) throw ParseError(where + ".worst_witness: expected an array");
    std::vector<ComplexMatrix> out;
    for (std::size_t i = 0; i < list.size(); ++i)
      out.push_back(
          matrix_from_json(list[i], where + ".worst_witness[" + std::to_string(i) + "]"));
    return out;
  };
  for (const json& agg : need(j, "checks", "report"))
    if (need(agg, "id", "report.checks").get<std::string>() == check_id)
      return extract(agg, "report.checks");
  const json& probe = need(j, "probe", "report");
  if (need(probe, "id", "report.probe").get<std::string>() == check_id)
    return extract(probe, "report.probe");
  throw ParseError("report: no check named '" + check_id + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace omlab
