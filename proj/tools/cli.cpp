#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <chipoly/congruence.hpp>
#include <chipoly/continuation.hpp>
#include <chipoly/errors.hpp>
#include <chipoly/psi.hpp>
#include <chipoly/roots.hpp>
#include <chipoly/special_values.hpp>

#include "parse.hpp"

namespace chipoly::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Options {
  std::string format = "text";
  std::string chi = "chi3";
  std::string poly;
  std::string roots;
  std::string m_range;
  std::optional<unsigned> m;
  std::size_t max_degree = 13;
  std::optional<unsigned> offset_a;
  std::string s;
  double eps = 1e-12;
  std::size_t max_terms = 10'000'000;
  std::string primes = "5";
  std::size_t periods = 2;
};

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw ParseError("unknown format '" + name + "'");
}

Json poly_map(const QPoly& poly) {
  Json map = Json::object();
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (!poly[k].is_zero()) map[std::to_string(k)] = poly[k].to_string();
  }
  return map;
}

Json complex_json(Complex z) { return Json{{"re", static_cast<double>(z.real())}, {"im", static_cast<double>(z.imag())}}; }

std::string complex_text(Complex z) {
  std::string out = format_real(z.real());
  out += std::signbit(z.imag()) ? " - " : " + ";
  out += format_real(std::abs(z.imag())) + "i";
  return out;
}

std::string csv_cell(const Json& value) {
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else if (value.is_null()) {
    text = "";
  } else if (value.is_number_float()) {
    text = format_real(value.get<double>());
  } else if (value.is_array()) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i > 0) text += "; ";
      text += csv_cell(value[i]);
    }
  } else if (value.is_object()) {
    bool first = true;
    for (const auto& [key, inner] : value.items()) {
      if (!first) text += ";";
      text += key + ":" + csv_cell(inner);
      first = false;
    }
  } else {
    text = value.dump();
  }
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// {re, im} objects become two columns; everything else is one cell.
void flatten(const Json& record, std::vector<std::string>& names, std::vector<std::string>& cells) {
  for (const auto& [key, value] : record.items()) {
    if (value.is_object() && value.size() == 2 && value.contains("re") && value.contains("im")) {
      names.push_back(key + "_re");
      cells.push_back(csv_cell(value["re"]));
      names.push_back(key + "_im");
      cells.push_back(csv_cell(value["im"]));
    } else {
      names.push_back(key);
      cells.push_back(csv_cell(value));
    }
  }
}

void write_csv(const Json& records, std::ostream& out) {
  std::vector<std::string> header;
  for (const auto& record : records) {
    std::vector<std::string> names;
    std::vector<std::string> cells;
    flatten(record, names, cells);
    if (names != header) {
      header = names;
      for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
      out << '\n';
    }
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  }
}

void write_table(const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string cell = row[i];
      if (i + 1 < row.size()) cell.resize(width[i], ' ');
      line += (i ? "  " : "") + cell;
    }
    out << line << '\n';
  }
}

// Result of one subcommand: machine records plus the text rendering.
struct Output {
  Json records = Json::array();
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> lines;
};

void emit(const Output& result, Format format, std::ostream& out) {
  switch (format) {
    case Format::json:
      out << result.records.dump(2) << '\n';
      break;
    case Format::csv:
      write_csv(result.records, out);
      break;
    case Format::text:
      write_table(result.table, out);
      for (const auto& line : result.lines) out << line << '\n';
      break;
  }
}

std::pair<unsigned, unsigned> m_bounds(const Options& o, unsigned default_lo) {
  if (!o.m_range.empty() && o.m) throw ParseError("--m and --m-range are mutually exclusive");
  if (!o.m_range.empty()) return parse_m_range(o.m_range);
  if (o.m) {
    if (*o.m < 1) throw ParseError("--m must be at least 1");
    return {default_lo == 0 ? *o.m : default_lo, *o.m};
  }
  throw ParseError("one of --m or --m-range is required");
}

Output cmd_psi(const Options& o) {
  const auto chi = parse_chi_spec(o.chi);
  const auto table = psi_table(chi, o.max_degree);
  Output result;
  result.table.push_back({"m", "Psi(X^m)"});
  for (std::size_t m = 0; m <= table.max_degree(); ++m) {
    const auto& value = table.moment(m);
    result.records.push_back({{"kind", "psi_moment"}, {"chi", chi.name()}, {"m", m}, {"value", value.to_string()}});
    result.table.push_back({std::to_string(m), value.to_string()});
  }
  return result;
}

Output cmd_lneg(const Options& o) {
  const auto chi = parse_chi_spec(o.chi);
  if (o.poly.empty()) throw ParseError("--poly is required");
  const auto poly = parse_poly_spec(o.poly);
  const unsigned offset = o.offset_a.value_or(1);
  validate_l_polynomial(poly, offset);
  const auto [lo, hi] = m_bounds(o, 0);
  const auto table = psi_table(chi, static_cast<std::size_t>(poly.degree()) * hi);
  Output result;
  result.table.push_back({"m", "s", "L(1-m)"});
  for (unsigned m = lo; m <= hi; ++m) {
    const auto value = l_negative({chi, poly, offset, m}, table);
    result.records.push_back({{"kind", "l_negative"},
                              {"chi", chi.name()},
                              {"poly", poly_map(poly)},
                              {"A", offset},
                              {"m", m},
                              {"s", 1 - static_cast<long>(m)},
                              {"value", value.to_string()}});
    result.table.push_back({std::to_string(m), std::to_string(1 - static_cast<long>(m)), value.to_string()});
  }
  result.lines.push_back("P = " + format_poly(poly, "X") + ", A = " + std::to_string(offset));
  return result;
}

Output cmd_family(const Options& o) {
  const auto chi = parse_chi_spec(o.chi);
  const auto [lo, hi] = m_bounds(o, 1);
  const auto table = psi_table(chi, 2 * static_cast<std::size_t>(hi));
  const auto family = family_range(family_shape_x_x_plus_u(), hi, table);
  Output result;
  result.table.push_back({"m", "p_m(u)"});
  for (unsigned m = lo; m <= hi; ++m) {
    const auto& p = family[m - 1].value;
    result.records.push_back({{"kind", "family_poly"}, {"chi", chi.name()}, {"m", m}, {"value", poly_map(p)}});
    result.table.push_back({std::to_string(m), format_poly(p, "u")});
  }
  return result;
}

Output cmd_eval(const Options& o) {
  const auto chi = parse_chi_spec(o.chi);
  if (o.s.empty()) throw ParseError("--s is required");
  if (o.poly.empty() && o.roots.empty()) throw ParseError("one of --poly or --roots is required");
  if (!(o.eps > 0)) throw ParseError("--eps must be positive");
  const Complex s = parse_complex(o.s);
  PlanOptions options;
  options.offset_a = o.offset_a;
  options.tail_epsilon = static_cast<Real>(o.eps);
  options.tail_max_terms = o.max_terms;

  ContinuationPlan plan = [&] {
    if (o.roots.empty()) return make_plan(chi, parse_poly_spec(o.poly), s, options);
    const auto roots = parse_complex_list(o.roots);
    if (o.poly.empty()) return make_plan(chi, roots, 1, s, options);
    const auto poly = parse_poly_spec(o.poly);
    validate_l_polynomial(poly, 1);
    if (static_cast<std::size_t>(poly.degree()) != roots.size()) {
      throw DomainError("--roots must list deg P roots");
    }
    auto from_roots = make_plan(chi, roots, poly.leading().to_long_double(), s, options);
    const auto coeffs = to_complex_coeffs(poly);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (std::abs(coeffs[k] - from_roots.coeffs[k]) > 1e-9L * std::max<Real>(1, std::abs(coeffs[k]))) {
        throw DomainError("--roots are not the roots of --poly");
      }
    }
    from_roots.coeffs = coeffs;
    return from_roots;
  }();

  const Complex value = evaluate_l(plan, s);
  Output result;
  Json record{{"kind", "eval_point"}, {"chi", chi.name()}};
  if (!o.poly.empty()) record["poly"] = poly_map(parse_poly_spec(o.poly));
  Json roots = Json::array();
  for (const auto& a : plan.roots) roots.push_back(complex_json(a));
  record["roots"] = roots;
  record["s"] = complex_json(s);
  record["value"] = complex_json(value);
  record["A"] = plan.offset_a;
  record["N"] = plan.taylor_order;
  record["eps"] = o.eps;
  result.records.push_back(record);
  result.table.push_back({"s", complex_text(s)});
  result.table.push_back({"L(s)", complex_text(value)});
  result.table.push_back({"A", std::to_string(plan.offset_a)});
  result.table.push_back({"N", std::to_string(plan.taylor_order)});
  return result;
}

Output cmd_congruence(const Options& o) {
  const auto chi = parse_chi_spec(o.chi);
  const auto primes = parse_unsigned_list(o.primes);
  if (o.periods == 0) throw ParseError("--periods must be at least 1");
  std::size_t needed = 0;
  for (const auto p : primes) {
    if (p <= 3 || !is_prime(p)) throw DomainError("congruence scans need primes p > 3, got " + std::to_string(p));
    needed = std::max(needed, congruence_term_count(p, o.periods));
  }
  // One family serves every prime.
  const auto table = psi_table(chi, 2 * needed);
  const auto family = family_range(family_shape_x_x_plus_u(), static_cast<unsigned>(needed), table);

  Output result;
  for (const auto p : primes) {
    const auto report = congruence_scan(chi.name(), family, p, o.periods);
    Json terms = Json::array();
    for (const auto& t : report.terms) terms.push_back(to_display(t));
    Json period = report.period_detected ? Json(*report.period_detected) : Json(nullptr);
    result.records.push_back({{"kind", "congruence_report"},
                              {"chi", report.chi_name},
                              {"p", p},
                              {"periods_checked", report.periods_checked},
                              {"preperiod", report.preperiod},
                              {"period_detected", period},
                              {"terms", terms}});
    result.lines.push_back(report.chi_name + " mod " + std::to_string(p) + ": " + display_list(report.terms));
    result.lines.push_back("  period " +
                           (report.period_detected ? std::to_string(*report.period_detected) : std::string("none")) +
                           " (preperiod " + std::to_string(report.preperiod) + ", " +
                           std::to_string(report.periods_checked) + " periods checked)");
  }
  return result;
}

void report_error(Format format, const std::string& category, const std::string& type, const std::string& message,
                  std::ostream& out, std::ostream& err) {
  Json record{{"kind", "error"}, {"category", category}, {"type", type}, {"message", message}};
  switch (format) {
    case Format::json:
      out << Json::array({record}).dump(2) << '\n';
      break;
    case Format::csv:
      write_csv(Json::array({record}), out);
      break;
    case Format::text:
      err << "error (" << type << "): " << message << '\n';
      break;
  }
}

std::string category_name(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::parse:
      return "parse";
    case ErrorCategory::domain:
      return "domain";
    case ErrorCategory::budget:
      return "budget";
  }
  return "domain";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact and numeric values of L_{chi,P}(s) = sum chi(n) P'(n) / P(n)^s", "chipoly"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format: text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* psi = app.add_subcommand("psi", "Moments Psi_chi(X^m) for m = 0..max-degree");
  auto* lneg = app.add_subcommand("lneg", "Exact L_{chi,P}(1 - m)");
  auto* family = app.add_subcommand("family", "p_m(u) = Psi_chi((X(X + u))^m) / m");
  auto* eval = app.add_subcommand("eval", "Numeric L_{chi,P}(s) anywhere in the complex plane");
  auto* congruence = app.add_subcommand("congruence", "p_m(u) modulo primes and their period");

  for (auto* sub : {psi, lneg, family, eval, congruence}) {
    sub->add_option("--chi", o.chi, "chi3, chi4, one, or period=N;values=v1,...,vN")->capture_default_str();
    sub->add_option("--format", o.format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  }
  psi->add_option("--max-degree", o.max_degree, "Largest m")->capture_default_str();

  lneg->add_option("--poly", o.poly, "Coefficients of P, lowest degree first")->required();
  lneg->add_option("--m", o.m, "Single m >= 1");
  lneg->add_option("--m-range", o.m_range, "Range a..b of m");
  lneg->add_option("--A", o.offset_a, "Sum from n = A (default 1)");

  family->add_option("--m", o.m, "Largest m; lists p_1..p_m");
  family->add_option("--m-range", o.m_range, "Range a..b of m");

  eval->add_option("--poly", o.poly, "Coefficients of P, lowest degree first");
  eval->add_option("--roots", o.roots, "Roots of P (monic unless --poly is given), e.g. 0,-1 or 1+2i,1-2i");
  eval->add_option("--s", o.s, "Evaluation point a+bi")->required();
  eval->add_option("--eps", o.eps, "Remainder tail tolerance")->capture_default_str();
  eval->add_option("--max-terms", o.max_terms, "Remainder tail budget")->capture_default_str();
  eval->add_option("--A", o.offset_a, "Continuation offset (default: automatic)");

  congruence->add_option("--p", o.primes, "Prime p > 3, or a comma separated list")->capture_default_str();
  congruence->add_option("--periods", o.periods, "Number of periods to check")->capture_default_str();

  Format format = Format::text;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    format = parse_format(o.format);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    // The format flag may not have been read yet; look for it directly.
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
      if (args[i] == "--format" && (args[i + 1] == "json" || args[i + 1] == "csv")) format = parse_format(args[i + 1]);
    }
    report_error(format, "parse", "ParseError", e.what(), out, err);
    return static_cast<int>(ErrorCategory::parse);
  }

  try {
    Output result;
    if (psi->parsed()) result = cmd_psi(o);
    if (lneg->parsed()) result = cmd_lneg(o);
    if (family->parsed()) result = cmd_family(o);
    if (eval->parsed()) result = cmd_eval(o);
    if (congruence->parsed()) result = cmd_congruence(o);
    emit(result, format, out);
    return 0;
  } catch (const Error& e) {
    report_error(format, category_name(e.category()), e.name(), e.what(), out, err);
    return static_cast<int>(e.category());
  } catch (const std::exception& e) {
    report_error(format, "domain", "Error", e.what(), out, err);
    return static_cast<int>(ErrorCategory::domain);
  }
}

}  // namespace chipoly::cli
