#include "tlfc_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "tlfc/bijection.hpp"
#include "tlfc/counting.hpp"
#include "tlfc/diagram.hpp"
#include "tlfc/error.hpp"
#include "tlfc/fc_element.hpp"
#include "tlfc/json.hpp"
#include "tlfc/lattice.hpp"
#include "tlfc/tl_algebra.hpp"
#include "tlfc_cli/verify.hpp"

namespace tlfc::cli {

namespace {

using nlohmann::json;

// Thrown for option combinations CLI11 cannot express.
struct UsageProblem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Csv, Json };

struct Options {
  int n = -1;
  std::optional<int> p;
  std::optional<int> start;
  std::optional<int> end;
  std::vector<int> first_block;
  std::vector<int> last_block;
  int max_n = 8;
  std::string format = "text";
  bool json = false;
  bool trace = false;
  bool narayana = false;
  bool triangle = false;
  bool brute = false;
  bool all = false;
  bool nb = false;
  std::string svg;
  std::string kind = "narayana";
  std::string from, to;
  std::vector<std::string> inputs;

  Format output() const {
    if (json || format == "json") return Format::Json;
    return format == "csv" ? Format::Csv : Format::Text;
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageProblem("cannot write '" + path + "'");
  file << content;
}

// Generic row/column table shared by `table` and `census`.
struct Table {
  std::string corner;
  std::vector<std::string> columns;
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;

  void print(std::ostream& out, Format format) const {
    if (format == Format::Json) {
      json j = {{"columns", columns}, {"rows", json::array()}};
      for (const auto& [label, cells] : rows) j["rows"].push_back({{corner, label}, {"values", cells}});
      out << j.dump() << '\n';
      return;
    }
    if (format == Format::Csv) {
      out << corner;
      for (const auto& c : columns) out << ',' << c;
      out << '\n';
      for (const auto& [label, cells] : rows) {
        out << label;
        for (const auto& c : cells) out << ',' << c;
        out << '\n';
      }
      return;
    }
    std::size_t width = 1, label_width = corner.size();
    for (const auto& c : columns) width = std::max(width, c.size());
    for (const auto& [label, cells] : rows) {
      label_width = std::max(label_width, label.size());
      for (const auto& c : cells) width = std::max(width, c.size());
    }
    const int w = static_cast<int>(width), lw = static_cast<int>(label_width);
    out << std::left << std::setw(lw) << corner << std::right;
    for (const auto& c : columns) out << ' ' << std::setw(w) << c;
    out << '\n';
    for (const auto& [label, cells] : rows) {
      out << std::left << std::setw(lw) << label << std::right;
      for (const auto& c : cells) out << ' ' << std::setw(w) << c;
      out << '\n';
    }
  }
};

std::vector<std::string> numbered(int from, int to) {
  std::vector<std::string> out;
  for (int k = from; k <= to; ++k) out.push_back(std::to_string(k));
  return out;
}

void require_rank(const Options& o) {
  if (o.n < 0) throw UsageProblem("--n must be nonnegative");
}

int cmd_enum(const Options& o, std::ostream& out) {
  require_rank(o);
  const auto elements = o.p ? enumerate_fc(o.n, *o.p) : enumerate_fc(o.n);
  switch (o.output()) {
    case Format::Json: {
      json j = json::array();
      for (const FCElement& w : elements) j.push_back(to_json(w));
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "element,size,length,shape\n";
      for (const FCElement& w : elements) {
        out << to_string(w) << ',' << w.size() << ',' << length(w) << ','
            << to_string(classify(w)) << '\n';
      }
      break;
    case Format::Text:
      for (const FCElement& w : elements) out << to_string(w) << '\n';
      break;
  }
  return Ok;
}

// Counting by constraints. Recognised combinations go to a closed formula;
// anything else, or --brute, filters the enumeration.
int cmd_count(const Options& o, std::ostream& out) {
  require_rank(o);
  const int n = o.n;
  if (!o.first_block.empty() && o.first_block.size() != 2) throw UsageProblem("--first-block takes I J");
  if (!o.last_block.empty() && o.last_block.size() != 2) throw UsageProblem("--last-block takes I J");

  auto brute = [&](const std::function<bool(const FCElement&)>& keep) {
    BigCount total = 0;
    for_each_fc(n, [&](const FCElement& w) {
      if (keep(w)) ++total;
    });
    return total;
  };
  auto print_row = [&](const std::vector<BigCount>& row, const std::string& name) {
    if (o.output() == Format::Json) {
      json values = json::array();
      for (const auto& v : row) values.push_back(v.str());
      out << json{{"n", n}, {"kind", name}, {"values", values}}.dump() << '\n';
      return;
    }
    const char sep = o.output() == Format::Csv ? ',' : ' ';
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? std::string(1, sep) : "") << row[k];
    out << '\n';
  };

  if (o.narayana || o.triangle) {
    std::vector<BigCount> row;
    for (int k = 0; k <= n; ++k) {
      if (o.narayana) {
        row.push_back(o.brute ? brute([&](const FCElement& w) { return static_cast<int>(w.size()) == k; })
                              : narayana(n, k));
      } else {
        row.push_back(o.brute ? brute([&](const FCElement& w) {
                                  return (w.is_identity() ? 0 : w.blocks().front().i) == k;
                                })
                              : triangle_start(n, k));
      }
    }
    print_row(row, o.narayana ? "narayana" : "triangle");
    return Ok;
  }

  const bool fb = !o.first_block.empty(), lb = !o.last_block.empty();
  std::optional<BigCount> formula;
  bool closed_form = true;
  const int mask = (o.p ? 1 : 0) | (o.start ? 2 : 0) | (o.end ? 4 : 0) | (fb ? 8 : 0) | (lb ? 16 : 0);
  switch (mask) {
    case 0: formula = catalan(n + 1); break;
    case 1: formula = narayana(n, *o.p); break;
    case 2: formula = triangle_start(n, *o.start); break;
    case 4: formula = triangle_end(n, *o.end); break;
    case 3: formula = count_start_size(n, *o.start, *o.p); break;
    case 5: formula = count_size_end(n, *o.p, *o.end); break;
    case 6: {
      const StartEndCount c = count_start_end(n, *o.start, *o.end);
      formula = c.value;
      closed_form = c.closed_form;
      break;
    }
    case 8: formula = count_first_block(n, o.first_block[0], o.first_block[1]); break;
    case 16: formula = count_last_block(n, o.last_block[0], o.last_block[1]); break;
    default: break;
  }

  const bool enumerate = o.brute || !formula;
  BigCount value;
  if (enumerate) {
    value = brute([&](const FCElement& w) {
      const auto b = w.blocks();
      if (o.p && static_cast<int>(b.size()) != *o.p) return false;
      if (o.start && (b.empty() ? 0 : b.front().i) != *o.start) return false;
      if (o.end && (b.empty() || b.back().j != *o.end)) return false;
      if (fb && (b.empty() || b.front() != Block{o.first_block[0], o.first_block[1]})) return false;
      if (lb && (b.empty() || b.back() != Block{o.last_block[0], o.last_block[1]})) return false;
      return true;
    });
  } else {
    value = *formula;
  }
  if (o.output() == Format::Json) {
    out << json{{"n", n},
                {"value", value.str()},
                {"method", enumerate ? "enumeration" : "formula"},
                {"closed_form", !enumerate && closed_form}}
               .dump()
        << '\n';
  } else {
    out << value << '\n';
  }
  return Ok;
}

int cmd_table(const Options& o, std::ostream& out) {
  require_rank(o);
  const int n = o.n;
  Table t;
  const std::string& k = o.kind;
  if (k == "narayana" || k == "triangle" || k == "triangle-end") {
    t.corner = "n";
    const int lo = k == "triangle-end" ? 1 : 0;
    t.columns = numbered(lo, n);
    for (int m = 0; m <= n; ++m) {
      std::vector<std::string> cells;
      for (int c = lo; c <= m; ++c) {
        const BigCount v = k == "narayana"   ? narayana(m, c)
                           : k == "triangle" ? triangle_start(m, c)
                                             : triangle_end(m, c);
        cells.push_back(v.str());
      }
      t.rows.emplace_back(std::to_string(m), std::move(cells));
    }
  } else {
    std::function<BigCount(int, int)> f;
    if (k == "first-block") {
      t.corner = "i1\\j1";
      f = [n](int a, int b) { return count_first_block(n, a, b); };
    } else if (k == "last-block") {
      t.corner = "ip\\jp";
      f = [n](int a, int b) { return count_last_block(n, a, b); };
    } else if (k == "start-size") {
      t.corner = "i\\p";
      f = [n](int a, int b) { return count_start_size(n, a, b); };
    } else if (k == "size-end") {
      t.corner = "p\\j";
      f = [n](int a, int b) { return count_size_end(n, a, b); };
    } else {
      t.corner = "i\\j";
      f = [n](int a, int b) { return count_start_end(n, a, b).value; };
    }
    t.columns = numbered(1, n);
    for (int a = 1; a <= n; ++a) {
      std::vector<std::string> cells;
      for (int b = 1; b <= n; ++b) cells.push_back(f(a, b).str());
      t.rows.emplace_back(std::to_string(a), std::move(cells));
    }
  }
  t.print(out, o.output());
  return Ok;
}

const std::string& single_input(const Options& o) {
  if (o.inputs.size() != 1) throw UsageProblem("expected exactly one input");
  return o.inputs.front();
}

int cmd_to_diagram(const Options& o, std::ostream& out) {
  const FCElement w = parse_fc(single_input(o));
  const TracedDiagram td = fc_to_diagram_traced(w);
  if (!o.svg.empty()) write_file(o.svg, render_svg(td.diagram, to_string(w)));
  if (o.output() == Format::Json) {
    json j = {{"element", to_json(w)}, {"diagram", to_json(td.diagram)}, {"text", to_string(td.diagram)}};
    if (o.trace) j["trace"] = to_json(td.trace);
    out << j.dump() << '\n';
    return Ok;
  }
  out << to_string(td.diagram) << '\n';
  if (o.trace) out << to_json(td.trace).dump(2) << '\n';
  return Ok;
}

int cmd_to_fc(const Options& o, std::ostream& out) {
  const Diagram d = parse_diagram(single_input(o));
  const FCElement w = diagram_to_fc(d);
  if (o.output() == Format::Json) {
    out << json{{"element", to_json(w)}, {"text", to_string(w)}}.dump() << '\n';
  } else {
    out << to_string(w) << '\n';
  }
  return Ok;
}

int cmd_mul(const Options& o, std::ostream& out) {
  if (o.inputs.size() != 2) throw UsageProblem("mul takes two elements");
  const MonomialProduct m = monomial_product(parse_fc(o.inputs[0]), parse_fc(o.inputs[1]));
  if (o.output() == Format::Json) {
    out << json{{"loops", m.loops}, {"element", to_json(m.element)}, {"text", to_string(m.element)}}.dump()
        << '\n';
  } else {
    out << "delta^" << m.loops << " * " << to_string(m.element) << '\n';
  }
  return Ok;
}

int cmd_convert(const Options& o, std::ostream& out) {
  const std::string& input = single_input(o);
  if (o.nb && o.to != "ballot") throw UsageProblem("--nb needs --to ballot");
  std::optional<Diagram> diagram;
  FCElement w;
  if (o.from == "fc") {
    w = parse_fc(input);
  } else if (o.from == "dyck") {
    w = dyck_to_fc(parse_dyck(input));
  } else if (o.from == "ballot") {
    w = dyck_to_fc(ballot_to_dyck(parse_ballot(input)));
  } else {
    diagram = parse_diagram(input);
    w = diagram_to_fc(*diagram);
  }
  std::string result;
  if (o.to == "fc") {
    result = to_string(w);
  } else if (o.to == "dyck") {
    result = to_string(fc_to_dyck(w));
  } else if (o.to == "ballot") {
    result = o.nb ? to_string(diagram_to_ballot(diagram ? *diagram : fc_to_diagram(w)))
                  : to_string(fc_to_ballot(w));
  } else {
    result = to_string(fc_to_diagram(w));
  }
  if (o.output() == Format::Json) {
    out << json{{"from", o.from}, {"to", o.to}, {"input", input}, {"output", result}}.dump() << '\n';
  } else {
    out << result << '\n';
  }
  return Ok;
}

int cmd_render(const Options& o, std::ostream& out) {
  const std::string& input = single_input(o);
  const bool is_fc = input.find("n=") != std::string::npos && input.find("strings=") == std::string::npos;
  const Diagram d = is_fc ? fc_to_diagram(parse_fc(input)) : parse_diagram(input);
  const std::string caption = is_fc ? to_string(parse_fc(input)) : to_string(d);
  const std::string svg = render_svg(d, caption);
  if (o.svg.empty()) {
    out << svg;
  } else {
    write_file(o.svg, svg);
    out << "wrote " << o.svg << '\n';
  }
  return Ok;
}

int cmd_census(const Options& o, std::ostream& out) {
  require_rank(o);
  if (!o.p) throw UsageProblem("census needs --p");
  const auto classes = census(o.n, *o.p);
  BigCount total = 0;
  for (const CensusClass& c : classes) total += c.size;
  switch (o.output()) {
    case Format::Json: {
      json j = {{"n", o.n}, {"p", *o.p}, {"total", total.str()}, {"classes", json::array()}};
      for (const CensusClass& c : classes) {
        j["classes"].push_back({{"key", key_to_string(c.key)},
                                {"size", c.size.str()},
                                {"catalan_product", c.catalan_product.str()}});
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "key,size,catalan_product\n";
      for (const CensusClass& c : classes) {
        out << '"' << key_to_string(c.key) << "\"," << c.size << ',' << c.catalan_product << '\n';
      }
      break;
    case Format::Text:
      for (const CensusClass& c : classes) {
        out << std::setw(6) << c.size.str() << "  " << key_to_string(c.key) << '\n';
      }
      out << "total " << total << " in " << classes.size() << " classes\n";
      break;
  }
  return Ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<const Suite*> chosen;
  if (o.all) {
    for (const Suite& s : suites()) chosen.push_back(&s);
  }
  for (const std::string& name : o.inputs) {
    const Suite* s = find_suite(name);
    if (!s) {
      std::string known;
      for (const Suite& k : suites()) known += " " + k.name;
      throw UsageProblem("unknown suite '" + name + "'; known:" + known);
    }
    if (std::find(chosen.begin(), chosen.end(), s) == chosen.end()) chosen.push_back(s);
  }
  if (chosen.empty()) throw UsageProblem("name a suite or pass --all");
  if (o.max_n < 0) throw UsageProblem("--max-n must be nonnegative");
  bool ok = true;
  json report = json::array();
  for (const Suite* s : chosen) {
    const SuiteResult r = s->run(o.max_n);
    ok = ok && r.passed();
    if (o.output() == Format::Json) {
      report.push_back({{"suite", r.name},
                        {"passed", r.passed()},
                        {"checks", r.checks},
                        {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)}});
    } else if (r.passed()) {
      out << "PASS " << r.name << " (" << r.checks << " checks)\n";
    } else {
      out << "FAIL " << r.name << ": " << *r.counterexample << '\n';
    }
  }
  if (o.output() == Format::Json) out << report.dump() << '\n';
  return ok ? Ok : DomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fully commutative elements of type A and Temperley-Lieb diagrams", "tlfc"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&o](CLI::App* sub, bool csv) {
    std::vector<std::string> formats{"text", "json"};
    if (csv) formats.push_back("csv");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_flag("--json", o.json, "Same as --format json");
  };

  auto* enum_cmd = app.add_subcommand("enum", "List the elements of rank n");
  enum_cmd->add_option("--n", o.n, "Rank")->required();
  enum_cmd->add_option("--p", o.p, "Only elements of this size");
  add_format(enum_cmd, true);

  auto* count_cmd = app.add_subcommand("count", "Count elements, optionally constrained");
  count_cmd->add_option("--n", o.n, "Rank")->required();
  count_cmd->add_option("--p", o.p, "Size");
  count_cmd->add_option("--start", o.start, "First generator i_1 (0 selects the identity)");
  count_cmd->add_option("--end", o.end, "Last generator j_p");
  count_cmd->add_option("--first-block", o.first_block, "First block I J")->expected(2);
  count_cmd->add_option("--last-block", o.last_block, "Last block I J")->expected(2);
  auto* nar = count_cmd->add_flag("--narayana", o.narayana, "Print the counts by size");
  count_cmd->add_flag("--triangle", o.triangle, "Print the counts by first generator")->excludes(nar);
  count_cmd->add_flag("--brute", o.brute, "Count by enumeration");
  add_format(count_cmd, true);

  auto* table_cmd = app.add_subcommand("table", "Print a counting table");
  table_cmd->add_option("--n", o.n, "Largest rank, or the rank of a two-parameter grid")->required();
  table_cmd->add_option("--kind", o.kind, "Table to print")
      ->check(CLI::IsMember({"narayana", "triangle", "triangle-end", "first-block", "last-block",
                             "start-size", "size-end", "start-end"}));
  add_format(table_cmd, true);

  auto* to_diagram_cmd = app.add_subcommand("to-diagram", "Draw the diagram of an element");
  to_diagram_cmd->add_option("element", o.inputs, "Element, e.g. n=5:[4,5][3,3][1,1]")->required();
  to_diagram_cmd->add_flag("--trace", o.trace, "Show the construction steps as JSON");
  to_diagram_cmd->add_option("--svg", o.svg, "Also write an SVG drawing");
  add_format(to_diagram_cmd, false);

  auto* to_fc_cmd = app.add_subcommand("to-fc", "Read the element of a diagram");
  to_fc_cmd->add_option("diagram", o.inputs, "Diagram, e.g. strings=2;1-2,1'-2'")->required();
  add_format(to_fc_cmd, false);

  auto* mul_cmd = app.add_subcommand("mul", "Multiply two monomials");
  mul_cmd->add_option("elements", o.inputs, "Two elements of equal rank")->required()->expected(2);
  add_format(mul_cmd, false);

  const std::vector<std::string> kinds{"fc", "dyck", "ballot", "diagram"};
  auto* convert_cmd = app.add_subcommand("convert", "Convert between elements, paths, ballots, diagrams");
  convert_cmd->add_option("--from", o.from)->required()->check(CLI::IsMember(kinds));
  convert_cmd->add_option("--to", o.to)->required()->check(CLI::IsMember(kinds));
  convert_cmd->add_flag("--nb", o.nb, "Read the ballot straight off the diagram");
  convert_cmd->add_option("value", o.inputs)->required();
  add_format(convert_cmd, false);

  auto* render_cmd = app.add_subcommand("render", "Render a diagram or element as SVG");
  render_cmd->add_option("input", o.inputs, "Element or diagram")->required();
  render_cmd->add_option("--svg", o.svg, "Output file (default: stdout)");

  auto* census_cmd = app.add_subcommand("census", "Group the size-p elements by cross-row arrows");
  census_cmd->add_option("--n", o.n, "Rank")->required();
  census_cmd->add_option("--p", o.p, "Size")->required();
  add_format(census_cmd, true);

  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("suites", o.inputs, "Suite names");
  verify_cmd->add_flag("--all", o.all, "Run every suite");
  verify_cmd->add_option("--max-n", o.max_n, "Largest rank to sweep");
  add_format(verify_cmd, false);

  const std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> dispatch{
      {enum_cmd, cmd_enum},         {count_cmd, cmd_count},   {table_cmd, cmd_table},
      {to_diagram_cmd, cmd_to_diagram}, {to_fc_cmd, cmd_to_fc}, {mul_cmd, cmd_mul},
      {convert_cmd, cmd_convert},   {render_cmd, cmd_render}, {census_cmd, cmd_census},
      {verify_cmd, cmd_verify},
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : UsageError;
  }

  try {
    for (const auto& [sub, handler] : dispatch) {
      if (sub->parsed()) return handler(o, out);
    }
    return UsageError;
  } catch (const UsageProblem& e) {
    err << "usage error: " << e.what() << '\n';
    return UsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return DomainError;
  }
}

}  // namespace tlfc::cli
