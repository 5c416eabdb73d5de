#include "projzero/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "projzero/errors.hpp"

namespace projzero::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
  }
  return out;
}

std::pair<std::string_view, std::string_view> keyword(std::string_view line) {
  std::size_t sp = 0;
  while (sp < line.size() && !std::isspace(static_cast<unsigned char>(line[sp]))) ++sp;
  return {line.substr(0, sp), trim(line.substr(sp))};
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what, ExitCode code = ExitCode::input_error) {
  throw Error(code, "line " + std::to_string(line) + ": " + what);
}

struct Header {
  std::optional<Field> field;
  std::vector<std::string> vars;
  std::optional<std::string> order;
  std::optional<std::vector<std::string>> ranking;
  std::optional<std::size_t> coords;
};

// Consumes header lines; returns the index of the first data line.
std::size_t read_header(const std::vector<Line>& lines, Header& h, bool points) {
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    auto [key, rest] = keyword(lines[i].text);
    try {
      if (key == "field") {
        h.field = Field::parse(rest);
      } else if (key == "vars") {
        h.vars = split_names(rest);
      } else if (key == "order") {
        h.order = std::string(rest);
      } else if (key == "ranking") {
        h.ranking = split_names(rest);
      } else if (points && key == "coords") {
        h.coords = std::stoul(std::string(rest));
      } else {
        break;
      }
    } catch (const Error& e) {
      fail_at(lines[i].number, e.what(), e.code());
    } catch (const std::exception&) {
      fail_at(lines[i].number, "malformed header '" + std::string(lines[i].text) + "'");
    }
  }
  return i;
}

Ring make_ring(const Header& h, const OrderOverride& override) {
  std::string kind = override.kind.value_or(h.order.value_or("degrevlex"));
  std::vector<std::string> ranking = override.ranking.value_or(h.ranking.value_or(h.vars));
  return Ring(*h.field, h.vars, make_order(h.vars, kind, ranking));
}

}  // namespace

std::vector<std::string> split_names(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == '>' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

MonomialOrder make_order(const std::vector<std::string>& vars, std::string_view kind,
                         const std::vector<std::string>& ranking) {
  MonomialOrder::Kind k;
  if (kind == "degrevlex" || kind == "grevlex" || kind == "drl")
    k = MonomialOrder::Kind::degrevlex;
  else if (kind == "lex" || kind == "plex")
    k = MonomialOrder::Kind::lex;
  else
    throw Error(ExitCode::input_error, "unknown monomial order '" + std::string(kind) + "'");
  if (ranking.size() != vars.size())
    throw Error(ExitCode::input_error, "variable ranking must list every variable exactly once");
  std::vector<std::size_t> idx;
  for (const auto& name : ranking) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw UnknownVariable(name);
    idx.push_back(static_cast<std::size_t>(it - vars.begin()));
  }
  return MonomialOrder(k, idx);
}

IdealPresentation parse_ideal(std::string_view text, const OrderOverride& override) {
  auto lines = content_lines(text);
  Header h;
  std::size_t first = read_header(lines, h, false);
  if (!h.field) throw Error(ExitCode::input_error, "ideal file lacks a 'field' header");
  if (h.vars.empty()) throw Error(ExitCode::input_error, "ideal file lacks a 'vars' header");
  Ring ring = make_ring(h, override);
  std::vector<Form> gens;
  for (std::size_t i = first; i < lines.size(); ++i) {
    std::string_view g = lines[i].text;
    while (!g.empty() && (g.back() == ',' || g.back() == ';')) g.remove_suffix(1);
    try {
      gens.push_back(parse_form(g, ring));
    } catch (const Error& e) {
      fail_at(lines[i].number, e.what(), e.code());
    }
  }
  return IdealPresentation(std::move(ring), std::move(gens));
}

PointsInput parse_points(std::string_view text, const OrderOverride& override) {
  auto lines = content_lines(text);
  Header h;
  std::size_t first = read_header(lines, h, true);
  if (!h.field) throw Error(ExitCode::input_error, "points file lacks a 'field' header");
  if (!h.coords && h.vars.empty()) throw Error(ExitCode::input_error, "points file lacks a 'coords' header");
  std::size_t n = h.coords.value_or(h.vars.size());
  if (h.vars.empty())
    for (std::size_t i = 0; i < n; ++i) h.vars.push_back("x" + std::to_string(i));
  if (h.vars.size() != n) throw Error(ExitCode::input_error, "'vars' and 'coords' disagree");
  PointsInput out{make_ring(h, override), {}};
  for (std::size_t i = first; i < lines.size(); ++i) {
    std::string cleaned;
    for (char c : lines[i].text) cleaned += (c == ':' || c == ',' || c == '(' || c == ')') ? ' ' : c;
    std::istringstream is(cleaned);
    Vector p;
    std::string tok;
    try {
      while (is >> tok) p.push_back(h.field->parse_element(tok));
    } catch (const Error& e) {
      fail_at(lines[i].number, e.what(), e.code());
    }
    if (p.size() != n)
      fail_at(lines[i].number, "expected " + std::to_string(n) + " coordinates, found " + std::to_string(p.size()));
    out.raw.push_back(std::move(p));
  }
  if (out.raw.empty()) throw Error(ExitCode::input_error, "points file has no points");
  return out;
}

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ExitCode::input_error, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string write_ideal(const IdealPresentation& I) {
  std::ostringstream os;
  os << "field " << I.ring.field.to_string() << "\nvars";
  for (const auto& v : I.ring.vars) os << ' ' << v;
  os << "\norder " << I.ring.order.name() << "\nranking";
  for (std::size_t i : I.ring.order.ranking()) os << ' ' << I.ring.vars[i];
  os << '\n';
  for (const auto& g : I.generators) os << to_string(g, I.ring) << '\n';
  return os.str();
}

std::string point_string(const Vector& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " : " : "") + p[i].to_string();
  return s;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
  return s;
}

std::string linear_string(const Form& l, const Ring& ring) { return to_string(l, ring); }

nlohmann::json to_json(const Scalar& s) { return s.to_string(); }

nlohmann::json to_json(const Vector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

nlohmann::json to_json(const Matrix& m) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row_vector(i)));
  return a;
}

nlohmann::json to_json(const HilbertScan& scan) {
  nlohmann::json j;
  j["hf"] = scan.hf;
  j["t"] = scan.t;
  j["stabilization_degree"] = scan.stabilization_degree ? nlohmann::json(*scan.stabilization_degree) : nlohmann::json();
  j["m"] = scan.m ? nlohmann::json(*scan.m) : nlohmann::json();
  j["postulation"] = scan.postulation ? nlohmann::json(*scan.postulation) : nlohmann::json();
  j["gotzmann_certified"] = scan.gotzmann_certified;
  j["artinian"] = scan.artinian;
  return j;
}

namespace {

nlohmann::json summary_json(const std::optional<TripletSummary>& t, const Ring& ring) {
  if (!t) return nullptr;
  return {{"degree", t->degree}, {"m", t->m}, {"l", to_string(t->l, ring)}, {"surjective_certified", t->surjective_certified}};
}

}  // namespace

nlohmann::json to_json(const SolutionReport& report, const Ring& ring) {
  nlohmann::json j;
  j["scan"] = to_json(report.scan);
  j["artinian"] = report.artinian;
  j["points"] = nlohmann::json::array();
  for (const auto& p : report.points) j["points"].push_back({{"point", to_json(p.point)}, {"multiplicity", p.multiplicity}});
  j["rejected"] = nlohmann::json::array();
  for (const auto& r : report.rejected) j["rejected"].push_back(to_json(r));
  j["triplet"] = summary_json(report.triplet, ring);
  j["certified_triplet"] = summary_json(report.certified, ring);
  j["residual_degree"] = report.residual_degree;
  j["blocks"] = report.blocks;
  return j;
}

std::string render_hilbert(const HilbertScan& scan) {
  std::ostringstream os;
  os << "hf: " << join(scan.hf) << '\n';
  if (scan.artinian) {
    os << "artinian; variety empty\n";
    return os.str();
  }
  unsigned d = *scan.stabilization_degree;
  os << "m=" << *scan.m << " t=" << scan.t << " stabilization degree=" << d << " post=" << *scan.postulation << '\n';
  os << "gotzmann certificate: hf(" << d + 1 << ") = hf(" << d << ")^<" << d << "> = " << *scan.m << '\n';
  return os.str();
}

std::string render_solution(const SolutionReport& report, const Ring& ring) {
  std::ostringstream os;
  os << "hf: " << join(report.scan.hf) << '\n';
  if (report.artinian) {
    os << "artinian; variety empty\n";
    return os.str();
  }
  auto summary = [&](const char* label, const TripletSummary& t) {
    os << label << ": degree " << t.degree << ", m=" << t.m << ", l = " << to_string(t.l, ring) << '\n';
  };
  if (report.triplet) summary("triplet", *report.triplet);
  if (report.certified) summary("certified triplet", *report.certified);
  os << "points:\n";
  for (const auto& p : report.points) os << point_string(p.point) << "  mult=" << p.multiplicity << '\n';
  os << "rejected:\n";
  for (const auto& r : report.rejected) os << point_string(r) << '\n';
  os << "residual degree: " << report.residual_degree << '\n';
  if (report.blocks) os << "joint eigenspace blocks: " << report.blocks << '\n';
  return os.str();
}

}  // namespace projzero::io
