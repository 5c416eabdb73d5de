#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "projzero/eigen_solver.hpp"
#include "projzero/points.hpp"

namespace projzero::io {

/// Order overrides from the command line; empty fields keep the file's choice.
struct OrderOverride {
  std::optional<std::string> kind;
  std::optional<std::vector<std::string>> ranking;
};

/// Builds an order over `vars` from a kind name and a ranking of variable
/// names (most significant first). Throws projzero::Error (input).
MonomialOrder make_order(const std::vector<std::string>& vars, std::string_view kind,
                         const std::vector<std::string>& ranking);

/// Splits "z,y,x" or "z y x" into names.
std::vector<std::string> split_names(std::string_view text);

/// Ideal file: header lines `field`, `vars`, optional `order` and `ranking`,
/// then one generator per line. `#` starts a comment.
IdealPresentation parse_ideal(std::string_view text, const OrderOverride& override = {});

struct PointsInput {
  Ring ring;
  std::vector<Vector> raw;
};

/// Points file: header lines `field`, `coords N`, optional `vars`, `order`,
/// `ranking`, then one point per line, entries separated by ':' or blanks.
PointsInput parse_points(std::string_view text, const OrderOverride& override = {});

/// Reads a whole file, or standard input for "-".
std::string read_text(const std::string& path);

/// Ideal file text that parse_ideal reads back.
std::string write_ideal(const IdealPresentation& I);

std::string point_string(const Vector& p);
std::string join(const std::vector<std::size_t>& values);
std::string linear_string(const Form& l, const Ring& ring);

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const HilbertScan& scan);
nlohmann::json to_json(const SolutionReport& report, const Ring& ring);

std::string render_hilbert(const HilbertScan& scan);
std::string render_solution(const SolutionReport& report, const Ring& ring);

}  // namespace projzero::io
