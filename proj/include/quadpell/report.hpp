#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadpell/bisector.hpp"
#include "quadpell/rationalpell.hpp"
#include "quadpell/solver.hpp"

namespace quadpell::report {

using nlohmann::json;

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& name);

// JSON number when it fits in 64 bits, decimal string otherwise.
json integer(const BigInt& n);

// "7", "3^2", "-3^2" in ASCII; superscript digits otherwise.
std::string render_norm(std::int64_t p, int l, int sign, Notation notation);

json to_json(const PellContext& ctx);
json to_json(const XiEntry& e);
json to_json(const Representation& rep, const PellContext& ctx, const Spectrum& spec, Notation notation);
json to_json(const RationalPoint& pt);
json to_json(const BisectorTriple& t);
json to_json(const Bisection& b);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct TableSpec {
  std::vector<std::int64_t> ds{2, 5, 10, 13, 17, 26, 29, 34};
  std::int64_t pmax = 97;
};

// h, eta, N(eta), then xi_p and N(xi_p) for every prime that lies in some S(d).
Table build_table(const TableSpec& spec, Notation notation);
std::string render_table(const Table& table, Format format);
std::string render_spectrum(const Spectrum& spec, Format format, Notation notation);

// 512x512 SVG of y = a x, y = b x and both rational bisectors.
std::string render_figure(const Rat& a, const Rat& b);

}  // namespace quadpell::report
