// Command-line front end: every subcommand prints JSON unless --format says otherwise.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "quadpell/errors.hpp"
#include "quadpell/oracle.hpp"
#include "quadpell/report.hpp"

using namespace quadpell;
using report::json;

namespace {

struct Globals {
  std::string format = "json";
  bool ascii = false;
  std::string out;
  Notation notation() const { return ascii ? Notation::Ascii : Notation::Unicode; }
  report::Format fmt() const { return report::parse_format(format); }
};

NRange parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    long v = std::stol(text);
    return {v, v};
  }
  NRange r{std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
  if (r.lo > r.hi) throw DomainError(ErrorKind::InvalidArgument, "empty range " + text);
  return r;
}

json pair_list(const PellContext& ctx, const Spectrum& spec, const std::vector<std::pair<BigInt, BigInt>>& sols,
               bool square, Notation notation) {
  json arr = json::array();
  for (const auto& [x, y] : sols) {
    Representation rep = square ? decompose_square(ctx, spec, x, y) : decompose_strict(ctx, spec, x, y);
    arr.push_back({{"x", report::integer(x)},
                   {"y", report::integer(y)},
                   {"norm", BigInt(x * x - ctx.d * y * y).get_str()},
                   {"representation", report::to_json(rep, ctx, spec, notation)}});
  }
  return arr;
}

std::string triples_output(const std::vector<BisectorTriple>& ts, report::Format fmt) {
  if (fmt == report::Format::Json) {
    json arr = json::array();
    for (const auto& t : ts) arr.push_back(report::to_json(t));
    return arr.dump(2) + "\n";
  }
  report::Table table{{"a", "b", "c"}, {}};
  for (const auto& t : ts) table.rows.push_back({t.a.str(), t.b.str(), t.c.str()});
  return report::render_table(table, fmt);
}

void add_unique(std::vector<BisectorTriple>& out, const std::vector<BisectorTriple>& more) {
  for (const auto& t : more)
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pell equations, rational Pell points and rational angle bisectors"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--ascii", g.ascii, "write sqrt(d) and ^ instead of Unicode");
  app.add_option("--out", g.out, "write output to this file");

  std::int64_t d = 0, p = 0, pmax = 97;
  std::string z, x, y, a, b, c, n_range = "-2..2";
  bool square = false;
  int sign = -1, max_terms = 2, r = 1, l_max = 2;
  long range = 3;
  std::int64_t y_bound = 1000, den = 20;
  std::string mode = "case1";
  std::vector<std::int64_t> ds{2, 5, 10, 13, 17, 26, 29, 34};

  auto* context = app.add_subcommand("context", "fundamental unit, class number and Pell data for d");
  context->add_option("--d", d)->required();

  auto* xi_cmd = app.add_subcommand("xi", "minimal strictly primitive solution of x^2 - d y^2 = +-p^l");
  xi_cmd->add_option("--d", d)->required();
  xi_cmd->add_option("--p", p)->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "xi_p for every prime p <= pmax in S(d)");
  spectrum_cmd->add_option("--d", d)->required();
  spectrum_cmd->add_option("--pmax", pmax);

  auto* solve = app.add_subcommand("solve", "solutions of x^2 - d y^2 = +-z (strictly primitive) or +-z^2 (--square)");
  solve->add_option("--d", d)->required();
  solve->add_option("--z", z)->required();
  solve->add_flag("--strict", "strictly primitive solutions (default)");
  solve->add_flag("--square", square, "all solutions of x^2 - d y^2 = +-z^2");
  solve->add_option("--n-range", n_range, "eta exponents, e.g. -2..2");

  auto* decompose = app.add_subcommand("decompose", "representation of x + y sqrt(d)");
  decompose->add_option("--d", d)->required();
  decompose->add_option("--x", x)->required();
  decompose->add_option("--y", y)->required();

  auto* rational = app.add_subcommand("rational", "rational points of x^2 - d y^2 = sign");
  rational->add_option("--d", d)->required();
  rational->add_option("--sign", sign)->check(CLI::IsMember({-1, 1}));
  rational->add_option("--max-terms", max_terms)->check(CLI::Range(0, 4));
  rational->add_option("--pmax", pmax);
  rational->add_option("--n-range", n_range);

  auto* bisect_cmd = app.add_subcommand("bisect", "rational bisectors of y = a x and y = b x");
  bisect_cmd->add_option("--a", a)->required();
  bisect_cmd->add_option("--b", b)->required();

  auto* triples = app.add_subcommand("triples", "families of rational bisector triples");
  triples->add_option("--mode", mode)->check(CLI::IsMember({"case1", "case2", "integral", "integral2"}));
  triples->add_option("--range", range)->check(CLI::Range(1L, 50L));
  triples->add_option("--d", d);

  auto* table = app.add_subcommand("table", "xi_p table for several d");
  table->add_option("--d", ds)->delimiter(',');
  table->add_option("--pmax", pmax);

  auto* figure = app.add_subcommand("figure", "SVG of the two lines and their bisectors");
  figure->add_option("--a", a)->required();
  figure->add_option("--b", b)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "");
  oracle_cmd->group("");
  oracle_cmd->require_subcommand(1);
  auto* o_sol = oracle_cmd->add_subcommand("solutions");
  o_sol->add_option("--d", d)->required();
  o_sol->add_option("--z", z)->required();
  o_sol->add_option("--y-bound", y_bound);
  auto* o_xi = oracle_cmd->add_subcommand("xi");
  o_xi->add_option("--d", d)->required();
  o_xi->add_option("--p", p)->required();
  o_xi->add_option("--l-max", l_max);
  o_xi->add_option("--y-bound", y_bound);
  auto* o_rat = oracle_cmd->add_subcommand("rational");
  o_rat->add_option("--d", d)->required();
  o_rat->add_option("--r", r);
  o_rat->add_option("--den", den);
  o_rat->add_option("--y-bound", y_bound);
  auto* o_tan = oracle_cmd->add_subcommand("tangent");
  o_tan->add_option("--a", a)->required();
  o_tan->add_option("--b", b)->required();
  o_tan->add_option("--c", c)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::ostringstream out;
  try {
    const Notation notation = g.notation();
    if (context->parsed()) {
      out << report::to_json(make_context(d)).dump(2) << '\n';
    } else if (xi_cmd->parsed()) {
      auto e = xi(make_context(d), p);
      out << (e ? report::to_json(*e) : json(nullptr)).dump(2) << '\n';
    } else if (spectrum_cmd->parsed()) {
      const PellContext ctx = make_context(d);
      out << report::render_spectrum(spectrum(ctx, pmax), g.fmt(), notation);
    } else if (solve->parsed()) {
      const PellContext ctx = make_context(d);
      const BigInt zz = parse_bigint(z);
      const Spectrum spec = spectrum_for(ctx, zz);
      const NRange nr = parse_range(n_range);
      auto sols = square ? generate_square(ctx, spec, zz, nr) : generate_strict(ctx, spec, zz, nr);
      out << pair_list(ctx, spec, sols, square, notation).dump(2) << '\n';
    } else if (decompose->parsed()) {
      const PellContext ctx = make_context(d);
      const BigInt xx = parse_bigint(x), yy = parse_bigint(y);
      const BigInt N = xx * xx - ctx.d * yy * yy;
      if (sgn(N) == 0) throw DomainError(ErrorKind::InvalidArgument, "zero has no representation");
      const Spectrum spec = spectrum_for(ctx, abs(N));
      Representation rep;
      if (abs(N) == 1)
        rep = decompose_units(ctx, QuadElem(ctx.d, Rat(xx), Rat(yy)));
      else if (strictly_primitive(ctx.d, xx, yy))
        rep = decompose_strict(ctx, spec, xx, yy);
      else
        rep = decompose_square(ctx, spec, xx, yy);
      out << report::to_json(rep, ctx, spec, notation).dump(2) << '\n';
    } else if (rational->parsed()) {
      const PellContext ctx = make_context(d);
      const Spectrum spec = spectrum(ctx, pmax);
      json arr = json::array();
      for (const auto& pt : enumerate_rational(ctx, spec, sign < 0 ? 1 : 0, max_terms, parse_range(n_range)))
        arr.push_back(report::to_json(pt));
      out << arr.dump(2) << '\n';
    } else if (bisect_cmd->parsed()) {
      auto bis = bisect(Rat::parse(a), Rat::parse(b));
      if (!bis) throw DomainError(ErrorKind::NoRationalBisector, "no rational bisector");
      out << report::to_json(*bis).dump(2) << '\n';
    } else if (triples->parsed()) {
      std::vector<BisectorTriple> ts;
      if (mode == "case1") {
        for (long l = -range; l <= range; ++l)
          for (long m = -range; m <= range; ++m)
            for (long n = 1; n <= range; ++n) {
              if (l == 0 || m == 0 || std::abs(l) == std::abs(m) || l * m == n * n) continue;
              add_unique(ts, case1_generate(l, m, n));
            }
      } else if (mode == "case2") {
        const PellContext ctx = make_context(d);
        const Spectrum spec = spectrum(ctx, 13);
        auto pts = enumerate_rational(ctx, spec, 1, 1, NRange{-range, range});
        for (std::size_t i = 0; i < pts.size(); ++i)
          for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i].x == pts[j].x || pts[i].x == -pts[j].x) continue;
            add_unique(ts, case2_generate(QuadElem(ctx.d, pts[i].x, pts[i].y), QuadElem(ctx.d, pts[j].x, pts[j].y)));
          }
      } else if (mode == "integral") {
        const PellContext ctx = make_context(d);
        for (long m = 1; m <= range; ++m)
          for (long n = 1; n <= range; ++n) ts.push_back(integral_generate(ctx, m, n));
      } else {
        for (long n = 1; n <= range; ++n) ts.push_back(integral_generate2(n));
      }
      out << triples_output(ts, g.fmt());
    } else if (table->parsed()) {
      out << report::render_table(report::build_table({ds, pmax}, notation), g.fmt());
    } else if (figure->parsed()) {
      out << report::render_figure(Rat::parse(a), Rat::parse(b));
    } else if (o_sol->parsed()) {
      json arr = json::array();
      for (const auto& h : oracle::brute_solutions(d, std::stoll(z), {y_bound, 0}))
        arr.push_back({{"x", h.x}, {"y", h.y}, {"sign", h.sign}, {"strict", h.strictly_primitive}});
      out << arr.dump(2) << '\n';
    } else if (o_xi->parsed()) {
      auto h = oracle::brute_xi(d, p, l_max, {y_bound, 0});
      out << (h ? json{{"l", h->l}, {"x", h->x}, {"y", h->y}, {"sign", h->sign}} : json(nullptr)).dump(2) << '\n';
    } else if (o_rat->parsed()) {
      json arr = json::array();
      for (const auto& pt : oracle::brute_rational_pell(d, r, {y_bound, den}))
        arr.push_back({{"x", Rat(pt.X, pt.Z).str()}, {"y", Rat(pt.Y, pt.Z).str()}});
      out << arr.dump(2) << '\n';
    } else if (o_tan->parsed()) {
      const auto t = oracle::tangent_bisector_check(Rat::parse(a), Rat::parse(b), Rat::parse(c));
      out << json(t == oracle::Tri::True ? "true" : t == oracle::Tri::False ? "false" : "indeterminate").dump()
          << '\n';
    }
  } catch (const DomainError& e) {
    std::cout << json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return 1;
  }

  if (g.out.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(g.out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open " << g.out << '\n';
      return 1;
    }
    file << out.str();
  }
  return 0;
}
