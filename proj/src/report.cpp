#include "quadpell/report.hpp"

#include <algorithm>
#include <sstream>

#include "quadpell/errors.hpp"

namespace quadpell::report {

namespace {

const char* kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_rows(const std::vector<std::vector<std::string>>& rows, Format format) {
  std::ostringstream out;
  if (format == Format::Csv) {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
      out << '\n';
    }
    return out.str();
  }
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], display_width(row[i]));
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += " | ";
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - display_width(row[i]), ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw DomainError(ErrorKind::InvalidArgument, "unknown format " + name);
}

json integer(const BigInt& n) {
  if (fits_int64(n)) return json(static_cast<std::int64_t>(n.get_si()));
  return json(n.get_str());
}

std::string render_norm(std::int64_t p, int l, int sign, Notation notation) {
  std::string s = sign < 0 ? "-" : "";
  s += std::to_string(p);
  if (l == 1) return s;
  if (notation == Notation::Ascii) return s + "^" + std::to_string(l);
  for (char c : std::to_string(l)) s += kSuperscripts[c - '0'];
  return s;
}

json to_json(const PellContext& ctx) {
  return json{{"d", ctx.d},
              {"disc", ctx.disc},
              {"eta", {{"a", ctx.eta.a().str()}, {"b", ctx.eta.b().str()}}},
              {"norm_eta", ctx.norm_eta},
              {"eps", {{"f1", integer(ctx.f1())}, {"g1", integer(ctx.g1())}}},
              {"h", ctx.h},
              {"neg_pell_integral", ctx.neg_pell_integral},
              {"neg_pell_rational", ctx.neg_pell_rational}};
}

json to_json(const XiEntry& e) {
  return json{{"p", e.p}, {"l", e.l}, {"x", integer(e.x())}, {"y", integer(e.y())}, {"norm", e.norm().get_str()}};
}

json to_json(const Representation& rep, const PellContext& ctx, const Spectrum& spec, Notation notation) {
  json terms = json::array();
  for (const auto& [p, t] : rep.terms)
    terms.push_back({{"p", p}, {"n_p", t.exponent}, {"choice", t.choice == Conj::Xi ? "xi" : "xi'"}});
  return json{{"d", rep.d},
              {"sign", rep.sign},
              {"m", rep.m},
              {"n", rep.n},
              {"terms", terms},
              {"core", rep.core ? json(render(*rep.core, notation)) : json(nullptr)},
              {"scale", rep.scale.str()},
              {"value", render(evaluate(ctx, spec, rep), notation)}};
}

json to_json(const RationalPoint& pt) {
  return json{{"d", pt.d}, {"x", pt.x.str()}, {"y", pt.y.str()}, {"r", pt.r}};
}

json to_json(const BisectorTriple& t) {
  return json{{"a", t.a.str()}, {"b", t.b.str()}, {"c", t.c.str()}, {"trivial", t.trivial}};
}

json to_json(const Bisection& b) {
  return json{{"c_plus", b.c_plus.str()},
              {"c_minus", b.c_minus.str()},
              {"case", b.case_one() ? "I" : "II"},
              {"d", b.d}};
}

Table build_table(const TableSpec& spec, Notation notation) {
  const bool ascii = notation == Notation::Ascii;
  std::vector<PellContext> ctxs;
  std::vector<Spectrum> specs;
  for (std::int64_t d : spec.ds) {
    ctxs.push_back(make_context(d));
    specs.push_back(spectrum(ctxs.back(), spec.pmax));
  }
  Table t;
  t.header.push_back("d");
  for (std::int64_t d : spec.ds) t.header.push_back(std::to_string(d));

  auto row = [&](std::string label, auto cell) {
    std::vector<std::string> r{std::move(label)};
    for (std::size_t i = 0; i < ctxs.size(); ++i) r.push_back(cell(i));
    t.rows.push_back(std::move(r));
  };
  row("h", [&](std::size_t i) { return std::to_string(ctxs[i].h); });
  row(ascii ? "eta" : "η", [&](std::size_t i) { return render(ctxs[i].eta, notation); });
  row(ascii ? "N(eta)" : "N(η)", [&](std::size_t i) { return std::to_string(ctxs[i].norm_eta); });
  for (std::int64_t p : primes_up_to(spec.pmax)) {
    bool any = false;
    for (const Spectrum& s : specs) any = any || s.find(p) != nullptr;
    if (!any) continue;
    const std::string label = (ascii ? "xi_" : "ξ_") + std::to_string(p);
    row(label, [&](std::size_t i) {
      const XiEntry* e = specs[i].find(p);
      return e ? render(e->xi, notation) : std::string();
    });
    row("N(" + label + ")", [&](std::size_t i) {
      const XiEntry* e = specs[i].find(p);
      return e ? render_norm(p, e->l, e->norm_sign, notation) : std::string();
    });
  }
  return t;
}

std::string render_table(const Table& table, Format format) {
  if (format == Format::Json) {
    json cols = json::array();
    for (std::size_t c = 1; c < table.header.size(); ++c) {
      json col{{"d", std::stoll(table.header[c])}};
      for (const auto& r : table.rows) col[r[0]] = r[c].empty() ? json(nullptr) : json(r[c]);
      cols.push_back(col);
    }
    return cols.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> rows{table.header};
  rows.insert(rows.end(), table.rows.begin(), table.rows.end());
  return render_rows(rows, format);
}

std::string render_spectrum(const Spectrum& spec, Format format, Notation notation) {
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& [p, e] : spec.entries) arr.push_back(to_json(e));
    return arr.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> rows{{"p", "l", "xi", "norm"}};
  for (const auto& [p, e] : spec.entries)
    rows.push_back({std::to_string(p), std::to_string(e.l), render(e.xi, notation),
                    render_norm(p, e.l, e.norm_sign, notation)});
  return render_rows(rows, format);
}

}  // namespace quadpell::report
