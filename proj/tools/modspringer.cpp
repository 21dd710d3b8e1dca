// Command-line front end. Exit status: 0 success, 1 verification failure, 2 usage or data error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "modspringer/modspringer.hpp"

namespace ms = modspringer;
using Json = nlohmann::ordered_json;

namespace {

enum class Output { json, tsv, dot };

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::vector<std::string> target;
  std::optional<int> ell;
  std::optional<int> n;
  std::string output;
  std::string data_dir;
};

Json integer_json(const ms::Integer& v) {
  if (v <= ms::Integer(std::numeric_limits<long long>::max()) && v >= ms::Integer(std::numeric_limits<long long>::min()))
    return v.convert_to<long long>();
  return v.str();
}

std::string joined(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
  return s;
}

int require_ell(const Options& o, const std::string& verb) {
  if (!o.ell) throw usage_error(verb + " requires --l");
  return *o.ell;
}

ms::GroupForm group_of(const Options& o, const std::string& verb) {
  if (o.target.empty()) throw usage_error(verb + " requires a group, e.g. 'Sp 8'");
  return ms::parse_group(joined(o.target));
}

Output output_of(const Options& o, Output fallback, bool allow_dot) {
  if (o.output.empty()) return fallback;
  if (o.output == "json") return Output::json;
  if (o.output == "tsv") return Output::tsv;
  if (o.output == "dot" && allow_dot) return Output::dot;
  throw usage_error("unsupported --output '" + o.output + "' for this verb");
}

Json header(const std::string& verb) { return Json{{"schema", 1}, {"verb", verb}}; }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void emit_tsv(const std::vector<std::string>& columns, const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < columns.size(); ++i) std::cout << (i ? "\t" : "") << columns[i];
  std::cout << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "\t" : "") << r[i];
    std::cout << '\n';
  }
}

std::string blocks_string(const std::vector<int>& blocks) {
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? "," : "") + std::to_string(blocks[i]);
  return s;
}

Json datum_json(const ms::CuspidalDatum& d) {
  Json gl = Json::array();
  for (const auto& p : d.orbit_data.gl_orbits) gl.push_back(p.compact());
  return Json{{"gl_blocks", d.levi.gl_blocks},
              {"residual_rank", d.levi.residual_rank},
              {"gl_orbits", gl},
              {"residual_orbit", d.orbit_data.residual_orbit.partition.compact()},
              {"central_character", ms::central_character_of(d).str()},
              {"char", d.char_tag}};
}

// ---------------------------------------------------------------------------

int cmd_orbits(const Options& o) {
  auto g = group_of(o, "orbits");
  auto out = output_of(o, Output::tsv, false);
  Json j = header("orbits");
  j["group"] = g.str();
  j["orbits"] = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& orb : ms::enumerate_orbits(g)) {
    Json e{{"orbit", orb.str()}, {"distinguished", ms::is_distinguished(g, orb)}};
    std::string a = "-";
    try {
      a = ms::component_group(g, orb).str();
      e["component_group"] = a;
    } catch (const ms::unsupported_error&) {
      e["component_group"] = nullptr;
    }
    j["orbits"].push_back(e);
    rows.push_back({orb.str(), ms::is_distinguished(g, orb) ? "yes" : "no", a});
  }
  if (out == Output::json) emit(j);
  else emit_tsv({"orbit", "distinguished", "component_group"}, rows);
  return 0;
}

int cmd_pairs(const Options& o) {
  auto g = group_of(o, "pairs");
  auto out = output_of(o, Output::tsv, false);
  auto pairs = ms::enumerate_pairs(g);
  Json j = header("pairs");
  j["group"] = g.str();
  j["count"] = pairs.size();
  j["pairs"] = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : pairs) {
    j["pairs"].push_back({{"orbit", p.orbit.str()}, {"local_system", p.local_system.str()}});
    rows.push_back({p.orbit.str(), p.local_system.str()});
  }
  if (out == Output::json) emit(j);
  else emit_tsv({"orbit", "local_system"}, rows);
  return 0;
}

int cmd_levis(const Options& o) {
  auto g = group_of(o, "levis");
  auto out = output_of(o, Output::tsv, false);
  Json j = header("levis");
  j["group"] = g.str();
  j["levis"] = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& l : ms::enumerate_levi_classes(g)) {
    j["levis"].push_back({{"gl_blocks", l.gl_blocks}, {"residual_rank", l.residual_rank}});
    rows.push_back({blocks_string(l.gl_blocks), std::to_string(l.residual_rank)});
  }
  if (out == Output::json) emit(j);
  else emit_tsv({"gl_blocks", "residual_rank"}, rows);
  return 0;
}

// Shared by `cuspidal` and `zero-series`.
int cmd_series(const Options& o, const std::string& verb) {
  auto g = group_of(o, verb);
  const int ell = require_ell(o, verb);
  auto out = output_of(o, Output::tsv, false);
  auto data = ms::enumerate_cuspidal_data(g, ell);
  auto zero = ms::enumerate_cuspidal_data(g, 0);
  auto fibers = ms::partition_into_zero_series(g, ell);

  auto zero_index = [&](const ms::CuspidalDatum& d) {
    auto z = ms::zero_series_of(d);
    return static_cast<std::size_t>(std::find(zero.begin(), zero.end(), z) - zero.begin());
  };

  Json j = header(verb);
  j["group"] = g.str();
  j["ell"] = ell;
  Json jd = Json::array();
  std::vector<std::vector<std::string>> rows;
  ms::Integer total = 0;
  for (const auto& d : data) {
    Json e = datum_json(d);
    auto size = ms::series_size(g, d);
    total += size;
    e["series_size"] = integer_json(size);
    e["zero_series"] = zero_index(d);
    jd.push_back(e);
    rows.push_back({blocks_string(d.levi.gl_blocks), std::to_string(d.levi.residual_rank),
                    d.orbit_data.residual_orbit.partition.compact(), ms::central_character_of(d).str(), size.str(),
                    std::to_string(zero_index(d))});
  }
  Json jf = Json::array();
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    Json members = Json::array();
    for (const auto& d : fibers[i].second)
      members.push_back(static_cast<std::size_t>(std::find(data.begin(), data.end(), d) - data.begin()));
    jf.push_back({{"zero_datum", datum_json(fibers[i].first)}, {"members", members}, {"size", members.size()}});
  }
  if (verb == "cuspidal") {
    j["data"] = jd;
    j["zero_series"] = jf;
  } else {
    j["zero_series"] = jf;
    j["data"] = jd;
  }
  j["total_series_size"] = integer_json(total);
  if (out == Output::json) {
    emit(j);
  } else if (verb == "cuspidal") {
    emit_tsv({"gl_blocks", "residual_rank", "residual_orbit", "central_character", "series_size", "zero_series"}, rows);
  } else {
    std::vector<std::vector<std::string>> frows;
    for (std::size_t i = 0; i < fibers.size(); ++i)
      frows.push_back({std::to_string(i), blocks_string(fibers[i].first.levi.gl_blocks),
                       std::to_string(fibers[i].first.levi.residual_rank), fibers[i].first.central_char.str(),
                       std::to_string(fibers[i].second.size())});
    emit_tsv({"zero_series", "gl_blocks", "residual_rank", "central_character", "members"}, frows);
  }
  return 0;
}

int cmd_order_poset(const Options& o) {
  auto g = group_of(o, "order-poset");
  const int ell = require_ell(o, "order-poset");
  auto out = output_of(o, Output::dot, true);
  auto data = ms::enumerate_cuspidal_data(g, ell);
  const std::size_t n = data.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = ms::order_leq(data[a], data[b]);
  // Hasse diagram: a < b with nothing strictly between
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c)
        if (c != a && c != b && leq[a][c] && leq[c][b]) covered = false;
      if (covered) edges.emplace_back(a, b);
    }
  if (out == Output::dot) {
    std::cout << "digraph cuspidal_order {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < n; ++i) {
      const auto& d = data[i];
      std::cout << "  d" << i << " [label=\"{" << blocks_string(d.levi.gl_blocks) << "};" << d.levi.residual_rank << " "
                << d.orbit_data.residual_orbit.partition.compact() << " " << ms::central_character_of(d).str()
                << "\"];\n";
    }
    for (auto [a, b] : edges) std::cout << "  d" << a << " -> d" << b << ";\n";
    std::cout << "}\n";
  } else if (out == Output::json) {
    Json j = header("order-poset");
    j["group"] = g.str();
    j["ell"] = ell;
    j["nodes"] = Json::array();
    for (const auto& d : data) j["nodes"].push_back(datum_json(d));
    j["edges"] = Json::array();
    for (auto [a, b] : edges) j["edges"].push_back({a, b});
    emit(j);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (auto [a, b] : edges) rows.push_back({std::to_string(a), std::to_string(b)});
    emit_tsv({"lower", "upper"}, rows);
  }
  return 0;
}

int cmd_verify_identity(const Options& o) {
  const int ell = require_ell(o, "verify-identity");
  if (!o.n) throw usage_error("verify-identity requires --n");
  auto out = output_of(o, Output::tsv, false);
  auto r = ms::verify_counting_identity(*o.n, ell);
  if (out == Output::json) {
    Json j = header("verify-identity");
    j["n"] = *o.n;
    j["ell"] = ell;
    j["lhs"] = integer_json(r.lhs);
    j["rhs"] = integer_json(r.rhs);
    j["equal"] = r.equal;
    emit(j);
  } else {
    emit_tsv({"n", "ell", "lhs", "rhs", "equal"},
             {{std::to_string(*o.n), std::to_string(ell), r.lhs.str(), r.rhs.str(), r.equal ? "true" : "false"}});
  }
  if (!r.equal) std::cerr << "counting identity fails: " << r.lhs << " != " << r.rhs << '\n';
  return r.equal ? 0 : 1;
}

ms::CharacterTable weyl_table(const std::string& name, const std::string& data_dir) {
  if (name == "E8" || name == "E7") {
    auto in = ms::open_data_file(data_dir, name == "E8" ? "weyl_e8.tsv" : "weyl_e7.tsv");
    return ms::read_character_table(in);
  }
  if (name.size() > 1 && (name[0] == 'B' || name[0] == 'C' || name[0] == 'S'))
    return ms::build_character_table(name[0] == 'S' ? ms::WeylDescriptor::symmetric(std::stoi(name.substr(1)))
                                                    : ms::WeylDescriptor::hyperoctahedral(std::stoi(name.substr(1))));
  throw usage_error("blocks: expected a Weyl group such as S5, B4, E7 or E8, got '" + name + "'");
}

int cmd_blocks(const Options& o) {
  if (o.target.size() != 1) throw usage_error("blocks requires one Weyl group name, e.g. 'B4'");
  const int ell = require_ell(o, "blocks");
  auto out = output_of(o, Output::tsv, false);
  auto w = weyl_table(o.target[0], o.data_dir);
  auto b = ms::l_blocks(w, ell);
  Json j = header("blocks");
  j["group"] = w.group.str();
  j["ell"] = ell;
  j["blocks"] = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t bi = 0; bi < b.blocks.size(); ++bi) {
    Json members = Json::array();
    for (auto chi : b.blocks[bi]) {
      const auto label = ms::label_string(w.irr_labels[chi]);
      members.push_back({{"character", label}, {"degree", integer_json(w.degree(chi))}, {"defect", b.defects[chi]}});
      rows.push_back({std::to_string(bi + 1), label, w.degree(chi).str(), std::to_string(b.defects[chi])});
    }
    j["blocks"].push_back({{"index", bi + 1}, {"members", members}});
  }
  if (out == Output::json) emit(j);
  else emit_tsv({"block", "character", "degree", "defect"}, rows);
  return 0;
}

int cmd_report(const Options& o) {
  if (o.target.size() != 1) throw usage_error("report requires one of E8-l7, B4-l3");
  auto out = output_of(o, Output::tsv, false);
  auto rep = ms::reproduce_report(o.target[0], o.data_dir);
  auto status = [](const ms::ReportRow& r) { return r.informational ? "INFO" : r.pass ? "PASS" : "FAIL"; };
  if (out == Output::json) {
    Json j = header("report");
    j["case"] = rep.name;
    j["passed"] = rep.passed();
    j["rows"] = Json::array();
    for (const auto& r : rep.rows)
      j["rows"].push_back({{"status", status(r)}, {"check", r.check}, {"subject", r.subject}, {"detail", r.detail}});
    emit(j);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : rep.rows) rows.push_back({status(r), r.check, r.subject, r.detail});
    emit_tsv({"status", "check", "subject", "detail"}, rows);
  }
  for (const auto& r : rep.rows)
    if (!r.informational && !r.pass) std::cerr << "FAIL " << r.check << " " << r.subject << ": " << r.detail << '\n';
  return rep.passed() ? 0 : 1;
}

int cmd_rather_good(const Options& o) {
  auto g = group_of(o, "rather-good");
  const int ell = require_ell(o, "rather-good");
  auto out = output_of(o, Output::tsv, false);
  const bool rg = ms::rather_good(g, ell);
  const auto z = ms::center_component_order(g);
  if (out == Output::json) {
    Json j = header("rather-good");
    j["group"] = g.str();
    j["ell"] = ell;
    j["center_component_order"] = z;
    j["rather_good"] = rg;
    emit(j);
  } else {
    emit_tsv({"group", "ell", "center_component_order", "rather_good"},
             {{g.str(), std::to_string(ell), std::to_string(z), rg ? "true" : "false"}});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular generalized Springer correspondence: orbits, cuspidal data, series and blocks"};
  app.require_subcommand(1);
  Options opt;
  opt.data_dir = ms::default_data_dir().string();
  app.add_option("--output", opt.output, "json, tsv, or dot (order-poset only)")->check(CLI::IsMember({"json", "tsv", "dot"}));
  app.add_option("--data-dir", opt.data_dir, "directory holding the bundled tables");

  struct Verb {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  static const Verb verbs[] = {
      {"orbits", "nilpotent orbits of a classical group", cmd_orbits},
      {"pairs", "orbit and local-system pairs", cmd_pairs},
      {"levis", "Levi subgroup classes", cmd_levis},
      {"cuspidal", "cuspidal data with series sizes and 0-series", [](const Options& o) { return cmd_series(o, "cuspidal"); }},
      {"order-poset", "Hasse diagram of the order on cuspidal data", cmd_order_poset},
      {"zero-series", "partition of cuspidal data into 0-series", [](const Options& o) { return cmd_series(o, "zero-series"); }},
      {"verify-identity", "check the bipartition counting identity", cmd_verify_identity},
      {"blocks", "ell-blocks of a Weyl group", cmd_blocks},
      {"report", "reproduce the E8-l7 or B4-l3 block computation", cmd_report},
      {"rather-good", "whether ell is rather good for a group", cmd_rather_good},
  };
  const Verb* chosen = nullptr;
  for (const auto& v : verbs) {
    auto* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("target", opt.target, "group description (e.g. 'Sp 8') or table name");
    sub->add_option("--l", opt.ell, "prime ell (0 for characteristic zero where allowed)");
    sub->add_option("--n", opt.n, "size parameter");
    sub->add_option("--output", opt.output, "json, tsv, or dot")->check(CLI::IsMember({"json", "tsv", "dot"}));
    sub->add_option("--data-dir", opt.data_dir, "directory holding the bundled tables");
    sub->callback([&chosen, &v] { chosen = &v; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return chosen->run(opt);
  } catch (const ms::inconsistency_error& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
