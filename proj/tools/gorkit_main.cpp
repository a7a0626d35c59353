#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gorkit/cayley.hpp"
#include "gorkit/io.hpp"
#include "gorkit/nef.hpp"
#include "gorkit/stringy.hpp"

using namespace gorkit;
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCap = 4;

struct Options {
  long cap = kDefaultCap;
  std::string format = "json";
  std::string at;      // est evaluation point "u,v"
  std::string blocks;  // nef-collect blocks "0,1;2"
  std::string along;   // nef-project index set "1,2"
};

std::vector<long> parse_longs(const std::string& s, char sep, const char* what) {
  std::vector<long> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string("empty ") + what);
  return out;
}

std::vector<int> parse_index_set(const std::string& s, const char* what) {
  std::vector<int> out;
  for (long v : parse_longs(s, ',', what)) out.push_back(static_cast<int>(v));
  return out;
}

json json_parts(const std::vector<LatticePolytope>& parts) {
  json a = json::array();
  for (const auto& p : parts) a.push_back(json_vertices(p));
  return a;
}

void emit(const json& j, const Options& opt) {
  if (opt.format == "json") {
    std::cout << j.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) std::cout << key << ": " << value.dump() << "\n";
}

/** Text output of polytope-valued results uses the input file format, so that
 *  emitting and re-parsing reproduces the vertex set. */
void emit_polytope(const json& j, const LatticePolytope& p, const Options& opt) {
  if (opt.format == "json") {
    std::cout << j.dump() << "\n";
    return;
  }
  write_polytope(std::cout, p);
}

void emit_nef(const json& j, const std::vector<LatticePolytope>& parts, const Options& opt) {
  if (opt.format == "json") {
    std::cout << j.dump() << "\n";
    return;
  }
  write_nef_parts(std::cout, parts);
}

json run_gorenstein(const LatticePolytope& p) {
  auto data = gorenstein_data(p);
  if (!data) return json{{"gorenstein", false}};
  json interior = json::array();
  for (const auto& c : data->interior) interior.push_back(json_rat(c));
  return json{{"index", json_int(data->r)}, {"interior_point", interior}};
}

json run_check(const LatticePolytope& p, long cap) {
  DualPair pair = dual_gorenstein(p);
  ConjectureReport cd = conjecture_diagnostics(pair, cap);
  EstSpecializations sp = est_specializations(pair, cap);
  json j{{"cy_dim", cd.cy_dim},
         {"e_at_11", json_int(cd.e_at_11)},
         {"polynomial", cd.polynomial},
         {"degree_bound", cd.degree_bound},
         {"symmetric", cd.symmetric},
         {"poincare", cd.poincare},
         {"reciprocity", cd.reciprocity},
         {"edge_symmetry", cd.edge_symmetry},
         {"second_derivative", cd.second_derivative},
         {"closed_form", cd.closed_form},
         {"div24", cd.div24},
         {"hstar_route_agrees", sp.u1_agrees},
         {"volume_route_agrees", sp.at11_agrees}};
  if (cd.k) j["k"] = json_int(*cd.k);
  if (cd.l) j["l"] = json_int(*cd.l);
  return j;
}

json run_special(const LatticePolytope& p, long cap) {
  auto sims = special_simplices(p, cap);
  json list = json::array();
  for (const auto& s : sims) {
    json pts = json::array();
    for (const auto& v : s.points) pts.push_back(json_vec(v));
    list.push_back(pts);
  }
  return json{{"count", sims.size()}, {"simplices", list}};
}

/** Single-polytope commands shared by direct invocation and batch mode. */
json run_poly_command(const std::string& cmd, const LatticePolytope& p, long cap) {
  if (cmd == "gorenstein") return run_gorenstein(p);
  if (cmd == "hstar") return json_unipoly(hstar(p, cap));
  if (cmd == "stilde") return json_unipoly(stilde(p, cap));
  if (cmd == "est") return json_laurent2(est(p, cap).e);
  if (cmd == "check") return run_check(p, cap);
  if (cmd == "special") return run_special(p, cap);
  if (cmd == "dual") {
    DualPair pair = dual_gorenstein(p);
    return json{{"index", json_int(pair.data.r)}, {"vertices", json_vertices(pair.p_dual)}};
  }
  throw std::invalid_argument("command '" + cmd + "' is not usable in batch mode");
}

NefPartition load_centered(const std::string& path, long cap) {
  auto parts = read_nef_file(path);
  auto np = detect_nef(parts, cap);
  if (!np) throw std::invalid_argument("input is not a nef-partition");
  return center_and_properize(*np).np;
}

int classify(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const CapExceeded*>(&e)) return kExitCap;
  return kExitPrecondition;
}

int run_batch(const std::string& cmd, const std::vector<std::string>& files, const Options& opt) {
  json out = json::array();
  int worst = 0;
  for (const auto& file : files) {
    try {
      LatticePolytope p = read_polytope_file(file);
      out.push_back(json{{"file", file}, {"result", run_poly_command(cmd, p, opt.cap)}});
    } catch (const std::exception& e) {
      int code = classify(e);
      worst = std::max(worst, code);
      out.push_back(json{{"file", file}, {"error", e.what()}, {"code", code}});
    }
  }
  std::cout << out.dump() << "\n";
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice-polytope calculator: Gorenstein duality, Cayley and "
               "nef-partition structure, stringy E-polynomials"};
  app.require_subcommand(1);

  Options opt;
  std::string file, cmd;
  std::vector<std::string> files;
  std::string weight_total, weight_list;

  auto add = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--cap", opt.cap, "enumeration cap on lattice point counts");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    return sub;
  };
  auto add_poly = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = add(name, desc);
    sub->add_option("file", file, "polytope file")->required();
    return sub;
  };
  auto add_nef = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = add(name, desc);
    sub->add_option("file", file, "nef partition file")->required();
    return sub;
  };

  add_poly("dual", "dual Gorenstein polytope and index");
  add_poly("gorenstein", "Gorenstein index and interior point");
  add_poly("hstar", "h*-polynomial");
  add_poly("stilde", "stringy S-polynomial");
  CLI::App* est_cmd = add_poly("est", "stringy E-polynomial");
  est_cmd->add_option("--at", opt.at, "evaluate at integer point u,v");
  add_poly("check", "full diagnostics suite for one Gorenstein polytope");
  add_poly("special", "special simplices");
  add_nef("cayley", "Cayley polytope of the blocks and the Gorenstein equivalences");
  add_nef("nef-dual", "dual nef-partition");
  CLI::App* collect_cmd = add_nef("nef-collect", "merge blocks of a nef-partition");
  collect_cmd->add_option("--blocks", opt.blocks, "blocks, e.g. 0,1;2")->required();
  CLI::App* project_cmd = add_nef("nef-project", "project along the span of selected parts");
  project_cmd->add_option("--along", opt.along, "part indices, e.g. 1,2")->required();
  add_nef("nef-decompose", "decomposition into irreducible nef-partitions");
  add_nef("nef-cancel", "reflexivity of two summands of a reflexive Minkowski sum");
  CLI::App* weighted_cmd = add("weighted", "simplex of a weight system");
  weighted_cmd->add_option("w", weight_total, "total weight")->required();
  weighted_cmd->add_option("weights", weight_list, "comma-separated weights")->required();
  CLI::App* batch_cmd = add("batch", "run a single-polytope command over many files");
  batch_cmd->add_option("command", cmd, "one of dual, gorenstein, hstar, stilde, est, check, special")
      ->required();
  batch_cmd->add_option("files", files, "polytope files")->required()->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  try {
    if (name == "batch") return run_batch(cmd, files, opt);
    if (name == "weighted") {
      WeightSystem ws;
      ws.w = Int(std::stol(weight_total));
      for (long v : parse_longs(weight_list, ',', "weight")) ws.weights.push_back(Int(v));
      WeightedReport rep = weighted_simplex(ws, opt.cap);
      json ks = json::array();
      for (const auto& k : rep.k) ks.push_back(json_int(k));
      emit(json{{"k", ks},
                {"sum_inv_k", json_rat(rep.sum_inv_k)},
                {"gorenstein", rep.gorenstein},
                {"index", json_int(rep.r)},
                {"cy_dim", rep.cy_dim},
                {"pyramid", rep.pyramid},
                {"est_zero", rep.est_zero},
                {"s", rep.s},
                {"bound_holds", rep.bound_holds},
                {"vertices", json_vertices(rep.simplex)}},
           opt);
      return 0;
    }
    if (name == "cayley") {
      CayleyCheck chk = cayley_gorenstein_check(read_nef_file(file));
      emit(json{{"cayley_gorenstein", chk.cayley_gorenstein},
                {"index", json_int(chk.cayley_index)},
                {"cone_reflexive", chk.cone_reflexive},
                {"minkowski_reflexive", chk.minkowski_reflexive},
                {"m_matches", chk.m_matches},
                {"all_equivalent", chk.all_equivalent},
                {"cayley_vertices", json_vertices(chk.cayley)}},
           opt);
      return 0;
    }
    if (name == "nef-dual") {
      NefPartition dual = dual_nef(load_centered(file, opt.cap));
      emit_nef(json{{"parts", json_parts(dual.parts)}}, dual.parts, opt);
      return 0;
    }
    if (name == "nef-collect") {
      std::vector<std::vector<int>> blocks;
      std::istringstream in(opt.blocks);
      std::string tok;
      while (std::getline(in, tok, ';')) blocks.push_back(parse_index_set(tok, "block"));
      NefPartition merged = collect(load_centered(file, opt.cap), blocks, opt.cap);
      emit_nef(json{{"parts", json_parts(merged.parts)}}, merged.parts, opt);
      return 0;
    }
    if (name == "nef-project") {
      NefProjection proj = project_nef(load_centered(file, opt.cap),
                                       parse_index_set(opt.along, "part index"));
      json rows = json::array();
      for (const auto& row : proj.projection.to_rows()) rows.push_back(json_vec(row));
      emit_nef(json{{"parts", json_parts(proj.projected.parts)},
                    {"projection", rows},
                    {"face_vertices", json_vertices(proj.face)},
                    {"dual_parts", json_parts(proj.dual_projected.parts)}},
               proj.projected.parts, opt);
      return 0;
    }
    if (name == "nef-decompose") {
      NefDecomposition dec = decompose_irreducible(load_centered(file, opt.cap));
      json comps = json::array();
      for (const auto& c : dec.components) comps.push_back(json_parts(c.parts));
      emit(json{{"blocks", dec.blocks},
                {"direct_sum", dec.direct_sum},
                {"length_bound", dec.length_bound},
                {"hull_crosspolytope", dec.hull_crosspolytope},
                {"components", comps}},
           opt);
      return 0;
    }
    if (name == "nef-cancel") {
      auto parts = read_nef_file(file);
      if (parts.size() != 2)
        throw std::invalid_argument("nef-cancel expects exactly two blocks, got " +
                                    std::to_string(parts.size()));
      CancelReport rep = cancel_check(parts[0], parts[1], opt.cap);
      emit(json{{"sum_reflexive", rep.sum_reflexive},
                {"p_has_interior_point", rep.p_has_interior_point},
                {"applies", rep.applies},
                {"p_reflexive", rep.p_reflexive},
                {"q_reflexive", rep.q_reflexive},
                {"nef_partition", rep.partition.has_value()}},
           opt);
      return 0;
    }

    LatticePolytope p = read_polytope_file(file);
    if (name == "est" && !opt.at.empty()) {
      auto uv = parse_longs(opt.at, ',', "evaluation point");
      if (uv.size() != 2) throw std::invalid_argument("--at expects two integers u,v");
      std::cout << est(p, opt.cap).e.eval_int(Int(uv[0]), Int(uv[1])) << "\n";
      return 0;
    }
    json result = run_poly_command(name, p, opt.cap);
    if (name == "dual")
      emit_polytope(result, dual_gorenstein(p).p_dual, opt);
    else
      emit(result, opt);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify(e);
  }
}
