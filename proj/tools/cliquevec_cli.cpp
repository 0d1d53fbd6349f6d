// Command-line surface over the clique-bound library. Every numeric value
// is emitted as a decimal string: counts are unbounded integers and must
// never pass through floating point.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cliquevec/board.hpp"
#include "cliquevec/bounds.hpp"
#include "cliquevec/complexes.hpp"
#include "cliquevec/constructions.hpp"
#include "cliquevec/graph_io.hpp"
#include "cliquevec/graphs.hpp"
#include "cliquevec/oracle.hpp"
#include "cliquevec/representations.hpp"
#include "cliquevec/version.hpp"

using json = nlohmann::json;
using namespace cliquevec;

namespace {

constexpr int kExitDomainError = 2;
constexpr int kExitInapplicable = 3;
constexpr int kExitCounterexample = 4;

Nat parse_nat(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("expected a non-negative integer, got '" +
                                text + "'");
  }
  return Nat(text);
}

std::vector<Nat> parse_nat_list(const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<Nat> values;
  std::string token;
  while (in >> token) values.push_back(parse_nat(token));
  return values;
}

std::string str(const Nat& n) { return n.str(); }

json nat_list(const std::vector<Nat>& values) {
  json out = json::array();
  for (const Nat& v : values) out.push_back(str(v));
  return out;
}

// Exact decimal rendering of p/q to `digits` places, truncated.
std::string decimal_string(const Rational& value, int digits = 6) {
  Nat p = boost::multiprecision::numerator(value);
  Nat q = boost::multiprecision::denominator(value);
  Nat whole = p / q;
  Nat rest = p % q;
  std::string out = whole.str();
  out.push_back('.');
  for (int i = 0; i < digits; ++i) {
    rest *= 10;
    out += Nat(rest / q).str();
    rest %= q;
  }
  return out;
}

json rational_json(const Rational& value) {
  return json{{"numerator", str(boost::multiprecision::numerator(value))},
              {"denominator", str(boost::multiprecision::denominator(value))},
              {"decimal", decimal_string(value)}};
}

void emit(const std::string& command, const json& payload) {
  json envelope{{"command", command},
                {"version", kVersion},
                {"payload", payload}};
  std::cout << envelope.dump(2) << '\n';
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out.push_back(' ');
    out += argv[i];
  }
  return out;
}

json board_state_json(const BoardState& s) {
  return json{{"top", nat_list(s.top)}, {"bottom", nat_list(s.bottom)}};
}

json move_record_json(const MoveRecord& move) {
  json substeps = json::array();
  for (Substep step : move.substeps) {
    substeps.push_back(step == Substep::Subdivide ? "subdivide" : "collapse");
  }
  return json{{"type", move_name(move.type)},
              {"substeps", substeps},
              {"pre", board_state_json(move.pre)},
              {"post", board_state_json(move.post)},
              {"rk_top_before", str(move.rk_top_before)},
              {"rk_top_after", str(move.rk_top_after)},
              {"rk_bottom_before", str(move.rk_bottom_before)},
              {"rk_bottom_after", str(move.rk_bottom_after)},
              {"rk1_top_before", str(move.rk1_top_before)},
              {"rk1_top_after", str(move.rk1_top_after)},
              {"rk1_bottom_before", str(move.rk1_bottom_before)},
              {"rk1_bottom_after", str(move.rk1_bottom_after)}};
}

const char* winner_name(Winner w) {
  switch (w) {
    case Winner::Large: return "LGBD";
    case Winner::Small: return "SMBD";
    case Winner::Tie: return "TIE";
  }
  return "?";
}

Graph read_graph_file(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::string kind = format;
  if (kind == "auto") {
    kind = text.rfind("n ", 0) == 0 ? "edgelist" : "graph6";
  }
  if (kind == "edgelist") return from_edge_list(text);
  return from_graph6(text);
}

struct CliOptions {
  std::string m_text, j_text, top_text, bottom_text, grid_text;
  std::string file, format = "json", csv_path;
  int k = 0, r = -1, step = 1, which = 0, n_max = 7, threads = 1;
  bool allow_large = false;
};

int run_repr(const std::string& cmd, const CliOptions& opt) {
  Nat m = parse_nat(opt.m_text);
  json payload;
  payload["m"] = str(m);
  payload["k"] = opt.k;
  CascadeRep cascade = cascade_rep(m, opt.k);
  payload["cascade"] = json{{"terms", nat_list(cascade.terms)},
                            {"value", str(cascade.value())}};
  if (opt.k >= 2) {
    TwoTermRep two = two_term_rep(m, opt.k);
    payload["two_term"] = json{{"lead", str(two.lead)},
                               {"second", str(two.second)},
                               {"second_absent", two.second_absent()},
                               {"tail", nat_list(two.tail)},
                               {"value", str(two.value())}};
  } else {
    payload["two_term"] = nullptr;
  }
  long long lead = cascade.terms[0].convert_to<long long>();
  long long budget = opt.r >= 0 ? opt.r : lead - 1;
  if (budget >= opt.k) {
    ColoredRep colored = colored_rep(m, opt.k, budget);
    json terms = json::array();
    for (const ColoredTerm& t : colored.terms) {
      terms.push_back(json{{"n", str(t.n)}, {"color", t.color}});
    }
    payload["colored"] = json{{"r", budget},
                              {"terms", terms},
                              {"value", str(colored.value())}};
  } else if (opt.r >= 0) {
    throw std::invalid_argument("colored representation needs r >= k");
  } else {
    payload["colored"] = nullptr;
  }
  emit(cmd, payload);
  return 0;
}

int run_bound(const std::string& cmd, const CliOptions& opt) {
  Nat m = parse_nat(opt.m_text);
  BoundReport report = combined_bound(m, opt.k);
  json payload{{"m", str(m)},
               {"k", opt.k},
               {"kruskal_katona", str(report.kruskal_katona)},
               {"large_clique", str(report.large_clique)},
               {"small_clique", report.small_clique
                                    ? json(str(*report.small_clique))
                                    : json(nullptr)},
               {"combined", str(report.combined)},
               {"winner", winner_name(report.winner)}};
  if (opt.step > 1) {
    MultistepReport multi = multistep_report(m, opt.k, opt.step);
    payload["step"] = opt.step;
    payload["multistep"] =
        json{{"clique_route", str(multi.clique_route)},
             {"colored_route", multi.colored_route
                                   ? json(str(*multi.colored_route))
                                   : json(nullptr)},
             {"bound", str(multi.bound)}};
  }
  emit(cmd, payload);
  return 0;
}

int run_construct(const std::string& cmd, const CliOptions& opt) {
  Nat m = parse_nat(opt.m_text);
  BuiltConstruction built;
  try {
    built = build_construction(static_cast<ConstructionKind>(opt.which), m,
                               opt.k);
  } catch (const InapplicableError& e) {
    emit(cmd, json{{"error", "inapplicable"}, {"reason", e.what()}});
    return kExitInapplicable;
  }
  if (opt.format == "graph6") {
    std::cout << to_graph6(built.graph) << '\n';
    return 0;
  }
  if (opt.format == "edgelist") {
    std::cout << to_edge_list(built.graph);
    return 0;
  }
  json payload{{"m", str(m)},
               {"k", opt.k},
               {"which", opt.which},
               {"parameters", nat_list(built.plan.parameters)},
               {"padding_blocks", built.plan.padding_blocks},
               {"predicted", json{{"ck", str(built.plan.predicted_ck)},
                                  {"ck1", str(built.plan.predicted_ck1)}}},
               {"verified_by_enumeration", built.plan.verified},
               {"vertices", built.graph.vertex_count()},
               {"graph6", to_graph6(built.graph)}};
  emit(cmd, payload);
  return 0;
}

int run_cliques(const std::string& cmd, const CliOptions& opt) {
  Graph g = read_graph_file(opt.file, opt.format == "json" ? "auto" : opt.format);
  CliqueVector counts = clique_vector(g);
  emit(cmd, json{{"file", opt.file},
                 {"vertices", g.vertex_count()},
                 {"edges", g.edge_count()},
                 {"clique_vector", nat_list(counts.counts)}});
  return 0;
}

int run_revlex(const std::string& cmd, const CliOptions& opt) {
  Nat m = parse_nat(opt.m_text);
  Complex complex = opt.r >= 0 ? colored_revlex_complex(opt.k, m, opt.r)
                               : revlex_complex(opt.k, m);
  if (opt.format == "facets") {
    std::cout << to_facet_text(complex);
    return 0;
  }
  std::vector<Nat> fv = face_vector(complex);
  json facets = json::array();
  for (const Face& f : complex.facets) facets.push_back(f);
  emit(cmd, json{{"k", opt.k},
                 {"m", str(m)},
                 {"r", opt.r >= 0 ? json(opt.r) : json(nullptr)},
                 {"face_vector", nat_list(fv)},
                 {"facets", facets}});
  return 0;
}

int run_board_cmd(const std::string& cmd, const CliOptions& opt) {
  std::vector<Nat> top = parse_nat_list(opt.top_text);
  std::vector<Nat> bottom = parse_nat_list(opt.bottom_text);
  BoardTrace trace = run_board(opt.k, top, bottom);
  if (opt.format == "ascii") {
    std::cout << "initial:\n" << render_ascii(trace.initial);
    for (const MoveRecord& move : trace.moves) {
      std::cout << "after " << move_name(move.type) << ":\n"
                << render_ascii(move.post);
    }
    return 0;
  }
  json moves = json::array();
  for (const MoveRecord& move : trace.moves) {
    moves.push_back(move_record_json(move));
  }
  emit(cmd, json{{"k", opt.k},
                 {"initial", board_state_json(trace.initial)},
                 {"final", board_state_json(trace.final_state)},
                 {"moves", moves},
                 {"steps", trace.moves.size()},
                 {"strict_increase_occurred", trace.strict_increase_occurred}});
  return 0;
}

int run_verify(const std::string& cmd, const CliOptions& opt) {
  oracle::ExtremalTable table =
      oracle::build_extremal_table(opt.k, opt.n_max, opt.threads,
                                   opt.allow_large);
  oracle::VerifyReport report = oracle::verify_table(table);
  if (!opt.csv_path.empty()) {
    std::ofstream out(opt.csv_path);
    if (!out) throw std::invalid_argument("cannot write '" + opt.csv_path + "'");
    out << table.to_csv();
  }
  if (opt.format == "csv") {
    std::cout << table.to_csv();
    return report.ok() ? 0 : kExitCounterexample;
  }
  json counterexamples = json::array();
  for (const std::string& g6 : report.counterexamples) {
    counterexamples.push_back(g6);
  }
  emit(cmd, json{{"k", report.k},
                 {"n_max", report.n_max},
                 {"graphs", report.graphs},
                 {"combined_violations", report.combined_violations},
                 {"refined_violations", report.refined_violations},
                 {"rows_nonempty", report.rows_nonempty},
                 {"rows_attaining_bound", report.rows_attaining_bound},
                 {"counterexamples", counterexamples}});
  return report.ok() ? 0 : kExitCounterexample;
}

int run_stats_fj(const std::string& cmd, const CliOptions& opt) {
  std::vector<unsigned long long> grid;
  if (!opt.grid_text.empty()) {
    for (const Nat& j : parse_nat_list(opt.grid_text)) {
      grid.push_back(j.convert_to<unsigned long long>());
    }
  }
  if (!opt.j_text.empty()) {
    grid.push_back(parse_nat(opt.j_text).convert_to<unsigned long long>());
  }
  if (grid.empty()) throw std::invalid_argument("stats fj needs --j or --grid");
  if (opt.format == "csv") {
    std::cout << "j,numerator,denominator,decimal\n";
    for (unsigned long long j : grid) {
      Rational f = large_win_fraction(j, opt.k);
      std::cout << j << ',' << boost::multiprecision::numerator(f) << ','
                << boost::multiprecision::denominator(f) << ','
                << decimal_string(f) << '\n';
    }
    return 0;
  }
  json points = json::array();
  for (unsigned long long j : grid) {
    Rational f = large_win_fraction(j, opt.k);
    points.push_back(json{{"j", std::to_string(j)},
                          {"fraction", rational_json(f)}});
  }
  emit(cmd, json{{"k", opt.k}, {"points", points}});
  return 0;
}

int run_stats_ratio(const std::string& cmd, const CliOptions& opt) {
  Nat m = parse_nat(opt.m_text);
  RatioStats stats = ratio_stats(m, opt.k);
  emit(cmd,
       json{{"m", str(m)},
            {"k", opt.k},
            {"constructive_lower", str(stats.constructive_lower)},
            {"kruskal_katona", str(kruskal_katona_bound(m, opt.k))},
            {"large_clique", str(large_clique_bound(m, opt.k))},
            {"ratio_proxy", rational_json(stats.ratio_proxy)},
            {"ratbound_rhs", stats.ratbound_rhs
                                 ? rational_json(*stats.ratbound_rhs)
                                 : json(nullptr)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact clique-vector bounds, representations, rev-lex "
               "complexes, extremal constructions, and a brute-force "
               "verifier"};
  app.require_subcommand(1);
  CliOptions opt;

  auto* repr = app.add_subcommand("repr", "binomial representations of m");
  repr->add_option("--m", opt.m_text, "value to decompose")->required();
  repr->add_option("--k", opt.k, "clique size")->required();
  repr->add_option("--r", opt.r, "color budget for the colored form");

  auto* bound = app.add_subcommand("bound", "clique-count bounds at (m, k)");
  bound->add_option("--m", opt.m_text)->required();
  bound->add_option("--k", opt.k)->required();
  bound->add_option("--step", opt.step, "dimension step (default 1)");

  auto* construct =
      app.add_subcommand("construct", "bound-attaining graph constructions");
  construct->add_option("--m", opt.m_text)->required();
  construct->add_option("--k", opt.k)->required();
  construct->add_option("--which", opt.which, "construction 1, 2 or 3")
      ->required()
      ->check(CLI::Range(1, 3));
  construct->add_option("--format", opt.format, "json, graph6 or edgelist");

  auto* cliques = app.add_subcommand("cliques", "clique vector of a graph file");
  cliques->add_option("--file", opt.file, "graph6 or edge-list file")
      ->required();
  cliques->add_option("--format", opt.format, "auto, graph6 or edgelist");

  auto* revlex = app.add_subcommand("revlex", "rev-lex complexes");
  revlex->add_option("--k", opt.k)->required();
  revlex->add_option("--m", opt.m_text)->required();
  revlex->add_option("--r", opt.r, "permissibility modulus");
  revlex->add_option("--format", opt.format, "json or facets");

  auto* board = app.add_subcommand("board", "two-row rearrangement runs");
  board->add_option("--k", opt.k)->required();
  board->add_option("--top", opt.top_text, "top-row cascade terms")->required();
  board->add_option("--bottom", opt.bottom_text, "bottom-row cascade terms")
      ->required();
  board->add_option("--format", opt.format, "json or ascii");

  auto* verify = app.add_subcommand("verify", "exhaustive bound verification");
  verify->add_option("--k", opt.k)->required();
  verify->add_option("--n-max", opt.n_max, "vertex count (default 7)");
  verify->add_option("--threads", opt.threads);
  verify->add_option("--csv", opt.csv_path, "write the extremal table here");
  verify->add_flag("--allow-large", opt.allow_large, "permit n-max = 8");
  verify->add_option("--format", opt.format, "json, or csv for the table");

  auto* stats = app.add_subcommand("stats", "bound statistics");
  stats->require_subcommand(1);
  auto* fj = stats->add_subcommand("fj", "large-bound win fraction");
  fj->add_option("--k", opt.k)->required();
  fj->add_option("--j", opt.j_text, "single prefix length");
  fj->add_option("--grid", opt.grid_text, "comma-separated prefix lengths");
  fj->add_option("--format", opt.format, "json or csv");
  auto* ratio = stats->add_subcommand("ratio", "tightness ratio statistics");
  ratio->add_option("--m", opt.m_text)->required();
  ratio->add_option("--k", opt.k)->required();

  CLI11_PARSE(app, argc, argv);
  std::string cmd = join_args(argc, argv);

  try {
    if (*repr) return run_repr(cmd, opt);
    if (*bound) return run_bound(cmd, opt);
    if (*construct) return run_construct(cmd, opt);
    if (*cliques) return run_cliques(cmd, opt);
    if (*revlex) return run_revlex(cmd, opt);
    if (*board) return run_board_cmd(cmd, opt);
    if (*verify) return run_verify(cmd, opt);
    if (*fj) return run_stats_fj(cmd, opt);
    if (*ratio) return run_stats_ratio(cmd, opt);
  } catch (const InapplicableError& e) {
    std::cerr << "inapplicable: " << e.what() << '\n';
    return kExitInapplicable;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitDomainError;
}
