// Command-line front end: width, channels, ctc, draw, modules, query,
// verify and render over edge-list graphs and drawing JSON files.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "domdraw/domdraw.hpp"
#include "domdraw/io.hpp"

namespace {

using namespace domdraw;

enum ExitCode : int { kOk = 0, kUsage = 1, kInput = 2, kVerification = 3 };

struct RunConfig {
  std::string input;
  std::string second;  // drawing for verify, graph for render
  std::string method = "kd";
  bool distinct = false;
  std::string partition;
  std::string pairs;
  std::string output;
  bool include_virtual = false;
  bool verify = false;
  std::size_t oracle_limit = kDefaultOracleLimit;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

Dag read_graph(const std::string& path) {
  auto in = open(path);
  return parse_edge_list(in);
}

DominanceDrawing read_drawing(const std::string& path) {
  auto in = open(path);
  return io::drawing_from_json(io::parse_json(in));
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw InputError("cannot write '" + cfg.output + "'");
  out << text;
}

std::string json_text(const io::Json& j) { return j.dump(2) + "\n"; }

io::KeepVertex keep_filter(const RunConfig& cfg) {
  if (cfg.include_virtual) return io::keep_all;
  return [](const std::string& id) { return !io::is_reserved_id(id); };
}

CongruencePartition partition_for(const RunConfig& cfg, const StGraph& st) {
  if (cfg.partition.empty()) return find_congruence_partition(st);
  auto in = open(cfg.partition);
  return io::partition_from_json(io::parse_json(in), st.dag());
}

DominanceDrawing compute_drawing(const RunConfig& cfg, const Dag& g, const StGraph& st) {
  DominanceDrawing drawing(0);
  if (cfg.method == "nd") {
    drawing = nd_draw(st, partition_for(cfg, st));
  } else {
    const auto d = min_channel_decomposition(st);
    drawing = kd_draw(st, d, build_ctc(st, d));
  }
  drawing = drawing.filtered(keep_filter(cfg));
  if (cfg.distinct)
    drawing = make_distinct(drawing, cfg.include_virtual ? topological_order(st.dag()) : topological_order(g));
  return drawing;
}

int report_dominance(const Dag& g, const DominanceDrawing& drawing) {
  const auto report = verify_dominance(g, drawing);
  for (const auto& issue : report.issues) std::cerr << "violation: " << describe(g, issue) << '\n';
  return report.valid() ? kOk : kVerification;
}

int cmd_width(const RunConfig& cfg) {
  const Dag g = read_graph(cfg.input);
  const StGraph st = to_st_graph(g);
  const std::size_t w = width(st);
  if (g.size() <= cfg.oracle_limit) {
    const auto antichain = max_antichain_bruteforce(g, cfg.oracle_limit);
    if (antichain.size() != w) {
      std::cerr << "width " << w << " disagrees with brute-force antichain of size " << antichain.size() << '\n';
      return kVerification;
    }
  }
  emit(cfg, std::to_string(w) + "\n");
  return kOk;
}

int cmd_channels(const RunConfig& cfg) {
  const StGraph st = to_st_graph(read_graph(cfg.input));
  emit(cfg, json_text(io::decomposition_to_json(st.dag(), min_channel_decomposition(st), keep_filter(cfg))));
  return kOk;
}

int cmd_ctc(const RunConfig& cfg) {
  const StGraph st = to_st_graph(read_graph(cfg.input));
  const auto ctc = build_ctc(st, min_channel_decomposition(st));
  emit(cfg, json_text(io::ctc_to_json(ctc, keep_filter(cfg))));
  return kOk;
}

int cmd_draw(const RunConfig& cfg) {
  const Dag g = read_graph(cfg.input);
  const StGraph st = to_st_graph(g);
  const auto drawing = compute_drawing(cfg, g, st);
  emit(cfg, json_text(io::drawing_to_json(drawing)));
  if (cfg.verify) return report_dominance(cfg.include_virtual ? st.dag() : g, drawing);
  return kOk;
}

int cmd_modules(const RunConfig& cfg) {
  const StGraph st = to_st_graph(read_graph(cfg.input));
  const auto p = partition_for(cfg, st);
  const auto report = validate_partition(st, p);
  if (!report.valid()) {
    for (const auto& issue : report.issues) std::cerr << "violation: " << describe(st.dag(), issue) << '\n';
    return kVerification;
  }
  const auto profile = dimensional_neck(modular_graphs(st, p));
  auto j = io::partition_to_json(st.dag(), p, keep_filter(cfg));
  j["neck"] = io::neck_to_json(profile, width(st));
  emit(cfg, json_text(j));
  return kOk;
}

int cmd_query(const RunConfig& cfg) {
  const auto index = build_index(read_drawing(cfg.input));
  auto in = open(cfg.pairs);
  const auto pairs = io::read_pairs(in);
  std::vector<bool> answers;
  try {
    answers = batch_query(index, pairs);
  } catch (const UnknownVertexInPair& e) {
    throw InputError("pair " + std::to_string(e.pair_index() + 1) + ": " + e.what());
  }
  std::ostringstream out;
  io::write_answers(out, pairs, answers);
  emit(cfg, out.str());
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  const Dag g = read_graph(cfg.input);
  const StGraph st = to_st_graph(g);
  const auto drawing = cfg.second.empty() ? compute_drawing(cfg, g, st) : read_drawing(cfg.second);
  const int status = report_dominance(g, drawing);
  emit(cfg, status == kOk ? "ok: " + std::to_string(g.size()) + " vertices, k=" + std::to_string(drawing.k()) + "\n"
                          : std::string("failed\n"));
  return status;
}

int cmd_render(const RunConfig& cfg) {
  const auto drawing = read_drawing(cfg.input);
  if (drawing.k() != 2) throw UsageError(NotTwoDimensional().what());
  std::optional<Dag> g;
  if (!cfg.second.empty()) g = read_graph(cfg.second);
  emit(cfg, render_svg(drawing, g ? &*g : nullptr));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Multidimensional dominance drawings and reachability indexes for DAGs"};
  app.require_subcommand(1);

  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", cfg.output, "Write the result to FILE"); };
  auto add_virtual = [&](CLI::App* sub) {
    sub->add_flag("--include-virtual", cfg.include_virtual, "Keep augmentation vertices (__S, __T) in the output");
  };
  auto add_drawing_options = [&](CLI::App* sub) {
    sub->add_option("--method", cfg.method, "Drawing algorithm")->check(CLI::IsMember({"kd", "nd"}));
    sub->add_flag("--distinct", cfg.distinct, "Re-rank every dimension to distinct coordinates");
    sub->add_option("--partition", cfg.partition, "Congruence partition JSON for --method nd");
  };

  auto* width_cmd = app.add_subcommand("width", "Print the width of the graph");
  width_cmd->add_option("graph", cfg.input, "Edge-list file")->required();
  width_cmd->add_option("--oracle-limit", cfg.oracle_limit,
                        "Cross-check against the brute-force antichain up to this many vertices");
  add_output(width_cmd);

  auto* channels_cmd = app.add_subcommand("channels", "Minimum channel decomposition as JSON");
  channels_cmd->add_option("graph", cfg.input, "Edge-list file")->required();
  add_virtual(channels_cmd);
  add_output(channels_cmd);

  auto* ctc_cmd = app.add_subcommand("ctc", "Compressed transitive closure as JSON");
  ctc_cmd->add_option("graph", cfg.input, "Edge-list file")->required();
  add_virtual(ctc_cmd);
  add_output(ctc_cmd);

  auto* draw_cmd = app.add_subcommand("draw", "Dominance drawing as JSON");
  draw_cmd->add_option("graph", cfg.input, "Edge-list file")->required();
  add_drawing_options(draw_cmd);
  draw_cmd->add_flag("--verify", cfg.verify, "Check the drawing against the reachability oracle");
  add_virtual(draw_cmd);
  add_output(draw_cmd);

  auto* modules_cmd = app.add_subcommand("modules", "Congruence partition and dimensional neck");
  modules_cmd->add_option("graph", cfg.input, "Edge-list file")->required();
  modules_cmd->add_option("--partition", cfg.partition, "Partition JSON to check instead of computing one");
  add_virtual(modules_cmd);
  add_output(modules_cmd);

  auto* query_cmd = app.add_subcommand("query", "Answer reachability queries from a drawing");
  query_cmd->add_option("drawing", cfg.input, "Drawing JSON")->required();
  query_cmd->add_option("--pairs", cfg.pairs, "File of \"u v\" lines")->required();
  add_output(query_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check a drawing against the reachability oracle");
  verify_cmd->add_option("graph", cfg.input, "Edge-list file")->required();
  verify_cmd->add_option("drawing", cfg.second, "Drawing JSON (computed when omitted)");
  add_drawing_options(verify_cmd);
  add_output(verify_cmd);

  auto* render_cmd = app.add_subcommand("render", "SVG of a 2-dimensional drawing");
  render_cmd->add_option("drawing", cfg.input, "Drawing JSON")->required();
  render_cmd->add_option("graph", cfg.second, "Edge-list file whose edges are drawn");
  add_output(render_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*width_cmd) return cmd_width(cfg);
    if (*channels_cmd) return cmd_channels(cfg);
    if (*ctc_cmd) return cmd_ctc(cfg);
    if (*draw_cmd) return cmd_draw(cfg);
    if (*modules_cmd) return cmd_modules(cfg);
    if (*query_cmd) return cmd_query(cfg);
    if (*verify_cmd) return cmd_verify(cfg);
    if (*render_cmd) return cmd_render(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}
