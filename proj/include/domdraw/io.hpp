#ifndef DOMDRAW_IO_HPP
#define DOMDRAW_IO_HPP

#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "domdraw/channels.hpp"
#include "domdraw/ctc.hpp"
#include "domdraw/drawing.hpp"
#include "domdraw/error.hpp"
#include "domdraw/graph.hpp"
#include "domdraw/modular.hpp"

namespace domdraw::io {

using Json = nlohmann::ordered_json;

/// Vertex filter for user-facing output; the default keeps everything.
using KeepVertex = std::function<bool(const std::string&)>;

inline bool keep_all(const std::string&) { return true; }

inline bool is_reserved_id(const std::string& id) { return std::string_view(id).starts_with(kReservedPrefix); }

/// {"k": int, "channels": [[ids...], ...]}
inline Json decomposition_to_json(const Dag& g, const ChannelDecomposition& d, const KeepVertex& keep = keep_all) {
  Json channels = Json::array();
  for (const auto& c : d.channels()) {
    Json ids = Json::array();
    for (Vertex v : c)
      if (keep(g.id(v))) ids.push_back(g.id(v));
    channels.push_back(std::move(ids));
  }
  return Json{{"k", d.size()}, {"channels", std::move(channels)}};
}

/// {"k": int, "proj": {"vertex": [rank_0, ..., rank_{k-1}]}}
inline Json ctc_to_json(const CompressedTransitiveClosure& ctc, const KeepVertex& keep = keep_all) {
  Json proj = Json::object();
  for (Vertex v = 0; v < ctc.size(); ++v) {
    if (!keep(ctc.ids()[v])) continue;
    auto ranks = ctc.ranks(v);
    proj[ctc.ids()[v]] = Json(std::vector<std::uint32_t>(ranks.begin(), ranks.end()));
  }
  return Json{{"k", ctc.k()}, {"proj", std::move(proj)}};
}

/// {"k": int, "coords": {"vertex": [int x k]}, "provenance": "kd"|"nd"|"distinct"}
inline Json drawing_to_json(const DominanceDrawing& drawing) {
  Json coords = Json::object();
  for (std::size_t e = 0; e < drawing.size(); ++e) {
    auto c = drawing.coords(e);
    coords[drawing.id(e)] = Json(std::vector<Coord>(c.begin(), c.end()));
  }
  return Json{{"k", drawing.k()}, {"coords", std::move(coords)}, {"provenance", to_string(drawing.provenance())}};
}

inline DominanceDrawing drawing_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("k") || !j.contains("coords"))
      throw InputError("drawing JSON needs \"k\" and \"coords\"");
    const auto k = j.at("k").get<std::size_t>();
    Provenance provenance = Provenance::kKd;
    if (j.contains("provenance")) {
      auto p = parse_provenance(j.at("provenance").get<std::string>());
      if (!p) throw InputError("unknown drawing provenance '" + j.at("provenance").get<std::string>() + "'");
      provenance = *p;
    }
    if (!j.at("coords").is_object()) throw InputError("\"coords\" must be an object");
    DominanceDrawing drawing(k, provenance);
    for (const auto& [id, value] : j.at("coords").items()) {
      auto c = value.get<std::vector<Coord>>();
      if (c.size() != k)
        throw InputError("vertex '" + id + "' has " + std::to_string(c.size()) + " coordinates, expected " +
                         std::to_string(k));
      drawing.add(id, c);
    }
    return drawing;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed drawing JSON: ") + e.what());
  }
}

inline Json parse_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

/// {"blocks": [[ids...], ...]}. Vertices of `g` with reserved ids that the
/// document omits (augmentation vertices) are appended as singleton blocks.
inline CongruencePartition partition_from_json(const Json& j, const Dag& g) {
  try {
    if (!j.is_object() || !j.contains("blocks") || !j.at("blocks").is_array())
      throw InputError("partition JSON needs a \"blocks\" array");
    CongruencePartition p;
    std::vector<char> listed(g.size(), 0);
    for (const auto& block : j.at("blocks")) {
      std::vector<Vertex> members;
      for (const auto& id : block) {
        auto v = g.find(id.get<std::string>());
        if (!v) throw NotAPartition("partition names unknown vertex '" + id.get<std::string>() + "'");
        members.push_back(*v);
        listed[*v] = 1;
      }
      p.blocks.push_back(std::move(members));
    }
    for (Vertex v = 0; v < g.size(); ++v)
      if (!listed[v] && is_reserved_id(g.id(v))) p.blocks.push_back({v});
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed partition JSON: ") + e.what());
  }
}

inline Json partition_to_json(const Dag& g, const CongruencePartition& p, const KeepVertex& keep = keep_all) {
  Json blocks = Json::array();
  for (const auto& block : p.blocks) {
    Json ids = Json::array();
    for (Vertex v : block)
      if (keep(g.id(v))) ids.push_back(g.id(v));
    if (!ids.empty()) blocks.push_back(std::move(ids));
  }
  return Json{{"blocks", std::move(blocks)}};
}

inline Json neck_to_json(const NeckProfile& profile, std::size_t graph_width) {
  return Json{{"widths", profile.widths},
              {"w_N", profile.neck},
              {"w_G", graph_width},
              {"rho", profile.rho},
              {"w_rho", profile.width_at_rho}};
}

/// Pairs file: one "u v" query per line; '#' comments and blank lines skipped.
inline std::vector<std::pair<std::string, std::string>> read_pairs(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto view = detail::trim(line);
    if (view.empty() || view.front() == '#') continue;
    std::istringstream tokens{std::string(view)};
    std::string u, v, extra;
    if (!(tokens >> u >> v) || (tokens >> extra)) throw MalformedLine(lineno, "expected exactly two vertex ids");
    pairs.emplace_back(std::move(u), std::move(v));
  }
  return pairs;
}

/// Emits "u v yes|no" per pair.
inline void write_answers(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& pairs,
                          const std::vector<bool>& answers) {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out << pairs[i].first << ' ' << pairs[i].second << ' ' << (answers[i] ? "yes" : "no") << '\n';
}

}  // namespace domdraw::io

#endif  // DOMDRAW_IO_HPP
