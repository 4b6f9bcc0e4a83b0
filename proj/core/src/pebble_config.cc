#include "pebhub/pebble_config.h"

#include <charconv>
#include <numeric>

namespace pebhub {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename F>
void ForEachCommaField(std::string_view text, F&& f) {
  text = Trim(text);
  if (text.empty()) return;
  size_t pos = 0;
  while (true) {
    const size_t comma = text.find(',', pos);
    f(Trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                              : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
}

}  // namespace

PebbleConfig::PebbleConfig(std::vector<uint32_t> counts)
    : counts_(std::move(counts)),
      total_(std::accumulate(counts_.begin(), counts_.end(), uint64_t{0})) {}

PebbleConfig PebbleConfig::Stacked(int num_vertices, int vertex, uint32_t count) {
  PebbleConfig c(num_vertices);
  c.Set(vertex, count);
  return c;
}

void PebbleConfig::Set(int v, uint32_t count) {
  total_ = total_ - counts_[v] + count;
  counts_[v] = count;
}

VertexSet PebbleConfig::support() const {
  VertexSet s;
  for (int v = 0; v < num_vertices(); ++v) {
    if (counts_[v] > 0) s.insert(v);
  }
  return s;
}

bool PebbleConfig::IsDominatedBy(const PebbleConfig& other) const {
  if (other.num_vertices() != num_vertices()) return false;
  for (int v = 0; v < num_vertices(); ++v) {
    if (counts_[v] > other.counts_[v]) return false;
  }
  return true;
}

PebbleConfig ApplyMove(const Graph& graph, const PebbleConfig& config, int from,
                       int to) {
  const int n = graph.num_vertices();
  if (from < 0 || from >= n || to < 0 || to >= n) {
    throw IllegalMoveError("move endpoint out of range");
  }
  if (!graph.adjacent(from, to)) {
    throw IllegalMoveError("illegal move " + std::to_string(from) + "->" +
                           std::to_string(to) + ": vertices are not adjacent");
  }
  if (config[from] < 2) {
    throw IllegalMoveError("illegal move " + std::to_string(from) + "->" +
                           std::to_string(to) + ": source holds " +
                           std::to_string(config[from]) + " pebble(s), needs 2");
  }
  PebbleConfig next = config;
  next.Set(from, config[from] - 2);
  next.Add(to, 1);
  return next;
}

PebbleConfig ParseConfig(const Graph& graph, std::string_view text) {
  PebbleConfig config(graph.num_vertices());
  ForEachCommaField(text, [&](std::string_view field) {
    const auto colon = field.find(':');
    if (field.empty() || colon == std::string_view::npos) {
      throw std::invalid_argument("expected label:count, got '" + std::string(field) +
                                  "'");
    }
    const int v = graph.VertexIndex(Trim(field.substr(0, colon)));
    const std::string_view number = Trim(field.substr(colon + 1));
    uint32_t count = 0;
    auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), count);
    if (ec != std::errc() || ptr != number.data() + number.size()) {
      throw std::invalid_argument("bad pebble count in '" + std::string(field) + "'");
    }
    config.Add(v, count);
  });
  return config;
}

std::string FormatConfig(const Graph& graph, const PebbleConfig& config) {
  std::string out;
  for (int v = 0; v < config.num_vertices(); ++v) {
    if (config[v] == 0) continue;
    if (!out.empty()) out += ',';
    out += graph.VertexLabel(v) + ':' + std::to_string(config[v]);
  }
  return out;
}

VertexSet ParseVertexSet(const Graph& graph, std::string_view text) {
  VertexSet set;
  ForEachCommaField(text, [&](std::string_view field) {
    if (field.empty()) throw std::invalid_argument("empty vertex label");
    set.insert(graph.VertexIndex(field));
  });
  return set;
}

std::string FormatVertexSet(const Graph& graph, VertexSet set) {
  std::string out;
  set.ForEach([&](int v) {
    if (!out.empty()) out += ',';
    out += graph.VertexLabel(v);
  });
  return out;
}

}  // namespace pebhub
