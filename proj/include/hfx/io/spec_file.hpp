#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hfx/suite.hpp"

namespace hfx::io {

// Line-oriented spec files ('#' starts a comment):
//
//   mode vertex            mode graph            mode face
//   [objects]  name dim    maxdeg L              maxdeg L
//   [p]  unit I            [vertices]  name      [zero_cells]  name   (optional)
//        a b u count       [edges]  name src dst [cells]  name src dst deg dim
//   [q]  unit J                                  [p] / [q]  a b u count
//        a b u count
//   [sigma]  a sa          (optional)

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] inline void fail(ErrorCode code, std::size_t line, const std::string& what) {
  throw Error(code, "line " + std::to_string(line) + ": " + what);
}

inline std::uint64_t parse_count(const std::string& tok, std::size_t line) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(ErrorCode::parse, line, "expected an integer, got '" + tok + "'");
  if (v < 0) fail(ErrorCode::range, line, "negative value " + tok);
  return static_cast<std::uint64_t>(v);
}

inline void expect_tokens(const Line& l, std::size_t n, std::string_view shape) {
  if (l.tokens.size() != n) fail(ErrorCode::parse, l.number, "expected '" + std::string(shape) + "'");
}

template <typename Lookup>
std::size_t resolve(const Lookup& lookup, const std::string& name, std::size_t line) {
  try {
    return lookup(name);
  } catch (const Error& e) {
    fail(e.code(), line, e.what());
  }
}

struct RawFile {
  std::string mode;
  std::optional<unsigned> maxdeg;
  std::map<std::string, std::vector<Line>> sections;
  std::map<std::string, std::size_t> header_line;
};

inline RawFile split_sections(std::string_view text, const std::map<std::string, std::vector<std::string>>& allowed) {
  RawFile raw;
  std::string current;
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty()) continue;
    if (tokens[0].front() == '[') {
      if (tokens.size() != 1 || tokens[0].back() != ']') fail(ErrorCode::parse, number, "malformed section header");
      if (raw.mode.empty()) fail(ErrorCode::parse, number, "section before 'mode'");
      current = tokens[0].substr(1, tokens[0].size() - 2);
      const auto& ok = allowed.at(raw.mode);
      if (std::find(ok.begin(), ok.end(), current) == ok.end())
        fail(ErrorCode::parse, number, "unknown section [" + current + "] for mode " + raw.mode);
      if (raw.header_line.contains(current)) fail(ErrorCode::parse, number, "repeated section [" + current + "]");
      raw.header_line[current] = number;
      raw.sections[current];
      continue;
    }
    if (current.empty()) {
      if (tokens[0] == "mode") {
        if (tokens.size() != 2 || !raw.mode.empty()) fail(ErrorCode::parse, number, "expected a single 'mode NAME'");
        if (!allowed.contains(tokens[1])) fail(ErrorCode::parse, number, "unknown mode '" + tokens[1] + "'");
        raw.mode = tokens[1];
      } else if (tokens[0] == "maxdeg") {
        if (tokens.size() != 2 || raw.maxdeg) fail(ErrorCode::parse, number, "expected a single 'maxdeg L'");
        raw.maxdeg = static_cast<unsigned>(parse_count(tokens[1], number));
      } else {
        fail(ErrorCode::parse, number, "unexpected '" + tokens[0] + "' outside a section");
      }
      continue;
    }
    raw.sections[current].push_back({number, std::move(tokens)});
  }
  if (raw.mode.empty()) throw Error(ErrorCode::parse, "missing 'mode' line");
  return raw;
}

inline void require_section(const RawFile& raw, const std::string& name) {
  if (!raw.sections.contains(name)) throw Error(ErrorCode::parse, "missing section [" + name + "]");
}

template <typename Lookup>
std::map<Triple, std::uint64_t> parse_triples(const std::vector<Line>& lines, const Lookup& lookup,
                                              std::optional<std::size_t>* unit_out) {
  std::map<Triple, std::uint64_t> out;
  for (const Line& l : lines) {
    if (l.tokens[0] == "unit" && unit_out != nullptr) {
      expect_tokens(l, 2, "unit NAME");
      if (unit_out->has_value()) fail(ErrorCode::parse, l.number, "repeated unit line");
      *unit_out = resolve(lookup, l.tokens[1], l.number);
      continue;
    }
    expect_tokens(l, 4, "a b u count");
    const Triple k{resolve(lookup, l.tokens[0], l.number), resolve(lookup, l.tokens[1], l.number),
                   resolve(lookup, l.tokens[2], l.number)};
    const auto count = parse_count(l.tokens[3], l.number);
    if (out.contains(k)) fail(ErrorCode::parse, l.number, "repeated entry");
    if (count != 0) out.emplace(k, count);
  }
  return out;
}

inline HallFusionSpec parse_vertex(const RawFile& raw) {
  require_section(raw, "objects");
  require_section(raw, "p");
  require_section(raw, "q");
  if (raw.maxdeg) throw Error(ErrorCode::parse, "'maxdeg' is not used in vertex mode");
  DimCategory cat;
  for (const Line& l : raw.sections.at("objects")) {
    expect_tokens(l, 2, "name dim");
    const auto d = parse_count(l.tokens[1], l.number);
    if (d == 0) fail(ErrorCode::range, l.number, "dimension must be positive");
    if (std::find(cat.objects.begin(), cat.objects.end(), l.tokens[0]) != cat.objects.end())
      fail(ErrorCode::parse, l.number, "duplicate object '" + l.tokens[0] + "'");
    cat.objects.push_back(l.tokens[0]);
    cat.dims.push_back(d);
  }
  auto lookup = [&cat](const std::string& n) { return cat.index_of(n); };
  HallFusionSpec spec{cat, {cat, {}, 0}, {cat, {}, 0}, std::nullopt};
  for (auto [name, data] : {std::pair{"p", &spec.p_data}, std::pair{"q", &spec.q_data}}) {
    std::optional<std::size_t> unit;
    data->entries = parse_triples(raw.sections.at(name), lookup, &unit);
    if (!unit) fail(ErrorCode::parse, raw.header_line.at(name), std::string("[") + name + "] needs a 'unit NAME' line");
    data->unit = *unit;
  }
  if (raw.sections.contains("sigma")) {
    std::vector<std::optional<ObjectIndex>> image(cat.size());
    for (const Line& l : raw.sections.at("sigma")) {
      expect_tokens(l, 2, "a sigma(a)");
      const auto a = resolve(lookup, l.tokens[0], l.number);
      if (image[a]) fail(ErrorCode::parse, l.number, "repeated sigma entry");
      image[a] = resolve(lookup, l.tokens[1], l.number);
    }
    AntipodeMap sigma;
    for (std::size_t a = 0; a < image.size(); ++a) {
      if (!image[a]) throw Error(ErrorCode::parse, "[sigma] has no image for '" + cat.objects[a] + "'");
      sigma.image.push_back(*image[a]);
    }
    spec.sigma = sigma;
  }
  return spec;
}

inline GraphModel parse_graph(const RawFile& raw) {
  require_section(raw, "vertices");
  if (!raw.maxdeg) throw Error(ErrorCode::parse, "graph mode needs 'maxdeg L'");
  if (*raw.maxdeg < 1) throw Error(ErrorCode::range, "maxdeg must be at least 1");
  GraphModel model;
  model.max_degree = *raw.maxdeg;
  for (const Line& l : raw.sections.at("vertices")) {
    expect_tokens(l, 1, "name");
    model.graph.vertices.push_back(l.tokens[0]);
  }
  auto lookup = [&model](const std::string& n) -> std::size_t {
    const auto& v = model.graph.vertices;
    auto it = std::find(v.begin(), v.end(), n);
    if (it == v.end()) throw Error(ErrorCode::index, "undeclared vertex '" + n + "'");
    return static_cast<std::size_t>(it - v.begin());
  };
  if (raw.sections.contains("edges")) {
    for (const Line& l : raw.sections.at("edges")) {
      expect_tokens(l, 3, "name src dst");
      model.graph.edges.push_back({l.tokens[0], resolve(lookup, l.tokens[1], l.number), resolve(lookup, l.tokens[2], l.number)});
    }
  }
  model.graph.validate();
  return model;
}

inline FaceModel parse_face(const RawFile& raw) {
  require_section(raw, "cells");
  if (!raw.maxdeg) throw Error(ErrorCode::parse, "face mode needs 'maxdeg L'");
  FaceModel model;
  model.max_degree = *raw.maxdeg;
  auto& pc = model.data;
  const bool declared = raw.sections.contains("zero_cells");
  if (declared) {
    for (const Line& l : raw.sections.at("zero_cells")) {
      expect_tokens(l, 1, "name");
      pc.zero_cells.push_back(l.tokens[0]);
    }
  }
  auto zero = [&](const std::string& n, std::size_t line) -> ZeroCell {
    auto it = std::find(pc.zero_cells.begin(), pc.zero_cells.end(), n);
    if (it != pc.zero_cells.end()) return static_cast<ZeroCell>(it - pc.zero_cells.begin());
    if (declared) fail(ErrorCode::index, line, "undeclared 0-cell '" + n + "'");
    pc.zero_cells.push_back(n);
    return pc.zero_cells.size() - 1;
  };
  for (const Line& l : raw.sections.at("cells")) {
    expect_tokens(l, 5, "name src dst deg dim");
    OneCell c{l.tokens[0], zero(l.tokens[1], l.number), zero(l.tokens[2], l.number),
              static_cast<unsigned>(parse_count(l.tokens[3], l.number)), parse_count(l.tokens[4], l.number)};
    if (c.dim == 0) fail(ErrorCode::range, l.number, "dimension must be positive");
    pc.cells.push_back(std::move(c));
  }
  auto lookup = [&pc](const std::string& n) { return pc.cell_index(n); };
  if (raw.sections.contains("p")) pc.p = parse_triples(raw.sections.at("p"), lookup, nullptr);
  if (raw.sections.contains("q")) pc.q = parse_triples(raw.sections.at("q"), lookup, nullptr);
  pc.validate();
  return model;
}

}  // namespace detail

inline Model parse_spec_file(std::string_view text) {
  static const std::map<std::string, std::vector<std::string>> allowed{
      {"vertex", {"objects", "p", "q", "sigma"}},
      {"graph", {"vertices", "edges"}},
      {"face", {"zero_cells", "cells", "p", "q"}},
  };
  const auto raw = detail::split_sections(text, allowed);
  if (raw.mode == "vertex") return detail::parse_vertex(raw);
  if (raw.mode == "graph") return detail::parse_graph(raw);
  return detail::parse_face(raw);
}

inline std::string_view mode_name(const Model& m) {
  switch (m.index()) {
    case 0: return "vertex";
    case 1: return "face";
    default: return "graph";
  }
}

namespace detail {

inline void render_triples(std::ostream& out, const std::map<Triple, std::uint64_t>& entries,
                           const std::vector<std::string>& names) {
  for (const auto& [k, v] : entries) {
    if (v != 0) out << names.at(k[0]) << ' ' << names.at(k[1]) << ' ' << names.at(k[2]) << ' ' << v << '\n';
  }
}

}  // namespace detail

inline std::string render_spec_file(const Model& model) {
  std::ostringstream out;
  if (const auto* spec = std::get_if<HallFusionSpec>(&model)) {
    const auto& names = spec->category.objects;
    out << "mode vertex\n[objects]\n";
    for (std::size_t i = 0; i < names.size(); ++i) out << names[i] << ' ' << spec->category.dims[i] << '\n';
    out << "[p]\nunit " << names.at(spec->p_data.unit) << '\n';
    detail::render_triples(out, spec->p_data.entries, names);
    out << "[q]\nunit " << names.at(spec->q_data.unit) << '\n';
    detail::render_triples(out, spec->q_data.entries, names);
    if (spec->sigma) {
      out << "[sigma]\n";
      for (std::size_t i = 0; i < names.size(); ++i) out << names[i] << ' ' << names.at(spec->sigma->image.at(i)) << '\n';
    }
  } else if (const auto* face = std::get_if<FaceModel>(&model)) {
    const auto& pc = face->data;
    std::vector<std::string> names;
    for (const auto& c : pc.cells) names.push_back(c.name);
    out << "mode face\nmaxdeg " << face->max_degree << "\n[zero_cells]\n";
    for (const auto& z : pc.zero_cells) out << z << '\n';
    out << "[cells]\n";
    for (const auto& c : pc.cells)
      out << c.name << ' ' << pc.zero_cells.at(c.src) << ' ' << pc.zero_cells.at(c.dst) << ' ' << c.deg << ' ' << c.dim << '\n';
    out << "[p]\n";
    detail::render_triples(out, pc.p, names);
    out << "[q]\n";
    detail::render_triples(out, pc.q, names);
  } else {
    const auto& g = std::get<GraphModel>(model);
    out << "mode graph\nmaxdeg " << g.max_degree << "\n[vertices]\n";
    for (const auto& v : g.graph.vertices) out << v << '\n';
    out << "[edges]\n";
    for (const auto& e : g.graph.edges)
      out << e.name << ' ' << g.graph.vertices.at(e.src) << ' ' << g.graph.vertices.at(e.dst) << '\n';
  }
  return out.str();
}

}  // namespace hfx::io
