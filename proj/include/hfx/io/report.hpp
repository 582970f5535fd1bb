#pragma once

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <variant>

#include "hfx/suite.hpp"

namespace hfx::io {

using Json = nlohmann::ordered_json;

// --- text rendering -------------------------------------------------------

namespace detail {

inline std::string coefficient_prefix(const Scalar& c, bool first) {
  std::string out;
  Scalar mag = c;
  if (sgn(c) < 0) {
    out = first ? "-" : " - ";
    mag = -c;
  } else if (!first) {
    out = " + ";
  }
  if (mag != 1) out += to_string(mag) + " ";
  return out;
}

}  // namespace detail

inline std::string render_text(const Element& x, const AlgebraPresentation& alg) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : x) {
    out += detail::coefficient_prefix(c, first) + alg.name(b);
    first = false;
  }
  return out;
}

inline std::string render_text(const TensorElement& x, const AlgebraPresentation& alg) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    out += detail::coefficient_prefix(c, first) + alg.name(k.first) + "(x)" + alg.name(k.second);
    first = false;
  }
  return out;
}

inline std::string render_text(const Tensor3Element& x, const AlgebraPresentation& alg) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    out += detail::coefficient_prefix(c, first) + alg.name(k[0]) + "(x)" + alg.name(k[1]) + "(x)" + alg.name(k[2]);
    first = false;
  }
  return out;
}

inline std::string render_text(const Value& v, const AlgebraPresentation& alg) {
  return std::visit(
      [&](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Scalar>) {
          return to_string(x);
        } else {
          return render_text(x, alg);
        }
      },
      v);
}

// --- JSON rendering -------------------------------------------------------

inline Json to_json(const Value& v, const AlgebraPresentation& alg) {
  return std::visit(
      [&](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Scalar>) {
          return to_string(x);
        } else {
          Json rows = Json::array();
          for (const auto& [k, c] : x) {
            if constexpr (std::is_same_v<T, Element>) {
              rows.push_back({alg.name(k), to_string(c)});
            } else if constexpr (std::is_same_v<T, TensorElement>) {
              rows.push_back({alg.name(k.first), alg.name(k.second), to_string(c)});
            } else {
              rows.push_back({alg.name(k[0]), alg.name(k[1]), alg.name(k[2]), to_string(c)});
            }
          }
          return rows;
        }
      },
      v);
}

inline Json to_json(const AuditReport& report, const AlgebraPresentation& alg) {
  Json out = Json::object();
  for (const auto& e : report.entries) {
    Json witnesses = Json::array();
    for (const auto& w : e.witnesses) {
      Json inputs = Json::array();
      for (const auto& b : w.inputs) inputs.push_back(alg.name(b));
      witnesses.push_back({{"inputs", inputs}, {"form", w.form}, {"lhs", to_json(w.lhs, alg)}, {"rhs", to_json(w.rhs, alg)}});
    }
    Json entry{{"status", status_name(e.status)}, {"witnesses", witnesses}};
    if (e.truncated != 0) entry["truncated"] = e.truncated;
    if (!e.note.empty()) entry["note"] = e.note;
    out[e.id] = entry;
  }
  return out;
}

inline Json to_json(const ContractionReport& report) {
  Json checks = Json::object();
  for (const auto& c : report.checks) {
    Json witnesses = Json::array();
    for (const auto& w : c.witnesses)
      witnesses.push_back({{"label", w.label}, {"key", w.key}, {"value", to_string(w.value)}, {"required", to_string(w.required)}});
    Json tables = Json::object();
    for (const auto& [name, rows] : c.tables) {
      Json jr = Json::array();
      for (const auto& r : rows) {
        Json row = r.key;
        row.push_back(to_string(r.value));
        jr.push_back(row);
      }
      tables[name] = jr;
    }
    Json entry{{"status", status_name(c.status)}, {"failures", c.failures}, {"witnesses", witnesses}, {"tables", tables}};
    if (!c.note.empty()) entry["note"] = c.note;
    checks[c.id] = entry;
  }
  return {{"checks", checks}, {"non_integral", report.non_integral}, {"warnings", report.warnings}};
}

/// Structure constants plus audit and contraction results. Rationals are
/// strings; key and row order is fixed, so equal inputs give equal bytes.
inline Json export_document(const AlgebraPresentation& alg, const AuditReport& audits, const ContractionReport& contractions) {
  Json basis = Json::array();
  for (const auto& b : alg.basis()) basis.push_back(alg.name(b));
  Json mul = Json::array();
  for (const auto& [xy, z] : alg.mul_table()) {
    for (const auto& [k, c] : z) mul.push_back({alg.name(xy.first), alg.name(xy.second), alg.name(k), to_string(c)});
  }
  Json comul = Json::array();
  for (const auto& [x, t] : alg.comul_table()) {
    for (const auto& [k, c] : t) comul.push_back({alg.name(x), {alg.name(k.first), alg.name(k.second)}, to_string(c)});
  }
  Json counit = Json::object();
  for (const auto& b : alg.basis()) counit[alg.name(b)] = to_string(alg.counit_at(b));
  Json unit = Json::array();
  for (const auto& [b, c] : alg.unit()) unit.push_back({alg.name(b), to_string(c)});
  Json doc{{"basis", basis}, {"mul", mul}, {"comul", comul}, {"counit", counit}, {"unit", unit},
           {"audits", to_json(audits, alg)}, {"contractions", to_json(contractions)}};
  if (alg.is_graded()) {
    Json degrees = Json::object();
    for (const auto& b : alg.basis()) degrees[alg.name(b)] = alg.degree_of(b);
    doc["degree"] = degrees;
    doc["max_degree"] = *alg.max_degree();
  }
  return doc;
}

inline std::string render_export(const AlgebraPresentation& alg, const AuditReport& audits,
                                 const ContractionReport& contractions) {
  return export_document(alg, audits, contractions).dump(2) + "\n";
}

inline void write_text_report(std::ostream& out, const AlgebraPresentation& alg, const AuditReport& audits) {
  for (const auto& e : audits.entries) {
    out << e.id << std::string(e.id.size() < 22 ? 22 - e.id.size() : 1, ' ') << status_name(e.status);
    if (e.truncated != 0) out << "  (" << e.truncated << " truncated tuples skipped)";
    if (!e.note.empty()) out << "  [" << e.note << "]";
    out << '\n';
    for (const auto& w : e.witnesses) {
      out << "    at (";
      for (std::size_t i = 0; i < w.inputs.size(); ++i) out << (i ? ", " : "") << alg.name(w.inputs[i]);
      out << ") form " << w.form << ": " << render_text(w.lhs, alg) << "  !=  " << render_text(w.rhs, alg) << '\n';
    }
  }
}

inline void write_text_report(std::ostream& out, const ContractionReport& contractions) {
  for (const auto& c : contractions.checks) {
    out << c.id << std::string(22 - c.id.size(), ' ') << status_name(c.status);
    if (!c.note.empty()) out << "  [" << c.note << "]";
    out << '\n';
    for (const auto& w : c.witnesses) {
      out << "    " << w.label << " at (";
      for (std::size_t i = 0; i < w.key.size(); ++i) out << (i ? "," : "") << w.key[i];
      out << "): " << to_string(w.value) << " vs required " << to_string(w.required) << '\n';
    }
  }
  for (const auto& w : contractions.warnings) out << "warning: " << w << '\n';
}

inline void write_text_report(std::ostream& out, const AlgebraPresentation& alg, const AuditReport& audits,
                              const ContractionReport& contractions) {
  write_text_report(out, alg, audits);
  write_text_report(out, contractions);
}

}  // namespace hfx::io
