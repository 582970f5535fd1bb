#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "hfx/audit.hpp"
#include "hfx/facemodel.hpp"
#include "hfx/hallfusion.hpp"

namespace hfx {

/// Graph face model together with its degree cap.
struct GraphModel {
  DirectedGraph graph;
  unsigned max_degree = 1;
  friend bool operator==(const GraphModel&, const GraphModel&) = default;
};

/// Procategory data given directly, with its degree cap.
struct FaceModel {
  ProcategoryDimData data;
  unsigned max_degree = 0;
  friend bool operator==(const FaceModel&, const FaceModel&) = default;
};

using Model = std::variant<HallFusionSpec, FaceModel, GraphModel>;

/// Every audit and contraction that applies to one model.
struct SuiteResult {
  AlgebraPresentation algebra;
  AuditReport audits;
  ContractionReport contractions;
  std::optional<LinearEndo> antipode;

  /// Flat axiom-id → status view covering audits and contractions.
  [[nodiscard]] std::map<std::string, Status> statuses() const {
    std::map<std::string, Status> out;
    for (const auto& e : audits.entries) out[e.id] = e.status;
    for (const auto& c : contractions.checks) out[c.id] = c.status;
    return out;
  }

  [[nodiscard]] bool all_pass() const { return audits.all_pass() && contractions_pass(); }

  [[nodiscard]] bool contractions_pass() const {
    for (const auto& c : contractions.checks) {
      if (c.status == Status::fail) return false;
    }
    return true;
  }
};

inline std::optional<LinearEndo> valid_antipode(const HallFusionSpec& spec) {
  if (!spec.sigma) return std::nullopt;
  try {
    return build_antipode(spec).map;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::sigma) throw;
    return std::nullopt;
  }
}

inline SuiteResult run_suite(const HallFusionSpec& spec, const AuditOptions& opts = {}) {
  SuiteResult r{build_hall_fusion(spec), {}, contraction_report(spec, {opts.witness_cap}), valid_antipode(spec)};
  r.audits = audit_algebra(r.algebra, opts);
  r.audits.append(audit_coalgebra(r.algebra, opts));
  r.audits.append(audit_bialgebra_compat(r.algebra, opts));
  if (r.antipode) {
    r.audits.append(audit_antipode(r.algebra, *r.antipode, opts));
  } else {
    for (auto id : {axiom::antihom, axiom::antipode_unit, axiom::antipode_involution, axiom::von_neumann})
      r.audits.entries.push_back({std::string(id), Status::skip, {}, 0, "no valid antipode map"});
  }
  return r;
}

inline SuiteResult run_suite(const FaceModel& model, const AuditOptions& opts = {}) {
  SuiteResult r{build_face_algebra(model.data, model.max_degree), {}, validate_procategory(model.data, {opts.witness_cap}),
                std::nullopt};
  r.audits = audit_face(r.algebra, model.data, opts);
  return r;
}

inline SuiteResult run_suite(const GraphModel& model, const AuditOptions& opts = {}) {
  return run_suite(FaceModel{graph_to_procategory(model.graph, model.max_degree), model.max_degree}, opts);
}

inline SuiteResult run_suite(const Model& model, const AuditOptions& opts = {}) {
  return std::visit([&](const auto& m) { return run_suite(m, opts); }, model);
}

}  // namespace hfx
