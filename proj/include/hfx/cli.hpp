#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hfx/catalog.hpp"
#include "hfx/io/report.hpp"
#include "hfx/io/spec_file.hpp"

namespace hfx::cli {

/// Exit codes of the hfx front-end.
enum ExitCode : int { ok = 0, audit_failed = 1, invalid_input = 2 };

namespace detail {

inline Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse, "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return io::parse_spec_file(buffer.str());
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::parse, "cannot write '" + path + "'");
  out << text;
}

/// Keeps only the requested ids; unknown ids are an input error.
inline void select(SuiteResult& r, const std::string& list) {
  if (list.empty()) return;
  std::set<std::string> wanted;
  std::stringstream ss(list);
  for (std::string id; std::getline(ss, id, ',');) {
    if (!id.empty()) wanted.insert(id);
  }
  const auto known = r.statuses();
  for (const auto& id : wanted) {
    if (!known.contains(id)) throw Error(ErrorCode::name, "unknown axiom '" + id + "'");
  }
  std::erase_if(r.audits.entries, [&](const AxiomResult& e) { return !wanted.contains(e.id); });
  std::erase_if(r.contractions.checks, [&](const ContractionCheck& c) { return !wanted.contains(c.id); });
}

inline void print_dimensions(std::ostream& out, const AlgebraPresentation& alg) {
  out << "basis " << alg.basis().size() << '\n';
  if (alg.is_graded()) {
    std::map<unsigned, std::size_t> per_degree;
    for (const auto& b : alg.basis()) ++per_degree[alg.degree_of(b)];
    for (unsigned n = 0; n <= *alg.max_degree(); ++n) out << "degree " << n << " " << per_degree[n] << '\n';
  }
  std::size_t mul_terms = 0;
  for (const auto& [k, v] : alg.mul_table()) mul_terms += v.size();
  out << "mul nonzero " << mul_terms << '\n';
  out << "comul terms ";
  std::size_t comul_terms = 0;
  for (const auto& [k, v] : alg.comul_table()) comul_terms += v.size();
  out << comul_terms << '\n';
}

}  // namespace detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hall-fusion and face algebra builder and axiom auditor", "hfx"};
  app.require_subcommand(1);

  std::string file;
  std::string axioms;
  std::string output;
  std::string op;
  std::string name;
  bool json = false;
  std::size_t cap = AuditOptions{}.witness_cap;

  auto* validate = app.add_subcommand("validate", "check promonoidal / procategory data");
  validate->add_option("FILE", file)->required();
  auto* build = app.add_subcommand("build", "construct the algebra and print its dimensions");
  build->add_option("FILE", file)->required();
  auto* audit = app.add_subcommand("audit", "run the axiom audits");
  audit->add_option("FILE", file)->required();
  audit->add_option("--axioms", axioms, "comma-separated axiom ids");
  audit->add_flag("--json", json, "machine-readable report");
  audit->add_option("--witness-cap", cap, "witnesses kept per axiom")->check(CLI::PositiveNumber);
  auto* table = app.add_subcommand("table", "print a structure-constant table");
  table->add_option("FILE", file)->required();
  table->add_option("--op", op)->required()->check(CLI::IsMember({"mul", "comul"}));
  auto* exp = app.add_subcommand("export", "write tables and reports as JSON");
  exp->add_option("FILE", file)->required();
  exp->add_option("-o", output)->required();
  auto* cat = app.add_subcommand("catalog", "emit a built-in example as a spec file");
  cat->add_option("NAME", name)->required();
  cat->add_option("-o", output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::invalid_input;
  }

  try {
    if (*cat) {
      const std::string text = io::render_spec_file(catalog_get(name).model);
      if (output.empty()) {
        out << text;
      } else {
        detail::write_file(output, text);
      }
      return ExitCode::ok;
    }

    const Model model = detail::load_model(file);
    const AuditOptions opts{cap};

    if (*validate) {
      ContractionReport report;
      if (const auto* spec = std::get_if<HallFusionSpec>(&model)) {
        report = validate_promonoidal(spec->p_data, "p", {cap});
        report.append(validate_promonoidal(spec->q_data, "q", {cap}));
      } else if (const auto* face = std::get_if<FaceModel>(&model)) {
        report = validate_procategory(face->data, {cap});
      } else {
        const auto& g = std::get<GraphModel>(model);
        report = validate_procategory(graph_to_procategory(g.graph, g.max_degree), {cap});
      }
      io::write_text_report(out, report);
      bool pass = true;
      for (const auto& c : report.checks) pass = pass && c.status != Status::fail;
      return pass ? ExitCode::ok : ExitCode::audit_failed;
    }

    if (*build || *table) {
      const AlgebraPresentation alg = std::visit(
          [](const auto& m) -> AlgebraPresentation {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, HallFusionSpec>) {
              return build_hall_fusion(m);
            } else if constexpr (std::is_same_v<T, FaceModel>) {
              return build_face_algebra(m.data, m.max_degree);
            } else {
              return build_face_algebra(graph_to_procategory(m.graph, m.max_degree), m.max_degree);
            }
          },
          model);
      if (*build) {
        out << "mode " << io::mode_name(model) << '\n';
        detail::print_dimensions(out, alg);
      } else if (op == "mul") {
        for (const auto& [xy, z] : alg.mul_table())
          out << alg.name(xy.first) << " * " << alg.name(xy.second) << " = " << io::render_text(z, alg) << '\n';
      } else {
        for (const auto& [x, t] : alg.comul_table()) out << "D " << alg.name(x) << " = " << io::render_text(t, alg) << '\n';
      }
      return ExitCode::ok;
    }

    SuiteResult result = run_suite(model, opts);
    if (*exp) {
      detail::write_file(output, io::render_export(result.algebra, result.audits, result.contractions));
      return ExitCode::ok;
    }
    detail::select(result, axioms);
    if (json) {
      io::Json doc{{"mode", io::mode_name(model)},
                   {"audits", io::to_json(result.audits, result.algebra)},
                   {"contractions", io::to_json(result.contractions)},
                   {"result", result.all_pass() ? "pass" : "fail"}};
      out << doc.dump(2) << '\n';
    } else {
      io::write_text_report(out, result.algebra, result.audits, result.contractions);
    }
    return result.all_pass() ? ExitCode::ok : ExitCode::audit_failed;
  } catch (const Error& e) {
    err << "hfx: " << e.what() << '\n';
    return ExitCode::invalid_input;
  }
}

inline int run_command(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(args, out, err);
}

}  // namespace hfx::cli
