#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "liedeform/catalog.hpp"
#include "liedeform/groupflow.hpp"
#include "liedeform/repsolve.hpp"

namespace liedeform {

inline constexpr const char* kSolverVersion = "1.0.0";
inline constexpr const char* kReportSchemaVersion = "1.0";

using TextMatrix = std::vector<std::vector<std::string>>;

struct FamilyRecord {
  std::string label;
  std::string parent;
  std::map<std::string, std::string> substitutions;
  std::vector<std::string> free_parameters;
  std::string nontriviality;  // polynomial that must not vanish
  std::string status;         // "nontrivial" or "trivial"
  bool table_row = false;
  std::size_t table_count = 0;
  bool operator==(const FamilyRecord&) const = default;
};

struct RepresentationRecord {
  std::string family;
  bool affine_only = true;
  std::map<std::string, std::string> assignment;
  std::vector<std::string> moving_generators;
  std::size_t count = 0;  // gauge classes found by the solver
  std::size_t table_count = 0;
  std::size_t unresolved = 0;  // branches with no rational point
  std::vector<std::vector<std::size_t>> gauge_classes;
  std::vector<std::map<std::string, TextMatrix>> representatives;  // one per class
  std::string failure;
  bool operator==(const RepresentationRecord&) const = default;
};

struct BlockRecord {
  std::vector<std::string> plane;
  std::string kind;
  TextMatrix n;
  std::string omega;
  bool operator==(const BlockRecord&) const = default;
};

struct GroupElementRecord {
  std::string family;
  std::string representation;
  std::string generator;
  std::string scale;
  std::vector<BlockRecord> blocks;
  std::string description;
  std::map<std::string, double> assignment;
  std::vector<double> theta_grid;
  double max_deviation = 0;
  double tolerance = 0;
  bool verified = false;
  bool operator==(const GroupElementRecord&) const = default;
};

struct Provenance {
  std::string catalog_version;
  std::string solver_version;
  bool operator==(const Provenance&) const = default;
};

struct Report {
  std::string schema_version;
  std::string algebra;
  std::string display_name;
  std::vector<std::string> generators;
  std::vector<FamilyRecord> families;
  std::vector<RepresentationRecord> representations;
  std::vector<GroupElementRecord> group_elements;
  Provenance provenance;
  bool operator==(const Report&) const = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FamilyRecord, label, parent, substitutions, free_parameters, nontriviality, status,
                                   table_row, table_count)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RepresentationRecord, family, affine_only, assignment, moving_generators, count,
                                   table_count, unresolved, gauge_classes, representatives, failure)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BlockRecord, plane, kind, n, omega)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GroupElementRecord, family, representation, generator, scale, blocks, description,
                                   assignment, theta_grid, max_deviation, tolerance, verified)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Provenance, catalog_version, solver_version)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Report, schema_version, algebra, display_name, generators, families,
                                   representations, group_elements, provenance)

namespace report_detail {

inline const char* coord_name(std::size_t c) {
  static const char* names[] = {"t", "x", "y", "z", "1"};
  return names[c];
}

inline TextMatrix text(const QMat& m) {
  TextMatrix out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_str();
  return out;
}

inline const char* kind_name(ClosedFormBlock::Kind k) {
  switch (k) {
    case ClosedFormBlock::Kind::Trig: return "trig";
    case ClosedFormBlock::Kind::Hyperbolic: return "hyperbolic";
    case ClosedFormBlock::Kind::Nilpotent: return "nilpotent";
  }
  return "";
}

}  // namespace report_detail

inline const std::vector<double>& closed_form_theta_grid() {
  static const std::vector<double> grid{-2, -1, -0.3, 0.3, 1, 2};
  return grid;
}

/// Numeric point for a closed-form check: the family's sample, the
/// fixture's parameter conditions, and 1/4 for any remaining free symbol.
inline NumericAssignment closed_form_assignment(const CatalogEntry& e, const FamilyFixture& f,
                                                const RepresentationFixture& r,
                                                const NumericAssignment& overrides = {}) {
  NumericAssignment at;
  for (auto& p : e.cocycle.parameters) at[p] = 0;
  for (auto& [k, v] : f.rep_sample) at[k] = v.get_d();
  for (auto& s : r.free_symbols) at[s] = 0.25;
  for (auto& [k, v] : overrides) at[k] = v;
  for (auto& [k, v] : r.specialization) at[k] = poly_eval_double(v, at);
  for (auto& [k, v] : f.substitutions) at[k] = poly_eval_double(v, at);
  return at;
}

inline const RepresentationFixture& find_fixture(const FamilyFixture& f, const std::string& label) {
  for (auto& r : f.representations)
    if (r.label == label) return r;
  throw UnknownFamily("representation " + label + " of " + f.label);
}

inline GroupElementRecord check_closed_form(const CatalogEntry& e, const FamilyFixture& f,
                                            const ClosedFormDescriptor& d, double tolerance = 1e-12) {
  auto& r = find_fixture(f, d.representation);
  NumericAssignment at = closed_form_assignment(e, f, r);
  Representation rep = fixture_representation(e, r);
  std::size_t gi = e.algebra.index(d.generator);
  GroupElementRecord g;
  g.family = d.family;
  g.representation = d.representation;
  g.generator = d.generator;
  g.scale = d.scale.to_string();
  g.description = d.description;
  for (auto& b : d.blocks)
    g.blocks.push_back({{report_detail::coord_name(b.a), report_detail::coord_name(b.b)},
                        report_detail::kind_name(b.kind),
                        {{b.n00.to_string(), b.n01.to_string()}, {b.n10.to_string(), b.n11.to_string()}},
                        b.omega.to_string()});
  g.assignment = at;
  g.theta_grid = closed_form_theta_grid();
  for (double th : g.theta_grid)
    g.max_deviation = std::max(
        g.max_deviation, (exponentiate(rep, gi, th, at).matrix - closed_form(d, th, at)).cwiseAbs().maxCoeff());
  g.tolerance = tolerance;
  g.verified = g.max_deviation < tolerance;
  return g;
}

inline Report build_report(const std::string& algebra) {
  const CatalogEntry& e = get_algebra(algebra);
  Report rep;
  rep.schema_version = kReportSchemaVersion;
  rep.algebra = e.name;
  rep.display_name = e.display_name;
  rep.generators = e.generator_order;
  rep.provenance = {kCatalogVersion, kSolverVersion};
  auto rows = e.table_rows();
  for (auto& f : e.families) {
    DeformationFamily d = e.deformation(f.label);
    FamilyRecord fr;
    fr.label = f.label;
    fr.parent = f.parent;
    for (auto& [k, v] : f.substitutions) fr.substitutions[k] = v.to_string();
    fr.free_parameters = d.free_parameters;
    Poly nt = d.nontriviality ? substitute(*d.nontriviality, d.substitutions) : Poly();
    fr.nontriviality = nt.to_string();
    fr.status = nt.is_zero() ? "trivial" : "nontrivial";
    fr.table_row = std::find(rows.begin(), rows.end(), f.label) != rows.end();
    fr.table_count = f.table_rep_count;
    rep.families.push_back(fr);
  }
  for (auto& label : rows) {
    auto& f = e.family(label);
    auto c = classify_family(e, label);
    RepresentationRecord rr;
    rr.family = label;
    rr.affine_only = c.affine_only;
    for (auto& [k, v] : c.assignment) rr.assignment[k] = v.get_str();
    rr.moving_generators = c.search.deformable;
    rr.count = c.classes.size();
    rr.table_count = f.table_rep_count;
    rr.unresolved = c.search.unsampled;
    rr.gauge_classes = c.classes;
    for (auto& cls : c.classes) {
      std::map<std::string, TextMatrix> mats;
      auto& sample = c.search.samples[cls.front()];
      for (std::size_t i = 0; i < sample.size(); ++i) mats[e.generator_order[i]] = report_detail::text(sample[i]);
      rr.representatives.push_back(std::move(mats));
    }
    rr.failure = c.failure;
    rep.representations.push_back(std::move(rr));
  }
  for (auto& f : e.families)
    for (auto& d : f.closed_forms) rep.group_elements.push_back(check_closed_form(e, f, d));
  return rep;
}

inline std::string emit_json(const Report& r) { return nlohmann::json(r).dump(2) + "\n"; }

inline Report parse_json(const std::string& s) {
  try {
    return nlohmann::json::parse(s).get<Report>();
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(ex.what());
  }
}

inline std::string emit_markdown(const Report& r) {
  std::ostringstream os;
  os << "# " << r.display_name << "\n\n";
  os << "| family | substitutions | free parameters | nontriviality | natural reps (table) | natural reps (solver) |\n";
  os << "|---|---|---|---|---|---|\n";
  for (auto& f : r.families) {
    if (!f.table_row) continue;
    std::string subs, free;
    for (auto& [k, v] : f.substitutions) subs += (subs.empty() ? "" : ", ") + k + " = " + v;
    for (auto& p : f.free_parameters) free += (free.empty() ? "" : ", ") + p;
    std::string solver = "-";
    for (auto& rr : r.representations)
      if (rr.family == f.label) {
        solver = std::to_string(rr.count);
        if (rr.unresolved) solver += " (+" + std::to_string(rr.unresolved) + " unresolved)";
      }
    os << "| " << f.label << " | " << subs << " | " << free << " | " << f.nontriviality << " | " << f.table_count
       << " | " << solver << " |\n";
  }
  os << "\n";
  return os.str();
}

inline std::string emit_latex(const Report& r) {
  std::ostringstream os;
  os << "% " << r.display_name << ", catalog " << r.provenance.catalog_version << "\n";
  for (auto& rr : r.representations) {
    os << "\\paragraph{" << rr.family << "}\n";
    for (std::size_t k = 0; k < rr.representatives.size(); ++k) {
      os << "% class " << k + 1 << "\n";
      for (auto& [g, m] : rr.representatives[k]) {
        QMat base = poincare_matrix(g);
        bool moved = false;
        for (std::size_t i = 0; i < m.size(); ++i)
          for (std::size_t j = 0; j < m[i].size(); ++j)
            if (Rational(m[i][j]) != base(i, j)) moved = true;
        if (!moved) continue;
        os << "\\[\n" << g << " = \\begin{pmatrix}\n";
        for (std::size_t i = 0; i < m.size(); ++i) {
          for (std::size_t j = 0; j < m[i].size(); ++j) {
            Rational q(m[i][j]);
            if (j) os << " & ";
            if (q.get_den() == 1)
              os << q.get_num().get_str();
            else
              os << (q < 0 ? "-" : "") << "\\frac{" << mpz_class(abs(q.get_num())).get_str() << "}{" << q.get_den().get_str()
                 << "}";
          }
          os << (i + 1 < m.size() ? " \\\\\n" : "\n");
        }
        os << "\\end{pmatrix}\n\\]\n";
      }
    }
  }
  return os.str();
}

}  // namespace liedeform
