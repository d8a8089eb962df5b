#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liedeform/verify.hpp"

using namespace liedeform;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::map<std::string, Rational> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, Rational> out;
  for (auto& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects name=value, got '" + it + "'");
    try {
      out[it.substr(0, eq)] = parse_rational(it.substr(eq + 1));
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

std::string bracket_text(const LieAlgebra& a, std::size_t i, std::size_t j) {
  std::string s;
  auto b = bracket(a, i, j);
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k].is_zero()) continue;
    std::string c = b[k].to_string();
    if (!s.empty()) s += " + ";
    s += (c == "1" ? "" : "(" + c + ") ") + a.labels()[k];
  }
  return s;
}

void print_matrix(std::ostream& os, const QMat& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << std::setw(5) << m(r, c).get_str();
    os << "]\n";
  }
}

int cmd_list() {
  for (auto& n : catalog_names()) std::cout << n << "\n";
  return 0;
}

int cmd_show(const std::string& name) {
  auto& e = get_algebra(name);
  std::cout << e.display_name << " (" << e.algebra.dim() << " generators)\n";
  for (std::size_t i = 0; i < e.algebra.dim(); ++i)
    for (std::size_t j = i + 1; j < e.algebra.dim(); ++j) {
      auto s = bracket_text(e.algebra, i, j);
      if (!s.empty()) std::cout << "[" << e.algebra.labels()[i] << ", " << e.algebra.labels()[j] << "] = " << s << "\n";
    }
  return 0;
}

int cmd_jacobi(const std::string& name, const std::string& family) {
  auto& e = get_algebra(name);
  LieAlgebra a = family.empty() ? e.algebra : deformed_symbolic(e.deformation(family));
  auto v = check_jacobi(a);
  if (v.empty()) {
    std::cout << (family.empty() ? name : family) << ": Jacobi identity holds\n";
    return 0;
  }
  for (auto& x : v)
    std::cout << a.labels()[x.i] << "," << a.labels()[x.j] << "," << a.labels()[x.k] << " -> " << a.labels()[x.m]
              << ": " << x.residual.to_string() << "\n";
  return 1;
}

int cmd_cocycles(const std::string& name) {
  auto q = nontrivial_directions(get_algebra(name).algebra);
  std::cout << "raw " << q.cocycle_dimension << "\ncoboundary " << q.coboundary_dimension << "\nquotient "
            << q.dimension << "\n";
  return 0;
}

int cmd_families(const std::string& name) {
  auto& e = get_algebra(name);
  auto rows = e.table_rows();
  for (auto& f : e.families) {
    bool row = std::find(rows.begin(), rows.end(), f.label) != rows.end();
    std::cout << f.label;
    if (f.parent != f.label) std::cout << " (in " << f.parent << ")";
    std::cout << ":";
    for (auto& [k, v] : f.substitutions) std::cout << " " << k << "=" << v.to_string();
    if (row) std::cout << "  [natural reps: " << f.table_rep_count << "]";
    std::cout << "\n";
  }
  return 0;
}

int cmd_rep(const std::string& name, const std::string& family, const std::vector<std::string>& params,
            bool affine_only) {
  auto& e = get_algebra(name);
  auto at = e.family(family).rep_sample;
  for (auto& [k, v] : parse_params(params)) at[k] = v;
  auto c = classify_family(e, family, at, affine_only ? std::optional<bool>(true) : std::nullopt);
  if (!c.failure.empty()) {
    std::cout << family << ": no natural representation (" << c.failure << ")\n";
    return 0;
  }
  std::cout << family << ": " << c.classes.size() << " inequivalent representation(s)";
  if (c.search.unsampled) std::cout << ", " << c.search.unsampled << " unresolved branch(es)";
  std::cout << "\nmoving generators:";
  for (auto& g : c.search.deformable) std::cout << " " << g;
  std::cout << "\n";
  auto base = base_representation(e);
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    std::cout << "class " << k + 1 << "\n";
    auto& s = c.search.samples[c.classes[k].front()];
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == base[i]) continue;
      std::cout << " " << e.generator_order[i] << ":\n";
      print_matrix(std::cout, s[i]);
    }
  }
  return 0;
}

int cmd_exp(const std::string& name, const std::string& family, const std::string& generator, double theta,
            const std::vector<std::string>& params, const std::string& rep_label) {
  auto& e = get_algebra(name);
  auto& f = e.family(family);
  if (f.representations.empty()) throw UsageError(family + " has no stored representation");
  const ClosedFormDescriptor* desc = nullptr;
  for (auto& d : f.closed_forms)
    if (d.generator == generator && (rep_label.empty() || d.representation == rep_label)) desc = &d;
  std::string label = !rep_label.empty() ? rep_label : desc ? desc->representation : f.representations.front().label;
  auto& r = find_fixture(f, label);
  NumericAssignment over;
  for (auto& [k, v] : parse_params(params)) over[k] = v.get_d();
  auto at = closed_form_assignment(e, f, r, over);
  auto g = exponentiate(fixture_representation(e, r), e.algebra.index(generator), theta, at);
  std::cout << std::setprecision(12);
  std::cout << generator << "(" << theta << ") in " << family << "/" << label << ":\n" << g.matrix << "\n";
  std::cout << "dilatation factor " << dilatation_factor(g) << "\n";
  if (desc && desc->representation == label) {
    double dev = (g.matrix - closed_form(*desc, theta, at)).cwiseAbs().maxCoeff();
    std::cout << "closed form (" << desc->description << ") deviation " << dev << "\n";
    if (dev >= 1e-12) return 1;
  }
  return 0;
}

int cmd_finsler(double b, double theta, const std::string& dx_text) {
  std::vector<double> v;
  std::stringstream ss(dx_text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("--dx expects four comma-separated numbers");
    }
  }
  if (v.size() != 4) throw UsageError("--dx expects four comma-separated numbers");
  double dev = check_finsler_invariance(LineElementSpec{b}, disim_boost(b, theta), Vec4(v[0], v[1], v[2], v[3]));
  std::cout << std::setprecision(6) << "relative deviation " << dev << "\n";
  return dev < 1e-10 ? 0 : 1;
}

int cmd_report(const std::string& name, const std::string& format) {
  Report r = build_report(name);
  if (format == "json")
    std::cout << emit_json(r);
  else if (format == "md")
    std::cout << emit_markdown(r);
  else
    std::cout << emit_latex(r);
  return 0;
}

int cmd_verify_all() {
  bool ok = true;
  for (auto& r : verify_all()) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << " (" << std::fixed << std::setprecision(2)
              << r.seconds << "s): " << r.detail << "\n";
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformations of Poincare subgroups and their natural representations"};
  app.require_subcommand(1);
  std::string algebra, family, generator, format = "json", dx, rep_label;
  std::vector<std::string> params;
  bool affine_only = false;
  double theta = 0, b = 0;

  auto* list = app.add_subcommand("list", "catalog algebras");
  auto* show = app.add_subcommand("show", "commutators of an algebra");
  auto* jacobi = app.add_subcommand("jacobi", "check the Jacobi identity");
  auto* cocycles = app.add_subcommand("cocycles", "cocycle, coboundary and quotient dimensions");
  auto* families = app.add_subcommand("families", "deformation families");
  auto* rep = app.add_subcommand("rep", "natural representations of a family");
  auto* exp = app.add_subcommand("exp", "one-parameter group element");
  auto* finsler = app.add_subcommand("finsler", "line element invariance under the DISIM_b boost");
  auto* report = app.add_subcommand("report", "machine- or human-readable report");
  auto* verify = app.add_subcommand("verify-all", "run every fixture and acceptance check");

  for (auto* s : {show, jacobi, cocycles, families, rep, exp, report})
    s->add_option("algebra", algebra)->required()->check(CLI::IsMember(catalog_names()));
  jacobi->add_option("--family", family);
  for (auto* s : {rep, exp}) {
    s->add_option("--family", family)->required();
    s->add_option("--param", params, "name=value (rational)");
  }
  rep->add_flag("--affine-only", affine_only);
  exp->add_option("--generator", generator)->required();
  exp->add_option("--theta", theta)->required();
  exp->add_option("--representation", rep_label);
  finsler->add_option("--b", b)->required();
  finsler->add_option("--theta", theta)->required();
  finsler->add_option("--dx", dx)->required();
  report->add_option("--format", format)->check(CLI::IsMember({"json", "md", "tex"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) return cmd_list();
    if (*show) return cmd_show(algebra);
    if (*jacobi) return cmd_jacobi(algebra, family);
    if (*cocycles) return cmd_cocycles(algebra);
    if (*families) return cmd_families(algebra);
    if (*rep) return cmd_rep(algebra, family, params, affine_only);
    if (*exp) return cmd_exp(algebra, family, generator, theta, params, rep_label);
    if (*finsler) return cmd_finsler(b, theta, dx);
    if (*report) return cmd_report(algebra, format);
    if (*verify) return cmd_verify_all();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IndexOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
