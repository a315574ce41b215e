// qpsurf: triangulations, quivers with potentials and their checks.
// Exit codes: 0 success, 1 a check failed, 2 bad input or usage.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpsurf/corpus.hpp"
#include "qpsurf/detail/text.hpp"
#include "qpsurf/error.hpp"
#include "qpsurf/jacobian.hpp"
#include "qpsurf/potential_builder.hpp"
#include "qpsurf/qp.hpp"
#include "qpsurf/surface.hpp"
#include "qpsurf/verify.hpp"

namespace {

using namespace qpsurf;

constexpr int kDefaultOrder = 6;

// "-" reads stdin; a missing file that names a shipped example reads the example.
std::string read_input(const std::string& source) {
  if (source == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (!std::filesystem::exists(source)) {
    for (const auto& e : corpus()) {
      if (e.name == source) return e.text;
    }
    throw ParseError("cannot open '" + source + "'");
  }
  std::ifstream in(source);
  if (!in) throw ParseError("cannot open '" + source + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_triangulation_text(const std::string& text) {
  const auto lines = detail::content_lines(text);
  return !lines.empty() && detail::tokenize(lines.front().text).front() == "surface";
}

Triangulation load_triangulation(const std::string& source, const std::string& scalars) {
  Triangulation t = parse_triangulation(read_input(source));
  if (!scalars.empty()) t = with_scalars(t, parse_scalars(scalars));
  require_valid(t);
  return t;
}

// A QP file, or a triangulation whose QP is built at `order`.
QP load_qp(const std::string& source, const std::string& scalars, int order) {
  const std::string text = read_input(source);
  if (is_triangulation_text(text)) {
    Triangulation t = parse_triangulation(text);
    if (!scalars.empty()) t = with_scalars(t, parse_scalars(scalars));
    require_valid(t);
    return qp_of_triangulation(t, order);
  }
  QP q = parse_qp(text);
  if (auto d = validate_qp(q); !d.ok) throw PreconditionError("invalid QP: " + d.messages.front());
  return q;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void require_order(int order) {
  if (order < 1) throw PreconditionError("--order must be at least 1");
}

int report(const CheckReport& r) {
  write_check_report(std::cout, r);
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quivers with potentials from triangulated surfaces"};
  app.require_subcommand(1);

  std::string input;
  std::string input2;
  std::string arc;
  std::string vertex;
  std::string scalars;
  std::string keep;
  std::string witness;
  std::string name;
  int order = kDefaultOrder;
  int depth = 4;
  bool unreduced = false;

  auto tri_arg = [&](CLI::App* c) {
    c->add_option("triangulation", input, "triangulation file, '-' for stdin, or an example name")->required();
    c->add_option("--scalars", scalars, "puncture scalars, e.g. p=2/1,q=3/1");
  };
  auto qp_arg = [&](CLI::App* c) {
    c->add_option("qp", input, "QP or triangulation file, '-' for stdin, or an example name")->required();
    c->add_option("--scalars", scalars, "puncture scalars when the input is a triangulation");
  };
  auto order_opt = [&](CLI::App* c) {
    c->add_option("--order", order, "truncation order D")->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "check a triangulation");
  tri_arg(validate);
  auto* matrix = app.add_subcommand("matrix", "signed adjacency matrix");
  tri_arg(matrix);
  auto* quiver = app.add_subcommand("quiver", "quiver of a triangulation");
  tri_arg(quiver);
  quiver->add_flag("--unreduced", unreduced, "before removing 2-cycles");
  auto* potential = app.add_subcommand("potential", "potential of a triangulation");
  tri_arg(potential);
  order_opt(potential);
  potential->add_flag("--unreduced", unreduced, "before reduction");
  auto* qp = app.add_subcommand("qp", "reduced QP of a triangulation");
  tri_arg(qp);
  order_opt(qp);
  auto* flipc = app.add_subcommand("flip", "flip an arc");
  tri_arg(flipc);
  flipc->add_option("arc", arc)->required();
  auto* mutate = app.add_subcommand("mutate", "QP-mutation at a vertex");
  qp_arg(mutate);
  mutate->add_option("vertex", vertex)->required();
  order_opt(mutate);
  auto* dim = app.add_subcommand("dim", "truncated Jacobian algebra dimensions");
  qp_arg(dim);
  order_opt(dim);
  auto* rigid = app.add_subcommand("rigid", "rigidity up to a truncation order");
  qp_arg(rigid);
  order_opt(rigid);

  auto* check = app.add_subcommand("check", "invariant checks");
  check->require_subcommand(1);
  auto* flip_compat = check->add_subcommand("flip-compat", "mutation of the QP against the flipped triangulation");
  tri_arg(flip_compat);
  flip_compat->add_option("arc", arc)->required();
  order_opt(flip_compat);
  flip_compat->add_option("--witness", witness, "substitution file mapping the mutated QP to the flipped one");
  auto* involution = check->add_subcommand("involution", "mutating twice at a vertex");
  qp_arg(involution);
  involution->add_option("vertex", vertex)->required();
  order_opt(involution);
  auto* restriction = check->add_subcommand("restriction", "restriction commutes with mutation");
  qp_arg(restriction);
  restriction->add_option("--keep", keep, "comma separated vertices")->required();
  restriction->add_option("vertex", vertex)->required();
  order_opt(restriction);

  auto* explore = app.add_subcommand("explore", "breadth-first mutation class search");
  qp_arg(explore);
  explore->add_option("--depth", depth)->capture_default_str();
  order_opt(explore);
  auto* examples = app.add_subcommand("examples", "print a shipped example (no name: list them)");
  examples->add_option("name", name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*validate) {
      Triangulation t = parse_triangulation(read_input(input));
      if (!scalars.empty()) t = with_scalars(t, parse_scalars(scalars));
      const Diagnostics d = validate_triangulation(t);
      if (!d.ok) {
        for (const auto& m : d.messages) std::cerr << "invalid: " << m << '\n';
        return 2;
      }
      std::cout << "valid: " << t.arc_ids().size() << " arcs, " << t.boundary_segment_count()
                << " boundary segments, " << t.triangles().size() << " triangles\n";
    } else if (*matrix) {
      write_matrix(std::cout, signed_adjacency(load_triangulation(input, scalars)));
    } else if (*quiver) {
      const Triangulation t = load_triangulation(input, scalars);
      const UnreducedQuiver u = unreduced_quiver(t);
      write_quiver(std::cout, unreduced ? u.quiver : remove_two_cycles(u.quiver));
    } else if (*potential) {
      require_order(order);
      const Triangulation t = load_triangulation(input, scalars);
      if (unreduced) {
        const UnreducedQP u = build_unreduced_qp(t, order);
        write_element(std::cout, cyclic_normal_form(u.qp.potential()).element());
        for (const auto& w : u.assembly.warnings) std::cerr << "warning: " << w << '\n';
      } else {
        write_element(std::cout, cyclic_normal_form(qp_of_triangulation(t, order).potential()).element());
      }
    } else if (*qp) {
      require_order(order);
      write_qp(std::cout, qp_of_triangulation(load_triangulation(input, scalars), order));
    } else if (*flipc) {
      const FlipResult f = flip(load_triangulation(input, scalars), arc);
      std::cout << "# " << f.old_arc << " -> " << f.new_arc << '\n';
      write_triangulation(std::cout, f.triangulation);
    } else if (*mutate) {
      require_order(order);
      write_qp(std::cout, mutate_qp(load_qp(input, scalars, order), vertex));
    } else if (*dim) {
      require_order(order);
      write_dimension_report(std::cout, truncated_quotient_dim(load_qp(input, scalars, order), order));
    } else if (*rigid) {
      require_order(order);
      const RigidityReport r = is_rigid_up_to(load_qp(input, scalars, order), order);
      write_rigidity_report(std::cout, r);
    } else if (*flip_compat) {
      require_order(order);
      std::optional<std::string> w;
      if (!witness.empty()) w = read_input(witness);
      return report(check_flip_compatibility(load_triangulation(input, scalars), arc, order, w));
    } else if (*involution) {
      require_order(order);
      return report(check_involution(load_qp(input, scalars, working_order(order)), vertex, order));
    } else if (*restriction) {
      require_order(order);
      return report(check_restriction_commutes(load_qp(input, scalars, working_order(order)), split_list(keep),
                                               vertex, order));
    } else if (*explore) {
      require_order(order);
      if (depth < 0) throw PreconditionError("--depth must be non-negative");
      const ExploreResult r = explore_mutation_class(load_qp(input, scalars, working_order(order)), depth, order);
      write_check_report(std::cout, r.report);
      write_class_graph(std::cout, r.graph);
      return r.report.pass ? 0 : 1;
    } else if (*examples) {
      if (name.empty()) {
        for (const auto& e : corpus()) std::cout << e.name << "  (" << e.kind << ") " << e.description << '\n';
      } else {
        std::cout << corpus_entry(name).text;
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
