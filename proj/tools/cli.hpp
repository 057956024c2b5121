#pragma once

// Command dispatch for the `surf` tool. Kept separate from main() so the
// commands can be driven in-process by the tests.
//
// Exit codes: 0 success, 1 domain failure (violations, not a surface, ...),
// 2 usage, parse or I/O error.

#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "surftopo.hpp"

namespace surftopo::cli {

enum ExitStatus : int { ok = 0, domain_failure = 1, usage_error = 2 };

namespace detail {

inline void emit(const SurfaceComplex& c, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    write_surface(out, c);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError(Errc::syntax_error, 0, "cannot write '" + path + "'");
  write_surface(file, c);
  if (!file) throw ParseError(Errc::syntax_error, 0, "failed writing '" + path + "'");
}

inline SurfaceComplex generate(const std::vector<std::string>& gen_args) {
  const auto count = [](const std::string& s) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || used == 0) {
      throw ParseError(Errc::syntax_error, 0, "gen: expected an integer, got '" + s + "'");
    }
    return v;
  };
  if (gen_args.size() == 3 && (gen_args[0] == "sigma" || gen_args[0] == "u")) {
    const int g = count(gen_args[1]);
    const int k = count(gen_args[2]);
    return gen_args[0] == "sigma" ? gen_sigma(g, k) : gen_u(g, k);
  }
  if (gen_args.size() == 1) {
    if (auto which = standard_surface_from_name(gen_args[0])) return gen_standard(*which);
  }
  std::string joined;
  for (const auto& s : gen_args) joined += (joined.empty() ? "" : " ") + s;
  throw ParseError(Errc::syntax_error, 0,
                   "gen: unknown surface '" + joined +
                       "' (expected sphere|torus|rp2|klein|disk|cylinder|mobius|sigma G K|u G K)");
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangulated surface toolkit: validation, invariants, homology, classification",
               "surf"};
  app.require_subcommand(1);

  std::string file, file_b, level = "surface", output, word_joined;
  std::vector<std::string> gen_args, word;
  bool pi1 = false, one_relator = false, realize = false, subdivide_first = false;
  int iterations = 1;

  auto* validate = app.add_subcommand("validate", "Check surface conditions");
  validate->add_option("file", file, "surface v1 file")->required();
  validate->add_option("--level", level, "pseudo or surface")
      ->check(CLI::IsMember({"pseudo", "surface"}));

  auto* invariants = app.add_subcommand("invariants", "Print f-vector, chi, orientability, boundary");
  invariants->add_option("file", file)->required();

  auto* homology = app.add_subcommand("homology", "Integral homology H0, H1, H2");
  homology->add_option("file", file)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Homeomorphism class Sigma(g,k) or U(g,k)");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_flag("--pi1", pi1, "Also print a presentation of the fundamental group");
  classify_cmd->add_flag("--one-relator", one_relator,
                         "Keep every boundary generator and the surface relator");

  auto* compare = app.add_subcommand("compare", "Decide whether two surfaces are homeomorphic");
  compare->add_option("a", file)->required();
  compare->add_option("b", file_b)->required();

  auto* subdivide = app.add_subcommand("subdivide", "Barycentric subdivision");
  subdivide->add_option("file", file)->required();
  subdivide->add_option("-n", iterations, "Number of subdivisions")->check(CLI::NonNegativeNumber);
  subdivide->add_option("-o", output, "Output file (default stdout)");

  auto* gen = app.add_subcommand("gen", "Generate a standard surface");
  gen->add_option("surface", gen_args, "sphere|torus|rp2|klein|disk|cylinder|mobius|sigma G K|u G K")
      ->required();
  gen->add_option("-o", output, "Output file (default stdout)");

  auto* consum = app.add_subcommand("consum", "Connected sum of two closed surfaces");
  consum->add_option("a", file)->required();
  consum->add_option("b", file_b)->required();
  consum->add_option("-o", output, "Output file (default stdout)");
  consum->add_flag("--subdivide", subdivide_first, "Subdivide both operands before surgery");

  auto* scheme = app.add_subcommand("scheme", "Classify an edge word such as abab^-1");
  scheme->add_option("word", word, "Edge word")->required();
  auto* realize_flag = scheme->add_flag("--realize", realize, "Write a triangulation of the word");
  auto* scheme_out = scheme->add_option("-o", output, "Output file for --realize");
  realize_flag->needs(scheme_out);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (validate->parsed()) {
      const auto c = read_surface_file(file);
      const bool pseudo = level == "pseudo";
      const auto report = pseudo ? check_pseudo_surface(c) : check_surface(c);
      for (const auto& v : report.violations) out << to_string(v) << '\n';
      if (!report.ok()) return domain_failure;
      if (pseudo) {
        out << "ok: pseudo-surface\n";
      } else {
        out << "ok: surface (" << (is_closed(c) ? "closed" : "with boundary") << ")\n";
      }
      return ok;
    }
    if (invariants->parsed()) {
      const auto c = read_surface_file(file);
      const auto f = f_vector(c);
      const bool orientable = is_orientable(orientability(c));
      const auto k = boundary_components(c).size();
      out << "V=" << f.vertices << " E=" << f.edges << " F=" << f.triangles << '\n';
      out << "chi=" << euler_characteristic(f) << " orientable=" << detail::yes_no(orientable)
          << " boundary_components=" << k << '\n';
      return ok;
    }
    if (homology->parsed()) {
      const auto h = homology_groups(read_surface_file(file));
      out << "H0 = " << to_string(h.h0) << '\n';
      out << "H1 = " << to_string(h.h1) << '\n';
      out << "H2 = " << to_string(h.h2) << '\n';
      return ok;
    }
    if (classify_cmd->parsed()) {
      const auto s = classify(read_surface_file(file));
      out << to_string(s) << '\n';
      if (pi1) {
        const auto form = one_relator ? PresentationForm::one_relator : PresentationForm::reduced;
        out << "pi1 = " << to_string(fundamental_group(s, form)) << '\n';
      }
      return ok;
    }
    if (compare->parsed()) {
      const auto a = classify(read_surface_file(file));
      const auto b = classify(read_surface_file(file_b));
      out << "homeomorphic: " << detail::yes_no(a == b) << '\n';
      out << "a: " << to_string(a) << '\n';
      out << "b: " << to_string(b) << '\n';
      return ok;
    }
    if (subdivide->parsed()) {
      auto c = read_surface_file(file);
      for (int i = 0; i < iterations; ++i) c = barycentric_subdivision(c);
      detail::emit(c, output, out);
      return ok;
    }
    if (gen->parsed()) {
      detail::emit(detail::generate(gen_args), output, out);
      return ok;
    }
    if (consum->parsed()) {
      const auto c =
          connected_sum(read_surface_file(file), read_surface_file(file_b), subdivide_first);
      detail::emit(c, output, out);
      return ok;
    }
    if (scheme->parsed()) {
      for (const auto& w : word) word_joined += w;
      const auto w = parse_word(word_joined);
      const auto inv = scheme_invariants(w);
      out << to_string(classify_scheme(w)) << " chi=" << inv.chi
          << " orientable=" << detail::yes_no(inv.orientable) << '\n';
      if (realize) detail::emit(scheme_to_complex(w), output, out);
      return ok;
    }
  } catch (const ParseError& e) {
    err << "surf: error: " << e.what() << '\n';
    return usage_error;
  } catch (const TopologyError& e) {
    err << "surf: error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return domain_failure;
  } catch (const std::exception& e) {
    err << "surf: error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace surftopo::cli
