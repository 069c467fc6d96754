#include "rees/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "rees/cli/expr_parser.hpp"
#include "rees/cli/format.hpp"
#include "rees/cli/spec_file.hpp"
#include "rees/modification.hpp"
#include "rees/rees_outputs.hpp"

#ifndef REES_DEFAULT_FIXTURES_DIR
#define REES_DEFAULT_FIXTURES_DIR "fixtures"
#endif

namespace rees::cli {

namespace {

struct Common {
  std::string spec_path;
  int bound = -1;
  long max_pairs = -1;
};

struct Loaded {
  SpecFile spec;
  GbOptions gb;
  int bound = kDefaultNilpotencyBound;
  std::optional<Derivation> derivation;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("spec", c.spec_path, "Spec file")->required();
  sub->add_option("--bound", c.bound, "Nilpotency bound")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-pairs", c.max_pairs, "S-pair budget")->check(CLI::PositiveNumber);
}

Loaded load(const Common& c, bool validated = true) {
  Loaded l{load_spec(c.spec_path), {}, kDefaultNilpotencyBound, std::nullopt};
  if (l.spec.options.bound) l.bound = *l.spec.options.bound;
  if (c.bound >= 0) l.bound = c.bound;
  if (l.spec.options.max_pairs) l.gb.max_pairs = *l.spec.options.max_pairs;
  if (c.max_pairs > 0) l.gb.max_pairs = static_cast<std::size_t>(c.max_pairs);
  l.derivation.emplace(spec_derivation(l.spec, l.gb));
  if (validated) validate(*l.derivation, l.bound);
  return l;
}

Poly parse_arg(const std::string& text, const RingPtr& ring, const std::string& flag) {
  try {
    return parse_expression(text, ring);
  } catch (const ParseError& e) {
    throw InvalidArgumentError(flag + " " + e.what());
  }
}

int cmd_check(const Common& c, std::ostream& out) {
  Loaded l = load(c, false);
  const Derivation& d = *l.derivation;
  out << "variables: " << join(d.ring()->names(), ", ") << "\n";
  out << "relations: " << (l.spec.relations.empty() ? "none" : join_polys(l.spec.relations, "; ")) << "\n";
  out << "derivation:";
  bool any = false;
  for (std::size_t i = 0; i < d.ring()->size(); ++i)
    if (!d.image(i).is_zero()) {
      out << (any ? "; " : " ") << d.ring()->name(i) << " -> " << d.image(i).to_string();
      any = true;
    }
  out << (any ? "\n" : " 0\n");
  DerivationCheck check = check_derivation(d);
  out << "well-defined: ";
  if (check.well_defined)
    out << "yes\n";
  else
    out << "no (" << check.offending_relation->to_string() << " maps to " << check.offending_image->to_string()
        << ")\n";
  NilpotencyReport nil = is_locally_nilpotent(d, l.bound);
  out << "locally nilpotent: " << (nil.locally_nilpotent ? "yes" : "no") << " (bound " << l.bound << ")\n";
  out << "nil-degrees:";
  for (std::size_t i = 0; i < nil.variable_degrees.size(); ++i) {
    out << " " << d.ring()->name(i) << ":";
    if (nil.variable_degrees[i])
      out << *nil.variable_degrees[i];
    else
      out << ">" << l.bound;
  }
  out << "\n";
  return check.well_defined && nil.locally_nilpotent ? kOk : kMathFailure;
}

ReesResult run_rees(const Loaded& l, int max_iter_flag) {
  ReesOptions opts;
  opts.bound = l.bound;
  opts.gb = l.gb;
  if (l.spec.options.max_iter) opts.max_iter = *l.spec.options.max_iter;
  if (max_iter_flag >= 0) opts.max_iter = max_iter_flag;
  return rees_algorithm(*l.derivation, opts);
}

const ReesPresentation& require_stable(const ReesResult& r) {
  if (r.status != ReesStatus::stabilized)
    throw NonTerminationError("Rees algorithm did not stabilize; run 'rees' for the partial trace");
  return *r.presentation;
}

}  // namespace

std::filesystem::path default_fixtures_dir() { return REES_DEFAULT_FIXTURES_DIR; }

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rees algebras of locally nilpotent derivations", "reesctl"};
  app.require_subcommand(1);

  Common c;
  std::string element, parameter = "t", ideal_text, divisor_text, fixtures;
  int level = 0, max_iter = -1;
  bool prune = false, trace = false, verify_lemma = false;

  auto* check = app.add_subcommand("check", "Validate the derivation and print nil-degrees of the variables");
  add_common(check, c);

  auto* exp = app.add_subcommand("exp", "Print exp(tD)(E) in A[t]");
  add_common(exp, c);
  exp->add_option("--element", element, "Element E")->required();
  exp->add_option("--parameter", parameter, "Name of the parameter t");

  auto* degree = app.add_subcommand("degree", "Print the nil-degree of an element");
  add_common(degree, c);
  degree->add_option("--element", element, "Element")->required();

  auto* member = app.add_subcommand("member", "Test membership in the filtration piece F_n = Ker D^(n+1)");
  add_common(member, c);
  member->add_option("--element", element, "Element")->required();
  member->add_option("--level", level, "n")->required()->check(CLI::NonNegativeNumber);

  auto* rees = app.add_subcommand("rees", "Compute a graded presentation of the Rees algebra");
  add_common(rees, c);
  rees->add_option("--max-iter", max_iter, "Iterations allowed to add generators")->check(CLI::NonNegativeNumber);
  rees->add_flag("--prune", prune, "Drop redundant generators");
  rees->add_flag("--trace", trace, "Print the iteration trace");

  auto* gr = app.add_subcommand("gr", "Presentation of the associated graded algebra");
  add_common(gr, c);
  auto* kernel = app.add_subcommand("kernel", "Generators of the kernel of D");
  add_common(kernel, c);
  auto* fn = app.add_subcommand("fn", "Generators of F_n over the kernel");
  add_common(fn, c);
  fn->add_option("--level", level, "n")->required()->check(CLI::NonNegativeNumber);
  auto* proj = app.add_subcommand("proj", "Describe Proj of the Rees algebra");
  add_common(proj, c);

  auto* modify_cmd = app.add_subcommand("modify", "Equivariant affine modification A[I/f]");
  add_common(modify_cmd, c);
  modify_cmd->add_option("--ideal", ideal_text, "Generators of I separated by ';'")->required();
  modify_cmd->add_option("--divisor", divisor_text, "Invariant divisor f in I")->required();
  modify_cmd->add_flag("--verify-lemma", verify_lemma, "Compare R(A[I/f]) with R(A)[J/f]");

  auto* verify = app.add_subcommand("verify-examples", "Run the fixture suite against its golden files");
  verify->add_option("--fixtures", fixtures, "Fixture directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (verify->parsed()) return verify_examples(fixtures.empty() ? default_fixtures_dir() : std::filesystem::path(fixtures), out);
    if (check->parsed()) return cmd_check(c, out);

    Loaded l = load(c);
    const Derivation& d = *l.derivation;
    const auto& a = d.algebra();

    if (exp->parsed()) {
      Poly e = parse_arg(element, d.ring(), "--element");
      std::string name = parameter;
      if (exp->count("--parameter") == 0 && d.ring()->has(name)) name = fresh_name(*d.ring(), "t");
      out << exp_t(d, e, name, l.bound).to_string() << "\n";
      return kOk;
    }
    if (degree->parsed()) {
      out << nil_degree(d, parse_arg(element, d.ring(), "--element"), l.bound) << "\n";
      return kOk;
    }
    if (member->parsed()) {
      out << (in_filtration(d, parse_arg(element, d.ring(), "--element"), level) ? "true" : "false") << "\n";
      return kOk;
    }
    if (modify_cmd->parsed()) {
      std::vector<Poly> gens;
      std::size_t start = 0;
      for (std::size_t i = 0; i <= ideal_text.size(); ++i) {
        if (i < ideal_text.size() && ideal_text[i] != ';') continue;
        std::string piece = ideal_text.substr(start, i - start);
        if (piece.find_first_not_of(" \t") != std::string::npos)
          gens.push_back(a.reduce(parse_arg(piece, d.ring(), "--ideal")));
        start = i + 1;
      }
      if (gens.empty()) throw InvalidArgumentError("--ideal needs at least one generator");
      ModificationInput input{d, gens, a.reduce(parse_arg(divisor_text, d.ring(), "--divisor"))};
      InvariantReport inv = check_invariants(input);
      if (!inv.ok) {
        for (const auto& m : inv.messages) out << "invariance: " << m << "\n";
        return kMathFailure;
      }
      ModificationOutput mod = modify(input, {l.bound, l.gb});
      const auto& ring = mod.algebra.ring();
      out << "variables: " << join(ring->names(), ", ") << "\n";
      for (std::size_t i = 0; i < mod.new_variables.size(); ++i)
        out << "  " << mod.new_variables[i] << " = (" << gens[i].to_string() << ")/(" << input.divisor.to_string()
            << ")\n";
      out << "relations:\n" << format_ideal_lines(mod.algebra.ideal().groebner_basis());
      out << "derivation:\n";
      for (std::size_t i = 0; i < ring->size(); ++i)
        if (!mod.derivation.image(i).is_zero())
          out << "  " << ring->name(i) << " -> " << mod.derivation.image(i).to_string() << "\n";
      bool loc = localization_matches(input, mod, l.gb);
      out << "localization: " << (loc ? "ok" : "mismatch") << "\n";
      bool ok = loc;
      if (verify_lemma) {
        ReesOptions opts;
        opts.bound = l.bound;
        opts.gb = l.gb;
        if (l.spec.options.max_iter) opts.max_iter = *l.spec.options.max_iter;
        LemmaCheck lemma = verify_rees_modification(input, opts);
        out << "center J: " << (lemma.center.empty() ? "0" : join_polys(lemma.center, ", ")) << "\n";
        out << "lemma: " << (lemma.holds ? "holds" : "fails") << "\n";
        for (const auto& m : lemma.messages) out << "  " << m << "\n";
        ok = ok && lemma.holds;
      }
      return ok ? kOk : kMathFailure;
    }

    ReesResult result = run_rees(l, max_iter);
    if (rees->parsed()) {
      if (prune && result.status == ReesStatus::stabilized) {
        ReesPresentation pruned = prune_generators(*result.presentation);
        result.presentation.emplace(pruned);
      }
      out << format_rees(result, trace, max_iter >= 0 ? max_iter : l.spec.options.max_iter.value_or(ReesOptions{}.max_iter));
      return result.status == ReesStatus::stabilized ? kOk : kMathFailure;
    }
    const ReesPresentation& pres = require_stable(result);
    if (gr->parsed()) {
      GradedAlgebra g = associated_graded(pres);
      std::vector<GradedGenerator> gens;
      for (const auto& x : pres.generators())
        if (x.origin != GeneratorOrigin::upsilon) gens.push_back(x);
      out << "generators: " << format_generators(gens) << "\n";
      out << "relations:\n" << format_ideal_lines(g.relations.groebner_basis());
      out << "derivation (degree -1):\n";
      bool any = false;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (!g.derivation_images[i].is_zero()) {
          out << "  " << gens[i].label << " -> " << g.derivation_images[i].to_string() << "\n";
          any = true;
        }
      if (!any) out << "  0\n";
      return kOk;
    }
    if (kernel->parsed()) {
      auto k = kernel_generators(pres);
      out << (k.empty() ? "(constants only)" : join_polys(k, ", ")) << "\n";
      return kOk;
    }
    if (fn->parsed()) {
      out << join_polys(degree_module_gens(pres, level), ", ") << "\n";
      return kOk;
    }
    if (proj->parsed()) {
      out << proj_report(pres);
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << c.spec_path << ":" << e.what() << "\n";
    return kInputError;
  } catch (const ResourceBudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InvalidArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const RingMismatchError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kMathFailure;
  }
  return kInputError;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_command(args, out, err);
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, have = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
      have = true;
    } else if (!quoted && std::isspace(static_cast<unsigned char>(ch))) {
      if (have) out.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur += ch;
      have = true;
    }
  }
  if (have) out.push_back(cur);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int verify_examples(const std::filesystem::path& fixtures, std::ostream& out) {
  const auto manifest = fixtures / "golden" / "manifest.txt";
  std::ifstream in(manifest);
  if (!in) throw InvalidArgumentError("cannot read " + manifest.string());
  int passed = 0, total = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    // <name> <expected exit> <command> <spec> [args...]
    if (tok.size() < 4) throw InvalidArgumentError("malformed manifest line: " + line);
    const std::string name = tok[0];
    const int expected_exit = std::stoi(tok[1]);
    std::vector<std::string> args{tok[2], (fixtures / tok[3]).string()};
    args.insert(args.end(), tok.begin() + 4, tok.end());
    std::ostringstream o, e;
    int code = run_command(args, o, e);
    const auto golden = fixtures / "golden" / (name + ".out");
    bool ok = code == expected_exit && std::filesystem::exists(golden) && slurp(golden) == o.str();
    ++total;
    if (ok) ++passed;
    out << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && code != expected_exit) out << " (exit " << code << ", expected " << expected_exit << ")";
    out << "\n";
  }
  out << passed << "/" << total << " fixtures passed\n";
  return passed == total ? kOk : kMathFailure;
}

}  // namespace rees::cli
