#include "rees/cli/format.hpp"

#include <sstream>

namespace rees::cli {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string join_polys(const std::vector<Poly>& polys, const std::string& sep) {
  std::vector<std::string> parts;
  for (const auto& p : polys) parts.push_back(p.to_string());
  return join(parts, sep);
}

std::string format_generators(const std::vector<GradedGenerator>& gens) {
  std::vector<std::string> parts;
  for (const auto& g : gens) parts.push_back(g.label + ":" + std::to_string(g.weight));
  return join(parts, " ");
}

std::string format_ideal_lines(const std::vector<Poly>& gens) {
  if (gens.empty()) return "  0\n";
  std::string out;
  for (const auto& g : gens) out += "  " + g.to_string() + "\n";
  return out;
}

namespace {

const char* verdict_name(CandidateVerdict v) {
  switch (v) {
    case CandidateVerdict::zero:
      return "zero";
    case CandidateVerdict::member:
      return "member";
    case CandidateVerdict::duplicate:
      return "duplicate";
    case CandidateVerdict::added:
      return "new";
  }
  return "?";
}

std::string format_discovered(const std::vector<GradedGenerator>& gens) {
  std::string out;
  for (const auto& g : gens)
    if (g.origin == GeneratorOrigin::discovered) out += "  " + g.label + " = " + g.element.to_string() + "\n";
  return out;
}

}  // namespace

std::string format_trace(const AlgorithmTrace& trace) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.iterations.size(); ++i) {
    const auto& it = trace.iterations[i];
    os << "iteration " << i + 1 << ": " << join(it.labels, " ") << "\n";
    for (const auto& c : it.candidates) {
      os << "  Q = " << c.q_polynomial.to_string() << " -> " << verdict_name(c.verdict);
      if (c.verdict != CandidateVerdict::zero) os << " " << c.element.to_string() << " (weight " << c.weight << ")";
      if (c.verdict == CandidateVerdict::added) os << " as " << c.label;
      os << "\n";
    }
    if (it.stable) os << "  stable\n";
  }
  return os.str();
}

std::string format_rees(const ReesResult& result, bool with_trace, int max_iter) {
  std::ostringstream os;
  const std::size_t iters = result.trace.iterations.size();
  if (result.status == ReesStatus::stabilized) {
    const auto& pres = *result.presentation;
    os << "status: stabilized after " << iters << (iters == 1 ? " iteration" : " iterations") << "\n";
    os << "generators: " << format_generators(pres.generators()) << "\n";
    std::string disc = format_discovered(pres.generators());
    if (!disc.empty()) os << "discovered:\n" << disc;
    os << "relations:\n" << format_ideal_lines(pres.relations().groebner_basis());
    if (with_trace) os << "trace:\n" << format_trace(result.trace);
  } else {
    os << "status: not terminated (max-iter " << max_iter << " reached after " << iters
       << (iters == 1 ? " iteration" : " iterations") << ")\n";
    os << "generators so far: " << format_generators(result.last_generators) << "\n";
    std::string disc = format_discovered(result.last_generators);
    if (!disc.empty()) os << "discovered:\n" << disc;
    os << "trace:\n" << format_trace(result.trace);
  }
  return os.str();
}

}  // namespace rees::cli
