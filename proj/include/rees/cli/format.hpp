#pragma once

#include <string>
#include <vector>

#include "rees/rees_algorithm.hpp"

namespace rees::cli {

std::string join(const std::vector<std::string>& parts, const std::string& sep);
std::string join_polys(const std::vector<Poly>& polys, const std::string& sep);

// "x:0 y:0 u:1 v:1 upsilon:1"
std::string format_generators(const std::vector<GradedGenerator>& gens);

// One polynomial per line, indented; "  0" for the zero ideal.
std::string format_ideal_lines(const std::vector<Poly>& gens);

std::string format_trace(const AlgorithmTrace& trace);

std::string format_rees(const ReesResult& result, bool with_trace, int max_iter);

}  // namespace rees::cli
