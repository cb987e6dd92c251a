#pragma once

// Machine-readable reports behind the command line tool. Exact integers and
// rationals are written as decimal strings; every finite-n number is labeled
// as an observation at that radius.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/element.hpp"
#include "thompson/sampling.hpp"

namespace thompson {

/// One element per line or per ';'-separated item, canonical or group-word
/// syntax; '#' starts a comment.
std::vector<Element> parse_element_list(std::string_view text);

/// CSV with header n,r_n,ratio,mu_inv_gap. Undefined cells are left empty.
std::string count_csv(unsigned max_n);

std::string sphere_json(unsigned k, unsigned n, Model model, bool meta);
std::string density_json(unsigned k, unsigned n, Model model, bool meta);
std::string certify_json(const std::vector<Element>& gens, std::size_t depth, bool meta);
std::string experiment_json(const ExperimentConfig& config, bool meta);
std::string nat_json(const std::vector<Element>& gens, const BinaryWord& u, std::size_t k, bool meta);

}  // namespace thompson
