#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wreath/tree_aut.hpp"

namespace wreath {

using BigInt = boost::multiprecision::cpp_int;

// E: E_1 = S_d, E_n = (E_{n-1} wr S_d) ∩ ker(sgn2).
// U: the n-fold iterated wreath product of A_d.
// W: the full automorphism group W_n.
enum class Family { E, U, W };

std::string_view to_string(Family f);
// Case-insensitive "E", "U" or "W".
Family parse_family(std::string_view text);

// Requires degree >= 3 (and level >= 1 for E).
bool is_member(const TreeAut& a, Family family);

BigInt order_of_family(int degree, int level, Family family);

std::vector<TreeAut> generators_of(int degree, int level, Family family);

// The 3-cycles (0 1 i), 2 <= i < d, generating A_d.
std::vector<Perm> alternating_generators(int degree);

// Uniformly random element of F_n.
TreeAut random_member(int degree, int level, Family family, std::mt19937_64& rng);

Perm random_perm(int degree, std::mt19937_64& rng);

void check_tower_degree(int degree);

} // namespace wreath
