#pragma once

#include <string>
#include <string_view>

#include "modsub/graph.hpp"

namespace modsub {

// Words over the modular group use the alphabet {a, A, b, B}; a is an
// involution so A is accepted on input and rewritten to a. The normal form
// eliminates aa, bB, Bb and contracts bb -> B, BB -> b.
std::string normalize_word(std::string_view w);

bool is_normal_word(std::string_view w);

// Does w, read from the root, trace a closed path in g? Requires a rooted
// graph. a-edges are crossed symmetrically; b follows the successor map and
// B walks it backwards; loops absorb their letter in place.
bool member(const Graph& g, std::string_view w);

} // namespace modsub
