#pragma once

// Finitely presented groups, compiled to Cayley tables by coset enumeration.
//
// Word syntax: single-letter generators, `x^k` (k may be negative), `x^y`
// for y^-1 x y, parentheses, `[u,v]` commutators and `1`. A relation is
// either a word (a relator) or `lhs = rhs`.

#include <string>
#include <string_view>
#include <vector>

#include "tgr/group.hpp"

namespace tgr {

enum class CommutatorConvention {
  InverseFirst,  // [x,y] = x^-1 y^-1 x y
  InverseLast,   // [x,y] = x y x^-1 y^-1
};

// A word as a list of letters: +(i+1) for generator i, -(i+1) for its inverse.
using Word = std::vector<int>;

Word parse_word(std::string_view generators, std::string_view text,
                CommutatorConvention conv = CommutatorConvention::InverseFirst);
// Relator for `text`, converting `lhs = rhs` to lhs * rhs^-1.
Word parse_relator(std::string_view generators, std::string_view text,
                   CommutatorConvention conv = CommutatorConvention::InverseFirst);

Elem evaluate_word(const FiniteGroup& G, std::span<const Elem> gen_images, const Word& w);

struct PresentedGroup {
  FiniteGroup group;
  // Elements representing the generators, in the order of `generators`.
  std::vector<Elem> generators;
};

struct PresentationOptions {
  CommutatorConvention conv = CommutatorConvention::InverseFirst;
  std::size_t coset_limit = 4'000'000;
};

// Enumerates the group, verifies every relation on the resulting table and
// that the order equals `expected_order` (RelationCheckFailed otherwise).
PresentedGroup from_presentation(std::string_view generators,
                                 const std::vector<std::string>& relations,
                                 std::size_t expected_order, std::string name = {},
                                 PresentationOptions opts = {});

}  // namespace tgr
