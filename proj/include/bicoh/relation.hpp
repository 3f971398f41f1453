#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bicoh/formula.hpp"
#include "bicoh/term.hpp"

namespace bicoh {

using OccPair = std::pair<int, int>;

// Relation between letter occurrences of `source` and `target`; pairs are
// 1-based, sorted and free of duplicates.
struct Relation {
  Formula source;
  Formula target;
  std::vector<OccPair> pairs;

  bool empty() const { return pairs.empty(); }
  bool contains(OccPair p) const;
  friend bool operator==(const Relation& a, const Relation& b) = default;
};

Relation make_relation(Formula source, Formula target, std::vector<OccPair> pairs);
Relation rel_identity(const Formula& a);
// R2 after R1; requires target(R1) = source(R2).
Relation rel_compose(const Relation& r1, const Relation& r2);
Relation rel_xi(const Relation& r1, const Relation& r2, Conn c);
Relation rel_converse(const Relation& r);

Relation g_of(const Term& t);

// Every pair links occurrences of the same letter.
bool letter_consistent(const Relation& r);

std::string relation_text(const Relation& r);
std::string relation_json(const Relation& r);
std::string relation_dot(const Relation& r);

}  // namespace bicoh
