#pragma once

#include <string>

#include "abstain/trees.hpp"

namespace abstain {

// {"point":..,"dashed":"+1"|"-1","left":{..},"right":{..}}, leaves {"leaf":"name"}.
std::string tree_to_json(const ExtendedMistakeTree& t);
ExtendedMistakeTree tree_from_json(const std::string& text);

// Solid edges carry style=solid; the dashed edge is an extra parallel style=dashed edge.
std::string to_dot(const ExtendedMistakeTree& t);
// Reads the DOT produced by to_dot.
ExtendedMistakeTree tree_from_dot(const std::string& text);

// Reads JSON or DOT by extension (.dot, otherwise JSON).
ExtendedMistakeTree load_tree(const std::string& path);
void save_tree(const std::string& path, const ExtendedMistakeTree& t);

}  // namespace abstain
