#pragma once

#include "perfgrp/group.hpp"

#include <vector>

namespace corpus {

using namespace perfgrp;

inline Group quaternion8() {
  // Left-regular action on 1, i, j, k, -1, -i, -j, -k.
  return from_generators(8, {from_cycles(8, {{0, 1, 4, 5}, {2, 3, 6, 7}}), from_cycles(8, {{0, 2, 4, 6}, {1, 7, 5, 3}})},
                         "Q8");
}

inline Group frobenius20() { return from_generators(5, {from_cycles(5, {{0, 1, 2, 3, 4}}), from_cycles(5, {{1, 2, 4, 3}})}, "F20"); }

inline Group frobenius21() {
  return from_generators(7, {from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}), from_cycles(7, {{1, 2, 4}, {3, 6, 5}})}, "F21");
}

// Every realized group the property and acceptance suites range over.
inline const std::vector<Group>& groups() {
  static const std::vector<Group> all = [] {
    std::vector<Group> g;
    for (std::size_t n = 1; n <= 16; ++n) g.push_back(cyclic(n));
    for (std::size_t n : {18, 20, 24, 28, 30}) g.push_back(cyclic(n));
    for (std::size_t m = 2; m <= 24; m += 2) g.push_back(dihedral(m));
    for (std::size_t n = 1; n <= 4; ++n) g.push_back(symmetric(n));
    for (std::size_t n = 1; n <= 5; ++n) g.push_back(alternating(n));
    const Group c2 = cyclic(2), c3 = cyclic(3), c4 = cyclic(4), c5 = cyclic(5), s3 = symmetric(3);
    g.push_back(direct_product(c2, c2));
    g.push_back(direct_product(direct_product(c2, c2), c2));
    g.push_back(direct_product(c2, c4));
    g.push_back(direct_product(c3, c3));
    g.push_back(direct_product(c4, c4));
    g.push_back(direct_product(c2, cyclic(6)));
    g.push_back(direct_product(s3, c2));
    g.push_back(direct_product(s3, c3));
    g.push_back(direct_product(s3, c5));
    g.push_back(direct_product(s3, s3));
    g.push_back(direct_product(alternating(4), c2));
    g.push_back(direct_product(alternating(4), c3));
    g.push_back(direct_product(dihedral(8), c2));
    g.push_back(direct_product(symmetric(4), c2));
    g.push_back(direct_product(alternating(5), c2));
    g.push_back(quaternion8());
    g.push_back(frobenius20());
    g.push_back(frobenius21());
    return g;
  }();
  return all;
}

}  // namespace corpus
