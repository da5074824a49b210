#pragma once

#include "operadkit/fincat.hpp"

namespace operadkit {

// Text formats (whitespace-tokenized; parse errors carry code "ParseError"):
//   group file:    `group <order>` then <order> rows of the mul table
//   gset file:     `gset <H as comma-separated sorted elements> <n>` then
//                  |H| rows of n point images (rows indexed by H in order)
//   tree:          LISP-style lists, atoms `e`, `ox`,
//                  `oxT:<norm-index>:<cosetrep-index>`, integers for leaves
//   category file: `category <objects> <morphisms>` then dom, cod, idm,
//                  comp rows, act_obj rows, act_mor rows
//   nsmc file:     self-contained: `nsmc`, group, `norms <k>` + gsets,
//                  category block, unit, tensor/coherence/norm tables

GroupPtr parse_group(const std::string& text);
std::string format_group(const GroupPtr& g);

Exponent parse_gset(const GroupPtr& g, const std::string& text);
std::string format_gset(const Exponent& e);

TreePtr parse_tree(const SNAlphabet& a, const std::string& text);
std::string format_tree(const TreePtr& t);

GCategory parse_gcategory(const GroupPtr& g, const std::string& text);
std::string format_gcategory(const GCategory& c);

NormedSMCData parse_nsmc(const std::string& text);
std::string format_nsmc(const NormedSMCData& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace operadkit
