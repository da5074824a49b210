#pragma once

#include "operadkit/fincat.hpp"
#include "operadkit/smn.hpp"

namespace operadkit {

// Interpretation of a tree as an n-ary functor on the carrier: leaves pick
// the input with their number, e / ox / norm vertices apply the structure
// functors (norm labels g_i (x)_T act through conjugation by g_i).
int eval_tree_obj(const NormedSMCData& d, const TreePtr& t, const std::vector<int>& objs);
int eval_tree_mor(const NormedSMCData& d, const TreePtr& t, const std::vector<int>& mors);
NFunctor interpret_tree(const NormedSMCData& d, const TreePtr& t);

// The component of an irreducible generator at an object tuple.
int irr_component(const NormedSMCData& d, const Irreducible& irr, const std::vector<int>& objs);

// Whiskered interpretation of a basic edge / path as a natural
// transformation |src| => |tgt|; endpoints are verified on every component.
NTrans interpret_edge(const NormedSMCData& d, const BasicEdge& e);
NTrans interpret_path(const NormedSMCData& d, const CoherencePath& p);

bool check_naturality(const NormedSMCData& d, const TreePtr& src, const TreePtr& tgt,
                      const NTrans& eta, std::string* why = nullptr);

// Every basic-edge path of length <= max_len inside the bounded tree graph
// interprets equal to the canonical path between its endpoints.
Report verify_parallel_paths(const NormedSMCData& d, int max_arity, int max_depth, int max_len);

}  // namespace operadkit
