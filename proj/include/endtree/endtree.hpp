// Copyright 2026 The endtree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef ENDTREE_ENDTREE_HPP_
#define ENDTREE_ENDTREE_HPP_

#include "endtree/cut_miner.hpp"
#include "endtree/ended_graph.hpp"
#include "endtree/error.hpp"
#include "endtree/generators.hpp"
#include "endtree/nested_sets.hpp"
#include "endtree/oracle.hpp"
#include "endtree/structure_tree.hpp"
#include "endtree/tree_isomorphism.hpp"

#endif  // ENDTREE_ENDTREE_HPP_
