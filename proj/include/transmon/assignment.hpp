// Copyright 2026 The transmon-wh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRANSMON_ASSIGNMENT_HPP
#define TRANSMON_ASSIGNMENT_HPP

#include <vector>

#include <Eigen/Dense>

namespace transmon {

/// Maximum-weight bipartite matching of every row to a distinct column
/// (Hungarian algorithm with potentials, O(rows^2 cols)).
///
/// Requires rows <= cols. Returns the matched column for each row.
std::vector<Eigen::Index> max_weight_assignment(const Eigen::MatrixXd& weight);

}  // namespace transmon

#endif  // TRANSMON_ASSIGNMENT_HPP
