// Copyright 2026 The qudsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

namespace qs::shannon {

// One GCX in a control walk: control `qudit` (a local index into the walk's
// control list) in state |level>.
struct Toggle {
    int qudit = 0;
    int level = 1;

    bool operator==(const Toggle& o) const { return qudit == o.qudit && level == o.level; }
};

// Reflected d-ary Gray walk over `m` control qudits (local indices 0..m-1).
// Every toggle uses a nonzero control level and the parity states it visits are
// pairwise distinct; it has d^m - 1 steps.
std::vector<Toggle> snake_walk(int d, int m);

// Closed walk of length 2 (d-1) d^{k-1} for a k-fold multiplexed rotation.
std::vector<Toggle> ucr_walk(int d, int k);

// Closed walk of length 2 d^k for a rotation multiplexed over k qudits and
// conditioned on local qudit 0 being in |level>. The multiplexing qudits are
// local indices 1..k.
std::vector<Toggle> controlled_walk(int d, int k, int level);

// Linear map from circuit angles (one per rotation slot of the walk) to the
// effective angle seen by each control word.
class SignPlan {
public:
    SignPlan(int d, int k, std::vector<Toggle> walk);

    int d() const { return d_; }
    int k() const { return k_; }
    const std::vector<Toggle>& walk() const { return walk_; }
    const Eigen::MatrixXd& signs() const { return signs_; }
    int rank() const { return rank_; }

    // Least-norm circuit angles whose effective angles equal `target`
    // (indexed by control word, local qudit 0 most significant).
    std::vector<double> solve(const std::vector<double>& target) const;

private:
    int d_;
    int k_;
    std::vector<Toggle> walk_;
    Eigen::MatrixXd signs_;
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod_;
    int rank_ = 0;
};

// Builds and memoizes sign plans. Safe to share between threads.
class PlanCache {
public:
    const SignPlan& ucr(int d, int k);
    const SignPlan& controlled(int d, int k, int level);

private:
    std::mutex mutex_;
    std::map<std::tuple<int, int, int, int>, std::unique_ptr<SignPlan>> plans_;
};

}  // namespace qs::shannon
