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

#include "shannon/walks.hpp"

#include <algorithm>
#include <cstdint>

#include "common/error.hpp"

namespace qs::shannon {

namespace {

std::vector<Toggle> shifted(const std::vector<Toggle>& walk, int by, bool reversed) {
    std::vector<Toggle> out;
    out.reserve(walk.size());
    for (const Toggle& t : walk) out.push_back({t.qudit + by, t.level});
    if (reversed) std::reverse(out.begin(), out.end());
    return out;
}

std::int64_t ipow(int b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

std::vector<Toggle> snake_walk(int d, int m) {
    if (m == 0) return {};
    const std::vector<Toggle> sub = snake_walk(d, m - 1);
    std::vector<Toggle> out;
    for (int x = 0; x < d; ++x) {
        const std::vector<Toggle> leg = shifted(sub, 1, x % 2 == 1);
        out.insert(out.end(), leg.begin(), leg.end());
        if (x < d - 1) out.push_back({0, x + 1});
    }
    return out;
}

std::vector<Toggle> ucr_walk(int d, int k) {
    if (k == 0) return {};
    const std::vector<Toggle> path = shifted(snake_walk(d, k - 1), 1, false);
    std::vector<int> levels;
    for (int l = 1; l < d; ++l) levels.push_back(l);
    for (int l = d - 1; l >= 1; --l) levels.push_back(l);
    std::vector<Toggle> out;
    for (std::size_t p = 0; p < levels.size(); ++p) {
        if (p % 2 == 0) {
            out.insert(out.end(), path.begin(), path.end());
        } else {
            out.insert(out.end(), path.rbegin(), path.rend());
        }
        out.push_back({0, levels[p]});
    }
    return out;
}

std::vector<Toggle> controlled_walk(int d, int k, int level) {
    const std::vector<Toggle> path = shifted(snake_walk(d, k), 1, false);
    std::vector<Toggle> out(path);
    out.push_back({0, level});
    out.insert(out.end(), path.rbegin(), path.rend());
    out.push_back({0, level});
    return out;
}

SignPlan::SignPlan(int d, int k, std::vector<Toggle> walk) : d_(d), k_(k), walk_(std::move(walk)) {
    const std::int64_t words = ipow(d, k);
    const auto slots = static_cast<Eigen::Index>(walk_.size());
    signs_.resize(words, slots);
    std::vector<int> digit(k);
    for (std::int64_t w = 0; w < words; ++w) {
        std::int64_t rem = w;
        for (int q = k - 1; q >= 0; --q) {
            digit[q] = static_cast<int>(rem % d);
            rem /= d;
        }
        double sign = 1.0;
        for (Eigen::Index t = 0; t < slots; ++t) {
            signs_(w, t) = sign;
            const Toggle& g = walk_[t];
            if (digit[g.qudit] == g.level) sign = -sign;
        }
        require(sign == 1.0, ErrorCode::Internal, "sign plan: control walk is not closed");
    }
    if (slots > 0) {
        cod_.compute(signs_);
        rank_ = static_cast<int>(cod_.rank());
    }
}

std::vector<double> SignPlan::solve(const std::vector<double>& target) const {
    require(static_cast<Eigen::Index>(target.size()) == signs_.rows(), ErrorCode::Shape,
            "sign plan: target length must be d^k");
    if (walk_.empty()) return target;
    const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(target.data(), signs_.rows());
    const Eigen::VectorXd x = cod_.solve(rhs);
    return std::vector<double>(x.data(), x.data() + x.size());
}

const SignPlan& PlanCache::ucr(int d, int k) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = plans_[{0, d, k, 0}];
    if (!slot) {
        slot = std::make_unique<SignPlan>(d, k, ucr_walk(d, k));
        const auto words = static_cast<int>(ipow(d, k));
        require(k == 0 || slot->rank() == words, ErrorCode::Internal,
                "uniformly controlled rotation: sign system is rank deficient");
    }
    return *slot;
}

const SignPlan& PlanCache::controlled(int d, int k, int level) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = plans_[{1, d, k, level}];
    if (!slot) {
        slot = std::make_unique<SignPlan>(d, k + 1, controlled_walk(d, k, level));
        const auto expect = static_cast<int>(2 * ipow(d, k));
        require(slot->rank() == expect, ErrorCode::Internal,
                "controlled diagonal: sign system is rank deficient");
    }
    return *slot;
}

}  // namespace qs::shannon
