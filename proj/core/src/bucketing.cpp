// Copyright 2026 The Cutopt Authors
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

#include "cutopt/bucketing.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cutopt/error.hpp"

namespace cutopt {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxSubsetColumns = 20;
}  // namespace

std::vector<int> valid_cut_indices(const SortedScoreIndex& idx, int col) {
  const auto& vals = idx.values(col);
  const int n = idx.n();
  std::vector<int> out;
  out.reserve(n + 1);
  out.push_back(0);
  for (int k = 1; k < n; ++k) {
    if (vals[k - 1] < vals[k]) out.push_back(k);
  }
  out.push_back(n);
  return out;
}

bool is_valid_cut_index(const SortedScoreIndex& idx, int col, int k) {
  if (k == 0 || k == idx.n()) return true;
  if (k < 0 || k > idx.n()) return false;
  const auto& vals = idx.values(col);
  return vals[k - 1] < vals[k];
}

CutoffValues realize_cutoffs(const CutIndexVector& k, const SortedScoreIndex& idx) {
  const int m = idx.m();
  if (static_cast<int>(k.k.size()) != m) {
    throw InvalidInputError("cut index vector has " + std::to_string(k.k.size()) +
                            " entries, expected " + std::to_string(m));
  }
  CutoffValues out;
  out.c.resize(m);
  for (int j = 0; j < m; ++j) {
    const int kj = k.k[j];
    if (!is_valid_cut_index(idx, j, kj)) {
      throw InvalidInputError("cut index " + std::to_string(kj) + " for score " +
                              std::to_string(j + 1) +
                              " is out of range or splits a tie group");
    }
    if (kj == 0) {
      out.c[j] = -kInf;
    } else if (kj == idx.n()) {
      out.c[j] = kInf;
    } else {
      const auto& vals = idx.values(j);
      out.c[j] = (vals[kj - 1] + vals[kj]) / 2.0;
    }
  }
  return out;
}

std::vector<int> crossings(const ScoreMatrix& scores, const CutoffValues& cutoffs) {
  const int n = scores.n();
  const int m = scores.m();
  if (static_cast<int>(cutoffs.c.size()) != m) {
    throw InvalidInputError("cut-off vector size does not match score count");
  }
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i) {
    int crossed = 0;
    for (int j = 0; j < m; ++j) {
      if (scores.score(i, j) >= cutoffs.c[j]) ++crossed;
    }
    out[i] = crossed;
  }
  return out;
}

namespace {

// Subset scheme bucket id: bit j set iff the item crosses cut-off j.
int subset_bucket(const ScoreMatrix& scores, const CutoffValues& cutoffs, int item) {
  int id = 0;
  for (int j = 0; j < scores.m(); ++j) {
    if (scores.score(item, j) >= cutoffs.c[j]) id |= 1 << j;
  }
  return id;
}

}  // namespace

BucketHistogram bucket_histogram(const ScoreMatrix& scores, const CutoffValues& cutoffs,
                                 BucketScheme scheme) {
  const int n = scores.n();
  const int m = scores.m();
  BucketHistogram hist;
  hist.n = n;
  if (scheme == BucketScheme::kCount) {
    hist.counts.assign(static_cast<std::size_t>(m) + 1, 0);
    for (int b : crossings(scores, cutoffs)) ++hist.counts[b];
  } else {
    if (m > kMaxSubsetColumns) {
      throw CapacityError("subset bucketing needs 2^" + std::to_string(m) +
                              " buckets; supported only for m <= " +
                              std::to_string(kMaxSubsetColumns),
                          m > 63 ? std::numeric_limits<std::uint64_t>::max()
                                 : (std::uint64_t{1} << m));
    }
    if (static_cast<int>(cutoffs.c.size()) != m) {
      throw InvalidInputError("cut-off vector size does not match score count");
    }
    hist.counts.assign(std::size_t{1} << m, 0);
    for (int i = 0; i < n; ++i) ++hist.counts[subset_bucket(scores, cutoffs, i)];
  }
  return hist;
}

std::int64_t sum_of_squares(const BucketHistogram& hist) {
  std::int64_t s = 0;
  for (std::int64_t c : hist.counts) s += c * c;
  return s;
}

double distinguishability(const BucketHistogram& hist) {
  const std::int64_t n = hist.n;
  if (n < 2) {
    throw InvalidInputError("distinguishability is undefined for n < 2");
  }
  const std::int64_t num = n * n - sum_of_squares(hist);
  return static_cast<double>(num) / static_cast<double>(n * (n - 1));
}

double distinguishability_by_pairs(const ScoreMatrix& scores, const CutoffValues& cutoffs,
                                   BucketScheme scheme) {
  const std::int64_t n = scores.n();
  if (n < 2) {
    throw InvalidInputError("distinguishability is undefined for n < 2");
  }
  std::vector<int> bucket(scores.n());
  if (scheme == BucketScheme::kCount) {
    bucket = crossings(scores, cutoffs);
  } else {
    if (scores.m() > kMaxSubsetColumns) {
      throw CapacityError("subset bucketing supported only for m <= " +
                              std::to_string(kMaxSubsetColumns),
                          std::uint64_t{1} << std::min(scores.m(), 63));
    }
    for (int i = 0; i < scores.n(); ++i) bucket[i] = subset_bucket(scores, cutoffs, i);
  }
  std::int64_t different = 0;
  for (int i = 0; i < scores.n(); ++i) {
    for (int j = i + 1; j < scores.n(); ++j) {
      if (bucket[i] != bucket[j]) ++different;
    }
  }
  return static_cast<double>(2 * different) / static_cast<double>(n * (n - 1));
}

CutoffValues median_cutoffs(const ScoreMatrix& scores) {
  const SortedScoreIndex idx(scores);
  const int n = scores.n();
  CutoffValues out;
  out.c.resize(scores.m());
  for (int j = 0; j < scores.m(); ++j) {
    const auto& vals = idx.values(j);
    out.c[j] = (n % 2 == 1) ? vals[n / 2]
                            : (vals[n / 2 - 1] + vals[n / 2]) / 2.0;
  }
  return out;
}

CutIndexVector median_cut_indices(const SortedScoreIndex& idx) {
  CutIndexVector out;
  out.k.resize(idx.m());
  for (int j = 0; j < idx.m(); ++j) {
    int k = idx.n() / 2;
    while (!is_valid_cut_index(idx, j, k)) --k;
    out.k[j] = k;
  }
  return out;
}

}  // namespace cutopt
