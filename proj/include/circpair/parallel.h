// Copyright 2026 The circpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIRCPAIR_PARALLEL_H
#define CIRCPAIR_PARALLEL_H

#include <cstddef>
#include <functional>

namespace circpair {

/// Runs fn(task) for every task in [0, num_tasks) on up to `workers` threads.
/// Tasks are claimed in increasing order; the first exception thrown by any
/// task is rethrown after all workers stop. workers == 0 means one.
void parallel_for(size_t num_tasks, unsigned workers, const std::function<void(size_t)> &fn);

/// Worker count used when callers pass 0: CIRCPAIR_THREADS or hardware concurrency.
unsigned default_workers();

}  // namespace circpair

#endif
