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

#include "circpair/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace circpair {

void parallel_for(size_t num_tasks, unsigned workers, const std::function<void(size_t)> &fn) {
    if (num_tasks == 0) {
        return;
    }
    workers = std::max(1u, workers);
    if (workers == 1 || num_tasks == 1) {
        for (size_t t = 0; t < num_tasks; t++) {
            fn(t);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            size_t t = next.fetch_add(1);
            if (t >= num_tasks) {
                return;
            }
            try {
                fn(t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed = true;
            }
        }
    };
    size_t count = std::min<size_t>(workers, num_tasks);
    std::vector<std::thread> threads;
    threads.reserve(count - 1);
    for (size_t i = 0; i + 1 < count; i++) {
        threads.emplace_back(body);
    }
    body();
    for (auto &t : threads) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

unsigned default_workers() {
    if (const char *env = std::getenv("CIRCPAIR_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) {
                return unsigned(v);
            }
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace circpair
