#pragma once

#include <cstddef>
#include <functional>

namespace invstat {

// Runs fn(task_index, worker_index) for every task on a small pool.
// workers <= 0 picks hardware concurrency. Task results must be written to
// task-owned slots or merged commutatively; the pool makes no ordering
// guarantees. The first exception thrown by a task is rethrown after join.
void parallel_for(std::size_t n_tasks, int workers,
                  const std::function<void(std::size_t, int)>& fn);

int resolve_workers(int workers);

}  // namespace invstat
