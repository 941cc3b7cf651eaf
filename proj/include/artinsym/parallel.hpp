#pragma once

#include <cstddef>
#include <functional>

namespace artinsym {

/* 0 restores the default (hardware concurrency) */
void set_worker_count(int n);
int worker_count();

/* runs body(0..n-1) on up to worker_count() threads; nested calls run inline.
 * The first exception thrown by any iteration is rethrown. */
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace artinsym
