#pragma once

#include <cstddef>
#include <functional>

namespace padicmf {

/// Worker count used by the coefficient loops (default 1). Values < 1 mean 1.
void set_thread_count(int n);
int thread_count();

/// Runs body(i) for every i in [0, n). Each index is handled by exactly one
/// worker and bodies write only to their own slot, so results do not depend
/// on the thread count. The first exception thrown is rethrown here.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace padicmf
