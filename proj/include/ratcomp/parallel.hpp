// OpenMP helpers. Every parallel entry point has a serial twin used as the reference in tests.
#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

#include "ratcomp/casegen.hpp"

namespace ratcomp {

// flag > 0 wins, then RATCOMP_WORKERS, then the OpenMP default.
int resolve_workers(int flag);

// body(i) for i in [0, count); the first exception thrown by any iteration is rethrown.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

std::vector<EquationSystem> build_all_systems_serial(const std::vector<CaseSpec>& cases);
std::vector<EquationSystem> build_all_systems(const std::vector<CaseSpec>& cases, int workers = 0);

}  // namespace ratcomp
