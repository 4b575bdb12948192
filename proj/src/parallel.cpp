#include "ratcomp/parallel.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

#include <omp.h>

namespace ratcomp {

int resolve_workers(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("RATCOMP_WORKERS")) {
    try {
      int w = std::stoi(env);
      if (w > 0) return w;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
  std::exception_ptr err;
  std::mutex mu;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(resolve_workers(workers))
  for (long i = 0; i < n; ++i) {
    {
      std::lock_guard<std::mutex> lk(mu);
      if (err) continue;
    }
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lk(mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

std::vector<EquationSystem> build_all_systems_serial(const std::vector<CaseSpec>& cases) {
  std::vector<EquationSystem> out;
  out.reserve(cases.size());
  for (const auto& c : cases) out.push_back(build_system(c));
  return out;
}

std::vector<EquationSystem> build_all_systems(const std::vector<CaseSpec>& cases, int workers) {
  std::vector<EquationSystem> out(cases.size());
  parallel_for(cases.size(), workers, [&](std::size_t i) { out[i] = build_system(cases[i]); });
  return out;
}

}  // namespace ratcomp
