#include "oapoly/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "kernels_detail.hpp"

namespace oapoly::kern {

namespace detail {

bool cpu_supports_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace detail

namespace {

struct Selection {
  const Ops* table;
  Backend backend;
};

Selection select_default() {
  const bool can_avx2 = detail::avx2_ops() && detail::cpu_supports_avx2();
  const char* env = std::getenv("OAPOLY_BACKEND");
  std::string_view want = env ? env : "";
  if (want == "scalar" || (want == "avx2" && !can_avx2) ||
      (!want.empty() && want != "avx2") || !can_avx2)
    return {detail::scalar_ops(), Backend::scalar};
  return {detail::avx2_ops(), Backend::avx2};
}

Selection& state() {
  static Selection s = select_default();
  return s;
}

}  // namespace

const Ops& ops() { return *state().table; }

Backend active_backend() { return state().backend; }

void force_backend(Backend b) { state() = {&ops_for(b), b}; }

bool avx2_available() {
  return detail::avx2_ops() && detail::cpu_supports_avx2();
}

const Ops& ops_for(Backend b) {
  if (b == Backend::scalar) return *detail::scalar_ops();
  if (!avx2_available())
    throw std::runtime_error("avx2 kernels unavailable on this host");
  return *detail::avx2_ops();
}

}  // namespace oapoly::kern
