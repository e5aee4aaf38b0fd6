#include "sl/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace sl::kernels {

namespace {

const Ops& select_backend() {
  const char* forced = std::getenv("SL_KERNEL_ISA");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return scalar_ops();
#if defined(SL_HAVE_AVX2_BUILD)
  if (forced != nullptr && std::strcmp(forced, "avx2") == 0) return avx2_ops();
  if (forced == nullptr && __builtin_cpu_supports("avx2") &&
      __builtin_cpu_supports("fma"))
    return avx2_ops();
#endif
  return scalar_ops();
}

}  // namespace

const Ops& active() {
  static const Ops& ops = select_backend();
  return ops;
}

std::string_view active_name() { return active().name; }

}  // namespace sl::kernels
