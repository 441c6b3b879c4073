#include "nusol/kernels.hpp"

namespace nusol::kernels {

namespace scalar {
extern const Ops table;
}

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
extern const Ops table;
}

static bool cpu_has_avx2_fma() {
#if defined(__GNUC__) || defined(__clang__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}
#endif

const Ops& scalar_ops() { return scalar::table; }

const Ops* avx2_ops() {
#if defined(__x86_64__) || defined(_M_X64)
    static const bool ok = cpu_has_avx2_fma();
    return ok ? &avx2::table : nullptr;
#else
    return nullptr;
#endif
}

const Ops& active() {
    static const Ops* chosen = avx2_ops() ? avx2_ops() : &scalar::table;
    return *chosen;
}

Backend active_backend() { return avx2_ops() ? Backend::avx2 : Backend::scalar; }

} // namespace nusol::kernels
