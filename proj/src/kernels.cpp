// Runtime kernel selection.

#include <cstdlib>
#include <string>

#include "morsegrid/kernels.hpp"

namespace morsegrid::kernels {

#if defined(__x86_64__) || defined(_M_X64)
Table const& avx2_table();
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
Table const& neon_table();
#endif

Table const* simd_or_null()
{
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2"))
        return &avx2_table();
    return nullptr;
#elif defined(__aarch64__) || defined(__ARM_NEON)
    return &neon_table();
#else
    return nullptr;
#endif
}

Table const& active()
{
    static Table const* const chosen = [] {
        if (char const* env = std::getenv("MORSEGRID_KERNELS")) {
            std::string const want(env);
            if (want == "scalar")
                return &scalar();
            Table const* simd = simd_or_null();
            if (simd && want == simd->name)
                return simd;
            return &scalar();
        }
        Table const* simd = simd_or_null();
        return simd ? simd : &scalar();
    }();
    return *chosen;
}

} // namespace morsegrid::kernels
