#include "autsys/kernels.hpp"

#include <stdexcept>

namespace autsys::kernels {

const char* to_string(Backend backend) noexcept
{
    switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

bool supported(Backend backend) noexcept
{
    switch (backend) {
    case Backend::Scalar:
        return true;
    case Backend::Avx2:
#if defined(AUTSYS_HAVE_AVX2)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("bmi2");
#else
        return false;
#endif
    }
    return false;
}

const Table& table(Backend backend)
{
    if (!supported(backend))
        throw std::invalid_argument(std::string("kernel backend not supported: ") + to_string(backend));
#if defined(AUTSYS_HAVE_AVX2)
    if (backend == Backend::Avx2)
        return detail::avx2_table();
#endif
    return detail::scalar_table();
}

const Table& active() noexcept
{
    static const Table& chosen = supported(Backend::Avx2) ? table(Backend::Avx2) : detail::scalar_table();
    return chosen;
}

} // namespace autsys::kernels
