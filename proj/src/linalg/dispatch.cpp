#include "gbt/linalg/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gbt::linalg::kernels {

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "unknown";
}

std::vector<Isa> available_isas() {
    std::vector<Isa> isas{Isa::Scalar};
    if (detail::avx2_table() != nullptr && detail::cpu_has_avx2_fma()) isas.push_back(Isa::Avx2);
    if (detail::neon_table() != nullptr) isas.push_back(Isa::Neon);
    return isas;
}

const KernelTable& kernels_for(Isa isa) {
    for (Isa available : available_isas()) {
        if (available != isa) continue;
        switch (isa) {
            case Isa::Scalar: return scalar_kernels();
            case Isa::Avx2: return *detail::avx2_table();
            case Isa::Neon: return *detail::neon_table();
        }
    }
    throw std::invalid_argument("kernel variant '" + std::string(isa_name(isa)) + "' is not available on this CPU");
}

namespace {

const KernelTable& select_kernels() {
    const auto isas = available_isas();
    if (const char* forced = std::getenv("GBT_SIMD"); forced != nullptr) {
        for (Isa isa : isas) {
            if (isa_name(isa) == forced) return kernels_for(isa);
        }
        // Unknown or unavailable override: fall back to the reference kernels.
        return scalar_kernels();
    }
    return kernels_for(isas.back());
}

}  // namespace

const KernelTable& active_kernels() noexcept {
    static const KernelTable& table = select_kernels();
    return table;
}

}  // namespace gbt::linalg::kernels
