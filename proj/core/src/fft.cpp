#include "fft.hpp"

#include <mutex>

#include <fftw3.h>

namespace qspace::detail {

namespace {
// The FFTW planner is not re-entrant; execution on distinct arrays is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

void dft_inplace(std::vector<cplx>& data, int sign) {
    if (data.size() <= 1) return;
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf,
                                sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
}

}  // namespace qspace::detail
