#include "qlnls/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

#include "qlnls/errors.hpp"

namespace qlnls {

namespace {
// fftw_plan_* is not thread-safe; execution on distinct arrays is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

Fft::Fft(int n) : n_(n), planning_in_(n), planning_out_(n) {
    if (n < 1) throw ValidationError("fft: size must be positive");
    std::lock_guard<std::mutex> lock(planner_mutex());
    // FFTW_ESTIMATE keeps plan selection deterministic across processes,
    // which the bit-identical-rerun guarantee relies on.
    fwd_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(planning_in_.data()),
                            reinterpret_cast<fftw_complex*>(planning_out_.data()), FFTW_FORWARD,
                            FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(planning_in_.data()),
                            reinterpret_cast<fftw_complex*>(planning_out_.data()), FFTW_BACKWARD,
                            FFTW_ESTIMATE);
    if (!fwd_ || !bwd_) throw ValidationError("fft: planning failed");
}

Fft::~Fft() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (fwd_) fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    if (bwd_) fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
}

void Fft::forward(const complexd* in, complexd* out) const {
    fftw_execute_dft(static_cast<fftw_plan>(fwd_),
                     reinterpret_cast<fftw_complex*>(const_cast<complexd*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
    const double inv_n = 1.0 / n_;
    for (int j = 0; j < n_; ++j) out[j] *= inv_n;
}

void Fft::inverse(const complexd* in, complexd* out) const {
    fftw_execute_dft(static_cast<fftw_plan>(bwd_),
                     reinterpret_cast<fftw_complex*>(const_cast<complexd*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

const Fft& Fft::plan_for(int n) {
    static std::mutex registry_mutex;
    static std::map<int, std::unique_ptr<Fft>> registry;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& slot = registry[n];
    if (!slot) slot = std::make_unique<Fft>(n);
    return *slot;
}

} // namespace qlnls
