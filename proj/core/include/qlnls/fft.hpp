#ifndef QLNLS_FFT_HPP
#define QLNLS_FFT_HPP

#include "qlnls/grid.hpp"

namespace qlnls {

/// One-dimensional complex transform plans for a fixed size. Plans are
/// immutable after construction and safe to execute concurrently on distinct
/// arrays. forward() carries the 1/N factor, inverse() is unnormalized, so
/// inverse(forward(u)) == u. Arrays must be 64-byte aligned (cvector is).
class Fft {
  public:
    explicit Fft(int n);
    ~Fft();
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    void forward(const complexd* in, complexd* out) const;
    void inverse(const complexd* in, complexd* out) const;
    int size() const { return n_; }

    // Shared per-size plan registry; planning is serialized internally.
    static const Fft& plan_for(int n);

  private:
    int n_;
    void* fwd_ = nullptr; // fftw_plan
    void* bwd_ = nullptr;
    cvector planning_in_, planning_out_; // keep alignment reference alive
};

} // namespace qlnls

#endif
